use std::fmt::Write as _;

use me2c::coloring::Certificate;
use me2c::graph::Graph;
use me2c::normalize::{NormalizeStats, Strategy};

/// Summary of one solve run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunReport {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub strategy: Strategy,
    pub achieved: usize,
    pub bound: usize,
    pub bound_kind: String,
    /// `bound / achieved` in lowest terms.
    pub ratio: (u64, u64),
    /// `None` when timing is suppressed.
    pub wall_ms: Option<u128>,
    pub counts: [usize; 5],
    pub d2: Option<(usize, usize)>,
    pub certified: bool,
}

impl RunReport {
    pub fn from_certificate(
        instance: &str,
        g: &Graph,
        cert: &Certificate,
        stats: &NormalizeStats,
        wall_ms: Option<u128>,
    ) -> Self {
        let r = cert.ratio();
        RunReport {
            instance: instance.to_string(),
            n: g.vertex_count(),
            m: g.edge_count(),
            strategy: cert.strategy,
            achieved: cert.achieved,
            bound: cert.bound.total,
            bound_kind: cert.bound.kind().to_string(),
            ratio: (*r.numer(), *r.denom()),
            wall_ms,
            counts: stats.counts,
            d2: (cert.strategy == Strategy::PerfectMatching)
                .then_some((stats.d2_plus, stats.d2_minus)),
            certified: true,
        }
    }

    /// Report for a run whose certificate check failed.
    pub fn failed(
        instance: &str,
        g: &Graph,
        strategy: Strategy,
        achieved: usize,
        bound: usize,
        stats: &NormalizeStats,
        wall_ms: Option<u128>,
    ) -> Self {
        let ratio = num_rational::Ratio::new(bound.max(1) as u64, achieved.max(1) as u64);
        RunReport {
            instance: instance.to_string(),
            n: g.vertex_count(),
            m: g.edge_count(),
            strategy,
            achieved,
            bound,
            bound_kind: "unknown".into(),
            ratio: (*ratio.numer(), *ratio.denom()),
            wall_ms,
            counts: stats.counts,
            d2: (strategy == Strategy::PerfectMatching).then_some((stats.d2_plus, stats.d2_minus)),
            certified: false,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| writeln!(out, "{k} {v}").unwrap();
        kv("instance", self.instance.clone());
        kv("n", self.n.to_string());
        kv("m", self.m.to_string());
        kv("strategy", self.strategy.name().into());
        kv("achieved", self.achieved.to_string());
        kv("bound", self.bound.to_string());
        kv("bound_kind", self.bound_kind.clone());
        kv("ratio", format!("{}/{}", self.ratio.0, self.ratio.1));
        if let Some(ms) = self.wall_ms {
            kv("wall_ms", ms.to_string());
        }
        let counts: Vec<String> = self.counts.iter().map(usize::to_string).collect();
        kv("modifications", counts.join(","));
        if let Some((plus, minus)) = self.d2 {
            kv("d2_plus", plus.to_string());
            kv("d2_minus", minus.to_string());
        }
        kv("certified", self.certified.to_string());
        out
    }
}
