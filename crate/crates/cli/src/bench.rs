//! Corpus benchmark: one CSV row per `*.g` file, in file-name order.

use std::fs;
use std::path::{Path, PathBuf};

use num_rational::Ratio;
use rayon::prelude::*;

use me2c::normalize::Strategy;
use me2c::oracle::exact_opt;

use crate::{read_graph, run_solve, CliError};

pub const SCHEMA: &str = "# me2c bench v1";

pub const COLUMNS: [&str; 19] = [
    "instance", "n", "m", "strategy", "status", "achieved", "bound", "bound_kind", "ratio", "opt",
    "true_ratio", "wall_ms", "mod1", "mod2", "mod3", "mod4", "mod5", "d2_plus", "d2_minus",
];

pub struct BenchOutput {
    pub text: String,
    /// Rows where the oracle contradicts `achieved <= opt <= bound`.
    pub violations: usize,
}

fn corpus(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let entries = fs::read_dir(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "g"))
        .collect();
    files.sort();
    Ok(files)
}

fn fraction(r: Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn row(path: &Path, strategy: Strategy, oracle_budget: usize, timing: bool) -> (Vec<String>, bool) {
    let name = crate::instance_name(path);
    let mut cells = vec![String::new(); COLUMNS.len()];
    cells[0] = name.clone();
    cells[3] = strategy.name().into();
    let g = match read_graph(path) {
        Ok(g) => g,
        Err(_) => {
            cells[4] = "parse".into();
            return (cells, false);
        }
    };
    cells[1] = g.vertex_count().to_string();
    cells[2] = g.edge_count().to_string();
    let (result, report) = run_solve(&name, &g, strategy, timing);
    cells[4] = match &result {
        Ok(_) => "ok",
        Err(CliError::Precondition(_)) => "precondition",
        Err(_) => "certification",
    }
    .into();
    let Some(report) = report else {
        return (cells, false);
    };
    cells[5] = report.achieved.to_string();
    cells[6] = report.bound.to_string();
    cells[7] = report.bound_kind.clone();
    cells[8] = format!("{}/{}", report.ratio.0, report.ratio.1);
    cells[11] = report.wall_ms.map(|t| t.to_string()).unwrap_or_default();
    for (i, c) in report.counts.iter().enumerate() {
        cells[12 + i] = c.to_string();
    }
    if let Some((plus, minus)) = report.d2 {
        cells[17] = plus.to_string();
        cells[18] = minus.to_string();
    }
    let mut violation = false;
    if oracle_budget > 0 && g.edge_count() <= oracle_budget {
        if let Ok((_, opt)) = exact_opt(&g, oracle_budget) {
            cells[9] = opt.to_string();
            cells[10] = match report.achieved {
                0 => "1/1".into(),
                a => fraction(Ratio::new(opt as u64, a as u64)),
            };
            violation = !(report.achieved <= opt && opt <= report.bound);
            if violation {
                cells[4] = "violation".into();
            }
        }
    }
    (cells, violation)
}

pub fn run(
    dir: &Path,
    strategy: Strategy,
    oracle_budget: usize,
    timing: bool,
) -> Result<BenchOutput, CliError> {
    if oracle_budget > me2c::oracle::MAX_EDGE_BUDGET {
        return Err(CliError::Usage(format!(
            "oracle budget {oracle_budget} is above the hard limit {}",
            me2c::oracle::MAX_EDGE_BUDGET
        )));
    }
    let files = corpus(dir)?;
    let rows: Vec<(Vec<String>, bool)> = files
        .par_iter()
        .map(|p| row(p, strategy, oracle_budget, timing))
        .collect();

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(COLUMNS).expect("in-memory write");
    for (cells, _) in &rows {
        writer.write_record(cells).expect("in-memory write");
    }
    let body = String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8");
    Ok(BenchOutput {
        text: format!("{SCHEMA}\n{body}"),
        violations: rows.iter().filter(|r| r.1).count(),
    })
}
