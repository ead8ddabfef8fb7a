//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. All comparisons are exact (integers or rationals).

mod common;

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use num_rational::Ratio;

use common::{clawfree_corpus, gnp, pm_corpus, small_corpus, subcubic_corpus, with_pendants, Named};
use me2c::coloring::{color_components, solve_detailed};
use me2c::graph::{
    components, gen_cactus_chain, gen_clawfree_random, gen_complete, gen_cycle, gen_petersen,
    gen_pm_random, gen_subcubic_random, is_subcubic, serialize_graph, Graph,
};
use me2c::matching::{is_perfect, maximum_matching, Matching};
use me2c::normalize::{
    apply_mod1, apply_mod2, apply_mod3, apply_mod3_pm, apply_mod4, apply_mod5, find_simple_cactus,
    is_normalized, normalize, Strategy,
};
use me2c::oracle::{exact_matching_bruteforce, exact_opt, MAX_EDGE_BUDGET};
use me2c::{basic_algorithm, check_feasible, extract_character_graph, lift_coloring, make_cycle_free};

const SUBCUBIC_LIMIT: (u64, u64) = (3, 2);
const CLAWFREE_LIMIT: (u64, u64) = (3, 2);
const PM_LIMIT: (u64, u64) = (13, 8);

type Outcome = Result<String, String>;

#[derive(Default)]
struct Oracle {
    memo: HashMap<String, usize>,
}

impl Oracle {
    fn opt(&mut self, g: &Graph) -> usize {
        let key = serialize_graph(g);
        if let Some(&k) = self.memo.get(&key) {
            return k;
        }
        let (chi, k) = exact_opt(g, MAX_EDGE_BUDGET).expect("within budget");
        assert!(check_feasible(g, &chi).is_ok());
        self.memo.insert(key, k);
        k
    }
}

fn ratio(limit: (u64, u64)) -> Ratio<u64> {
    Ratio::new(limit.0, limit.1)
}

fn fraction(r: Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn has_perfect_matching(g: &Graph) -> bool {
    is_perfect(&maximum_matching(g), g)
}

fn strategies_for(g: &Graph) -> Vec<Strategy> {
    let mut out = vec![Strategy::General, Strategy::ClawFree];
    if is_subcubic(g) {
        out.push(Strategy::Subcubic);
    }
    if has_perfect_matching(g) {
        out.push(Strategy::PerfectMatching);
    }
    out
}

fn failures(list: &[String]) -> String {
    let shown: Vec<&str> = list.iter().take(5).map(String::as_str).collect();
    format!("{} violations, first: {}", list.len(), shown.join("; "))
}

/// Criteria 1 and 2 share one pass over the corpus.
fn equivalence_and_lifting(oracle: &mut Oracle) -> (Outcome, Outcome) {
    let corpus = small_corpus(520, 12);
    let mut kinds = [0usize; 5];
    let mut bad_eq = Vec::new();
    let mut bad_lift = Vec::new();
    let mut runs = 0;
    let mut checked_steps = 0;

    for Named { name, graph: g } in &corpus {
        let base = oracle.opt(g);
        let mut single = |tag: &str, h: Option<Graph>, kind: usize, oracle: &mut Oracle| {
            if let Some(h) = h {
                kinds[kind - 1] += 1;
                checked_steps += 1;
                let after = oracle.opt(&h);
                if after != base {
                    bad_eq.push(format!("{name} single {tag}: {base} -> {after}"));
                }
            }
        };
        single("mod1", apply_mod1(g).map(|x| x.0), 1, oracle);
        single("mod2", apply_mod2(g).map(|x| x.0), 2, oracle);
        if let Some(c) = find_simple_cactus(g) {
            single("mod3", Some(apply_mod3(g, &c).unwrap().0), 3, oracle);
            let m = maximum_matching(g);
            if is_perfect(&m, g) {
                single("mod3pm", Some(apply_mod3_pm(g, &c, &m).unwrap().0), 3, oracle);
            }
        }
        if is_subcubic(g) && is_normalized(g) {
            single("mod4", apply_mod4(g).unwrap().map(|x| x.0), 4, oracle);
        }
        single("mod5", apply_mod5(g).map(|x| x.0), 5, oracle);

        for strategy in strategies_for(g) {
            runs += 1;
            let (h, log, _) = normalize(g, strategy).unwrap();
            let graphs = log.replay().unwrap();
            for (i, step) in log.steps().enumerate() {
                kinds[step.kind() - 1] += 1;
                checked_steps += 1;
                let (before, after) = (oracle.opt(&graphs[i]), oracle.opt(&graphs[i + 1]));
                if before != after {
                    bad_eq.push(format!("{name} {} step {i} ({step}): {before} -> {after}", strategy.name()));
                }
            }
            let chi_h = color_components(&h);
            match lift_coloring(&log, &chi_h) {
                Ok(chi) if check_feasible(g, &chi).is_ok() && chi.count() >= chi_h.count() => {}
                other => bad_lift.push(format!("{name} {}: {other:?}", strategy.name())),
            }
            let (best, k) = exact_opt(&h, MAX_EDGE_BUDGET).unwrap();
            match lift_coloring(&log, &best) {
                Ok(chi) if check_feasible(g, &chi).is_ok() && chi.count() >= k => {}
                other => bad_lift.push(format!("{name} {} (optimal): {other:?}", strategy.name())),
            }
        }
    }

    let missing: Vec<usize> = (1..=5).filter(|&k| kinds[k - 1] == 0).collect();
    let eq = if !bad_eq.is_empty() {
        Err(failures(&bad_eq))
    } else if !missing.is_empty() {
        Err(format!("modifications never exercised: {missing:?}"))
    } else {
        Ok(format!(
            "{} graphs, {checked_steps} steps, per modification {kinds:?}",
            corpus.len()
        ))
    };
    let lift = if bad_lift.is_empty() {
        Ok(format!("{runs} pipeline runs, each lifted from two colorings"))
    } else {
        Err(failures(&bad_lift))
    };
    (eq, lift)
}

/// Normalized connected graphs with `n ≥ 3` and `m ≤ 13`.
fn normalized_corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    let mut keys = std::collections::HashSet::new();
    let mut add = |g: Graph, out: &mut Vec<Graph>| {
        if g.vertex_count() >= 3
            && g.edge_count() <= 13
            && components(&g).len() == 1
            && is_normalized(&g)
            && keys.insert(serialize_graph(&g))
        {
            out.push(g);
        }
    };
    let k4 = gen_complete(4).unwrap();
    add(with_pendants(&k4, &[0, 1, 2, 3]), &mut out);
    add(with_pendants(&k4, &[0, 1]), &mut out);
    add(gen_complete(5).unwrap(), &mut out);
    for k in 2..=3 {
        let mut chain = gen_cactus_chain(k).unwrap();
        for i in 0..k - 1 {
            chain.add_edge(k + 1 + i, k + 2 + i);
        }
        add(chain, &mut out);
    }
    let mut sources: Vec<Graph> = small_corpus(400, 13).into_iter().map(|n| n.graph).collect();
    sources.extend(subcubic_corpus(150, 13).into_iter().map(|n| n.graph));
    sources.extend((0..400).map(|s| gnp(5 + s as usize % 5, 0.55, 10_000 + s)));
    for g in sources {
        let strategies = if is_subcubic(&g) {
            vec![Strategy::General, Strategy::Subcubic]
        } else {
            vec![Strategy::General]
        };
        for st in strategies {
            let (h, _, _) = normalize(&g, st).unwrap();
            for c in components(&h).components {
                if c.vertex_count() >= 3 {
                    add(h.induced(&c.vertices).0, &mut out);
                }
            }
        }
        add(g, &mut out);
    }
    out
}

fn maxcolors_bound(g: &Graph) -> usize {
    (3 * g.vertex_count() - g.leaf_count()) / 4
}

fn maxcolors_holds(oracle: &mut Oracle, corpus: &[Graph]) -> Outcome {
    let mut bad = Vec::new();
    let mut tight = 0;
    for g in corpus {
        let (k, b) = (oracle.opt(g), maxcolors_bound(g));
        if k > b {
            bad.push(format!("n={} m={} l={}: opt {k} > {b}", g.vertex_count(), g.edge_count(), g.leaf_count()));
        }
        tight += usize::from(k == b);
    }
    if bad.is_empty() {
        Ok(format!("{} normalized graphs, {tight} meet the bound exactly", corpus.len()))
    } else {
        Err(failures(&bad))
    }
}

fn ratio_guarantees(oracle: &mut Oracle) -> Outcome {
    type Class = (&'static str, Strategy, (u64, u64), Vec<Named>);
    let classes: [Class; 3] = [
        ("subcubic", Strategy::Subcubic, SUBCUBIC_LIMIT, subcubic_corpus(200, 13)),
        ("clawfree", Strategy::ClawFree, CLAWFREE_LIMIT, clawfree_corpus(200, 13)),
        ("pm", Strategy::PerfectMatching, PM_LIMIT, pm_corpus(200, 13)),
    ];
    let mut bad = Vec::new();
    let mut summary = Vec::new();
    for (label, strategy, limit, corpus) in classes {
        let limit = ratio(limit);
        let mut worst_true = Ratio::from_integer(1);
        let mut worst_cert = Ratio::from_integer(1);
        for Named { name, graph } in &corpus {
            let s = solve_detailed(graph, strategy).unwrap();
            let achieved = s.certificate.achieved as u64;
            let opt = oracle.opt(graph) as u64;
            let true_ratio = if achieved == 0 { Ratio::from_integer(1) } else { Ratio::new(opt, achieved) };
            worst_true = worst_true.max(true_ratio);
            worst_cert = worst_cert.max(s.certificate.ratio());
            if true_ratio > limit {
                bad.push(format!("{name}: opt/achieved = {}", fraction(true_ratio)));
            }
            if s.certificate.ratio() > limit {
                bad.push(format!("{name}: certified {}", fraction(s.certificate.ratio())));
            }
        }
        // Certified ratios on larger instances, no oracle.
        let large: Vec<Graph> = match strategy {
            Strategy::Subcubic => (0..60).map(|s| gen_subcubic_random(16 + s as usize, s).unwrap()).collect(),
            Strategy::ClawFree => (0..40).map(|s| gen_clawfree_random(6 + s as usize % 3, s).unwrap()).collect(),
            _ => (0..60).map(|s| gen_pm_random(10 + 2 * (s as usize % 10), 0.15, s).unwrap()).collect(),
        };
        for (i, g) in large.iter().enumerate() {
            let r = solve_detailed(g, strategy).unwrap().certificate.ratio();
            worst_cert = worst_cert.max(r);
            if r > limit {
                bad.push(format!("{label} large #{i}: certified {}", fraction(r)));
            }
        }
        summary.push(format!(
            "{label}: {} oracle + {} large, worst opt/achieved {}, worst certified {}",
            corpus.len(),
            large.len(),
            fraction(worst_true),
            fraction(worst_cert)
        ));
    }
    if bad.is_empty() {
        Ok(summary.join("; "))
    } else {
        Err(format!("{} | {}", failures(&bad), summary.join("; ")))
    }
}

fn cactus_chains(oracle: &mut Oracle) -> Outcome {
    let mut notes = Vec::new();
    for k in 1..=6 {
        let g = gen_cactus_chain(k).unwrap();
        let s = solve_detailed(&g, Strategy::General).unwrap();
        let structural = k + (k + 2);
        let expected = if g.edge_count() <= 14 { oracle.opt(&g) } else { structural };
        let all_isolated = (0..s.normalized.vertex_count()).all(|v| s.normalized.degree(v) == 1);
        if !all_isolated || s.normalized.edge_count() != structural {
            return Err(format!("k={k}: normalized graph is not {structural} independent edges"));
        }
        if s.certificate.achieved != expected || s.certificate.ratio() != Ratio::from_integer(1) {
            return Err(format!(
                "k={k}: achieved {} vs {expected}, ratio {}",
                s.certificate.achieved,
                fraction(s.certificate.ratio())
            ));
        }
        notes.push(format!("k={k}:{expected}"));
    }
    Ok(notes.join(" "))
}

fn cycle_baseline(oracle: &mut Oracle) -> Outcome {
    for n in 3..=7 {
        let k = oracle.opt(&gen_cycle(n).unwrap());
        if k != n {
            return Err(format!("opt(C{n}) = {k}"));
        }
    }
    let chi = basic_algorithm(&gen_cycle(5).unwrap());
    if chi.count() != 4 || chi.colors() != [0, 1, 2, 3, 3] {
        return Err(format!("basic algorithm on C5 gave {:?}", chi.colors()));
    }
    Ok("opt(C3..C7) = n; basic algorithm on C5 uses 4 colors [0,1,2,3,3]".into())
}

fn matching_engine() -> Outcome {
    let mut count = 0;
    let mut seed = 0;
    while count < 300 {
        seed += 1;
        let n = 2 + (seed as usize % 9);
        let g = gnp(n, [0.2, 0.35, 0.5, 0.8][seed as usize % 4], 50_000 + seed);
        let fast = maximum_matching(&g);
        let exact = exact_matching_bruteforce(&g).unwrap();
        if !fast.is_valid_for(&g) || fast.len() != exact {
            return Err(format!("n={n} seed={seed}: blossom {} vs exhaustive {exact}", fast.len()));
        }
        count += 1;
    }
    let p = gen_petersen();
    let m = maximum_matching(&p);
    if m.len() != 5 || !is_perfect(&m, &p) {
        return Err("Petersen matching is not perfect".into());
    }
    Ok(format!("{count} graphs with n <= 10 agree; Petersen perfect with 5 edges"))
}

fn character_graphs(corpus: &[Graph]) -> Outcome {
    let mut bad = Vec::new();
    for g in corpus {
        let (chi, k) = exact_opt(g, MAX_EDGE_BUDGET).unwrap();
        let h = extract_character_graph(g, &chi).unwrap();
        let free = match make_cycle_free(g, &chi, &h) {
            Ok(f) => f,
            Err(e) => {
                bad.push(format!("make_cycle_free: {e}"));
                continue;
            }
        };
        let one_per_color = free.len() == k
            && free.edges().iter().enumerate().all(|(c, &e)| chi.color(e) == c);
        let need = (g.vertex_count() + g.leaf_count()).div_ceil(4);
        let comps = free.component_count(g);
        if !one_per_color || !free.is_acyclic(g) || free.max_degree() > 2 || comps < need {
            bad.push(format!(
                "n={} l={}: colors {k}, components {comps} < {need} or structure broken",
                g.vertex_count(),
                g.leaf_count()
            ));
        }
    }
    if bad.is_empty() {
        Ok(format!("{} oracle-optimal colorings", corpus.len()))
    } else {
        Err(failures(&bad))
    }
}

fn pm_accounting() -> Outcome {
    let mut graphs: Vec<Graph> = pm_corpus(200, 13).into_iter().map(|n| n.graph).collect();
    graphs.extend((0..100).map(|s| gen_pm_random(8 + 2 * (s as usize % 12), 0.12, 70_000 + s).unwrap()));
    let limit = ratio(PM_LIMIT);
    let mut bad = Vec::new();
    let mut incomplete = 0;
    let mut events = 0;
    for (i, g) in graphs.iter().enumerate() {
        let s = solve_detailed(g, Strategy::PerfectMatching).unwrap();
        let audit = s.stats.pm.as_ref().unwrap();
        let pm = s.certificate.bound.pm.as_ref().unwrap();
        let achieved = s.certificate.achieved;
        let n = g.vertex_count();
        let leftover = usize::from(g.edge_count() > n / 2);
        // The d2 form of the matching bound is only meaningful once every
        // split event is classified; the surviving pendant matching always is.
        let surviving = audit.introduced_pendants.len();
        let mut lower = (n.div_ceil(2) + leftover).max(surviving);
        if audit.is_complete() {
            lower = lower.max(pm.matching_lower_bound);
        }
        if achieved < lower {
            bad.push(format!("#{i}: achieved {achieved} < {lower}"));
        }
        if s.certificate.ratio() > limit {
            bad.push(format!("#{i}: bound/achieved {}", fraction(s.certificate.ratio())));
        }
        events += audit.events.len();
        if !audit.is_complete() {
            incomplete += 1;
            continue;
        }
        if s.stats.d2_plus + s.stats.d2_minus != audit.events.len()
            || 2 * s.stats.d2_plus + s.stats.d2_minus != surviving
            || Matching::from_edges(&s.normalized, audit.introduced_pendants.iter().copied()).is_none()
        {
            bad.push(format!(
                "#{i}: d2+={} d2-={} events={} surviving={}",
                s.stats.d2_plus,
                s.stats.d2_minus,
                audit.events.len(),
                surviving
            ));
        }
    }
    if bad.is_empty() {
        Ok(format!(
            "{} instances, {events} split events, {incomplete} with unclassified events",
            graphs.len()
        ))
    } else {
        Err(failures(&bad))
    }
}

fn main() -> ExitCode {
    let mut oracle = Oracle::default();
    let mut results: Vec<(usize, &str, Outcome, f64)> = Vec::new();
    let timed = |f: &mut dyn FnMut(&mut Oracle) -> Outcome, oracle: &mut Oracle| {
        let t = Instant::now();
        let r = f(oracle);
        (r, t.elapsed().as_secs_f64())
    };

    let t = Instant::now();
    let (eq, lift) = equivalence_and_lifting(&mut oracle);
    let secs = t.elapsed().as_secs_f64();
    results.push((1, "modification equivalence", eq, secs));
    results.push((2, "lifting correctness", lift, secs));

    let normalized = normalized_corpus();
    let (r, s) = timed(&mut |o| maxcolors_holds(o, &normalized), &mut oracle);
    results.push((3, "maxcolors bound", r, s));
    let (r, s) = timed(&mut ratio_guarantees, &mut oracle);
    results.push((4, "ratio guarantees", r, s));
    let (r, s) = timed(&mut cactus_chains, &mut oracle);
    results.push((5, "cactus chains optimal", r, s));
    let (r, s) = timed(&mut cycle_baseline, &mut oracle);
    results.push((6, "cycle baseline", r, s));
    let (r, s) = timed(&mut |_| matching_engine(), &mut oracle);
    results.push((7, "matching engine", r, s));
    let (r, s) = timed(&mut |_| character_graphs(&normalized), &mut oracle);
    results.push((8, "character graphs", r, s));
    let (r, s) = timed(&mut |_| pm_accounting(), &mut oracle);
    results.push((9, "perfect-matching accounting", r, s));

    let mut ok = true;
    for (id, name, outcome, secs) in &results {
        match outcome {
            Ok(detail) => println!("criterion {id} ({name}): PASS [{secs:.1}s] {detail}"),
            Err(detail) => {
                ok = false;
                println!("criterion {id} ({name}): FAIL [{secs:.1}s] {detail}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
