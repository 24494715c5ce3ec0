//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any of them fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use conndim::sat::SatStatus;
use conndim::{
    block_count, build_reduction, cdim_decompose, cdim_exact, decide_sat, enumerate_bases, forces_one_representation,
    is_resolving, kappa_matrix, local_connectivity, mdim_exact, parse_dimacs, predicted_kappa, representation,
    standard_graph, threshold_cdim, threshold_cdim_any, threshold_graph, triangle_chain, triangle_chain_cdim,
    twin_classes, uniform_connectivity, Graph, KappaValue, ThresholdSequence, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::*;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const FIGURE7: &str = "p cnf 3 2\n1 2 -3 0\n-1 2 -3 0\n";

fn kv(k: u32) -> KappaValue {
    KappaValue::Finite(k)
}

fn figure1() -> Outcome {
    let g = standard_graph("figure1", 8).unwrap();
    let exact = cdim_exact(&g).unwrap();
    ensure!(exact.conclusive && exact.value == 2, "cdim(figure1) = {} (conclusive: {})", exact.value, exact.conclusive);

    let km = kappa_matrix(&g);
    let inf = KappaValue::Infinity;
    let expected = [
        [kv(1), kv(1)],
        [kv(3), kv(1)],
        [inf, kv(1)],
        [kv(2), kv(1)],
        [kv(4), kv(1)],
        [kv(3), kv(2)],
        [kv(1), kv(2)],
        [kv(1), inf],
    ];
    for (v, want) in expected.iter().enumerate() {
        let got = representation(&km, v, &[2, 7]).unwrap().values;
        ensure!(got == want, "r(v{}, {{v3, v8}}) = {got:?}, expected {want:?}", v + 1);
    }
    ensure!(is_resolving(&km, &[2, 7]).unwrap() == Verdict::Resolving, "{{v3, v8}} does not resolve");

    let verdict = is_resolving(&km, &[0, 3, 7]).unwrap();
    ensure!(verdict == Verdict::Unresolved(1, 2), "{{v1, v4, v8}} gives {verdict:?}, expected witness (v2, v3)");
    let (r2, r3) = (representation(&km, 1, &[0, 3, 7]).unwrap(), representation(&km, 2, &[0, 3, 7]).unwrap());
    ensure!(r2.values == [kv(1), kv(2), kv(1)] && r2.values == r3.values, "r(v2, X) = {:?}", r2.values);

    let bases = enumerate_bases(&g).unwrap();
    let named = vec![vec![2, 6], vec![2, 7], vec![4, 6], vec![4, 7]];
    ensure!(bases == named, "bases {bases:?}, expected {named:?}");
    let (k, mut oracle) = bases_oracle(&oracle_table(&g));
    oracle.sort();
    ensure!(k == 2 && oracle == named, "subset oracle finds {oracle:?} of size {k}");
    Ok(format!("{} bases", bases.len()))
}

fn check_small_graph(g: &Graph) -> Result<(), String> {
    let n = g.order();
    let table = oracle_table(g);
    let km = kappa_matrix(g);
    ensure!(table_of(&km) == table, "max-flow κ differs from the path oracle on {:?}", g.edges());

    let k = dim_oracle(&table);
    let exact = cdim_exact(g).unwrap();
    ensure!(exact.conclusive && exact.value == k, "cdim_exact {} vs oracle {k} on {:?}", exact.value, g.edges());

    let delta = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    if n >= 2 {
        ensure!((k == 1) == (n == 2), "cdim = 1 iff K2 fails on {:?}", g.edges());
        let first = table[0][1];
        let uniform = (0..n).all(|u| (0..n).all(|v| u == v || table[u][v] == first));
        ensure!((k == n - 1) == uniform, "cdim = n-1 iff uniform fails on {:?}", g.edges());
        ensure!(uniform == uniform_connectivity(&km).is_some(), "uniform_connectivity disagrees on {:?}", g.edges());

        let power = (delta as u64).pow(k as u32);
        if delta >= 2 {
            ensure!(2 * power > n as u64, "log bound fails on {:?}", g.edges());
        }
        ensure!(n as u64 <= k as u64 + power, "n <= cdim + Δ^cdim fails on {:?}", g.edges());

        let blocks = blocks_oracle(g);
        ensure!(block_count(g).unwrap() == blocks, "block count differs on {:?}", g.edges());
        ensure!(2 * k > blocks, "blocks bound fails on {:?}", g.edges());
    }

    let twins = twin_pairs_oracle(g);
    ensure!(twin_classes(g).twin_pairs == twins, "twin pairs differ on {:?}", g.edges());
    for &(u, v) in &twins {
        ensure!(
            (0..n).all(|w| w == u || w == v || table[u][w] == table[v][w]),
            "twins {u}, {v} distinguished on {:?}",
            g.edges()
        );
    }
    Ok(())
}

fn exhaustive_small_graphs() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        let graphs: Vec<Graph> = labelled_graphs(n).filter(connected_by_search).collect();
        if let Some(err) = graphs.par_iter().find_map_any(|g| check_small_graph(g).err()) {
            return Err(err);
        }
        checked += graphs.len();
    }
    ensure!(checked == 1 + 1 + 4 + 38 + 728 + 26704, "enumerated {checked} connected labelled graphs");
    Ok(format!("{checked} connected labelled graphs"))
}

fn threshold_formula() -> Outcome {
    let mut count = 0;
    for len in 1..=9usize {
        for mask in 0u32..1 << len {
            let seq = ThresholdSequence::new((0..len).map(|i| mask >> i & 1 == 1)).unwrap();
            let g = threshold_graph(&seq);
            let formula = threshold_cdim_any(&seq);
            let exact = cdim_exact(&g).unwrap();
            ensure!(exact.conclusive && exact.value == formula, "{seq}: formula {formula}, exact {}", exact.value);
            if *seq.bits().last().unwrap() {
                ensure!(threshold_cdim(&seq).unwrap() == formula, "{seq}: threshold_cdim disagrees");
            }
            let oracle = dim_oracle(&table_of(&kappa_matrix(&g)));
            ensure!(oracle == formula, "{seq}: formula {formula}, subset oracle {oracle}");
            count += 1;
        }
    }

    let house = standard_graph("house", 5).unwrap();
    ensure!(house.size() == 8, "house has {} edges", house.size());
    let exact = cdim_exact(&house).unwrap();
    ensure!(exact.value == 2, "cdim(house) = {}", exact.value);
    let km = kappa_matrix(&house);
    let basis = [3, 0];
    ensure!(is_resolving(&km, &basis).unwrap().is_resolving(), "{{3, 0}} does not resolve the house");
    for (v, want) in [(2, [kv(2), kv(2)]), (4, [kv(4), kv(3)]), (1, [kv(3), kv(3)])] {
        let got = representation(&km, v, &basis).unwrap().values;
        ensure!(got == want, "house vertex {v}: {got:?}, expected {want:?}");
    }
    Ok(format!("{count} sequences"))
}

fn bridge_joins() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut with_extra = 0;
    for trial in 0..200 {
        let (n1, n2) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let (p1, p2) = (rng.gen_range(0.1..0.9), rng.gen_range(0.1..0.9));
        let g1 = random_connected(&mut rng, n1, p1);
        let g2 = random_connected(&mut rng, n2, p2);
        let (a, b) = (rng.gen_range(0..n1), rng.gen_range(0..n2));
        let mut edges = g1.disjoint_union(&g2).edges().to_vec();
        edges.push((a, n1 + b));
        let g = Graph::from_edges(n1 + n2, edges).unwrap();

        let exact = cdim_exact(&g).unwrap();
        let decomposed = cdim_decompose(&g).unwrap();
        ensure!(
            exact.conclusive && decomposed.conclusive && decomposed.verified && exact.value == decomposed.value,
            "trial {trial}: decompose {} vs exact {} on {:?}",
            decomposed.value,
            exact.value,
            g.edges()
        );
        let oracle = dim_oracle(&table_of(&kappa_matrix(&g)));
        ensure!(oracle == exact.value, "trial {trial}: exact {} vs subset oracle {oracle}", exact.value);

        let (t1, t2) = (oracle_table(&g1), oracle_table(&g2));
        let (f1, f2) = (forces_ones_oracle(&t1), forces_ones_oracle(&t2));
        ensure!(
            forces_one_representation(&g1).unwrap() == f1 && forces_one_representation(&g2).unwrap() == f2,
            "trial {trial}: forcing status differs from the oracle"
        );
        let sum = dim_oracle(&t1) + dim_oracle(&t2);
        let extra = exact.value - sum.min(exact.value);
        ensure!(
            exact.value == sum + usize::from(f1 && f2),
            "trial {trial}: cdim {} = {sum} + {extra}, parts force ({f1}, {f2}) on {:?}",
            exact.value,
            g.edges()
        );
        with_extra += usize::from(f1 && f2);
    }
    let fig5 = standard_graph("figure5", 9).unwrap();
    let (exact, decomposed) = (cdim_exact(&fig5).unwrap(), cdim_decompose(&fig5).unwrap());
    ensure!(
        exact.value == 7 && decomposed.value == 7,
        "figure5: exact {}, decompose {}",
        exact.value,
        decomposed.value
    );
    Ok(format!("200 joins, {with_extra} with both parts forcing"))
}

fn triangle_chains() -> Outcome {
    for b in 2..=8 {
        let g = triangle_chain(b).unwrap();
        let exact = cdim_exact(&g).unwrap();
        let formula = triangle_chain_cdim(b).unwrap();
        ensure!(exact.conclusive && exact.value == formula, "b = {b}: formula {formula}, exact {}", exact.value);
        let blocks = blocks_oracle(&g);
        ensure!(block_count(&g).unwrap() == b && blocks == b, "b = {b}: {blocks} blocks");
        let oracle = dim_oracle(&table_of(&kappa_matrix(&g)));
        ensure!(oracle == formula, "b = {b}: subset oracle {oracle}");
    }
    let g = triangle_chain(6).unwrap();
    ensure!(cdim_exact(&g).unwrap().value == 4 && block_count(&g).unwrap() == 6, "b = 6 is not (4, 6 blocks)");
    Ok("b = 2..8".into())
}

fn metric_comparison() -> Outcome {
    let path = standard_graph("path", 10).unwrap();
    let (md, cd) = (mdim_exact(&path).unwrap(), cdim_exact(&path).unwrap());
    ensure!(md.value == 1 && cd.value == 9, "P10: mdim {}, cdim {}", md.value, cd.value);
    ensure!(dim_oracle(&distance_table(&path)) == 1, "P10: metric oracle disagrees");

    let alt = threshold_graph(&ThresholdSequence::alternating(12).unwrap());
    ensure!(alt.order() == 12, "alternating graph has {} vertices", alt.order());
    let (md, cd) = (mdim_exact(&alt).unwrap(), cdim_exact(&alt).unwrap());
    ensure!(cd.conclusive && cd.value == 2, "alternating: cdim {}", cd.value);
    ensure!(md.conclusive && md.value >= 4, "alternating: mdim {}", md.value);
    let needed = (1..).find(|&m: &usize| m + (1usize << m) >= 12).unwrap();
    ensure!(needed == 4, "m + 2^m >= 12 first holds at m = {needed}");
    let distances = distance_table(&alt);
    ensure!(no_resolving_set_of_size(&distances, 3), "a metric resolving set of size 3 exists");
    Ok(format!("alternating mdim = {}", md.value))
}

fn reduction_predictions() -> Outcome {
    let f = parse_dimacs(FIGURE7).unwrap();
    let (g, map) = build_reduction(&f).unwrap();
    let km = kappa_matrix(&g);
    let mut checked = 0;
    let mut wrong = Vec::new();
    for v in 0..g.order() {
        for w in v + 1..g.order() {
            let (p, q) = (map.label(v).unwrap(), map.label(w).unwrap());
            let predicted = predicted_kappa(&map, p, q).unwrap();
            checked += 1;
            if !predicted.admits(km.get(v, w)) {
                let name = |l| serde_json::to_string(&l).unwrap();
                wrong.push(format!("κ({}, {}) = {} but predicted {predicted:?}", name(p), name(q), km.get(v, w)));
            }
        }
    }
    for line in &wrong {
        eprintln!("  7a: {line}");
    }
    ensure!(
        wrong.is_empty(),
        "{} of {checked} pairs mismatch, e.g. {}",
        wrong.len(),
        wrong[..wrong.len().min(3)].join("; ")
    );
    Ok(format!("{checked} pairs"))
}

fn reduction_single_clause() -> Outcome {
    let f = parse_dimacs("p cnf 3 1\n1 2 -3 0\n").unwrap();
    let (g, _) = build_reduction(&f).unwrap();
    let exact = cdim_exact(&g).unwrap();
    ensure!(exact.conclusive && exact.value == 8, "cdim(G(S)) = {} (conclusive: {})", exact.value, exact.conclusive);
    let table = table_of(&kappa_matrix(&g));
    ensure!(resolves(&table, &exact.basis), "returned basis does not resolve");
    ensure!(no_resolving_set_of_size(&table, 7), "a resolving set of size 7 exists");
    Ok(format!("{} nodes", exact.nodes))
}

fn sat_instances() -> Vec<conndim::CnfFormula> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut out: Vec<_> = (0..100)
        .map(|_| {
            let n = rng.gen_range(3..=4);
            let m = rng.gen_range(if n == 4 { 2 } else { 1 }..=5);
            random_cnf(&mut rng, n, m)
        })
        .collect();
    out.push(all_sign_patterns());
    out.push(parse_dimacs(FIGURE7).unwrap());
    out
}

fn reduction_decides() -> Outcome {
    let instances = sat_instances();
    let mut wrong = Vec::new();
    for f in &instances {
        let truth = sat_oracle(f);
        let verdict = decide_sat(f).unwrap().is_sat();
        if truth != verdict {
            wrong.push(format!("[{}] truth {truth}, decide_sat {verdict}", f.to_dimacs().replace('\n', " ").trim()));
        }
    }
    let canonical = all_sign_patterns();
    ensure!(!sat_oracle(&canonical), "the eight-clause instance is satisfiable");
    ensure!(wrong.is_empty(), "{} of {} instances disagree, e.g. {}", wrong.len(), instances.len(), wrong[0]);
    Ok(format!("{} instances", instances.len()))
}

fn reduction_certificates() -> Outcome {
    let mut sat = 0;
    for f in &sat_instances() {
        let outcome = decide_sat(f).unwrap();
        if let SatStatus::Sat { assignment, basis } = &outcome.status {
            ensure!(evaluates_true(f, assignment), "assignment {assignment:?} falsifies {}", f.to_dimacs());
            let (g, _) = build_reduction(f).unwrap();
            let km = kappa_matrix(&g);
            ensure!(
                basis.len() == 2 * (f.num_vars() + f.num_clauses())
                    && is_resolving(&km, basis).unwrap().is_resolving()
                    && resolves(&table_of(&km), basis),
                "basis {basis:?} is not a resolving set of size 2(m + n)"
            );
            sat += 1;
        }
    }
    ensure!(sat > 0, "no SAT verdicts to check");
    Ok(format!("{sat} SAT verdicts"))
}

fn kappa_oracle_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut pairs = 0;
    while pairs < 12_000 {
        let n = rng.gen_range(2..=7);
        let p = rng.gen_range(0.0..1.0);
        let g = random_connected(&mut rng, n, p);
        let km = kappa_matrix(&g);
        for u in 0..n {
            for v in u + 1..n {
                let oracle = kappa_oracle(&g, u, v);
                let flow = local_connectivity(&g, u, v).unwrap();
                ensure!(
                    flow == kv(oracle) && km.get(u, v) == flow,
                    "κ({u}, {v}) = {flow} but oracle {oracle} on {:?}",
                    g.edges()
                );
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: "1", name: "figure 1 reproduction", limit: secs(1), run: figure1 },
        Criterion { id: "2", name: "exhaustive theorems, n <= 6", limit: secs(600), run: exhaustive_small_graphs },
        Criterion { id: "3", name: "threshold formula", limit: secs(120), run: threshold_formula },
        Criterion { id: "4", name: "bridge composition", limit: secs(300), run: bridge_joins },
        Criterion { id: "5", name: "triangle chains", limit: secs(120), run: triangle_chains },
        Criterion { id: "6", name: "metric comparison", limit: secs(60), run: metric_comparison },
        Criterion { id: "7a", name: "gadget κ predictions", limit: secs(600), run: reduction_predictions },
        Criterion { id: "7b", name: "single-clause dimension", limit: secs(600), run: reduction_single_clause },
        Criterion { id: "7c", name: "decide_sat vs truth table", limit: secs(600), run: reduction_decides },
        Criterion { id: "7d", name: "SAT certificates", limit: secs(600), run: reduction_certificates },
        Criterion { id: "8", name: "κ vs path oracle", limit: secs(300), run: kappa_oracle_agreement },
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > c.limit => Err(format!("took {elapsed:.2?}, limit {:?}", c.limit)),
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS {:>3}  {} ({detail}; {elapsed:.2?})", c.id, c.name),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>3}  {} ({elapsed:.2?}): {reason}", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
