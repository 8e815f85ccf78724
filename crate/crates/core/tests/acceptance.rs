//! Acceptance criteria 1-7. Runs with its own harness and prints one
//! `PASS`/`FAIL` line per criterion; exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use p2ptopo::correlation::{assortativity, knn_by_degree, Assortativity, ZERO_VARIANCE};
use p2ptopo::kcore::{core_numbers, core_periphery_split, k_core_subgraph};
use p2ptopo::netgen::{generate, measure, SyntheticConfig, CALIBRATED_BIAS};
use p2ptopo::render::{knn_plot, matrix_plot, scatter_ksn_plot, MatrixPlotSpec, DEFAULT_REFERENCE_X};
use p2ptopo::report::{analysis_report, AnalysisParams};
use p2ptopo::superpeer::{removal_robustness, superpeer_degree_profile, top_degree_nodes};
use p2ptopo::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{brute_core_numbers, directed_neighbor_degree_sum, pearson_assortativity, random_graph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn random_small_graph(rng: &mut StdRng) -> Graph {
    let n = rng.random_range(1..=50);
    let p = rng.random_range(0.05..=0.5);
    random_graph(rng, n, p)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x6b63);
    let trials = 250;
    for t in 0..trials {
        let g = random_small_graph(&mut rng);
        let fast = core_numbers(&g);
        let oracle = brute_core_numbers(&g);
        if fast.core_number != oracle {
            return Err(format!("trial {t}: core numbers differ from the deletion oracle"));
        }
        let k_max = oracle.iter().copied().max().unwrap_or(0);
        if fast.k_max != k_max {
            return Err(format!("trial {t}: k_max {} vs {k_max}", fast.k_max));
        }
        for k in 0..=k_max + 1 {
            let expected: Vec<usize> = (0..g.node_count()).filter(|&v| oracle[v] >= k).collect();
            if fast.k_core_members(k) != expected {
                return Err(format!("trial {t}: {k}-core membership differs"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(10) {
        return Err(format!("{trials} graphs took {elapsed:.2?}"));
    }
    Ok(format!("{trials} random graphs match the deletion oracle at every k in {elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xa55);
    let (mut compared, mut undefined, mut worst) = (0, 0, 0.0f64);
    let mut attempts = 0;
    while compared < 250 {
        attempts += 1;
        if attempts > 5000 {
            return Err("could not draw enough non-degenerate graphs".into());
        }
        let g = random_small_graph(&mut rng);
        match (assortativity(&g), pearson_assortativity(&g)) {
            (Assortativity::Defined(r), Some(oracle)) => {
                let diff = (r - oracle).abs();
                if diff > 1e-9 {
                    return Err(format!("attempt {attempts}: r = {r}, oracle = {oracle}"));
                }
                worst = worst.max(diff);
                compared += 1;
            }
            (Assortativity::Undefined { .. }, None) => undefined += 1,
            (got, oracle) => return Err(format!("attempt {attempts}: {got:?} vs oracle {oracle:?}")),
        }
    }

    // Regular graphs: every endpoint has the same degree.
    let cycle = Graph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
    let complete = Graph::from_edges(6, (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v)))).unwrap();
    let matching = Graph::from_edges(8, [(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
    for (name, g) in [("cycle", cycle), ("complete", complete), ("matching", matching)] {
        match assortativity(&g) {
            Assortativity::Undefined { reason } if reason == ZERO_VARIANCE => undefined += 1,
            other => return Err(format!("{name}: expected the zero-variance marker, got {other:?}")),
        }
    }
    Ok(format!(
        "{compared} graphs within {worst:.1e} of direct Pearson; {undefined} degenerate graphs marked undefined"
    ))
}

fn conservation_holds(g: &Graph) -> Result<(), String> {
    let table = knn_by_degree(g);
    let from_rows: u64 = table.rows.iter().map(|r| r.neighbor_degree_sum).sum();
    let direct = directed_neighbor_degree_sum(g);
    if from_rows != direct {
        return Err(format!("row sums {from_rows} vs direct {direct}"));
    }
    let squares: u64 = g.degrees().iter().map(|&d| (d * d) as u64).sum();
    if direct != squares {
        return Err(format!("direct sum {direct} vs sum of squared degrees {squares}"));
    }
    for r in &table.rows {
        if r.knn != r.neighbor_degree_sum as f64 / (r.n_k * r.k) as f64 {
            return Err(format!("row k={} is not S/(n_k k)", r.k));
        }
        let nk = g.degrees().iter().filter(|&&d| d == r.k).count();
        if nk != r.n_k {
            return Err(format!("row k={} n_k {} vs {nk}", r.k, r.n_k));
        }
    }
    let float_total: f64 = table.rows.iter().map(|r| r.n_k as f64 * r.k as f64 * r.knn).sum();
    if (float_total - direct as f64).abs() > 1e-9 * (direct as f64).max(1.0) {
        return Err(format!("sum n_k k knn_k = {float_total} vs {direct}"));
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x3);
    let mut graphs: Vec<Graph> = (0..250).map(|_| random_small_graph(&mut rng)).collect();
    graphs.push(Graph::from_edges(6, (1..6).map(|i| (0, i))).unwrap());
    graphs.push(Graph::empty(4));
    for seed in 0..3 {
        graphs.push(generate(&SyntheticConfig::calibrated(seed)).unwrap().graph);
    }
    for (i, g) in graphs.iter().enumerate() {
        conservation_holds(g).map_err(|e| format!("graph {i}: {e}"))?;
    }
    Ok(format!("{} graphs (random, star, empty, calibrated synthetic) conserve exactly", graphs.len()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut hits = [0usize; 5];
    let mut lines = Vec::new();
    for seed in 0..10 {
        let m = measure(&generate(&SyntheticConfig::calibrated(seed)).unwrap());
        let r = m.assortativity.unwrap_or(f64::NAN);
        let decay = m.knn_decay.as_ref();
        let ok = [
            (-0.40..=-0.15).contains(&r),
            m.coverage_fraction >= 0.70,
            (50..=600).contains(&m.k_max_core_size),
            decay.is_some_and(|d| d.rho < 0.0 && d.p_value < 0.05),
            m.modal_band_fraction >= 0.30,
        ];
        for (h, o) in hits.iter_mut().zip(ok) {
            *h += o as usize;
        }
        lines.push(format!(
            "seed {seed}: r={r:.3} cover={:.3} core={}@{} rho={:.3} band={:.3}",
            m.coverage_fraction,
            m.k_max_core_size,
            m.k_max,
            decay.map_or(f64::NAN, |d| d.rho),
            m.modal_band_fraction
        ));
    }
    let elapsed = start.elapsed();
    for l in &lines {
        println!("    {l}");
    }
    let summary = format!(
        "bias {CALIBRATED_BIAS}: (a) {}/10 (b) {}/10 (c) {}/10 (d) {}/10 (e) {}/10 in {elapsed:.2?}",
        hits[0], hits[1], hits[2], hits[3], hits[4]
    );
    if hits.iter().all(|&h| h >= 8) && elapsed < Duration::from_secs(60) {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn criterion_5() -> Outcome {
    let mut wins = 0;
    for trial in 0..20u64 {
        let net = generate(&SyntheticConfig::calibrated(1000 + trial)).unwrap();
        let n = net.graph.node_count();
        let s = net.planted_supers.len();
        let mut rng = StdRng::seed_from_u64(trial);
        let random: Vec<usize> = rand::seq::index::sample(&mut rng, n - s, s)
            .into_iter()
            .map(|i| i + s)
            .collect();
        let targeted = removal_robustness(&net.graph, &net.planted_supers).unwrap().after;
        let control = removal_robustness(&net.graph, &random).unwrap().after;
        if targeted.isolated_nodes > control.isolated_nodes
            && targeted.largest_component < control.largest_component
        {
            wins += 1;
        }
    }
    let summary = format!("{wins}/20 paired trials favour the planted supers");
    if wins >= 16 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn edge_cells(svg: &str) -> Result<usize, String> {
    let doc = roxmltree::Document::parse(svg).map_err(|e| format!("not well-formed: {e}"))?;
    let root = doc.root_element();
    if root.tag_name().name() != "svg" || root.attribute("width").is_none() || root.attribute("height").is_none() {
        return Err("root is not a sized svg element".into());
    }
    Ok(doc
        .descendants()
        .filter(|n| n.has_tag_name("rect"))
        .filter(|n| n.attribute("class").is_some_and(|c| c.split(' ').any(|t| t == "edge")))
        .count())
}

fn render_all(g: &Graph, core: &[usize]) -> Result<[String; 3], String> {
    let spec = MatrixPlotSpec::degree_ordered(g, Some(core)).map_err(|e| e.to_string())?;
    let matrix = matrix_plot(g, &spec).map_err(|e| e.to_string())?;
    let knn = knn_plot(&knn_by_degree(g)).map_err(|e| e.to_string())?;
    let supers = top_degree_nodes(g, g.node_count().min(14)).map_err(|e| e.to_string())?;
    let profile = superpeer_degree_profile(g, &supers, core).map_err(|e| e.to_string())?;
    let scatter = scatter_ksn_plot(&profile, DEFAULT_REFERENCE_X).map_err(|e| e.to_string())?;
    Ok([matrix, knn, scatter])
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    let mut cases: Vec<Graph> = Vec::new();
    let net = generate(&SyntheticConfig::calibrated(0)).unwrap();
    let k_max = core_numbers(&net.graph).k_max;
    let (core_graph, _) = k_core_subgraph(&net.graph, k_max).unwrap();
    cases.push(core_graph);
    let mut rng = StdRng::seed_from_u64(0x5);
    while cases.len() < 30 {
        let g = random_small_graph(&mut rng);
        if g.edge_count() > 0 {
            cases.push(g);
        }
    }
    for (i, g) in cases.iter().enumerate() {
        let core = core_periphery_split(g, None).core;
        let first = render_all(g, &core).map_err(|e| format!("case {i}: {e}"))?;
        let second = render_all(g, &core).map_err(|e| format!("case {i}: {e}"))?;
        if first != second {
            return Err(format!("case {i}: repeated render differs"));
        }
        let cells = edge_cells(&first[0]).map_err(|e| format!("case {i} matrix: {e}"))?;
        if cells != 2 * g.edge_count() {
            return Err(format!("case {i}: {cells} cells for {} edges", g.edge_count()));
        }
        for doc in &first[1..] {
            edge_cells(doc).map_err(|e| format!("case {i} plot: {e}"))?;
        }
        checked += 1;
    }
    // The scatter and K_nn plots have no size cap; render them on a full network too.
    let full_core = core_periphery_split(&net.graph, None).core;
    let supers = &net.planted_supers;
    let profile = superpeer_degree_profile(&net.graph, supers, &full_core).unwrap();
    for doc in [
        knn_plot(&knn_by_degree(&net.graph)).unwrap(),
        scatter_ksn_plot(&profile, DEFAULT_REFERENCE_X).unwrap(),
    ] {
        edge_cells(&doc).map_err(|e| format!("full network plot: {e}"))?;
    }
    Ok(format!(
        "{checked} graphs incl. the synthetic {k_max}-core ({} nodes): well-formed, 2|E| cells, byte-identical",
        cases[0].node_count()
    ))
}

fn criterion_7() -> Outcome {
    let graph = generate(&SyntheticConfig::calibrated(0)).unwrap().graph;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let (analyze, kcore) = pool.install(|| {
        let start = Instant::now();
        let report = analysis_report(&graph, &AnalysisParams::default()).unwrap();
        let analyze = start.elapsed();
        assert_eq!(report.graph.node_count, graph.node_count());
        let start = Instant::now();
        let dec = core_numbers(&graph);
        let kcore = start.elapsed();
        assert!(dec.k_max > 0);
        (analyze, kcore)
    });
    let summary = format!(
        "analyze {analyze:.2?} (< 5 s), core_numbers {kcore:.2?} (< 0.5 s) on {} nodes, 1 thread",
        graph.node_count()
    );
    if analyze < Duration::from_secs(5) && kcore < Duration::from_millis(500) {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("k-core oracle equivalence", criterion_1),
        ("assortativity oracle equivalence", criterion_2),
        ("K_nn conservation", criterion_3),
        ("calibrated synthetic profile", criterion_4),
        ("robustness directionality", criterion_5),
        ("rendering integrity", criterion_6),
        ("performance envelope", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {} [{name}]: PASS - {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL - {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
