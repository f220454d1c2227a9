//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use intchrom::{cli::run_cli, format, gen};
use intchrom_core::{
    cycles::enumerate_simple_cycles,
    evaluate::{chi_int_star, chi_via_orientations, orientation_score},
    oracle::{brute_acyclic_count, brute_chi_k, brute_chromatic},
    orientation::{enumerate_acyclic, longest_path},
    product::{check_lemma3, chi_int_k, layered_digraph, winding_path},
    ser, Graph, Limits, Rational,
};

const LIMITS: Limits = Limits::DEFAULT;

/// Relative distance from 5/2 allowed for longest_path / k on C5 at k = 20.
const ENVELOPE_REL_TOL: f64 = 0.15;
const ENVELOPE_KS: [usize; 4] = [5, 10, 15, 20];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(num as u64, den as u64)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixtures() -> Vec<(String, Graph)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .expect("fixture directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "col"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let g = format::parse_graph(&text, format::Format::Dimacs).unwrap();
            (name, g)
        })
        .collect()
}

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges = pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e);
    Graph::new(n, edges).unwrap()
}

fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * (n - 1) / 2;
    (0u32..1 << pairs).map(move |mask| {
        let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
        graph_from_bits(n, &bits)
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}

fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for g in labelled_graphs(n) {
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<_> = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            reps.push(g);
        }
    }
    reps
}

fn forest_rule() -> Outcome {
    let mut rng = gen::rng(1);
    let mut disconnected = 0;
    for i in 0..20 {
        let n = 2 + i % 9;
        let g = gen::forest(n, &mut rng);
        ensure(g.is_forest() && g.edge_count() >= 1, || {
            format!("generator gave {g:?}")
        })?;
        disconnected += usize::from(!g.is_connected());
        let out = run_cli(
            ["intchrom", "--json", "analyze", "-"],
            Some(&format::to_dimacs(&g)),
        );
        ensure(out.code == 0, || out.stderr.clone())?;
        let v: serde_json::Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
        ensure(v["chi_int_star"] == "2/1" && v["forest"] == true, || {
            format!("{g:?}: {}", out.stdout.trim())
        })?;
    }
    ensure(disconnected > 0, || {
        "no disconnected forest generated".into()
    })?;
    Ok(format!("20 forests, {disconnected} disconnected, all 2/1"))
}

fn golden_values() -> Outcome {
    let stars = [
        ("C3", Graph::cycle(3), ratio(3, 1)),
        ("C4", Graph::cycle(4), ratio(2, 1)),
        ("C5", Graph::cycle(5), ratio(5, 2)),
        ("C7", Graph::cycle(7), ratio(7, 3)),
        ("K4", Graph::complete(4), ratio(4, 1)),
        ("K5", Graph::complete(5), ratio(5, 1)),
    ];
    for (name, g, want) in &stars {
        let got = chi_int_star(g, &LIMITS).map_err(|e| e.to_string())?.value;
        ensure(got == *want, || format!("{name}: {got} != {want}"))?;
    }
    let attained = [
        ("C5", Graph::cycle(5), 2, 5),
        ("C7", Graph::cycle(7), 3, 7),
        ("K4", Graph::complete(4), 1, 4),
    ];
    for (name, g, k, want) in &attained {
        let (got, _) = chi_int_k(g, *k, &LIMITS).map_err(|e| e.to_string())?;
        ensure(got == *want, || {
            format!("chi_int_k({name},{k}) = {got} != {want}")
        })?;
    }
    Ok("6 values of chi_int_star and 3 of chi_int_k exact".into())
}

fn layered_equivalence() -> Outcome {
    let mut checked = 0;
    // n = 1 is edgeless, which every evaluator rejects.
    for n in 2..=5 {
        for g in graphs_up_to_iso(n).into_iter().filter(Graph::is_connected) {
            for k in 1..=2 {
                let (fast, _) = chi_int_k(&g, k, &LIMITS).map_err(|e| e.to_string())?;
                let slow = brute_chi_k(&g, k, true).map_err(|e| e.to_string())?;
                ensure(fast == slow, || format!("{g:?} k={k}: {fast} != {slow}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} (graph, k) pairs, connected 2 <= n <= 5 up to isomorphism"
    ))
}

fn chromatic_equivalence() -> Outcome {
    let mut rng = gen::rng(4);
    for i in 0..50 {
        let n = 1 + i % 6;
        let g = gen::gnp(n, 0.5, &mut rng);
        let (via, _) = chi_via_orientations(&g, &LIMITS).map_err(|e| e.to_string())?;
        let brute = brute_chromatic(&g).map_err(|e| e.to_string())?;
        ensure(via == brute, || format!("{g:?}: {via} != {brute}"))?;
    }
    Ok("50 random graphs, n <= 6".into())
}

fn path_morphology() -> Outcome {
    let (mut triples, mut paths) = (0, 0);
    for n in 2..=4 {
        for g in labelled_graphs(n).filter(|g| (1..=5).contains(&g.edge_count())) {
            for o in enumerate_acyclic(&g, LIMITS.max_edges).map_err(|e| e.to_string())? {
                for k in 1..=3 {
                    let r = check_lemma3(&g, &o, k, &LIMITS).map_err(|e| e.to_string())?;
                    ensure(r.passed(), || {
                        format!("{g:?} {o:?} k={k}: {:?}", r.violations)
                    })?;
                    triples += 1;
                    paths += r.paths_checked;
                }
            }
        }
    }
    Ok(format!(
        "{triples} (graph, orientation, k) triples, {paths} longest paths"
    ))
}

fn winding_and_limit() -> Outcome {
    let g = Graph::cycle(5);
    let w = chi_int_star(&g, &LIMITS).map_err(|e| e.to_string())?;
    let c = w.critical_cycle.clone().ok_or("no critical cycle")?;
    for k in 1..=10 {
        let wp = winding_path(&g, &c, &w.orientation, k, &LIMITS).map_err(|e| e.to_string())?;
        let d = layered_digraph(&g, &w.orientation, k);
        let nodes = wp.path.nodes();
        ensure(nodes.windows(2).all(|s| d.has_arc(s[0], s[1])), || {
            format!("k={k}: not a directed path {nodes:?}")
        })?;
        ensure(2 * wp.node_count() >= 5 * k, || {
            format!("k={k}: l/k = {}/{k} < 5/2", wp.node_count())
        })?;
    }
    let mut ratios = Vec::new();
    for k in ENVELOPE_KS {
        let (l, _) =
            longest_path(&layered_digraph(&g, &w.orientation, k)).map_err(|e| e.to_string())?;
        ratios.push(l as f64 / k as f64);
    }
    ensure(ratios.windows(2).all(|r| r[1] <= r[0]), || {
        format!("not non-increasing: {ratios:?}")
    })?;
    let last = *ratios.last().unwrap();
    let rel = (last - 2.5).abs() / 2.5;
    ensure(rel <= ENVELOPE_REL_TOL, || {
        format!("k=20 ratio {last} off by {rel:.3}")
    })?;
    Ok(format!(
        "l/k >= 5/2 for k=1..10; envelope {ratios:?}, rel error {rel:.3}"
    ))
}

fn orientation_counts() -> Outcome {
    let expected = [
        ("K3", Graph::complete(3), 6),
        ("C4", Graph::cycle(4), 14),
        ("C5", Graph::cycle(5), 30),
        ("K4", Graph::complete(4), 24),
    ];
    for (name, g, want) in &expected {
        let got = enumerate_acyclic(g, LIMITS.max_edges)
            .map_err(|e| e.to_string())?
            .count();
        ensure(got == *want, || format!("{name}: {got} != {want}"))?;
    }
    let mut compared = 0;
    for (name, g) in fixtures().iter().filter(|(_, g)| g.edge_count() <= 12) {
        let got = enumerate_acyclic(g, LIMITS.max_edges)
            .map_err(|e| e.to_string())?
            .count() as u64;
        let want = brute_acyclic_count(g).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{name}: {got} != {want}"))?;
        compared += 1;
    }
    Ok(format!(
        "4 closed counts, {compared} fixtures against the filter oracle"
    ))
}

fn edge_reversal() -> Outcome {
    let mut graphs = vec![Graph::cycle(4), Graph::cycle(5), Graph::complete(4)];
    let mut rng = gen::rng(8);
    for i in 0..20 {
        graphs.push(gen::connected_cyclic(3 + i % 4, 0.4, &mut rng));
    }
    let mut runs = 0;
    for g in &graphs {
        let cycles = enumerate_simple_cycles(g, LIMITS.max_cycles).map_err(|e| e.to_string())?;
        let mut best: Option<Rational> = None;
        for o in enumerate_acyclic(g, LIMITS.max_edges).map_err(|e| e.to_string())? {
            let run = ser::run(g, &o, ser::default_max_steps(g)).map_err(|e| e.to_string())?;
            let measured = ser::concurrency(&run).map_err(|e| e.to_string())?;
            let (score, _) = orientation_score(g, &o, &cycles).map_err(|e| e.to_string())?;
            ensure(measured == score.recip(), || {
                format!(
                    "{g:?} {o:?}: measured {measured}, formula {}",
                    score.recip()
                )
            })?;
            best = best.max(Some(measured));
            runs += 1;
        }
        let star = chi_int_star(g, &LIMITS).map_err(|e| e.to_string())?.value;
        ensure(best == Some(star.recip()), || {
            format!("{g:?}: max {best:?} != 1/{star}")
        })?;
    }
    Ok(format!("{} graphs, {runs} runs", graphs.len()))
}

fn sandwich() -> Outcome {
    let all = fixtures();
    for (name, g) in &all {
        let star = chi_int_star(g, &LIMITS).map_err(|e| e.to_string())?.value;
        let (chi, _) = chi_via_orientations(g, &LIMITS).map_err(|e| e.to_string())?;
        ensure(star <= ratio(chi, 1), || {
            format!("{name}: {star} > chi {chi}")
        })?;
        for k in 1..=3 {
            let (l, _) = chi_int_k(g, k, &LIMITS).map_err(|e| e.to_string())?;
            ensure(star <= ratio(l, k), || format!("{name}: {star} > {l}/{k}"))?;
        }
    }
    Ok(format!("{} fixtures", all.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("forest rule", forest_rule),
        ("golden values", golden_values),
        ("layered orientations give chi_int_k", layered_equivalence),
        ("chromatic number via orientations", chromatic_equivalence),
        ("longest-path morphology", path_morphology),
        ("winding path and limit envelope", winding_and_limit),
        ("acyclic orientation counts", orientation_counts),
        ("edge reversal concurrency", edge_reversal),
        ("sandwich bounds", sandwich),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
