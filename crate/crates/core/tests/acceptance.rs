//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use edgereg::graph::{enumerate_graphs, is_chordal, Graph};
use edgereg::resolution::{betti_table, taylor_betti_oracle, Caps};
use edgereg::verify::{Conjecture, ScanConfig, Verdict, VerificationReport};
use edgereg::{Field, Monomial, MonomialIdeal, Verifier, Witness};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::process::ExitCode;
use std::time::Instant;

type Outcome = Result<String, String>;

fn family(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi)
        .flat_map(enumerate_graphs)
        .filter(|g| g.edge_count() > 0)
        .collect()
}

fn q() -> Verifier {
    Verifier::new(Field::Rationals)
}

/// Fails with the first non-passing report.
fn all_pass(reports: &[VerificationReport]) -> Result<(), String> {
    match reports.iter().find(|r| r.verdict != Verdict::Pass) {
        Some(r) => Err(r.to_json_line()),
        None => Ok(()),
    }
}

fn froberg() -> Outcome {
    let graphs = family(2, 7);
    let reports = graphs
        .iter()
        .map(|g| q().check_froberg(g))
        .collect::<edgereg::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    all_pass(&reports)?;
    let linear = reports.iter().filter(|r| r.details["reg"] == 2).count();
    Ok(format!("{} classes, {linear} with reg 2", graphs.len()))
}

fn im_bounds() -> Outcome {
    let graphs = family(2, 7);
    let reports = graphs
        .iter()
        .map(|g| q().check_im_bounds(g))
        .collect::<edgereg::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    all_pass(&reports)?;
    Ok(format!("{} classes", graphs.len()))
}

fn bht() -> Outcome {
    let graphs = family(2, 6);
    let reports = graphs
        .iter()
        .map(|g| q().check_bht(g, 3))
        .collect::<edgereg::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    all_pass(&reports)?;
    Ok(format!("{} classes, k = 1..3", graphs.len()))
}

fn hhz() -> Outcome {
    let graphs: Vec<Graph> = family(2, 6)
        .into_iter()
        .filter(|g| is_chordal(&g.complement()))
        .collect();
    for g in &graphs {
        let r = q().check_hhz(g, 3).map_err(|e| e.to_string())?;
        if !r.is_pass() || r.details["regs"] != json!([2, 4, 6]) {
            return Err(r.to_json_line());
        }
        if r.details["linear_quotients"]["outcome"] != "order" {
            return Err(r.to_json_line());
        }
    }
    Ok(format!("{} co-chordal classes", graphs.len()))
}

fn banerjee_anticycle() -> Outcome {
    let g = Graph::anticycle(5).map_err(|e| e.to_string())?;
    let v = q();
    let regs = (1..=3)
        .map(|k| v.edge_reg(&g, k))
        .collect::<edgereg::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    if regs != [3, 4, 6] {
        return Err(format!("regularities {regs:?}"));
    }
    let r = v.check_banerjee(&g, 3).map_err(|e| e.to_string())?;
    all_pass(&[r])?;
    Ok(format!("regularities {regs:?}"))
}

fn random_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    loop {
        let nvars = rng.gen_range(1..=5);
        let ngens = rng.gen_range(1..=5);
        let gens: Vec<Monomial> = (0..ngens)
            .map(|_| Monomial::from_exponents((0..nvars).map(|_| rng.gen_range(0..=2)).collect()))
            .collect();
        if gens.iter().any(Monomial::is_one) {
            continue;
        }
        return MonomialIdeal::minimalize(nvars, gens);
    }
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20240611);
    let caps = Caps::default();
    let fields = [Field::Rationals, Field::prime(2).map_err(|e| e.to_string())?];
    for n in 0..200 {
        let ideal = random_ideal(&mut rng);
        for f in fields {
            let lattice = betti_table(&ideal, f).map_err(|e| e.to_string())?;
            let taylor = taylor_betti_oracle(&ideal, f, &caps).map_err(|e| e.to_string())?;
            if lattice != taylor {
                return Err(format!("ideal #{n} {ideal} over {f}: {lattice:?} vs {taylor:?}"));
            }
        }
    }
    Ok("200 ideals over Q and GF(2)".into())
}

fn main_theorems() -> Outcome {
    let graphs = [
        Graph::cycle(4).map_err(|e| e.to_string())?,
        Graph::anticycle(5).map_err(|e| e.to_string())?,
    ];
    let mut count = 0;
    for g in &graphs {
        for s in g.independent_sets() {
            if s.len() == g.vertex_count() {
                continue;
            }
            let m1 = q().check_main1(g, &s, 2).map_err(|e| e.to_string())?;
            let m2 = q().check_main2(g, &s, 3).map_err(|e| e.to_string())?;
            all_pass(&[m1, m2])?;
            count += 1;
        }
    }
    Ok(format!("{count} (G, S) pairs"))
}

fn keylemma() -> Outcome {
    let graphs = [
        Graph::cycle(4).map_err(|e| e.to_string())?,
        Graph::cycle(5).map_err(|e| e.to_string())?,
        Graph::path(4).map_err(|e| e.to_string())?,
    ];
    let mut count = 0;
    for g in &graphs {
        for u in g.minimal_vertex_covers() {
            for k in 0..=2 {
                all_pass(&[q().check_keylemma(g, &u, k).map_err(|e| e.to_string())?])?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (G, U, k) instances"))
}

fn negative_control() -> Outcome {
    let parse = |s: &str| MonomialIdeal::parse(s, 2).map_err(|e| e.to_string());
    let (i, j, k) = (parse("x0^2, x0*x1, x1^2")?, parse("x0^2, x1^2")?, parse("x0*x1")?);
    let r = q().check_betti_splitting(&i, &j, &k).map_err(|e| e.to_string())?;
    match (&r.verdict, &r.witness) {
        (Verdict::Fail, Some(Witness::BettiEntry { i: 1, j: 4, left, right, .. })) => {
            Ok(format!("fail at (1, 4): left {left}, right {right}"))
        }
        _ => Err(r.to_json_line()),
    }
}

fn np_scan() -> Outcome {
    let graphs: Vec<Graph> = (0..=6).flat_map(enumerate_graphs).collect();
    let cfg = ScanConfig {
        k_max: 2,
        ..ScanConfig::new(Conjecture::Np)
    };
    let reports = q().scan_conjecture(&graphs, &cfg).map_err(|e| e.to_string())?;
    if reports.is_empty() {
        return Err("no gap-free graph with reg 3 found".into());
    }
    all_pass(&reports)?;
    Ok(format!("{} gap-free graphs with reg 3, 0 skipped, 0 counterexamples", reports.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("reg I(G) = 2 iff co-chordal, 2 <= n <= 7", froberg),
        ("im + 1 <= reg <= m + 1, 2 <= n <= 7", im_bounds),
        ("reg I^k >= 2k + im - 1, n <= 6, k <= 3", bht),
        ("co-chordal powers linear with linear quotients, n <= 6", hhz),
        ("anticycle(5) regularities 3, 4, 6", banerjee_anticycle),
        ("lcm lattice equals Taylor oracle on random ideals", oracle_equivalence),
        ("suspension splitting and linear powers on C4, anticycle(5)", main_theorems),
        ("cover colons generated by variables on C4, C5, P4", keylemma),
        ("splitting negative control", negative_control),
        ("NP scan n <= 6, k = 2", np_scan),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {:>2}: {name} ({msg}) [{secs:.1}s]", n + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {msg} [{secs:.1}s]", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
