//! Acceptance criteria for the whole workspace, one test per criterion.
//! Each test prints a PASS line with its elapsed time; every comparison
//! is exact.

use std::process::Command;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use frobkit::closed_forms::{pythagorean_frobenius, sylvester_frobenius};
use frobkit::constructive::{construction_trace, lemma_bound_holds, lemma_interval_search};
use frobkit::oracle::{
    Budget, apery_set, frobenius_dp, frobenius_round_robin, gaps, is_representable_dp,
};
use frobkit::{GeneratorSet, TripleParams};

fn pass(number: u32, summary: &str, started: Instant) {
    println!(
        "criterion {number} ({summary}): PASS [{:.2?}]",
        started.elapsed()
    );
}

fn valid_params(max_m: i128) -> Vec<TripleParams> {
    (2..=max_m)
        .flat_map(|m| (1..m).map(move |n| TripleParams::new(m, n)))
        .flatten()
        .collect()
}

#[test]
fn criterion_1_closed_form_matches_the_table_scan() {
    let started = Instant::now();
    let sweep = valid_params(30);
    assert_eq!(sweep.len(), 186, "sweep should cover every valid pair up to m = 30");
    for params in sweep {
        let formula = pythagorean_frobenius(params).unwrap();
        let scanned = frobenius_dp(&params.triple().unwrap().generator_set(), Budget::default())
            .unwrap();
        assert_eq!(
            formula,
            scanned,
            "closed form and table scan disagree at (m, n) = ({}, {})",
            params.m(),
            params.n()
        );
    }
    pass(1, "closed form matches the table scan for every m <= 30", started);
}

#[test]
fn criterion_2_frobenius_is_the_last_gap() {
    let started = Instant::now();
    for params in valid_params(30) {
        let (m, n) = (params.m(), params.n());
        let frobenius = pythagorean_frobenius(params).unwrap().value();
        let set = params.triple().unwrap().generator_set();
        let smallest = set.smallest();

        // spot checks straight against the reachability table
        assert!(
            !is_representable_dp(frobenius, &set, Budget::default()).unwrap(),
            "({m}, {n}): {frobenius} should be a gap"
        );
        assert!(
            is_representable_dp(frobenius + 1, &set, Budget::default()).unwrap(),
            "({m}, {n}): {} should be representable",
            frobenius + 1
        );

        // full window via class minima: v is representable exactly when
        // it is at or above the minimum of its residue class
        let apery = apery_set(&set, smallest, Budget::default()).unwrap();
        let minimum = |v: i128| apery.values()[(v % smallest) as usize];
        assert!(
            frobenius < minimum(frobenius),
            "({m}, {n}): {frobenius} should be below its class minimum"
        );
        for j in 1..=smallest {
            assert!(
                frobenius + j >= minimum(frobenius + j),
                "({m}, {n}): {} should be representable",
                frobenius + j
            );
        }
    }
    pass(2, "the frobenius number is a gap and everything after is not", started);
}

#[test]
fn criterion_3_construction_covers_a_dense_window() {
    let started = Instant::now();
    for params in valid_params(12) {
        let (m, n) = (params.m(), params.n());
        let frobenius = pythagorean_frobenius(params).unwrap().value();
        let generators = params.triple().unwrap().generators();
        for target in frobenius + 1..=frobenius + 5000 {
            let trace = construction_trace(target, params).unwrap();
            let rep = trace.representation();
            assert_eq!(rep.generators(), generators, "({m}, {n}) target {target}");
            assert!(
                rep.coeffs().iter().all(|&c| c >= 0),
                "({m}, {n}) target {target}: negative coefficient in {:?}",
                rep.coeffs()
            );
            let total: i128 = rep
                .coeffs()
                .iter()
                .zip(&generators)
                .map(|(&c, &g)| c.checked_mul(g).unwrap())
                .sum();
            assert_eq!(total, target, "({m}, {n}): coefficients miss the target");
            let (w, pair) = (trace.witness(), trace.pair());
            assert!(
                w.y() * m + w.x() * n <= pair.a(),
                "({m}, {n}) target {target}: witness weight exceeds a"
            );
        }
    }
    pass(3, "construction is valid for 5000 targets above every small triple", started);
}

#[test]
fn criterion_4_interval_witnesses_satisfy_the_bound() {
    let started = Instant::now();
    let mut equality_cases = 0u64;
    for params in valid_params(15) {
        let (m, n) = (params.m(), params.n());
        let triple = params.triple().unwrap();
        let frobenius = pythagorean_frobenius(params).unwrap().value();
        for b in 0..=1000 {
            let w = lemma_interval_search(b, params).unwrap();
            assert!(
                lemma_bound_holds(w, params).unwrap(),
                "bound fails at (m, n) = ({m}, {n}), b = {b}"
            );
            let lhs = (w.y() * m + w.x() * n) * triple.odd_leg();
            let rhs = frobenius + triple.odd_leg() + b * triple.even_leg();
            if lhs == rhs {
                equality_cases += 1;
            }
        }
    }
    assert!(
        equality_cases > 0,
        "the bound should be attained somewhere in the sweep"
    );
    pass(4, "interval witnesses always satisfy the bound, tightly somewhere", started);
}

#[test]
fn criterion_5_random_pairs_match_sylvester() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(42);
    let mut tested = 0;
    while tested < 200 {
        let a = rng.random_range(2i128..=200);
        let b = rng.random_range(2i128..=200);
        // the formula's own validation rejects non-coprime draws
        let Ok(formula) = sylvester_frobenius(a, b) else {
            continue;
        };
        tested += 1;
        let set = GeneratorSet::new(&[a, b]).unwrap();
        assert_eq!(
            formula,
            frobenius_dp(&set, Budget::default()).unwrap(),
            "formula and scan disagree for ({a}, {b})"
        );
        let gap_count = gaps(&set, Budget::default()).unwrap().len() as i128;
        assert_eq!(
            gap_count,
            (a - 1) * (b - 1) / 2,
            "gap count is off for ({a}, {b})"
        );
    }
    pass(5, "200 random coprime pairs match sylvester and the genus count", started);
}

#[test]
fn criterion_6_random_sets_agree_across_oracles() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(43);
    let mut tested = 0;
    while tested < 500 {
        let len = rng.random_range(2usize..=5);
        let values: Vec<i128> = (0..len).map(|_| rng.random_range(2i128..=200)).collect();
        let Ok(set) = GeneratorSet::new(&values) else {
            continue;
        };
        tested += 1;
        let scanned = frobenius_dp(&set, Budget::default()).unwrap();
        let relaxed = frobenius_round_robin(&set, Budget::default()).unwrap();
        assert_eq!(scanned, relaxed, "oracles disagree for {values:?}");
        let apery = apery_set(&set, set.smallest(), Budget::default()).unwrap();
        assert_eq!(apery.frobenius(), scanned, "apery disagrees for {values:?}");
    }
    pass(6, "500 random gcd-1 sets agree across all three oracles", started);
}

#[test]
fn criterion_7_cli_contract() {
    let started = Instant::now();
    let bin = env!("CARGO_BIN_EXE_frobkit");
    let run = |args: &[&str]| {
        Command::new(bin)
            .env_remove("FROBKIT_BUDGET")
            .args(args)
            .output()
            .expect("binary should run")
    };

    let verify = run(&["verify", "--max-m", "10"]);
    assert_eq!(verify.status.code(), Some(0), "verify sweep should pass");

    let invalid = run(&["frobenius", "--m", "4", "--n", "2"]);
    assert_eq!(invalid.status.code(), Some(2), "invalid parameters should exit 2");

    let json_args = ["frobenius", "--m", "3", "--n", "2", "--format", "json", "--check"];
    let first = run(&json_args);
    let second = run(&json_args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "identical runs should emit identical bytes");
    let report: Value = serde_json::from_slice(&first.stdout).expect("valid JSON report");
    assert_eq!(report["result"]["frobenius"], 21);
    let reserialized = serde_json::to_string(&report).unwrap();
    assert_eq!(
        reserialized.as_bytes(),
        &first.stdout[..first.stdout.len() - 1],
        "parse and reserialize should reproduce the bytes"
    );

    let represent = run(&[
        "represent", "--m", "3", "--n", "2", "--target", "100", "--check", "--format", "json",
    ]);
    assert_eq!(represent.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&represent.stdout).unwrap();
    assert!(
        report["checks"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["passed"] == true),
        "all represent checks should pass"
    );

    pass(7, "the CLI honors its exit code and JSON contract", started);
}
