//! Acceptance gate: eight numbered criteria, each printing one pass/fail
//! line (visible under `cargo test --test acceptance -- --nocapture`).
//! Budgets are asserted as hard limits; the two command-line criteria run
//! the real binary.

use std::process::Command;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use residua::chern::{inverse_total_chern_multiindex, FormalBundle};
use residua::checks::{adjunction_polynomial, congruence_check, Verdict};
use residua::residue::{
    camacho_sad_total, residue_sum_c1_power, residue_sum_c1_power_ring, residue_sum_top_chern,
    residue_sum_top_chern_ring,
};
use residua::singularity::{
    adjunction_euler, euler_ci, milnor_curve_case, milnor_stratum_multiindex,
    milnor_stratum_ring, parusinski_global,
};
use residua::StratumSpec;

fn run_binary(args: &[&str]) -> (i32, String, String, Duration) {
    let started = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_residua"))
        .args(args)
        .output()
        .expect("the binary runs");
    let elapsed = started.elapsed();
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
        elapsed,
    )
}

fn pass(index: u32, what: &str, cases: u64, elapsed: Duration, budget: Option<Duration>) {
    match budget {
        Some(budget) => {
            assert!(
                elapsed <= budget,
                "FAIL [{index}] {what}: {cases} cases in {} ms exceeded the {} ms budget",
                elapsed.as_millis(),
                budget.as_millis()
            );
            println!(
                "PASS [{index}] {what}: {cases} cases in {} ms (budget {} ms)",
                elapsed.as_millis(),
                budget.as_millis()
            );
        }
        None => {
            println!(
                "PASS [{index}] {what}: {cases} cases in {} ms (no budget)",
                elapsed.as_millis()
            );
        }
    }
}

fn decode_vector(mut index: u64, k: usize, lo: i64, span: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(BigInt::from(lo + (index % span) as i64));
        index /= span;
    }
    out
}

#[test]
fn criterion_1_plane_conic_through_the_binary() {
    let budget = Duration::from_millis(100);

    let (code, out, err, elapsed_a) = run_binary(&[
        "camacho-sad", "--n", "2", "--degree", "2", "--chi", "3", "--mu", "1",
    ]);
    assert_eq!(code, 0, "stderr: {err}");
    assert_eq!(out, "4\n", "total residue along the conic must print exactly 4");

    let (code, out, err, elapsed_b) =
        run_binary(&["adjunction", "--n", "2", "--degree", "2", "--mu", "1"]);
    assert_eq!(code, 0, "stderr: {err}");
    assert_eq!(out, "3\n", "Euler characteristic of the conic must print exactly 3");

    let slower = elapsed_a.max(elapsed_b);
    pass(1, "plane conic through the binary", 2, slower, Some(budget));
}

#[test]
fn criterion_2_fourfold_stratum_through_the_binary() {
    let budget = Duration::from_millis(100);

    let (code, out, err, elapsed) = run_binary(&[
        "milnor", "--n", "4", "--stratum", "1,1", "--degree", "2", "--mu", "1", "--method",
        "both",
    ]);
    assert_eq!(code, 0, "stderr: {err}");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "ring: 1", "series-inversion route");
    assert_eq!(lines[1], "multiindex: 1", "composition-sum route");
    assert!(
        lines.len() >= 3 && lines[2].starts_with("note: ") && lines[2].contains("reports 0"),
        "the divergent published value for this configuration must be documented: {out}"
    );

    // the printed value must also close against the global degree count
    let value = BigInt::from_str(lines[0].strip_prefix("ring: ").unwrap()).unwrap();
    let two = BigInt::from(2);
    let chi = adjunction_euler(4, &two, &value).unwrap();
    let closure = &value - &chi + BigInt::from(5);
    assert_eq!(closure, parusinski_global(4, &two).unwrap(), "global closure");

    pass(2, "fourfold double-hyperplane stratum through the binary", 1, elapsed, Some(budget));
}

#[test]
fn criterion_3_total_residue_identity_grid() {
    let budget = Duration::from_secs(1);
    let started = Instant::now();
    let mut cases = 0;
    for n in 2..=6usize {
        for d in 1..=6i64 {
            for mu in 0..=5i64 {
                let d = BigInt::from(d);
                let mu = BigInt::from(mu);
                let chi = adjunction_euler(n, &d, &mu).unwrap();
                let total = camacho_sad_total(n, &d, &chi, &mu).unwrap();
                let mut power = BigInt::from(1);
                for _ in 0..n {
                    power *= &d;
                }
                assert_eq!(total, power, "n={n} d={d} mu={mu}");
                cases += 1;
            }
        }
    }
    pass(3, "total residue equals degree^n with adjunction input", cases, started.elapsed(), Some(budget));
}

#[test]
fn criterion_4_closed_forms_match_ring_integrals() {
    let budget = Duration::from_secs(5);
    let started = Instant::now();
    let mut cases = 0u64;
    const PER_PAIR: u64 = 275;
    for n in 1..=8usize {
        for k in 1..=n {
            let total = 5u64.pow(k as u32);
            let step = (total / PER_PAIR).max(1);
            let mut idx = 0;
            let mut taken = 0;
            while idx < total && taken < PER_PAIR {
                let degrees = decode_vector(idx, k, 1, 5);
                idx += step;
                taken += 1;
                cases += 1;
                let closed = residue_sum_top_chern(n, &degrees).unwrap();
                let ring = residue_sum_top_chern_ring(n, &degrees).unwrap();
                assert_eq!(closed.value, ring.value, "top symbol at n={n} degrees={degrees:?}");
                let closed = residue_sum_c1_power(n, &degrees).unwrap();
                let ring = residue_sum_c1_power_ring(n, &degrees).unwrap();
                assert_eq!(closed.value, ring.value, "power symbol at n={n} degrees={degrees:?}");
            }
        }
    }
    assert!(cases <= 10_000, "the sampler overran its case budget: {cases}");
    pass(4, "closed forms against ring integrals", cases, started.elapsed(), Some(budget));
}

#[test]
fn criterion_5_stratum_milnor_routes_agree() {
    let budget = Duration::from_secs(10);
    let started = Instant::now();
    let mut cases = 0u64;
    for n in 2..=7usize {
        for k in 1..=(n - 1) {
            let total = 4u64.pow(k as u32);
            for idx in 0..total {
                let degrees = decode_vector(idx, k, 1, 4);
                for d in 1..=4i64 {
                    for mu in 0..=3i64 {
                        cases += 1;
                        let spec = StratumSpec::new(
                            n,
                            degrees.clone(),
                            BigInt::from(d),
                            BigInt::from(mu),
                        )
                        .unwrap();
                        let ring = milnor_stratum_ring(&spec);
                        let multi = milnor_stratum_multiindex(&spec);
                        assert_eq!(
                            ring, multi,
                            "routes diverged at n={n} stratum={degrees:?} d={d} mu={mu}"
                        );
                        if k == n - 1 {
                            let curve = milnor_curve_case(&spec).unwrap();
                            assert_eq!(
                                ring, curve,
                                "curve collapse diverged at n={n} stratum={degrees:?} d={d} mu={mu}"
                            );
                        }
                    }
                }
            }
        }
    }
    pass(5, "stratum Milnor number route agreement", cases, started.elapsed(), Some(budget));
}

#[test]
fn criterion_6_classical_euler_characteristics() {
    let budget = Duration::from_millis(100);
    let started = Instant::now();
    let table: [(usize, &[i64], i64); 6] = [
        (2, &[1], 2),
        (2, &[3], 0),
        (3, &[2], 4),
        (3, &[3], 9),
        (3, &[4], 24),
        (4, &[2, 2], 8),
    ];
    let mut cases = 0;
    for (n, degrees, expected) in table {
        let degrees: Vec<BigInt> = degrees.iter().map(|&d| BigInt::from(d)).collect();
        assert_eq!(
            euler_ci(n, &degrees).unwrap(),
            BigInt::from(expected),
            "n={n} degrees={degrees:?}"
        );
        cases += 1;
    }
    for n in 1..=8usize {
        for k in 0..=n {
            let ones = vec![BigInt::from(1); k];
            assert_eq!(
                euler_ci(n, &ones).unwrap(),
                BigInt::from((n - k + 1) as i64),
                "linear sections n={n} k={k}"
            );
            cases += 1;
        }
    }
    pass(6, "classical Euler characteristics", cases, started.elapsed(), Some(budget));
}

#[test]
fn criterion_7_congruence_and_polynomial_root() {
    let started = Instant::now();
    let mut cases = 0;
    for n in 2..=6usize {
        for k in 1..=6i64 {
            for mu in 0..=10i64 {
                let k = BigInt::from(k);
                let mu = BigInt::from(mu);
                let chi = adjunction_euler(n, &k, &mu).unwrap();
                let report = congruence_check(n, &k, &chi, &mu).unwrap();
                assert_eq!(
                    report.verdict,
                    Verdict::Pass,
                    "n={n} degree={k} mu={mu}: witness {:?}",
                    report.witness
                );
                let poly = adjunction_polynomial(n, &chi, &mu).unwrap();
                assert!(
                    poly.is_root(&k),
                    "n={n} degree={k} mu={mu}: P({k}) = {}",
                    poly.evaluate(&k)
                );
                cases += 1;
            }
        }
    }
    pass(7, "degree congruence and polynomial root", cases, started.elapsed(), None);
}

#[test]
fn criterion_8_composition_sum_matches_series_inversion() {
    let budget = Duration::from_secs(1);
    let started = Instant::now();
    let n = 8usize;
    let mut cases = 0;
    for rank in 0..=4usize {
        let total = 4u64.pow(rank as u32);
        for idx in 0..total {
            let degrees = decode_vector(idx, rank, 1, 4);
            let bundle = FormalBundle::direct_sum_of_lines(n, &degrees);
            let inverse = bundle.total_chern().invert().unwrap();
            for j in 0..=n {
                cases += 1;
                assert_eq!(
                    inverse_total_chern_multiindex(&bundle, j),
                    inverse.degree_part(j).unwrap(),
                    "degrees={degrees:?} weight={j}"
                );
            }
        }
    }
    pass(8, "composition sum against series inversion", cases, started.elapsed(), Some(budget));
}
