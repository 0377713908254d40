//! Cross-oracle consistency suites.
//!
//! Every quantity in this crate that has two independent evaluation routes
//! is checked here for exact agreement on a dense, deterministic parameter
//! grid: closed forms against ring integrals, composition sums against
//! series inversion, collapsed formulas against the general ones, and the
//! algebraic identities the formulas are derived from. Randomized suites
//! use a fixed-seed generator, so every run sees the same cases and a
//! failure is reproducible from its reported counterexample.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chern::{
    elementary_symmetric, inverse_total_chern_multiindex, FormalBundle,
};
use crate::checks::{
    adjunction_polynomial, congruence_check, sing_count_bound, CurveFoliationData, Verdict,
};
use crate::residue::{
    camacho_sad_degree_prefix, camacho_sad_total, residue_sum_c1_power,
    residue_sum_c1_power_ring, residue_sum_top_chern, residue_sum_top_chern_ring,
};
use crate::ring::GradedClass;
use crate::singularity::{
    adjunction_euler, euler_ci, euler_ci_multiindex, milnor_curve_case, milnor_stratum_ring,
    milnor_stratum_multiindex, parusinski_global, StratumSpec,
};

/// Outcome of one suite: how many cases ran and the first counterexample,
/// if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

const SEED: u64 = 0x0f2e_51d0;

/// Runs every suite in a fixed order.
pub fn run_all() -> Vec<SuiteReport> {
    vec![
        ring_axioms(),
        ring_inversion(),
        integrate_convolution(),
        truncation_soundness(),
        whitney_symmetric_functions(),
        dual_involution(),
        virtual_difference_roundtrip(),
        inverse_chern_multiindex(),
        residue_closed_vs_integral(),
        closed_forms_degree_gap_one(),
        camacho_sad_plane_prefix(),
        camacho_sad_totality(),
        milnor_ring_vs_multiindex(),
        milnor_curve_collapse(),
        adjunction_global_closure(),
        euler_ci_paths(),
        euler_ci_linear_sections(),
        congruence_and_polynomial(),
        sing_count_monotonicity(),
    ]
}

// ---- deterministic case generation ----

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

fn random_class(rng: &mut ChaCha8Rng, n: usize) -> GradedClass {
    let coeffs: Vec<BigInt> = (0..=n).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
    GradedClass::new(n, coeffs).expect("exact length")
}

/// Decodes `index` into a k-vector over {lo, ..., lo + span − 1}, the
/// odometer order used by every grid suite.
fn decode_vector(mut index: u64, k: usize, lo: i64, span: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(BigInt::from(lo + (index % span) as i64));
        index /= span;
    }
    out
}

fn fmt_degrees(degrees: &[BigInt]) -> String {
    let parts: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
    format!("[{}]", parts.join(","))
}

// ---- ring suites ----

fn ring_axioms() -> SuiteReport {
    let mut rng = rng();
    let mut cases = 0;
    let mut failure = None;
    'outer: for _ in 0..300 {
        let n = rng.gen_range(0usize..=6);
        let a = random_class(&mut rng, n);
        let b = random_class(&mut rng, n);
        let c = random_class(&mut rng, n);
        cases += 1;
        let checks: [(&str, GradedClass, GradedClass); 5] = [
            ("mul commutes", a.mul(&b).unwrap(), b.mul(&a).unwrap()),
            ("add commutes", a.add(&b).unwrap(), b.add(&a).unwrap()),
            (
                "mul associates",
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap(),
            ),
            (
                "mul distributes",
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap(),
            ),
            ("one is neutral", a.mul(&GradedClass::one(n)).unwrap(), a.clone()),
        ];
        for (what, left, right) in checks {
            if left != right {
                failure = Some(format!("{what} failed for a={a}, b={b}, c={c} over P^{n}"));
                break 'outer;
            }
        }
    }
    SuiteReport { name: "ring-axioms", cases, failure }
}

fn ring_inversion() -> SuiteReport {
    let mut rng = rng();
    let mut cases = 0;
    let mut failure = None;
    for _ in 0..300 {
        let n = rng.gen_range(0usize..=10);
        let mut coeffs: Vec<BigInt> =
            (0..=n).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
        coeffs[0] = BigInt::one();
        let a = GradedClass::new(n, coeffs).expect("exact length");
        cases += 1;
        let inv = a.invert().expect("constant term 1");
        if !a.mul(&inv).unwrap().is_one() {
            failure = Some(format!("a * a^-1 != 1 for a = {a} over P^{n}"));
            break;
        }
        if inv.invert().expect("constant term 1") != a {
            failure = Some(format!("double inversion drifted for a = {a} over P^{n}"));
            break;
        }
    }
    SuiteReport { name: "ring-inversion", cases, failure }
}

fn integrate_convolution() -> SuiteReport {
    // ∫(a·b) over P^n equals the convolution Σ_i a_i b_{n−i}
    let mut rng = rng();
    let mut cases = 0;
    let mut failure = None;
    for _ in 0..300 {
        let n = rng.gen_range(0usize..=8);
        let a = random_class(&mut rng, n);
        let b = random_class(&mut rng, n);
        cases += 1;
        let via_ring = a.mul(&b).unwrap().integrate();
        let mut direct = BigInt::zero();
        for i in 0..=n {
            direct += a.coeff(i) * b.coeff(n - i);
        }
        if via_ring != direct {
            failure = Some(format!(
                "integrate(a*b) = {via_ring} but the convolution gives {direct} \
                 for a={a}, b={b} over P^{n}"
            ));
            break;
        }
    }
    SuiteReport { name: "integrate-convolution", cases, failure }
}

fn truncation_soundness() -> SuiteReport {
    // the truncated product agrees with the untruncated one below the cutoff
    let mut rng = rng();
    let mut cases = 0;
    let mut failure = None;
    'outer: for _ in 0..300 {
        let n = rng.gen_range(0usize..=6);
        let a = random_class(&mut rng, n);
        let b = random_class(&mut rng, n);
        cases += 1;
        let wide_a = GradedClass::new(2 * n + 1, a.coeffs().to_vec()).unwrap();
        let wide_b = GradedClass::new(2 * n + 1, b.coeffs().to_vec()).unwrap();
        let full = wide_a.mul(&wide_b).unwrap();
        let truncated = a.mul(&b).unwrap();
        for j in 0..=n {
            if truncated.coeff(j) != full.coeff(j) {
                failure = Some(format!(
                    "degree-{j} coefficient differs between truncated and full \
                     products for a={a}, b={b} over P^{n}"
                ));
                break 'outer;
            }
        }
    }
    SuiteReport { name: "truncation-soundness", cases, failure }
}

// ---- bundle suites ----

fn whitney_symmetric_functions() -> SuiteReport {
    // coefficients of Π(1 + d_i h) are the elementary symmetric values
    let mut cases = 0;
    let mut failure = None;
    'outer: for k in 0..=4usize {
        let span = 5u64; // degrees from {-2, -1, 1, 2, 3}
        let choices: [i64; 5] = [-2, -1, 1, 2, 3];
        let total = span.pow(k as u32);
        for idx in 0..total {
            let mut index = idx;
            let degrees: Vec<BigInt> = (0..k)
                .map(|_| {
                    let d = choices[(index % span) as usize];
                    index /= span;
                    BigInt::from(d)
                })
                .collect();
            cases += 1;
            let bundle = FormalBundle::direct_sum_of_lines(6, &degrees);
            for j in 0..=6usize {
                let expected = elementary_symmetric(&degrees, j);
                if bundle.total_chern().coeff(j) != expected {
                    failure = Some(format!(
                        "degrees={} degree-{j} coefficient {} != e_{j} = {expected}",
                        fmt_degrees(&degrees),
                        bundle.total_chern().coeff(j)
                    ));
                    break 'outer;
                }
            }
        }
    }
    SuiteReport { name: "whitney-symmetric-functions", cases, failure }
}

fn dual_involution() -> SuiteReport {
    let mut rng = rng();
    let mut cases = 0;
    let mut failure = None;
    for _ in 0..200 {
        let n = rng.gen_range(1usize..=8);
        let k = rng.gen_range(0usize..=4);
        let degrees: Vec<BigInt> =
            (0..k).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect();
        cases += 1;
        let s = FormalBundle::direct_sum_of_lines(n, &degrees);
        if s.dual().dual() != s {
            failure = Some(format!(
                "dual is not an involution for degrees={} over P^{n}",
                fmt_degrees(&degrees)
            ));
            break;
        }
        let negated: Vec<BigInt> = degrees.iter().map(|d| -d).collect();
        if s.dual() != FormalBundle::direct_sum_of_lines(n, &negated) {
            failure = Some(format!(
                "dual of a line sum is not the negated line sum for degrees={} over P^{n}",
                fmt_degrees(&degrees)
            ));
            break;
        }
    }
    SuiteReport { name: "dual-involution", cases, failure }
}

fn virtual_difference_roundtrip() -> SuiteReport {
    // c(E - F) · c(F) must reproduce c(E) exactly, and ranks subtract
    let mut rng = rng();
    let mut cases = 0;
    let mut failure = None;
    for _ in 0..200 {
        let n = rng.gen_range(1usize..=8);
        let ke = rng.gen_range(0usize..=4);
        let kf = rng.gen_range(0usize..=4);
        let de: Vec<BigInt> = (0..ke).map(|_| BigInt::from(rng.gen_range(-4i64..=4))).collect();
        let df: Vec<BigInt> = (0..kf).map(|_| BigInt::from(rng.gen_range(-4i64..=4))).collect();
        cases += 1;
        let e = FormalBundle::direct_sum_of_lines(n, &de);
        let f = FormalBundle::direct_sum_of_lines(n, &df);
        let diff = e.virtual_difference(&f).expect("same ambient dimension");
        if diff.rank() != e.rank() - f.rank() {
            failure = Some(format!(
                "rank of difference is {} for E={} F={} over P^{n}",
                diff.rank(),
                fmt_degrees(&de),
                fmt_degrees(&df)
            ));
            break;
        }
        let back = diff.total_chern().mul(f.total_chern()).unwrap();
        if &back != e.total_chern() {
            failure = Some(format!(
                "c(E-F)c(F) != c(E) for E={} F={} over P^{n}",
                fmt_degrees(&de),
                fmt_degrees(&df)
            ));
            break;
        }
    }
    SuiteReport { name: "virtual-difference-roundtrip", cases, failure }
}

fn inverse_chern_multiindex() -> SuiteReport {
    // the composition sum equals series inversion, degree by degree, for
    // every line-sum bundle of rank <= 4 with degrees in {1..4}, over P^8
    let n = 8usize;
    let mut cases = 0;
    let mut failure = None;
    'outer: for rank in 0..=4usize {
        let total = 4u64.pow(rank as u32);
        for idx in 0..total {
            let degrees = decode_vector(idx, rank, 1, 4);
            let bundle = FormalBundle::direct_sum_of_lines(n, &degrees);
            let inverse = bundle.total_chern().invert().expect("constant term 1");
            for j in 0..=n {
                cases += 1;
                let combinatorial = inverse_total_chern_multiindex(&bundle, j);
                let series = inverse.degree_part(j).expect("j <= n");
                if combinatorial != series {
                    failure = Some(format!(
                        "degrees={} weight {j}: composition sum {combinatorial} != \
                         series inversion {series}",
                        fmt_degrees(&degrees)
                    ));
                    break 'outer;
                }
            }
        }
    }
    SuiteReport { name: "inverse-chern-multiindex", cases, failure }
}

// ---- residue suites ----

/// Shared body of the closed-form/ring-integral comparison, parameterized
/// over the elementary-symmetric evaluator used to recompute the closed
/// form. Tests inject a corrupted evaluator to prove the suite would catch
/// a defect in the combinatorial side.
fn closed_vs_integral_with(esym: &dyn Fn(&[BigInt], usize) -> BigInt) -> SuiteReport {
    let mut cases = 0;
    let mut failure = None;
    const PER_PAIR: u64 = 275; // 36 pairs × 275 ≤ 10^4 cases
    'outer: for n in 1..=8usize {
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

                let closed = residue_sum_top_chern(n, &degrees).expect("valid grid point");
                let ring = residue_sum_top_chern_ring(n, &degrees).expect("valid grid point");
                let product: BigInt = degrees.iter().product();
                let recomputed = esym(&degrees, n - k) * &product;
                if closed.value != ring.value || closed.value != recomputed {
                    failure = Some(format!(
                        "n={n} degrees={}: closed-form {} vs ring-integral {} vs \
                         elementary-symmetric recomputation {recomputed}",
                        fmt_degrees(&degrees),
                        closed.value,
                        ring.value
                    ));
                    break 'outer;
                }

                let closed = residue_sum_c1_power(n, &degrees).expect("valid grid point");
                let ring = residue_sum_c1_power_ring(n, &degrees).expect("valid grid point");
                if closed.value != ring.value {
                    failure = Some(format!(
                        "n={n} degrees={}: c_1-power closed-form {} vs ring-integral {}",
                        fmt_degrees(&degrees),
                        closed.value,
                        ring.value
                    ));
                    break 'outer;
                }
            }
        }
    }
    SuiteReport { name: "residue-closed-vs-integral", cases, failure }
}

fn residue_closed_vs_integral() -> SuiteReport {
    closed_vs_integral_with(&elementary_symmetric)
}

fn closed_forms_degree_gap_one() -> SuiteReport {
    // at n − k = 1 both closed forms reduce to e_1 · Πd and must coincide
    let mut cases = 0;
    let mut failure = None;
    'outer: for n in 2..=8usize {
        let k = n - 1;
        let total = 4u64.pow(k as u32);
        let step = (total / 500).max(1);
        let mut idx = 0;
        while idx < total {
            let degrees = decode_vector(idx, k, 1, 4);
            idx += step;
            cases += 1;
            let top = residue_sum_top_chern(n, &degrees).expect("valid grid point");
            let c1 = residue_sum_c1_power(n, &degrees).expect("valid grid point");
            if top.value != c1.value {
                failure = Some(format!(
                    "n={n} degrees={}: top-Chern form {} != c_1-power form {}",
                    fmt_degrees(&degrees),
                    top.value,
                    c1.value
                ));
                break 'outer;
            }
        }
    }
    SuiteReport { name: "closed-forms-degree-gap-one", cases, failure }
}

fn camacho_sad_plane_prefix() -> SuiteReport {
    // over the plane the binomial prefix collapses to 3d
    let mut cases = 0;
    let mut failure = None;
    for d in 1..=50i64 {
        let d = BigInt::from(d);
        cases += 1;
        let prefix = camacho_sad_degree_prefix(2, &d).expect("n = 2");
        if prefix != 3 * &d {
            failure = Some(format!("prefix(2, {d}) = {prefix}, expected {}", 3 * &d));
            break;
        }
    }
    SuiteReport { name: "camacho-sad-plane-prefix", cases, failure }
}

fn camacho_sad_totality() -> SuiteReport {
    // with χ from the adjunction identity the total residue is exactly d^n
    let mut cases = 0;
    let mut failure = None;
    'outer: for n in 2..=6usize {
        for d in 1..=6i64 {
            for mu in 0..=5i64 {
                let d = BigInt::from(d);
                let mu = BigInt::from(mu);
                cases += 1;
                let chi = adjunction_euler(n, &d, &mu).expect("valid grid point");
                let total = camacho_sad_total(n, &d, &chi, &mu).expect("valid grid point");
                let mut power = BigInt::one();
                for _ in 0..n {
                    power *= &d;
                }
                if total != power {
                    failure = Some(format!(
                        "n={n} d={d} mu={mu}: total residue {total} != d^n = {power}"
                    ));
                    break 'outer;
                }
            }
        }
    }
    SuiteReport { name: "camacho-sad-totality", cases, failure }
}

// ---- singularity suites ----

fn milnor_ring_vs_multiindex() -> SuiteReport {
    // full grid: n ≤ 7, 1 ≤ k ≤ n−1, stratum degrees in {1..4}^k, d ≤ 4,
    // μ ≤ 3 — the series-inversion route and the composition-sum route must
    // agree exactly everywhere
    let mut cases = 0;
    let mut failure = None;
    'outer: for n in 2..=7usize {
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
                        .expect("valid grid point");
                        let ring = milnor_stratum_ring(&spec);
                        let multi = milnor_stratum_multiindex(&spec);
                        if ring != multi {
                            failure = Some(format!(
                                "n={n} stratum={} d={d} mu={mu}: ring {ring} != \
                                 multi-index {multi}",
                                fmt_degrees(&degrees)
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    SuiteReport { name: "milnor-ring-vs-multiindex", cases, failure }
}

fn milnor_curve_collapse() -> SuiteReport {
    // for one-dimensional strata (k = n−1) the collapsed curve formula must
    // match the general routes
    let mut cases = 0;
    let mut failure = None;
    'outer: for n in 2..=7usize {
        let k = n - 1;
        let total = 4u64.pow(k as u32);
        for idx in 0..total {
            let degrees = decode_vector(idx, k, 1, 4);
            for d in 1..=4i64 {
                for mu in 0..=3i64 {
                    cases += 1;
                    let spec =
                        StratumSpec::new(n, degrees.clone(), BigInt::from(d), BigInt::from(mu))
                            .expect("valid grid point");
                    let general = milnor_stratum_ring(&spec);
                    let collapsed = milnor_curve_case(&spec).expect("k = n - 1");
                    if general != collapsed {
                        failure = Some(format!(
                            "n={n} stratum={} d={d} mu={mu}: general {general} != \
                             curve-case {collapsed}",
                            fmt_degrees(&degrees)
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    SuiteReport { name: "milnor-curve-collapse", cases, failure }
}

fn adjunction_global_closure() -> SuiteReport {
    // for the double-hyperplane family (d = 2, stratum (1,1), μ = 1):
    // μ_S(D) − (−1)^n χ(D) + (−1)^n (n+1) = ∫ c_n(T^∨P^n ⊗ O(2))
    let mut cases = 0;
    let mut failure = None;
    let two = BigInt::from(2);
    for n in 3..=7usize {
        cases += 1;
        let spec = StratumSpec::new(
            n,
            vec![BigInt::one(), BigInt::one()],
            two.clone(),
            BigInt::one(),
        )
        .expect("valid family member");
        let mu = milnor_stratum_ring(&spec);
        let chi = adjunction_euler(n, &two, &mu).expect("valid family member");
        let sign = crate::chern::sign(n);
        let closure = &mu - &sign * chi + sign * BigInt::from((n + 1) as i64);
        let global = parusinski_global(n, &two).expect("valid family member");
        if closure != global {
            failure = Some(format!(
                "n={n}: closure value {closure} != global count {global} (mu = {mu})"
            ));
            break;
        }
    }
    SuiteReport { name: "adjunction-global-closure", cases, failure }
}

fn euler_ci_paths() -> SuiteReport {
    // ring route vs multi-index route for complete intersections:
    // n ≤ 7, 0 ≤ k ≤ n, degrees in {1..4}^k
    let mut cases = 0;
    let mut failure = None;
    'outer: for n in 1..=7usize {
        for k in 0..=n {
            let total = 4u64.pow(k as u32);
            for idx in 0..total {
                let degrees = decode_vector(idx, k, 1, 4);
                cases += 1;
                let ring = euler_ci(n, &degrees).expect("valid grid point");
                let multi = euler_ci_multiindex(n, &degrees).expect("valid grid point");
                if ring != multi {
                    failure = Some(format!(
                        "n={n} degrees={}: ring {ring} != multi-index {multi}",
                        fmt_degrees(&degrees)
                    ));
                    break 'outer;
                }
            }
        }
    }
    SuiteReport { name: "euler-ci-paths", cases, failure }
}

fn euler_ci_linear_sections() -> SuiteReport {
    // cutting by hyperplanes just lowers the dimension: χ = n − k + 1
    let mut cases = 0;
    let mut failure = None;
    'outer: for n in 1..=8usize {
        for k in 0..=n {
            cases += 1;
            let ones = vec![BigInt::one(); k];
            let chi = euler_ci(n, &ones).expect("valid grid point");
            if chi != BigInt::from((n - k + 1) as i64) {
                failure = Some(format!(
                    "n={n} k={k}: linear section gave {chi}, expected {}",
                    n - k + 1
                ));
                break 'outer;
            }
        }
    }
    SuiteReport { name: "euler-ci-linear-sections", cases, failure }
}

// ---- foliation-check suites ----

fn congruence_and_polynomial() -> SuiteReport {
    // with χ from the adjunction identity, the divisibility holds and the
    // degree is a root of the adjunction polynomial
    let mut cases = 0;
    let mut failure = None;
    'outer: for n in 2..=6usize {
        for k in 1..=6i64 {
            for mu in 0..=10i64 {
                let k = BigInt::from(k);
                let mu = BigInt::from(mu);
                cases += 1;
                let chi = adjunction_euler(n, &k, &mu).expect("valid grid point");
                let report = congruence_check(n, &k, &chi, &mu).expect("valid grid point");
                if report.verdict != Verdict::Pass {
                    failure = Some(format!(
                        "n={n} degree={k} mu={mu}: congruence failed with witness {:?}",
                        report.witness
                    ));
                    break 'outer;
                }
                let poly = adjunction_polynomial(n, &chi, &mu).expect("n >= 2");
                if !poly.is_root(&k) {
                    failure = Some(format!(
                        "n={n} degree={k} mu={mu}: P({k}) = {} != 0",
                        poly.evaluate(&k)
                    ));
                    break 'outer;
                }
            }
        }
    }
    SuiteReport { name: "congruence-and-polynomial", cases, failure }
}

fn sing_count_monotonicity() -> SuiteReport {
    // reporting more singular points can never turn a fail into a pass
    let mut cases = 0;
    let mut failure = None;
    'outer: for k in 1..=5i64 {
        for d in 0..=4i64 {
            for nodal in [false, true] {
                for dicritical in [false, true] {
                    for mu in [None, Some(2i64)] {
                        let mut failed = false;
                        for ns in 0..=30i64 {
                            cases += 1;
                            let mut data = CurveFoliationData::new(k, d);
                            data.num_sing_points = Some(BigInt::from(ns));
                            data.mu_total = mu.map(BigInt::from);
                            data.nodal_only = nodal;
                            data.non_dicritical = dicritical;
                            let report = sing_count_bound(&data).expect("valid data");
                            match report.verdict {
                                Verdict::Fail => failed = true,
                                Verdict::Pass if failed => {
                                    failure = Some(format!(
                                        "k={k} d={d} nodal={nodal} non_dicritical={dicritical} \
                                         mu={mu:?}: verdict flipped back to pass at \
                                         num_sing_points={ns}"
                                    ));
                                    break 'outer;
                                }
                                _ => {}
                            }
                        }
                    }
                }
            }
        }
    }
    SuiteReport { name: "sing-count-monotonicity", cases, failure }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for report in run_all() {
            assert!(
                report.passed(),
                "suite {} failed: {}",
                report.name,
                report.failure.unwrap()
            );
            assert!(report.cases > 0, "suite {} ran no cases", report.name);
        }
    }

    #[test]
    fn there_are_enough_suites() {
        assert!(run_all().len() >= 8);
    }

    #[test]
    fn suite_names_are_unique() {
        let mut names: Vec<_> = run_all().iter().map(|r| r.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), run_all().len());
    }

    #[test]
    fn closed_vs_integral_stays_within_its_case_budget() {
        let report = residue_closed_vs_integral();
        assert!(report.cases <= 10_000, "ran {} cases", report.cases);
    }

    #[test]
    fn corrupted_elementary_symmetric_is_caught() {
        // feed the comparison a deliberately broken evaluator (it silently
        // drops the last degree) and demand a concrete counterexample
        let broken = |degrees: &[BigInt], m: usize| {
            let cut = &degrees[..degrees.len().saturating_sub(1)];
            elementary_symmetric(cut, m)
        };
        let report = closed_vs_integral_with(&broken);
        assert!(!report.passed(), "the corrupted evaluator was not caught");
        let message = report.failure.unwrap();
        assert!(
            message.contains("n=") && message.contains("degrees="),
            "counterexample must pin the failing inputs, got: {message}"
        );
    }
}
