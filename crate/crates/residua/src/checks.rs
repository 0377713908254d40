//! Necessary conditions for a plane curve to be an invariant algebraic
//! solution of a one-dimensional foliation.
//!
//! Every check returns a three-valued verdict with an exact integer
//! witness: `pass` means the data are consistent with the hypothesis,
//! `fail` means they certify the contrapositive — the curve cannot be an
//! (irreducible) invariant algebraic solution — and `inconclusive` means a
//! needed datum was not supplied. Checks never guess: a missing value is
//! reported, not defaulted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::chern;
use crate::error::{Error, Result};

/// Outcome of a necessary-condition check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// A check's verdict plus the exact quantities it was decided on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check_name: String,
    pub verdict: Verdict,
    /// Named exact integers, in a fixed order, sufficient to re-derive the
    /// verdict by hand.
    pub witness: Vec<(String, BigInt)>,
    /// Free-text caveats: skipped bounds, binding hypotheses, and the like.
    pub notes: Vec<String>,
}

impl CheckReport {
    fn witness_entry(&mut self, name: &str, value: BigInt) {
        self.witness.push((name.to_string(), value));
    }
}

/// Divisibility of μ_total − (−1)^n·χ(D) by the degree of an invariant
/// hypersurface D ⊂ P^n: a necessary condition extracted from the total
/// Camacho–Sad residue being a power of the degree.
pub fn congruence_check(
    n: usize,
    degree: &BigInt,
    chi: &BigInt,
    mu_total: &BigInt,
) -> Result<CheckReport> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "the ambient dimension must be at least 2, got {n}"
        )));
    }
    if *degree < BigInt::one() {
        return Err(Error::InvalidInput(format!(
            "the hypersurface degree must be positive, got {degree}"
        )));
    }
    let difference = mu_total - chern::sign(n) * chi;
    let residue = difference.mod_floor(degree);
    let verdict = if residue.is_zero() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = CheckReport {
        check_name: "congruence".to_string(),
        verdict,
        witness: Vec::new(),
        notes: Vec::new(),
    };
    report.witness_entry("difference", difference);
    report.witness_entry("modulus", degree.clone());
    report.witness_entry("residue", residue);
    if verdict == Verdict::Fail {
        report.notes.push(
            "mu_total - (-1)^n chi is not divisible by the degree, so no foliation leaves \
             a hypersurface with these invariants invariant"
                .to_string(),
        );
    }
    Ok(report)
}

/// The monic integer polynomial P whose value at the degree of an invariant
/// hypersurface vanishes:
///
/// P(X) = X^n + Σ_{j=1}^{n−1} b_j X^j + b_0, with
/// b_j = −C(n+1, n−j)·(−1)^{n−1+j} and b_0 = (−1)^n·χ − μ_total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionPolynomial {
    /// Coefficients in ascending degree order; the leading one is 1.
    coeffs: Vec<BigInt>,
}

impl AdjunctionPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients b_0, ..., b_{n−1}, 1 in ascending degree order.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact evaluation by Horner's rule.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn is_root(&self, x: &BigInt) -> bool {
        self.evaluate(x).is_zero()
    }
}

impl std::fmt::Display for AdjunctionPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.sign() == num_bigint::Sign::Minus {
                    write!(f, "-")?;
                }
            } else {
                write!(
                    f,
                    " {} ",
                    if c.sign() == num_bigint::Sign::Minus { "-" } else { "+" }
                )?;
            }
            if j == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if j >= 1 {
                write!(f, "X")?;
                if j > 1 {
                    write!(f, "^{j}")?;
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Builds the polynomial from the invariants of a candidate hypersurface in
/// P^n. If the hypersurface of degree k is invariant and χ satisfies the
/// adjunction identity, then P(k) = 0.
pub fn adjunction_polynomial(n: usize, chi: &BigInt, mu_total: &BigInt) -> Result<AdjunctionPolynomial> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "the ambient dimension must be at least 2, got {n}"
        )));
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = chern::sign(n) * chi - mu_total;
    for (j, c) in coeffs.iter_mut().enumerate().take(n).skip(1) {
        *c = -(chern::binomial(n + 1, n - j) * chern::sign(n - 1 + j));
    }
    coeffs[n] = BigInt::one();
    Ok(AdjunctionPolynomial { coeffs })
}

/// Minimal degree of a singular irreducible invariant curve in the plane:
/// such a curve has degree at least 3. Reducible curves escape the bound —
/// a pair of crossing lines is a singular invariant "conic".
pub fn min_degree_check(
    irreducible: bool,
    has_singularity: bool,
    curve_degree: &BigInt,
) -> CheckReport {
    let binding = irreducible && has_singularity && *curve_degree <= BigInt::from(2);
    let verdict = if binding { Verdict::Fail } else { Verdict::Pass };
    let mut report = CheckReport {
        check_name: "min-degree".to_string(),
        verdict,
        witness: Vec::new(),
        notes: Vec::new(),
    };
    report.witness_entry("curve_degree", curve_degree.clone());
    if binding {
        report.notes.push(
            "a singular irreducible invariant algebraic curve has degree at least 3"
                .to_string(),
        );
    } else if !irreducible && has_singularity && *curve_degree <= BigInt::from(2) {
        report.notes.push(
            "a reducible singular curve of degree at most 2 can be invariant; \
             irreducibility is the binding hypothesis"
                .to_string(),
        );
    }
    report
}

/// The Schwartz-type count 2k − k² + d·k + μ_total bounding the number of
/// singular points of the foliation on an invariant curve of degree k,
/// where d is the foliation degree.
pub fn schwartz_sum(curve_degree: &BigInt, foliation_degree: &BigInt, mu_total: &BigInt) -> BigInt {
    let k = curve_degree;
    BigInt::from(2) * k - k * k + foliation_degree * k + mu_total
}

/// All the data a singular-point-count check can draw on. The two degrees
/// are required; everything else is optional and never defaulted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFoliationData {
    /// Degree of the foliation (d ≥ 0).
    pub foliation_degree: BigInt,
    /// Degree of the candidate invariant curve (k ≥ 1).
    pub curve_degree: BigInt,
    /// Number of singular points of the foliation lying on the curve.
    pub num_sing_points: Option<BigInt>,
    /// Total Milnor number of the curve.
    pub mu_total: Option<BigInt>,
    /// Euler characteristic of the curve.
    pub chi: Option<BigInt>,
    pub irreducible: bool,
    pub nodal_only: bool,
    pub non_dicritical: bool,
}

impl CurveFoliationData {
    /// Plain data with only the required degrees set.
    pub fn new(curve_degree: impl Into<BigInt>, foliation_degree: impl Into<BigInt>) -> Self {
        Self {
            foliation_degree: foliation_degree.into(),
            curve_degree: curve_degree.into(),
            num_sing_points: None,
            mu_total: None,
            chi: None,
            irreducible: false,
            nodal_only: false,
            non_dicritical: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.curve_degree < BigInt::one() {
            return Err(Error::InvalidInput(format!(
                "curve_degree must be positive, got {}",
                self.curve_degree
            )));
        }
        if chern::is_negative(&self.foliation_degree) {
            return Err(Error::InvalidInput(format!(
                "foliation_degree must be non-negative, got {}",
                self.foliation_degree
            )));
        }
        if let Some(ns) = &self.num_sing_points {
            if chern::is_negative(ns) {
                return Err(Error::InvalidInput(format!(
                    "num_sing_points must be non-negative, got {ns}"
                )));
            }
        }
        if let Some(mu) = &self.mu_total {
            if chern::is_negative(mu) {
                return Err(Error::InvalidInput(format!(
                    "mu_total must be non-negative, got {mu}"
                )));
            }
        }
        Ok(())
    }
}

/// Evaluates every singular-point-count inequality the supplied data
/// allows:
///
/// - always: #Sing ≤ k(d − 1) + 2 (needs `num_sing_points`);
/// - with `mu_total`: #Sing ≤ 2k − k² + dk + μ (needs `num_sing_points`);
/// - `nodal_only`: k ≤ d + 2 (no count needed);
/// - `non_dicritical`: #Sing ≤ d(d + 1) (needs `num_sing_points`).
///
/// A violated bound gives `fail`; otherwise a bound that needed a missing
/// `num_sing_points` gives `inconclusive`; otherwise `pass`. Failures are
/// contrapositive certificates: the data cannot come from an irreducible
/// invariant algebraic solution.
pub fn sing_count_bound(data: &CurveFoliationData) -> Result<CheckReport> {
    data.validate()?;
    let k = &data.curve_degree;
    let d = &data.foliation_degree;

    let mut report = CheckReport {
        check_name: "sing-count".to_string(),
        verdict: Verdict::Pass,
        witness: Vec::new(),
        notes: Vec::new(),
    };
    report.witness_entry("curve_degree", k.clone());
    report.witness_entry("foliation_degree", d.clone());

    let mut violated = false;
    let mut starved = false; // a bound wanted num_sing_points and it was missing

    // bounds of the form #Sing <= limit
    let mut count_bounds: Vec<(&str, BigInt)> =
        vec![("count_bound", k * (d - BigInt::one()) + 2)];
    if let Some(mu) = &data.mu_total {
        count_bounds.push(("schwartz_bound", schwartz_sum(k, d, mu)));
    }
    if data.non_dicritical {
        count_bounds.push(("non_dicritical_bound", d * (d + BigInt::one())));
    }

    match &data.num_sing_points {
        Some(ns) => {
            report.witness_entry("num_sing_points", ns.clone());
            for (name, limit) in count_bounds {
                if *ns > limit {
                    violated = true;
                    report
                        .notes
                        .push(format!("{name} violated: {ns} > {limit}"));
                }
                report.witness_entry(name, limit);
            }
        }
        None => {
            starved = !count_bounds.is_empty();
            for (name, limit) in count_bounds {
                report.witness_entry(name, limit);
            }
            report
                .notes
                .push("num_sing_points not supplied; point-count bounds not decided".to_string());
        }
    }

    if data.nodal_only {
        let limit = d + BigInt::from(2);
        report.witness_entry("nodal_degree_bound", limit.clone());
        if *k > limit {
            violated = true;
            report
                .notes
                .push(format!("nodal_degree_bound violated: {k} > {limit}"));
        }
    }

    if !data.irreducible {
        report.notes.push(
            "bounds assume an irreducible invariant algebraic solution; a failure certifies \
             the data cannot come from one"
                .to_string(),
        );
    }

    report.verdict = if violated {
        Verdict::Fail
    } else if starved {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn congruence_passes_on_the_conic() {
        // n = 2, k = 2, χ = 3, μ = 1: μ − χ = −2 ≡ 0 (mod 2)
        let r = congruence_check(2, &bi(2), &bi(3), &bi(1)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let residue = r.witness.iter().find(|(n, _)| n == "residue").unwrap();
        assert_eq!(residue.1, bi(0));
    }

    #[test]
    fn congruence_fails_with_a_witness() {
        // n = 2, k = 3, χ = 3, μ = 1: −2 ≡ 1 (mod 3)
        let r = congruence_check(2, &bi(3), &bi(3), &bi(1)).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let residue = r.witness.iter().find(|(n, _)| n == "residue").unwrap();
        assert_eq!(residue.1, bi(1));
    }

    #[test]
    fn congruence_handles_odd_dimensions() {
        // n = 3: difference is μ + χ
        let r = congruence_check(3, &bi(2), &bi(4), &bi(0)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let diff = r.witness.iter().find(|(n, _)| n == "difference").unwrap();
        assert_eq!(diff.1, bi(4));
    }

    #[test]
    fn congruence_validates() {
        assert!(congruence_check(1, &bi(2), &bi(1), &bi(0)).is_err());
        assert!(congruence_check(2, &bi(0), &bi(1), &bi(0)).is_err());
    }

    #[test]
    fn polynomial_for_the_conic_factors() {
        // n = 2, χ = 3, μ = 1: P(X) = X² − 3X + 2 = (X−1)(X−2)
        let p = adjunction_polynomial(2, &bi(3), &bi(1)).unwrap();
        assert_eq!(p.coefficients(), &[bi(2), bi(-3), bi(1)]);
        assert!(p.is_root(&bi(2)));
        assert!(p.is_root(&bi(1)));
        assert!(!p.is_root(&bi(3)));
        assert_eq!(p.to_string(), "X^2 - 3X + 2");
    }

    #[test]
    fn polynomial_vanishes_at_the_adjunction_degree() {
        // χ from the adjunction identity makes the degree a root
        for (n, d, mu) in [(2usize, 2i64, 1i64), (3, 2, 0), (4, 2, 1), (5, 3, 4)] {
            let chi =
                crate::singularity::adjunction_euler(n, &bi(d), &bi(mu)).unwrap();
            let p = adjunction_polynomial(n, &chi, &bi(mu)).unwrap();
            assert!(p.is_root(&bi(d)), "n={n}, d={d}, mu={mu}, P = {p}");
        }
    }

    #[test]
    fn polynomial_horner_matches_naive() {
        let p = adjunction_polynomial(4, &bi(7), &bi(3)).unwrap();
        let x = bi(5);
        let mut naive = BigInt::zero();
        let mut x_pow = BigInt::one();
        for c in p.coefficients() {
            naive += c * &x_pow;
            x_pow *= &x;
        }
        assert_eq!(p.evaluate(&x), naive);
    }

    #[test]
    fn min_degree_flags_singular_irreducible_conics() {
        let r = min_degree_check(true, true, &bi(2));
        assert_eq!(r.verdict, Verdict::Fail);
        // reducible pairs of lines escape, with an explanatory note
        let r = min_degree_check(false, true, &bi(2));
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(!r.notes.is_empty());
        // smooth or high-degree curves pass silently
        assert_eq!(min_degree_check(true, false, &bi(2)).verdict, Verdict::Pass);
        assert_eq!(min_degree_check(true, true, &bi(3)).verdict, Verdict::Pass);
    }

    #[test]
    fn schwartz_sum_examples() {
        // k = 1, d = 2, μ = 0: 2 − 1 + 2 = 3
        assert_eq!(schwartz_sum(&bi(1), &bi(2), &bi(0)), bi(3));
        // k = 3, d = 2, μ = 1: 6 − 9 + 6 + 1 = 4
        assert_eq!(schwartz_sum(&bi(3), &bi(2), &bi(1)), bi(4));
    }

    #[test]
    fn sing_count_passes_with_room() {
        let mut data = CurveFoliationData::new(3, 2);
        data.num_sing_points = Some(bi(5));
        let r = sing_count_bound(&data).unwrap();
        // 5 ≤ 3·1 + 2
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn sing_count_fails_beyond_the_count_bound() {
        let mut data = CurveFoliationData::new(3, 2);
        data.num_sing_points = Some(bi(6));
        let r = sing_count_bound(&data).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.notes.iter().any(|n| n.contains("count_bound")));
    }

    #[test]
    fn sing_count_nodal_bound_fails_without_a_count() {
        // nodal invariant curves have degree ≤ d + 2 = 4 < 5: fail even
        // though num_sing_points is missing
        let mut data = CurveFoliationData::new(5, 2);
        data.nodal_only = true;
        let r = sing_count_bound(&data).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn sing_count_inconclusive_when_starved() {
        let data = CurveFoliationData::new(3, 2);
        let r = sing_count_bound(&data).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn sing_count_uses_schwartz_when_mu_is_known() {
        // k = 3, d = 2, μ = 1: schwartz bound 4 < count bound 5
        let mut data = CurveFoliationData::new(3, 2);
        data.num_sing_points = Some(bi(5));
        data.mu_total = Some(bi(1));
        let r = sing_count_bound(&data).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.notes.iter().any(|n| n.contains("schwartz_bound")));
    }

    #[test]
    fn sing_count_non_dicritical_bound() {
        // d(d+1) = 6; 7 singular points violate it
        let mut data = CurveFoliationData::new(4, 2);
        data.num_sing_points = Some(bi(7));
        data.non_dicritical = true;
        let r = sing_count_bound(&data).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.notes.iter().any(|n| n.contains("non_dicritical_bound")));
    }

    #[test]
    fn sing_count_validates() {
        let mut data = CurveFoliationData::new(0, 2);
        assert!(sing_count_bound(&data).is_err());
        data = CurveFoliationData::new(2, -1);
        assert!(sing_count_bound(&data).is_err());
        data = CurveFoliationData::new(2, 2);
        data.num_sing_points = Some(bi(-3));
        assert!(sing_count_bound(&data).is_err());
    }

    #[test]
    fn sing_count_failures_are_monotone_in_the_count() {
        // raising the reported number of singular points can never turn a
        // fail back into a pass
        for k in 1..=5i64 {
            for d in 0..=4i64 {
                for nodal in [false, true] {
                    for dicritical in [false, true] {
                        let mut failed = false;
                        for ns in 0..=30i64 {
                            let mut data = CurveFoliationData::new(k, d);
                            data.num_sing_points = Some(bi(ns));
                            data.nodal_only = nodal;
                            data.non_dicritical = dicritical;
                            let r = sing_count_bound(&data).unwrap();
                            match r.verdict {
                                Verdict::Fail => failed = true,
                                Verdict::Pass => assert!(
                                    !failed,
                                    "fail flipped back to pass at k={k} d={d} ns={ns}"
                                ),
                                Verdict::Inconclusive => unreachable!("count supplied"),
                            }
                        }
                    }
                }
            }
        }
    }
}
