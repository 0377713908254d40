//! Residue sums of one-dimensional foliations along invariant subvarieties.
//!
//! The general statement: for a foliation on P^n leaving a smooth
//! complete intersection V of codimension k invariant, the total residue of
//! a weighted-homogeneous symmetric polynomial φ of degree n−k in the Chern
//! roots of the normal bundle N equals ∫ φ(c(N)) · c_k(N). Over projective
//! space everything is polynomial in the multidegree, which yields closed
//! forms for the two classical choices φ = c_{n−k} and φ = c_1^{n−k}. Both
//! routes are implemented; tests and the verification suites compare them
//! exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chern::{self, elementary_symmetric, FormalBundle};
use crate::error::{Error, Result};
use crate::ring::GradedClass;

/// A polynomial in the Chern classes c_1, ..., c_k of a rank-k bundle,
/// weighted-homogeneous with c_i carrying weight i.
///
/// Terms map an exponent vector (e_1, ..., e_k) to an integer coefficient;
/// the weighted degree Σ i·e_i is the same for every term (checked on
/// construction). The zero polynomial is allowed and has weighted degree 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPolynomial {
    num_vars: usize,
    weighted_degree: usize,
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl SymmetricPolynomial {
    /// Builds a polynomial from (exponent vector, coefficient) pairs.
    /// Duplicate exponent vectors are summed; zero terms are dropped.
    pub fn new(num_vars: usize, terms: Vec<(Vec<usize>, BigInt)>) -> Result<Self> {
        let mut map: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (exps, coeff) in terms {
            if exps.len() != num_vars {
                return Err(Error::InvalidInput(format!(
                    "term has {} exponents but the polynomial has {} variables",
                    exps.len(),
                    num_vars
                )));
            }
            *map.entry(exps).or_insert_with(BigInt::zero) += coeff;
        }
        map.retain(|_, c| !c.is_zero());

        let mut weighted_degree = None;
        for exps in map.keys() {
            let deg: usize = exps.iter().enumerate().map(|(i, e)| (i + 1) * e).sum();
            match weighted_degree {
                None => weighted_degree = Some(deg),
                Some(d) if d != deg => {
                    return Err(Error::InvalidInput(format!(
                        "polynomial is not weighted-homogeneous: \
                         found terms of weighted degree {d} and {deg}"
                    )));
                }
                Some(_) => {}
            }
        }
        Ok(Self {
            num_vars,
            weighted_degree: weighted_degree.unwrap_or(0),
            terms: map,
        })
    }

    /// The constant polynomial 1 (weighted degree 0).
    pub fn one(num_vars: usize) -> Self {
        Self {
            num_vars,
            weighted_degree: 0,
            terms: BTreeMap::from([(vec![0; num_vars], BigInt::one())]),
        }
    }

    /// The zero polynomial, carrying a nominal weighted degree: zero is
    /// homogeneous of every degree, and e_m of k variables for m > k is
    /// exactly this polynomial.
    pub fn zero(num_vars: usize, weighted_degree: usize) -> Self {
        Self {
            num_vars,
            weighted_degree,
            terms: BTreeMap::new(),
        }
    }

    /// The single Chern variable c_j, 1 ≤ j ≤ num_vars.
    pub fn chern_variable(num_vars: usize, j: usize) -> Result<Self> {
        if j < 1 || j > num_vars {
            return Err(Error::InvalidInput(format!(
                "c_{j} is not among the variables c_1..c_{num_vars}"
            )));
        }
        let mut exps = vec![0; num_vars];
        exps[j - 1] = 1;
        Self::new(num_vars, vec![(exps, BigInt::one())])
    }

    /// The power c_1^e; e = 0 gives the constant 1.
    pub fn c1_power(num_vars: usize, e: usize) -> Result<Self> {
        if e == 0 {
            return Ok(Self::one(num_vars));
        }
        if num_vars == 0 {
            return Err(Error::InvalidInput(
                "c_1 does not exist for a rank-0 bundle".into(),
            ));
        }
        let mut exps = vec![0; num_vars];
        exps[0] = e;
        Self::new(num_vars, vec![(exps, BigInt::one())])
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// The common weighted degree Σ i·e_i of the terms.
    pub fn weighted_degree(&self) -> usize {
        self.weighted_degree
    }

    /// The terms in exponent-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Substitutes c_j ↦ degree-j part of the bundle's total Chern class and
    /// evaluates in the ambient ring.
    pub fn evaluate(&self, bundle: &FormalBundle) -> Result<GradedClass> {
        let n = bundle.ambient_dim();
        let mut acc = GradedClass::zero(n);
        for (exps, coeff) in &self.terms {
            let mut term = GradedClass::one(n);
            for (idx, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = idx + 1;
                // c_j vanishes in the ring above the truncation degree
                let cj = if j > n {
                    GradedClass::zero(n)
                } else {
                    bundle.chern_class(j)?
                };
                term = term.mul(&cj.pow(e))?;
            }
            acc = acc.add(&term.scale(coeff))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for SymmetricPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_constant_term = exps.iter().all(|&e| e == 0);
            if !coeff.is_one() || is_constant_term {
                write!(f, "{coeff}")?;
                if !is_constant_term {
                    write!(f, " ")?;
                }
            }
            let mut wrote_var = false;
            for (idx, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_var {
                    write!(f, " ")?;
                }
                write!(f, "c_{}", idx + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote_var = true;
            }
        }
        Ok(())
    }
}

/// How a residue sum was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueMethod {
    /// Polynomial closed form in the multidegree.
    ClosedForm,
    /// Integration of φ(c(N))·c_k(N) in the truncated ring.
    RingIntegral,
}

impl fmt::Display for ResidueMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueMethod::ClosedForm => write!(f, "closed-form"),
            ResidueMethod::RingIntegral => write!(f, "ring-integral"),
        }
    }
}

/// A residue sum together with the inputs it was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueResult {
    pub value: BigInt,
    pub method: ResidueMethod,
    pub ambient_dim: usize,
    pub codimension: usize,
    /// The multidegree, when the invariant subvariety came as a complete
    /// intersection of hypersurfaces.
    pub degrees: Option<Vec<BigInt>>,
    /// Human-readable description of φ.
    pub phi: String,
}

fn check_positive_degrees(degrees: &[BigInt]) -> Result<()> {
    for (i, d) in degrees.iter().enumerate() {
        if *d < BigInt::one() {
            return Err(Error::InvalidInput(format!(
                "hypersurface degrees must be positive; degrees[{i}] = {d}"
            )));
        }
    }
    Ok(())
}

fn check_codimension(n: usize, k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidInput(
            "at least one hypersurface degree is required".into(),
        ));
    }
    if k > n {
        return Err(Error::InvalidInput(format!(
            "codimension k = {k} exceeds the ambient dimension n = {n}"
        )));
    }
    Ok(())
}

fn product(degrees: &[BigInt]) -> BigInt {
    degrees.iter().fold(BigInt::one(), |acc, d| acc * d)
}

fn describe_top(m: usize) -> String {
    if m == 0 {
        "1".to_string()
    } else {
        format!("c_{m}")
    }
}

fn describe_c1_power(m: usize) -> String {
    match m {
        0 => "1".to_string(),
        1 => "c_1".to_string(),
        _ => format!("c_1^{m}"),
    }
}

/// Total residue of φ along an invariant subvariety with normal bundle
/// `normal`, computed as ∫ φ(c(N)) · c_k(N) in the ambient ring.
///
/// φ must be a polynomial in the k Chern variables of N and
/// weighted-homogeneous of degree n − k.
pub fn residue_sum_general(
    n: usize,
    normal: &FormalBundle,
    phi: &SymmetricPolynomial,
) -> Result<ResidueResult> {
    if normal.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: normal.ambient_dim(),
        });
    }
    if normal.rank() < 0 {
        return Err(Error::InvalidInput(format!(
            "the normal bundle of a subvariety must have non-negative rank, got {}",
            normal.rank()
        )));
    }
    let k = normal.rank() as usize;
    if k > n {
        return Err(Error::InvalidInput(format!(
            "codimension k = {k} exceeds the ambient dimension n = {n}"
        )));
    }
    if phi.num_vars() != k {
        return Err(Error::InvalidInput(format!(
            "phi uses {} Chern variables but the normal bundle has rank {k}",
            phi.num_vars()
        )));
    }
    if phi.weighted_degree() != n - k {
        return Err(Error::InvalidInput(format!(
            "phi must be weighted-homogeneous of degree n - k = {}, got {}",
            n - k,
            phi.weighted_degree()
        )));
    }
    let evaluated = phi.evaluate(normal)?;
    let ck = GradedClass::monomial(n, k, normal.total_chern().coeff(k))?;
    let value = evaluated.mul(&ck)?.integrate();
    Ok(ResidueResult {
        value,
        method: ResidueMethod::RingIntegral,
        ambient_dim: n,
        codimension: k,
        degrees: None,
        phi: phi.to_string(),
    })
}

/// Closed form for φ = c_{n−k} along a complete intersection of multidegree
/// (d_1, ..., d_k): e_{n−k}(d_1, ..., d_k) · d_1···d_k.
pub fn residue_sum_top_chern(n: usize, degrees: &[BigInt]) -> Result<ResidueResult> {
    let k = degrees.len();
    check_codimension(n, k)?;
    check_positive_degrees(degrees)?;
    let value = elementary_symmetric(degrees, n - k) * product(degrees);
    Ok(ResidueResult {
        value,
        method: ResidueMethod::ClosedForm,
        ambient_dim: n,
        codimension: k,
        degrees: Some(degrees.to_vec()),
        phi: describe_top(n - k),
    })
}

/// Closed form for φ = c_1^{n−k} along a complete intersection of
/// multidegree (d_1, ..., d_k): (d_1 + ... + d_k)^{n−k} · d_1···d_k.
pub fn residue_sum_c1_power(n: usize, degrees: &[BigInt]) -> Result<ResidueResult> {
    let k = degrees.len();
    check_codimension(n, k)?;
    check_positive_degrees(degrees)?;
    let sum = degrees.iter().fold(BigInt::zero(), |acc, d| acc + d);
    let mut power = BigInt::one();
    for _ in 0..(n - k) {
        power *= &sum;
    }
    Ok(ResidueResult {
        value: power * product(degrees),
        method: ResidueMethod::ClosedForm,
        ambient_dim: n,
        codimension: k,
        degrees: Some(degrees.to_vec()),
        phi: describe_c1_power(n - k),
    })
}

/// The ring-integral route for φ = c_{n−k} on the same complete
/// intersection, for exact comparison against [`residue_sum_top_chern`].
pub fn residue_sum_top_chern_ring(n: usize, degrees: &[BigInt]) -> Result<ResidueResult> {
    let k = degrees.len();
    check_codimension(n, k)?;
    check_positive_degrees(degrees)?;
    let normal = FormalBundle::direct_sum_of_lines(n, degrees);
    // e_{n−k} of k Chern roots: the variable c_{n−k} when it exists, the
    // constant 1 at n = k, and the zero polynomial when n − k exceeds k.
    let phi = if n == k {
        SymmetricPolynomial::one(k)
    } else if n - k <= k {
        SymmetricPolynomial::chern_variable(k, n - k)?
    } else {
        SymmetricPolynomial::zero(k, n - k)
    };
    let mut result = residue_sum_general(n, &normal, &phi)?;
    result.degrees = Some(degrees.to_vec());
    Ok(result)
}

/// The ring-integral route for φ = c_1^{n−k}, for exact comparison against
/// [`residue_sum_c1_power`].
pub fn residue_sum_c1_power_ring(n: usize, degrees: &[BigInt]) -> Result<ResidueResult> {
    let k = degrees.len();
    check_codimension(n, k)?;
    check_positive_degrees(degrees)?;
    let normal = FormalBundle::direct_sum_of_lines(n, degrees);
    let phi = SymmetricPolynomial::c1_power(k, n - k)?;
    let mut result = residue_sum_general(n, &normal, &phi)?;
    result.degrees = Some(degrees.to_vec());
    Ok(result)
}

/// The binomial prefix Σ_{j=0}^{n−2} C(n+1, n−1−j) (−1)^{n+j} d^{j+1} of the
/// total Camacho–Sad residue; for n = 2 it collapses to 3d.
pub fn camacho_sad_degree_prefix(n: usize, d: &BigInt) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "the ambient dimension must be at least 2, got {n}"
        )));
    }
    let mut acc = BigInt::zero();
    let mut d_pow = d.clone(); // d^{j+1}, starting at j = 0
    for j in 0..=(n - 2) {
        let term = chern::binomial(n + 1, n - 1 - j) * &d_pow;
        acc += chern::sign(n + j) * term;
        d_pow *= d;
    }
    Ok(acc)
}

/// Total Camacho–Sad residue of a degree-d invariant hypersurface D ⊂ P^n
/// with Euler characteristic `chi` and total Milnor number `mu_total`:
///
/// Σ_{j=0}^{n−2} C(n+1, n−1−j) (−1)^{n+j} d^{j+1} − (−1)^n·chi + mu_total.
pub fn camacho_sad_total(n: usize, d: &BigInt, chi: &BigInt, mu_total: &BigInt) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "the ambient dimension must be at least 2, got {n}"
        )));
    }
    if *d < BigInt::one() {
        return Err(Error::InvalidInput(format!(
            "the hypersurface degree must be positive, got {d}"
        )));
    }
    if chern::is_negative(mu_total) {
        return Err(Error::InvalidInput(format!(
            "the total Milnor number must be non-negative, got {mu_total}"
        )));
    }
    let prefix = camacho_sad_degree_prefix(n, d)?;
    Ok(prefix - chern::sign(n) * chi + mu_total)
}
