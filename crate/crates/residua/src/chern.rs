//! Formal vector bundles over P^n and the combinatorics of their Chern
//! classes.
//!
//! A [`FormalBundle`] is a rank together with a total Chern class in
//! Z[h]/(h^{n+1}); the rank may be negative, so virtual differences such as
//! TP^n − N are first-class citizens. The module also houses the
//! combinatorial side of the calculus: elementary symmetric values of degree
//! lists, enumeration of compositions (ordered multi-indices), and the
//! multi-index expansion of an inverse total Chern class, which is the
//! closed-form counterpart of series inversion in the ring.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::GradedClass;

/// A formal bundle on P^n: a rank (possibly negative, for virtual
/// differences) and a total Chern class with constant term 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalBundle {
    ambient_dim: usize,
    rank: i64,
    total_chern: GradedClass,
}

// ---- Constructors ----

impl FormalBundle {
    /// Wraps a rank and total Chern class; the class must have constant
    /// term 1.
    pub fn new(rank: i64, total_chern: GradedClass) -> Result<Self> {
        if !total_chern.coeff(0).is_one() {
            return Err(Error::InvalidInput(format!(
                "total Chern class must have constant term 1, got {}",
                total_chern.coeff(0)
            )));
        }
        Ok(Self {
            ambient_dim: total_chern.ambient_dim(),
            rank,
            total_chern,
        })
    }

    /// The tangent bundle of P^n: rank n, total Chern class (1 + h)^{n+1}.
    pub fn tangent_projective(ambient_dim: usize) -> Result<Self> {
        if ambient_dim < 1 {
            return Err(Error::InvalidInput(
                "projective space must have dimension at least 1".into(),
            ));
        }
        let one_plus_h = GradedClass::from_ints(ambient_dim, &[1, 1]).expect("fits");
        Self::new(ambient_dim as i64, one_plus_h.pow(ambient_dim + 1))
    }

    /// The line bundle O(d) on P^n, with total Chern class 1 + d·h.
    pub fn line_bundle(ambient_dim: usize, degree: impl Into<BigInt>) -> Self {
        let degree = degree.into();
        let coeffs = if ambient_dim == 0 {
            vec![BigInt::one()]
        } else {
            vec![BigInt::one(), degree]
        };
        Self {
            ambient_dim,
            rank: 1,
            total_chern: GradedClass::new(ambient_dim, coeffs).expect("fits"),
        }
    }

    /// O(d_1) ⊕ ... ⊕ O(d_k), with total Chern class Π (1 + d_i·h). An empty
    /// list yields the rank-0 bundle with class 1.
    pub fn direct_sum_of_lines(ambient_dim: usize, degrees: &[BigInt]) -> Self {
        let total = degrees.iter().fold(GradedClass::one(ambient_dim), |acc, d| {
            acc.mul(&Self::line_bundle(ambient_dim, d.clone()).total_chern)
                .expect("same ambient dimension")
        });
        Self {
            ambient_dim,
            rank: degrees.len() as i64,
            total_chern: total,
        }
    }
}

// ---- Accessors ----

impl FormalBundle {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn total_chern(&self) -> &GradedClass {
        &self.total_chern
    }

    /// The degree-`j` Chern class c_j, as a pure-degree class.
    pub fn chern_class(&self, j: usize) -> Result<GradedClass> {
        self.total_chern.degree_part(j)
    }
}

// ---- Bundle operations ----

impl FormalBundle {
    /// The dual bundle: c_j(E^∨) = (−1)^j c_j(E), same rank.
    pub fn dual(&self) -> Self {
        let coeffs = self
            .total_chern
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self {
            ambient_dim: self.ambient_dim,
            rank: self.rank,
            total_chern: GradedClass::new(self.ambient_dim, coeffs).expect("same length"),
        }
    }

    /// The virtual difference E − F: rank subtracts, the total Chern class
    /// is c(E)·c(F)^{-1}.
    pub fn virtual_difference(&self, other: &Self) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        let total = self
            .total_chern
            .mul(&other.total_chern.invert().expect("constant term is 1 by construction"))?;
        Ok(Self {
            ambient_dim: self.ambient_dim,
            rank: self.rank - other.rank,
            total_chern: total,
        })
    }
}

/// Top Chern class of E^∨ ⊗ L for an honest bundle E of rank r and a line
/// bundle L: the pure degree-r class Σ_{j=0}^{r} (−1)^j c_j(E) c_1(L)^{r−j}.
///
/// "Honest" means 0 ≤ r ≤ n and every Chern class above degree r vanishes;
/// both are checked.
pub fn top_chern_dual_tensor_line(
    bundle: &FormalBundle,
    line: &FormalBundle,
) -> Result<GradedClass> {
    if bundle.ambient_dim != line.ambient_dim {
        return Err(Error::DimensionMismatch {
            left: bundle.ambient_dim,
            right: line.ambient_dim,
        });
    }
    if line.rank != 1 {
        return Err(Error::InvalidInput(format!(
            "second argument must be a line bundle (rank 1), got rank {}",
            line.rank
        )));
    }
    let n = bundle.ambient_dim;
    if bundle.rank < 0 || bundle.rank as usize > n {
        return Err(Error::InvalidInput(format!(
            "bundle rank {} is outside 0..={}, so it has no top Chern class here",
            bundle.rank, n
        )));
    }
    let r = bundle.rank as usize;
    for j in (r + 1)..=n {
        if !bundle.total_chern.coeff(j).is_zero() {
            return Err(Error::InvalidInput(format!(
                "bundle of rank {r} has a nonzero Chern class in degree {j}; \
                 not an honest rank-{r} bundle"
            )));
        }
    }
    let d = line.total_chern.coeff(1);
    // Walk j = r, r-1, ..., 0, keeping the running power d^{r-j}.
    let mut acc = BigInt::zero();
    let mut d_pow = BigInt::one();
    for j in (0..=r).rev() {
        let term = bundle.total_chern.coeff(j) * &d_pow;
        if j % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
        d_pow *= &d;
    }
    GradedClass::monomial(n, r, acc)
}

/// The elementary symmetric value e_m(d_1, ..., d_k); e_0 = 1 (also on the
/// empty list) and e_m = 0 for m > k.
pub fn elementary_symmetric(degrees: &[BigInt], m: usize) -> BigInt {
    let mut e = vec![BigInt::zero(); m + 1];
    e[0] = BigInt::one();
    for (idx, d) in degrees.iter().enumerate() {
        let top = (idx + 1).min(m);
        for i in (1..=top).rev() {
            let add = &e[i - 1] * d;
            e[i] += add;
        }
    }
    e.swap_remove(m)
}

/// An ordered multi-index: a composition (l_1, ..., l_i) of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    parts: Vec<usize>,
}

impl MultiIndex {
    /// Wraps a non-empty list of positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("a multi-index needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidInput("multi-index parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // parts are non-empty by construction
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Every composition of `weight` into positive parts, ordered by first part
/// ascending and then recursively; there are exactly 2^{weight-1} of them.
pub fn enumerate_multiindices(weight: usize) -> Result<Vec<MultiIndex>> {
    if weight < 1 {
        return Err(Error::InvalidInput(
            "compositions are enumerated for weight at least 1".into(),
        ));
    }
    let mut out = Vec::with_capacity(1 << (weight - 1).min(20));
    let mut stack = Vec::new();
    fill_compositions(weight, &mut stack, &mut out);
    Ok(out)
}

fn fill_compositions(remaining: usize, stack: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
    if remaining == 0 {
        out.push(MultiIndex { parts: stack.clone() });
        return;
    }
    for first in 1..=remaining {
        stack.push(first);
        fill_compositions(remaining - first, stack, out);
        stack.pop();
    }
}

/// Degree-`j` part of c(E)^{-1} computed combinatorially:
/// Σ over compositions (l_1,...,l_i) of j of (−1)^i · c_{l_1}(E)···c_{l_i}(E).
///
/// For j = 0 the empty composition contributes 1; for j above the ambient
/// dimension the class h^j is zero in the ring, so the zero class comes back.
pub fn inverse_total_chern_multiindex(bundle: &FormalBundle, j: usize) -> GradedClass {
    let n = bundle.ambient_dim;
    if j == 0 {
        return GradedClass::one(n);
    }
    if j > n {
        return GradedClass::zero(n);
    }
    let mut acc = BigInt::zero();
    for mi in enumerate_multiindices(j).expect("weight >= 1") {
        let mut prod = BigInt::one();
        for &part in mi.parts() {
            prod *= bundle.total_chern.coeff(part);
            if prod.is_zero() {
                break;
            }
        }
        if mi.len() % 2 == 1 {
            acc -= prod;
        } else {
            acc += prod;
        }
    }
    GradedClass::monomial(n, j, acc).expect("j <= n")
}

/// Binomial coefficient C(n, k) as an exact integer; zero for k > n.
pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// (−1)^k as an exact integer.
pub(crate) fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// True when the integer is negative; used by precondition checks that want
/// a readable call site.
pub(crate) fn is_negative(value: &BigInt) -> bool {
    value.is_negative()
}
