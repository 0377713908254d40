//! Exact arithmetic in Z[h]/(h^{n+1}).
//!
//! This is the integer cohomology ring of complex projective n-space, with
//! `h` the hyperplane class; `h^n` integrates to 1 against the fundamental
//! class and everything of degree above n is identically zero. Coefficients
//! are arbitrary-precision integers, so no computation ever overflows or
//! rounds.
//!
//! Representation invariant: a [`GradedClass`] over P^n always stores exactly
//! `n + 1` coefficients, indexed by degree. Values are immutable — every
//! operation is a pure function returning a fresh class.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An element of Z[h]/(h^{n+1}): `coeffs[i]` is the coefficient of `h^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedClass {
    ambient_dim: usize,
    coeffs: Vec<BigInt>,
}

// ---- Constructors ----

impl GradedClass {
    /// Builds a class from its coefficients in degree order, zero-padding up
    /// to degree `ambient_dim`. Lists longer than `ambient_dim + 1` are
    /// rejected rather than silently truncated.
    pub fn new(ambient_dim: usize, mut coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() > ambient_dim + 1 {
            return Err(Error::InvalidInput(format!(
                "coefficient list has {} entries but the ring of P^{} only holds degrees 0..={}",
                coeffs.len(),
                ambient_dim,
                ambient_dim
            )));
        }
        coeffs.resize(ambient_dim + 1, BigInt::zero());
        Ok(Self { ambient_dim, coeffs })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(ambient_dim: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(ambient_dim, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero class.
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            coeffs: vec![BigInt::zero(); ambient_dim + 1],
        }
    }

    /// The multiplicative identity.
    pub fn one(ambient_dim: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); ambient_dim + 1];
        coeffs[0] = BigInt::one();
        Self { ambient_dim, coeffs }
    }

    /// The class `coeff · h^degree`; errors when the degree does not exist
    /// in the ring.
    pub fn monomial(ambient_dim: usize, degree: usize, coeff: impl Into<BigInt>) -> Result<Self> {
        if degree > ambient_dim {
            return Err(Error::InvalidInput(format!(
                "degree {degree} does not exist in the ring of P^{ambient_dim}"
            )));
        }
        let mut coeffs = vec![BigInt::zero(); ambient_dim + 1];
        coeffs[degree] = coeff.into();
        Ok(Self { ambient_dim, coeffs })
    }
}

// ---- Accessors ----

impl GradedClass {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// All coefficients in degree order; the slice always has length
    /// `ambient_dim + 1`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `h^degree`; zero beyond the truncation degree.
    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }
}

// ---- Ring operations ----

impl GradedClass {
    /// Degreewise sum; both classes must live over the same P^n.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { ambient_dim: self.ambient_dim, coeffs })
    }

    /// Degreewise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { ambient_dim: self.ambient_dim, coeffs })
    }

    pub fn neg(&self) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Multiplies every coefficient by the same integer.
    pub fn scale(&self, factor: &BigInt) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            coeffs: self.coeffs.iter().map(|a| a * factor).collect(),
        }
    }

    /// Truncated product: the full polynomial product with every term of
    /// degree above `ambient_dim` discarded.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let n = self.ambient_dim;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Self { ambient_dim: n, coeffs })
    }

    /// Repeated truncated product; `pow(0)` is the identity.
    pub fn pow(&self, exponent: usize) -> Self {
        let mut acc = Self::one(self.ambient_dim);
        for _ in 0..exponent {
            acc = acc.mul(self).expect("same ambient dimension");
        }
        acc
    }

    /// Multiplicative inverse of a class with constant term 1, via the
    /// series recurrence b_0 = 1, b_m = -(a_1 b_{m-1} + ... + a_m b_0).
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotInvertible {
                constant: self.coeffs[0].to_string(),
            });
        }
        let n = self.ambient_dim;
        let mut inv = vec![BigInt::zero(); n + 1];
        inv[0] = BigInt::one();
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &inv[m - i];
                }
            }
            inv[m] = -acc;
        }
        Ok(Self { ambient_dim: n, coeffs: inv })
    }

    /// Pairs the class against the fundamental class of P^n: the coefficient
    /// of `h^n`.
    pub fn integrate(&self) -> BigInt {
        self.coeffs[self.ambient_dim].clone()
    }

    /// The pure degree-`j` part, as a class in the same ring; errors when
    /// the degree does not exist.
    pub fn degree_part(&self, degree: usize) -> Result<Self> {
        if degree > self.ambient_dim {
            return Err(Error::InvalidInput(format!(
                "degree {} does not exist in the ring of P^{}",
                degree, self.ambient_dim
            )));
        }
        Self::monomial(self.ambient_dim, degree, self.coeffs[degree].clone())
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if wrote {
                write!(f, " {} ", if c.sign() == num_bigint::Sign::Minus { "-" } else { "+" })?;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, "-")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "h")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gc(n: usize, coeffs: &[i64]) -> GradedClass {
        GradedClass::from_ints(n, coeffs).unwrap()
    }

    #[test]
    fn constructor_pads_with_zeros() {
        let c = gc(4, &[1, 2]);
        assert_eq!(c.coeffs().len(), 5);
        assert_eq!(c.coeff(1), BigInt::from(2));
        assert_eq!(c.coeff(4), BigInt::zero());
        assert_eq!(c.coeff(17), BigInt::zero());
    }

    #[test]
    fn constructor_rejects_overlong_lists() {
        let err = GradedClass::from_ints(2, &[1, 2, 3, 4]).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn monomial_rejects_degrees_beyond_truncation() {
        assert!(GradedClass::monomial(3, 4, 1).is_err());
        assert_eq!(GradedClass::monomial(3, 3, 5).unwrap(), gc(3, &[0, 0, 0, 5]));
    }

    #[test]
    fn add_is_degreewise_and_checks_dimension() {
        let a = gc(2, &[1, 2, 3]);
        let b = gc(2, &[0, -2, 4]);
        assert_eq!(a.add(&b).unwrap(), gc(2, &[1, 0, 7]));
        let c = gc(3, &[1]);
        assert!(matches!(
            a.add(&c).unwrap_err(),
            Error::DimensionMismatch { left: 2, right: 3 }
        ));
    }

    #[test]
    fn mul_truncates_above_ambient_degree() {
        // (1 + h)^2 in P^1 loses the h^2 term.
        let a = gc(1, &[1, 1]);
        assert_eq!(a.mul(&a).unwrap(), gc(1, &[1, 2]));
        // (1 + h + h^2)(1 + h) in P^2 = 1 + 2h + 2h^2 (+ h^3 discarded).
        let b = gc(2, &[1, 1, 1]);
        let c = gc(2, &[1, 1]);
        assert_eq!(b.mul(&c).unwrap(), gc(2, &[1, 2, 2]));
    }

    #[test]
    fn pow_matches_binomial_expansion() {
        let one_plus_h = gc(4, &[1, 1]);
        assert_eq!(one_plus_h.pow(0), GradedClass::one(4));
        assert_eq!(one_plus_h.pow(5), gc(4, &[1, 5, 10, 10, 5]));
        assert_eq!(one_plus_h.pow(3), gc(4, &[1, 3, 3, 1, 0]));
    }

    #[test]
    fn invert_geometric_series() {
        // (1 + 2h)^{-1} = 1 - 2h + 4h^2 - 8h^3 + 16h^4 in P^4.
        let a = gc(4, &[1, 2]);
        let inv = a.invert().unwrap();
        assert_eq!(inv, gc(4, &[1, -2, 4, -8, 16]));
        assert!(a.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn invert_two_term_class() {
        // (1 + 4h + 4h^2)^{-1} = 1 - 4h + 12h^2 - 32h^3 + 80h^4 in P^4.
        let a = gc(4, &[1, 4, 4]);
        let inv = a.invert().unwrap();
        assert_eq!(inv, gc(4, &[1, -4, 12, -32, 80]));
        assert!(a.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn invert_requires_constant_term_one() {
        let err = gc(3, &[2, 1]).invert().unwrap_err();
        assert!(matches!(err, Error::NotInvertible { .. }));
    }

    #[test]
    fn integrate_reads_the_top_coefficient() {
        assert_eq!(gc(3, &[7, 5, 1, -9]).integrate(), BigInt::from(-9));
        assert_eq!(gc(0, &[42]).integrate(), BigInt::from(42));
    }

    #[test]
    fn degree_part_isolates_one_degree() {
        let a = gc(3, &[1, 2, 3, 4]);
        assert_eq!(a.degree_part(2).unwrap(), gc(3, &[0, 0, 3]));
        assert_eq!(a.degree_part(0).unwrap(), gc(3, &[1]));
        assert!(a.degree_part(4).is_err());
    }

    #[test]
    fn display_renders_signs_and_powers() {
        assert_eq!(gc(3, &[1, 3, 0, -1]).to_string(), "1 + 3h - h^3");
        assert_eq!(gc(2, &[0, 0, 0]).to_string(), "0");
        assert_eq!(gc(2, &[0, -2, 1]).to_string(), "-2h + h^2");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_class_pair(max_dim: usize) -> impl Strategy<Value = (GradedClass, GradedClass)> {
            (0..=max_dim).prop_flat_map(|n| {
                let v = || proptest::collection::vec(-9i64..=9, n + 1);
                (v(), v()).prop_map(move |(a, b)| {
                    (
                        GradedClass::from_ints(n, &a).unwrap(),
                        GradedClass::from_ints(n, &b).unwrap(),
                    )
                })
            })
        }

        fn arb_class_triple(
            max_dim: usize,
        ) -> impl Strategy<Value = (GradedClass, GradedClass, GradedClass)> {
            (0..=max_dim).prop_flat_map(|n| {
                let v = || proptest::collection::vec(-9i64..=9, n + 1);
                (v(), v(), v()).prop_map(move |(a, b, c)| {
                    (
                        GradedClass::from_ints(n, &a).unwrap(),
                        GradedClass::from_ints(n, &b).unwrap(),
                        GradedClass::from_ints(n, &c).unwrap(),
                    )
                })
            })
        }

        proptest! {
            #[test]
            fn ring_axioms((a, b, c) in arb_class_triple(6)) {
                let n = a.ambient_dim();
                // commutativity and associativity of both operations
                prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
                prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                prop_assert_eq!(
                    a.mul(&b).unwrap().mul(&c).unwrap(),
                    a.mul(&b.mul(&c).unwrap()).unwrap()
                );
                // distributivity
                prop_assert_eq!(
                    a.mul(&b.add(&c).unwrap()).unwrap(),
                    a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
                );
                // identities
                prop_assert_eq!(a.mul(&GradedClass::one(n)).unwrap(), a.clone());
                prop_assert_eq!(a.add(&GradedClass::zero(n)).unwrap(), a.clone());
            }

            #[test]
            fn inversion_round_trips((a, _) in arb_class_pair(10)) {
                // force constant term 1 so the class is invertible
                let n = a.ambient_dim();
                let mut coeffs = a.coeffs().to_vec();
                coeffs[0] = BigInt::one();
                let a = GradedClass::new(n, coeffs).unwrap();
                let inv = a.invert().unwrap();
                prop_assert!(a.mul(&inv).unwrap().is_one());
                prop_assert_eq!(inv.invert().unwrap(), a);
            }

            #[test]
            fn integrate_is_symmetric_in_products((a, b) in arb_class_pair(6)) {
                prop_assert_eq!(
                    a.mul(&b).unwrap().integrate(),
                    b.mul(&a).unwrap().integrate()
                );
            }

            #[test]
            fn truncation_agrees_with_untruncated_product((a, b) in arb_class_pair(6)) {
                // the same product computed in a ring big enough to hold every
                // term must agree with the truncated one below the cutoff
                let n = a.ambient_dim();
                let big_a = GradedClass::new(2 * n + 1, a.coeffs().to_vec()).unwrap();
                let big_b = GradedClass::new(2 * n + 1, b.coeffs().to_vec()).unwrap();
                let full = big_a.mul(&big_b).unwrap();
                let truncated = a.mul(&b).unwrap();
                for j in 0..=n {
                    prop_assert_eq!(truncated.coeff(j), full.coeff(j));
                }
            }
        }
    }
}
