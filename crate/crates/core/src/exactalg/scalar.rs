//! Coefficient traits shared by every polynomial-like type in the crate.
//!
//! The algebraic code is written against [`Ring`] and [`Field`] rather than a
//! concrete number type. Exact work uses [`BigRational`]; `f64` implements the
//! same traits so that kernels can be evaluated numerically when that is
//! convenient (e.g. quick plots or sanity checks outside the exact pipeline).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::SparsePoly;

/// A commutative ring with unit.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
{
    fn from_i64(n: i64) -> Self;

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
}

/// A field: every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Monic gcd of two univariate polynomials over this field.
    ///
    /// The default is the Euclidean algorithm; exact rationals override it
    /// with a primitive remainder sequence over the integers, which keeps
    /// coefficient growth under control.
    fn poly_gcd(a: &SparsePoly<Self>, b: &SparsePoly<Self>) -> SparsePoly<Self> {
        super::poly::euclid_gcd(a, b)
    }
}

impl Ring for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        self.recip()
    }

    fn poly_gcd(a: &SparsePoly<Self>, b: &SparsePoly<Self>) -> SparsePoly<Self> {
        super::poly::rational_gcd(a, b)
    }
}

impl Ring for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Field for f64 {}
