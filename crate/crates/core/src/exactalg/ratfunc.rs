//! Rational functions in one indeterminate, kept in lowest terms.

use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::poly::{SparsePoly, Var};
use super::scalar::{Field, Ring};
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1` and `den` monic, so structural
/// equality is mathematical equality.
#[derive(Clone, Debug)]
pub struct RatFunc<C> {
    num: SparsePoly<C>,
    den: SparsePoly<C>,
}

impl<C: Field> PartialEq for RatFunc<C> {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl<C: Field> RatFunc<C> {
    pub fn from_poly(p: SparsePoly<C>) -> Self {
        match p.low_degree() {
            Some(k) if k < 0 => {
                let var = p.var();
                let num = p.mul_monomial(&C::one(), -k).into_ordinary().expect("cleared");
                RatFunc { num, den: SparsePoly::monomial(var, C::one(), -k) }
            }
            _ => {
                let var = p.var();
                RatFunc { num: p.into_ordinary().expect("no negative exponent"), den: SparsePoly::one(var) }
            }
        }
    }

    pub fn constant(var: Var, c: C) -> Self {
        RatFunc { num: SparsePoly::constant(var, c), den: SparsePoly::one(var) }
    }

    pub fn x(var: Var) -> Self {
        Self::from_poly(SparsePoly::x(var))
    }

    pub fn from_i64(var: Var, n: i64) -> Self {
        Self::constant(var, C::from_i64(n))
    }

    /// Reduces `n/d` to lowest terms with monic denominator. Laurent inputs
    /// are cleared of negative powers first.
    pub fn normalize(n: SparsePoly<C>, d: SparsePoly<C>) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let shift = n.low_degree().unwrap_or(0).min(0).min(d.low_degree().unwrap_or(0));
        let (n, d) = if shift < 0 {
            (n.mul_monomial(&C::one(), -shift), d.mul_monomial(&C::one(), -shift))
        } else {
            (n, d)
        };
        let n = n.into_ordinary()?;
        let d = d.into_ordinary()?;
        Ok(Self::reduce(n, d))
    }

    fn reduce(n: SparsePoly<C>, d: SparsePoly<C>) -> Self {
        let var = if n.is_constant() { d.var() } else { n.var() };
        if n.is_zero() {
            return RatFunc { num: SparsePoly::zero(var), den: SparsePoly::one(var) };
        }
        let (n, d) = if d.is_constant() {
            (n, d)
        } else {
            let g = n.gcd(&d);
            if g.is_one() {
                (n, d)
            } else {
                (n.div_exact(&g).expect("gcd divides"), d.div_exact(&g).expect("gcd divides"))
            }
        };
        Self::monic_den(n.with_var(var), d.with_var(var))
    }

    fn monic_den(n: SparsePoly<C>, d: SparsePoly<C>) -> Self {
        match d.leading_coeff() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.inv();
                RatFunc { num: n.scale(&inv), den: d.scale(&inv) }
            }
            _ => RatFunc { num: n, den: d },
        }
    }

    pub fn numer(&self) -> &SparsePoly<C> {
        &self.num
    }

    pub fn denom(&self) -> &SparsePoly<C> {
        &self.den
    }

    pub fn var(&self) -> Var {
        if self.num.is_constant() {
            self.den.var()
        } else {
            self.num.var()
        }
    }

    pub fn with_var(self, var: Var) -> Self {
        RatFunc { num: self.num.with_var(var), den: self.den.with_var(var) }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&SparsePoly<C>> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// The value as a Laurent polynomial when the denominator is a power of
    /// the indeterminate.
    pub fn to_laurent(&self) -> Option<SparsePoly<C>> {
        let (e, c) = self.den.as_monomial()?;
        debug_assert!(c.is_one());
        Some(self.num.mul_monomial(&C::one(), -e).into_laurent())
    }

    pub fn as_constant(&self) -> Option<C> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.constant_term())
        } else {
            None
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.clone() * other.inv())
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let num = base.num.pow(n.unsigned_abs());
        let den = base.den.pow(n.unsigned_abs());
        RatFunc { num, den }
    }

    pub fn eval(&self, x: &C) -> Result<C> {
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(x)? / d)
    }

    /// Substitutes the indeterminate by another rational function.
    pub fn substitute(&self, value: &RatFunc<C>) -> Result<RatFunc<C>> {
        let n = horner(&self.num, value);
        let d = horner(&self.den, value);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(n * d.inv())
    }

    /// Substitutes `x ↦ c·y^k`.
    pub fn compose_monomial(&self, new_var: Var, c: &C, k: i32) -> Result<Self> {
        let n = self.num.compose_monomial(new_var, c, k);
        let d = self.den.compose_monomial(new_var, c, k);
        Self::normalize(n, d)
    }
}

fn horner<C: Field>(p: &SparsePoly<C>, x: &RatFunc<C>) -> RatFunc<C> {
    let mut acc = RatFunc::zero();
    let mut prev: Option<i32> = None;
    for (e, c) in p.terms().iter().rev() {
        if let Some(pe) = prev {
            acc = acc * x.pow(pe - e);
        }
        acc += &RatFunc::constant(x.var(), c.clone());
        prev = Some(*e);
    }
    if let Some(pe) = prev {
        acc = acc * x.pow(pe);
    }
    acc
}

impl<C: Field> Zero for RatFunc<C> {
    fn zero() -> Self {
        RatFunc { num: SparsePoly::zero(Var::T), den: SparsePoly::one(Var::T) }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<C: Field> One for RatFunc<C> {
    fn one() -> Self {
        RatFunc { num: SparsePoly::one(Var::T), den: SparsePoly::one(Var::T) }
    }
}

impl<C: Field> RatFunc<C> {
    fn add_impl(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: &self.num + &other.num, den: self.den.clone() };
        }
        if self.den == other.den {
            return Self::reduce(&self.num + &other.num, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = &(&self.num * &other.den) + &(&other.num * &self.den);
            let den = &self.den * &other.den;
            return Self::monic_den(num, den).fix_zero();
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&other.num * &b1);
        let den = &self.den * &d1;
        if num.is_zero() {
            return Self::zero();
        }
        let h = num.gcd(&g);
        if h.is_one() {
            Self::monic_den(num, den)
        } else {
            Self::monic_den(num.div_exact(&h).expect("gcd divides"), den.div_exact(&h).expect("gcd divides"))
        }
    }

    fn fix_zero(self) -> Self {
        if self.num.is_zero() {
            Self::zero()
        } else {
            self
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: &self.num * &other.num, den: self.den.clone() };
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.div_exact(&g1).expect("gcd"), other.den.div_exact(&g1).expect("gcd"))
        };
        let (c, b) = if g2.is_one() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.div_exact(&g2).expect("gcd"), self.den.div_exact(&g2).expect("gcd"))
        };
        Self::monic_den(&a * &c, &b * &d)
    }

    fn neg_impl(&self) -> Self {
        RatFunc { num: self.num.neg_ref(), den: self.den.clone() }
    }
}

impl<C: Field> Ring for RatFunc<C> {
    fn from_i64(n: i64) -> Self {
        RatFunc::constant(Var::T, C::from_i64(n))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
}

impl<C: Field> Field for RatFunc<C> {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero rational function");
        Self::monic_den(self.den.clone(), self.num.clone())
    }
}

impl<C: Field> Add for RatFunc<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_impl(&rhs)
    }
}

impl<'a, C: Field> Add for &'a RatFunc<C> {
    type Output = RatFunc<C>;
    fn add(self, rhs: Self) -> RatFunc<C> {
        self.add_impl(rhs)
    }
}

impl<C: Field> Sub for RatFunc<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.add_impl(&rhs.neg_impl())
    }
}

impl<'a, C: Field> Sub for &'a RatFunc<C> {
    type Output = RatFunc<C>;
    fn sub(self, rhs: Self) -> RatFunc<C> {
        self.add_impl(&rhs.neg_impl())
    }
}

impl<C: Field> Mul for RatFunc<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_impl(&rhs)
    }
}

impl<'a, C: Field> Mul for &'a RatFunc<C> {
    type Output = RatFunc<C>;
    fn mul(self, rhs: Self) -> RatFunc<C> {
        self.mul_impl(rhs)
    }
}

impl<C: Field> Div for RatFunc<C> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.mul_impl(&rhs.inv())
    }
}

impl<C: Field> Neg for RatFunc<C> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_impl()
    }
}

impl<'a, C: Field> AddAssign<&'a RatFunc<C>> for RatFunc<C> {
    fn add_assign(&mut self, rhs: &'a RatFunc<C>) {
        *self = self.add_impl(rhs);
    }
}

impl<'a, C: Field> SubAssign<&'a RatFunc<C>> for RatFunc<C> {
    fn sub_assign(&mut self, rhs: &'a RatFunc<C>) {
        *self = self.add_impl(&rhs.neg_impl());
    }
}
