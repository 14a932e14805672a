//! The coefficient ring ℚ(t)[θ]: polynomials in θ whose coefficients are
//! rational functions in t.

use num_traits::{One, Zero};

use super::poly::{SparsePoly, Var};
use super::ratfunc::RatFunc;
use super::text::parse_poly;
use super::{Poly, RatFn, Rational};
use crate::error::Result;

/// Polynomial in θ over ℚ(t). Canonical text wraps each θ-coefficient in
/// parentheses, e.g. `(1 - 1*t^1) + (-1 + 1*t^1)*θ^1`.
pub type CoeffTTheta = SparsePoly<RatFn>;

pub fn ct_from_ratfunc(r: RatFn) -> CoeffTTheta {
    CoeffTTheta::constant(Var::THETA, r)
}

pub fn ct_from_poly(p: Poly) -> CoeffTTheta {
    ct_from_ratfunc(RatFunc::from_poly(p))
}

pub fn ct_int(n: i64) -> CoeffTTheta {
    ct_from_ratfunc(RatFn::from_i64(Var::T, n))
}

pub fn ct_theta() -> CoeffTTheta {
    ct_theta_pow(1)
}

pub fn ct_theta_pow(k: u32) -> CoeffTTheta {
    CoeffTTheta::monomial(Var::THETA, RatFn::one(), k as i32)
}

pub fn parse_coeff(s: &str) -> Result<CoeffTTheta> {
    parse_poly(s, Var::THETA)
}

/// Value substituted for t.
#[derive(Clone, Debug)]
pub enum TValue {
    Rational(Rational),
    /// A rational function in any indeterminate (t itself, t⁻¹, v², …).
    Func(RatFn),
}

/// Ring homomorphism t ↦ `t`, θ ↦ `theta`.
pub fn substitute(c: &CoeffTTheta, t: &TValue, theta: &CoeffTTheta) -> Result<CoeffTTheta> {
    let mut acc = CoeffTTheta::zero(Var::THETA);
    let mut theta_pow = CoeffTTheta::one(Var::THETA);
    let mut k_prev = 0i32;
    for (k, r) in c.terms() {
        for _ in k_prev..*k {
            theta_pow = &theta_pow * theta;
        }
        k_prev = *k;
        let r_sub = match t {
            TValue::Rational(x) => RatFn::constant(Var::T, r.eval(x)?),
            TValue::Func(f) => r.substitute(f)?,
        };
        acc = &acc + &theta_pow.scale(&r_sub);
    }
    Ok(acc)
}

/// Full numeric evaluation at rational t and θ.
pub fn eval_coeff(c: &CoeffTTheta, t: &Rational, theta: &Rational) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (k, r) in c.terms() {
        let mut term = r.eval(t)?;
        for _ in 0..*k {
            term = term * theta.clone();
        }
        acc += &term;
    }
    Ok(acc)
}

/// True when every θ-coefficient is a polynomial in t with integer
/// coefficients.
pub fn is_integral_poly_coeff(c: &CoeffTTheta) -> bool {
    c.terms().iter().all(|(_, r)| {
        r.as_poly().map_or(false, |p| p.terms().iter().all(|(_, a)| a.is_integer()))
    })
}

impl From<Rational> for RatFn {
    fn from(r: Rational) -> Self {
        RatFn::constant(Var::T, r)
    }
}
