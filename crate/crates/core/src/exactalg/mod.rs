//! Exact scalar arithmetic: rationals, sparse (Laurent) polynomials,
//! rational functions and the coefficient ring ℚ(t)[θ].

mod coeff;
mod poly;
mod ratfunc;
mod scalar;
mod text;

pub use coeff::{
    ct_from_poly, ct_from_ratfunc, ct_int, ct_theta, ct_theta_pow, eval_coeff, is_integral_poly_coeff,
    parse_coeff, substitute, CoeffTTheta, TValue,
};
pub use poly::{SparsePoly, Var};
pub use ratfunc::RatFunc;
pub use scalar::{Field, Ring};
pub use text::{parse_poly, parse_ratfunc, CanonicalCoeff};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;
/// Sparse (Laurent) polynomial with rational coefficients.
pub type Poly = SparsePoly<Rational>;
/// Rational function with rational coefficients.
pub type RatFn = RatFunc<Rational>;

pub fn rat(n: i64) -> Rational {
    <Rational as Ring>::from_i64(n)
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `Σ c_i x^i` from small integer coefficients.
pub fn poly_from_ints(var: Var, coeffs: &[i64]) -> Poly {
    Poly::from_coeffs(var, coeffs.iter().map(|c| rat(*c)).collect())
}

/// `x^e` as a rational function (negative `e` allowed).
pub fn rf_monomial(var: Var, e: i32) -> RatFn {
    RatFn::from_poly(Poly::monomial(var, rat(1), e))
}

pub fn rf_int(var: Var, n: i64) -> RatFn {
    RatFn::from_i64(var, n)
}

pub fn rf_poly(p: Poly) -> RatFn {
    RatFn::from_poly(p)
}
