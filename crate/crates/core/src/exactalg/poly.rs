//! Sparse univariate (Laurent) polynomials over a coefficient ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{Field, Ring};
use crate::error::{Error, Result};

/// Name of an indeterminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub char);

impl Var {
    pub const T: Var = Var('t');
    pub const BIG_T: Var = Var('T');
    pub const Q: Var = Var('q');
    pub const V: Var = Var('v');
    pub const THETA: Var = Var('θ');
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A polynomial `Σ c_e x^e` stored as exponent-sorted nonzero terms.
///
/// In Laurent mode exponents may be negative. Constants are compatible with
/// every indeterminate, so `2 + t` and `2 + q` are both fine while `t + q`
/// is a [`Error::MixedIndeterminates`].
#[derive(Clone, Debug)]
pub struct SparsePoly<C> {
    var: Var,
    laurent: bool,
    terms: Vec<(i32, C)>,
}

impl<C: Ring> PartialEq for SparsePoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.var == other.var || self.is_constant())
    }
}

impl<C: Ring + Eq> Eq for SparsePoly<C> {}

impl<C: Ring + Hash> Hash for SparsePoly<C> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<C: Ring> SparsePoly<C> {
    pub fn zero(var: Var) -> Self {
        SparsePoly { var, laurent: false, terms: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, C::one())
    }

    pub fn constant(var: Var, c: C) -> Self {
        Self::monomial(var, c, 0)
    }

    /// `c·x^e`; a negative `e` switches on Laurent mode.
    pub fn monomial(var: Var, c: C, e: i32) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(e, c)] };
        SparsePoly { var, laurent: e < 0, terms }
    }

    pub fn x(var: Var) -> Self {
        Self::monomial(var, C::one(), 1)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms(var: Var, laurent: bool, it: impl IntoIterator<Item = (i32, C)>) -> Result<Self> {
        let mut map: BTreeMap<i32, C> = BTreeMap::new();
        for (e, c) in it {
            if e < 0 && !laurent {
                return Err(Error::NegativeExponent(e));
            }
            match map.get_mut(&e) {
                Some(acc) => *acc += &c,
                None => {
                    map.insert(e, c);
                }
            }
        }
        Ok(SparsePoly { var, laurent, terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// Coefficients listed from `x^0` upward.
    pub fn from_coeffs(var: Var, coeffs: Vec<C>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i32, c))
            .collect();
        SparsePoly { var, laurent: false, terms }
    }


    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    /// Switches Laurent mode on; the value is unchanged.
    pub fn into_laurent(mut self) -> Self {
        self.laurent = true;
        self
    }

    /// Leaves Laurent mode, failing if a negative exponent is present.
    pub fn into_ordinary(mut self) -> Result<Self> {
        if let Some(e) = self.low_degree() {
            if e < 0 {
                return Err(Error::NegativeExponent(e));
            }
        }
        self.laurent = false;
        Ok(self)
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn terms(&self) -> &[(i32, C)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 0)
    }

    /// `Some(e)` when the polynomial is `c·x^e`.
    pub fn as_monomial(&self) -> Option<(i32, &C)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, c)),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> C {
        self.coeff(0)
    }

    pub fn coeff(&self, e: i32) -> C {
        match self.terms.binary_search_by_key(&e, |(k, _)| *k) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// Highest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn low_degree(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.last().map(|(_, c)| c)
    }

    fn unify(&self, other: &Self) -> Result<Var> {
        if self.var == other.var || other.is_constant() {
            Ok(self.var)
        } else if self.is_constant() {
            Ok(other.var)
        } else {
            Err(Error::MixedIndeterminates(self.var.0, other.var.0))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let var = self.unify(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let mut c = a[i].1.clone();
                    c += &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(SparsePoly { var, laurent: self.laurent || other.laurent, terms: out })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let var = self.unify(other)?;
        let laurent = self.laurent || other.laurent;
        if self.is_zero() || other.is_zero() {
            return Ok(SparsePoly { var, laurent, terms: Vec::new() });
        }
        if let Some((e, c)) = other.as_monomial() {
            return Ok(self.mul_monomial(c, e).with_var(var).with_laurent(laurent));
        }
        if let Some((e, c)) = self.as_monomial() {
            return Ok(other.mul_monomial(c, e).with_var(var).with_laurent(laurent));
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.degree().unwrap_or(0) + other.degree().unwrap_or(0);
        let span = (hi - lo) as usize + 1;
        let terms = if span <= 4 * self.terms.len() * other.terms.len() + 64 {
            let mut dense: Vec<C> = vec![C::zero(); span];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    let idx = (ea + eb - lo) as usize;
                    dense[idx] += &ca.mul_ref(cb);
                }
            }
            dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i32 + lo, c))
                .collect()
        } else {
            let mut map: BTreeMap<i32, C> = BTreeMap::new();
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    let p = ca.mul_ref(cb);
                    match map.get_mut(&(ea + eb)) {
                        Some(acc) => *acc += &p,
                        None => {
                            map.insert(ea + eb, p);
                        }
                    }
                }
            }
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        };
        Ok(SparsePoly { var, laurent, terms })
    }

    fn with_laurent(mut self, laurent: bool) -> Self {
        self.laurent = laurent;
        self
    }

    /// Multiplies by `c·x^e`. A negative shift requires Laurent mode or a
    /// polynomial divisible by the corresponding power of `x`.
    pub fn mul_monomial(&self, c: &C, e: i32) -> Self {
        if c.is_zero() {
            return SparsePoly { var: self.var, laurent: self.laurent, terms: Vec::new() };
        }
        let terms: Vec<(i32, C)> = self
            .terms
            .iter()
            .map(|(k, a)| (k + e, a.mul_ref(c)))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        let laurent = self.laurent || terms.first().map_or(false, |(k, _)| *k < 0);
        SparsePoly { var: self.var, laurent, terms }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_monomial(c, 0)
    }

    pub fn neg_ref(&self) -> Self {
        SparsePoly {
            var: self.var,
            laurent: self.laurent,
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var).with_laurent(self.laurent);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `x ↦ c·y^k` for the new indeterminate `y` (`k` may be
    /// negative, in which case the result is in Laurent mode).
    pub fn compose_monomial(&self, new_var: Var, c: &C, k: i32) -> Self {
        let mut terms: Vec<(i32, C)> = Vec::with_capacity(self.terms.len());
        let mut c_pows: BTreeMap<i32, C> = BTreeMap::new();
        for (e, a) in &self.terms {
            let cp = c_pows.entry(*e).or_insert_with(|| pow_signed(c, *e)).clone();
            let v = a.mul_ref(&cp);
            if !v.is_zero() {
                terms.push((e * k, v));
            }
        }
        terms.sort_by_key(|(e, _)| *e);
        let laurent = self.laurent || k < 0 || terms.first().map_or(false, |(e, _)| *e < 0);
        SparsePoly { var: new_var, laurent, terms }
    }

    /// Reverses exponents: `p(x) ↦ p(1/x)` as a Laurent polynomial.
    pub fn reciprocal_var(&self) -> Self {
        self.compose_monomial(self.var, &C::one(), -1)
    }

    pub fn derivative(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| *e != 0)
            .map(|(e, c)| (e - 1, c.mul_ref(&C::from_i64(*e as i64))))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        SparsePoly { var: self.var, laurent: self.laurent, terms }
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> SparsePoly<D> {
        let terms = self.terms.iter().map(|(e, c)| (*e, f(c))).filter(|(_, c)| !c.is_zero()).collect();
        SparsePoly { var: self.var, laurent: self.laurent, terms }
    }

    /// Evaluation by summing monomials; negative exponents use `Field::inv`.
    pub fn eval(&self, x: &C) -> Result<C>
    where
        C: Field,
    {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            if *e < 0 && x.is_zero() {
                return Err(Error::Pole);
            }
            acc += &c.mul_ref(&pow_signed(x, *e));
        }
        Ok(acc)
    }

    /// Divides out the largest power of `x` dividing the polynomial,
    /// returning that power.
    pub fn strip_x_power(&self) -> (i32, Self) {
        match self.low_degree() {
            None | Some(0) => (0, self.clone()),
            Some(k) => (k, self.mul_monomial(&C::one(), -k).with_laurent(self.laurent)),
        }
    }
}

pub(crate) fn pow_signed<C: Ring>(c: &C, e: i32) -> C
where
    C: Ring,
{
    let mut acc = C::one();
    let base = if e < 0 { inv_ring(c) } else { c.clone() };
    for _ in 0..e.unsigned_abs() {
        acc = acc.mul_ref(&base);
    }
    acc
}

/// Inversion in a ring is only meaningful for units; this helper is used
/// with `±1` in compositions, and with field elements otherwise.
fn inv_ring<C: Ring>(c: &C) -> C {
    if c.is_one() {
        C::one()
    } else if (-c.clone()).is_one() {
        c.clone()
    } else {
        panic!("negative power of a non-unit coefficient")
    }
}

impl<C: Field> SparsePoly<C> {
    /// Quotient and remainder; `other` must be nonzero and both must be
    /// ordinary (non-Laurent) polynomials.
    pub fn div_rem(&self, other: &Self) -> Result<(Self, Self)> {
        let var = self.unify(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.laurent || other.laurent {
            if self.low_degree().map_or(false, |e| e < 0) || other.low_degree().map_or(false, |e| e < 0) {
                return Err(Error::LaurentDivision);
            }
        }
        let db = other.degree().unwrap_or(0);
        let lc_inv = other.leading_coeff().map(|c| c.inv()).unwrap_or_else(C::one);
        let mut rem: BTreeMap<i32, C> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(i32, C)> = Vec::new();
        loop {
            let (e, c) = match rem.iter().next_back() {
                Some((e, c)) if *e >= db => (*e, c.clone()),
                _ => break,
            };
            let factor = c.mul_ref(&lc_inv);
            let shift = e - db;
            for (eb, cb) in &other.terms {
                let k = eb + shift;
                let sub = cb.mul_ref(&factor);
                let entry = rem.entry(k).or_insert_with(C::zero);
                *entry -= &sub;
                if entry.is_zero() {
                    rem.remove(&k);
                }
            }
            quot.push((shift, factor));
        }
        quot.reverse();
        Ok((
            SparsePoly { var, laurent: false, terms: quot },
            SparsePoly { var, laurent: false, terms: rem.into_iter().collect() },
        ))
    }

    /// Exact division, failing when the remainder is nonzero.
    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(other)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv()),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor of two ordinary polynomials.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.make_monic();
        }
        if other.is_zero() {
            return self.make_monic();
        }
        let var = self.unify(other).unwrap_or(self.var);
        let (ka, a) = self.strip_x_power();
        let (kb, b) = other.strip_x_power();
        let xk = ka.min(kb);
        let g = if a.is_constant() || b.is_constant() {
            Self::one(var)
        } else if a == b {
            a.make_monic()
        } else {
            C::poly_gcd(&a.with_var(var), &b.with_var(var))
        };
        g.mul_monomial(&C::one(), xk).with_var(var).with_laurent(false)
    }
}

pub(crate) fn euclid_gcd<C: Field>(a: &SparsePoly<C>, b: &SparsePoly<C>) -> SparsePoly<C> {
    let mut a = a.make_monic();
    let mut b = b.make_monic();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).expect("nonzero divisor");
        a = b;
        b = r.make_monic();
    }
    a.make_monic()
}

/// Primitive remainder sequence over ℤ, then normalized to a monic
/// rational polynomial.
pub(crate) fn rational_gcd(a: &SparsePoly<BigRational>, b: &SparsePoly<BigRational>) -> SparsePoly<BigRational> {
    let var = a.var;
    let mut x = primitive_int(a);
    let mut y = primitive_int(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        if r.is_empty() {
            break;
        }
        y = primitive_part(r);
        if y.len() == 1 {
            return SparsePoly::one(var);
        }
    }
    let lc = x.last().cloned().unwrap_or_else(BigInt::one);
    let coeffs: Vec<BigRational> = x.into_iter().map(|c| BigRational::new(c, lc.clone())).collect();
    SparsePoly::from_coeffs(var, coeffs)
}

fn primitive_int(p: &SparsePoly<BigRational>) -> Vec<BigInt> {
    let deg = p.degree().unwrap_or(0).max(0) as usize;
    let mut den = BigInt::one();
    for (_, c) in &p.terms {
        den = den.lcm(c.denom());
    }
    let mut v = vec![BigInt::zero(); deg + 1];
    for (e, c) in &p.terms {
        v[*e as usize] = c.numer() * (&den / c.denom());
    }
    primitive_part(v)
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() > 1 && v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return v;
    }
    if v.last().map_or(false, |c| c.is_negative()) {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Pseudo-remainder of dense integer polynomials (ascending coefficients).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let lr = r.last().cloned().unwrap_or_default();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, cb) in b.iter().enumerate() {
            r[i + shift] -= &lr * cb;
        }
        r.pop();
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

impl<'a, C: Ring> Add for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn add(self, rhs: Self) -> SparsePoly<C> {
        self.checked_add(rhs).expect("indeterminates must match")
    }
}

impl<'a, C: Ring> Sub for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn sub(self, rhs: Self) -> SparsePoly<C> {
        self.checked_sub(rhs).expect("indeterminates must match")
    }
}

impl<'a, C: Ring> Mul for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn mul(self, rhs: Self) -> SparsePoly<C> {
        self.checked_mul(rhs).expect("indeterminates must match")
    }
}

impl<'a, C: Ring> Neg for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn neg(self) -> SparsePoly<C> {
        self.neg_ref()
    }
}

impl<C: Ring> Add for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn add(self, rhs: Self) -> SparsePoly<C> {
        &self + &rhs
    }
}

impl<C: Ring> Sub for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn sub(self, rhs: Self) -> SparsePoly<C> {
        &self - &rhs
    }
}

impl<C: Ring> Mul for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn mul(self, rhs: Self) -> SparsePoly<C> {
        &self * &rhs
    }
}

impl<C: Ring> Neg for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn neg(self) -> SparsePoly<C> {
        self.neg_ref()
    }
}

/// Placeholder indeterminate for the trait constructors `zero()`/`one()`;
/// constants are compatible with every indeterminate.
const ANY: Var = Var('x');

impl<C: Ring> num_traits::Zero for SparsePoly<C> {
    fn zero() -> Self {
        SparsePoly::zero(ANY)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> num_traits::One for SparsePoly<C> {
    fn one() -> Self {
        SparsePoly::one(ANY)
    }
}

impl<'a, C: Ring> std::ops::AddAssign<&'a SparsePoly<C>> for SparsePoly<C> {
    fn add_assign(&mut self, rhs: &'a SparsePoly<C>) {
        *self = &*self + rhs;
    }
}

impl<'a, C: Ring> std::ops::SubAssign<&'a SparsePoly<C>> for SparsePoly<C> {
    fn sub_assign(&mut self, rhs: &'a SparsePoly<C>) {
        *self = &*self - rhs;
    }
}

impl<C: Ring> Ring for SparsePoly<C> {
    fn from_i64(n: i64) -> Self {
        SparsePoly::constant(ANY, C::from_i64(n))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}
