//! Classical Hall numbers of the Jordan quiver: closed-form Pieri Hall
//! numbers, Hall polynomials by a column-generator bootstrap, automorphism
//! orders, Ext counts and a finite-field counting oracle.

pub mod brute;
pub mod cache;
pub mod field;
pub mod identities;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;

pub use brute::{brute_force_aut_count, brute_force_hall_count, brute_force_hom_exponent, hall_count_table, DEFAULT_GUARD};
pub use cache::HallCache;
pub use field::GaloisField;

use crate::error::{Error, Result};
use crate::exactalg::{parse_poly, rat, Poly, RatFn, Rational, Var};
use crate::partitions::{b_lambda, f_vertical, horizontal_strips, is_horizontal_strip, phi_skew, vertical_strips, Direction, Partition};

/// A Laurent polynomial in T with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HallPoly(Poly);

impl HallPoly {
    pub fn zero() -> Self {
        HallPoly(Poly::zero(Var::BIG_T).into_laurent())
    }

    pub fn one() -> Self {
        HallPoly(Poly::one(Var::BIG_T).into_laurent())
    }

    /// Wraps a polynomial in any indeterminate, checking integrality.
    pub fn new(p: Poly) -> Result<Self> {
        if let Some((_, c)) = p.terms().iter().find(|(_, c)| !c.is_integer()) {
            return Err(Error::NotIntegral(format!("coefficient {c} in {p}")));
        }
        Ok(HallPoly(p.with_var(Var::BIG_T).into_laurent()))
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    /// The same polynomial written in `var`.
    pub fn in_var(&self, var: Var) -> Poly {
        self.0.clone().with_var(var)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn eval(&self, q: &Rational) -> Result<Rational> {
        self.0.eval(q)
    }

    /// Value at an integer q, required to be an integer.
    pub fn eval_int(&self, q: i64) -> Result<i128> {
        let v = self.eval(&rat(q))?;
        if !v.is_integer() {
            return Err(Error::NotIntegral(format!("{self} at T = {q}")));
        }
        i128::try_from(v.to_integer()).map_err(|_| Error::SizeGuard(format!("{self} at T = {q} overflows")))
    }
}

impl fmt::Display for HallPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for HallPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HallPoly::new(parse_poly(s, Var::BIG_T)?)
    }
}

pub(crate) fn q_pow(e: i32) -> Poly {
    Poly::monomial(Var::Q, rat(1), e)
}

/// p(t) ↦ q^shift · p(q⁻¹), required to be an ordinary polynomial.
fn at_q_inverse(p: &Poly, shift: i32) -> Result<Poly> {
    p.compose_monomial(Var::Q, &rat(1), -1).mul_monomial(&rat(1), shift).into_ordinary()
}

pub(crate) fn ratfn_to_poly(r: RatFn, what: &str) -> Result<Poly> {
    match r.as_poly() {
        Some(p) => Ok(p.clone().with_var(Var::Q)),
        None => Err(Error::NotPolynomial(format!("{what}: {r}"))),
    }
}

/// |Aut(S^{(λ)})| = q^{|λ|+2n(λ)} Π_i φ_{m_i(λ)}(q⁻¹) as a polynomial in q.
pub fn aut_order(lambda: &Partition) -> Poly {
    at_q_inverse(&b_lambda(lambda), (lambda.size() + 2 * lambda.n()) as i32).expect("automorphism orders are polynomials")
}

/// e with |Hom(S^{(λ)}, S^{(μ)})| = q^e.
pub fn hom_order_exponent(lambda: &Partition, mu: &Partition) -> usize {
    lambda.parts().iter().map(|&a| mu.parts().iter().map(|&b| a.min(b)).sum::<usize>()).sum()
}

/// G^ν_{μ,(r)} in q.
pub(crate) fn row_pieri_q(mu: &Partition, r: usize, nu: &Partition) -> Result<Poly> {
    if r == 0 {
        return Ok(if mu == nu { Poly::one(Var::Q) } else { Poly::zero(Var::Q) });
    }
    if nu.size() != mu.size() + r || !is_horizontal_strip(nu, mu) {
        return Ok(Poly::zero(Var::Q));
    }
    let shift = (nu.n() + r) as i32 - mu.n() as i32;
    let num = phi_skew(nu, mu)?.compose_monomial(Var::Q, &rat(1), -1).mul_monomial(&rat(1), shift);
    let num = RatFn::from_poly(num);
    let den = RatFn::from_poly(aut_order(&Partition::row(r)));
    ratfn_to_poly(num / den, "row Pieri Hall number")
}

/// G^λ_{μ,(1^m)} in q.
pub(crate) fn col_pieri_q(mu: &Partition, m: usize, lambda: &Partition) -> Result<Poly> {
    let f = f_vertical(mu, m, lambda);
    if f.is_zero() {
        return Ok(Poly::zero(Var::Q));
    }
    let shift = lambda.n() as i32 - mu.n() as i32 - Partition::column(m).n() as i32;
    at_q_inverse(&f, shift)
}

pub fn row_pieri_hall(mu: &Partition, r: usize, nu: &Partition) -> Result<HallPoly> {
    HallPoly::new(row_pieri_q(mu, r, nu)?)
}

pub fn col_pieri_hall(mu: &Partition, m: usize, lambda: &Partition) -> Result<HallPoly> {
    HallPoly::new(col_pieri_q(mu, m, lambda)?)
}

/// Element of the classical Hall algebra in the basis u_λ, coefficients in ℤ[q].
pub type HallElement = BTreeMap<Partition, Poly>;

fn add_into(acc: &mut HallElement, key: Partition, c: Poly) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(key.clone()).or_insert_with(|| Poly::zero(Var::Q));
    *e += &c;
    if e.is_zero() {
        acc.remove(&key);
    }
}

/// Hall polynomials by expressing u_ν in the column generators u_{(1^m)}.
pub struct HallEngine {
    columns: RwLock<HashMap<(Partition, usize), Arc<Vec<(Partition, Poly)>>>>,
    generators: RwLock<HashMap<Partition, Arc<HallElement>>>,
    products: RwLock<HashMap<(Partition, Partition), Arc<HallElement>>>,
    cache: Option<Arc<HallCache>>,
}

impl Default for HallEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl HallEngine {
    pub fn new() -> Self {
        HallEngine {
            columns: RwLock::new(HashMap::new()),
            generators: RwLock::new(HashMap::new()),
            products: RwLock::new(HashMap::new()),
            cache: None,
        }
    }

    pub fn with_cache(cache: Arc<HallCache>) -> Self {
        HallEngine { cache: Some(cache), ..Self::new() }
    }

    pub fn shared() -> &'static HallEngine {
        static ENGINE: OnceLock<HallEngine> = OnceLock::new();
        ENGINE.get_or_init(HallEngine::new)
    }

    pub fn cache(&self) -> Option<&Arc<HallCache>> {
        self.cache.as_ref()
    }

    /// u_μ · u_{(1^m)} as a list of (λ, G^λ_{μ,(1^m)}).
    fn column_step(&self, mu: &Partition, m: usize) -> Result<Arc<Vec<(Partition, Poly)>>> {
        let key = (mu.clone(), m);
        if let Some(v) = self.columns.read().get(&key) {
            return Ok(v.clone());
        }
        let mut out = Vec::new();
        for lambda in vertical_strips(mu, m, Direction::Up) {
            let c = col_pieri_q(mu, m, &lambda)?;
            if !c.is_zero() {
                out.push((lambda, c));
            }
        }
        let out = Arc::new(out);
        self.columns.write().insert(key, out.clone());
        Ok(out)
    }

    /// x · u_{(1^{c_1})} ⋯ u_{(1^{c_k})}.
    pub fn times_columns(&self, x: &HallElement, cols: &[usize]) -> Result<HallElement> {
        let mut cur = x.clone();
        for &m in cols {
            let mut next = HallElement::new();
            for (mu, c) in &cur {
                for (lambda, g) in self.column_step(mu, m)?.iter() {
                    add_into(&mut next, lambda.clone(), c * g);
                }
            }
            cur = next;
        }
        Ok(cur)
    }

    /// u_ν = Σ_ρ D_{νρ} e_ρ with e_ρ = Π_i u_{(1^{ρ′_i})}.
    pub fn column_form(&self, nu: &Partition) -> Result<Arc<HallElement>> {
        if let Some(v) = self.generators.read().get(nu) {
            return Ok(v.clone());
        }
        let unit = HallElement::from([(Partition::empty(), Poly::one(Var::Q))]);
        let e = self.times_columns(&unit, nu.conjugate().parts())?;
        if e.get(nu).map_or(true, |c| !c.is_one()) {
            return Err(Error::Triangular(format!("leading coefficient of e_{nu} is not 1")));
        }
        let mut d = HallElement::from([(nu.clone(), Poly::one(Var::Q))]);
        for (kappa, m) in &e {
            if kappa == nu {
                continue;
            }
            if kappa > nu {
                return Err(Error::Triangular(format!("e_{nu} contains u_{kappa} above the diagonal")));
            }
            for (rho, c) in self.column_form(kappa)?.iter() {
                add_into(&mut d, rho.clone(), -(m * c));
            }
        }
        let d = Arc::new(d);
        self.generators.write().insert(nu.clone(), d.clone());
        Ok(d)
    }

    /// u_μ · u_ν in the u-basis.
    pub fn product(&self, mu: &Partition, nu: &Partition) -> Result<Arc<HallElement>> {
        let key = (mu.clone(), nu.clone());
        if let Some(v) = self.products.read().get(&key) {
            return Ok(v.clone());
        }
        let start = HallElement::from([(mu.clone(), Poly::one(Var::Q))]);
        let mut out = HallElement::new();
        for (rho, d) in self.column_form(nu)?.iter() {
            for (lambda, c) in self.times_columns(&start, rho.conjugate().parts())? {
                add_into(&mut out, lambda, d * &c);
            }
        }
        for (lambda, c) in &out {
            if c.terms().iter().any(|(_, a)| !a.is_integer()) {
                return Err(Error::NotIntegral(format!("G^{lambda}_{{{mu},{nu}}} = {c}")));
            }
        }
        let out = Arc::new(out);
        self.products.write().insert(key, out.clone());
        Ok(out)
    }

    /// The Hall polynomial G^λ_{μν}(T).
    pub fn hall_polynomial(&self, mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<HallPoly> {
        if mu.size() + nu.size() != lambda.size() {
            return Ok(HallPoly::zero());
        }
        if let Some(cache) = &self.cache {
            if let Some(p) = cache.get(mu, nu, lambda) {
                return Ok(p);
            }
        }
        let p = self.product(mu, nu)?.get(lambda).cloned().unwrap_or_else(|| Poly::zero(Var::Q));
        let p = HallPoly::new(p)?;
        if let Some(cache) = &self.cache {
            cache.insert(mu, nu, lambda, &p, Vec::new())?;
        }
        Ok(p)
    }

    /// G^λ_{μν} as a polynomial in q.
    pub fn hall_q(&self, mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<Poly> {
        Ok(self.hall_polynomial(mu, nu, lambda)?.in_var(Var::Q))
    }
}

pub fn hall_polynomial(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<HallPoly> {
    HallEngine::shared().hall_polynomial(mu, nu, lambda)
}

/// |Ext¹(S^{(ν)}, S^{(r)})_{S^{(μ)}}| by the Riedtmann-Peng formula.
pub fn ext_count(nu: &Partition, r: usize, mu: &Partition) -> Result<Poly> {
    let g = row_pieri_q(nu, r, mu)?;
    if g.is_zero() {
        return Ok(Poly::zero(Var::Q));
    }
    let row = Partition::row(r);
    let num = &(&(&g * &q_pow(hom_order_exponent(nu, &row) as i32)) * &aut_order(nu)) * &aut_order(&row);
    ratfn_to_poly(RatFn::from_poly(num) / RatFn::from_poly(aut_order(mu)), "Ext count")
}

/// All μ with G^μ_{ν,(r)} ≠ 0.
pub(crate) fn row_extensions(nu: &Partition, r: usize) -> Vec<Partition> {
    horizontal_strips(nu, r, Direction::Up)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::poly_from_ints;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn qp(c: &[i64]) -> Poly {
        poly_from_ints(Var::Q, c)
    }

    #[test]
    fn aut_and_hom() {
        assert_eq!(aut_order(&p("[1]")), qp(&[-1, 1]));
        assert_eq!(aut_order(&p("[1,1]")), &qp(&[-1, 0, 1]) * &qp(&[0, -1, 1]));
        assert!(aut_order(&Partition::empty()).is_one());
        assert_eq!(hom_order_exponent(&p("[2,1]"), &p("[2]")), 3);
    }

    #[test]
    fn pieri_examples() {
        assert!(row_pieri_hall(&p("[1]"), 1, &p("[2]")).unwrap().poly().is_one());
        assert_eq!(row_pieri_hall(&p("[1]"), 1, &p("[1,1]")).unwrap().to_string(), "1 + 1*T^1");
        assert!(row_pieri_hall(&p("[1]"), 2, &p("[1,1,1]")).unwrap().is_zero());
        assert_eq!(col_pieri_hall(&p("[1]"), 1, &p("[1,1]")).unwrap().to_string(), "1 + 1*T^1");
        assert!(col_pieri_hall(&p("[1,1]"), 1, &p("[2,1]")).unwrap().poly().is_one());
        assert!(col_pieri_hall(&p("[2,1]"), 0, &p("[2,1]")).unwrap().poly().is_one());
    }

    #[test]
    fn bootstrap_examples() {
        let e = HallEngine::new();
        assert!(e.hall_polynomial(&p("[1]"), &p("[1]"), &p("[2]")).unwrap().poly().is_one());
        assert_eq!(e.hall_polynomial(&p("[1]"), &p("[1]"), &p("[1,1]")).unwrap().to_string(), "1 + 1*T^1");
        let g = e.hall_polynomial(&p("[2]"), &p("[1]"), &p("[2,1]")).unwrap();
        let b = brute_force_hall_count(&p("[2]"), &p("[1]"), &p("[2,1]"), 2, DEFAULT_GUARD).unwrap();
        assert_eq!(g.eval_int(2).unwrap(), b as i128);
        assert!(e.hall_polynomial(&p("[1]"), &p("[1]"), &p("[3]")).unwrap().is_zero());
    }

    #[test]
    fn text_round_trip() {
        let g: HallPoly = "-1*T^-1 + 2*T^3".parse().unwrap();
        assert_eq!(g.to_string().parse::<HallPoly>().unwrap(), g);
        assert!("1/2*T^1".parse::<HallPoly>().is_err());
    }
}
