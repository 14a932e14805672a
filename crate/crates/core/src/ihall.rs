//! The ıHall algebra of the Jordan quiver with basis [S^{(λ)}]∗[K_S]^a,
//! coefficients in ℚ(q), and the isomorphism Φ onto Λ_{t,θ} at t = q⁻¹.
//!
//! The generic algebra with basis 𝔲_λ∗K_δ^a is the same object read with
//! T = q: its structure constants are 𝒢^λ_{μν}(T), the product carries
//! 𝒢(t⁻¹), and Φ(𝔲_λ) = t^{−|λ|−n(λ)} V^ı_λ, Φ(K_δ) = t⁻¹θ.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};
use parking_lot::RwLock;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{ct_from_ratfunc, ct_theta_pow, parse_ratfunc, rat, Poly, RatFn, Rational, Var};
use crate::giambelli::{from_expansion, v_iota, Expansion, VExpr};
use crate::hall::{aut_order, HallEngine, HallPoly};
use crate::partitions::{b_lambda, f_vertical, horizontal_strips, phi_r, phi_skew, psi_skew, vertical_strips, Direction, Partition};
use crate::pieri::PieriRule;

/// Basis index (λ, a) for [S^{(λ)}]∗[K_S]^a.
pub type BasisKey = (Partition, u32);

#[derive(Clone, Debug, Default, PartialEq)]
pub struct IHallElement {
    terms: BTreeMap<BasisKey, RatFn>,
}

fn qp(e: i32) -> RatFn {
    RatFn::from_poly(Poly::monomial(Var::Q, rat(1), e))
}

/// p(t) ↦ p(q⁻¹).
fn at_q_inv(p: &Poly) -> RatFn {
    RatFn::from_poly(p.compose_monomial(Var::Q, &rat(1), -1))
}

impl IHallElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Partition::empty(), 0)
    }

    pub fn basis(lambda: Partition, a: u32) -> Self {
        let mut e = Self::zero();
        e.terms.insert((lambda, a), RatFn::one());
        e
    }

    /// [S^{(λ)}].
    pub fn s(lambda: &Partition) -> Self {
        Self::basis(lambda.clone(), 0)
    }

    /// [K_S].
    pub fn k_s() -> Self {
        Self::basis(Partition::empty(), 1)
    }

    /// V̂^ı_λ = q^{−|λ|−n(λ)}[S^{(λ)}].
    pub fn v_hat(lambda: &Partition) -> Self {
        let mut e = Self::zero();
        e.add_term(lambda.clone(), 0, &qp(-((lambda.size() + lambda.n()) as i32)));
        e
    }

    pub fn terms(&self) -> &BTreeMap<BasisKey, RatFn> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition, a: u32) -> RatFn {
        self.terms.get(&(lambda.clone(), a)).cloned().unwrap_or_else(RatFn::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, a: u32, c: &RatFn) {
        if c.is_zero() {
            return;
        }
        let key = (lambda, a);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// self += c · other · [K_S]^shift.
    pub fn add_scaled(&mut self, other: &Self, c: &RatFn, shift: u32) {
        for ((l, a), x) in &other.terms {
            self.add_term(l.clone(), a + shift, &(x * c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &RatFn::one(), 0);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-RatFn::one(), 0);
        out
    }

    pub fn scale(&self, c: &RatFn) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c, 0);
        out
    }

    /// The weights |λ| + 2a present.
    pub fn weights(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.terms.keys().map(|(l, a)| l.size() + 2 * *a as usize).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    /// Coefficients at a numeric q.
    pub fn specialize(&self, q: &Rational) -> Result<BTreeMap<BasisKey, Rational>> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            let v = c.eval(q)?;
            if !v.is_zero() {
                out.insert(k.clone(), v);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((l, a), c)| json!({"lambda": l, "a": a, "coeff": c.to_string()}))
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("element JSON: {what}"));
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing \"terms\" array"))?;
        let mut out = Self::zero();
        for t in terms {
            let lambda: Partition = serde_json::from_value(t.get("lambda").cloned().ok_or_else(|| bad("missing \"lambda\""))?)?;
            let a = t.get("a").map_or(Some(0), Value::as_u64).ok_or_else(|| bad("\"a\" must be a natural number"))?;
            let c = match t.get("coeff") {
                None => RatFn::one(),
                Some(Value::String(s)) => parse_ratfunc(s, Var::Q)?,
                Some(Value::Number(n)) => RatFn::from_i64(Var::Q, n.as_i64().ok_or_else(|| bad("integer coefficient expected"))?),
                Some(_) => return Err(bad("\"coeff\" must be a string or integer")),
            };
            out.add_term(lambda, a as u32, &c);
        }
        Ok(out)
    }
}

/// ⟨N, L⟩ for the Jordan quiver: identically zero. Kept so the product
/// formula reads term by term like the general one.
fn euler_form(_n: &Partition, _l: &Partition) -> i32 {
    0
}

/// Multiplication in the ıHall algebra, memoized on basis pairs.
pub struct IHallAlgebra {
    hall: Arc<HallEngine>,
    products: RwLock<HashMap<(Partition, Partition), Arc<IHallElement>>>,
}

impl IHallAlgebra {
    pub fn new(hall: Arc<HallEngine>) -> Self {
        IHallAlgebra { hall, products: RwLock::new(HashMap::new()) }
    }

    pub fn shared() -> &'static IHallAlgebra {
        static ALG: OnceLock<IHallAlgebra> = OnceLock::new();
        ALG.get_or_init(|| IHallAlgebra::new(Arc::new(HallEngine::new())))
    }

    pub fn hall(&self) -> &HallEngine {
        &self.hall
    }

    /// [S^{(μ)}]∗[S^{(ν)}] =
    /// Σ G^λ_{N,L} G^μ_{X,N} G^ν_{L,X} |Aut N||Aut L||Aut X|/|Aut λ| [S^{(λ)}]∗[K_S]^{|X|}.
    pub fn basis_product(&self, mu: &Partition, nu: &Partition) -> Result<Arc<IHallElement>> {
        let key = (mu.clone(), nu.clone());
        if let Some(v) = self.products.read().get(&key) {
            return Ok(v.clone());
        }
        let xs: Vec<Partition> = (0..=mu.size().min(nu.size())).flat_map(Partition::all).collect();
        let hall = &self.hall;
        let parts: Vec<IHallElement> = xs
            .par_iter()
            .map(|x| -> Result<IHallElement> {
                let mut acc = IHallElement::zero();
                let aut_x = RatFn::from_poly(aut_order(x));
                for n in Partition::all(mu.size() - x.size()) {
                    let g1 = hall.hall_q(x, &n, mu)?;
                    if g1.is_zero() {
                        continue;
                    }
                    for l in Partition::all(nu.size() - x.size()) {
                        let g2 = hall.hall_q(&l, x, nu)?;
                        if g2.is_zero() {
                            continue;
                        }
                        let twist = qp(euler_form(&n, &l) - euler_form(mu, nu));
                        let c = twist
                            * RatFn::from_poly(&(&g1 * &g2) * &(&aut_order(&n) * &aut_order(&l)))
                            * aut_x.clone();
                        for (lambda, g) in hall.product(&n, &l)?.iter() {
                            let w = c.clone() * RatFn::from_poly(g.clone()) / RatFn::from_poly(aut_order(lambda));
                            acc.add_term(lambda.clone(), x.size() as u32, &w);
                        }
                    }
                }
                Ok(acc)
            })
            .collect::<Result<_>>()?;
        let mut out = IHallElement::zero();
        for p in &parts {
            out.add_scaled(p, &RatFn::one(), 0);
        }
        for ((lambda, a), c) in &out.terms {
            if c.to_laurent().is_none() {
                return Err(Error::NotPolynomial(format!("[S^{mu}]*[S^{nu}] at ({lambda}, {a}) has coefficient {c}")));
            }
        }
        let out = Arc::new(out);
        self.products.write().insert(key, out.clone());
        Ok(out)
    }

    pub fn multiply(&self, x: &IHallElement, y: &IHallElement) -> Result<IHallElement> {
        let mut out = IHallElement::zero();
        for ((l1, a1), c1) in &x.terms {
            for ((l2, a2), c2) in &y.terms {
                out.add_scaled(&*self.basis_product(l1, l2)?, &(c1 * c2), a1 + a2);
            }
        }
        Ok(out)
    }

    /// 𝒢^λ_{μν}(T) keyed by (λ, (|μ|+|ν|−|λ|)/2).
    pub fn structure_constants(&self, mu: &Partition, nu: &Partition) -> Result<BTreeMap<BasisKey, HallPoly>> {
        let mut out = BTreeMap::new();
        for ((lambda, a), c) in &self.basis_product(mu, nu)?.terms {
            let gap = mu.size() + nu.size();
            if lambda.size() + 2 * *a as usize != gap {
                return Err(Error::Parity(format!("[S^{lambda}]*[K_S]^{a} in [S^{mu}]*[S^{nu}]")));
            }
            let p = c.to_laurent().ok_or_else(|| Error::NotPolynomial(c.to_string()))?;
            out.insert((lambda.clone(), *a), HallPoly::new(p)?);
        }
        Ok(out)
    }
}

pub fn ihall_multiply(x: &IHallElement, y: &IHallElement) -> Result<IHallElement> {
    IHallAlgebra::shared().multiply(x, y)
}

/// Φ written in the V^ı basis: [S^{(λ)}]∗[K_S]^a ↦ q^{|λ|+n(λ)}(qθ)^a V^ı_λ
/// with q = t⁻¹.
pub fn phi_expansion(e: &IHallElement) -> Result<Expansion> {
    let mut by_lambda: BTreeMap<Partition, crate::exactalg::CoeffTTheta> = BTreeMap::new();
    for ((lambda, a), c) in &e.terms {
        let shifted = c.clone() * qp((lambda.size() + lambda.n()) as i32 + *a as i32);
        let in_t = shifted.compose_monomial(Var::T, &rat(1), -1)?;
        let term = &ct_from_ratfunc(in_t) * &ct_theta_pow(*a);
        let slot = by_lambda.entry(lambda.clone()).or_insert_with(|| crate::exactalg::ct_int(0));
        *slot = &*slot + &term;
    }
    by_lambda.retain(|_, c| !c.is_zero());
    Ok(by_lambda)
}

/// Φ(e) in the monomial basis v_μ.
pub fn phi_iso(e: &IHallElement) -> Result<VExpr> {
    Ok(from_expansion(&phi_expansion(e)?, v_iota))
}

/// V̂^ı_μ∗V̂^ı_{(r)} (horizontal kinds) or V̂^ı_μ∗V̂^ı_{(1^r)} (vertical kinds)
/// from the closed Hall-side formulas, in the [S^{(λ)}]∗[K_S]^a basis.
pub fn hall_pieri(kind: PieriRule, mu: &Partition, r: usize) -> Result<IHallElement> {
    let mut out = IHallElement::zero();
    let mut push = |lambda: Partition, a: usize, c: RatFn| {
        let norm = qp(-((lambda.size() + lambda.n()) as i32));
        out.add_term(lambda, a as u32, &(c * norm));
    };
    let phi_rr = at_q_inv(&phi_r(r));
    for a in 0..=r {
        let b = r - a;
        let qa = qp(-(a as i32));
        match kind {
            PieriRule::HorizontalDownUp => {
                for nu in horizontal_strips(mu, a, Direction::Down) {
                    let phi = at_q_inv(&phi_skew(mu, &nu)?);
                    for lambda in horizontal_strips(&nu, b, Direction::Up) {
                        let c = qa.clone() * phi.clone() * at_q_inv(&psi_skew(&lambda, &nu)?);
                        push(lambda, a, c);
                    }
                }
            }
            PieriRule::HorizontalUpDown => {
                for i in 0..=a.min(b) {
                    let w = if i == 0 { RatFn::one() } else { qp(-(i as i32)) - qp(1 - i as i32) };
                    for xi in horizontal_strips(mu, b - i, Direction::Up) {
                        let psi = at_q_inv(&psi_skew(&xi, mu)?);
                        for lambda in horizontal_strips(&xi, a - i, Direction::Down) {
                            let c = qa.clone() * w.clone() * at_q_inv(&phi_skew(&xi, &lambda)?) * psi.clone();
                            push(lambda, a, c);
                        }
                    }
                }
            }
            PieriRule::VerticalDownUp => {
                for nu in vertical_strips(mu, a, Direction::Down) {
                    let f_mu = at_q_inv(&f_vertical(&nu, a, mu));
                    let b_nu = at_q_inv(&b_lambda(&nu));
                    for lambda in vertical_strips(&nu, b, Direction::Up) {
                        let c = qa.clone() * b_nu.clone() / at_q_inv(&b_lambda(&lambda))
                            * phi_rr.clone()
                            * at_q_inv(&f_vertical(&nu, b, &lambda))
                            * f_mu.clone();
                        push(lambda, a, c);
                    }
                }
            }
            PieriRule::VerticalUpDown => {
                let b_mu = at_q_inv(&b_lambda(mu));
                for i in 0..=a.min(b) {
                    let sign = if i % 2 == 0 { RatFn::one() } else { -RatFn::one() };
                    let w = sign * qp(-(a as i32) - (i * i.saturating_sub(1) / 2) as i32) * phi_rr.clone()
                        / at_q_inv(&phi_r(i));
                    for xi in vertical_strips(mu, b - i, Direction::Up) {
                        let f_mu = at_q_inv(&f_vertical(mu, b - i, &xi));
                        let ratio = b_mu.clone() / at_q_inv(&b_lambda(&xi));
                        for lambda in vertical_strips(&xi, a - i, Direction::Down) {
                            let c = w.clone() * ratio.clone() * at_q_inv(&f_vertical(&lambda, a - i, &xi)) * f_mu.clone();
                            push(lambda, a, c);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_ratfunc;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(s: &str) -> RatFn {
        parse_ratfunc(s, Var::Q).unwrap()
    }

    #[test]
    fn s_times_s() {
        let alg = IHallAlgebra::new(Arc::new(HallEngine::new()));
        let s = IHallElement::s(&p("[1]"));
        let prod = alg.multiply(&s, &s).unwrap();
        let mut want = IHallElement::zero();
        want.add_term(p("[1,1]"), 0, &qp(-1));
        want.add_term(p("[2]"), 0, &(RatFn::one() - qp(-1)));
        want.add_term(Partition::empty(), 1, &q("-1 + 1*q^1"));
        assert_eq!(prod, want);
        let sc = alg.structure_constants(&p("[1]"), &p("[1]")).unwrap();
        assert_eq!(sc[&(p("[1,1]"), 0)].to_string(), "1*T^-1");
        assert_eq!(sc[&(p("[2]"), 0)].to_string(), "-1*T^-1 + 1");
        assert_eq!(sc[&(Partition::empty(), 1)].to_string(), "-1 + 1*T^1");
        assert_eq!(alg.multiply(&s, &IHallElement::one()).unwrap(), s);
    }

    #[test]
    fn semisimple_products() {
        let alg = IHallAlgebra::new(Arc::new(HallEngine::new()));
        // a = 2, b = 1
        let prod = alg.multiply(&IHallElement::s(&p("[2]")), &IHallElement::s(&p("[1]"))).unwrap();
        let mut want = IHallElement::zero();
        want.add_term(p("[2,1]"), 0, &qp(-1));
        want.add_term(p("[3]"), 0, &(RatFn::one() - qp(-1)));
        want.add_term(p("[1]"), 1, &(qp(1) - RatFn::one()));
        assert_eq!(prod, want);
        // a = 1, b = 2
        let prod = alg.multiply(&IHallElement::s(&p("[1]")), &IHallElement::s(&p("[1,1]"))).unwrap();
        let mut want = IHallElement::zero();
        want.add_term(p("[1,1,1]"), 0, &qp(-2));
        want.add_term(p("[2,1]"), 0, &(RatFn::one() - qp(-2)));
        want.add_term(p("[1]"), 1, &(qp(2) - RatFn::one()));
        assert_eq!(prod, want);
    }

    #[test]
    fn phi_examples() {
        let k = phi_iso(&IHallElement::k_s()).unwrap();
        assert_eq!(k.coeff(&Partition::empty()), &ct_theta_pow(1) * &ct_from_ratfunc(q("1*t^-1")));
        let s2 = phi_iso(&IHallElement::s(&p("[2]"))).unwrap();
        assert_eq!(s2, VExpr::v_row(2).scale(&ct_from_ratfunc(q("1*t^-2"))));
        let s = IHallElement::s(&p("[1]"));
        let lhs = phi_iso(&ihall_multiply(&s, &s).unwrap()).unwrap();
        let v1 = VExpr::v_row(1);
        assert_eq!(lhs, v1.mul(&v1).scale(&ct_from_ratfunc(q("1*t^-2"))));
    }

    #[test]
    fn hall_pieri_matches_product() {
        let alg = IHallAlgebra::new(Arc::new(HallEngine::new()));
        let mu = p("[1]");
        let prod = alg.multiply(&IHallElement::v_hat(&mu), &IHallElement::v_hat(&p("[2]"))).unwrap();
        assert_eq!(hall_pieri(PieriRule::HorizontalDownUp, &mu, 2).unwrap(), prod);
    }
}
