//! Truncated power series in z over the ıHall algebra with scalars in ℚ(v),
//! q = v², and checks of the transition identities among Ê, Ĥ, Θ̂, P̂ and T̂.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use num_traits::{One, Zero};
use parking_lot::RwLock;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{rat, Poly, RatFn, Var};
use crate::hall::aut_order;
use crate::ihall::{IHallAlgebra, IHallElement};
use crate::partitions::{phi_r, Partition};

/// v^e.
pub fn v_pow(e: i32) -> RatFn {
    RatFn::from_poly(Poly::monomial(Var::V, rat(1), e))
}

/// q^e = v^{2e}.
pub fn q_pow(e: i32) -> RatFn {
    v_pow(2 * e)
}

fn vi(n: i64) -> RatFn {
    RatFn::from_i64(Var::V, n)
}

/// A polynomial in q rewritten in v.
pub fn lift_q(p: &Poly) -> RatFn {
    RatFn::from_poly(p.compose_monomial(Var::V, &rat(1), 2))
}

/// φ_r(q) in v.
fn phi_q(r: usize) -> RatFn {
    lift_q(&phi_r(r).with_var(Var::Q))
}

/// Balanced quantum integer [n]_v = (v^n − v^{−n})/(v − v^{−1}).
pub fn quantum_int(n: i64) -> RatFn {
    (v_pow(n as i32) - v_pow(-(n as i32))) / (v_pow(1) - v_pow(-1))
}

/// Balanced quantum binomial [p n]_v.
pub fn quantum_binomial(p: i64, n: i64) -> RatFn {
    if n < 0 || n > p {
        return RatFn::zero();
    }
    let mut acc = RatFn::one();
    for k in 0..n {
        acc = acc * quantum_int(p - k) / quantum_int(k + 1);
    }
    acc
}

/// Σ_{n=0}^{p} (−1)^n v^{−dn} [p n]_v, which vanishes for |d| ≤ p − 1 with
/// d ≡ p − 1 mod 2.
pub fn qbinom_alternating_sum(p: i64, d: i64) -> RatFn {
    let mut acc = RatFn::zero();
    for n in 0..=p {
        let term = v_pow(-(d * n) as i32) * quantum_binomial(p, n);
        if n % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// The ıHall algebra with scalars extended to ℚ(v).
pub struct VRing<'a> {
    alg: &'a IHallAlgebra,
    lifted: RwLock<HashMap<(Partition, Partition), Arc<IHallElement>>>,
}

fn lift_element(e: &IHallElement) -> Result<IHallElement> {
    let mut out = IHallElement::zero();
    for ((l, a), c) in e.terms() {
        out.add_term(l.clone(), *a, &c.compose_monomial(Var::V, &rat(1), 2)?);
    }
    Ok(out)
}

impl<'a> VRing<'a> {
    pub fn new(alg: &'a IHallAlgebra) -> Self {
        VRing { alg, lifted: RwLock::new(HashMap::new()) }
    }

    fn basis_product(&self, mu: &Partition, nu: &Partition) -> Result<Arc<IHallElement>> {
        let key = (mu.clone(), nu.clone());
        if let Some(p) = self.lifted.read().get(&key) {
            return Ok(p.clone());
        }
        let p = Arc::new(lift_element(&*self.alg.basis_product(mu, nu)?)?);
        self.lifted.write().insert(key, p.clone());
        Ok(p)
    }

    pub fn multiply(&self, x: &IHallElement, y: &IHallElement) -> Result<IHallElement> {
        let mut out = IHallElement::zero();
        for ((l1, a1), c1) in x.terms() {
            for ((l2, a2), c2) in y.terms() {
                out.add_scaled(&*self.basis_product(l1, l2)?, &(c1 * c2), a1 + a2);
            }
        }
        Ok(out)
    }

    fn commutes(&self, x: &IHallElement, y: &IHallElement) -> Result<bool> {
        Ok(self.multiply(x, y)? == self.multiply(y, x)?)
    }
}

/// Σ_{k=0}^{N} c_k z^k, exact modulo z^{N+1}.
#[derive(Clone, Debug, PartialEq)]
pub struct IHallSeries {
    coeffs: Vec<IHallElement>,
}

impl IHallSeries {
    pub fn zero(order: usize) -> Self {
        IHallSeries { coeffs: vec![IHallElement::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = IHallElement::one();
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<IHallElement>, order: usize) -> Self {
        coeffs.resize(order + 1, IHallElement::zero());
        IHallSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &IHallElement {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[IHallElement] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        IHallSeries { coeffs: (0..=n).map(|k| self.coeffs[k].add(&other.coeffs[k])).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        IHallSeries { coeffs: (0..=n).map(|k| self.coeffs[k].sub(&other.coeffs[k])).collect() }
    }

    pub fn scale(&self, c: &RatFn) -> Self {
        IHallSeries { coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    /// z ↦ c·z.
    pub fn scale_z(&self, c: &RatFn) -> Self {
        let mut pow = RatFn::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            coeffs.push(x.scale(&pow));
            pow = pow * c.clone();
        }
        IHallSeries { coeffs }
    }

    pub fn derivative(&self) -> Self {
        let n = self.order().saturating_sub(1);
        let coeffs = (0..=n)
            .map(|k| self.coeffs.get(k + 1).map_or_else(IHallElement::zero, |x| x.scale(&vi(k as i64 + 1))))
            .collect();
        IHallSeries { coeffs }
    }

    pub fn mul(&self, other: &Self, ring: &VRing) -> Result<Self> {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .into_par_iter()
            .map(|k| {
                let mut acc = IHallElement::zero();
                for i in 0..=k {
                    if self.coeffs[i].is_zero() || other.coeffs[k - i].is_zero() {
                        continue;
                    }
                    acc = acc.add(&ring.multiply(&self.coeffs[i], &other.coeffs[k - i])?);
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IHallSeries { coeffs })
    }

    fn assert_commutative(&self, ring: &VRing) -> Result<()> {
        for i in 1..self.coeffs.len() {
            for j in i + 1..self.coeffs.len() {
                if !ring.commutes(&self.coeffs[i], &self.coeffs[j])? {
                    return Err(Error::Series(format!("coefficients of z^{i} and z^{j} do not commute")));
                }
            }
        }
        Ok(())
    }

    /// The scalar c with constant term c·[0], if it has that form.
    fn scalar_constant(&self) -> Option<RatFn> {
        let c0 = &self.coeffs[0];
        match c0.terms().len() {
            0 => Some(RatFn::zero()),
            1 => {
                let ((l, a), c) = c0.terms().iter().next().unwrap();
                (l.is_empty() && *a == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// exp(x) for x with zero constant term, via n·E_n = Σ_k k·x_k·E_{n−k}.
    pub fn exp(&self, ring: &VRing) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("exp needs a zero constant term".into()));
        }
        self.assert_commutative(ring)?;
        let n = self.order();
        let mut e = vec![IHallElement::one()];
        for m in 1..=n {
            let mut acc = IHallElement::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&ring.multiply(&self.coeffs[k], &e[m - k])?.scale(&vi(k as i64)));
                }
            }
            e.push(acc.scale(&vi(m as i64).inv_or_zero()));
        }
        Ok(IHallSeries { coeffs: e })
    }

    /// log(x) for x with constant term 1, via n·L_n = n·x_n − Σ_{k<n} k·L_k·x_{n−k}.
    pub fn log(&self, ring: &VRing) -> Result<Self> {
        if self.scalar_constant().map_or(true, |c| !c.is_one()) {
            return Err(Error::Series("log needs constant term 1".into()));
        }
        self.assert_commutative(ring)?;
        let n = self.order();
        let mut l = vec![IHallElement::zero()];
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale(&vi(m as i64));
            for k in 1..m {
                if !l[k].is_zero() && !self.coeffs[m - k].is_zero() {
                    acc = acc.sub(&ring.multiply(&l[k], &self.coeffs[m - k])?.scale(&vi(k as i64)));
                }
            }
            l.push(acc.scale(&vi(m as i64).inv_or_zero()));
        }
        Ok(IHallSeries { coeffs: l })
    }

    /// 1/x for x whose constant term is an invertible scalar.
    pub fn inverse(&self, ring: &VRing) -> Result<Self> {
        let c = self
            .scalar_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::Series("inverse needs an invertible scalar constant term".into()))?;
        let cinv = c.inv_or_zero();
        let mut y = vec![IHallElement::one().scale(&cinv)];
        for m in 1..=self.order() {
            let mut acc = IHallElement::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&ring.multiply(&self.coeffs[k], &y[m - k])?);
                }
            }
            y.push(acc.scale(&-cinv.clone()));
        }
        Ok(IHallSeries { coeffs: y })
    }

    /// x^{1/2} = exp(½ log x) for x with constant term 1.
    pub fn sqrt(&self, ring: &VRing) -> Result<Self> {
        self.log(ring)?.scale(&(RatFn::one() / vi(2))).exp(ring)
    }

    pub fn pow(&self, k: u32, ring: &VRing) -> Result<Self> {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self, ring)?;
        }
        Ok(acc)
    }

    /// Σ_{r≥0} x^r/φ_r(q), which is exp_q(x/(1−q)); x needs zero constant term.
    pub fn exp_q(&self, ring: &VRing) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("exp_q needs a zero constant term".into()));
        }
        let mut acc = Self::one(self.order());
        let mut power = Self::one(self.order());
        for r in 1..=self.order() {
            power = power.mul(self, ring)?;
            acc = acc.add(&power.scale(&phi_q(r).inv_or_zero()));
        }
        Ok(acc)
    }

    /// exp(Σ_{k≥1} x^k/(k(1−q^k))), the exponential form of exp_q(x/(1−q)).
    pub fn exp_q_via_exp(&self, ring: &VRing) -> Result<Self> {
        let mut arg = Self::zero(self.order());
        let mut power = Self::one(self.order());
        for k in 1..=self.order() {
            power = power.mul(self, ring)?;
            let c = (vi(k as i64) * (RatFn::one() - q_pow(k as i32))).inv_or_zero();
            arg = arg.add(&power.scale(&c));
        }
        arg.exp(ring)
    }
}

trait InvOrZero {
    fn inv_or_zero(&self) -> Self;
}

impl InvOrZero for RatFn {
    fn inv_or_zero(&self) -> Self {
        if self.is_zero() {
            RatFn::zero()
        } else {
            RatFn::one() / self.clone()
        }
    }
}

fn aut_v(lambda: &Partition) -> RatFn {
    lift_q(&aut_order(lambda))
}

/// [S^{(λ)}]/|Aut S^{(λ)}| with scalars in v.
fn normalized(lambda: &Partition) -> IHallElement {
    IHallElement::s(lambda).scale(&aut_v(lambda).inv_or_zero())
}

/// Ê(z) = Σ v^{r(r−1)} [S^{(1^r)}]/|Aut S^{(1^r)}| z^r.
pub fn series_e(n: usize) -> IHallSeries {
    let coeffs = (0..=n).map(|r| normalized(&Partition::column(r)).scale(&v_pow((r * r.saturating_sub(1)) as i32))).collect();
    IHallSeries { coeffs }
}

/// Ĥ(z) = Σ_r Σ_{λ⊢r} [S^{(λ)}]/|Aut S^{(λ)}| z^r.
pub fn series_h(n: usize) -> IHallSeries {
    let coeffs = (0..=n)
        .map(|r| Partition::all(r).iter().fold(IHallElement::zero(), |acc, l| acc.add(&normalized(l))))
        .collect();
    IHallSeries { coeffs }
}

/// Θ̂(z) = Σ [S^{(r)}] z^r.
pub fn series_theta(n: usize) -> IHallSeries {
    IHallSeries { coeffs: (0..=n).map(|r| IHallElement::s(&Partition::row(r))).collect() }
}

/// P̂_r = Σ_{λ⊢r} φ_{ℓ(λ)−1}(q) [S^{(λ)}]/|Aut S^{(λ)}| for r ≥ 1.
pub fn p_hat(r: usize) -> IHallElement {
    Partition::all(r)
        .iter()
        .fold(IHallElement::zero(), |acc, l| acc.add(&normalized(l).scale(&phi_q(l.len() - 1))))
}

/// P̂(z) = Σ_{r≥1} P̂_r z^{r−1}.
pub fn series_p(n: usize) -> IHallSeries {
    IHallSeries { coeffs: (0..=n).map(|k| p_hat(k + 1)).collect() }
}

/// T̂_m = v^m [m]_v/m · P̂_m − δ_{m even} v^{m/2} [m/2]_v/m · [K_S]^{m/2}.
pub fn t_hat(m: usize) -> IHallElement {
    let mi = m as i64;
    let mut t = p_hat(m).scale(&(v_pow(m as i32) * quantum_int(mi) / vi(mi)));
    if m % 2 == 0 {
        let h = m / 2;
        let c = v_pow(h as i32) * quantum_int(h as i64) / vi(mi);
        t = t.sub(&IHallElement::basis(Partition::empty(), h as u32).scale(&c));
    }
    t
}

/// K_S^k z^{2k} scaled by c(k), summed over k ≥ 1.
fn k_series(n: usize, c: impl Fn(usize) -> RatFn) -> IHallSeries {
    let mut s = IHallSeries::zero(n);
    for k in 1..=n / 2 {
        s.coeffs[2 * k] = IHallElement::basis(Partition::empty(), k as u32).scale(&c(k));
    }
    s
}

/// [K_S] z².
fn kz2(n: usize) -> IHallSeries {
    k_series(n, |k| if k == 1 { RatFn::one() } else { RatFn::zero() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    HE,
    TE1,
    TE2,
    TP,
    EP,
    HP,
    ThT,
    PE,
}

impl Identity {
    pub const ALL: [Identity; 8] =
        [Identity::HE, Identity::TE1, Identity::TE2, Identity::TP, Identity::EP, Identity::HP, Identity::ThT, Identity::PE];
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub z_power: usize,
    pub term: String,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: Identity,
    pub order: usize,
    pub pass: bool,
    pub first_failure: Option<Failure>,
    pub elapsed_ms: u128,
}

impl IdentityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity.to_string(),
            "order": self.order,
            "pass": self.pass,
            "firstFailure": self.first_failure.as_ref().map(|f| json!({"zPower": f.z_power, "term": f.term})),
            "elapsedMs": self.elapsed_ms as u64,
        })
    }
}

/// First z-power and basis term where the two series differ, up to `order`.
pub fn first_difference(lhs: &IHallSeries, rhs: &IHallSeries, order: usize) -> Option<Failure> {
    for k in 0..=order {
        let (a, b) = (lhs.coeff(k), rhs.coeff(k));
        if a != b {
            let d = a.sub(b);
            let ((l, e), _) = d.terms().iter().next().expect("nonzero difference");
            return Some(Failure {
                z_power: k,
                term: format!("[S^{l}]*[K_S]^{e}: {} vs {}", a.coeff(l, *e), b.coeff(l, *e)),
            });
        }
    }
    None
}

/// Both sides of `id` up to z^n.
pub fn identity_sides(id: Identity, n: usize, ring: &VRing) -> Result<(IHallSeries, IHallSeries)> {
    let minus = -RatFn::one();
    Ok(match id {
        Identity::HE => {
            let lhs = series_h(n).mul(&series_e(n).scale_z(&minus), ring)?;
            (lhs, kz2(n).exp_q(ring)?)
        }
        Identity::TE1 => {
            let lhs = series_theta(n).mul(&series_e(n).scale_z(&-q_pow(1)), ring)?;
            let factor = IHallSeries::one(n).sub(&kz2(n).scale(&q_pow(1)));
            (lhs, factor.mul(&series_e(n).scale_z(&minus), ring)?)
        }
        Identity::TE2 => {
            let factor = IHallSeries::one(n).sub(&kz2(n));
            let lhs = series_theta(n).mul(&factor, ring)?.mul(&series_h(n), ring)?;
            (lhs, series_h(n).scale_z(&q_pow(1)))
        }
        Identity::TP => {
            let mut arg = IHallSeries::zero(n);
            for r in 1..=n {
                arg.coeffs[r] = p_hat(r).scale(&((q_pow(r as i32) - RatFn::one()) / vi(r as i64)));
            }
            let kpart = k_series(n, |k| (RatFn::one() - q_pow(k as i32)) / vi(2 * k as i64));
            (series_theta(n), arg.exp(ring)?.mul(&kpart.exp(ring)?, ring)?)
        }
        Identity::EP | Identity::HP => {
            let mut arg = IHallSeries::zero(n);
            for r in 1..=n {
                let sign = if id == Identity::EP && r % 2 == 0 { -1 } else { 1 };
                arg.coeffs[r] = p_hat(r).scale(&(vi(sign) / vi(r as i64)));
            }
            let root = kz2(n).exp_q(ring)?.sqrt(ring)?;
            let lhs = if id == Identity::EP { series_e(n) } else { series_h(n) };
            (lhs, arg.exp(ring)?.mul(&root, ring)?)
        }
        Identity::ThT => {
            // T̂ from its closed form must satisfy m·Θ̂_m = (v − v⁻¹) Σ_l l·T̂_l·Θ̂_{m−l}
            // with Θ̂_m = [S^{(m)}]/(v − v⁻¹).
            let dv = v_pow(1) - v_pow(-1);
            let theta_m = |m: usize| IHallElement::s(&Partition::row(m)).scale(&dv.inv_or_zero());
            let mut lhs = IHallSeries::zero(n);
            let mut rhs = IHallSeries::zero(n);
            for m in 1..=n {
                lhs.coeffs[m] = theta_m(m).scale(&vi(m as i64));
                let mut acc = IHallElement::zero();
                for l in 1..=m {
                    acc = acc.add(&ring.multiply(&t_hat(l), &theta_m(m - l))?.scale(&vi(l as i64)));
                }
                rhs.coeffs[m] = acc.scale(&dv);
            }
            (lhs, rhs)
        }
        Identity::PE => {
            let e = series_e(n + 1);
            let lhs = series_p(n).scale_z(&minus).mul(&e.truncate(n), ring)?;
            let tail = k_series(n + 1, |k| (RatFn::one() - q_pow(k as i32)).inv_or_zero());
            // Σ_k [K_S]^k z^{2k−1}: shift the z^{2k} series down by one.
            let shifted = IHallSeries::from_coeffs(tail.coeffs[1..].to_vec(), n);
            let rhs = e.derivative().sub(&e.truncate(n).mul(&shifted, ring)?);
            (lhs, rhs)
        }
    })
}

/// Checks `id` coefficientwise up to z^n; n above `budget` is refused.
pub fn verify_identity(id: Identity, n: usize, budget: usize, ring: &VRing) -> Result<IdentityReport> {
    if n > budget {
        return Err(Error::SizeGuard(format!("order {n} exceeds budget {budget}")));
    }
    let start = Instant::now();
    let (lhs, rhs) = identity_sides(id, n, ring)?;
    let first_failure = first_difference(&lhs, &rhs, n);
    Ok(IdentityReport { identity: id, order: n, pass: first_failure.is_none(), first_failure, elapsed_ms: start.elapsed().as_millis() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_examples() {
        let e = series_e(2);
        let want = IHallElement::s(&Partition::row(1)).scale(&(q_pow(1) - RatFn::one()).inv_or_zero());
        assert_eq!(e.coeff(1), &want);
        assert_eq!(series_theta(0).coeff(0), &IHallElement::one());
        let p2 = p_hat(2);
        let want = normalized(&Partition::row(2)).add(&normalized(&Partition::column(2)).scale(&phi_q(1)));
        assert_eq!(p2, want);
    }

    #[test]
    fn exp_q_small() {
        let alg = IHallAlgebra::shared();
        let ring = VRing::new(alg);
        let s = kz2(4).exp_q(&ring).unwrap();
        let want = IHallElement::k_s().scale(&(RatFn::one() - q_pow(1)).inv_or_zero());
        assert_eq!(s.coeff(2), &want);
        assert_eq!(IHallSeries::zero(3).exp_q(&ring).unwrap(), IHallSeries::one(3));
        assert_eq!(kz2(8).exp_q(&ring).unwrap(), kz2(8).exp_q_via_exp(&ring).unwrap());
    }

    #[test]
    fn quantum_binomial_sums() {
        for p in 1..=10i64 {
            for d in -(p - 1)..=(p - 1) {
                if (d - (p - 1)).rem_euclid(2) == 0 {
                    assert!(qbinom_alternating_sum(p, d).is_zero(), "p={p} d={d}");
                }
            }
        }
    }

    #[test]
    fn low_order_identities() {
        let ring = VRing::new(IHallAlgebra::shared());
        for id in Identity::ALL {
            let r = verify_identity(id, 3, 10, &ring).unwrap();
            assert!(r.pass, "{id}: {:?}", r.first_failure);
        }
    }
}
