//! The four ıPieri rules, each from its own coefficient formula, the two
//! mirror identities, and the t = 0 rule for ıSchur functions.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{ct_int, ct_theta_pow, rf_poly, CoeffTTheta, Field, Poly, RatFn, Var};
use crate::giambelli::{expand_in_iota_basis, v_iota, v_iota_vec, Expansion, VExpr};
use crate::partitions::{
    b_lambda, f_vertical, horizontal_strips, n_count, phi_r, phi_skew, psi_skew, vertical_strips, Direction,
    Partition,
};

/// λ ↦ Σ_a θ^a c_{λ,a}(t), with c_{λ,a} accumulated in ℚ(t).
#[derive(Default)]
struct Acc(BTreeMap<Partition, BTreeMap<u32, RatFn>>);

impl Acc {
    fn add(&mut self, lambda: Partition, a: u32, c: RatFn) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(lambda).or_default().entry(a).or_insert_with(RatFn::zero);
        *slot += &c;
    }

    fn merge(&mut self, items: Vec<(Partition, u32, RatFn)>) {
        for (l, a, c) in items {
            self.add(l, a, c);
        }
    }

    /// Every θ-coefficient must reduce to a polynomial in ℤ[t].
    fn finish(self) -> Result<Expansion> {
        let mut out = Expansion::new();
        for (lambda, layers) in self.0 {
            let mut c = CoeffTTheta::zero(Var::THETA);
            for (a, r) in layers {
                if r.is_zero() {
                    continue;
                }
                let p = r.as_poly().ok_or_else(|| Error::NotPolynomial(format!("coefficient of {lambda}: {r}")))?;
                if !p.terms().iter().all(|(_, x)| x.is_integer()) {
                    return Err(Error::NotIntegral(format!("coefficient of {lambda}: {p}")));
                }
                c = &c + &(&ct_theta_pow(a) * &crate::exactalg::ct_from_poly(p.clone()));
            }
            if !c.is_zero() {
                out.insert(lambda, c);
            }
        }
        Ok(out)
    }
}

fn pp(p: Poly) -> RatFn {
    rf_poly(p)
}

fn t_pow_poly(e: i32) -> Poly {
    Poly::monomial(Var::T, crate::exactalg::rat(1), e)
}

/// V^ı_μ·v_r by going down a horizontal a-strip to ν and up a b-strip to λ:
/// Σ_{a+b=r} Σ θ^a φ_{μ/ν} ψ_{λ/ν} V^ı_λ.
pub fn pieri_horizontal_down_up(mu: &Partition, r: usize) -> Result<Expansion> {
    let mut acc = Acc::default();
    for a in 0..=r.min(mu.size()) {
        let b = r - a;
        let nus = horizontal_strips(mu, a, Direction::Down);
        let parts: Vec<Vec<(Partition, u32, RatFn)>> = nus
            .par_iter()
            .map(|nu| -> Result<Vec<(Partition, u32, RatFn)>> {
                let phi = phi_skew(mu, nu)?;
                let mut v = Vec::new();
                for lambda in horizontal_strips(nu, b, Direction::Up) {
                    let c = &phi * &psi_skew(&lambda, nu)?;
                    v.push((lambda, a as u32, pp(c)));
                }
                Ok(v)
            })
            .collect::<Result<_>>()?;
        for p in parts {
            acc.merge(p);
        }
    }
    acc.finish()
}

/// V^ı_μ·v_r by going up to ξ and down to λ, plus the (t^i − t^{i−1})
/// correction terms.
pub fn pieri_horizontal_up_down(mu: &Partition, r: usize) -> Result<Expansion> {
    let mut acc = Acc::default();
    for a in 0..=r {
        let b = r - a;
        for i in 0..=a.min(b) {
            let weight = if i == 0 { Poly::one(Var::T) } else { &t_pow_poly(i as i32) - &t_pow_poly(i as i32 - 1) };
            let xis = horizontal_strips(mu, b - i, Direction::Up);
            let parts: Vec<Vec<(Partition, u32, RatFn)>> = xis
                .par_iter()
                .map(|xi| -> Result<Vec<(Partition, u32, RatFn)>> {
                    let psi = &weight * &psi_skew(xi, mu)?;
                    let mut v = Vec::new();
                    for lambda in horizontal_strips(xi, a - i, Direction::Down) {
                        v.push((lambda.clone(), a as u32, pp(&psi * &phi_skew(xi, &lambda)?)));
                    }
                    Ok(v)
                })
                .collect::<Result<_>>()?;
            for p in parts {
                acc.merge(p);
            }
        }
    }
    acc.finish()
}

/// V^ı_μ·V^ı_{(1^r)} via ν ⊆ μ, λ:
/// Σ θ^a (b_ν/b_λ) φ_r f^λ_{ν,(1^b)} f^μ_{ν,(1^a)} V^ı_λ.
pub fn pieri_vertical_down_up(mu: &Partition, r: usize) -> Result<Expansion> {
    let mut acc = Acc::default();
    let phir = pp(phi_r(r));
    for a in 0..=r.min(mu.size()) {
        let b = r - a;
        for nu in vertical_strips(mu, a, Direction::Down) {
            let base = &(&phir * &pp(b_lambda(&nu))) * &pp(f_vertical(&nu, a, mu));
            for lambda in vertical_strips(&nu, b, Direction::Up) {
                let c = &(&base * &pp(f_vertical(&nu, b, &lambda))) * &pp(b_lambda(&lambda)).inv();
                acc.add(lambda, a as u32, c);
            }
        }
    }
    acc.finish()
}

/// V^ı_μ·V^ı_{(1^r)} via ξ ⊇ μ, λ, with the signed φ_r/φ_i correction sum.
pub fn pieri_vertical_up_down(mu: &Partition, r: usize) -> Result<Expansion> {
    let mut acc = Acc::default();
    let bmu = pp(b_lambda(mu));
    for a in 0..=r {
        let b = r - a;
        for i in 0..=a.min(b) {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let scalar = &(&pp(t_pow_poly((i * i.saturating_sub(1) / 2) as i32).scale(&crate::exactalg::rat(sign)))
                * &pp(phi_r(r)))
                * &pp(phi_r(i)).inv();
            let scalar = &scalar * &bmu;
            for xi in vertical_strips(mu, b - i, Direction::Up) {
                let base = &(&scalar * &pp(f_vertical(mu, b - i, &xi))) * &pp(b_lambda(&xi)).inv();
                for lambda in vertical_strips(&xi, a - i, Direction::Down) {
                    acc.add(lambda.clone(), a as u32, &base * &pp(f_vertical(&lambda, a - i, &xi)));
                }
            }
        }
    }
    acc.finish()
}

/// Rule selector used by the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriRule {
    HorizontalDownUp,
    HorizontalUpDown,
    VerticalDownUp,
    VerticalUpDown,
}

impl std::str::FromStr for PieriRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hdu" => Ok(PieriRule::HorizontalDownUp),
            "hud" => Ok(PieriRule::HorizontalUpDown),
            "vdu" => Ok(PieriRule::VerticalDownUp),
            "vud" => Ok(PieriRule::VerticalUpDown),
            _ => Err(Error::Parse(format!("unknown rule {s:?}"))),
        }
    }
}

impl PieriRule {
    pub fn apply(self, mu: &Partition, r: usize) -> Result<Expansion> {
        match self {
            PieriRule::HorizontalDownUp => pieri_horizontal_down_up(mu, r),
            PieriRule::HorizontalUpDown => pieri_horizontal_up_down(mu, r),
            PieriRule::VerticalDownUp => pieri_vertical_down_up(mu, r),
            PieriRule::VerticalUpDown => pieri_vertical_up_down(mu, r),
        }
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, PieriRule::VerticalDownUp | PieriRule::VerticalUpDown)
    }

    /// The same product computed by multiplying Giambelli polynomials and
    /// re-expanding in the V^ı basis.
    pub fn brute_force(self, mu: &Partition, r: usize) -> Result<Expansion> {
        let rhs = if self.is_vertical() { v_iota(&Partition::column(r)) } else { std::sync::Arc::new(VExpr::v_row(r as i32)) };
        let prod = v_iota(mu).mul(&rhs);
        expand_in_iota_basis(&prod, mu.size() + r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mirror {
    I,
    II,
}

fn length_of(v: &[i32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

fn one_minus_t_pow(k: usize) -> CoeffTTheta {
    let p = Poly::one(Var::T) - t_pow_poly(1);
    crate::exactalg::ct_from_poly(p.pow(k as u32))
}

/// Compositions of `total` into `parts` non-negative entries.
pub(crate) fn compositions(total: usize, parts: usize) -> Vec<Vec<i32>> {
    fn go(left: usize, k: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if k == 1 {
            cur.push(left as i32);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x as i32);
            go(left - x, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Both sides of a mirror identity in the v-monomial basis.
///
/// I (for ρ, b): Σ_{γ∈ℕ^{ℓ+1}, |γ|=b} (1−t)^{ℓ(γ_•)} V^ı_{ρ+γ} against
/// Σ_{ρ→λ} ψ_{λ/ρ} V^ı_λ, with ℓ = ℓ(ρ) and γ_• the first ℓ entries.
///
/// II (for μ, a, b): Σ_{β∈ℕ^ℓ, |β|=a} (1−t)^{ℓ(β)} V^ı_{μ−β,b} against
/// Σ_{ν→μ} φ_{μ/ν} V^ı_{ν,b}. Index vectors μ − β may have negative
/// entries; V^ı of such a vector is straightened, not set to zero.
///
/// II holds for b = 0 but not in general for b ≥ 1: at μ = (1,1), a = 2,
/// b = 1 the left side is (1−t)(t²−1)v_1 while the right side is empty.
pub fn mirror_sides(kind: Mirror, p: &Partition, a: usize, b: usize) -> Result<(VExpr, VExpr)> {
    let ell = p.len();
    let mut lhs = VExpr::zero();
    let mut rhs = VExpr::zero();
    match kind {
        Mirror::I => {
            let rho = p.padded(ell + 1);
            for gamma in compositions(b, ell + 1) {
                let idx: Vec<i32> = rho.iter().zip(&gamma).map(|(x, y)| x + y).collect();
                lhs.add_scaled(&v_iota_vec(&idx), &one_minus_t_pow(length_of(&gamma[..ell])));
            }
            for lambda in horizontal_strips(p, b, Direction::Up) {
                let c = crate::exactalg::ct_from_poly(psi_skew(&lambda, p)?);
                rhs.add_scaled(&v_iota(&lambda), &c);
            }
        }
        Mirror::II => {
            let mu = p.padded(ell);
            for beta in compositions(a, ell) {
                let mut idx: Vec<i32> = mu.iter().zip(&beta).map(|(x, y)| x - y).collect();
                idx.push(b as i32);
                lhs.add_scaled(&v_iota_vec(&idx), &one_minus_t_pow(length_of(&beta)));
            }
            for nu in horizontal_strips(p, a, Direction::Down) {
                let mut idx = nu.padded(ell);
                idx.push(b as i32);
                let c = crate::exactalg::ct_from_poly(phi_skew(p, &nu)?);
                rhs.add_scaled(&v_iota_vec(&idx), &c);
            }
        }
    }
    Ok((lhs, rhs))
}

pub fn mirror_identity_check(kind: Mirror, p: &Partition, a: usize, b: usize) -> Result<bool> {
    let (l, r) = mirror_sides(kind, p, a, b)?;
    Ok(l == r)
}

/// s^ı_μ·h_r = Σ_a Σ_{|λ| = |μ|+r−2a} θ^a N^λ_{μ,r} s^ı_λ.
pub fn ischur_pieri(mu: &Partition, r: usize) -> Expansion {
    let mut out = Expansion::new();
    for a in 0..=r.min(mu.size()) {
        let n = mu.size() + r - 2 * a;
        for lambda in Partition::all(n) {
            let c = n_count(mu, r, &lambda);
            if c > 0 {
                out.insert(lambda, &ct_theta_pow(a as u32) * &ct_int(c as i64));
            }
        }
    }
    out
}

/// Substitutes t = 0 into every coefficient.
pub fn at_t_zero(e: &Expansion) -> Result<Expansion> {
    let zero = crate::exactalg::TValue::Rational(crate::exactalg::rat(0));
    let theta = crate::exactalg::ct_theta();
    let mut out = Expansion::new();
    for (l, c) in e {
        let s = crate::exactalg::substitute(c, &zero, &theta)?;
        if !s.is_zero() {
            out.insert(l.clone(), s);
        }
    }
    Ok(out)
}

pub fn expansion_to_json(e: &Expansion) -> serde_json::Value {
    let mut keys: Vec<&Partition> = e.keys().collect();
    keys.sort_by(|a, b| b.size().cmp(&a.size()).then(a.cmp(b)));
    serde_json::Value::Array(
        keys.into_iter()
            .map(|l| serde_json::json!({"lambda": l.parts(), "coeff": e[l].to_string()}))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_coeff;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn first_examples() {
        let e = pieri_horizontal_down_up(&p("[1]"), 1).unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e[&p("[2]")], parse_coeff("(1 - 1*t^1)").unwrap());
        assert!(e[&p("[1,1]")].is_one());
        assert_eq!(e[&Partition::empty()], parse_coeff("(1 - 1*t^1)*θ^1").unwrap());
        assert_eq!(pieri_horizontal_up_down(&p("[1]"), 1).unwrap(), e);
        let e = pieri_horizontal_down_up(&Partition::empty(), 3).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e[&p("[3]")].is_one());
        let e = pieri_horizontal_up_down(&Partition::empty(), 2).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e[&p("[2]")].is_one());
        for r in 1..4 {
            for rule in [PieriRule::VerticalDownUp, PieriRule::VerticalUpDown] {
                let e = rule.apply(&Partition::empty(), r).unwrap();
                assert_eq!(e.len(), 1);
                assert!(e[&Partition::column(r)].is_one());
            }
        }
    }

    #[test]
    fn ischur_example() {
        let e = ischur_pieri(&p("[1]"), 1);
        assert_eq!(e.len(), 3);
        assert!(e[&p("[2]")].is_one());
        assert!(e[&p("[1,1]")].is_one());
        assert_eq!(e[&Partition::empty()], crate::exactalg::ct_theta());
    }

    #[test]
    fn mirror_examples() {
        assert!(mirror_identity_check(Mirror::I, &p("[1]"), 0, 1).unwrap());
        assert!(mirror_identity_check(Mirror::I, &Partition::empty(), 0, 3).unwrap());
        let (l, r) = mirror_sides(Mirror::II, &p("[1]"), 1, 0).unwrap();
        assert_eq!(l, r);
        assert_eq!(l, VExpr::one().scale(&parse_coeff("(1 - 1*t^1)").unwrap()));
    }
}
