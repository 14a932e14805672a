//! Identities among Hall numbers, each returned as a pair of rational
//! functions to be compared, plus the two triangular sequence transforms.

use num_traits::{One, Zero};

use super::{aut_order, col_pieri_q, ext_count, hom_order_exponent, q_pow, row_extensions, row_pieri_q, HallEngine};
use crate::error::Result;
use crate::exactalg::{rat, Poly, RatFn, Var};
use crate::partitions::{horizontal_strips, phi_r, vertical_strips, Direction, Partition};

/// Two sides of an identity.
#[derive(Clone, Debug)]
pub struct Sides {
    pub lhs: RatFn,
    pub rhs: RatFn,
}

impl Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn rf(p: Poly) -> RatFn {
    RatFn::from_poly(p)
}

fn qp(e: i32) -> RatFn {
    rf(q_pow(e))
}

fn aut(p: &Partition) -> RatFn {
    rf(aut_order(p))
}

fn aut_row(r: usize) -> RatFn {
    aut(&Partition::row(r))
}

/// φ_r(q) = (1−q)⋯(1−q^r).
fn phi_q(r: usize) -> RatFn {
    rf(phi_r(r).with_var(Var::Q))
}

/// φ_r(q⁻¹).
fn phi_q_inv(r: usize) -> RatFn {
    rf(phi_r(r).compose_monomial(Var::Q, &rat(1), -1))
}

fn sum_min(nu: &Partition, r: usize) -> i32 {
    hom_order_exponent(nu, &Partition::row(r)) as i32
}

/// Σ_{μ: ℓ(μ)=ℓ(ν)+1} |Ext¹(S^{(ν)},S^{(r)})_{S^{(μ)}}| = q^{Σ min(r,ν_i) − ℓ(ν)}.
pub fn ext_longer(nu: &Partition, r: usize) -> Result<Sides> {
    let mut lhs = RatFn::zero();
    for mu in row_extensions(nu, r).iter().filter(|m| m.len() == nu.len() + 1) {
        lhs += &rf(ext_count(nu, r, mu)?);
    }
    Ok(Sides { lhs, rhs: qp(sum_min(nu, r) - nu.len() as i32) })
}

/// Σ_{μ: ℓ(μ)=ℓ(ν)} |Ext¹(S^{(ν)},S^{(r)})_{S^{(μ)}}| = q^{Σ min(r,ν_i)}(1 − q^{−ℓ(ν)}).
pub fn ext_same_length(nu: &Partition, r: usize) -> Result<Sides> {
    let mut lhs = RatFn::zero();
    for mu in row_extensions(nu, r).iter().filter(|m| m.len() == nu.len()) {
        lhs += &rf(ext_count(nu, r, mu)?);
    }
    let rhs = qp(sum_min(nu, r)) * (RatFn::one() - qp(-(nu.len() as i32)));
    Ok(Sides { lhs, rhs })
}

/// Σ_μ φ_{ℓ(μ)−1}(q) |Ext¹(S^{(ν)},S^{(r)})_{S^{(μ)}}| = 0 for ν ≠ ∅.
pub fn ext_weighted_sum(nu: &Partition, r: usize) -> Result<Sides> {
    let mut lhs = RatFn::zero();
    for mu in row_extensions(nu, r) {
        lhs += &(phi_q(mu.len() - 1) * rf(ext_count(nu, r, &mu)?));
    }
    Ok(Sides { lhs, rhs: RatFn::zero() })
}

/// Σ_{ν: ℓ(ν) = ℓ(ω) − drop} G^ω_{ν,(r)} |Aut S^{(r)}| for drop ∈ {0, 1}.
pub fn gaut(omega: &Partition, r: usize, drop: usize) -> Result<Sides> {
    let ell = omega.len() as i32;
    let mut lhs = RatFn::zero();
    for nu in horizontal_strips(omega, r, Direction::Down) {
        if nu.len() + drop == omega.len() {
            lhs += &(rf(row_pieri_q(&nu, r, omega)?) * aut_row(r));
        }
    }
    let plus = omega.parts().iter().filter(|&&p| p > r).count() as i32;
    let minus = omega.parts().iter().filter(|&&p| p < r).count() as i32;
    let pre = qp(sum_min(omega, r) - ell);
    let rhs = if drop == 0 {
        pre * (qp(plus) - RatFn::one())
    } else {
        pre * (qp(ell) - qp(plus) - qp(minus) + RatFn::one())
    };
    Ok(Sides { lhs, rhs })
}

/// Σ_λ G^μ_{(1^r),λ} |Aut S^{(1^r)}| = Π_{j<r} (q^{ℓ(μ)} − q^j) for ℓ(μ) ≥ r.
pub fn sum_semisimple(engine: &HallEngine, mu: &Partition, r: usize) -> Result<Sides> {
    let col = Partition::column(r);
    let mut lhs = RatFn::zero();
    if mu.size() >= r {
        for lambda in Partition::all(mu.size() - r) {
            lhs += &rf(engine.hall_q(&col, &lambda, mu)?);
        }
    }
    lhs = lhs * aut(&col);
    let mut rhs = RatFn::one();
    for j in 0..r {
        rhs = rhs * (qp(mu.len() as i32) - qp(j as i32));
    }
    Ok(Sides { lhs, rhs })
}

fn v_pow(e: i32) -> RatFn {
    rf(Poly::monomial(Var::V, rat(1), e))
}

/// v^k [k]_v with [k]_v = (v^k − v^{−k})/(v − v^{−1}).
fn v_quantum(k: i32) -> RatFn {
    v_pow(k) * ((v_pow(k) - v_pow(-k)) / (v_pow(1) - v_pow(-1)))
}

/// The v-identity, q = v²:
/// Σ_{r≥1} v^{n−r}[n−r]_v q^{n−|μ^{(r)}|}(1 + q⁻¹ − q^{−1+μ′_{r+1}} − q^{−μ′_r}) = v^n[n]_v(q^{ℓ−1} − 1).
pub fn v_identity(mu: &Partition) -> Sides {
    let n = mu.size() as i32;
    let conj = mu.conjugate();
    let q = |e: i32| v_pow(2 * e);
    let mut lhs = RatFn::zero();
    for r in 1..=mu.size() {
        let removed: usize = mu.parts().iter().map(|&p| p.saturating_sub(r)).sum();
        let c_r = conj.get(r - 1) as i32;
        let c_next = conj.get(r) as i32;
        let bracket = RatFn::one() + q(-1) - q(c_next - 1) - q(-c_r);
        lhs += &(v_quantum(n - r as i32) * q(n - removed as i32) * bracket);
    }
    let rhs = v_quantum(n) * (q(mu.len() as i32 - 1) - RatFn::one());
    Sides { lhs, rhs }
}

/// Green's formula for row modules:
/// Σ_ξ G^ξ_{λ,(a)} G^ξ_{μ,(b)} / |Aut ξ| against the sum over i and ν.
pub fn green_rows(lambda: &Partition, mu: &Partition, a: usize, b: usize) -> Result<Sides> {
    let mut lhs = RatFn::zero();
    if lambda.size() + a == mu.size() + b {
        for xi in horizontal_strips(lambda, a, Direction::Up) {
            let g = row_pieri_q(mu, b, &xi)?;
            if !g.is_zero() {
                lhs += &(rf(&row_pieri_q(lambda, a, &xi)? * &g) / aut(&xi));
            }
        }
    }
    let den = aut_row(a) * aut_row(b) * aut(lambda) * aut(mu);
    let mut rhs = RatFn::zero();
    for i in 0..=a.min(b) {
        let ratio = aut_row(i) * aut_row(a - i) * aut_row(b - i);
        for nu in horizontal_strips(lambda, b - i, Direction::Down) {
            let g = row_pieri_q(&nu, a - i, mu)?;
            if !g.is_zero() {
                rhs += &(rf(&row_pieri_q(&nu, b - i, lambda)? * &g) * aut(&nu) * ratio.clone());
            }
        }
    }
    Ok(Sides { lhs, rhs: rhs / den })
}

/// 𝒰_{a,b} = Σ_ξ G^ξ_{λ,(a)} G^ξ_{μ,(b)} |Aut μ||Aut(a)||Aut(b)| / |Aut ξ|.
pub fn green_u(lambda: &Partition, mu: &Partition, a: usize, b: usize) -> Result<RatFn> {
    let mut acc = RatFn::zero();
    if lambda.size() + a == mu.size() + b {
        for xi in horizontal_strips(lambda, a, Direction::Up) {
            let g = row_pieri_q(mu, b, &xi)?;
            if !g.is_zero() {
                acc += &(rf(&row_pieri_q(lambda, a, &xi)? * &g) / aut(&xi));
            }
        }
    }
    Ok(acc * aut(mu) * aut_row(a) * aut_row(b))
}

/// 𝒱_{a,b} = Σ_ν G^λ_{ν,(b)} G^μ_{ν,(a)} |Aut ν||Aut(a)||Aut(b)| / |Aut λ|.
pub fn green_v(lambda: &Partition, mu: &Partition, a: usize, b: usize) -> Result<RatFn> {
    let mut acc = RatFn::zero();
    for nu in horizontal_strips(lambda, b, Direction::Down) {
        let g = row_pieri_q(&nu, a, mu)?;
        if !g.is_zero() {
            acc += &(rf(&row_pieri_q(&nu, b, lambda)? * &g) * aut(&nu));
        }
    }
    Ok(acc * aut_row(a) * aut_row(b) / aut(lambda))
}

/// The vertical analogue: Σ_ν G^λ_{ν,(1^b)} G^μ_{ν,(1^a)} |Aut ν|/|Aut λ| against
/// Σ_i Σ_ξ (−1)^i q^{−i(a+b)+C(i+1,2)}/φ_i(q⁻¹) G^ξ_{λ,(1^{a−i})} G^ξ_{μ,(1^{b−i})} |Aut μ|/|Aut ξ|.
pub fn green_columns(lambda: &Partition, mu: &Partition, a: usize, b: usize) -> Result<Sides> {
    let mut lhs = RatFn::zero();
    for nu in vertical_strips(lambda, b, Direction::Down) {
        let g = col_pieri_q(&nu, a, mu)?;
        if !g.is_zero() {
            lhs += &(rf(&col_pieri_q(&nu, b, lambda)? * &g) * aut(&nu));
        }
    }
    lhs = lhs / aut(lambda);
    let mut rhs = RatFn::zero();
    for i in 0..=a.min(b) {
        if lambda.size() + a != mu.size() + b {
            break;
        }
        let (i32_, s) = (i as i32, (a + b) as i32);
        let sign = if i % 2 == 0 { RatFn::one() } else { -RatFn::one() };
        let w = sign * qp(-i32_ * s + i32_ * (i32_ + 1) / 2) / phi_q_inv(i);
        for xi in vertical_strips(lambda, a - i, Direction::Up) {
            let g = col_pieri_q(mu, b - i, &xi)?;
            if !g.is_zero() {
                rhs += &(w.clone() * rf(&col_pieri_q(lambda, a - i, &xi)? * &g) / aut(&xi));
            }
        }
    }
    Ok(Sides { lhs, rhs: rhs * aut(mu) })
}

/// Square array indexed by (a, b).
pub type Grid = Vec<Vec<RatFn>>;

fn zero_grid(like: &Grid) -> Grid {
    like.iter().map(|row| vec![RatFn::zero(); row.len()]).collect()
}

/// 𝒰_{a,b} = 𝒱_{a,b} + Σ_{i≥1} q^{i−1}(q−1) 𝒱_{a−i,b−i}.
pub fn green_transform(v: &Grid) -> Grid {
    let mut u = zero_grid(v);
    for a in 0..v.len() {
        for b in 0..v[a].len() {
            let mut acc = v[a][b].clone();
            for i in 1..=a.min(b) {
                acc += &(qp(i as i32 - 1) * (qp(1) - RatFn::one()) * v[a - i][b - i].clone());
            }
            u[a][b] = acc;
        }
    }
    u
}

/// 𝒱_{a,b} = 𝒰_{a,b} − (q−1) Σ_{i≥1} 𝒰_{a−i,b−i}.
pub fn green_transform_inverse(u: &Grid) -> Grid {
    let mut v = zero_grid(u);
    for a in 0..u.len() {
        for b in 0..u[a].len() {
            let mut acc = u[a][b].clone();
            for i in 1..=a.min(b) {
                acc -= &((qp(1) - RatFn::one()) * u[a - i][b - i].clone());
            }
            v[a][b] = acc;
        }
    }
    v
}

/// 𝒰_{a,b} = Σ_i q^{−(a+b−i)i}/φ_i(q⁻¹) 𝒱_{a−i,b−i}.
pub fn vertical_transform(v: &Grid) -> Grid {
    let mut u = zero_grid(v);
    for a in 0..v.len() {
        for b in 0..v[a].len() {
            let mut acc = RatFn::zero();
            for i in 0..=a.min(b) {
                let e = -(((a + b - i) * i) as i32);
                acc += &(qp(e) / phi_q_inv(i) * v[a - i][b - i].clone());
            }
            u[a][b] = acc;
        }
    }
    u
}

/// 𝒱_{a,b} = Σ_i (−1)^i q^{−i(a+b)+C(i+1,2)}/φ_i(q⁻¹) 𝒰_{a−i,b−i}.
pub fn vertical_transform_inverse(u: &Grid) -> Grid {
    let mut v = zero_grid(u);
    for a in 0..u.len() {
        for b in 0..u[a].len() {
            let mut acc = RatFn::zero();
            for i in 0..=a.min(b) {
                let e = -((i * (a + b)) as i32) + (i * (i + 1) / 2) as i32;
                let term = qp(e) / phi_q_inv(i) * u[a - i][b - i].clone();
                if i % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            v[a][b] = acc;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_instances() {
        assert!(ext_longer(&p("[2,1]"), 2).unwrap().holds());
        assert!(ext_same_length(&p("[2,1]"), 2).unwrap().holds());
        assert!(ext_weighted_sum(&p("[2,1]"), 2).unwrap().holds());
        assert!(gaut(&p("[3,2,1]"), 2, 0).unwrap().holds());
        assert!(gaut(&p("[3,2,1]"), 2, 1).unwrap().holds());
        assert!(v_identity(&p("[3,1,1]")).holds());
        assert!(green_rows(&p("[2,1]"), &p("[2]"), 1, 2).unwrap().holds());
        assert!(green_columns(&p("[2,1]"), &p("[1,1]"), 1, 2).unwrap().holds());
        assert!(sum_semisimple(&HallEngine::new(), &p("[2,2,1]"), 2).unwrap().holds());
    }
}
