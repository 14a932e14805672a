//! Realization of Λ_{t,θ} as symmetric polynomials in finitely many
//! variables x_1..x_n, through v_r ↦ q_r (ıHL functions Q^ı_λ) or v_r ↦ h_r
//! (modified ıHL functions H^ı_λ), and the ıSchur functions at t = 0.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactalg::{ct_from_poly, ct_int, ct_theta_pow, poly_from_ints, substitute, CoeffTTheta, RatFn, TValue, Var};
use crate::giambelli::{expand_in_basis, Zt, giambelli_direct, v_iota_vec, Expansion, Family, Mode, VExpr};
use crate::partitions::Partition;

/// Σ c_λ m_λ(x_1..x_n) over partitions with at most n parts.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteSymPoly {
    n: usize,
    terms: BTreeMap<Partition, CoeffTTheta>,
}

/// Distinct rearrangements of `v`.
fn orbit(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

fn padded(l: &Partition, n: usize) -> Vec<u32> {
    (0..n).map(|i| l.get(i) as u32).collect()
}

type ProductTable = RwLock<HashMap<(usize, Partition, Partition), Arc<Vec<(Partition, i64)>>>>;

/// m_λ·m_μ = Σ c_ν m_ν with c_ν the number of pairs (α, β) in the orbits of
/// λ and μ summing to ν.
fn monomial_product(n: usize, l: &Partition, m: &Partition) -> Arc<Vec<(Partition, i64)>> {
    static TABLE: OnceLock<ProductTable> = OnceLock::new();
    let table = TABLE.get_or_init(Default::default);
    let (l, m) = if l <= m { (l, m) } else { (m, l) };
    let key = (n, l.clone(), m.clone());
    if let Some(r) = table.read().get(&key) {
        return r.clone();
    }
    let ob = orbit(&padded(m, n));
    let counts = orbit(&padded(l, n))
        .par_iter()
        .map(|a| {
            let mut local: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
            for b in &ob {
                let s: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if s.windows(2).all(|w| w[0] >= w[1]) {
                    *local.entry(s).or_default() += 1;
                }
            }
            local
        })
        .reduce(BTreeMap::new, |mut x, y| {
            for (k, c) in y {
                *x.entry(k).or_default() += c;
            }
            x
        });
    let out: Vec<(Partition, i64)> = counts
        .into_iter()
        .map(|(s, c)| (Partition::from_parts(s.into_iter().map(|x| x as usize).collect()), c))
        .collect();
    let out = Arc::new(out);
    table.write().insert(key, out.clone());
    out
}

impl FiniteSymPoly {
    pub fn zero(n: usize) -> Self {
        FiniteSymPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, Partition::empty(), ct_int(1))
    }

    /// c·m_λ, zero when λ has more than n parts.
    pub fn monomial(n: usize, lambda: Partition, c: CoeffTTheta) -> Self {
        let mut p = Self::zero(n);
        p.add_term(lambda, &c);
        p
    }

    pub fn num_variables(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Partition, CoeffTTheta> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, lambda: Partition, c: &CoeffTTheta) {
        if lambda.len() > self.n || c.is_zero() {
            return;
        }
        let e = self.terms.entry(lambda.clone()).or_insert_with(|| CoeffTTheta::zero(Var::THETA));
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// Coefficient of the monomial x^α.
    pub fn monomial_coeff(&self, alpha: &[u32]) -> CoeffTTheta {
        let l = Partition::from_parts(alpha.iter().map(|&a| a as usize).collect());
        self.terms.get(&l).cloned().unwrap_or_else(|| CoeffTTheta::zero(Var::THETA))
    }

    /// Every monomial x^α with its coefficient.
    pub fn expand_orbits(&self) -> Vec<(Vec<u32>, CoeffTTheta)> {
        self.terms.iter().flat_map(|(l, c)| orbit(&padded(l, self.n)).into_iter().map(move |a| (a, c.clone()))).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ct_int(-1)))
    }

    pub fn scale(&self, c: &CoeffTTheta) -> Self {
        let mut out = Self::zero(self.n);
        for (l, d) in &self.terms {
            out.add_term(l.clone(), &(d * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "variable counts differ");
        let mut out = Self::zero(self.n);
        for (l, c) in &self.terms {
            for (m, d) in &other.terms {
                let cd = c * d;
                for (nu, k) in monomial_product(self.n, l, m).iter() {
                    out.add_term(nu.clone(), &(&cd * &ct_int(*k)));
                }
            }
        }
        out
    }

    /// Terms surviving x_{m+1} = ⋯ = x_n = 0.
    pub fn restrict(&self, m: usize) -> Self {
        let terms = self.terms.iter().filter(|(l, _)| l.len() <= m).map(|(l, c)| (l.clone(), c.clone())).collect();
        FiniteSymPoly { n: m, terms }
    }

    /// Applies t ↦ `t`, θ ↦ `theta` to every coefficient.
    pub fn specialize(&self, t: &TValue, theta: &CoeffTTheta) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &substitute(c, t, theta)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> =
            self.terms.iter().map(|(l, c)| json!({"lambda": l.parts(), "coeff": c.to_string()})).collect();
        json!({"numVariables": self.n, "basis": "monomial", "terms": terms})
    }
}

impl fmt::Display for FiniteSymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*m{l}")?;
        }
        Ok(())
    }
}

/// h_r = Σ_{λ⊢r} m_λ.
pub fn h_row(r: usize, n: usize) -> FiniteSymPoly {
    let mut p = FiniteSymPoly::zero(n);
    for l in Partition::all_with_max_len(r, n) {
        p.add_term(l, &ct_int(1));
    }
    p
}

/// e_r = m_{(1^r)}.
pub fn e_row(r: usize, n: usize) -> FiniteSymPoly {
    FiniteSymPoly::monomial(n, Partition::column(r), ct_int(1))
}

/// q_r: the u^r coefficient of Π (1 − t u x_i)/(1 − u x_i), which puts
/// (1 − t)^{ℓ(λ)} on m_λ.
pub fn q_row(r: usize, n: usize) -> FiniteSymPoly {
    let one_minus_t = ct_from_poly(poly_from_ints(Var::T, &[1, -1]));
    let mut p = FiniteSymPoly::zero(n);
    for l in Partition::all_with_max_len(r, n) {
        let mut c = ct_int(1);
        for _ in 0..l.len() {
            c = &c * &one_minus_t;
        }
        p.add_term(l, &c);
    }
    p
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// v_r ↦ q_r.
    QBasis,
    /// v_r ↦ h_r.
    HBasis,
}

impl std::str::FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" => Ok(Target::QBasis),
            "h" => Ok(Target::HBasis),
            _ => Err(Error::Parse(format!("unknown basis {s:?}, expected q or h"))),
        }
    }
}

fn generator(target: Target, r: usize, n: usize) -> FiniteSymPoly {
    match target {
        Target::QBasis => q_row(r, n),
        Target::HBasis => h_row(r, n),
    }
}

/// Substitutes v_r ↦ q_r or h_r in n variables. θ stays symbolic.
pub fn realize_v(e: &VExpr, target: Target, n: usize) -> FiniteSymPoly {
    let mut cache: HashMap<Partition, FiniteSymPoly> = HashMap::new();
    let mut out = FiniteSymPoly::zero(n);
    for (mu, c) in e.terms() {
        let p = v_product(mu, target, n, &mut cache);
        out = out.add(&p.scale(c));
    }
    out
}

fn v_product(mu: &Partition, target: Target, n: usize, cache: &mut HashMap<Partition, FiniteSymPoly>) -> FiniteSymPoly {
    if let Some(p) = cache.get(mu) {
        return p.clone();
    }
    let p = match mu.parts().split_last() {
        None => FiniteSymPoly::one(n),
        Some((&last, rest)) => {
            let head = v_product(&Partition::from_parts(rest.to_vec()), target, n, cache);
            head.mul(&generator(target, last, n))
        }
    };
    cache.insert(mu.clone(), p.clone());
    p
}

/// s^ı_λ = Π_{i<j} (1 − θL_{ij})(1 − R_{ij}) h_λ, in the v = h reading.
pub fn i_schur(lambda: &Partition) -> Arc<VExpr> {
    static MEMO: OnceLock<RwLock<HashMap<Partition, Arc<VExpr>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(e) = memo.read().get(lambda) {
        return e.clone();
    }
    let alpha: Vec<i32> = lambda.parts().iter().map(|&p| p as i32).collect();
    let e = Arc::new(giambelli_direct(&alpha, Family::Schur(Mode::Iota)));
    memo.write().insert(lambda.clone(), e.clone());
    e
}

/// Coefficients d_{λμ}(t, θ) of H^ı_μ in the ıSchur basis.
pub fn d_matrix(mu: &Partition) -> Result<Expansion> {
    let alpha: Vec<i32> = mu.parts().iter().map(|&p| p as i32).collect();
    expand_in_basis(&v_iota_vec(&alpha), i_schur)
}

/// The θ-free part of d_{λμ}(t, θ) = θ^{(|μ|−|λ|)/2} d_{λμ}(t), or `None`
/// when the coefficient is not of that form.
pub fn d_reduced(lambda: &Partition, mu: &Partition, d: &CoeffTTheta) -> Option<CoeffTTheta> {
    let gap = mu.size() as i64 - lambda.size() as i64;
    if gap < 0 || gap % 2 != 0 {
        return None;
    }
    let k = (gap / 2) as i32;
    match d.terms() {
        [(e, c)] if *e == k => Some(CoeffTTheta::constant(Var::THETA, c.clone())),
        _ => None,
    }
}

/// θ^a, used for specializing at θ = a or keeping θ symbolic.
pub fn theta_value(v: Option<i64>) -> CoeffTTheta {
    match v {
        Some(k) => ct_int(k),
        None => ct_theta_pow(1),
    }
}

/// t kept symbolic.
pub fn t_symbolic() -> TValue {
    TValue::Func(RatFn::x(Var::T))
}

/// V^ı_α read off the same product with Q(u) = Σ v_r u^r kept abstract, for
/// any integer α. Suffix sums of the u-exponent only grow as factors are
/// applied, so terms whose suffix sums exceed those of α are dropped and
/// the expansion is exact without a window.
pub fn generating_function_v(alpha: &[i32]) -> VExpr {
    let ell = alpha.len();
    let suffix = |e: &[i64]| -> Vec<i64> {
        let mut acc = 0;
        let mut out = vec![0; e.len()];
        for i in (0..e.len()).rev() {
            acc += e[i];
            out[i] = acc;
        }
        out
    };
    let bound = suffix(&alpha.iter().map(|&a| a as i64).collect::<Vec<_>>());
    let fits = |e: &[i64]| suffix(e).iter().zip(&bound).all(|(s, b)| s <= b);
    let mut series: HashMap<Vec<i64>, Zt> = HashMap::new();
    if fits(&vec![0; ell]) {
        series.insert(vec![0; ell], Zt::one());
    }
    let total = bound.first().copied().unwrap_or(0);
    // Column by column: once every pair (i, j) with i < j is applied, entry
    // j is final and α_j − γ_j must lie in [0, |α|].
    for j in (1..ell).rev() {
        for i in 0..j {
            for lowering in [false, true] {
                let mut next: HashMap<Vec<i64>, Zt> = HashMap::new();
                for (e, c) in &series {
                    for k in 0.. {
                        let mut e2 = e.clone();
                        if lowering {
                            e2[i] += k as i64;
                            e2[j] += k as i64;
                        } else {
                            e2[i] -= k as i64;
                            e2[j] += k as i64;
                        }
                        // the rest of column j only adds to entry j
                        if e2[j] > alpha[j] as i64 || !fits(&e2) {
                            break;
                        }
                        let ck = f_zt(k, if lowering { k as u32 } else { 0 }).mul(c);
                        next.entry(e2).or_default().add_assign(&ck);
                    }
                }
                next.retain(|_, c| !c.is_zero());
                series = next;
            }
        }
        let a = alpha[j] as i64;
        series.retain(|e, _| a - e[j] <= total);
    }
    let mut out = VExpr::zero();
    for (gamma, c) in &series {
        let rem: Vec<i64> = alpha.iter().zip(gamma).map(|(&a, &g)| a as i64 - g).collect();
        if rem.iter().any(|&r| r < 0) {
            continue;
        }
        let parts = rem.iter().filter(|&&r| r > 0).map(|&r| r as usize).collect();
        out.add_term(Partition::from_parts(parts), &c.to_coeff());
    }
    out
}

/// θ^a times the coefficient of u^k in F(u).
fn f_zt(k: usize, a: u32) -> Zt {
    if k == 0 {
        Zt::one()
    } else {
        Zt::from_terms(&[(a, k as u32, 1), (a, k as u32 - 1, -1)])
    }
}

/// Coefficient of u^k in F(u) = (1 − u)/(1 − tu).
fn f_coeff(k: usize) -> CoeffTTheta {
    if k == 0 {
        ct_int(1)
    } else {
        let mut c = vec![0i64; k + 1];
        c[k] = 1;
        c[k - 1] = -1;
        ct_from_poly(poly_from_ints(Var::T, &c))
    }
}

/// Q^ı_α as the u^α coefficient of Π_i Q(u_i) Π_{i<j} F(u_i⁻¹u_j) F(θu_iu_j),
/// F(u) = (1 − u)/(1 − tu), with each F-series truncated after u^window.
pub fn generating_function_coefficient(alpha: &[u32], n: usize, window: usize) -> FiniteSymPoly {
    let ell = alpha.len();
    let total: i64 = alpha.iter().map(|&a| a as i64).sum();
    // Scalar part: exponent vector in u ↦ coefficient in ℚ(t)[θ].
    let mut series: BTreeMap<Vec<i64>, CoeffTTheta> = BTreeMap::new();
    series.insert(vec![0; ell], ct_int(1));
    for i in 0..ell {
        for j in i + 1..ell {
            for lowering in [false, true] {
                let mut next: BTreeMap<Vec<i64>, CoeffTTheta> = BTreeMap::new();
                for (e, c) in &series {
                    for k in 0..=window {
                        let mut e2 = e.clone();
                        let mut ck = &f_coeff(k) * c;
                        if lowering {
                            e2[i] += k as i64;
                            e2[j] += k as i64;
                            ck = &ck * &ct_theta_pow(k as u32);
                        } else {
                            e2[i] -= k as i64;
                            e2[j] += k as i64;
                        }
                        // every remaining factor raises the total u-degree
                        if e2.iter().sum::<i64>() > total {
                            break;
                        }
                        let slot = next.entry(e2).or_insert_with(|| CoeffTTheta::zero(Var::THETA));
                        *slot = &*slot + &ck;
                    }
                }
                next.retain(|_, c| !c.is_zero());
                series = next;
            }
        }
    }
    // Q(u_i) supplies u_i^{α_i − γ_i} with coefficient q_{α_i − γ_i}.
    let mut out = FiniteSymPoly::zero(n);
    for (gamma, c) in &series {
        let rem: Vec<i64> = alpha.iter().zip(gamma).map(|(&a, &g)| a as i64 - g).collect();
        if rem.iter().any(|&r| r < 0) {
            continue;
        }
        let mut p = FiniteSymPoly::one(n);
        for r in rem {
            p = p.mul(&q_row(r as usize, n));
        }
        out = out.add(&p.scale(c));
    }
    out
}

/// det(h_{α_i − i + j}) for an integer vector α, with h_0 = 1 and h_k = 0 for
/// k < 0, in the v = h reading.
pub fn jacobi_trudi(alpha: &[i32]) -> VExpr {
    fn go(alpha: &[i32], row: usize, used: &mut Vec<bool>, sign: i64, acc: VExpr, out: &mut VExpr) {
        let ell = alpha.len();
        if row == ell {
            *out = out.add(&acc.scale(&ct_int(sign)));
            return;
        }
        // sign of the permutation from the inversions the new column adds
        let mut inv = 0;
        for j in 0..ell {
            if used[j] {
                continue;
            }
            let h = VExpr::v_row(alpha[row] - row as i32 + j as i32);
            if !h.is_zero() {
                used[j] = true;
                let s = if inv % 2 == 0 { sign } else { -sign };
                go(alpha, row + 1, used, s, acc.mul(&h), out);
                used[j] = false;
            }
            inv += 1;
        }
    }
    let mut out = VExpr::zero();
    go(alpha, 0, &mut vec![false; alpha.len()], 1, VExpr::one(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_coeff;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn orbits_and_products() {
        assert_eq!(orbit(&[2, 1, 0]).len(), 6);
        assert_eq!(orbit(&[1, 1, 0]).len(), 3);
        // m_1 · m_1 = m_2 + 2 m_11
        let m1 = FiniteSymPoly::monomial(3, p("[1]"), ct_int(1));
        let sq = m1.mul(&m1);
        assert_eq!(sq.terms()[&p("[2]")], ct_int(1));
        assert_eq!(sq.terms()[&p("[1,1]")], ct_int(2));
    }

    #[test]
    fn q_row_examples() {
        let q1 = q_row(1, 3);
        assert_eq!(q1.terms()[&p("[1]")], parse_coeff("(1 - 1*t^1)").unwrap());
        assert_eq!(q_row(0, 3), FiniteSymPoly::one(3));
        let at0 = q_row(3, 3).specialize(&TValue::Rational(crate::exactalg::rat(0)), &theta_value(None)).unwrap();
        assert_eq!(at0, h_row(3, 3));
    }

    #[test]
    fn i_schur_small() {
        let s11 = i_schur(&p("[1,1]"));
        let want = VExpr::v(&p("[1,1]")).sub(&VExpr::v(&p("[2]"))).sub(&VExpr::one().scale(&ct_theta_pow(1)));
        assert_eq!(*s11, want);
        assert_eq!(*i_schur(&p("[1]")), VExpr::v(&p("[1]")));
    }
}
