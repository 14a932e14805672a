//! The ring Λ_{t,θ} in the monomial basis v_μ and the Giambelli
//! polynomials V_α, V^ı_α built from raising and lowering operators.
//!
//! Two independent evaluators are provided:
//! - [`giambelli_v`] expands the operator product directly on index vectors;
//! - [`GiambelliEngine`] uses the length recursion that peels off the last
//!   column of operators, memoized over all intermediate index vectors.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactalg::{ct_from_poly, ct_int, ct_theta_pow, poly_from_ints, CoeffTTheta, Var};
use crate::partitions::Partition;

/// Finite linear combination Σ c_μ v_μ with coefficients in ℚ(t)[θ].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct VExpr {
    terms: BTreeMap<Partition, CoeffTTheta>,
}

/// A map λ ↦ c_λ, read as Σ c_λ B_λ for whichever basis B produced it.
pub type Expansion = BTreeMap<Partition, CoeffTTheta>;

impl VExpr {
    pub fn zero() -> Self {
        VExpr::default()
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), ct_int(1))
    }

    pub fn monomial(mu: Partition, c: CoeffTTheta) -> Self {
        let mut e = VExpr::zero();
        e.add_term(mu, &c);
        e
    }

    /// v_r, with v_0 = 1 and v_r = 0 for r < 0.
    pub fn v_row(r: i32) -> Self {
        match r {
            r if r < 0 => Self::zero(),
            0 => Self::one(),
            r => Self::monomial(Partition::row(r as usize), ct_int(1)),
        }
    }

    pub fn v(mu: &Partition) -> Self {
        Self::monomial(mu.clone(), ct_int(1))
    }

    pub fn terms(&self) -> &BTreeMap<Partition, CoeffTTheta> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, CoeffTTheta> {
        self.terms
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, CoeffTTheta)>) -> Self {
        let mut e = VExpr::zero();
        for (mu, c) in terms {
            e.add_term(mu, &c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> CoeffTTheta {
        self.terms.get(mu).cloned().unwrap_or_else(|| CoeffTTheta::zero(Var::THETA))
    }

    pub fn add_term(&mut self, mu: Partition, c: &CoeffTTheta) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(acc) => {
                *acc = &*acc + c;
                if acc.is_zero() {
                    self.terms.remove(&mu);
                }
            }
            None => {
                self.terms.insert(mu, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &VExpr, c: &CoeffTTheta) {
        if c.is_zero() {
            return;
        }
        for (mu, a) in &other.terms {
            self.add_term(mu.clone(), &(a * c));
        }
    }

    pub fn add(&self, other: &VExpr) -> VExpr {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &VExpr) -> VExpr {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &CoeffTTheta) -> VExpr {
        let mut out = VExpr::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &VExpr) -> VExpr {
        let mut out = VExpr::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), &(ca * cb));
            }
        }
        out
    }

    /// Multiplication by v_r.
    pub fn mul_v_row(&self, r: i32) -> VExpr {
        match r {
            r if r < 0 => VExpr::zero(),
            0 => self.clone(),
            r => VExpr { terms: self.terms.iter().map(|(mu, c)| (mu.with_part(r as usize), c.clone())).collect() },
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&CoeffTTheta) -> Result<CoeffTTheta>) -> Result<VExpr> {
        let mut out = VExpr::zero();
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Largest weight |μ| + 2·deg_θ over the terms (θ has weight 2).
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|(mu, c)| mu.size() + 2 * c.degree().unwrap_or(0).max(0) as usize).max()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.size().cmp(&a.size()).then(a.cmp(b)));
        let terms: Vec<serde_json::Value> = keys
            .into_iter()
            .map(|mu| json!({"mu": mu.parts(), "coeff": self.terms[mu].to_string()}))
            .collect();
        json!({ "terms": terms })
    }
}

impl std::fmt::Display for VExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mu, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*v{mu}")?;
        }
        Ok(())
    }
}

/// Which operator factors are applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Raising factors only: V_α.
    Classical,
    /// Raising and θ-weighted lowering factors: V^ı_α.
    Iota,
}

/// The scalar series attached to each operator factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// F(u) = (1−u)/(1−tu) = 1 + Σ_{p≥1} (t^p − t^{p−1}) u^p.
    HallLittlewood(Mode),
    /// The t = 0 specialization 1 − u (ıSchur and Schur functions).
    Schur(Mode),
}

impl Family {
    fn lowering(self) -> bool {
        matches!(self, Family::HallLittlewood(Mode::Iota) | Family::Schur(Mode::Iota))
    }

    fn max_power(self) -> Option<i32> {
        match self {
            Family::HallLittlewood(_) => None,
            Family::Schur(_) => Some(1),
        }
    }

    /// Coefficient of R^p in the raising factor.
    pub fn raise_coeff(self, p: i32) -> CoeffTTheta {
        match (self, p) {
            (_, 0) => ct_int(1),
            (Family::HallLittlewood(_), p) => {
                let mut c = vec![0i64; p as usize + 1];
                c[p as usize] = 1;
                c[p as usize - 1] = -1;
                ct_from_poly(poly_from_ints(Var::T, &c))
            }
            (Family::Schur(_), 1) => ct_int(-1),
            _ => CoeffTTheta::zero(Var::THETA),
        }
    }

    /// Coefficient of L^p in the θ-weighted lowering factor.
    pub fn lower_coeff(self, p: i32) -> CoeffTTheta {
        if p == 0 {
            return ct_int(1);
        }
        if !self.lowering() {
            return CoeffTTheta::zero(Var::THETA);
        }
        &self.raise_coeff(p) * &ct_theta_pow(p as u32)
    }
}

fn suffix_sums(v: &[i32]) -> Vec<i32> {
    let mut s = vec![0; v.len() + 1];
    for k in (0..v.len()).rev() {
        s[k] = s[k + 1] + v[k];
    }
    s
}

/// Direct expansion of the operator product applied to v_α.
///
/// Factors are applied column by column, j = ℓ down to 2, with all pairs
/// (i, j) of a column together. Every operator only lowers suffix sums of the
/// index vector, so a vector with a negative suffix sum is dead, and once
/// column j is done entry j is final and must be non-negative.
pub fn giambelli_v(alpha: &[i32], mode: Mode) -> VExpr {
    giambelli_direct(alpha, Family::HallLittlewood(mode))
}

pub fn giambelli_direct(alpha: &[i32], family: Family) -> VExpr {
    let ell = alpha.len();
    if suffix_sums(alpha).iter().any(|&s| s < 0) {
        return VExpr::zero();
    }
    let mut state: HashMap<Vec<i32>, CoeffTTheta> = HashMap::new();
    state.insert(alpha.to_vec(), ct_int(1));
    let cap = family.max_power().unwrap_or(i32::MAX);
    for j in (1..ell).rev() {
        for i in 0..j {
            if family.lowering() {
                state = apply_factor(state, |v| {
                    let s = suffix_sums(v);
                    let a = (0..=i).map(|k| s[k].div_euclid(2)).min().unwrap_or(i32::MAX);
                    let b = (i + 1..=j).map(|k| s[k]).min().unwrap_or(i32::MAX);
                    a.min(b).min(cap)
                }, |v, p| {
                    v[i] -= p;
                    v[j] -= p;
                }, |p| family.lower_coeff(p));
            }
            state = apply_factor(state, |v| {
                let s = suffix_sums(v);
                (i + 1..=j).map(|k| s[k]).min().unwrap_or(i32::MAX).min(cap)
            }, |v, p| {
                v[i] += p;
                v[j] -= p;
            }, |p| family.raise_coeff(p));
        }
        state.retain(|v, _| v[j] >= 0);
    }
    let mut out = VExpr::zero();
    let mut keys: Vec<&Vec<i32>> = state.keys().collect();
    keys.sort();
    for v in keys {
        if v.iter().all(|&x| x >= 0) {
            let mu = Partition::from_parts(v.iter().map(|&x| x as usize).collect());
            out.add_term(mu, &state[v]);
        }
    }
    out
}

fn apply_factor(
    state: HashMap<Vec<i32>, CoeffTTheta>,
    max_p: impl Fn(&[i32]) -> i32,
    shift: impl Fn(&mut Vec<i32>, i32),
    coeff: impl Fn(i32) -> CoeffTTheta,
) -> HashMap<Vec<i32>, CoeffTTheta> {
    let mut out: HashMap<Vec<i32>, CoeffTTheta> = HashMap::with_capacity(state.len());
    let mut coeffs: Vec<CoeffTTheta> = Vec::new();
    for (v, c) in state {
        let m = max_p(&v);
        for p in 0..=m.max(-1) {
            while coeffs.len() <= p as usize {
                coeffs.push(coeff(coeffs.len() as i32));
            }
            let k = &coeffs[p as usize];
            if k.is_zero() {
                continue;
            }
            let mut w = v.clone();
            shift(&mut w, p);
            let term = &c * k;
            match out.get_mut(&w) {
                Some(acc) => {
                    *acc = &*acc + &term;
                }
                None => {
                    out.insert(w, term);
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Σ c·θ^a t^b with machine-integer coefficients, sorted by (a, b). Every
/// Giambelli coefficient lies in ℤ[t, θ], so the recursion runs here and
/// converts to ℚ(t)[θ] only at the boundary.
#[derive(Clone, Debug, Default, PartialEq)]
pub(crate) struct Zt(Vec<((u32, u32), i64)>);

impl Zt {
    pub(crate) fn one() -> Self {
        Zt(vec![((0, 0), 1)])
    }

    /// c·θ^a t^b summed over the given terms.
    pub(crate) fn from_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut z = Zt::default();
        for &(a, b, c) in terms {
            if c != 0 {
                z.add_assign(&Zt(vec![((a, b), c)]));
            }
        }
        z
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn from_coeff(c: &CoeffTTheta) -> Self {
        let mut out = Vec::new();
        for (a, r) in c.terms() {
            let p = r.as_poly().expect("integral Giambelli coefficient");
            for (b, x) in p.terms() {
                assert!(x.is_integer(), "integral Giambelli coefficient");
                let v = i64::try_from(x.to_integer()).expect("coefficient fits in i64");
                out.push(((*a as u32, *b as u32), v));
            }
        }
        out.sort_by_key(|(k, _)| *k);
        Zt(out)
    }

    pub(crate) fn to_coeff(&self) -> CoeffTTheta {
        let mut acc = CoeffTTheta::zero(Var::THETA);
        let mut i = 0;
        while i < self.0.len() {
            let a = self.0[i].0 .0;
            let mut tc: Vec<i64> = Vec::new();
            while i < self.0.len() && self.0[i].0 .0 == a {
                let ((_, b), x) = self.0[i];
                if tc.len() <= b as usize {
                    tc.resize(b as usize + 1, 0);
                }
                tc[b as usize] = x;
                i += 1;
            }
            acc = &acc + &(&ct_theta_pow(a) * &ct_from_poly(poly_from_ints(Var::T, &tc)));
        }
        acc
    }

    pub(crate) fn mul(&self, other: &Zt) -> Zt {
        if self.0.len() == 1 && self.0[0] == ((0, 0), 1) {
            return other.clone();
        }
        let mut acc: BTreeMap<(u32, u32), i64> = BTreeMap::new();
        for ((a1, b1), x) in &self.0 {
            for ((a2, b2), y) in &other.0 {
                let p = x.checked_mul(*y).expect("Giambelli coefficient overflow");
                let e = acc.entry((a1 + a2, b1 + b2)).or_insert(0);
                *e = e.checked_add(p).expect("Giambelli coefficient overflow");
            }
        }
        Zt(acc.into_iter().filter(|(_, x)| *x != 0).collect())
    }

    pub(crate) fn add_assign(&mut self, other: &Zt) {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let pick = match (self.0.get(i), other.0.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match pick {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = self.0[i].1.checked_add(other.0[j].1).expect("Giambelli coefficient overflow");
                    if v != 0 {
                        out.push((self.0[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        self.0 = out;
    }
}

type ZExpr = HashMap<Partition, Zt>;

fn zexpr_to_vexpr(z: &ZExpr) -> VExpr {
    VExpr { terms: z.iter().map(|(mu, c)| (mu.clone(), c.to_coeff())).collect() }
}

/// Memoized evaluator of V_α by recursion on the length of α:
///
/// V_{(α,r)} = Σ_{β,γ ∈ ℕ^{ℓ−1}} Π_i c^L_{β_i} c^R_{γ_i} · V_{α−β+γ} · v_{r−|β|−|γ|}
///
/// where c^R_p, c^L_p are the coefficients of the raising and lowering series.
pub struct GiambelliEngine {
    family: Family,
    memo: RwLock<HashMap<Vec<i32>, Arc<ZExpr>>>,
    converted: RwLock<HashMap<Vec<i32>, Arc<VExpr>>>,
    raise: Vec<Zt>,
    lower: Vec<Zt>,
}

const COEFF_TABLE: i32 = 64;

impl GiambelliEngine {
    pub fn new(family: Family) -> Self {
        GiambelliEngine {
            family,
            memo: RwLock::new(HashMap::new()),
            converted: RwLock::new(HashMap::new()),
            raise: (0..COEFF_TABLE).map(|p| Zt::from_coeff(&family.raise_coeff(p))).collect(),
            lower: (0..COEFF_TABLE).map(|p| Zt::from_coeff(&family.lower_coeff(p))).collect(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Shared engine for each family.
    pub fn shared(family: Family) -> &'static GiambelliEngine {
        static ENGINES: OnceLock<[GiambelliEngine; 4]> = OnceLock::new();
        let engines = ENGINES.get_or_init(|| {
            [
                GiambelliEngine::new(Family::HallLittlewood(Mode::Iota)),
                GiambelliEngine::new(Family::HallLittlewood(Mode::Classical)),
                GiambelliEngine::new(Family::Schur(Mode::Iota)),
                GiambelliEngine::new(Family::Schur(Mode::Classical)),
            ]
        });
        match family {
            Family::HallLittlewood(Mode::Iota) => &engines[0],
            Family::HallLittlewood(Mode::Classical) => &engines[1],
            Family::Schur(Mode::Iota) => &engines[2],
            Family::Schur(Mode::Classical) => &engines[3],
        }
    }

    pub fn eval_partition(&self, lambda: &Partition) -> Arc<VExpr> {
        self.eval(&lambda.padded(0))
    }

    pub fn eval(&self, alpha: &[i32]) -> Arc<VExpr> {
        if let Some(hit) = self.converted.read().get(alpha) {
            return hit.clone();
        }
        let value = Arc::new(zexpr_to_vexpr(&self.eval_z(alpha)));
        self.converted.write().insert(alpha.to_vec(), value.clone());
        value
    }

    fn eval_z(&self, alpha: &[i32]) -> Arc<ZExpr> {
        let mut v = alpha.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        if v.is_empty() {
            return Arc::new(ZExpr::from([(Partition::empty(), Zt::one())]));
        }
        if suffix_sums(&v).iter().any(|&s| s < 0) {
            return Arc::new(ZExpr::new());
        }
        if let Some(hit) = self.memo.read().get(&v) {
            return hit.clone();
        }
        let r = *v.last().expect("nonempty");
        let head = &v[..v.len() - 1];
        let value = Arc::new(self.recur_z(head, r));
        self.memo.write().insert(v, value.clone());
        value
    }

    /// V_{(α, r)} by one step of the recursion.
    pub fn recur(&self, alpha: &[i32], r: i32) -> VExpr {
        zexpr_to_vexpr(&self.recur_z(alpha, r))
    }

    fn recur_z(&self, alpha: &[i32], r: i32) -> ZExpr {
        let mut out = ZExpr::new();
        if r < 0 {
            return out;
        }
        if alpha.is_empty() {
            if r == 0 {
                out.insert(Partition::empty(), Zt::one());
            } else {
                out.insert(Partition::row(r as usize), Zt::one());
            }
            return out;
        }
        let m = alpha.len();
        let mut beta = vec![0i32; m];
        let mut gamma = vec![0i32; m];
        self.enumerate(alpha, 0, r, &mut beta, &mut gamma, &Zt::one(), &mut out);
        out.retain(|_, c| !c.is_zero());
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate(
        &self,
        alpha: &[i32],
        k: usize,
        left: i32,
        beta: &mut Vec<i32>,
        gamma: &mut Vec<i32>,
        coeff: &Zt,
        out: &mut ZExpr,
    ) {
        if k == alpha.len() {
            let idx: Vec<i32> = (0..alpha.len()).map(|i| alpha[i] - beta[i] + gamma[i]).collect();
            let sub = self.eval_z(&idx);
            for (mu, a) in sub.iter() {
                let key = if left == 0 { mu.clone() } else { mu.with_part(left as usize) };
                let c = a.mul(coeff);
                match out.get_mut(&key) {
                    Some(acc) => acc.add_assign(&c),
                    None => {
                        out.insert(key, c);
                    }
                }
            }
            return;
        }
        let cap = self.family.max_power().unwrap_or(i32::MAX);
        for b in 0..=left.min(cap) {
            let cb = self.lower_at(b);
            if cb.is_zero() {
                continue;
            }
            for g in 0..=(left - b).min(cap) {
                let cg = self.raise_at(g);
                if cg.is_zero() {
                    continue;
                }
                beta[k] = b;
                gamma[k] = g;
                let c = if b == 0 && g == 0 { coeff.clone() } else { coeff.mul(&cb).mul(&cg) };
                self.enumerate(alpha, k + 1, left - b - g, beta, gamma, &c, out);
            }
        }
        beta[k] = 0;
        gamma[k] = 0;
    }

    fn raise_at(&self, p: i32) -> Zt {
        if p < COEFF_TABLE {
            self.raise[p as usize].clone()
        } else {
            Zt::from_coeff(&self.family.raise_coeff(p))
        }
    }

    fn lower_at(&self, p: i32) -> Zt {
        if p < COEFF_TABLE {
            self.lower[p as usize].clone()
        } else {
            Zt::from_coeff(&self.family.lower_coeff(p))
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().len()
    }
}

/// V^ı_{(α, r)} by the length recursion.
pub fn giambelli_recur(alpha: &[i32], r: i32) -> VExpr {
    GiambelliEngine::shared(Family::HallLittlewood(Mode::Iota)).recur(alpha, r)
}

/// Memoized V^ı_λ.
pub fn v_iota(lambda: &Partition) -> Arc<VExpr> {
    GiambelliEngine::shared(Family::HallLittlewood(Mode::Iota)).eval_partition(lambda)
}

/// Memoized V^ı_α for an arbitrary integer vector.
pub fn v_iota_vec(alpha: &[i32]) -> Arc<VExpr> {
    GiambelliEngine::shared(Family::HallLittlewood(Mode::Iota)).eval(alpha)
}

/// Memoized classical V_α.
pub fn v_classical_vec(alpha: &[i32]) -> Arc<VExpr> {
    GiambelliEngine::shared(Family::HallLittlewood(Mode::Classical)).eval(alpha)
}

/// Expands `e` in a basis {B_λ} where B_λ = v_λ + (terms v_κ with |κ| = |λ|
/// and κ lexicographically larger) + (terms of smaller v-degree).
///
/// Terms are eliminated in order of decreasing |κ|, then increasing κ, so
/// each subtraction only creates terms that are handled later.
pub fn expand_in_basis(e: &VExpr, basis: impl Fn(&Partition) -> Arc<VExpr>) -> Result<Expansion> {
    let mut residual: BTreeMap<(Reverse<usize>, Partition), CoeffTTheta> =
        e.terms().iter().map(|(mu, c)| ((Reverse(mu.size()), mu.clone()), c.clone())).collect();
    let mut out = Expansion::new();
    while let Some(((deg, kappa), c)) = residual.pop_first() {
        let b = basis(&kappa);
        let lead = b.coeff(&kappa);
        if !lead.is_one() {
            return Err(Error::Triangular(format!("basis element {kappa} has leading coefficient {lead}")));
        }
        for (mu, bc) in b.terms() {
            if *mu == kappa {
                continue;
            }
            let key = (Reverse(mu.size()), mu.clone());
            if key <= (deg, kappa.clone()) {
                return Err(Error::Triangular(format!("basis element {kappa} contains earlier term {mu}")));
            }
            let sub = &c * bc;
            let entry = residual.entry(key.clone()).or_insert_with(|| CoeffTTheta::zero(Var::THETA));
            *entry = &*entry - &sub;
            if entry.is_zero() {
                residual.remove(&key);
            }
        }
        out.insert(kappa, c);
    }
    Ok(out)
}

/// Coefficients of `e` in the basis {V^ı_λ}. `degree_bound` caps the weight
/// of the input (|θ| = 2).
pub fn expand_in_iota_basis(e: &VExpr, degree_bound: usize) -> Result<Expansion> {
    if let Some(d) = e.degree() {
        if d > degree_bound {
            return Err(Error::NotInSpan(format!("degree {d} exceeds bound {degree_bound}")));
        }
    }
    expand_in_basis(e, v_iota)
}

/// Σ c_λ B_λ back in the monomial basis.
pub fn from_expansion(exp: &Expansion, basis: impl Fn(&Partition) -> Arc<VExpr>) -> VExpr {
    let mut out = VExpr::zero();
    for (lambda, c) in exp {
        out.add_scaled(&basis(lambda), c);
    }
    out
}

/// Both sides of V^ı_{(a,b)} = V_{(a,b)} + (t−1) Σ_{s=1}^{b} θ^s t^{s−1} V_{(a−s,b−s)}, a ≥ b ≥ 0.
pub fn two_row_expansion_sides(a: i32, b: i32) -> (VExpr, VExpr) {
    let lhs = (*v_iota_vec(&[a, b])).clone();
    let mut rhs = (*v_classical_vec(&[a, b])).clone();
    let t_minus_1 = ct_from_poly(poly_from_ints(Var::T, &[-1, 1]));
    for s in 1..=b {
        let mut tpow = vec![0i64; s as usize];
        tpow[s as usize - 1] = 1;
        let c = &(&t_minus_1 * &ct_from_poly(poly_from_ints(Var::T, &tpow))) * &ct_theta_pow(s as u32);
        rhs.add_scaled(&v_classical_vec(&[a - s, b - s]), &c);
    }
    (lhs, rhs)
}

/// Both sides of V^ı_{(a,b)} + V^ı_{(b−1,a+1)} = t(V^ı_{(a+1,b−1)} + V^ı_{(b,a)}).
pub fn straightening_sides(a: i32, b: i32) -> (VExpr, VExpr) {
    let lhs = v_iota_vec(&[a, b]).add(&v_iota_vec(&[b - 1, a + 1]));
    let rhs = v_iota_vec(&[a + 1, b - 1]).add(&v_iota_vec(&[b, a])).scale(&ct_from_poly(poly_from_ints(Var::T, &[0, 1])));
    (lhs, rhs)
}

/// Both sides of V^ı_{(c,c+d,β)} + (1−t) Σ_{i=1}^{d−1} V^ı_{(c+i,c+d−i,β)} = t V^ı_{(c+d,c,β)}.
pub fn swap_sides(c: i32, d: i32, beta: &[i32]) -> (VExpr, VExpr) {
    let idx = |x: i32, y: i32| -> Vec<i32> { [x, y].iter().chain(beta).copied().collect() };
    let mut lhs = (*v_iota_vec(&idx(c, c + d))).clone();
    let one_minus_t = ct_from_poly(poly_from_ints(Var::T, &[1, -1]));
    for i in 1..d {
        lhs.add_scaled(&v_iota_vec(&idx(c + i, c + d - i)), &one_minus_t);
    }
    let rhs = v_iota_vec(&idx(c + d, c)).scale(&ct_from_poly(poly_from_ints(Var::T, &[0, 1])));
    (lhs, rhs)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{ct_theta, parse_coeff};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> CoeffTTheta {
        parse_coeff(s).unwrap()
    }

    #[test]
    fn rows_are_generators() {
        for r in 1..5 {
            assert_eq!(giambelli_v(&[r], Mode::Iota), VExpr::v_row(r));
            assert_eq!(*v_iota(&Partition::row(r as usize)), VExpr::v_row(r));
        }
    }

    #[test]
    fn two_row_examples() {
        let tm1 = c("(-1 + 1*t^1)");
        let expect11 = VExpr::from_terms([
            (p("[1,1]"), ct_int(1)),
            (p("[2]"), tm1.clone()),
            (Partition::empty(), &tm1 * &ct_theta()),
        ]);
        assert_eq!(giambelli_v(&[1, 1], Mode::Iota), expect11);
        let expect21 = VExpr::from_terms([
            (p("[2,1]"), ct_int(1)),
            (p("[3]"), tm1.clone()),
            (p("[1]"), &tm1 * &ct_theta()),
        ]);
        assert_eq!(giambelli_v(&[2, 1], Mode::Iota), expect21);
        assert_eq!(giambelli_recur(&[1], 1), expect11);
    }

    #[test]
    fn recursion_base_case() {
        for r in -1..4 {
            assert_eq!(giambelli_recur(&[], r), VExpr::v_row(r));
        }
    }

    #[test]
    fn expansion_examples() {
        let e = expand_in_iota_basis(&VExpr::v(&p("[1,1]")), 4).unwrap();
        let one_minus_t = c("(1 - 1*t^1)");
        let mut expect = Expansion::new();
        expect.insert(p("[1,1]"), ct_int(1));
        expect.insert(p("[2]"), one_minus_t.clone());
        expect.insert(Partition::empty(), &one_minus_t * &ct_theta());
        assert_eq!(e, expect);
        let e = expand_in_iota_basis(&v_iota(&p("[2,1]")), 3).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e[&p("[2,1]")].is_one());
        let e = expand_in_iota_basis(&VExpr::one(), 0).unwrap();
        assert!(e[&Partition::empty()].is_one());
    }

    #[test]
    fn json_shape() {
        let j = giambelli_v(&[1, 1], Mode::Iota).to_json();
        let terms = j["terms"].as_array().unwrap();
        assert_eq!(terms[0]["mu"], serde_json::json!([1, 1]));
        assert_eq!(terms[1]["mu"], serde_json::json!([2]));
        assert_eq!(terms[2]["mu"], serde_json::json!([]));
    }
}
