//! The ten acceptance checks as library code, so the test harness and the
//! `selftest` command run the same thing. Each check runs at full bounds or
//! at reduced ("quick") bounds.

use std::sync::Arc;
use std::time::Instant;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::Result;
use crate::exactalg::{ct_from_poly, poly_from_ints, rat, substitute, Var};
use crate::genfun::{verify_identity, Identity, VRing};
use crate::giambelli::{
    expand_in_basis, straightening_sides, swap_sides, two_row_expansion_sides, v_classical_vec, v_iota_vec, VExpr,
};
use crate::hall::identities::{ext_longer, ext_same_length, ext_weighted_sum, gaut, sum_semisimple, v_identity};
use crate::hall::{hall_count_table, HallEngine, DEFAULT_GUARD};
use crate::ihall::{phi_iso, IHallAlgebra, IHallElement};
use crate::partitions::{horizontal_strips, is_horizontal_strip, phi_skew, psi_skew, Direction, Partition};
use crate::pieri::{compositions, ischur_pieri, mirror_sides, Mirror, PieriRule};
use crate::realize::{
    d_matrix, d_reduced, generating_function_coefficient, generating_function_v, i_schur, jacobi_trudi, realize_v, t_symbolic, theta_value,
    Target,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Quick,
    Full,
}

impl std::str::FromStr for Scale {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Scale::Quick),
            "full" => Ok(Scale::Full),
            _ => Err(crate::Error::Parse(format!("unknown level {s:?}, expected quick or full"))),
        }
    }
}

pub const CRITERIA: [(u8, &str, u64); 10] = [
    (1, "straightening relations", 60),
    (2, "mirror identities", 120),
    (3, "four Pieri rules", 600),
    (4, "Hall polynomial oracle", 900),
    (5, "iHall algebra axioms", 600),
    (6, "isomorphism is multiplicative", 900),
    (7, "transition identities", 1200),
    (8, "Ext and Hall number sums", 600),
    (9, "specializations", 600),
    (10, "x-realization bridge", 300),
];

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub criterion: u8,
    pub name: &'static str,
    pub pass: bool,
    pub checked: usize,
    pub failure_count: usize,
    /// The first few failures.
    pub failures: Vec<String>,
    /// Every failure lies in a known, independently confirmed failure class.
    pub documented: bool,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
}

impl SuiteReport {
    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = json!({
            "criterion": self.criterion,
            "name": self.name,
            "pass": self.pass,
            "checked": self.checked,
            "failureCount": self.failure_count,
            "failures": self.failures,
            "documented": self.documented,
            "budgetMs": self.budget_ms as u64,
        });
        if timing {
            v["elapsedMs"] = json!(self.elapsed_ms as u64);
        }
        v
    }

    pub fn line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {:>2} {:<32} {status}  checked={} failures={} elapsed={}ms budget={}ms",
            self.criterion, self.name, self.checked, self.failure_count, self.elapsed_ms, self.budget_ms
        );
        if !self.pass && self.documented {
            s.push_str("  (documented failure class)");
        }
        s
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    count: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.count += 1;
            if self.failures.len() < 5 {
                self.failures.push(what());
            }
        }
    }

    fn result<T>(&mut self, r: Result<T>, what: impl Fn() -> String) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }
}

pub struct SuiteContext {
    pub hall: Arc<HallEngine>,
    pub scale: Scale,
}

impl SuiteContext {
    pub fn new(hall: Arc<HallEngine>, scale: Scale) -> Self {
        SuiteContext { hall, scale }
    }

    fn pick<T>(&self, quick: T, full: T) -> T {
        match self.scale {
            Scale::Quick => quick,
            Scale::Full => full,
        }
    }
}

/// Runs one criterion.
pub fn run_criterion(id: u8, ctx: &SuiteContext) -> SuiteReport {
    let (_, name, budget) = CRITERIA[(id - 1) as usize];
    let start = Instant::now();
    let mut t = Tally::default();
    let mut documented = false;
    match id {
        1 => straightening(ctx, &mut t),
        2 => documented = mirrors(ctx, &mut t),
        3 => pieri(ctx, &mut t),
        4 => hall_oracle(ctx, &mut t),
        5 => ihall_axioms(ctx, &mut t),
        6 => isomorphism(ctx, &mut t),
        7 => transitions(ctx, &mut t),
        8 => ext_and_sums(ctx, &mut t),
        9 => specializations(ctx, &mut t),
        10 => bridge(ctx, &mut t),
        _ => t.check(false, || format!("no criterion {id}")),
    }
    let elapsed_ms = start.elapsed().as_millis();
    let budget_ms = budget as u128 * 1000;
    SuiteReport {
        criterion: id,
        name,
        pass: t.count == 0 && elapsed_ms <= budget_ms,
        checked: t.checked,
        failure_count: t.count,
        failures: t.failures,
        documented: t.count > 0 && documented,
        elapsed_ms,
        budget_ms,
    }
}

pub fn run_all(ctx: &SuiteContext) -> Vec<SuiteReport> {
    (1..=10).map(|id| run_criterion(id, ctx)).collect()
}

fn straightening(ctx: &SuiteContext, t: &mut Tally) {
    let ab = ctx.pick(3, 6);
    for a in 0..=ab {
        for b in 0..=a {
            let (l, r) = two_row_expansion_sides(a, b);
            t.check(l == r, || format!("two-row expansion ({a},{b})"));
        }
    }
    for a in -2..=ab {
        for b in -2..=ab {
            let (l, r) = straightening_sides(a, b);
            t.check(l == r, || format!("straightening ({a},{b})"));
        }
    }
    let (cmax, dmax, blen) = ctx.pick((1, 2, 1), (3, 4, 2));
    let mut betas: Vec<Vec<i32>> = vec![vec![]];
    for x in -1..=2 {
        betas.push(vec![x]);
        if blen >= 2 {
            for y in -1..=2 {
                betas.push(vec![x, y]);
            }
        }
    }
    for c in -1..=cmax {
        for d in 1..=dmax {
            for beta in &betas {
                let (l, r) = swap_sides(c, d, beta);
                t.check(l == r, || format!("swap c={c} d={d} beta={beta:?}"));
            }
        }
    }
}

/// Both mirror II sides rebuilt from the generating-function oracle.
fn mirror_two_oracle(mu: &Partition, a: usize, b: usize) -> Result<(VExpr, VExpr)> {
    let ell = mu.len();
    let base = mu.padded(ell);
    let mut lhs = VExpr::zero();
    for beta in compositions(a, ell) {
        let mut idx: Vec<i32> = base.iter().zip(&beta).map(|(x, y)| x - y).collect();
        idx.push(b as i32);
        let len = beta.iter().filter(|&&x| x > 0).count();
        let c = ct_from_poly(poly_from_ints(Var::T, &[1, -1])).pow(len as u32);
        lhs.add_scaled(&generating_function_v(&idx), &c);
    }
    let mut rhs = VExpr::zero();
    for nu in horizontal_strips(mu, a, Direction::Down) {
        let mut idx = nu.padded(ell);
        idx.push(b as i32);
        rhs.add_scaled(&generating_function_v(&idx), &ct_from_poly(phi_skew(mu, &nu)?));
    }
    Ok((lhs, rhs))
}

/// Returns whether every failure is a documented mirror II failure.
fn mirrors(ctx: &SuiteContext, t: &mut Tally) -> bool {
    let (nmax, abmax) = ctx.pick((3, 2), (6, 4));
    let mut all_documented = true;
    for p in Partition::all_up_to(nmax) {
        for b in 0..=abmax {
            if let Some((l, r)) = t.result(mirror_sides(Mirror::I, &p, 0, b), || format!("I {p} b={b}")) {
                if l != r {
                    all_documented = false;
                }
                t.check(l == r, || format!("I rho={p} b={b}"));
            }
            for a in 0..=abmax {
                let Some((l, r)) = t.result(mirror_sides(Mirror::II, &p, a, b), || format!("II {p}")) else {
                    all_documented = false;
                    continue;
                };
                if l == r {
                    t.check(true, String::new);
                    continue;
                }
                let last = p.parts().last().copied().unwrap_or(0);
                let in_class = b >= 1 && a > last;
                let confirmed = matches!(mirror_two_oracle(&p, a, b), Ok((ol, or)) if ol == l && or == r);
                all_documented &= in_class && confirmed;
                t.check(false, || format!("II mu={p} a={a} b={b} (class={in_class}, oracle agrees: {confirmed})"));
            }
        }
    }
    all_documented
}

const RULES: [PieriRule; 4] =
    [PieriRule::HorizontalDownUp, PieriRule::HorizontalUpDown, PieriRule::VerticalDownUp, PieriRule::VerticalUpDown];

fn pieri(ctx: &SuiteContext, t: &mut Tally) {
    let (nmax, rmax) = ctx.pick((3, 2), (6, 4));
    for mu in Partition::all_up_to(nmax) {
        for r in 1..=rmax {
            let mut got = Vec::new();
            for rule in RULES {
                got.push(t.result(rule.apply(&mu, r), || format!("{rule:?} {mu} {r}")));
            }
            let h = t.result(PieriRule::HorizontalDownUp.brute_force(&mu, r), || format!("brute h {mu} {r}"));
            let v = t.result(PieriRule::VerticalDownUp.brute_force(&mu, r), || format!("brute v {mu} {r}"));
            for (rule, g) in RULES.iter().zip(&got) {
                let want = if rule.is_vertical() { &v } else { &h };
                t.check(g.is_some() && g == want, || format!("{rule:?} mu={mu} r={r} differs from brute force"));
            }
            let Some(e) = &got[0] else { continue };
            // θ⁰ layer against ψ_{λ/μ}(t)
            for lambda in Partition::all(mu.size() + r) {
                let c0 = e.get(&lambda).map_or_else(crate::RatFn::zero, |c| c.coeff(0));
                let want = if lambda.contains(&mu) && is_horizontal_strip(&lambda, &mu) {
                    psi_skew(&lambda, &mu).map(crate::RatFn::from_poly).unwrap_or_else(|_| crate::RatFn::zero())
                } else {
                    crate::RatFn::zero()
                };
                t.check(c0 == want, || format!("theta^0 layer mu={mu} r={r} lambda={lambda}"));
            }
            // θ^r layer only on λ with μ/λ a horizontal r-strip
            let allowed = horizontal_strips(&mu, r, Direction::Down);
            for (lambda, c) in e {
                let top = c.coeff(r as i32);
                t.check(top.is_zero() || allowed.contains(lambda), || format!("theta^r support mu={mu} r={r} {lambda}"));
            }
        }
    }
}

fn hall_oracle(ctx: &SuiteContext, t: &mut Tally) {
    let nmax = ctx.pick(4, 6);
    for n in 0..=nmax {
        for lambda in Partition::all(n) {
            for q in [2u64, 3] {
                let Some(table) = t.result(hall_count_table(&lambda, q, DEFAULT_GUARD), || format!("count {lambda}"))
                else {
                    continue;
                };
                for k in 0..=n {
                    for mu in Partition::all(k) {
                        for nu in Partition::all(n - k) {
                            let g = t.result(ctx.hall.hall_polynomial(&mu, &nu, &lambda), || format!("G {lambda}"));
                            let count = table.get(&(mu.clone(), nu.clone())).copied().unwrap_or(0) as i128;
                            let ok = g.and_then(|g| g.eval_int(q as i64).ok()) == Some(count);
                            t.check(ok, || format!("G^{lambda}_{{{mu},{nu}}} at q={q}"));
                        }
                    }
                }
            }
        }
    }
}

fn basis_up_to(w: usize) -> Vec<(usize, IHallElement)> {
    (0..=w)
        .flat_map(|k| {
            (0..=k / 2).flat_map(move |a| Partition::all(k - 2 * a).into_iter().map(move |l| (k, IHallElement::basis(l, a as u32))))
        })
        .collect()
}

fn ihall_axioms(ctx: &SuiteContext, t: &mut Tally) {
    let wmax = ctx.pick(5, 8);
    let alg = IHallAlgebra::new(ctx.hall.clone());
    let basis = basis_up_to(wmax);
    let k = IHallElement::k_s();
    for (w1, x) in &basis {
        let central = alg.multiply(&k, x).ok().zip(alg.multiply(x, &k).ok()).is_some_and(|(a, b)| a == b);
        t.check(central, || format!("K_S central on {x:?}"));
        for (w2, y) in basis.iter().filter(|(w, _)| w1 + w <= wmax) {
            let Some(xy) = t.result(alg.multiply(x, y), || format!("{x:?}*{y:?}")) else { continue };
            let yx = alg.multiply(y, x).ok();
            t.check(yx.as_ref() == Some(&xy), || format!("commutativity {x:?} {y:?}"));
            for (_, z) in basis.iter().filter(|(w, _)| w1 + w2 + w <= wmax) {
                let left = alg.multiply(&xy, z).ok();
                let right = alg.multiply(y, z).and_then(|yz| alg.multiply(x, &yz)).ok();
                t.check(left.is_some() && left == right, || format!("associativity {x:?} {y:?} {z:?}"));
            }
        }
    }
}

fn isomorphism(ctx: &SuiteContext, t: &mut Tally) {
    let nmax = ctx.pick(3, 5);
    let alg = IHallAlgebra::new(ctx.hall.clone());
    for mu in Partition::all_up_to(nmax) {
        for nu in Partition::all_up_to(nmax) {
            if nu < mu {
                continue;
            }
            let (x, y) = (IHallElement::s(&mu), IHallElement::s(&nu));
            let lhs = alg.multiply(&x, &y).and_then(|p| phi_iso(&p));
            let rhs = phi_iso(&x).and_then(|a| Ok(a.mul(&phi_iso(&y)?)));
            let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
            t.check(ok, || format!("Phi({mu} * {nu})"));
        }
    }
}

fn transitions(ctx: &SuiteContext, t: &mut Tally) {
    let alg = IHallAlgebra::new(ctx.hall.clone());
    let ring = VRing::new(&alg);
    for id in Identity::ALL {
        let n = match id {
            Identity::HE | Identity::TE1 | Identity::TE2 => ctx.pick(4, 8),
            _ => ctx.pick(3, 6),
        };
        if let Some(r) = t.result(verify_identity(id, n, n, &ring), || format!("{id}")) {
            t.check(r.pass, || format!("{id} to z^{n}: {}", r.to_json()["firstFailure"]));
        }
    }
}

fn ext_and_sums(ctx: &SuiteContext, t: &mut Tally) {
    let (nu_max, om_max, v_max) = ctx.pick((3, 4, 5), (5, 6, 8));
    for nu in Partition::all_up_to(nu_max) {
        for r in 1..=4 {
            for (name, s) in [("Ext longer", ext_longer(&nu, r)), ("Ext same length", ext_same_length(&nu, r))] {
                if let Some(s) = t.result(s, || format!("{name} {nu} {r}")) {
                    t.check(s.holds(), || format!("{name} nu={nu} r={r}"));
                }
            }
            if !nu.is_empty() {
                if let Some(s) = t.result(ext_weighted_sum(&nu, r), || format!("Ext sum {nu} {r}")) {
                    t.check(s.holds(), || format!("Ext weighted sum nu={nu} r={r}"));
                }
            }
        }
    }
    for omega in Partition::all_up_to(om_max) {
        for r in 1..=4 {
            for drop in [0, 1] {
                if let Some(s) = t.result(gaut(&omega, r, drop), || format!("Gaut {omega} {r}")) {
                    t.check(s.holds(), || format!("Gaut omega={omega} r={r} drop={drop}"));
                }
            }
        }
        for r in 1..=omega.len() {
            if let Some(s) = t.result(sum_semisimple(&ctx.hall, &omega, r), || format!("semisimple {omega}")) {
                t.check(s.holds(), || format!("semisimple sum omega={omega} r={r}"));
            }
        }
    }
    for n in 1..=v_max {
        for mu in Partition::all(n) {
            t.check(v_identity(&mu).holds(), || format!("v identity mu={mu}"));
        }
    }
}

fn at_theta(e: &VExpr, theta: i64) -> Result<VExpr> {
    e.map_coeffs(|c| substitute(c, &t_symbolic(), &theta_value(Some(theta))))
}

fn specializations(ctx: &SuiteContext, t: &mut Tally) {
    let (g_max, jt_max, p_max, r_max, d_max) = ctx.pick((5, 4, 3, 2, 3), (8, 6, 5, 3, 5));
    for lambda in Partition::all_up_to(g_max) {
        let a = lambda.padded(0);
        let ok = at_theta(&v_iota_vec(&a), 0).is_ok_and(|e| e == *v_classical_vec(&a));
        t.check(ok, || format!("theta=0 Giambelli {lambda}"));
    }
    for lambda in Partition::all_up_to(jt_max) {
        let ok = at_theta(&i_schur(&lambda), 0).is_ok_and(|e| e == jacobi_trudi(&lambda.padded(0)));
        t.check(ok, || format!("iSchur at theta=0 {lambda}"));
    }
    for mu in Partition::all_up_to(p_max) {
        for r in 1..=r_max {
            let prod = i_schur(&mu).mul(&VExpr::v_row(r as i32));
            let got = expand_in_basis(&prod, i_schur);
            t.check(got.is_ok_and(|g| g == ischur_pieri(&mu, r)), || format!("iSchur Pieri mu={mu} r={r}"));
        }
    }
    for mu in Partition::all_up_to(d_max) {
        let Some(d) = t.result(d_matrix(&mu), || format!("d matrix {mu}")) else { continue };
        t.check(d.get(&mu).is_some_and(|c| c.is_one()), || format!("d_mumu = 1 for {mu}"));
        for (lambda, c) in &d {
            let positive = d_reduced(lambda, &mu, c).is_some_and(|red| {
                red.terms().iter().all(|(e, r)| {
                    *e == 0 && r.as_poly().is_some_and(|p| p.terms().iter().all(|(_, x)| x.is_integer() && *x > rat(0)))
                })
            });
            t.check(positive, || format!("d_{{{lambda},{mu}}} = {c} not theta-homogeneous in N[t]"));
        }
    }
}

fn bridge(ctx: &SuiteContext, t: &mut Tally) {
    let total_max = ctx.pick(2, 4);
    let n = 4;
    for total in 0..=total_max {
        for a0 in 0..=total {
            let a = [a0, total - a0];
            let window = total as usize + 4;
            let gf = generating_function_coefficient(&a, n, window);
            let wider = generating_function_coefficient(&a, n, window + 2);
            t.check(gf == wider, || format!("window dependence at {a:?}"));
            let v = realize_v(&v_iota_vec(&[a[0] as i32, a[1] as i32]), Target::QBasis, n);
            t.check(v == gf, || format!("definition bridge at {a:?}"));
        }
    }
}
