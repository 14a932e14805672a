use std::sync::Arc;

use ihall_core::exactalg::{rat, RatFn, Rational, Var};
use ihall_core::giambelli::VExpr;
use ihall_core::hall::{aut_order, HallEngine};
use ihall_core::ihall::{hall_pieri, phi_expansion, phi_iso, IHallAlgebra, IHallElement};
use ihall_core::pieri::PieriRule;
use ihall_core::Partition;
use num_traits::Zero;

const RULES: [PieriRule; 4] =
    [PieriRule::HorizontalDownUp, PieriRule::HorizontalUpDown, PieriRule::VerticalDownUp, PieriRule::VerticalUpDown];

fn basis_of_weight(w: usize) -> Vec<IHallElement> {
    (0..=w / 2).flat_map(|a| Partition::all(w - 2 * a).into_iter().map(move |l| IHallElement::basis(l, a as u32))).collect()
}

fn basis_up_to(w: usize) -> Vec<(usize, IHallElement)> {
    (0..=w).flat_map(|k| basis_of_weight(k).into_iter().map(move |e| (k, e))).collect()
}

#[test]
fn commutative_associative_central() {
    let alg = IHallAlgebra::new(Arc::new(HallEngine::new()));
    let basis = basis_up_to(8);
    let k = IHallElement::k_s();
    for (w1, x) in &basis {
        assert_eq!(alg.multiply(&k, x).unwrap(), alg.multiply(x, &k).unwrap());
        for (w2, y) in basis.iter().filter(|(w, _)| w1 + w <= 8) {
            let xy = alg.multiply(x, y).unwrap();
            assert_eq!(xy, alg.multiply(y, x).unwrap(), "{x:?} {y:?}");
            assert!(xy.weights().iter().all(|w| *w == w1 + w2));
            for (_, z) in basis.iter().filter(|(w, _)| w1 + w2 + w <= 8) {
                let left = alg.multiply(&xy, z).unwrap();
                let right = alg.multiply(x, &alg.multiply(y, z).unwrap()).unwrap();
                assert_eq!(left, right, "{x:?} {y:?} {z:?}");
            }
        }
    }
}

#[test]
fn isomorphism_is_multiplicative() {
    let alg = IHallAlgebra::shared();
    for mu in Partition::all_up_to(5) {
        for nu in Partition::all_up_to(5) {
            if nu < mu {
                continue;
            }
            let (x, y) = (IHallElement::s(&mu), IHallElement::s(&nu));
            let lhs = phi_iso(&alg.multiply(&x, &y).unwrap()).unwrap();
            let rhs = phi_iso(&x).unwrap().mul(&phi_iso(&y).unwrap());
            assert_eq!(lhs, rhs, "{mu} {nu}");
        }
    }
}

#[test]
fn hall_pieri_rules() {
    let alg = IHallAlgebra::shared();
    for mu in Partition::all_up_to(5) {
        for r in 1..=3 {
            let row = alg.multiply(&IHallElement::v_hat(&mu), &IHallElement::v_hat(&Partition::row(r))).unwrap();
            let col = alg.multiply(&IHallElement::v_hat(&mu), &IHallElement::v_hat(&Partition::column(r))).unwrap();
            for rule in RULES {
                let h = hall_pieri(rule, &mu, r).unwrap();
                assert_eq!(h, if rule.is_vertical() { col.clone() } else { row.clone() }, "{rule:?} {mu} {r}");
                assert_eq!(phi_expansion(&h).unwrap(), rule.apply(&mu, r).unwrap(), "{rule:?} {mu} {r}");
            }
        }
    }
}

#[test]
fn associated_graded_is_classical() {
    let alg = IHallAlgebra::shared();
    let hall = alg.hall();
    let aut = |p: &Partition| RatFn::from_poly(aut_order(p).with_var(Var::BIG_T));
    for mu in Partition::all_up_to(4) {
        for nu in Partition::all_up_to(4) {
            let sc = alg.structure_constants(&mu, &nu).unwrap();
            for lambda in Partition::all(mu.size() + nu.size()) {
                let g = hall.hall_polynomial(&mu, &nu, &lambda).unwrap();
                let want = RatFn::from_poly(g.poly().clone()) * aut(&mu) * aut(&nu) / aut(&lambda);
                let got = sc.get(&(lambda.clone(), 0)).map_or_else(RatFn::zero, |p| RatFn::from_poly(p.poly().clone()));
                assert_eq!(got, want, "{mu} {nu} {lambda}");
            }
        }
    }
}

fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

#[test]
fn row_generators_span() {
    let alg = IHallAlgebra::shared();
    let q = rat(7);
    for w in 0..=8 {
        let basis: Vec<(Partition, u32)> =
            (0..=w / 2).flat_map(|a| Partition::all(w - 2 * a).into_iter().map(move |l| (l, a as u32))).collect();
        let mut rows = Vec::new();
        for (rho, k) in &basis {
            let mut m = IHallElement::basis(Partition::empty(), *k);
            for &r in rho.parts() {
                m = alg.multiply(&m, &IHallElement::s(&Partition::row(r))).unwrap();
            }
            let vals = m.specialize(&q).unwrap();
            rows.push(basis.iter().map(|key| vals.get(key).cloned().unwrap_or_else(Rational::zero)).collect());
        }
        assert_eq!(rank(rows), basis.len(), "weight {w}");
    }
}

#[test]
fn unit_and_k() {
    let alg = IHallAlgebra::shared();
    let x = IHallElement::s(&"[2,1]".parse().unwrap());
    assert_eq!(alg.multiply(&IHallElement::one(), &x).unwrap(), x);
    let xk = alg.multiply(&x, &IHallElement::k_s()).unwrap();
    assert_eq!(xk, IHallElement::basis("[2,1]".parse().unwrap(), 1));
    assert_eq!(phi_iso(&IHallElement::one()).unwrap(), VExpr::one());
}
