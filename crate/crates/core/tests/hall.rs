use ihall_core::hall::identities::{
    ext_longer, ext_same_length, ext_weighted_sum, gaut, green_columns, green_rows, green_transform,
    green_transform_inverse, green_u, green_v, sum_semisimple, v_identity, vertical_transform,
    vertical_transform_inverse, Grid,
};
use ihall_core::hall::{
    aut_order, brute_force_aut_count, brute_force_hom_exponent, hall_count_table, hom_order_exponent, HallEngine,
    DEFAULT_GUARD,
};
use ihall_core::exactalg::{rat, RatFn, Var};
use ihall_core::Partition;
use proptest::prelude::*;

#[test]
fn bootstrap_matches_counts() {
    let engine = HallEngine::new();
    for n in 0..=6 {
        for lambda in Partition::all(n) {
            for q in [2u64, 3] {
                let table = hall_count_table(&lambda, q, DEFAULT_GUARD).unwrap();
                for k in 0..=n {
                    for mu in Partition::all(k) {
                        for nu in Partition::all(n - k) {
                            let g = engine.hall_polynomial(&mu, &nu, &lambda).unwrap();
                            let count = table.get(&(mu.clone(), nu.clone())).copied().unwrap_or(0);
                            assert_eq!(g.eval_int(q as i64).unwrap(), count as i128, "G^{lambda}_{{{mu},{nu}}} at q={q}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn symmetry_and_degree() {
    let engine = HallEngine::new();
    for n in 0..=6 {
        for lambda in Partition::all(n) {
            for k in 0..=n {
                for mu in Partition::all(k) {
                    for nu in Partition::all(n - k) {
                        let g = engine.hall_polynomial(&mu, &nu, &lambda).unwrap();
                        assert_eq!(g, engine.hall_polynomial(&nu, &mu, &lambda).unwrap());
                        if !g.is_zero() {
                            let deg = lambda.n() as i32 - mu.n() as i32 - nu.n() as i32;
                            assert_eq!(g.poly().degree(), Some(deg), "G^{lambda}_{{{mu},{nu}}} = {g}");
                            assert!(g.poly().leading_coeff().unwrap() > &rat(0));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn aut_and_hom_orders_match_enumeration() {
    for n in 0..=3 {
        for lambda in Partition::all(n) {
            let a = aut_order(&lambda).eval(&rat(2)).unwrap();
            assert_eq!(a, rat(brute_force_aut_count(&lambda, 2, DEFAULT_GUARD).unwrap() as i64), "{lambda}");
            for mu in Partition::all_up_to(3) {
                for q in [2, 3, 4] {
                    assert_eq!(hom_order_exponent(&lambda, &mu), brute_force_hom_exponent(&lambda, &mu, q).unwrap());
                }
            }
        }
    }
}

#[test]
fn ext_identities() {
    for nu in Partition::all_up_to(5) {
        for r in 1..=4 {
            assert!(ext_longer(&nu, r).unwrap().holds(), "{nu} {r}");
            assert!(ext_same_length(&nu, r).unwrap().holds(), "{nu} {r}");
            if !nu.is_empty() {
                assert!(ext_weighted_sum(&nu, r).unwrap().holds(), "{nu} {r}");
            }
        }
    }
}

#[test]
fn hall_number_sums() {
    let engine = HallEngine::new();
    for omega in Partition::all_up_to(6) {
        for r in 1..=4 {
            assert!(gaut(&omega, r, 0).unwrap().holds(), "{omega} {r}");
            assert!(gaut(&omega, r, 1).unwrap().holds(), "{omega} {r}");
        }
        for r in 1..=omega.len() {
            assert!(sum_semisimple(&engine, &omega, r).unwrap().holds(), "{omega} {r}");
        }
    }
    for n in 1..=8 {
        for mu in Partition::all(n) {
            assert!(v_identity(&mu).holds(), "{mu}");
        }
    }
}

#[test]
fn green_formulas() {
    for lambda in Partition::all_up_to(4) {
        for mu in Partition::all_up_to(4) {
            for a in 0..=3 {
                for b in 0..=3 {
                    assert!(green_rows(&lambda, &mu, a, b).unwrap().holds(), "{lambda} {mu} {a} {b}");
                    assert!(green_columns(&lambda, &mu, a, b).unwrap().holds(), "{lambda} {mu} {a} {b}");
                }
            }
        }
    }
}

#[test]
fn green_formula_as_transform() {
    let (lambda, mu): (Partition, Partition) = ("[2,1]".parse().unwrap(), "[2,1,1]".parse().unwrap());
    let mut u: Grid = vec![vec![RatFn::from_i64(Var::Q, 0); 4]; 4];
    let mut v = u.clone();
    for a in 0..4 {
        for b in 0..4 {
            u[a][b] = green_u(&lambda, &mu, a, b).unwrap();
            v[a][b] = green_v(&lambda, &mu, a, b).unwrap();
        }
    }
    assert_eq!(green_transform(&v), u);
    assert_eq!(green_transform_inverse(&u), v);
}

fn grid_strategy() -> impl Strategy<Value = Grid> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec((-5i64..6, 0i32..3), c), r).prop_map(|rows| {
            rows.into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|(k, e)| RatFn::from_poly(ihall_core::Poly::monomial(Var::Q, rat(k), e)))
                        .collect()
                })
                .collect()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn transforms_are_mutually_inverse(g in grid_strategy()) {
        prop_assert_eq!(green_transform_inverse(&green_transform(&g)), g.clone());
        prop_assert_eq!(green_transform(&green_transform_inverse(&g)), g.clone());
        prop_assert_eq!(vertical_transform_inverse(&vertical_transform(&g)), g.clone());
        prop_assert_eq!(vertical_transform(&vertical_transform_inverse(&g)), g);
    }
}
