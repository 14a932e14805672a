use ihall_core::exactalg::{
    parse_coeff, parse_poly, parse_ratfunc, rat, rat_frac, CoeffTTheta, Poly, RatFn, SparsePoly, Var,
};
use num_traits::Zero;
use proptest::prelude::*;

fn poly(c: &[i64]) -> Poly {
    SparsePoly::from_coeffs(Var::T, c.iter().map(|&x| rat(x)).collect())
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 0..5).prop_map(|c| poly(&c))
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfn() -> impl Strategy<Value = RatFn> {
    (small_poly(), nonzero_poly()).prop_map(|(n, d)| RatFn::normalize(n, d).unwrap())
}

#[test]
fn canonical_text_examples() {
    assert_eq!(poly(&[1, -1]).to_string(), "1 - 1*t^1");
    assert_eq!(poly(&[]).to_string(), "0");
    let r = RatFn::normalize(poly(&[-1, 0, 1]), poly(&[-1, 1])).unwrap();
    assert_eq!(r, RatFn::from_poly(poly(&[1, 1])));
    assert!(RatFn::normalize(poly(&[1]), poly(&[])).is_err());
}

#[test]
fn laurent_normalization() {
    let t_inv = parse_poly::<ihall_core::Rational>("1*t^-1", Var::T).unwrap();
    let r = RatFn::from_poly(t_inv);
    assert_eq!(r.denom(), &poly(&[0, 1]));
    assert_eq!(r.to_laurent().unwrap().to_string(), "1*t^-1");
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn division_with_remainder(a in small_poly(), b in nonzero_poly()) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let g = (&a * &c).gcd(&(&b * &c));
        prop_assert!((&a * &c).div_exact(&g).is_ok());
        prop_assert!((&b * &c).div_exact(&g).is_ok());
        prop_assert!(g.div_exact(&c.make_monic()).is_ok());
    }

    #[test]
    fn ratfunc_field_axioms(x in ratfn(), y in ratfn(), z in ratfn()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            prop_assert_eq!(x.clone() / x.clone(), RatFn::from_i64(Var::T, 1));
        }
    }

    #[test]
    fn ratfunc_is_reduced(x in ratfn()) {
        prop_assert!(x.numer().gcd(x.denom()).is_one());
        prop_assert!(x.denom().leading_coeff().unwrap() == &rat(1));
    }

    #[test]
    fn ratfunc_eval_matches(x in ratfn(), y in ratfn(), p in 2i64..9, q in 1i64..5) {
        let at = rat_frac(p, q);
        if let (Ok(a), Ok(b)) = (x.eval(&at), y.eval(&at)) {
            prop_assert_eq!((&x * &y).eval(&at).unwrap(), a.clone() * b.clone());
            prop_assert_eq!((&x + &y).eval(&at).unwrap(), a + b);
        }
    }

    #[test]
    fn text_round_trip(x in ratfn(), a in small_poly(), b in small_poly()) {
        prop_assert_eq!(parse_poly::<ihall_core::Rational>(&a.to_string(), Var::T).unwrap(), a.clone());
        prop_assert_eq!(parse_ratfunc(&x.to_string(), Var::T).unwrap(), x.clone());
        let c: CoeffTTheta = SparsePoly::from_coeffs(Var::THETA, vec![x, RatFn::from_poly(b)]);
        prop_assert_eq!(parse_coeff(&c.to_string()).unwrap(), c);
    }
}
