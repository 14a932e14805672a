use ihall_core::genfun::*;
use ihall_core::ihall::{IHallAlgebra, IHallElement};
use ihall_core::partitions::Partition;
use num_traits::One;
use proptest::prelude::*;

fn ring() -> VRing<'static> {
    VRing::new(IHallAlgebra::shared())
}

#[test]
fn identities_at_acceptance_orders() {
    let ring = ring();
    for id in Identity::ALL {
        let n = match id {
            Identity::HE | Identity::TE1 | Identity::TE2 => 8,
            _ => 6,
        };
        let r = verify_identity(id, n, 10, &ring).unwrap();
        println!("{}", r.to_json());
        assert!(r.pass, "{id}: {:?}", r.first_failure);
    }
}

#[test]
fn order_budget_is_enforced() {
    assert!(verify_identity(Identity::HE, 12, 10, &ring()).is_err());
}

#[test]
fn broken_identity_reports_first_failure() {
    let lhs = series_h(4);
    let rhs = series_e(4);
    let f = first_difference(&lhs, &rhs, 4).unwrap();
    assert_eq!(f.z_power, 2);
}

#[test]
fn sqrt_squares_back() {
    let ring = ring();
    for s in [series_h(6), series_e(6)] {
        let r = s.sqrt(&ring).unwrap();
        assert_eq!(r.mul(&r, &ring).unwrap(), s);
        assert_eq!(s.log(&ring).unwrap().exp(&ring).unwrap(), s);
        assert_eq!(s.mul(&s.inverse(&ring).unwrap(), &ring).unwrap(), IHallSeries::one(6));
    }
}

fn small_series() -> impl Strategy<Value = IHallSeries> {
    let term = (0usize..3, 0u32..2, -3i64..4);
    prop::collection::vec(prop::collection::vec(term, 0..3), 4).prop_map(|cs| {
        let coeffs = cs
            .into_iter()
            .enumerate()
            .map(|(k, ts)| {
                ts.into_iter().fold(IHallElement::zero(), |acc, (i, a, c)| {
                    let parts = Partition::all(k.min(2)).into_iter().nth(i).unwrap_or_else(Partition::empty);
                    acc.add(&IHallElement::basis(parts, a).scale(&(v_pow(c as i32) + ihall_core::RatFn::one())))
                })
            })
            .collect();
        IHallSeries::from_coeffs(coeffs, 3)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn derivative_is_leibniz(a in small_series(), b in small_series()) {
        let ring = ring();
        let lhs = a.mul(&b, &ring).unwrap().derivative();
        let rhs = a.derivative().mul(&b.truncate(2), &ring).unwrap()
            .add(&a.truncate(2).mul(&b.derivative(), &ring).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
