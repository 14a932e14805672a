use num_traits::Zero;
use ihall_core::giambelli::{giambelli_v, Mode, VExpr};
use ihall_core::partitions::{horizontal_strips, Direction};
use ihall_core::pieri::{at_t_zero, ischur_pieri, mirror_identity_check, Mirror, PieriRule};
use ihall_core::Partition;

const RULES: [PieriRule; 4] =
    [PieriRule::HorizontalDownUp, PieriRule::HorizontalUpDown, PieriRule::VerticalDownUp, PieriRule::VerticalUpDown];

#[test]
fn rules_match_brute_force_small() {
    for n in 0..=4 {
        for mu in Partition::all(n) {
            for r in 1..=3 {
                for rule in RULES {
                    let a = rule.apply(&mu, r).unwrap();
                    let b = rule.brute_force(&mu, r).unwrap();
                    assert_eq!(a, b, "{rule:?} {mu} {r}");
                }
            }
        }
    }
}

#[test]
fn theta_zero_layer_is_classical() {
    let mu: Partition = "[2,1]".parse().unwrap();
    let e = PieriRule::HorizontalDownUp.apply(&mu, 2).unwrap();
    let prod = giambelli_v(&[2, 1], Mode::Classical).mul(&VExpr::v_row(2));
    let classical = ihall_core::giambelli::expand_in_basis(&prod, |l| {
        std::sync::Arc::new(giambelli_v(&l.padded(0), Mode::Classical))
    })
    .unwrap();
    for (lambda, c) in &classical {
        assert_eq!(e[lambda].coeff(0), c.coeff(0), "{lambda}");
    }
    assert!(e.keys().filter(|l| l.size() == 5).all(|l| classical.contains_key(l)));
}

#[test]
fn ischur_matches_t_zero() {
    for n in 0..=4 {
        for mu in Partition::all(n) {
            for r in 1..=3 {
                let e = at_t_zero(&PieriRule::HorizontalDownUp.apply(&mu, r).unwrap()).unwrap();
                assert_eq!(e, ischur_pieri(&mu, r), "{mu} {r}");
            }
        }
    }
}

#[test]
fn mirror_identities() {
    for n in 0..=4 {
        for p in Partition::all(n) {
            for b in 0..=3 {
                assert!(mirror_identity_check(Mirror::I, &p, 0, b).unwrap(), "I {p} {b}");
                for a in 0..=n.min(3) {
                    let holds = mirror_identity_check(Mirror::II, &p, a, b).unwrap();
                    if b == 0 || a <= p.parts().last().copied().unwrap_or(0) {
                        assert!(holds, "II {p} {a} {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn top_theta_layer_support() {
    // θ^r only appears on λ with λ → μ an r-strip.
    for n in 0..=5 {
        for mu in Partition::all(n) {
            for r in 1..=3.min(n) {
                let e = PieriRule::HorizontalDownUp.apply(&mu, r).unwrap();
                let allowed = horizontal_strips(&mu, r, Direction::Down);
                for (lambda, c) in &e {
                    if !c.coeff(r as i32).is_zero() {
                        assert!(allowed.contains(lambda));
                    }
                }
            }
        }
    }
}
