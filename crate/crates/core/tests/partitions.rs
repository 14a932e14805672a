use ihall_core::partitions::{
    horizontal_strips, is_horizontal_strip, is_vertical_strip, vertical_strips, Direction,
};
use ihall_core::Partition;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..5, 0..5).prop_map(Partition::from_parts)
}

proptest! {
    #[test]
    fn conjugate_is_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn strips_match_brute_force(p in partition(), a in 0usize..4) {
        let sorted = |mut v: Vec<Partition>| {
            v.sort();
            v
        };
        let up: Vec<Partition> =
            Partition::all(p.size() + a).into_iter().filter(|l| is_horizontal_strip(l, &p)).collect();
        prop_assert_eq!(horizontal_strips(&p, a, Direction::Up), sorted(up));
        let down: Vec<Partition> = if a <= p.size() {
            Partition::all(p.size() - a).into_iter().filter(|n| is_horizontal_strip(&p, n)).collect()
        } else {
            Vec::new()
        };
        prop_assert_eq!(horizontal_strips(&p, a, Direction::Down), sorted(down));
        let vup: Vec<Partition> =
            Partition::all(p.size() + a).into_iter().filter(|l| is_vertical_strip(l, &p)).collect();
        prop_assert_eq!(vertical_strips(&p, a, Direction::Up), sorted(vup));
    }
}
