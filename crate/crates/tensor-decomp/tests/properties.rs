//! Randomized invariants: basis round-trips, product laws, the isometry of
//! the characteristic map, and serialization round-trips.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use tensor_decomp::characters::ClassFunction;
use tensor_decomp::partitions::Partition;
use tensor_decomp::symfunc::{Basis, SymFunc};

fn partition_of_at_most(max_size: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=max_size.max(1), 0..=max_size as usize)
        .prop_map(Partition::from_unsorted)
        .prop_filter("bounded size", move |p| p.size() <= max_size)
}

fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![
        Just(Basis::Schur),
        Just(Basis::PowerSum),
        Just(Basis::Homogeneous),
    ]
}

fn symfunc(max_size: u32) -> impl Strategy<Value = SymFunc> {
    (
        basis(),
        prop::collection::vec(
            (partition_of_at_most(max_size), -9i64..=9, 1i64..=4),
            0..=5,
        ),
    )
        .prop_map(|(b, terms)| {
            SymFunc::from_terms(
                b,
                terms.into_iter().map(|(key, num, den)| {
                    (key, BigRational::new(BigInt::from(num), BigInt::from(den)))
                }),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_round_trips_are_identity(f in symfunc(6), target in basis()) {
        let back = f.convert(target).convert(f.basis());
        prop_assert_eq!(back, f);
    }

    #[test]
    fn multiplication_is_commutative(a in symfunc(4), b in symfunc(4)) {
        prop_assert!(a.multiply(&b).equivalent(&b.multiply(&a)));
    }

    #[test]
    fn multiplication_is_associative(
        a in partition_of_at_most(3),
        b in partition_of_at_most(3),
        c in partition_of_at_most(2),
    ) {
        let (a, b, c) = (SymFunc::schur(a), SymFunc::schur(b), SymFunc::schur(c));
        let left = a.multiply(&b).multiply(&c);
        let right = a.multiply(&b.multiply(&c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(a in symfunc(3), b in symfunc(3), c in symfunc(3)) {
        let left = a.multiply(&(&b + &c));
        let right = &a.multiply(&b) + &a.multiply(&c);
        prop_assert!(left.equivalent(&right));
    }

    /// ⟨f, g⟩ over classes equals the Hall inner product of the images under
    /// the characteristic map.
    #[test]
    fn characteristic_is_an_isometry(
        m in 1u32..=5,
        seed_f in prop::collection::vec(-6i64..=6, 0..8),
        seed_g in prop::collection::vec(-6i64..=6, 0..8),
    ) {
        let build = |seed: &[i64]| {
            let seed = seed.to_vec();
            ClassFunction::from_fn(m, move |c| {
                let idx = (c.cycle_type().len() + c.cycle_type().part(0) as usize)
                    % seed.len().max(1);
                BigRational::from_integer(BigInt::from(*seed.get(idx).unwrap_or(&0)))
            })
        };
        let f = build(&seed_f);
        let g = build(&seed_g);
        let class_side = f.class_inner(&g).unwrap();
        let hall_side = f.characteristic().inner_product(&g.characteristic());
        prop_assert_eq!(class_side, hall_side);
    }

    #[test]
    fn json_round_trip(f in symfunc(6)) {
        let json = serde_json::to_string(&f).unwrap();
        let back: SymFunc = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn partition_text_round_trip(p in partition_of_at_most(9)) {
        let comma = p.to_string();
        let body = comma.trim_start_matches('(').trim_end_matches(')');
        let reparsed: Partition = if p.is_empty() { "0".parse() } else { body.parse() }.unwrap();
        prop_assert_eq!(&reparsed, &p);
    }
}
