use std::sync::Arc;

use num_bigint::BigUint;
use ovalcodes::lincode::weight_distribution_naive;
use ovalcodes::{macwilliams_dual, weight_distribution, Budget, Fe, FieldCtx, GeneratorMatrix};
use proptest::prelude::*;

fn field_and_elems(n: usize) -> impl Strategy<Value = (u32, Vec<u32>)> {
    (2u32..=16).prop_flat_map(move |m| (Just(m), prop::collection::vec(0u32..(1 << m), n)))
}

/// A random full-rank k x n matrix over GF(2^m), m in 2..=4.
fn matrix() -> impl Strategy<Value = GeneratorMatrix> {
    (2u32..=4, 1usize..=3, 0usize..=4)
        .prop_flat_map(|(m, k, extra)| {
            let n = k + extra;
            (
                Just(m),
                prop::collection::vec(prop::collection::vec(0u32..(1 << m), n), k),
            )
        })
        .prop_filter_map("rank deficient", |(m, rows)| {
            let ctx = Arc::new(FieldCtx::new(m).unwrap());
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(Fe).collect())
                .collect();
            GeneratorMatrix::new(ctx, rows).ok()
        })
}

proptest! {
    #[test]
    fn field_axioms((m, v) in field_and_elems(3)) {
        let f = FieldCtx::new(m).unwrap();
        let (a, b, c) = (Fe(v[0]), Fe(v[1]), Fe(v[2]));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(a, b), f.mul_schoolbook(a, b));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
            prop_assert_eq!(f.pow(a, u64::from(f.q()) - 1), Fe::ONE);
        }
        prop_assert_eq!(f.pow(a, u64::from(f.q()) - 2), f.inv(a).unwrap_or(Fe::ZERO));
    }

    #[test]
    fn trace_is_additive_and_frobenius_invariant((m, v) in field_and_elems(2)) {
        let f = FieldCtx::new(m).unwrap();
        let (a, b) = (Fe(v[0]), Fe(v[1]));
        prop_assert!(f.trace(a).0 <= 1);
        prop_assert_eq!(f.trace(f.add(a, b)), f.add(f.trace(a), f.trace(b)));
        prop_assert_eq!(f.trace(f.square(a)), f.trace(a));
        prop_assert_eq!(f.square(f.sqrt(a)), a);
    }

    #[test]
    fn fast_enumeration_matches_naive(g in matrix()) {
        let fast = weight_distribution(&g, Budget::DEFAULT).unwrap();
        prop_assert_eq!(&fast, &weight_distribution_naive(&g, Budget::DEFAULT).unwrap());
        prop_assert_eq!(fast.count(0), &BigUint::from(1u32));
        prop_assert_eq!(fast.total(), BigUint::from(g.q()).pow(g.k() as u32));
    }

    #[test]
    fn macwilliams_is_an_involution(g in matrix()) {
        let w = weight_distribution(&g, Budget::DEFAULT).unwrap();
        let d = macwilliams_dual(&w, g.q(), g.k()).unwrap();
        prop_assert_eq!(macwilliams_dual(&d, g.q(), g.n() - g.k()).unwrap(), w);
        if let Some(h) = g.dual() {
            prop_assert_eq!(weight_distribution(&h, Budget::DEFAULT).unwrap(), d);
        }
    }

    #[test]
    fn monomial_equivalence_preserves_weights(g in matrix(), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.rotate_left((seed as usize) % n);
        let scale = Fe(1 + (seed >> 8) as u32 % (g.q() - 1));
        let h = g.permute_columns(&perm).unwrap().scale_column((seed >> 16) as usize % n, scale).unwrap();
        prop_assert_eq!(
            weight_distribution(&g, Budget::DEFAULT).unwrap(),
            weight_distribution(&h, Budget::DEFAULT).unwrap()
        );
    }

    #[test]
    fn parity_extension_sums_to_zero(g in matrix(), msg in prop::collection::vec(0u32..4, 3)) {
        let e = g.extend();
        let message: Vec<Fe> = msg.into_iter().take(g.k()).map(Fe).collect();
        let word = e.encode(&message);
        let f = g.ctx();
        prop_assert_eq!(word.iter().fold(Fe::ZERO, |acc, &x| f.add(acc, x)), Fe::ZERO);
    }
}
