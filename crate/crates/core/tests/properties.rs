mod support;

use proptest::prelude::*;
use support::*;

fn q() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 9])
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn field_axioms_hold(q in q(), a: u32, b: u32, c: u32) {
        field_axioms(q, a, b, c)?;
    }

    #[test]
    fn expansion_round_trips(q in q(), x: u32, b1: u32, b2: u32) {
        expand_round_trip(q, x, b1, b2)?;
    }

    #[test]
    fn generator_divides_x_n_plus_one((q, n, chosen) in defining_set()) {
        generator_divides(q, n, &chosen)?;
    }

    #[test]
    fn parity_check_annihilates_generator((q, n, b, d) in bch_params()) {
        parity_orthogonal(q, n, b, d)?;
    }

    #[test]
    fn distance_meets_designed_distance((q, n, b, d) in bch_params()) {
        bch_bound(q, n, b, d)?;
    }

    #[test]
    fn parity_rank_ignores_basis((q, n, b, d) in bch_params(), b1: u32, b2: u32) {
        basis_independent_rank(q, n, b, d, b1, b2)?;
    }

    #[test]
    fn dual_basis_is_orthogonal((q, k, n, raw) in poly_matrix()) {
        dual_orthogonality(q, k, n, &raw)?;
    }
}
