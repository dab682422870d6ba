//! Property tests for the polynomial engine and the event-list cleanup.

use clasp_core::bareiss::bareiss_det;
use clasp_core::ccomplex::{cleanup, RawEvent};
use clasp_core::laurent::LaurentPoly;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::strategy::ValueTree;

type P = LaurentPoly<BigInt>;

const MU: usize = 2;

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = P> {
    prop::collection::vec(
        (
            prop::collection::vec(-2i32..=2, MU),
            -4i64..=4,
        ),
        0..=max_terms,
    )
    .prop_map(|terms| {
        P::from_terms(
            MU,
            terms
                .into_iter()
                .map(|(exps, c)| (exps, BigInt::from(c))),
        )
    })
}

fn nonzero_poly(max_terms: usize) -> impl Strategy<Value = P> {
    poly_strategy(max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

fn matrix_strategy(n: usize) -> impl Strategy<Value = Vec<Vec<P>>> {
    prop::collection::vec(prop::collection::vec(poly_strategy(2), n), n)
}

fn cofactor_det(m: &[Vec<P>]) -> P {
    let n = m.len();
    if n == 0 {
        return P::one(MU);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = P::zero(MU);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<P>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_strategy(4), b in poly_strategy(4), c in poly_strategy(4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, P::zero(MU));
    }

    #[test]
    fn exact_div_inverts_multiplication(a in poly_strategy(4), b in nonzero_poly(4)) {
        let product = &a * &b;
        prop_assert_eq!(product.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(n in 1usize..=4, seed in any::<u64>()) {
        // derive a matrix from the seed via the strategy machinery
        let mut runner = proptest::test_runner::TestRunner::deterministic();
        let _ = seed; // sizes vary; entries come from the deterministic runner
        let m = matrix_strategy(n).new_tree(&mut runner).unwrap().current();
        prop_assert_eq!(bareiss_det(&m), cofactor_det(&m));
    }

    #[test]
    fn cleanup_is_idempotent(events in event_list_strategy()) {
        let once = cleanup(events);
        let twice = cleanup(once.clone());
        prop_assert_eq!(once, twice);
    }
}

fn event_list_strategy() -> impl Strategy<Value = Vec<RawEvent>> {
    prop::collection::vec(
        (0usize..4, 0usize..2, prop::bool::ANY).prop_map(|(lo, span, positive)| {
            let sign = if positive { 1 } else { -1 };
            if span == 0 {
                RawEvent::Band { disk: lo, sign }
            } else {
                RawEvent::Finger {
                    lo,
                    hi: lo + span + 1,
                    sign,
                    passes: Vec::new(),
                }
            }
        }),
        0..12,
    )
}

#[test]
fn bareiss_transpose_and_row_swap_invariance() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for _ in 0..40 {
        let m = matrix_strategy(3).new_tree(&mut runner).unwrap().current();
        let det = bareiss_det(&m);

        let transposed: Vec<Vec<P>> = (0..3)
            .map(|j| (0..3).map(|i| m[i][j].clone()).collect())
            .collect();
        assert_eq!(bareiss_det(&transposed), det);

        let mut swapped = m.clone();
        swapped.swap(0, 2);
        assert_eq!(bareiss_det(&swapped), -&det);
    }
}

#[test]
fn bareiss_matches_cofactor_on_many_random_matrices() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for n in 1..=4usize {
        for _ in 0..60 {
            let m = matrix_strategy(n).new_tree(&mut runner).unwrap().current();
            assert_eq!(bareiss_det(&m), cofactor_det(&m));
        }
    }
}
