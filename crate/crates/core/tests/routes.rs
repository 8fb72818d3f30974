//! Q-function routes against each other and against independent oracles.

mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use schurq::partitions::{contained_strict, enumerate_strict};
use schurq::qfunctions::straight_matrix;
use schurq::{
    pfaffian, q_function, q_k, q_morris, q_pf, q_recur, q_skew_pf, q_skew_strips, PPoly, Route,
    SkewShape, SkewSymMatrix,
};

use common::{determinant, is_weight_homogeneous, q_series, random_skew_matrix, seeded_rng, skew, sp};

#[test]
fn one_row_matches_generating_series() {
    let series = q_series(14);
    for (k, expected) in series.iter().enumerate() {
        assert_eq!(&q_k(k as i64), expected, "q_{k}");
    }
    assert!(q_k(-1).is_zero());
}

#[test]
fn pfaffian_squares_to_determinant() {
    let mut rng = seeded_rng(17);
    for trial in 0..100 {
        let size = 2 * (1 + trial % 4);
        let a = random_skew_matrix(&mut rng, size, 5);
        let m = SkewSymMatrix::from_fn(size, |i, j| BigInt::from(a[i][j]));
        let pf = pfaffian(&m);
        assert_eq!(num_rational::BigRational::from_integer(&pf * &pf), determinant(&a));
    }
}

#[test]
fn empty_pfaffian_is_one() {
    let m: SkewSymMatrix<BigInt> = SkewSymMatrix::zeros(0);
    assert_eq!(pfaffian(&m), BigInt::from(1));
}

#[test]
fn straight_matrix_pads_odd_length() {
    let m = straight_matrix(&sp(&[5, 3, 1]));
    assert_eq!(m.size(), 4);
    assert_eq!(m.get(0, 3), q_k(5));
}

#[test]
fn skew_routes_reduce_to_straight() {
    for n in 0..=9 {
        for lam in enumerate_strict(n) {
            let full = SkewShape::straight(lam.clone());
            let m = q_morris(&lam);
            assert_eq!(q_skew_pf(&full), m, "{lam}");
            assert_eq!(q_skew_strips(&full), m, "{lam}");
            let same = SkewShape::new(lam.clone(), lam.clone()).unwrap();
            assert_eq!(q_skew_pf(&same), PPoly::from_int(1), "{lam}/{lam}");
        }
    }
}

#[test]
fn skew_functions_are_homogeneous() {
    for n in 0..=9 {
        for lam in enumerate_strict(n) {
            for mu in contained_strict(&lam) {
                let shape = SkewShape::new(lam.clone(), mu.clone()).unwrap();
                let q = q_skew_pf(&shape);
                assert!(is_weight_homogeneous(&q, shape.size()), "{shape}");
            }
        }
    }
}

#[test]
fn dispatch_refuses_straight_routes_on_skew_shapes() {
    let shape = skew(&[4, 3], &[3]);
    assert!(q_function(&shape, Route::Morris).is_none());
    assert!(q_function(&shape, Route::Recur).is_none());
    assert_eq!(q_function(&shape, Route::Pf), q_function(&shape, Route::Strips));
}

fn strict_partition() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::btree_set(1usize..=7, 0..=4)
        .prop_map(|s| s.into_iter().rev().collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn straight_routes_agree(parts in strict_partition()) {
        let lam = sp(&parts);
        let m = q_morris(&lam);
        prop_assert_eq!(&q_recur(&lam), &m);
        prop_assert_eq!(&q_pf(&lam), &m);
        prop_assert!(is_weight_homogeneous(&m, lam.size()));
    }

    #[test]
    fn terms_are_odd_with_length_parity(parts in strict_partition()) {
        // every term p_π has π odd, so its length has the parity of |λ|
        let lam = sp(&parts);
        for (nu, _) in q_morris(&lam).terms() {
            prop_assert!(nu.parts().iter().all(|p| p % 2 == 1));
            prop_assert_eq!(nu.len() % 2, lam.size() % 2);
        }
    }
}
