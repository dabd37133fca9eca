mod common;

use cactus_flags::{Mat, Scalar};
use common::leibniz_det;
use proptest::prelude::*;

fn mat(n: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(prop::collection::vec((-9i64..=9, 1i64..=4), n), n).prop_map(|rows| {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|(p, q)| Scalar::new(p, q)).collect())
                .collect(),
        )
        .unwrap()
    })
}

fn sized_pair() -> impl Strategy<Value = (Mat, Mat)> {
    (1usize..=5).prop_flat_map(|n| (mat(n), mat(n)))
}

proptest! {
    #[test]
    fn det_matches_permutation_expansion(a in (1usize..=5).prop_flat_map(mat)) {
        prop_assert_eq!(a.det().unwrap(), leibniz_det(&a.row_vecs()));
    }

    #[test]
    fn det_is_multiplicative((a, b) in sized_pair()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn det_of_transpose(a in (1usize..=5).prop_flat_map(mat)) {
        prop_assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
    }

    #[test]
    fn solve_has_zero_residual(
        (a, b) in (1usize..=5).prop_flat_map(|n| (mat(n), prop::collection::vec(-20i64..=20, n)))
    ) {
        let b: Vec<Scalar> = b.into_iter().map(Scalar::from).collect();
        match a.solve(&b) {
            Ok(x) => prop_assert_eq!(a.mul_vec(&x).unwrap(), b),
            Err(_) => prop_assert!(a.det().unwrap().is_zero()),
        }
    }

    #[test]
    fn inverse_transpose_pairs_rows(a in (1usize..=4).prop_flat_map(mat)) {
        prop_assume!(!a.det().unwrap().is_zero());
        let d = a.inverse_transpose().unwrap();
        // rows of A and of A^{-T} are dual bases
        let prod = a.mul(&d.transpose()).unwrap();
        prop_assert_eq!(prod, Mat::identity(a.rows()));
    }

    #[test]
    fn scalar_text_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let x = Scalar::new(p, q);
        prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), x);
    }
}

#[test]
fn scalar_parsing_rejects_noise() {
    for bad in ["", "1/0", "+3", " 2", "1/-2", "a", "1.5"] {
        assert!(bad.parse::<Scalar>().is_err(), "{bad:?}");
    }
    assert_eq!("-6/4".parse::<Scalar>().unwrap().to_string(), "-3/2");
}
