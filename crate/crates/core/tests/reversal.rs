mod common;

use cactus_flags::calibration::PerpConvention;
use cactus_flags::flag::orthogonal_flag;
use cactus_flags::reconstruct::random_positive;
use cactus_flags::{Configuration, Error};
use common::{idx, square_m2};
use proptest::prelude::*;

fn triangle(max_m: usize) -> impl Strategy<Value = Configuration> {
    (2..=max_m, any::<u64>()).prop_map(|(m, seed)| random_positive(3, m, seed, 15).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn complement_is_orthogonal_and_involutive(c in triangle(6)) {
        let m = c.m();
        let conv = PerpConvention::for_dim(m).unwrap();
        for f in c.flags() {
            let g = orthogonal_flag(f).unwrap();
            prop_assert!(g.is_unimodular());
            prop_assert!(orthogonal_flag(&g).unwrap().same_coset(f));
            // V_k(F^⊥) is the B-orthogonal complement of V_{m-k}(F)
            for k in 1..m {
                for a in 0..m - k {
                    for b in 0..k {
                        prop_assert!(conv.form(f.row(a), g.row(b)).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn theta_is_a_positive_involution(c in triangle(5)) {
        let t = c.theta().unwrap();
        prop_assert!(t.is_positive());
        prop_assert!(t.theta().unwrap().same_point(&c));
    }

    #[test]
    fn theta_reverses_faces(c in triangle(4)) {
        let t = c.theta().unwrap();
        for i in 1..=3 {
            prop_assert!(t.face(i).unwrap().same_point(&c.face(4 - i).unwrap()));
        }
    }

    #[test]
    fn theta_reverses_rotation(c in triangle(4)) {
        let lhs = c.rotate().unwrap().theta().unwrap();
        let rhs = c.theta().unwrap().rotate_inverse().unwrap();
        prop_assert!(lhs.same_point(&rhs));
    }

    #[test]
    fn rotation_has_order_three_and_shifts_faces(c in triangle(5)) {
        let r = c.rotate().unwrap();
        prop_assert!(r.rotate().unwrap().rotate().unwrap().same_point(&c));
        prop_assert!(r.rotate_inverse().unwrap().same_point(&c));
        for i in 1..=3 {
            let prev = if i == 1 { 3 } else { i - 1 };
            prop_assert!(r.face(i).unwrap().same_point(&c.face(prev).unwrap()));
        }
    }

    #[test]
    fn iota_fixes_positive_edges(c in triangle(6)) {
        let e = c.face(3).unwrap();
        let i = e.iota().unwrap();
        prop_assert!(i.same_point(&e));
        prop_assert!(i.iota().unwrap().same_point(&e));
    }

    #[test]
    fn reversal_keeps_larger_polygons_positive(n in 4usize..=6, m in 2usize..=4, seed in any::<u64>()) {
        let c = random_positive(n, m, seed, 15).unwrap();
        let r = c.reverse_complement().unwrap();
        prop_assert!(r.is_positive());
        prop_assert!(r.reverse_complement().unwrap().same_point(&c));
    }
}

#[test]
fn theta_on_m2_swaps_outer_edges() {
    let c = random_positive(3, 2, 8, 20).unwrap();
    let t = c.theta().unwrap();
    let d = |x: &Configuration, i: [usize; 3]| x.delta(&idx(&i)).unwrap();
    assert_eq!(d(&t, [1, 1, 0]), d(&c, [0, 1, 1]));
    assert_eq!(d(&t, [0, 1, 1]), d(&c, [1, 1, 0]));
    assert_eq!(d(&t, [1, 0, 1]), d(&c, [1, 0, 1]));
}

#[test]
fn theta_requires_a_positive_triangle() {
    let c = square_m2();
    assert!(matches!(c.theta(), Err(Error::Arity { expected: 3, found: 4 })));
    let flipped = c.select(&[0, 2, 1]).unwrap();
    assert!(matches!(flipped.theta(), Err(Error::NotPositive { .. })));
    assert!(matches!(c.face(4), Err(Error::Arity { .. })));
    let tri = c.select(&[0, 1, 2]).unwrap();
    assert_eq!(tri.face(0), Err(Error::FaceIndex(0)));
}
