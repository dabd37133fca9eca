// @generated by the `regenerate_table` test in calibration.rs; do not edit.
// (dimension m, sign of the last entry of the form B, row signs of the reversal)
pub(super) const PERP_TABLE: &[(usize, i8, &[i8])] = &[
    (2, -1, &[1, 1]),
    (3, -1, &[1, 1, 1]),
    (4, 1, &[1, 1, 1, 1]),
    (5, 1, &[1, 1, 1, 1, 1]),
    (6, -1, &[1, 1, 1, 1, 1, 1]),
];
