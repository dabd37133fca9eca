//! The orthogonal-flag convention.
//!
//! `F^⊥` is realized as `J_ε · M^{-T} · B`, where `M` is the representative of
//! `F`, `B = diag(1, …, 1, b)` is the symmetric bilinear form (its own
//! inverse), and `J_ε` reverses the rows with signs `ε`. Row `k` of the result
//! spans, together with the rows before it, the `B`-orthogonal complement of
//! `V_{m-k}`. The pair `(b, ε)` is a build constant: it is fixed by the
//! brute-force search in [`search_convention`] and stored in the generated
//! table `calibration_table.rs`; the `regenerate_table` test rewrites that
//! file when `CACTUS_FLAGS_REGENERATE=1` is set and otherwise checks it.

use crate::arith::{Mat, Scalar};
use crate::error::{Error, Result};
use crate::flag::{Configuration, DecoratedFlag};
use crate::reconstruct::random_positive;

mod table {
    include!("calibration_table.rs");
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerpConvention {
    /// Sign of the last diagonal entry of `B`.
    pub form_sign: i8,
    /// `ε_k`: sign applied to row `k` of the reversed dual basis.
    pub row_signs: Vec<i8>,
}

impl PerpConvention {
    /// The shipped convention for ℝ^m.
    pub fn for_dim(m: usize) -> Result<PerpConvention> {
        table::PERP_TABLE
            .iter()
            .find(|(dim, _, _)| *dim == m)
            .map(|(_, b, eps)| PerpConvention {
                form_sign: *b,
                row_signs: eps.to_vec(),
            })
            .ok_or(Error::Uncalibrated { m })
    }

    pub fn dim(&self) -> usize {
        self.row_signs.len()
    }

    /// The form `B(x, y) = Σ_{i<m} x_i y_i + b·x_m y_m`.
    pub fn form(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let m = self.dim();
        let mut acc: Scalar = x[..m - 1].iter().zip(&y[..m - 1]).map(|(a, b)| a * b).sum();
        let last = &x[m - 1] * &y[m - 1];
        if self.form_sign < 0 {
            acc -= &last;
        } else {
            acc += &last;
        }
        acc
    }

    pub fn apply(&self, f: &DecoratedFlag) -> Result<DecoratedFlag> {
        let m = self.dim();
        if f.dim() != m {
            return Err(Error::DimensionMismatch {
                what: "orthogonal flag",
                expected: m,
                found: f.dim(),
            });
        }
        let dual = f.rep().inverse_transpose()?;
        let mut rows = Vec::with_capacity(m);
        for k in 0..m {
            let mut row = dual.row(m - 1 - k).to_vec();
            if self.form_sign < 0 {
                row[m - 1] = -&row[m - 1];
            }
            if self.row_signs[k] < 0 {
                row.iter_mut().for_each(|v| *v = -&*v);
            }
            rows.push(row);
        }
        DecoratedFlag::with_decorations(Mat::from_rows(rows)?)
    }

    /// Whether `det(J_ε) · b = 1`, which keeps unimodular flags unimodular.
    fn preserves_unimodularity(&self) -> bool {
        let m = self.dim();
        let eps: i32 = self.row_signs.iter().map(|&e| e as i32).product();
        let reversal = if (m * (m - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
        eps * reversal * self.form_sign as i32 == 1
    }
}

/// Candidate conventions in search order: palindromic `ε` in lexicographic
/// order with `+` before `-`, then `b ∈ {+1, -1}`; only candidates that keep
/// unimodular flags unimodular are listed.
pub fn candidates(m: usize) -> Vec<PerpConvention> {
    let half = m.div_ceil(2);
    let mut out = Vec::new();
    for mask in 0..(1u32 << half) {
        let mut eps = vec![1i8; m];
        for k in 0..half {
            if mask >> (half - 1 - k) & 1 == 1 {
                eps[k] = -1;
                eps[m - 1 - k] = -1;
            }
        }
        for b in [1i8, -1] {
            let c = PerpConvention {
                form_sign: b,
                row_signs: eps.clone(),
            };
            if c.preserves_unimodularity() {
                out.push(c);
            }
        }
    }
    out
}

/// Checks one candidate on a positive triangle: (i) `⊥` is an involution on
/// cosets, (ii) the raw reversal `(F₃^⊥, F₂^⊥, F₁^⊥)` is positive without any
/// sign normalization, (iii) applying it twice returns the same point.
pub fn convention_passes(conv: &PerpConvention, tri: &Configuration) -> Result<bool> {
    for f in tri.flags() {
        if !conv.apply(&conv.apply(f)?)?.same_coset(f) {
            return Ok(false);
        }
    }
    let reverse = |c: &Configuration| -> Result<Configuration> {
        Configuration::new(
            c.flags()
                .iter()
                .rev()
                .map(|f| conv.apply(f))
                .collect::<Result<Vec<_>>>()?,
        )
    };
    let once = reverse(tri)?;
    if !once.is_positive() {
        return Ok(false);
    }
    Ok(reverse(&once)?.same_point(tri))
}

/// First candidate passing [`convention_passes`] on `samples` random positive triangles.
pub fn search_convention(m: usize, samples: usize, seed: u64) -> Result<Option<PerpConvention>> {
    let triangles = (0..samples)
        .map(|s| random_positive(3, m, seed.wrapping_add(s as u64), 20))
        .collect::<Result<Vec<_>>>()?;
    for conv in candidates(m) {
        let mut ok = true;
        for tri in &triangles {
            if !convention_passes(&conv, tri)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(conv));
        }
    }
    Ok(None)
}

/// Renders the table file from search results.
pub fn render_table(entries: &[(usize, PerpConvention)]) -> String {
    let mut out = String::from(
        "// @generated by the `regenerate_table` test in calibration.rs; do not edit.\n\
         // (dimension m, sign of the last entry of the form B, row signs of the reversal)\n\
         pub(super) const PERP_TABLE: &[(usize, i8, &[i8])] = &[\n",
    );
    for (m, c) in entries {
        let eps: Vec<String> = c.row_signs.iter().map(i8::to_string).collect();
        out.push_str(&format!("    ({m}, {}, &[{}]),\n", c.form_sign, eps.join(", ")));
    }
    out.push_str("];\n");
    out
}

pub const CALIBRATED_DIMS: std::ops::RangeInclusive<usize> = 2..=6;
pub const SEARCH_SAMPLES: usize = 4;
pub const SEARCH_SEED: u64 = 0x5EED;
