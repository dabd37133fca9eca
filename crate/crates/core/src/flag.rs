//! Decorated flags, configurations of flags modulo the unimodular group, and
//! their Δ-coordinates.
//!
//! A decorated flag in ℝ^m is stored as an m×m matrix whose first `i` rows
//! span `V_i` and wedge to the volume form `ω_i`. Adding multiples of earlier
//! rows to later rows does not change any `ω_i`, so the representative is a
//! coset of the lower-unitriangular group acting on the left. A configuration
//! of `n` flags is a point of the quotient by the simultaneous right action of
//! `SL_m`; all of its invariants are the determinants
//!
//! ```text
//! Δ_{i_1…i_n} = det [first i_1 rows of flag 1; …; first i_n rows of flag n]
//! ```
//!
//! taken over admissible multi-indices (entries summing to `m`, at least two
//! nonzero). Points are compared by comparing every Δ.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{Mat, Scalar};
use crate::calibration::PerpConvention;
use crate::error::{Error, Result};

/// A multi-index `(i_1, …, i_n)`; entry `k` is the weight on flag `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(entries: Vec<usize>) -> Self {
        MultiIndex(entries)
    }

    /// All-zero index of length `n` with the given `(position, weight)` pairs set.
    pub fn from_weights(n: usize, weights: &[(usize, usize)]) -> Self {
        let mut e = vec![0; n];
        for &(pos, w) in weights {
            e[pos] += w;
        }
        MultiIndex(e)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Positions (0-based) carrying nonzero weight.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > 0)
            .map(|(k, _)| k)
            .collect()
    }

    pub fn is_admissible(&self, n: usize, m: usize) -> bool {
        self.0.len() == n && self.weight() == m && self.0.iter().filter(|&&w| w > 0).count() >= 2
    }

    pub fn check(&self, n: usize, m: usize) -> Result<()> {
        if self.is_admissible(n, m) {
            Ok(())
        } else {
            Err(Error::InadmissibleIndex {
                index: self.0.clone(),
                n,
                m,
            })
        }
    }

    /// Every admissible multi-index for `(n, m)`, in lexicographic order.
    pub fn all(n: usize, m: usize) -> Vec<MultiIndex> {
        fn rec(pos: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
            let n = cur.len();
            if pos == n - 1 {
                cur[pos] = left;
                if cur.iter().filter(|&&w| w > 0).count() >= 2 {
                    out.push(MultiIndex(cur.clone()));
                }
                cur[pos] = 0;
                return;
            }
            for w in 0..=left {
                cur[pos] = w;
                rec(pos + 1, left - w, cur, out);
            }
            cur[pos] = 0;
        }
        let mut out = Vec::new();
        if n >= 2 {
            rec(0, m, &mut vec![0; n], &mut out);
        }
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad multi-index {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(MultiIndex)
    }
}

/// A full flag in ℝ^m with volume forms, given by a representative matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DecoratedFlag {
    rep: Mat,
}

impl DecoratedFlag {
    /// A unimodular representative (the default interchange format).
    pub fn new(rep: Mat) -> Result<Self> {
        let f = DecoratedFlag::with_decorations(rep)?;
        let det = f.rep.det()?;
        if !det.is_one() {
            return Err(Error::NotUnimodular { det });
        }
        Ok(f)
    }

    /// Any invertible representative; `ω_m` is then `det(rep)` times the standard volume form.
    pub fn with_decorations(rep: Mat) -> Result<Self> {
        if !rep.is_square() {
            return Err(Error::NotSquare {
                rows: rep.rows(),
                cols: rep.cols(),
            });
        }
        if rep.rows() < 2 {
            return Err(Error::DimensionMismatch {
                what: "flag dimension (m >= 2)",
                expected: 2,
                found: rep.rows(),
            });
        }
        if rep.det()?.is_zero() {
            return Err(Error::SingularFlag);
        }
        Ok(DecoratedFlag { rep })
    }

    pub fn standard(m: usize) -> Self {
        DecoratedFlag {
            rep: Mat::identity(m),
        }
    }

    pub fn dim(&self) -> usize {
        self.rep.rows()
    }

    pub fn rep(&self) -> &Mat {
        &self.rep
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        self.rep.row(i)
    }

    pub fn is_unimodular(&self) -> bool {
        self.rep.det().map(|d| d.is_one()).unwrap_or(false)
    }

    /// Coset normal form; requires a unimodular representative.
    pub fn canonicalize(&self) -> Result<Self> {
        let det = self.rep.det()?;
        if !det.is_one() {
            return Err(Error::NotUnimodular { det });
        }
        Ok(self.coset_normal_form())
    }

    /// Reduces each row modulo the span of the earlier rows so that it
    /// vanishes on the pivot columns of the earlier (already reduced) rows.
    /// Pivots are the first nonzero column of each reduced row.
    pub fn coset_normal_form(&self) -> Self {
        let m = self.dim();
        let mut rep = self.rep.clone();
        let mut pivots: Vec<usize> = Vec::with_capacity(m);
        for i in 0..m {
            for (j, &p) in pivots.iter().enumerate() {
                let c = &rep[(i, p)] / &rep[(j, p)];
                if c.is_zero() {
                    continue;
                }
                for col in 0..m {
                    let d = &c * &rep[(j, col)];
                    rep[(i, col)] -= &d;
                }
            }
            let p = (0..m)
                .find(|&col| !rep[(i, col)].is_zero())
                .expect("invertible representative");
            pivots.push(p);
        }
        DecoratedFlag { rep }
    }

    pub fn same_coset(&self, other: &DecoratedFlag) -> bool {
        self.dim() == other.dim() && self.coset_normal_form() == other.coset_normal_form()
    }

    /// Left multiplication by a lower-unitriangular matrix (a coset move).
    pub fn coset_move(&self, lower: &Mat) -> Result<Self> {
        let m = self.dim();
        if lower.rows() != m || lower.cols() != m {
            return Err(Error::DimensionMismatch {
                what: "coset move",
                expected: m,
                found: lower.rows(),
            });
        }
        for i in 0..m {
            for j in i..m {
                let want = if i == j { Scalar::one() } else { Scalar::zero() };
                if lower[(i, j)] != want {
                    return Err(Error::Internal(
                        "coset move must be lower unitriangular".into(),
                    ));
                }
            }
        }
        Ok(DecoratedFlag {
            rep: lower.mul(&self.rep)?,
        })
    }

    /// Right multiplication by `g` (the global linear action).
    pub fn act(&self, g: &Mat) -> Result<Self> {
        DecoratedFlag::with_decorations(self.rep.mul(g)?)
    }

    /// Negates `ω_i` alone (1 <= i < m) by negating rows `i` and `i+1`.
    pub fn negate_decoration(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.dim(), "decoration index out of range");
        let mut rep = self.rep.clone();
        for r in [i - 1, i] {
            for v in rep.row_mut(r) {
                *v = -&*v;
            }
        }
        DecoratedFlag { rep }
    }

    /// Scales row `i` (0-based) by `factor`, i.e. `ω_{i+1}, …, ω_m` by `factor`.
    pub fn scale_row(&self, i: usize, factor: &Scalar) -> Result<Self> {
        let mut rep = self.rep.clone();
        for v in rep.row_mut(i) {
            *v *= factor;
        }
        DecoratedFlag::with_decorations(rep)
    }
}

impl fmt::Debug for DecoratedFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Flag{:?}", self.rep)
    }
}

/// The orthogonal flag `(V_{m-1}^⊥ ⊂ … ⊂ V_1^⊥)` under the calibrated convention.
pub fn orthogonal_flag(f: &DecoratedFlag) -> Result<DecoratedFlag> {
    PerpConvention::for_dim(f.dim())?.apply(f)
}

/// An ordered tuple of `n >= 2` decorated flags in the same ℝ^m.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ConfigurationJson", into = "ConfigurationJson")]
pub struct Configuration {
    m: usize,
    flags: Vec<DecoratedFlag>,
}

#[derive(Serialize, Deserialize)]
struct ConfigurationJson {
    m: usize,
    n: usize,
    flags: Vec<Vec<Vec<Scalar>>>,
}

impl TryFrom<ConfigurationJson> for Configuration {
    type Error = Error;

    fn try_from(j: ConfigurationJson) -> Result<Self> {
        if j.flags.len() != j.n {
            return Err(Error::Arity {
                expected: j.n,
                found: j.flags.len(),
            });
        }
        let flags = j
            .flags
            .into_iter()
            .map(|rows| {
                let rep = Mat::from_rows(rows)?;
                if rep.rows() != j.m || rep.cols() != j.m {
                    return Err(Error::DimensionMismatch {
                        what: "flag representative",
                        expected: j.m,
                        found: rep.rows().max(rep.cols()),
                    });
                }
                DecoratedFlag::with_decorations(rep)
            })
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(flags)
    }
}

impl From<Configuration> for ConfigurationJson {
    fn from(c: Configuration) -> Self {
        ConfigurationJson {
            m: c.m,
            n: c.flags.len(),
            flags: c.flags.iter().map(|f| f.rep.row_vecs()).collect(),
        }
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Configuration")
            .field("m", &self.m)
            .field("flags", &self.flags)
            .finish()
    }
}

impl Configuration {
    pub fn new(flags: Vec<DecoratedFlag>) -> Result<Self> {
        if flags.len() < 2 {
            return Err(Error::Arity {
                expected: 2,
                found: flags.len(),
            });
        }
        let m = flags[0].dim();
        if let Some(bad) = flags.iter().find(|f| f.dim() != m) {
            return Err(Error::DimensionMismatch {
                what: "flag dimension",
                expected: m,
                found: bad.dim(),
            });
        }
        Ok(Configuration { m, flags })
    }

    /// Builds a configuration from integer rows, one `m×m` block per flag.
    pub fn from_i64(blocks: &[&[&[i64]]]) -> Result<Self> {
        let flags = blocks
            .iter()
            .map(|b| DecoratedFlag::new(Mat::from_i64(b)))
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(flags)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.flags.len()
    }

    pub fn flags(&self) -> &[DecoratedFlag] {
        &self.flags
    }

    pub fn flag(&self, k: usize) -> &DecoratedFlag {
        &self.flags[k]
    }

    pub fn delta(&self, idx: &MultiIndex) -> Result<Scalar> {
        idx.check(self.n(), self.m)?;
        self.delta_unchecked(idx)
    }

    fn delta_unchecked(&self, idx: &MultiIndex) -> Result<Scalar> {
        let mut rows = Vec::with_capacity(self.m);
        for (flag, &w) in self.flags.iter().zip(idx.entries()) {
            for r in 0..w {
                rows.push(flag.row(r).to_vec());
            }
        }
        Mat::from_rows(rows)?.det()
    }

    /// Every Δ over every admissible multi-index, in lexicographic index order.
    pub fn deltas(&self) -> Vec<(MultiIndex, Scalar)> {
        MultiIndex::all(self.n(), self.m)
            .into_iter()
            .map(|idx| {
                let v = self.delta_unchecked(&idx).expect("square stack");
                (idx, v)
            })
            .collect()
    }

    /// Fails with the first vanishing (`Degenerate`) or negative (`NotPositive`) Δ.
    pub fn check_positive(&self) -> Result<()> {
        for (index, value) in self.deltas() {
            if value.is_zero() {
                return Err(Error::Degenerate { index });
            }
            if value.is_negative() {
                return Err(Error::NotPositive { index, value });
            }
        }
        Ok(())
    }

    pub fn is_positive(&self) -> bool {
        self.check_positive().is_ok()
    }

    pub fn is_regular(&self) -> bool {
        self.deltas().iter().all(|(_, v)| !v.is_zero())
    }

    /// Equality as points of the quotient: same shape and identical Δ everywhere.
    pub fn same_point(&self, other: &Configuration) -> bool {
        self.n() == other.n() && self.m == other.m && self.deltas() == other.deltas()
    }

    /// Applies `g` to every flag.
    pub fn act(&self, g: &Mat) -> Result<Self> {
        Configuration::new(
            self.flags
                .iter()
                .map(|f| f.act(g))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// The flags at the given positions, in the given order (no normalization).
    pub fn select(&self, positions: &[usize]) -> Result<Self> {
        let mut flags = Vec::with_capacity(positions.len());
        for &p in positions {
            let f = self.flags.get(p).ok_or(Error::Arity {
                expected: p + 1,
                found: self.n(),
            })?;
            flags.push(f.clone());
        }
        Configuration::new(flags)
    }

    /// Flips decoration signs so that every Δ becomes positive.
    ///
    /// Negating `ω_i` on flag `k` flips the sign of exactly those Δ with
    /// `i_k = i`, so the required flips solve a linear system over GF(2):
    /// one equation per admissible index, one unknown per (flag, i < m).
    pub fn sign_normalize(&self) -> Result<Self> {
        let deltas = self.deltas();
        if let Some((index, _)) = deltas.iter().find(|(_, v)| v.is_zero()) {
            return Err(Error::Degenerate {
                index: index.clone(),
            });
        }
        if deltas.iter().all(|(_, v)| v.is_positive()) {
            return Ok(self.clone());
        }
        let (n, m) = (self.n(), self.m);
        let var = |k: usize, i: usize| k * (m - 1) + (i - 1);
        let eqs: Vec<(Vec<usize>, bool)> = deltas
            .iter()
            .map(|(idx, v)| {
                let vars = idx
                    .entries()
                    .iter()
                    .enumerate()
                    .filter(|(_, &w)| w > 0 && w < m)
                    .map(|(k, &w)| var(k, w))
                    .collect();
                (vars, v.is_negative())
            })
            .collect();
        let flips = solve_gf2(n * (m - 1), &eqs).map_err(|e| Error::SignNormalization {
            witness: deltas[e].0.clone(),
        })?;
        let mut flags = self.flags.clone();
        for (k, flag) in flags.iter_mut().enumerate() {
            for i in 1..m {
                if flips[var(k, i)] {
                    *flag = flag.negate_decoration(i);
                }
            }
        }
        Ok(Configuration { m, flags })
    }

    /// Relabels vertex `v` as `v + k` (cyclically) and re-enters the positive chamber.
    pub fn cyclic_shift(&self, k: usize) -> Result<Self> {
        let n = self.n();
        let positions: Vec<usize> = (0..n).map(|j| (j + n - k % n) % n).collect();
        self.select(&positions)?.sign_normalize()
    }

    fn require_arity(&self, n: usize) -> Result<()> {
        if self.n() == n {
            Ok(())
        } else {
            Err(Error::Arity {
                expected: n,
                found: self.n(),
            })
        }
    }

    /// `r(F₁,F₂,F₃) = (F₃,F₁,F₂)`, normalized; `r³ = 1`.
    pub fn rotate(&self) -> Result<Self> {
        self.require_arity(3)?;
        self.cyclic_shift(1)
    }

    pub fn rotate_inverse(&self) -> Result<Self> {
        self.require_arity(3)?;
        self.cyclic_shift(2)
    }

    /// `d_i`: forgets flag `i` and lists the other two starting after it in
    /// cyclic order: `d₁ = (F₂,F₃)`, `d₂ = (F₃,F₁)`, `d₃ = (F₁,F₂)`.
    pub fn face(&self, i: usize) -> Result<Self> {
        self.require_arity(3)?;
        if !(1..=3).contains(&i) {
            return Err(Error::FaceIndex(i));
        }
        let first = i % 3;
        self.select(&[first, (first + 1) % 3])?.sign_normalize()
    }

    /// `(G₁, …, G_n) ↦ (G_n^⊥, …, G₁^⊥)`, normalized.
    pub fn reverse_complement(&self) -> Result<Self> {
        let conv = PerpConvention::for_dim(self.m)?;
        let flags = self
            .flags
            .iter()
            .rev()
            .map(|f| conv.apply(f))
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(flags)?.sign_normalize()
    }

    /// `ι(F₁,F₂) = (F₂^⊥, F₁^⊥)`.
    pub fn iota(&self) -> Result<Self> {
        self.require_arity(2)?;
        self.reverse_complement()
    }

    /// `θ(F₁,F₂,F₃) = (F₃^⊥, F₂^⊥, F₁^⊥)` on positive triangles.
    pub fn theta(&self) -> Result<Self> {
        self.require_arity(3)?;
        self.check_positive()?;
        self.reverse_complement()
    }
}

/// Incremental elimination over GF(2); free variables are set to 0.
/// On inconsistency returns the index of the first equation that conflicts
/// with the ones before it.
fn solve_gf2(nvars: usize, eqs: &[(Vec<usize>, bool)]) -> std::result::Result<Vec<bool>, usize> {
    let words = nvars.div_ceil(64) + 1;
    let rhs = nvars;
    let bit = |row: &[u64], c: usize| row[c / 64] >> (c % 64) & 1 == 1;
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    for (e, (vars, b)) in eqs.iter().enumerate() {
        let mut row = vec![0u64; words];
        for &v in vars {
            row[v / 64] ^= 1 << (v % 64);
        }
        if *b {
            row[rhs / 64] ^= 1 << (rhs % 64);
        }
        for (p, brow) in &basis {
            if bit(&row, *p) {
                for (a, b) in row.iter_mut().zip(brow) {
                    *a ^= b;
                }
            }
        }
        match (0..nvars).find(|&c| bit(&row, c)) {
            Some(p) => basis.push((p, row)),
            None if bit(&row, rhs) => return Err(e),
            None => {}
        }
    }
    let mut x = vec![false; nvars];
    for (p, row) in basis.iter().rev() {
        let mut v = bit(row, rhs);
        for c in (0..nvars).filter(|&c| c != *p && bit(row, c)) {
            v ^= x[c];
        }
        x[*p] = v;
    }
    Ok(x)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    fn idx(e: &[usize]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    /// Four decorated flags in ℝ² whose first rows are (1,0), (0,1), (−1,1), (−2,1).
    pub(crate) fn square_m2() -> Configuration {
        Configuration::from_i64(&[
            &[&[1, 0], &[0, 1]],
            &[&[0, 1], &[-1, 0]],
            &[&[-1, 1], &[-1, 0]],
            &[&[-2, 1], &[-1, 0]],
        ])
        .unwrap()
    }

    #[test]
    fn admissible_enumeration() {
        assert_eq!(
            MultiIndex::all(3, 2),
            vec![idx(&[0, 1, 1]), idx(&[1, 0, 1]), idx(&[1, 1, 0])]
        );
        // compositions of m into n parts minus the n single-support ones
        assert_eq!(MultiIndex::all(4, 3).len(), 20 - 4);
        assert!(!idx(&[2, 0]).is_admissible(2, 2));
        assert!(idx(&[1, 1]).is_admissible(2, 2));
        assert!(!idx(&[1, 1, 1]).is_admissible(3, 2));
    }

    #[test]
    fn multi_index_text() {
        let i: MultiIndex = "0,1,0,1".parse().unwrap();
        assert_eq!(i, idx(&[0, 1, 0, 1]));
        assert_eq!(i.to_string(), "0,1,0,1");
        assert!("0,x".parse::<MultiIndex>().is_err());
    }

    #[test]
    fn canonicalize_coset_moves() {
        let id = DecoratedFlag::standard(2);
        assert_eq!(id.canonicalize().unwrap(), id);
        let moved = DecoratedFlag::new(Mat::from_i64(&[&[1, 0], &[5, 1]])).unwrap();
        assert_eq!(moved.canonicalize().unwrap(), id);
        let not_unimodular = DecoratedFlag::with_decorations(Mat::from_i64(&[&[2, 0], &[0, 1]])).unwrap();
        assert!(matches!(
            not_unimodular.canonicalize(),
            Err(Error::NotUnimodular { .. })
        ));
        assert!(matches!(
            DecoratedFlag::new(Mat::from_i64(&[&[1, 2], &[2, 4]])),
            Err(Error::SingularFlag)
        ));
    }

    #[test]
    fn delta_small_examples() {
        let c = Configuration::from_i64(&[&[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, 0]]]).unwrap();
        assert_eq!(c.delta(&idx(&[1, 1])).unwrap(), s(1));

        let c = Configuration::from_i64(&[
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
            &[&[0, 0, 1], &[0, -1, 0], &[1, 0, 0]],
        ])
        .unwrap();
        assert_eq!(c.delta(&idx(&[2, 1])).unwrap(), s(1));
    }

    #[test]
    fn delta_square_oracle() {
        let c = square_m2();
        let expect = [
            ([1, 1, 0, 0], 1),
            ([0, 1, 1, 0], 1),
            ([1, 0, 1, 0], 1),
            ([0, 1, 0, 1], 2),
            ([1, 0, 0, 1], 1),
            ([0, 0, 1, 1], 1),
        ];
        for (e, v) in expect {
            assert_eq!(c.delta(&idx(&e)).unwrap(), s(v), "{e:?}");
        }
        assert!(c.is_positive());
        assert!(matches!(
            c.delta(&idx(&[2, 0, 0, 0])),
            Err(Error::InadmissibleIndex { .. })
        ));
    }

    #[test]
    fn repeated_flag_is_not_positive() {
        let c = Configuration::from_i64(&[
            &[&[1, 0], &[0, 1]],
            &[&[1, 0], &[0, 1]],
            &[&[0, 1], &[-1, 0]],
        ])
        .unwrap();
        assert!(!c.is_positive());
        assert!(!c.is_regular());
        assert!(matches!(c.check_positive(), Err(Error::Degenerate { .. })));
        assert!(matches!(c.sign_normalize(), Err(Error::Degenerate { .. })));
    }

    #[test]
    fn sign_normalize_single_flip() {
        let c = Configuration::from_i64(&[&[&[1, 0], &[0, 1]], &[&[0, -1], &[1, 0]]]).unwrap();
        assert_eq!(c.delta(&idx(&[1, 1])).unwrap(), s(-1));
        let fixed = c.sign_normalize().unwrap();
        assert_eq!(fixed.delta(&idx(&[1, 1])).unwrap(), s(1));
        let positive = square_m2();
        assert_eq!(positive.sign_normalize().unwrap(), positive);
    }

    #[test]
    fn sign_normalize_parity_obstruction() {
        // Three vectors where every pairwise determinant is negative cannot be
        // fixed by flipping individual decorations in ℝ².
        let c = Configuration::from_i64(&[
            &[&[-2, 1], &[-1, 0]],
            &[&[-1, 1], &[-1, 0]],
            &[&[1, 0], &[0, 1]],
        ])
        .unwrap();
        assert!(matches!(
            c.sign_normalize(),
            Err(Error::SignNormalization { .. })
        ));
    }

    #[test]
    fn faces_and_rotation_on_square_triangle() {
        let tri = square_m2().select(&[0, 1, 2]).unwrap();
        assert_eq!(tri.rotate().unwrap().rotate().unwrap().rotate().unwrap().deltas(), tri.deltas());
        assert!(matches!(tri.face(0), Err(Error::FaceIndex(0))));
        assert!(matches!(tri.face(4), Err(Error::FaceIndex(4))));
        assert!(matches!(square_m2().face(1), Err(Error::Arity { .. })));
        assert!(matches!(tri.iota(), Err(Error::Arity { .. })));
        for i in 1..=3 {
            assert!(tri.face(i).unwrap().is_positive());
        }
    }

    #[test]
    fn arity_and_dimension_checks() {
        assert!(matches!(
            Configuration::new(vec![DecoratedFlag::standard(2)]),
            Err(Error::Arity { .. })
        ));
        assert!(matches!(
            Configuration::new(vec![DecoratedFlag::standard(2), DecoratedFlag::standard(3)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let c = square_m2();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(
            text,
            r#"{"m":2,"n":4,"flags":[[["1","0"],["0","1"]],[["0","1"],["-1","0"]],[["-1","1"],["-1","0"]],[["-2","1"],["-1","0"]]]}"#
        );
        let back: Configuration = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Configuration>(r#"{"m":2,"n":3,"flags":[[["1","0"],["0","1"]]]}"#).is_err());
    }
}
