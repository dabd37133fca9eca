//! The chart isomorphism in both directions and random positive sampling.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Mat, Scalar};
use crate::error::{Error, Result};
use crate::flag::{Configuration, DecoratedFlag, MultiIndex};
use crate::polygon::{chart_indices, ChartPoint, Triangulation};

/// Default bound on numerators and denominators of random chart values.
pub const DEFAULT_BOUND: u32 = 20;

/// Reads the chart of `t` off `c`; every chart Δ must be positive.
pub fn flags_to_charts(c: &Configuration, t: &Triangulation) -> Result<ChartPoint> {
    if c.n() != t.n() {
        return Err(Error::Arity {
            expected: t.n(),
            found: c.n(),
        });
    }
    let values = chart_indices(t, c.m())
        .into_iter()
        .map(|idx| {
            let v = c.delta(&idx)?;
            if v.is_zero() {
                return Err(Error::Degenerate { index: idx });
            }
            if v.is_negative() {
                return Err(Error::NotPositive { index: idx, value: v });
            }
            Ok((idx, v))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    ChartPoint::new(t.clone(), c.m(), values)
}

/// Gauge-fixed flags with the given chart values.
///
/// Flag 1 is the standard flag and flag 2 is anti-diagonal, pinned by the
/// values on edge `(1, 2)`. Every other flag is solved triangle by triangle
/// along the dual tree: row `t` of the new flag satisfies the `m − t + 1`
/// chart equations with weight `t` at the new vertex, and is taken
/// orthogonal to the rows before it (the last row is pinned by `det = 1`).
pub fn charts_to_flags(p: &ChartPoint) -> Result<Configuration> {
    let (n, m) = (p.n(), p.m());
    let t = p.triangulation();
    let mut flags: Vec<Option<DecoratedFlag>> = vec![None; n];
    flags[0] = Some(DecoratedFlag::standard(m));
    flags[1] = Some(second_flag(p)?);

    let mut pending: Vec<[usize; 3]> = t.triangles().to_vec();
    while !pending.is_empty() {
        let pos = pending
            .iter()
            .position(|tri| tri.iter().filter(|&&v| flags[v - 1].is_some()).count() >= 2)
            .ok_or_else(|| Error::Internal("dual tree walk stalled".into()))?;
        let tri = pending.remove(pos);
        let Some(&v) = tri.iter().find(|&&v| flags[v - 1].is_none()) else {
            continue;
        };
        let known: Vec<usize> = tri.iter().copied().filter(|&u| u != v).collect();
        let f = solve_flag(p, &flags, known[0], known[1], v)?;
        flags[v - 1] = Some(f);
    }
    Configuration::new(flags.into_iter().map(|f| f.expect("all vertices solved")).collect())
}

fn second_flag(p: &ChartPoint) -> Result<DecoratedFlag> {
    let (n, m) = (p.n(), p.m());
    let mut prefix = Vec::with_capacity(m + 1);
    prefix.push(Scalar::one());
    for k in 1..m {
        let idx = MultiIndex::from_weights(n, &[(0, m - k), (1, k)]);
        let v = p
            .value(&idx)
            .ok_or_else(|| Error::InvalidChart(format!("missing edge value {idx}")))?;
        prefix.push(if (k * (k - 1) / 2) % 2 == 0 { v.clone() } else { -v });
    }
    prefix.push(if (m * (m - 1) / 2) % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    });
    let mut rep = Mat::zeros(m, m);
    for k in 1..=m {
        rep[(k - 1, m - k)] = &prefix[k] / &prefix[k - 1];
    }
    DecoratedFlag::new(rep)
}

/// Rows of the unknown flag at `v` from the chart values of triangle `(a, b, v)`.
fn solve_flag(
    p: &ChartPoint,
    flags: &[Option<DecoratedFlag>],
    a: usize,
    b: usize,
    v: usize,
) -> Result<DecoratedFlag> {
    let (n, m) = (p.n(), p.m());
    let fa = flags[a - 1].as_ref().expect("known");
    let fb = flags[b - 1].as_ref().expect("known");
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(m);
    for t in 1..=m {
        let mut lhs: Vec<Vec<Scalar>> = Vec::with_capacity(m);
        let mut rhs: Vec<Scalar> = Vec::with_capacity(m);
        let equations: Vec<(usize, Scalar)> = if t < m {
            (0..=m - t)
                .map(|i| {
                    let idx = MultiIndex::from_weights(n, &[(a - 1, i), (b - 1, m - t - i), (v - 1, t)]);
                    let val = p
                        .value(&idx)
                        .ok_or_else(|| Error::InvalidChart(format!("missing chart value {idx}")))?;
                    Ok((i, val.clone()))
                })
                .collect::<Result<_>>()?
        } else {
            vec![(0, Scalar::one())]
        };
        for (i, val) in equations {
            let blocks = [(a, fa.rep().row_vecs(), i), (b, fb.rep().row_vecs(), m - t - i)];
            lhs.push(linear_functional(&blocks, v, &rows, m)?);
            rhs.push(val);
        }
        for prev in &rows {
            lhs.push(prev.clone());
            rhs.push(Scalar::zero());
        }
        let row = Mat::from_rows(lhs)?.solve(&rhs)?;
        rows.push(row);
    }
    DecoratedFlag::new(Mat::from_rows(rows)?)
}

/// Coefficients of `x ↦ det(stack)` where the stack is, in label order, the
/// first `w` rows of each known block together with the rows `prev` and `x`
/// of the flag at `v`.
fn linear_functional(
    blocks: &[(usize, Vec<Vec<Scalar>>, usize); 2],
    v: usize,
    prev: &[Vec<Scalar>],
    m: usize,
) -> Result<Vec<Scalar>> {
    let mut order: Vec<usize> = vec![blocks[0].0, blocks[1].0, v];
    order.sort_unstable();
    (0..m)
        .map(|s| {
            let mut unit = vec![Scalar::zero(); m];
            unit[s] = Scalar::one();
            let mut stack = Vec::with_capacity(m);
            for &label in &order {
                if label == v {
                    stack.extend(prev.iter().cloned());
                    stack.push(unit.clone());
                } else {
                    let (_, rows, w) = blocks.iter().find(|blk| blk.0 == label).expect("block");
                    stack.extend(rows[..*w].iter().cloned());
                }
            }
            Mat::from_rows(stack)?.det()
        })
        .collect()
}

/// Chart values drawn uniformly as `a/b` with `1 ≤ a, b ≤ bound`.
pub fn random_chart(t: &Triangulation, m: usize, rng: &mut impl Rng, bound: u32) -> Result<ChartPoint> {
    let bound = bound.max(1) as i64;
    let values = chart_indices(t, m)
        .into_iter()
        .map(|idx| {
            let num = rng.gen_range(1..=bound);
            let den = rng.gen_range(1..=bound);
            (idx, Scalar::new(num, den))
        })
        .collect();
    ChartPoint::new(t.clone(), m, values)
}

/// A random point of the positive part, sampled through the fan chart at vertex 1.
pub fn random_positive(n: usize, m: usize, seed: u64, bound: u32) -> Result<Configuration> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = Triangulation::fan(n, 1)?;
    charts_to_flags(&random_chart(&t, m, &mut rng, bound)?)
}

/// A triangulation reached from the fan at 1 by `3n` uniformly chosen flips.
pub fn random_triangulation(n: usize, rng: &mut impl Rng) -> Result<Triangulation> {
    let mut t = Triangulation::fan(n, 1)?;
    if n < 4 {
        return Ok(t);
    }
    for _ in 0..3 * n {
        let diagonals: Vec<_> = t.diagonals().collect();
        let (a, b) = diagonals[rng.gen_range(0..diagonals.len())];
        t = t.flip(a, b)?;
    }
    Ok(t)
}

/// Independent per-trial seed derived from a master seed (SplitMix64 finalizer).
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    let mut z = seed.wrapping_add(trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
