//! Oracles shared by the integration tests. Nothing here calls the library's
//! determinant or solver.

#![allow(dead_code, clippy::needless_range_loop)]

use cactus_flags::{Configuration, MultiIndex, Scalar};

/// Determinant by permutation expansion.
pub fn leibniz_det(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Scalar::zero();
    permute(&mut perm, 0, &mut |p| {
        let mut term = Scalar::one();
        for (i, &j) in p.iter().enumerate() {
            term *= &rows[i][j];
            if term.is_zero() {
                return;
            }
        }
        if parity(p) {
            total = &total - &term;
        } else {
            total = &total + &term;
        }
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// True for odd permutations.
fn parity(p: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// Δ computed from raw rows by permutation expansion.
pub fn oracle_delta(c: &Configuration, idx: &MultiIndex) -> Scalar {
    let mut rows = Vec::new();
    for (k, &w) in idx.entries().iter().enumerate() {
        for r in 0..w {
            rows.push(c.flag(k).row(r).to_vec());
        }
    }
    leibniz_det(&rows)
}

/// Some exact solution of a possibly rectangular system, or `None` if inconsistent.
/// Free variables are set to zero.
pub fn solve_exact(mut a: Vec<Vec<Scalar>>, mut b: Vec<Scalar>) -> Option<Vec<Scalar>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].recip();
        for j in 0..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        b[r] = &b[r] * &inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    a[i][j] = &a[i][j] - &(&f * &a[r][j]);
                }
                b[i] = &b[i] - &(&f * &b[r]);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![Scalar::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Some(x)
}

pub fn s(v: i64) -> Scalar {
    Scalar::from(v)
}

pub fn idx(e: &[usize]) -> MultiIndex {
    MultiIndex::new(e.to_vec())
}

/// The four-flag configuration with Δ₁₁₀₀ = Δ₀₁₁₀ = Δ₀₀₁₁ = Δ₁₀₀₁ = Δ₁₀₁₀ = 1 and Δ₀₁₀₁ = 2.
pub fn square_m2() -> Configuration {
    Configuration::from_i64(&[
        &[&[1, 0], &[0, 1]],
        &[&[0, 1], &[-1, 0]],
        &[&[-1, 1], &[-1, 0]],
        &[&[-2, 1], &[-1, 0]],
    ])
    .unwrap()
}
