//! Exchange relations and the flip transport of chart coordinates.
//!
//! For four vertices `p₁..p₄` in cyclic order with weights `(i, j, k, ℓ)`
//! (and arbitrary fixed weights elsewhere):
//!
//! ```text
//! Δ(i,j,k,ℓ)·Δ(i+1,j−1,k+1,ℓ−1) = Δ(i+1,j,k,ℓ−1)·Δ(i,j−1,k+1,ℓ) + Δ(i,j,k+1,ℓ−1)·Δ(i+1,j−1,k,ℓ)
//! ```

use std::collections::HashMap;

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::flag::MultiIndex;
use crate::polygon::{flip_path, ChartPoint, Edge, Triangulation};

/// One instance of the exchange relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadIndex {
    positions: [usize; 4],
    weights: [usize; 4],
    background: Vec<usize>,
}

impl QuadIndex {
    /// `positions` are 1-based labels in cyclic order, `background` a full
    /// weight vector (length n) that vanishes on `positions`.
    pub fn new(positions: [usize; 4], weights: [usize; 4], background: Vec<usize>) -> Result<Self> {
        let n = background.len();
        let invalid = |msg: &str| Err(Error::InvalidChart(format!("quad index {positions:?}/{weights:?}: {msg}")));
        if positions.iter().any(|&p| p < 1 || p > n) {
            return invalid("position out of range");
        }
        if !is_cyclically_ordered(&positions) {
            return invalid("positions are not distinct and in cyclic order");
        }
        if positions.iter().any(|&p| background[p - 1] != 0) {
            return invalid("background weight on a quadrilateral vertex");
        }
        if weights[1] == 0 || weights[3] == 0 {
            return invalid("j and ℓ must be positive");
        }
        let q = QuadIndex {
            positions,
            weights,
            background,
        };
        let m = q.target().weight();
        if !q.target().is_admissible(n, m) || q.siblings().iter().any(|s| !s.is_admissible(n, m)) {
            return invalid("inadmissible sibling");
        }
        Ok(q)
    }

    /// Instance without background weights.
    pub fn in_quad(n: usize, positions: [usize; 4], weights: [usize; 4]) -> Result<Self> {
        QuadIndex::new(positions, weights, vec![0; n])
    }

    pub fn positions(&self) -> [usize; 4] {
        self.positions
    }

    pub fn weights(&self) -> [usize; 4] {
        self.weights
    }

    fn index(&self, w: [usize; 4]) -> MultiIndex {
        let mut e = self.background.clone();
        for (p, x) in self.positions.iter().zip(w) {
            e[p - 1] = x;
        }
        MultiIndex::new(e)
    }

    pub fn target(&self) -> MultiIndex {
        self.index(self.weights)
    }

    /// `[A, B, C, D, E]` with `target = (A·B + C·D) / E`.
    pub fn siblings(&self) -> [MultiIndex; 5] {
        sibling_weights(self.weights).map(|w| self.index(w))
    }
}

fn sibling_weights([i, j, k, l]: [usize; 4]) -> [[usize; 4]; 5] {
    [
        [i + 1, j, k, l - 1],
        [i, j - 1, k + 1, l],
        [i, j, k + 1, l - 1],
        [i + 1, j - 1, k, l],
        [i + 1, j - 1, k + 1, l - 1],
    ]
}

fn is_cyclically_ordered(p: &[usize; 4]) -> bool {
    let start = (0..4).min_by_key(|&s| p[s]).expect("nonempty");
    (1..4).all(|s| p[(start + s - 1) % 4] < p[(start + s) % 4])
}

/// `(a·b + c·d) / e`.
pub fn exchange(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar, e: &Scalar) -> Result<Scalar> {
    if e.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok((a * b + c * d) / e)
}

/// Every applicable exchange instance for `(n, m)`: all cyclically ordered
/// quadruples (each rotation separately), all weights with `j, ℓ ≥ 1`, and
/// all background weight vectors on the remaining vertices.
pub fn exchange_instances(n: usize, m: usize) -> Vec<QuadIndex> {
    let mut out = Vec::new();
    if n < 4 {
        return out;
    }
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    let sorted = [a, b, c, d];
                    for rot in 0..4 {
                        let positions = [0, 1, 2, 3].map(|s| sorted[(s + rot) % 4]);
                        push_instances(n, m, positions, &mut out);
                    }
                }
            }
        }
    }
    out
}

fn push_instances(n: usize, m: usize, positions: [usize; 4], out: &mut Vec<QuadIndex>) {
    let rest: Vec<usize> = (1..=n).filter(|v| !positions.contains(v)).collect();
    for bg_weight in 0..=m.saturating_sub(2) {
        for background in compositions(bg_weight, rest.len()) {
            let mut full = vec![0; n];
            for (v, w) in rest.iter().zip(&background) {
                full[v - 1] = *w;
            }
            for weights in compositions(m - bg_weight, 4) {
                let w = [weights[0], weights[1], weights[2], weights[3]];
                if w[1] == 0 || w[3] == 0 {
                    continue;
                }
                if let Ok(q) = QuadIndex::new(positions, w, full.clone()) {
                    out.push(q);
                }
            }
        }
    }
}

/// Weak compositions of `total` into `parts` parts, lexicographic.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut tail in compositions(total - first, parts - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// The chart point of `p.triangulation()` flipped at `d`, for the same underlying point.
pub fn flip_transport(p: &ChartPoint, d: Edge) -> Result<ChartPoint> {
    let t = p.triangulation();
    let (a, b) = d;
    let quad = t.quadrilateral(a, b)?;
    let flipped = t.flip(a, b)?;
    let old = (a.min(b), a.max(b));
    // old diagonal joins p₁ and p₃; the new one joins p₂ and p₄
    let positions = if old == (quad[0], quad[2]) {
        quad
    } else {
        [quad[1], quad[2], quad[3], quad[0]]
    };
    let n = p.n();
    let m = p.m();
    let index = |w: [usize; 4]| {
        let mut e = vec![0; n];
        for (p, x) in positions.iter().zip(w) {
            e[p - 1] = x;
        }
        MultiIndex::new(e)
    };

    let mut table: HashMap<[usize; 4], Scalar> = HashMap::new();
    let mut targets = Vec::new();
    for w in compositions(m, 4) {
        let w = [w[0], w[1], w[2], w[3]];
        if w.iter().filter(|&&x| x > 0).count() < 2 {
            continue;
        }
        if w[1] == 0 || w[3] == 0 {
            let v = p.value(&index(w)).ok_or_else(|| {
                Error::Internal(format!("old chart lacks {}", index(w)))
            })?;
            table.insert(w, v.clone());
        } else {
            targets.push(w);
        }
    }
    targets.sort_by_key(|w| (w[1] + w[3], *w));
    for w in targets {
        let [sa, sb, sc, sd, se] = sibling_weights(w).map(|s| &table[&s]);
        let v = exchange(sa, sb, sc, sd, se).map_err(|_| {
            Error::Internal(format!("vanishing denominator while flipping at {}", index(w)))
        })?;
        table.insert(w, v);
    }

    let mut values = std::collections::BTreeMap::new();
    for idx in crate::polygon::chart_indices(&flipped, m) {
        let v = match p.value(&idx) {
            Some(v) => v.clone(),
            None => {
                let e = idx.entries();
                let w = positions.map(|q| e[q - 1]);
                table.get(&w).cloned().ok_or_else(|| {
                    Error::Internal(format!("new chart index {idx} outside the flipped quadrilateral"))
                })?
            }
        };
        values.insert(idx, v);
    }
    ChartPoint::new(flipped, m, values)
}

/// Composes flips along [`flip_path`] to reach `target`.
pub fn transport(p: &ChartPoint, target: &Triangulation) -> Result<ChartPoint> {
    let mut cur = p.clone();
    for d in flip_path(p.triangulation(), target)? {
        cur = flip_transport(&cur, d)?;
    }
    Ok(cur)
}

/// Composes flips along an explicit sequence of diagonals.
pub fn transport_along(p: &ChartPoint, path: &[Edge]) -> Result<ChartPoint> {
    path.iter().try_fold(p.clone(), |cur, &d| flip_transport(&cur, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    #[test]
    fn exchange_all_ones() {
        assert_eq!(exchange(&s(1), &s(1), &s(1), &s(1), &s(1)), Ok(s(2)));
        assert_eq!(exchange(&s(2), &s(3), &s(1), &s(5), &s(4)), Ok(Scalar::new(11, 4)));
        assert_eq!(exchange(&s(1), &s(1), &s(1), &s(1), &s(0)), Err(Error::ZeroDenominator));
    }

    #[test]
    fn square_flip_all_ones() {
        let t = Triangulation::new(4, [(1, 3)]).unwrap();
        let p = ChartPoint::ones(t, 2).unwrap();
        let q = flip_transport(&p, (1, 3)).unwrap();
        assert_eq!(q.value(&MultiIndex::new(vec![0, 1, 0, 1])), Some(&s(2)));
        for side in [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]] {
            assert_eq!(q.value(&MultiIndex::new(side.to_vec())), Some(&s(1)));
        }
        assert_eq!(flip_transport(&q, (2, 4)).unwrap(), p);
    }

    #[test]
    fn ptolemy_instance_siblings() {
        let q = QuadIndex::in_quad(4, [1, 2, 3, 4], [0, 1, 0, 1]).unwrap();
        let names: Vec<String> = q.siblings().iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["1,1,0,0", "0,0,1,1", "0,1,1,0", "1,0,0,1", "1,0,1,0"]);
    }

    #[test]
    fn rejects_bad_instances() {
        assert!(QuadIndex::in_quad(4, [1, 3, 2, 4], [0, 1, 0, 1]).is_err());
        assert!(QuadIndex::in_quad(4, [1, 2, 3, 4], [1, 0, 0, 1]).is_err());
        assert!(QuadIndex::in_quad(4, [3, 4, 1, 2], [0, 1, 0, 1]).is_ok());
        assert!(QuadIndex::new([1, 2, 3, 4], [0, 1, 0, 1], vec![0, 0, 0, 0, 1]).is_ok());
        assert!(QuadIndex::new([1, 2, 3, 4], [0, 1, 0, 1], vec![1, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn instance_counts() {
        // m = 2: only (0,1,0,1), once per rotation of each 4-subset
        assert_eq!(exchange_instances(4, 2).len(), 4);
        assert_eq!(exchange_instances(6, 2).len(), 15 * 4);
        assert!(exchange_instances(3, 3).is_empty());
    }

    #[test]
    fn compositions_enumerate() {
        assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(3, 4).len(), 20);
    }
}
