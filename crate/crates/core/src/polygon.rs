//! Triangulations of the labeled n-gon, flips, chart index sets, chart
//! points and the fiber-product gluing of triangle data along shared edges.
//!
//! Vertices are labeled `1..=n` counterclockwise. A multi-index entry at
//! position `k` (0-based) belongs to vertex `k + 1`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::flag::{Configuration, MultiIndex};

/// A diagonal or side `(a, b)` with `a < b`.
pub type Edge = (usize, usize);

/// `v + k` in cyclic label arithmetic on `1..=n`.
pub fn cyclic_add(n: usize, v: usize, k: isize) -> usize {
    let n = n as isize;
    ((v as isize - 1 + k).rem_euclid(n) + 1) as usize
}

fn ordered(a: usize, b: usize) -> Edge {
    (a.min(b), a.max(b))
}

fn is_side(n: usize, (a, b): Edge) -> bool {
    b - a == 1 || (a == 1 && b == n)
}

fn crosses((a, b): Edge, (c, d): Edge) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TriangulationJson", into = "TriangulationJson")]
pub struct Triangulation {
    n: usize,
    diagonals: BTreeSet<Edge>,
    triangles: Vec<[usize; 3]>,
}

#[derive(Serialize, Deserialize)]
struct TriangulationJson {
    n: usize,
    diagonals: Vec<[usize; 2]>,
}

impl TryFrom<TriangulationJson> for Triangulation {
    type Error = Error;
    fn try_from(j: TriangulationJson) -> Result<Self> {
        Triangulation::new(j.n, j.diagonals.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Triangulation> for TriangulationJson {
    fn from(t: Triangulation) -> Self {
        TriangulationJson {
            n: t.n,
            diagonals: t.diagonals.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl Triangulation {
    pub fn new(n: usize, diagonals: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTriangulation(msg));
        if n < 3 {
            return bad(format!("need at least 3 vertices, got {n}"));
        }
        let mut set = BTreeSet::new();
        for (a, b) in diagonals {
            let d = ordered(a, b);
            if d.0 == d.1 || d.0 < 1 || d.1 > n {
                return bad(format!("({a}, {b}) is not a pair of distinct vertices of the {n}-gon"));
            }
            if is_side(n, d) {
                return bad(format!("({a}, {b}) is a side, not a diagonal"));
            }
            if !set.insert(d) {
                return bad(format!("diagonal ({a}, {b}) listed twice"));
            }
        }
        if set.len() != n - 3 {
            return bad(format!("expected {} diagonals, got {}", n - 3, set.len()));
        }
        for &d in &set {
            if let Some(&e) = set.iter().find(|&&e| crosses(d, e)) {
                return bad(format!("diagonals {d:?} and {e:?} cross"));
            }
        }
        let mut t = Triangulation {
            n,
            diagonals: set,
            triangles: Vec::new(),
        };
        t.triangles = t.compute_triangles();
        if t.triangles.len() != n - 2 {
            return Err(Error::Internal("triangle count mismatch".into()));
        }
        Ok(t)
    }

    /// All diagonals from `apex`.
    pub fn fan(n: usize, apex: usize) -> Result<Self> {
        if apex < 1 || apex > n {
            return Err(Error::InvalidTriangulation(format!("apex {apex} out of range")));
        }
        Triangulation::new(
            n,
            (2..n - 1).map(|k| ordered(apex, cyclic_add(n, apex, k as isize))),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> impl Iterator<Item = Edge> + '_ {
        self.diagonals.iter().copied()
    }

    pub fn has_diagonal(&self, a: usize, b: usize) -> bool {
        self.diagonals.contains(&ordered(a, b))
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        let e = ordered(a, b);
        a != b && a >= 1 && e.1 <= self.n && (is_side(self.n, e) || self.diagonals.contains(&e))
    }

    /// Sides followed by diagonals.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = (1..self.n).map(|a| (a, a + 1)).collect();
        out.push((1, self.n));
        out.extend(self.diagonals.iter().copied());
        out
    }

    /// Triangles with increasing (= counterclockwise) vertex labels, sorted.
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    fn compute_triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                if !self.is_edge(a, b) {
                    continue;
                }
                for c in b + 1..=self.n {
                    if self.is_edge(a, c) && self.is_edge(b, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// The two triangles adjacent to diagonal `(a, b)`; their union is a
    /// quadrilateral with vertices returned in increasing order.
    pub fn quadrilateral(&self, a: usize, b: usize) -> Result<[usize; 4]> {
        let d = ordered(a, b);
        if !self.diagonals.contains(&d) {
            return Err(Error::NotADiagonal(a, b));
        }
        let apexes: Vec<usize> = self
            .triangles
            .iter()
            .filter(|t| t.contains(&d.0) && t.contains(&d.1))
            .map(|t| *t.iter().find(|&&v| v != d.0 && v != d.1).expect("triangle"))
            .collect();
        if apexes.len() != 2 {
            return Err(Error::Internal(format!("diagonal {d:?} not shared by two triangles")));
        }
        let mut q = [d.0, d.1, apexes[0], apexes[1]];
        q.sort_unstable();
        Ok(q)
    }

    /// The diagonal that replaces `(a, b)` under a flip.
    pub fn opposite_diagonal(&self, a: usize, b: usize) -> Result<Edge> {
        let q = self.quadrilateral(a, b)?;
        let d = ordered(a, b);
        Ok(if d == (q[0], q[2]) { (q[1], q[3]) } else { (q[0], q[2]) })
    }

    pub fn flip(&self, a: usize, b: usize) -> Result<Triangulation> {
        let e = self.opposite_diagonal(a, b)?;
        let mut diagonals = self.diagonals.clone();
        diagonals.remove(&ordered(a, b));
        diagonals.insert(e);
        Triangulation::new(self.n, diagonals)
    }

    /// Relabels vertex `v` as `v + k`.
    pub fn rotated(&self, k: isize) -> Triangulation {
        Triangulation::new(
            self.n,
            self.diagonals
                .iter()
                .map(|&(a, b)| ordered(cyclic_add(self.n, a, k), cyclic_add(self.n, b, k))),
        )
        .expect("rotation preserves triangulations")
    }

    /// Flips `(flipped, created)` that carry `self` to the fan at vertex 1.
    fn path_to_fan(&self) -> Vec<(Edge, Edge)> {
        let mut t = self.clone();
        let mut steps = Vec::new();
        while let Some(&[_, x, y]) = t
            .triangles
            .iter()
            .find(|tri| tri[0] == 1 && t.diagonals.contains(&(tri[1], tri[2])))
        {
            let created = t.opposite_diagonal(x, y).expect("diagonal");
            t = t.flip(x, y).expect("diagonal");
            steps.push(((x, y), created));
        }
        steps
    }
}

/// Diagonals to flip, in order, to turn `from` into `to` (routed through the fan at vertex 1).
pub fn flip_path(from: &Triangulation, to: &Triangulation) -> Result<Vec<Edge>> {
    if from.n != to.n {
        return Err(Error::DimensionMismatch {
            what: "polygon size",
            expected: from.n,
            found: to.n,
        });
    }
    if from == to {
        return Ok(Vec::new());
    }
    let mut path: Vec<Edge> = from.path_to_fan().into_iter().map(|(d, _)| d).collect();
    path.extend(to.path_to_fan().into_iter().rev().map(|(_, created)| created));
    Ok(path)
}

/// The admissible multi-indices supported on one face of `t`, in lexicographic order.
///
/// Each side or diagonal carries `m − 1` indices `(k, m−k)`, each triangle
/// `C(m−1, 2)` interior indices with all three weights positive.
pub fn chart_indices(t: &Triangulation, m: usize) -> Vec<MultiIndex> {
    let n = t.n;
    let mut out = BTreeSet::new();
    for (a, b) in t.edges() {
        for k in 1..m {
            out.insert(MultiIndex::from_weights(n, &[(a - 1, k), (b - 1, m - k)]));
        }
    }
    for &[a, b, c] in t.triangles() {
        for i in 1..m {
            for j in 1..m - i {
                out.insert(MultiIndex::from_weights(
                    n,
                    &[(a - 1, i), (b - 1, j), (c - 1, m - i - j)],
                ));
            }
        }
    }
    out.into_iter().collect()
}

/// `(n−2)·C(m+1,2) + (m+1) − n`.
pub fn chart_dimension(n: usize, m: usize) -> usize {
    (n - 2) * (m * (m + 1) / 2) + (m + 1) - n
}

/// Positive values on the chart indices of a triangulation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ChartPointJson", into = "ChartPointJson")]
pub struct ChartPoint {
    m: usize,
    triangulation: Triangulation,
    values: BTreeMap<MultiIndex, Scalar>,
}

#[derive(Serialize, Deserialize)]
struct ChartPointJson {
    m: usize,
    triangulation: Triangulation,
    values: BTreeMap<String, Scalar>,
}

impl TryFrom<ChartPointJson> for ChartPoint {
    type Error = Error;
    fn try_from(j: ChartPointJson) -> Result<Self> {
        let values = j
            .values
            .into_iter()
            .map(|(k, v)| Ok((k.parse::<MultiIndex>()?, v)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        ChartPoint::new(j.triangulation, j.m, values)
    }
}

impl From<ChartPoint> for ChartPointJson {
    fn from(p: ChartPoint) -> Self {
        ChartPointJson {
            m: p.m,
            triangulation: p.triangulation,
            values: p.values.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

impl ChartPoint {
    /// Validates that the keys are exactly the chart indices and all values are positive.
    pub fn new(
        triangulation: Triangulation,
        m: usize,
        values: BTreeMap<MultiIndex, Scalar>,
    ) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidChart(format!("m must be at least 2, got {m}")));
        }
        let expected = chart_indices(&triangulation, m);
        if values.len() != expected.len() || !expected.iter().all(|i| values.contains_key(i)) {
            let missing = expected.iter().find(|i| !values.contains_key(i));
            let extra = values.keys().find(|i| !expected.contains(i));
            return Err(Error::InvalidChart(format!(
                "key set differs from the chart indices (missing {missing:?}, unexpected {extra:?})"
            )));
        }
        if let Some((index, value)) = values.iter().find(|(_, v)| !v.is_positive()) {
            return Err(Error::NotPositive {
                index: index.clone(),
                value: value.clone(),
            });
        }
        Ok(ChartPoint {
            m,
            triangulation,
            values,
        })
    }

    /// All values equal to one.
    pub fn ones(triangulation: Triangulation, m: usize) -> Result<Self> {
        let values = chart_indices(&triangulation, m)
            .into_iter()
            .map(|i| (i, Scalar::one()))
            .collect();
        ChartPoint::new(triangulation, m, values)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.triangulation.n
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.triangulation
    }

    pub fn values(&self) -> &BTreeMap<MultiIndex, Scalar> {
        &self.values
    }

    pub fn value(&self, idx: &MultiIndex) -> Option<&Scalar> {
        self.values.get(idx)
    }

    /// Same point with one value replaced; the key must already exist.
    pub fn with_value(&self, idx: &MultiIndex, value: Scalar) -> Result<Self> {
        if !self.values.contains_key(idx) {
            return Err(Error::InvalidChart(format!("{idx} is not a chart index")));
        }
        let mut values = self.values.clone();
        values.insert(idx.clone(), value);
        ChartPoint::new(self.triangulation.clone(), self.m, values)
    }

    /// Relabels vertex `v` as `v + k`: the value at index `I` moves to the
    /// index whose entry at vertex `v + k` is `I_v`.
    pub fn rotate_labels(&self, k: isize) -> ChartPoint {
        let n = self.n();
        let values = self
            .values
            .iter()
            .map(|(idx, v)| {
                let mut e = vec![0; n];
                for (pos, &w) in idx.entries().iter().enumerate() {
                    e[cyclic_add(n, pos + 1, k) - 1] = w;
                }
                (MultiIndex::new(e), v.clone())
            })
            .collect();
        ChartPoint {
            m: self.m,
            triangulation: self.triangulation.rotated(k),
            values,
        }
    }

    /// Values on indices whose support lies in the given vertex set.
    pub fn restricted_to(&self, vertices: &[usize]) -> BTreeMap<MultiIndex, Scalar> {
        self.values
            .iter()
            .filter(|(idx, _)| idx.support().iter().all(|p| vertices.contains(&(p + 1))))
            .map(|(i, v)| (i.clone(), v.clone()))
            .collect()
    }
}

/// The A(2)-point of edge `(a, b)` (labels) read off a configuration: Δ values in label order.
fn edge_values(c: &Configuration, a: usize, b: usize) -> Result<Vec<Scalar>> {
    let pair = c.select(&[a, b])?;
    (1..c.m())
        .map(|k| pair.delta(&MultiIndex::new(vec![k, c.m() - k])))
        .collect()
}

fn check_triangle_data(triangles: &[Configuration], t: &Triangulation) -> Result<usize> {
    if triangles.len() != t.triangles().len() {
        return Err(Error::Arity {
            expected: t.triangles().len(),
            found: triangles.len(),
        });
    }
    let m = triangles[0].m();
    for c in triangles {
        if c.n() != 3 {
            return Err(Error::Arity {
                expected: 3,
                found: c.n(),
            });
        }
        if c.m() != m {
            return Err(Error::DimensionMismatch {
                what: "triangle dimension",
                expected: m,
                found: c.m(),
            });
        }
    }
    Ok(m)
}

/// Whether per-triangle configurations (one per face of `t`, flags in label
/// order) agree on every shared diagonal as points of A(2).
pub fn glue_check(triangles: &[Configuration], t: &Triangulation) -> Result<bool> {
    check_triangle_data(triangles, t)?;
    for (a, b) in t.diagonals() {
        let mut seen: Option<Vec<Scalar>> = None;
        for (tri, c) in t.triangles().iter().zip(triangles) {
            let (Some(pa), Some(pb)) = (
                tri.iter().position(|&v| v == a),
                tri.iter().position(|&v| v == b),
            ) else {
                continue;
            };
            let vals = edge_values(c, pa, pb)?;
            match &seen {
                None => seen = Some(vals),
                Some(prev) if *prev != vals => return Ok(false),
                Some(_) => {}
            }
        }
    }
    Ok(true)
}

/// Assembles glued triangle data into a chart point on `t`.
pub fn assemble(triangles: &[Configuration], t: &Triangulation) -> Result<ChartPoint> {
    let m = check_triangle_data(triangles, t)?;
    let n = t.n();
    let mut values: BTreeMap<MultiIndex, Scalar> = BTreeMap::new();
    for (tri, c) in t.triangles().iter().zip(triangles) {
        for local in MultiIndex::all(3, m) {
            let weights: Vec<(usize, usize)> = local
                .entries()
                .iter()
                .zip(tri)
                .map(|(&w, &v)| (v - 1, w))
                .collect();
            let global = MultiIndex::from_weights(n, &weights);
            let support = global.support();
            if support.len() == 2 && !t.is_edge(support[0] + 1, support[1] + 1) {
                continue;
            }
            let v = c.delta(&local)?;
            match values.get(&global) {
                Some(prev) if *prev != v => return Err(Error::GlueMismatch { index: global }),
                _ => {
                    values.insert(global, v);
                }
            }
        }
    }
    ChartPoint::new(t.clone(), m, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(e: &[usize]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    #[test]
    fn validation() {
        assert!(Triangulation::new(4, [(1, 3)]).is_ok());
        assert!(Triangulation::new(4, [(1, 2)]).is_err());
        assert!(Triangulation::new(4, [(1, 4)]).is_err());
        assert!(Triangulation::new(5, [(1, 3), (2, 4)]).is_err());
        assert!(Triangulation::new(5, [(1, 3)]).is_err());
        assert!(Triangulation::new(5, [(1, 3), (3, 1)]).is_err());
        assert!(Triangulation::new(2, []).is_err());
        assert!(Triangulation::new(3, []).is_ok());
    }

    #[test]
    fn triangles_of_fan() {
        let t = Triangulation::fan(6, 1).unwrap();
        assert_eq!(t.triangles(), &[[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6]]);
        let t = Triangulation::fan(5, 3).unwrap();
        assert_eq!(t.diagonals().collect::<Vec<_>>(), vec![(1, 3), (3, 5)]);
    }

    #[test]
    fn chart_indices_small() {
        let tri = Triangulation::new(3, []).unwrap();
        assert_eq!(
            chart_indices(&tri, 2),
            vec![idx(&[0, 1, 1]), idx(&[1, 0, 1]), idx(&[1, 1, 0])]
        );
        let sq = Triangulation::new(4, [(1, 3)]).unwrap();
        let ci = chart_indices(&sq, 2);
        assert_eq!(ci.len(), 5);
        assert!(ci.contains(&idx(&[1, 0, 1, 0])));
        assert!(!ci.contains(&idx(&[0, 1, 0, 1])));
    }

    #[test]
    fn flip_square() {
        let t = Triangulation::new(4, [(1, 3)]).unwrap();
        let u = t.flip(1, 3).unwrap();
        assert_eq!(u.diagonals().collect::<Vec<_>>(), vec![(2, 4)]);
        assert_eq!(u.flip(2, 4).unwrap(), t);
        assert_eq!(t.flip(2, 4), Err(Error::NotADiagonal(2, 4)));
    }

    #[test]
    fn flip_path_small() {
        let t = Triangulation::fan(4, 1).unwrap();
        assert!(flip_path(&t, &t).unwrap().is_empty());
        let u = Triangulation::fan(4, 2).unwrap();
        assert_eq!(flip_path(&t, &u).unwrap(), vec![(1, 3)]);
    }

    #[test]
    fn rotate_labels_moves_indices() {
        let t = Triangulation::new(4, [(1, 3)]).unwrap();
        let p = ChartPoint::ones(t, 2)
            .unwrap()
            .with_value(&idx(&[1, 1, 0, 0]), Scalar::from(5))
            .unwrap();
        let q = p.rotate_labels(1);
        assert_eq!(q.triangulation().diagonals().collect::<Vec<_>>(), vec![(2, 4)]);
        assert_eq!(q.value(&idx(&[0, 1, 1, 0])), Some(&Scalar::from(5)));
        assert_eq!(q.rotate_labels(-1), p);
    }

    #[test]
    fn chart_point_validation() {
        let t = Triangulation::new(3, []).unwrap();
        let mut values: BTreeMap<_, _> = chart_indices(&t, 2)
            .into_iter()
            .map(|i| (i, Scalar::one()))
            .collect();
        assert!(ChartPoint::new(t.clone(), 2, values.clone()).is_ok());
        values.insert(idx(&[1, 1, 0]), Scalar::zero());
        assert!(matches!(
            ChartPoint::new(t.clone(), 2, values.clone()),
            Err(Error::NotPositive { .. })
        ));
        values.remove(&idx(&[1, 1, 0]));
        assert!(matches!(
            ChartPoint::new(t, 2, values),
            Err(Error::InvalidChart(_))
        ));
    }

    #[test]
    fn chart_point_json() {
        let t = Triangulation::new(4, [(1, 3)]).unwrap();
        let p = ChartPoint::ones(t, 2)
            .unwrap()
            .with_value(&idx(&[1, 0, 1, 0]), Scalar::new(3, 7))
            .unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert!(text.contains(r#""1,0,1,0":"3/7""#), "{text}");
        assert!(text.contains(r#""triangulation":{"n":4,"diagonals":[[1,3]]}"#));
        let back: ChartPoint = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn cyclic_arithmetic() {
        assert_eq!(cyclic_add(5, 5, 1), 1);
        assert_eq!(cyclic_add(5, 1, -1), 5);
        assert_eq!(cyclic_add(5, 3, 7), 5);
    }
}
