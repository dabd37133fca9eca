//! Cyclic-interval reversals, their action on positive configurations, and
//! a harness that checks the cactus relations on random points.
//!
//! A generator `s_{p,q}` acts by relabeling so that the interval starts at
//! vertex 1, replacing the chart values of the fan triangles inside the
//! interval by those of the reversed complement `(F_q^⊥, …, F_p^⊥)`, keeping
//! the values outside, rebuilding flags, and relabeling back. The two halves
//! glue along the edge `(p, q)` because `ι` fixes every positive edge.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flag::{Configuration, MultiIndex};
use crate::polygon::{chart_indices, cyclic_add, ChartPoint, Triangulation};
use crate::reconstruct::{charts_to_flags, random_chart, trial_seed, DEFAULT_BOUND};

/// The reversal of the cyclic interval `p, p+1, …, q` of the n-gon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct IntervalGen {
    pub p: usize,
    pub q: usize,
}

impl From<[usize; 2]> for IntervalGen {
    fn from([p, q]: [usize; 2]) -> Self {
        IntervalGen { p, q }
    }
}

impl From<IntervalGen> for [usize; 2] {
    fn from(g: IntervalGen) -> Self {
        [g.p, g.q]
    }
}

impl IntervalGen {
    pub fn new(p: usize, q: usize, n: usize) -> Result<Self> {
        let g = IntervalGen { p, q };
        g.check(n)?;
        Ok(g)
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.p == self.q || !(1..=n).contains(&self.p) || !(1..=n).contains(&self.q) {
            return Err(Error::InvalidInterval {
                p: self.p,
                q: self.q,
                n,
            });
        }
        Ok(())
    }

    /// Number of vertices in the interval, `2..=n`.
    pub fn len(&self, n: usize) -> usize {
        (self.q + n - self.p) % n + 1
    }

    /// The labels `p, p+1, …, q`.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        (0..self.len(n)).map(|k| cyclic_add(n, self.p, k as isize)).collect()
    }

    pub fn contains(&self, v: usize, n: usize) -> bool {
        (v + n - self.p) % n < self.len(n)
    }

    /// The label that `v` is sent to by the reversal (identity outside the interval).
    pub fn mirror(&self, v: usize, n: usize) -> usize {
        if !self.contains(v, n) {
            return v;
        }
        let offset = (v + n - self.p) % n;
        cyclic_add(n, self.p, (self.len(n) - 1 - offset) as isize)
    }

    pub fn is_disjoint(&self, other: &IntervalGen, n: usize) -> bool {
        other.labels(n).iter().all(|&v| !self.contains(v, n))
    }

    pub fn is_nested_in(&self, outer: &IntervalGen, n: usize) -> bool {
        self.labels(n).iter().all(|&v| outer.contains(v, n))
    }

    /// `s_{p+q−ℓ, p+q−k}`: the conjugate of `self` by `outer`.
    pub fn mirrored_in(&self, outer: &IntervalGen, n: usize) -> IntervalGen {
        IntervalGen {
            p: outer.mirror(self.q, n),
            q: outer.mirror(self.p, n),
        }
    }
}

/// A word in the generators, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CactusWord(pub Vec<IntervalGen>);

impl CactusWord {
    pub fn new(gens: Vec<IntervalGen>) -> Self {
        CactusWord(gens)
    }

    pub fn gens(&self) -> &[IntervalGen] {
        &self.0
    }

    pub fn check(&self, n: usize) -> Result<()> {
        self.0.iter().try_for_each(|g| g.check(n))
    }
}

/// Labels by position after applying `w` to `(1, …, n)`; entry `k` is the
/// original label now sitting at position `k + 1`.
pub fn underlying_permutation(w: &CactusWord, n: usize) -> Vec<usize> {
    let mut seq: Vec<usize> = (1..=n).collect();
    for g in w.gens() {
        let labels = g.labels(n);
        let old: Vec<usize> = labels.iter().map(|&v| seq[v - 1]).collect();
        for (&v, x) in labels.iter().zip(old.into_iter().rev()) {
            seq[v - 1] = x;
        }
    }
    seq
}

/// Applies one interval reversal to a positive configuration.
pub fn act_generator(c: &Configuration, g: IntervalGen) -> Result<Configuration> {
    let n = c.n();
    g.check(n)?;
    c.check_positive()?;
    if n < 3 {
        // the only interval is the whole edge, where the reversal is ι = id
        return Ok(c.clone());
    }
    let len = g.len(n);
    let shift = (n + 1 - g.p) % n;
    let local = c.cyclic_shift(shift)?;
    let rev = local
        .select(&(0..len).collect::<Vec<_>>())?
        .reverse_complement()?;

    let fan = Triangulation::fan(n, 1)?;
    let mut values = BTreeMap::new();
    for idx in chart_indices(&fan, c.m()) {
        let entries = idx.entries();
        let inside = entries[len..].iter().all(|&w| w == 0);
        let outside = entries[1..len - 1].iter().all(|&w| w == 0);
        let v = if inside {
            let v = rev.delta(&MultiIndex::new(entries[..len].to_vec()))?;
            if outside && v != local.delta(&idx)? {
                return Err(Error::GlueMismatch { index: idx });
            }
            v
        } else {
            local.delta(&idx)?
        };
        values.insert(idx, v);
    }
    let reversed = charts_to_flags(&ChartPoint::new(fan, c.m(), values)?)?;
    reversed.cyclic_shift(g.p - 1)
}

/// Applies the generators of `w` from left to right.
pub fn act_word(c: &Configuration, w: &CactusWord) -> Result<Configuration> {
    w.gens().iter().try_fold(c.clone(), |cur, &g| act_generator(&cur, g))
}

/// One instance of a defining relation, as a pair of words that should act equally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    /// `s² = 1`
    Involution(IntervalGen),
    /// `s t = t s` for disjoint intervals
    Commute(IntervalGen, IntervalGen),
    /// `s_{p,q} s_{k,ℓ} = s_{p+q−ℓ,p+q−k} s_{p,q}` for `[k,ℓ] ⊆ [p,q]`
    Nest { outer: IntervalGen, inner: IntervalGen },
    /// An arbitrary candidate relation `lhs = rhs`
    Words { lhs: CactusWord, rhs: CactusWord },
}

impl Relation {
    pub fn id(&self) -> &'static str {
        match self {
            Relation::Involution(_) => "R1",
            Relation::Commute(..) => "R2",
            Relation::Nest { .. } => "R3",
            Relation::Words { .. } => "custom",
        }
    }

    pub fn sides(&self, n: usize) -> (CactusWord, CactusWord) {
        match self {
            &Relation::Involution(g) => (CactusWord(vec![g, g]), CactusWord::default()),
            &Relation::Commute(g, h) => (CactusWord(vec![g, h]), CactusWord(vec![h, g])),
            &Relation::Nest { outer, inner } => (
                CactusWord(vec![outer, inner]),
                CactusWord(vec![inner.mirrored_in(&outer, n), outer]),
            ),
            Relation::Words { lhs, rhs } => (lhs.clone(), rhs.clone()),
        }
    }

    /// Whether both sides agree as points; errors count as failures.
    pub fn holds(&self, c: &Configuration) -> bool {
        let (lhs, rhs) = self.sides(c.n());
        match (act_word(c, &lhs), act_word(c, &rhs)) {
            (Ok(a), Ok(b)) => a.same_point(&b),
            _ => false,
        }
    }
}

/// Outcome of running one relation family over random points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub relation: String,
    pub trials: usize,
    pub passes: usize,
    /// Shrunk input of the first failing trial.
    pub counterexample: Option<Configuration>,
    /// The two words compared in that trial.
    pub witness: Option<(CactusWord, CactusWord)>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.passes == self.trials
    }
}

fn random_interval(n: usize, len: usize, rng: &mut impl Rng) -> IntervalGen {
    let p = rng.gen_range(1..=n);
    IntervalGen {
        p,
        q: cyclic_add(n, p, len as isize - 1),
    }
}

/// A random instance of relation `id` ("R1", "R2" or "R3"), if any exists for `n`.
pub fn random_relation(id: &str, n: usize, rng: &mut impl Rng) -> Option<Relation> {
    match id {
        "R1" if n >= 2 => {
            let len = rng.gen_range(2..=n);
            Some(Relation::Involution(random_interval(n, len, rng)))
        }
        "R2" if n >= 4 => {
            let a = rng.gen_range(2..=n - 2);
            let g = random_interval(n, a, rng);
            let b = rng.gen_range(2..=n - a);
            let start = cyclic_add(n, g.q, 1 + rng.gen_range(0..=n - a - b) as isize);
            let h = IntervalGen {
                p: start,
                q: cyclic_add(n, start, b as isize - 1),
            };
            Some(Relation::Commute(g, h))
        }
        "R3" if n >= 3 => {
            let outer_len = rng.gen_range(3..=n);
            let outer = random_interval(n, outer_len, rng);
            let inner_len = rng.gen_range(2..outer_len);
            let start = cyclic_add(n, outer.p, rng.gen_range(0..=outer_len - inner_len) as isize);
            let inner = IntervalGen {
                p: start,
                q: cyclic_add(n, start, inner_len as isize - 1),
            };
            Some(Relation::Nest { outer, inner })
        }
        _ => None,
    }
}

/// Greedily resets chart values to 1 while the relation keeps failing.
pub fn shrink(p: &ChartPoint, fails: impl Fn(&Configuration) -> bool) -> Result<ChartPoint> {
    let mut cur = p.clone();
    let keys: Vec<MultiIndex> = cur.values().keys().cloned().collect();
    for idx in keys {
        if cur.value(&idx).is_some_and(|v| v.is_one()) {
            continue;
        }
        let candidate = cur.with_value(&idx, crate::arith::Scalar::one())?;
        if charts_to_flags(&candidate).is_ok_and(|c| fails(&c)) {
            cur = candidate;
        }
    }
    Ok(cur)
}

/// Runs R1, R2 and R3 on `trials` random points each.
pub fn verify_relations(n: usize, m: usize, trials: usize, seed: u64) -> Result<Vec<RelationReport>> {
    ["R1", "R2", "R3"]
        .iter()
        .enumerate()
        .map(|(r, id)| verify_relation(id, n, m, trials, trial_seed(seed, r as u64)))
        .collect()
}

/// Runs one relation family; families with no instance for `n` report zero trials.
pub fn verify_relation(id: &str, n: usize, m: usize, trials: usize, seed: u64) -> Result<RelationReport> {
    if !["R1", "R2", "R3"].contains(&id) {
        return Err(Error::Parse(format!("unknown relation {id:?}; expected R1, R2 or R3")));
    }
    verify_instances(id, n, m, trials, seed, |rng| random_relation(id, n, rng))
}

/// Checks instances drawn by `pick` (which may decline with `None`) on
/// random points of the fan chart; the first failure is shrunk and reported.
pub fn verify_instances(
    name: &str,
    n: usize,
    m: usize,
    trials: usize,
    seed: u64,
    pick: impl Fn(&mut ChaCha8Rng) -> Option<Relation> + Sync + Send,
) -> Result<RelationReport> {
    if n < 3 {
        return Err(Error::Arity { expected: 3, found: n });
    }
    let fan = Triangulation::fan(n, 1)?;
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<Option<(ChartPoint, Relation, bool)>> {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, t as u64));
            let Some(rel) = pick(&mut rng) else {
                return Ok(None);
            };
            let p = random_chart(&fan, m, &mut rng, DEFAULT_BOUND)?;
            let ok = rel.holds(&charts_to_flags(&p)?);
            Ok(Some((p, rel, ok)))
        })
        .collect::<Result<Vec<_>>>()?;
    let run: Vec<_> = outcomes.into_iter().flatten().collect();
    let passes = run.iter().filter(|(_, _, ok)| *ok).count();
    let (counterexample, witness) = match run.iter().find(|(_, _, ok)| !ok) {
        Some((p, rel, _)) => {
            let small = shrink(p, |c| !rel.holds(c))?;
            (Some(charts_to_flags(&small)?), Some(rel.sides(n)))
        }
        None => (None, None),
    };
    Ok(RelationReport {
        relation: name.to_string(),
        trials: run.len(),
        passes,
        counterexample,
        witness,
    })
}
