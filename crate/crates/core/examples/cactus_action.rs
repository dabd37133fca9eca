//! Interval reversals acting on a positive configuration: the underlying
//! permutation, relocation of edge data, and the involution relation.
//!
//!     cargo run --example cactus_action -- '[[2,5],[1,3]]'

use cactus_flags::cactus::{act_word, underlying_permutation, CactusWord};
use cactus_flags::reconstruct::random_positive;
use cactus_flags::MultiIndex;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let word: CactusWord = match std::env::args().nth(1) {
        Some(text) => serde_json::from_str(&text)?,
        None => serde_json::from_str("[[2,5],[1,3]]")?,
    };
    let (n, m) = (6, 3);
    word.check(n)?;
    let c = random_positive(n, m, 11, 20)?;
    let acted = act_word(&c, &word)?;
    let perm = underlying_permutation(&word, n);
    println!("word {} on {n} flags; positions now hold labels {perm:?}", serde_json::to_string(&word)?);
    println!("result positive: {}", acted.is_positive());

    // side coordinates before and after
    let edge = |x: usize, y: usize| MultiIndex::from_weights(n, &[(x, 1), (y, m - 1)]);
    for k in 0..n {
        let (x, y) = (k, (k + 1) % n);
        let (before, after) = (c.delta(&edge(x, y))?, acted.delta(&edge(x, y))?);
        println!("Δ[{}]: {before} -> {after}", edge(x, y));
    }

    let mut doubled = word.clone();
    doubled.0.extend(word.gens().iter().rev().copied());
    println!("word followed by its reverse is the identity: {}", act_word(&c, &doubled)?.same_point(&c));
    Ok(())
}
