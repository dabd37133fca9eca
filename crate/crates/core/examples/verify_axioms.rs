//! The randomized harnesses: axioms 1–8, the gluing check and the cactus
//! relations, each reported as JSON.
//!
//!     cargo run --release --example verify_axioms -- 3 25

use cactus_flags::axioms::check_all;
use cactus_flags::cactus::verify_relations;

fn main() -> cactus_flags::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (m, trials) = (args.first().copied().unwrap_or(2), args.get(1).copied().unwrap_or(20));

    for r in check_all(m, trials, 0)? {
        println!("axiom {:>4}: {}/{}", r.axiom, r.passes, r.trials);
    }
    for r in verify_relations(6, m, trials, 0)? {
        println!("{:>10}: {}/{}", r.relation, r.passes, r.trials);
    }
    Ok(())
}
