//! Five flips around the pentagon return every chart value exactly.
//!
//!     cargo run --example pentagon -- 3

use cactus_flags::axioms::PENTAGON_CYCLE;
use cactus_flags::mutation::flip_transport;
use cactus_flags::reconstruct::random_chart;
use cactus_flags::Triangulation;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> cactus_flags::Result<()> {
    let m = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let start = random_chart(&Triangulation::fan(5, 1)?, m, &mut rng, 9)?;
    let mut cur = start.clone();
    for d in PENTAGON_CYCLE {
        cur = flip_transport(&cur, d)?;
        let diagonals: Vec<_> = cur.triangulation().diagonals().collect();
        println!("flip {d:?} -> {diagonals:?}");
    }
    println!("back at the start exactly: {}", cur == start);
    Ok(())
}
