//! Flipping one diagonal of a random chart point with the exchange relations,
//! compared against recomputing the new chart from reconstructed flags.
//!
//!     cargo run --example flip_transport -- 6 3 7

use cactus_flags::mutation::flip_transport;
use cactus_flags::reconstruct::{charts_to_flags, flags_to_charts, random_chart};
use cactus_flags::Triangulation;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> cactus_flags::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(6) as usize;
    let m = args.get(1).copied().unwrap_or(3) as usize;
    let seed = args.get(2).copied().unwrap_or(7);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_chart(&Triangulation::fan(n, 1)?, m, &mut rng, 9)?;
    let d = (1, 3);
    let q = flip_transport(&p, d)?;
    println!("flip {d:?} -> {:?}", q.triangulation().diagonals().collect::<Vec<_>>());
    for (idx, v) in q.values() {
        if p.value(idx).is_none() {
            println!("  new {idx} = {v}");
        }
    }

    let oracle = flags_to_charts(&charts_to_flags(&p)?, q.triangulation())?;
    println!("agrees with the flag-level recomputation: {}", oracle == q);
    let e = p.triangulation().opposite_diagonal(d.0, d.1)?;
    let back = flip_transport(&q, e)?;
    println!("flipping back restores the point: {}", back == p);
    Ok(())
}
