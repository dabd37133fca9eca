//! Chart values → flags → chart values, and flags → charts on a random
//! triangulation → flags, for one point.
//!
//!     cargo run --example reconstruct_roundtrip -- 7 4

use cactus_flags::reconstruct::{charts_to_flags, flags_to_charts, random_positive, random_triangulation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> cactus_flags::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, m) = (args.first().copied().unwrap_or(7), args.get(1).copied().unwrap_or(4));

    let c = random_positive(n, m, 1, 20)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let t = random_triangulation(n, &mut rng)?;
    let p = flags_to_charts(&c, &t)?;
    println!("{} chart values on diagonals {:?}", p.values().len(), t.diagonals().collect::<Vec<_>>());

    let rebuilt = charts_to_flags(&p)?;
    println!("gauge-fixed reconstruction, flag 2:\n{:?}", rebuilt.flag(1).rep());
    println!("same point as the original: {}", rebuilt.same_point(&c));
    println!("chart values reproduced:    {}", flags_to_charts(&rebuilt, &t)? == p);
    Ok(())
}
