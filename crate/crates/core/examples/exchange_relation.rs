//! The exchange relation around a quadrilateral, checked on random positive
//! configurations: every instance `Δ_target · E = A·B + C·D` for n flags in R^m.
//!
//!     cargo run --example exchange_relation -- 5 3

use cactus_flags::mutation::exchange_instances;
use cactus_flags::reconstruct::random_positive;

fn main() -> cactus_flags::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, m) = (args.first().copied().unwrap_or(4), args.get(1).copied().unwrap_or(3));
    let instances = exchange_instances(n, m);
    println!("{} exchange instances for n = {n}, m = {m}", instances.len());

    for seed in 0..5 {
        let c = random_positive(n, m, seed, 20)?;
        let mut failures = 0usize;
        for q in &instances {
            let [a, b, cc, d, e] = q.siblings().map(|i| c.delta(&i).unwrap());
            let lhs = c.delta(&q.target())? * &e;
            let rhs = a * b + cc * d;
            if lhs != rhs {
                failures += 1;
            }
        }
        println!("seed {seed}: {} of {} instances hold exactly", instances.len() - failures, instances.len());
    }

    let q = &instances[0];
    let c = random_positive(n, m, 0, 20)?;
    let [a, b, cc, d, e] = q.siblings().map(|i| c.delta(&i).unwrap());
    println!("\nfirst instance at seed 0:");
    println!("  Δ[{}] = {}", q.target(), c.delta(&q.target())?);
    println!("  (A·B + C·D) / E with A = {a}, B = {b}, C = {cc}, D = {d}, E = {e}");
    Ok(())
}
