//! Δ coordinates of a fixed configuration of four flags in R², and their
//! invariance under the global SL₂ action.
//!
//!     cargo run --example delta_coordinates

use cactus_flags::{Configuration, Mat};

fn main() -> cactus_flags::Result<()> {
    let c = Configuration::from_i64(&[
        &[&[1, 0], &[0, 1]],
        &[&[0, 1], &[-1, 0]],
        &[&[-1, 1], &[-1, 0]],
        &[&[-2, 1], &[-1, 0]],
    ])?;
    for (idx, v) in c.deltas() {
        println!("Δ[{idx}] = {v}");
    }
    println!("positive: {}", c.is_positive());

    let g = Mat::from_i64(&[&[2, 1], &[3, 2]]);
    let moved = c.act(&g)?;
    println!("same Δ after acting by {g:?}: {}", moved.deltas() == c.deltas());
    Ok(())
}
