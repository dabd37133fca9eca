//! The reversal θ on triangles of flags: positivity, θ² = id, and how it
//! permutes faces and rotations.
//!
//!     cargo run --example theta_reversal -- 4

use cactus_flags::calibration::PerpConvention;
use cactus_flags::reconstruct::random_positive;

fn main() -> cactus_flags::Result<()> {
    let m = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let conv = PerpConvention::for_dim(m)?;
    println!("m = {m}: form sign {}, row signs {:?}", conv.form_sign, conv.row_signs);

    let c = random_positive(3, m, 5, 20)?;
    let t = c.theta()?;
    println!("θ(c) positive:        {}", t.is_positive());
    println!("θ(θ(c)) = c:          {}", t.theta()?.same_point(&c));
    for i in 1..=3 {
        println!("face {i} of θ(c) = face {} of c: {}", 4 - i, t.face(i)?.same_point(&c.face(4 - i)?));
    }
    let lhs = c.rotate()?.theta()?;
    let rhs = c.theta()?.rotate_inverse()?;
    println!("θ∘r = r⁻¹∘θ:          {}", lhs.same_point(&rhs));
    let edge = c.face(3)?;
    println!("ι fixes the edge:     {}", edge.iota()?.same_point(&edge));
    Ok(())
}
