//! Chart sizes for a range of polygons, and the chart indices of one
//! triangulation listed edge by edge and triangle by triangle.
//!
//!     cargo run --example chart_dimensions

use cactus_flags::polygon::{chart_dimension, chart_indices};
use cactus_flags::Triangulation;

fn main() -> cactus_flags::Result<()> {
    print!("n\\m");
    for m in 2..=5 {
        print!("{m:>6}");
    }
    println!();
    for n in 3..=10 {
        print!("{n:>3}");
        for m in 2..=5 {
            print!("{:>6}", chart_dimension(n, m));
        }
        println!();
    }

    let t = Triangulation::new(6, [(1, 3), (3, 5), (1, 5)])?;
    let m = 3;
    let indices = chart_indices(&t, m);
    let diagonals: Vec<_> = t.diagonals().collect();
    println!("\n{} indices for m = {m} on the hexagon with diagonals {diagonals:?}:", indices.len());
    for e in t.edges() {
        let on_edge: Vec<String> = indices
            .iter()
            .filter(|i| i.support() == [e.0 - 1, e.1 - 1])
            .map(|i| i.to_string())
            .collect();
        println!("  edge {}-{}: {}", e.0, e.1, on_edge.join("  "));
    }
    for tri in t.triangles() {
        let inside: Vec<String> = indices
            .iter()
            .filter(|i| i.support() == tri.map(|v| v - 1))
            .map(|i| i.to_string())
            .collect();
        println!("  triangle {tri:?}: {}", inside.join("  "));
    }
    Ok(())
}
