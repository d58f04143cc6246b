//! Bigraded cohomology of a few moment-angle complexes.
//!
//!     cargo run --example betti_numbers

use macring::corpus::{cycle, disjoint_points, real_projective_plane};
use macring::engine::{betti_table, poincare_series};
use macring::SimplicialComplex;

fn show(name: &str, k: &SimplicialComplex) {
    let table = betti_table(k).expect("cohomology");
    println!("{name} (m = {})", k.m());
    for (b, g) in &table.entries {
        println!("  H^{:<2} {b:>8}  {g}", b.total());
    }
    println!("  Poincare series {}\n", poincare_series(&table));
}

fn main() {
    show("pentagon", &cycle(5));
    show("three points", &disjoint_points(3));
    // torsion appears in degree 9
    show("six-vertex projective plane", &real_projective_plane());
}
