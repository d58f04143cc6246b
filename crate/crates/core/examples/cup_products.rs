//! Products in H*(𝒵_K) for the pentagon, whose moment-angle complex is a 7-manifold.
//!
//!     cargo run --example cup_products

use macring::corpus::cycle;
use macring::engine::ring_presentation;
use macring::koszul::Bidegree;

fn main() {
    let ring = ring_presentation(&cycle(5)).expect("ring");
    for (id, g) in ring.generators.iter().enumerate() {
        println!("g{id:<2} degree {} bidegree {:<7} {}", g.total_degree(), g.bidegree.to_string(), g.representative);
    }

    let (h3, h4) = (Bidegree::new(1, 2), Bidegree::new(2, 3));
    println!("\npairing H^3 x H^4 -> H^7:");
    for row in ring.pairing_matrix(h3, h4, 0) {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        println!("  [{}]", cells.join(""));
    }
}
