//! Each bigraded group assembled from reduced cohomology of full subcomplexes, compared with the
//! Koszul computation.
//!
//!     cargo run --example hochster_oracle

use macring::corpus::real_projective_plane;
use macring::hochster::{compare, oracle_report};

fn main() {
    let k = real_projective_plane();
    let report = oracle_report(&k).expect("oracle");
    let shown = report.contributions.iter().filter(|c| c.omega.len() >= 5).take(8);
    for c in shown {
        println!("H~^{}(K_{}) = {}", c.degree, c.omega, c.group);
    }
    for (b, g) in &report.groups {
        println!("{b:>8}: {g}");
    }
    let mismatches = compare(&k).expect("engine");
    println!("mismatches with the Koszul engine: {}", mismatches.len());
}
