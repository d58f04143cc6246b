//! Every verification suite on a seeded random complex.
//!
//!     cargo run --release --example verify_suites [seed]

use macring::corpus::random_complex;
use macring::verify::{axioms_suite, default_truncation, diagonal_suite, hochster_suite, homotopy_suite, SuiteConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = random_complex(&mut rng, 5);
    println!("K = {k:?}");
    let cfg = SuiteConfig { seed, ..Default::default() };
    for r in [
        hochster_suite(&k),
        homotopy_suite(&k, default_truncation(k.m())),
        diagonal_suite(&k, &cfg),
        axioms_suite(&k, &cfg),
    ] {
        println!("{:<9} {} ({} checks)", r.name, if r.pass { "ok" } else { "FAILED" }, r.checks);
    }
}
