//! The homotopy s on Λ[u] ⊗ ℤ[v] with ds + sd = id - ιρ, applied to one element and then checked
//! on every basis element of bounded degree.
//!
//!     cargo run --example homotopy_operator

use macring::koszul::{e_differential, e_monomial, homotopy, homotopy_defect, iota, rho, EChain};
use macring::verify::homotopy_suite;
use macring::SimplicialComplex;

fn main() {
    let k = SimplicialComplex::simplex(3);
    // u_2 v_1^2 v_3
    let x = EChain::basis(e_monomial(&[2], &[2, 0, 1]));
    println!("x      = {x}");
    println!("s(x)   = {}", homotopy(&x));
    println!("d(x)   = {}", e_differential(&k, &x));
    println!("ιρ(x)  = {}", iota(3, &rho(&x)));
    println!("defect = {}", homotopy_defect(&k, &x));

    let report = homotopy_suite(&k, 8);
    println!("\n{} elements checked, pass = {}", report.checks, report.pass);
    println!("{}", report.detail);
}
