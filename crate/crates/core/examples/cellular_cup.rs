//! Cells of 𝒵_K, the diagonal-induced cup product, and the isomorphism g from R*(K).
//!
//!     cargo run --example cellular_cup

use macring::cellular::{boundary, cells, census, coproduct, cup, iso_g, CellWord};
use macring::koszul::{multiply_chains, Chain, Monomial};
use macring::SimplicialComplex;

fn main() {
    let k = SimplicialComplex::from_facets(3, &[&[1, 2], &[1, 3], &[2, 3]]);
    let c = census(&k);
    println!("cells by dimension {:?}, euler characteristic {}", c.counts, c.euler_characteristic);
    let top: Vec<String> = cells(&k).values().last().unwrap().iter().map(|c| c.word(3)).collect();
    println!("top cells: {top:?}");

    let cell = CellWord::parse_word("DT1").unwrap();
    let d: Vec<String> = boundary(&cell).iter().map(|(c, n)| format!("{n}·{}", c.word(3))).collect();
    println!("\n∂(DT1) = {}", d.join(" + "));
    for (negative, l, r) in coproduct(&CellWord::parse_word("TT1").unwrap()) {
        println!("Δ(TT1) has {}{} ⊗ {}", if negative { "-" } else { "+" }, l.word(3), r.word(3));
    }

    let x = Chain::basis(Monomial::from_lists(&[1], &[2]));
    let y = Chain::basis(Monomial::from_lists(&[3], &[]));
    let lhs = iso_g(3, &multiply_chains(&k, &x, &y));
    let rhs = cup(&k, &iso_g(3, &x), &iso_g(3, &y)).unwrap();
    println!("\ng(u1v2 · u3) = {}\ng(u1v2) ⌣ g(u3) = {}", lhs.terms, rhs.terms);
}
