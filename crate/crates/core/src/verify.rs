//! Machine checks of the constructions behind `H*(𝒵_K) ≅ H(R*(K))`: the Hochster comparison, the
//! cochain homotopy, the cellular diagonal and isomorphism `g`, and the DGA axioms.

use num_bigint::BigInt;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::cellular::{boundary, boundary_chain, cells, coboundary, cup, iso_f, iso_g, restrict_q, CellCochain};
use crate::hochster::compare;
use crate::koszul::{
    basis, differential_unchecked, e_basis, e_differential, e_multiply_chains, homotopy_defect, iota, multiply_chains,
    restrict_to_subcomplex, rho, Chain, EChain, EMonomial, Monomial,
};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;

/// Outcome of one suite. `detail` is free-form JSON for reports.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub pass: bool,
    pub checks: u64,
    pub failures: Vec<String>,
    pub detail: serde_json::Value,
}

const MAX_RECORDED_FAILURES: usize = 10;

#[derive(Default)]
struct Checker {
    checks: u64,
    failed: u64,
    failures: Vec<String>,
}

impl Checker {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    fn fail(&mut self, message: String) {
        self.check(false, || message);
    }

    fn finish(self, name: &str, mut detail: serde_json::Value) -> SuiteReport {
        if let Some(obj) = detail.as_object_mut() {
            obj.insert("checks".into(), json!(self.checks));
            obj.insert("failed".into(), json!(self.failed));
            if !self.failures.is_empty() {
                obj.insert("failures".into(), json!(self.failures));
            }
        }
        SuiteReport {
            name: name.to_string(),
            pass: self.failed == 0,
            checks: self.checks,
            failures: self.failures,
            detail,
        }
    }
}

/// Sampling sizes for the randomized parts of the suites.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Ground sets up to this size are checked exhaustively where the suites allow it.
    pub exhaustive_max_m: usize,
    /// Random pairs for the multiplicativity of `g` beyond the exhaustive range.
    pub random_pairs: usize,
    /// Random samples per axiom.
    pub axiom_samples: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { exhaustive_max_m: 4, random_pairs: 10_000, axiom_samples: 2_000, seed: 0x5eed }
    }
}

/// Default truncation degree `2m + 2` for the homotopy suite.
pub fn default_truncation(m: usize) -> usize {
    2 * m + 2
}

pub fn hochster_suite(k: &SimplicialComplex) -> SuiteReport {
    let mut c = Checker::default();
    let mut mismatches = Vec::new();
    match compare(k) {
        Ok(list) => {
            c.check(list.is_empty(), || format!("{} mismatching bidegrees", list.len()));
            for mm in list {
                mismatches.push(json!({
                    "i": mm.bidegree.i, "j2": mm.bidegree.j2(),
                    "engine": mm.engine.to_string(), "oracle": mm.oracle.to_string(),
                }));
            }
        }
        Err(e) => c.fail(format!("engine failed: {e}")),
    }
    c.finish("hochster", json!({ "m": k.m(), "mismatches": mismatches }))
}

/// `ds + sd = id - ιρ` on every basis element of degree `≤ truncate`, first on `E_m` itself and
/// then on the quotient `Λ[u] ⊗ ℤ[K]`.
///
/// The operators are applied symbolically to each basis element, so intermediate terms of degree
/// `truncate + 1` are never cut off and the identity is checked through degree `truncate`.
pub fn homotopy_suite(k: &SimplicialComplex, truncate: usize) -> SuiteReport {
    let mut c = Checker::default();
    let full = SimplicialComplex::simplex(k.m());
    let mut counts = Vec::new();
    for (label, model) in [("full_simplex", &full), ("quotient", k)] {
        let elements = e_basis(model, truncate);
        for x in &elements {
            let defect = homotopy_defect(model, &EChain::basis(x.clone()));
            c.check(defect.is_zero(), || format!("{label}: (ds+sd-id+ιρ)({x}) = {defect}"));
        }
        counts.push(elements.len());
    }
    c.finish(
        "homotopy",
        json!({
            "m": k.m(),
            "truncate": truncate,
            "checked_through_degree": truncate,
            "full_simplex_elements": counts[0],
            "quotient_elements": counts[1],
        }),
    )
}

fn random_full_basis_element<R: Rng>(rng: &mut R, m: usize) -> Monomial {
    let mut omega = VertexSet::EMPTY;
    let mut sigma = VertexSet::EMPTY;
    for v in 1..=m {
        match rng.gen_range(0..3) {
            0 => omega = omega.with(v),
            1 => sigma = sigma.with(v),
            _ => {}
        }
    }
    Monomial { omega, sigma }
}

/// The cellular side: `∂² = 0`, `δ² = 0`, `g d = δ g`, `g(xy) = g(x) ⌣ g(y)`, associativity and
/// graded commutativity of `⌣`, Leibniz for `δ`, and the square `q f = g p`.
pub fn diagonal_suite(k: &SimplicialComplex, cfg: &SuiteConfig) -> SuiteReport {
    let mut c = Checker::default();
    let m = k.m();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xd1a6);
    let monos: Vec<Monomial> = basis(k).into_values().flatten().collect();
    let g = |x: &Monomial| iso_g(m, &Chain::basis(*x));
    let exhaustive = m <= cfg.exhaustive_max_m;

    let all_cells: Vec<_> = cells(k).into_values().flatten().collect();
    c.check(all_cells.len() == monos.len(), || format!("{} cells vs {} monomials", all_cells.len(), monos.len()));
    for cell in &all_cells {
        c.check(boundary_chain(&boundary(cell)).is_zero(), || format!("∂² ≠ 0 on {cell:?}"));
    }

    for x in &monos {
        let gd = iso_g(m, &differential_unchecked(k, &Chain::basis(*x)));
        let dg = coboundary(k, &g(x));
        c.check(gd == dg, || format!("g(d {x}) ≠ δ(g {x})"));
        c.check(coboundary(k, &dg).is_zero(), || format!("δ² ≠ 0 on g({x})"));
    }

    let pairs: Vec<(Monomial, Monomial)> = if exhaustive {
        monos.iter().flat_map(|a| monos.iter().map(move |b| (*a, *b))).collect()
    } else {
        (0..cfg.random_pairs).map(|_| (*monos.choose(&mut rng).unwrap(), *monos.choose(&mut rng).unwrap())).collect()
    };
    let mut mult_checks = 0u64;
    for (a, b) in &pairs {
        let lhs = iso_g(m, &multiply_chains(k, &Chain::basis(*a), &Chain::basis(*b)));
        match cup(k, &g(a), &g(b)) {
            Ok(rhs) => c.check(lhs == rhs, || format!("g({a}·{b}) ≠ g({a}) ⌣ g({b})")),
            Err(e) => c.fail(format!("cup failed: {e}")),
        }
        mult_checks += 1;
    }

    let samples = if exhaustive { cfg.axiom_samples.min(4 * pairs.len()) } else { cfg.axiom_samples };
    for _ in 0..samples {
        let a = g(monos.choose(&mut rng).unwrap());
        let b = g(monos.choose(&mut rng).unwrap());
        let x = g(monos.choose(&mut rng).unwrap());
        let (Ok(ab), Ok(bx)) = (cup(k, &a, &b), cup(k, &b, &x)) else {
            c.fail("cup failed".into());
            continue;
        };
        let left = cup(k, &ab, &x).expect("same ground set");
        let right = cup(k, &a, &bx).expect("same ground set");
        c.check(left == right, || format!("(a⌣b)⌣c ≠ a⌣(b⌣c) for {:?}, {:?}, {:?}", a.terms, b.terms, x.terms));

        let (da, db) = (cochain_degree(&a), cochain_degree(&b));
        let ba = cup(k, &b, &a).expect("same ground set");
        let sign_flip = da * db % 2 == 1;
        c.check(if sign_flip { ab.terms == -ba.terms.clone() } else { ab.terms == ba.terms }, || {
            format!("a⌣b ≠ ±b⌣a for {:?}, {:?}", a.terms, b.terms)
        });

        let lhs = coboundary(k, &ab);
        let mut rhs = cup(k, &coboundary(k, &a), &b).expect("same ground set").terms;
        let second = cup(k, &a, &coboundary(k, &b)).expect("same ground set").terms;
        if da % 2 == 1 {
            rhs -= &second;
        } else {
            rhs += &second;
        }
        c.check(lhs.terms == rhs, || format!("Leibniz fails for δ on {:?}, {:?}", a.terms, b.terms));
    }

    // q ∘ f = g ∘ p on R*(Δ^{m-1})
    let full = SimplicialComplex::simplex(m);
    let square_elems: Vec<Monomial> = if exhaustive {
        basis(&full).into_values().flatten().collect()
    } else {
        (0..cfg.random_pairs).map(|_| random_full_basis_element(&mut rng, m)).collect()
    };
    for x in &square_elems {
        let x = Chain::basis(*x);
        let qf = restrict_q(&iso_f(m, &x), k);
        match restrict_to_subcomplex(&full, k, &x) {
            Ok(px) => c.check(qf == iso_g(m, &px), || format!("q f ≠ g p on {x}")),
            Err(e) => c.fail(format!("restriction failed: {e}")),
        }
    }

    c.finish(
        "diagonal",
        json!({
            "m": k.m(),
            "exhaustive": exhaustive,
            "cells": all_cells.len(),
            "multiplicativity_pairs": mult_checks,
            "square_elements": square_elems.len(),
        }),
    )
}

fn cochain_degree(c: &CellCochain) -> usize {
    c.terms.basis_elements().next().map_or(0, |cell| cell.dim())
}

fn random_coefficient<R: Rng>(rng: &mut R) -> BigInt {
    let v: i64 = rng.gen_range(1..=5);
    BigInt::from(if rng.gen_bool(0.5) { v } else { -v })
}

/// Random homogeneous element of `R*(K)` made of up to three terms of one bidegree.
fn random_element<R: Rng>(rng: &mut R, by_bidegree: &[Vec<Monomial>]) -> Chain {
    let group = by_bidegree.choose(rng).expect("nonempty basis");
    let mut x = Chain::zero();
    for _ in 0..rng.gen_range(1..=3) {
        x.add_term(*group.choose(rng).unwrap(), random_coefficient(rng));
    }
    x
}

fn parity(x: &Chain) -> bool {
    x.basis_elements().next().is_some_and(|m| m.is_odd())
}

/// Randomized DGA axioms on `R*(K)` and on the map `ρ`.
pub fn axioms_suite(k: &SimplicialComplex, cfg: &SuiteConfig) -> SuiteReport {
    let mut c = Checker::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xa710);
    let by_bidegree: Vec<Vec<Monomial>> = basis(k).into_values().collect();
    let m = k.m();
    let n = cfg.axiom_samples;

    for _ in 0..n {
        let x = random_element(&mut rng, &by_bidegree);
        let y = random_element(&mut rng, &by_bidegree);
        let z = random_element(&mut rng, &by_bidegree);

        let dx = differential_unchecked(k, &x);
        c.check(differential_unchecked(k, &dx).is_zero(), || format!("d² ≠ 0 on {x}"));

        let xy = multiply_chains(k, &x, &y);
        let lhs = differential_unchecked(k, &xy);
        let mut rhs = multiply_chains(k, &dx, &y);
        let x_dy = multiply_chains(k, &x, &differential_unchecked(k, &y));
        if parity(&x) {
            rhs -= &x_dy;
        } else {
            rhs += &x_dy;
        }
        c.check(lhs == rhs, || format!("Leibniz fails on {x}, {y}"));

        let left = multiply_chains(k, &xy, &z);
        let right = multiply_chains(k, &x, &multiply_chains(k, &y, &z));
        c.check(left == right, || format!("associativity fails on {x}, {y}, {z}"));

        let yx = multiply_chains(k, &y, &x);
        let expected = if parity(&x) && parity(&y) { -yx } else { yx };
        c.check(xy == expected, || format!("graded commutativity fails on {x}, {y}"));

        c.check(rho(&iota(m, &x)) == x, || format!("ρι ≠ id on {x}"));

        let unit = Chain::basis(Monomial::UNIT);
        c.check(multiply_chains(k, &unit, &x) == x, || format!("1·x ≠ x for {x}"));
    }

    // ρ on the quotient model: ring map and chain map
    let e_elems: Vec<EMonomial> = e_basis(k, (2 * m + 2).min(12));
    for _ in 0..n {
        let a = e_elems.choose(&mut rng).unwrap();
        let b = e_elems.choose(&mut rng).unwrap();
        let (xa, xb) = (EChain::term(a.clone(), random_coefficient(&mut rng)), EChain::term(b.clone(), BigInt::one()));
        let lhs = rho(&e_multiply_chains(k, &xa, &xb));
        let rhs = multiply_chains(k, &rho(&xa), &rho(&xb));
        c.check(lhs == rhs, || format!("ρ(xy) ≠ ρ(x)ρ(y) for {a}, {b}"));
        let d_then = rho(&e_differential(k, &xa));
        let then_d = differential_unchecked(k, &rho(&xa));
        c.check(d_then == then_d, || format!("ρd ≠ dρ on {a}"));
    }

    c.finish("axioms", json!({ "m": m, "samples": n }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{cycle, simplex_boundary};

    #[test]
    fn suites_pass_on_small_complexes() {
        let cfg = SuiteConfig { axiom_samples: 200, random_pairs: 200, ..Default::default() };
        for k in [simplex_boundary(3), cycle(5), SimplicialComplex::simplex(2)] {
            for r in [
                hochster_suite(&k),
                homotopy_suite(&k, default_truncation(k.m().min(3))),
                diagonal_suite(&k, &cfg),
                axioms_suite(&k, &cfg),
            ] {
                assert!(r.pass, "{}: {:?}", r.name, r.failures);
                assert!(r.checks > 0);
            }
        }
    }
}
