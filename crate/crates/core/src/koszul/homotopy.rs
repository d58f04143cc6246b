//! The Koszul algebra `Λ[u] ⊗ ℤ[K]`, modelled as `E_m = Λ[u_1..u_m] ⊗ ℤ[v_1..v_m]` modulo the
//! monomials whose polynomial support is not a face, together with the projection `ρ` onto
//! `R*(K)`, the basis inclusion `ι`, and the cochain homotopy `s` with `ds + sd = id - ιρ`.
//!
//! For `K = Δ^{m-1}` nothing is killed and the model is `E_m` itself.

use num_bigint::BigInt;
use num_traits::One;

use super::algebra::Chain;
use super::chain::ChainElement;
use super::monomial::EMonomial;
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::{inversion_parity, VertexSet};

pub type EChain = ChainElement<EMonomial>;

/// `true` when `x` survives in `Λ[u] ⊗ ℤ[K]`.
pub fn survives(k: &SimplicialComplex, x: &EMonomial) -> bool {
    k.is_face(x.polynomial_support())
}

pub fn e_differential_monomial(k: &SimplicialComplex, x: &EMonomial) -> EChain {
    let mut out = EChain::zero();
    let one = BigInt::one();
    for (t, i) in x.omega.iter().enumerate() {
        let mut exponents = x.exponents.clone();
        exponents[i - 1] += 1;
        let y = EMonomial { omega: x.omega.without(i), exponents };
        if survives(k, &y) {
            out.add_signed(y, t % 2 == 1, &one);
        }
    }
    out
}

pub fn e_differential(k: &SimplicialComplex, x: &EChain) -> EChain {
    x.map_linear(|b| e_differential_monomial(k, b))
}

pub fn e_multiply(k: &SimplicialComplex, a: &EMonomial, b: &EMonomial) -> Option<(bool, EMonomial)> {
    assert_eq!(a.m(), b.m(), "factors live in different polynomial rings");
    if !a.omega.is_disjoint(b.omega) {
        return None;
    }
    let exponents: Vec<u32> = a.exponents.iter().zip(&b.exponents).map(|(x, y)| x + y).collect();
    let c = EMonomial { omega: a.omega.union(b.omega), exponents };
    survives(k, &c).then(|| (inversion_parity(a.omega, b.omega), c))
}

pub fn e_multiply_chains(k: &SimplicialComplex, x: &EChain, y: &EChain) -> EChain {
    let mut out = EChain::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            if let Some((neg, c)) = e_multiply(k, a, b) {
                out.add_signed(c, neg, &(ca * cb));
            }
        }
    }
    out
}

/// All surviving basis elements of total degree at most `max_degree`, sorted.
pub fn e_basis(k: &SimplicialComplex, max_degree: usize) -> Vec<EMonomial> {
    let m = k.m();
    let mut out = Vec::new();
    for omega in k.ground_set().subsets() {
        if omega.len() > max_degree {
            continue;
        }
        let budget = (max_degree - omega.len()) / 2;
        for &sigma in k.faces() {
            if sigma.len() > budget {
                continue;
            }
            // exponents >= 1 exactly on sigma
            let vertices = sigma.to_vec();
            let mut exponents = vec![0u32; m];
            for &v in &vertices {
                exponents[v - 1] = 1;
            }
            distribute(&vertices, 0, budget - sigma.len(), &mut exponents, &mut |e| {
                out.push(EMonomial { omega, exponents: e.to_vec() });
            });
        }
    }
    out.sort();
    out
}

fn distribute(vertices: &[usize], at: usize, extra: usize, exps: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if at == vertices.len() {
        emit(exps);
        return;
    }
    let v = vertices[at] - 1;
    let base = exps[v];
    for add in 0..=extra {
        exps[v] = base + add as u32;
        distribute(vertices, at + 1, extra - add, exps, emit);
    }
    exps[v] = base;
}

/// The projection `ρ : Λ[u] ⊗ ℤ[K] -> R*(K)`: kills `v_i^2` and `u_i v_i`, keeps square-free
/// monomials disjoint from their exterior part.
pub fn rho(x: &EChain) -> Chain {
    x.map_linear(|b| match b.as_monomial() {
        Some(mono) => Chain::basis(mono),
        None => Chain::zero(),
    })
}

/// The basis inclusion `ι : R*(K) -> Λ[u] ⊗ ℤ[K]` on the ground set `[m]`.
pub fn iota(m: usize, x: &Chain) -> EChain {
    x.map_linear(|mono| EChain::basis(EMonomial::from_monomial(m, mono)))
}

/// `ιρ` on a single basis element: itself when reduced, else zero.
fn is_reduced_prefix(x: &EMonomial, upto: usize) -> bool {
    (1..upto).all(|i| {
        let e = x.exponent(i);
        e == 0 || (e == 1 && !x.omega.contains(i))
    })
}

/// The cochain homotopy on a basis element.
///
/// With `E_k = E_{k-1} ⊗ E_1` (coordinate `k` on the right) and
/// `s_1(v^j) = v^{j-1} u` for `j ≥ 2` (zero on `1`, `v` and on `u`-multiples),
/// `s_k = s_{k-1} ⊗ id + ι_{k-1}ρ_{k-1} ⊗ s_1`. Unrolled, coordinate `t` contributes when the
/// coordinates before it are reduced, with the Koszul sign of moving `s_1` past them.
pub fn homotopy_monomial(x: &EMonomial) -> EChain {
    let mut out = EChain::zero();
    let one = BigInt::one();
    for t in 1..=x.m() {
        if !is_reduced_prefix(x, t) {
            break;
        }
        if x.omega.contains(t) || x.exponent(t) < 2 {
            continue;
        }
        let mut exponents = x.exponents.clone();
        exponents[t - 1] -= 1;
        let negative = x.omega.count_below(t) % 2 == 1;
        out.add_signed(EMonomial { omega: x.omega.with(t), exponents }, negative, &one);
    }
    out
}

/// The cochain homotopy `s`. The quotient by the face-ring ideal never needs checking: `s`
/// preserves the polynomial support.
pub fn homotopy(x: &EChain) -> EChain {
    x.map_linear(homotopy_monomial)
}

/// `(ds + sd - id + ιρ)(x)`; zero exactly when the homotopy identity holds on `x`.
pub fn homotopy_defect(k: &SimplicialComplex, x: &EChain) -> EChain {
    let ds = e_differential(k, &homotopy(x));
    let sd = homotopy(&e_differential(k, x));
    let mut out = &ds + &sd;
    out -= x;
    out += &iota(k.m(), &rho(x));
    out
}

/// Convenience: `u_ω v^a` from a vertex list and exponent vector.
pub fn e_monomial(omega: &[usize], exponents: &[u32]) -> EMonomial {
    EMonomial::new(VertexSet::from_vertices(omega.iter().copied()), exponents.to_vec())
}
