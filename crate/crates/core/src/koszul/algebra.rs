//! The finite bigraded algebra `R*(K) = Λ[u] ⊗ ℤ[K] / (v_i^2 = u_i v_i = 0)`.
//!
//! Sign conventions: exterior generators are written in ascending order, the differential puts
//! `(-1)^{t-1}` on the `t`-th exterior factor, and a product carries the parity of inversions between
//! the two exterior parts. The `v_i` are even and never contribute signs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::chain::ChainElement;
use super::monomial::{Bidegree, Monomial};
use crate::error::AlgebraError;
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::{inversion_parity, VertexSet};

pub type Chain = ChainElement<Monomial>;

/// All basis monomials `u_ω v_σ` (`σ ∈ K`, `ω ∩ σ = ∅`) grouped by bidegree, each group sorted.
pub fn basis(k: &SimplicialComplex) -> BTreeMap<Bidegree, Vec<Monomial>> {
    let ground = k.ground_set();
    let mut out: BTreeMap<Bidegree, Vec<Monomial>> = BTreeMap::new();
    for &sigma in k.faces() {
        for omega in ground.difference(sigma).subsets() {
            let mono = Monomial { omega, sigma };
            out.entry(mono.bidegree()).or_default().push(mono);
        }
    }
    for group in out.values_mut() {
        group.sort();
    }
    out
}

/// Basis of one bidegree `(-i, 2j)`, sorted.
pub fn basis_in(k: &SimplicialComplex, bidegree: Bidegree) -> Vec<Monomial> {
    let Bidegree { i, j } = bidegree;
    if i > j || j > k.m() {
        return Vec::new();
    }
    let ground = k.ground_set();
    let mut out: Vec<Monomial> = k
        .faces()
        .iter()
        .filter(|s| s.len() == j - i)
        .flat_map(|&sigma| ground.difference(sigma).subsets_of_size(i).map(move |omega| Monomial { omega, sigma }))
        .collect();
    out.sort();
    out
}

/// Basis monomials with support exactly `support` in bidegree `(-i, 2|support|)`, sorted.
pub fn basis_with_support(k: &SimplicialComplex, support: VertexSet, i: usize) -> Vec<Monomial> {
    if i > support.len() {
        return Vec::new();
    }
    let mut out: Vec<Monomial> = support
        .subsets_of_size(support.len() - i)
        .filter(|&sigma| k.is_face(sigma))
        .map(|sigma| Monomial { omega: support.difference(sigma), sigma })
        .collect();
    out.sort();
    out
}

/// `d(u_ω v_σ) = Σ_t (-1)^{t-1} u_{ω∖i_t} v_{σ∪i_t}`, dropping terms with `σ ∪ i_t ∉ K`.
pub fn differential_monomial(k: &SimplicialComplex, mono: &Monomial) -> Chain {
    let mut out = Chain::zero();
    let one = BigInt::one();
    for (t, i) in mono.omega.iter().enumerate() {
        let sigma = mono.sigma.with(i);
        if k.is_face(sigma) {
            out.add_signed(Monomial { omega: mono.omega.without(i), sigma }, t % 2 == 1, &one);
        }
    }
    out
}

/// Bidegree shared by all terms, or an error naming two that differ. `None` for zero.
pub fn homogeneous_bidegree(x: &Chain) -> Result<Option<Bidegree>, AlgebraError> {
    let mut found: Option<Bidegree> = None;
    for mono in x.basis_elements() {
        let b = mono.bidegree();
        match found {
            None => found = Some(b),
            Some(f) if f != b => return Err(AlgebraError::NotHomogeneous((f.i, f.j), (b.i, b.j))),
            _ => {}
        }
    }
    Ok(found)
}

/// The differential on a homogeneous element.
pub fn differential(k: &SimplicialComplex, x: &Chain) -> Result<Chain, AlgebraError> {
    homogeneous_bidegree(x)?;
    Ok(differential_unchecked(k, x))
}

/// Linear extension of [`differential_monomial`] without the homogeneity check.
pub fn differential_unchecked(k: &SimplicialComplex, x: &Chain) -> Chain {
    x.map_linear(|mono| differential_monomial(k, mono))
}

/// Product of basis monomials: `Some((negative, monomial))` or `None` for zero.
pub fn multiply(k: &SimplicialComplex, a: &Monomial, b: &Monomial) -> Option<(bool, Monomial)> {
    if !a.support().is_disjoint(b.support()) {
        return None;
    }
    let sigma = a.sigma.union(b.sigma);
    if !k.is_face(sigma) {
        return None;
    }
    Some((inversion_parity(a.omega, b.omega), Monomial { omega: a.omega.union(b.omega), sigma }))
}

/// Bilinear extension of [`multiply`].
pub fn multiply_chains(k: &SimplicialComplex, x: &Chain, y: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            if let Some((neg, c)) = multiply(k, a, b) {
                out.add_signed(c, neg, &(ca * cb));
            }
        }
    }
    out
}

/// The projection `R*(L) -> R*(K)` for a subcomplex `K ⊆ L` on the same ground set: kills every
/// `u_ω v_σ` with `σ ∉ K`.
pub fn restrict_to_subcomplex(l: &SimplicialComplex, k: &SimplicialComplex, x: &Chain) -> Result<Chain, AlgebraError> {
    check_subcomplex(k, l)?;
    Ok(x.filter(|mono| k.is_face(mono.sigma)))
}

pub(crate) fn check_subcomplex(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<(), AlgebraError> {
    if k.m() != l.m() {
        return Err(AlgebraError::GroundSetMismatch { sub: k.m(), sup: l.m() });
    }
    if let Some(f) = k.faces().iter().find(|f| !l.is_face(**f)) {
        return Err(AlgebraError::NotASubcomplex(f.to_string()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_points() -> SimplicialComplex {
        SimplicialComplex::from_facets(2, &[&[1], &[2]])
    }

    #[test]
    fn basis_of_a_point() {
        let b = basis(&SimplicialComplex::simplex(1));
        let all: Vec<Monomial> = b.values().flatten().copied().collect();
        assert_eq!(all.len(), 3);
        assert_eq!(b[&Bidegree::new(0, 0)], vec![Monomial::UNIT]);
        assert_eq!(b[&Bidegree::new(1, 1)], vec![Monomial::u(1)]);
        assert_eq!(b[&Bidegree::new(0, 1)], vec![Monomial::v(1)]);
    }

    #[test]
    fn basis_counts() {
        let empty = basis(&SimplicialComplex::empty(1));
        assert_eq!(empty.values().flatten().copied().collect::<Vec<_>>(), vec![Monomial::UNIT, Monomial::u(1)]);
        assert_eq!(basis(&two_points()).values().map(|v| v.len()).sum::<usize>(), 8);
        let k = SimplicialComplex::from_facets(4, &[&[1, 2, 3], &[3, 4]]);
        let expected: usize = k.faces().iter().map(|s| 1 << (4 - s.len())).sum();
        let b = basis(&k);
        assert_eq!(b.values().map(|v| v.len()).sum::<usize>(), expected);
        for (bd, monos) in &b {
            assert_eq!(&basis_in(&k, *bd), monos);
        }
    }

    #[test]
    fn differential_examples() {
        let k = two_points();
        assert_eq!(differential_monomial(&k, &Monomial::u(1)), Chain::basis(Monomial::v(1)));
        assert!(differential_monomial(&k, &Monomial::v(2)).is_zero());
        let ghost = SimplicialComplex::from_facets(2, &[&[2]]);
        assert!(differential_monomial(&ghost, &Monomial::u(1)).is_zero());

        // d(u1 u2) = u2 v1 - u1 v2 on the full simplex
        let full = SimplicialComplex::simplex(2);
        let d = differential_monomial(&full, &Monomial::from_lists(&[1, 2], &[]));
        let mut expected = Chain::basis(Monomial::from_lists(&[2], &[1]));
        expected.add_term(Monomial::from_lists(&[1], &[2]), BigInt::from(-1));
        assert_eq!(d, expected);
        assert!(differential(&full, &d).unwrap().is_zero());
    }

    #[test]
    fn differential_rejects_mixed_bidegrees() {
        let k = two_points();
        let mut x = Chain::basis(Monomial::u(1));
        x.add_term(Monomial::v(1), BigInt::one());
        assert!(matches!(differential(&k, &x), Err(AlgebraError::NotHomogeneous(..))));
    }

    #[test]
    fn product_examples() {
        let full = SimplicialComplex::simplex(2);
        assert_eq!(multiply(&full, &Monomial::u(1), &Monomial::v(1)), None);
        assert_eq!(multiply(&full, &Monomial::u(2), &Monomial::u(1)), Some((true, Monomial::from_lists(&[1, 2], &[]))));
        assert_eq!(
            multiply(&full, &Monomial::v(1), &Monomial::v(2)),
            Some((false, Monomial::from_lists(&[], &[1, 2])))
        );
        assert_eq!(multiply(&two_points(), &Monomial::v(1), &Monomial::v(2)), None);
        assert_eq!(multiply(&full, &Monomial::v(1), &Monomial::v(1)), None);
    }

    #[test]
    fn restriction() {
        let full = SimplicialComplex::simplex(3);
        let bd = SimplicialComplex::from_facets(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let top = Chain::basis(Monomial::from_lists(&[], &[1, 2, 3]));
        assert!(restrict_to_subcomplex(&full, &bd, &top).unwrap().is_zero());
        let x = Chain::basis(Monomial::from_lists(&[1], &[2]));
        assert_eq!(restrict_to_subcomplex(&full, &bd, &x).unwrap(), x);
        assert!(restrict_to_subcomplex(&bd, &full, &x).is_err());
        assert!(restrict_to_subcomplex(&SimplicialComplex::simplex(4), &bd, &x).is_err());
    }
}
