//! The cellular cochain algebra of the moment-angle complex `𝒵_K ⊆ (D²)^m`.
//!
//! Each disc is split into cells `1`, `T`, `D` of dimensions 0, 1, 2 with `∂D = T`. Product cells
//! are words in `{D, T, 1}^m`; the word with `D` on `σ` and `T` on `ω` lies in `𝒵_K` iff `σ ∈ K`.
//! The cup product is dual to the cellular diagonal whose single-disc coproduct is
//! `Δ(1) = 1⊗1`, `Δ(T) = T⊗1 + 1⊗T`, `Δ(D) = D⊗1 + 1⊗D` (no `T⊗T` term).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::AlgebraError;
use crate::koszul::{Chain, ChainElement, Monomial};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::{inversion_parity, VertexSet};

/// The product cell `𝒯(σ, ω)`: `D` on `σ`, `T` on `ω`, `1` elsewhere.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellWord {
    pub sigma: VertexSet,
    pub omega: VertexSet,
}

impl CellWord {
    pub fn new(sigma: VertexSet, omega: VertexSet) -> Self {
        assert!(sigma.is_disjoint(omega), "a position cannot carry both D and T");
        CellWord { sigma, omega }
    }

    pub fn dim(&self) -> usize {
        2 * self.sigma.len() + self.omega.len()
    }

    /// Positions not carrying `1`.
    pub fn support(&self) -> VertexSet {
        self.sigma.union(self.omega)
    }

    pub fn lies_in(&self, k: &SimplicialComplex) -> bool {
        k.is_face(self.sigma)
    }

    /// Letter string of length `m`, e.g. `"D1T"`.
    pub fn word(&self, m: usize) -> String {
        (1..=m)
            .map(|t| {
                if self.sigma.contains(t) {
                    'D'
                } else if self.omega.contains(t) {
                    'T'
                } else {
                    '1'
                }
            })
            .collect()
    }

    pub fn parse_word(word: &str) -> Option<CellWord> {
        let mut sigma = VertexSet::EMPTY;
        let mut omega = VertexSet::EMPTY;
        for (k, ch) in word.chars().enumerate() {
            match ch {
                'D' => sigma = sigma.with(k + 1),
                'T' => omega = omega.with(k + 1),
                '1' => {}
                _ => return None,
            }
        }
        Some(CellWord { sigma, omega })
    }
}

impl Ord for CellWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sigma.cmp(&other.sigma).then(self.omega.cmp(&other.omega))
    }
}

impl PartialOrd for CellWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The word up to its last non-`1` letter; [`CellWord::word`] gives a fixed length.
impl fmt::Display for CellWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.support().max().unwrap_or(0);
        write!(f, "{}", if m == 0 { "1".to_string() } else { self.word(m) })
    }
}

impl fmt::Debug for CellWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T(D={}, T={})", self.sigma, self.omega)
    }
}

pub type CellChain = ChainElement<CellWord>;

/// Cells of `𝒵_K` by dimension, each list sorted on `(σ, ω)`.
pub fn cells(k: &SimplicialComplex) -> BTreeMap<usize, Vec<CellWord>> {
    let mut out: BTreeMap<usize, Vec<CellWord>> = BTreeMap::new();
    for &sigma in k.faces() {
        for omega in k.ground_set().difference(sigma).subsets() {
            let c = CellWord { sigma, omega };
            out.entry(c.dim()).or_default().push(c);
        }
    }
    for list in out.values_mut() {
        list.sort();
    }
    out
}

/// Cellular boundary of a product cell:
/// `∂(c_1 ⊗ ... ⊗ c_m) = Σ_t (-1)^{dim c_1 + ... + dim c_{t-1}} c_1 ⊗ ... ⊗ ∂c_t ⊗ ... ⊗ c_m`.
pub fn boundary(cell: &CellWord) -> CellChain {
    let mut out = CellChain::zero();
    let one = BigInt::one();
    let mut prefix_dim = 0usize;
    let top = cell.support().max().unwrap_or(0);
    for t in 1..=top {
        if cell.sigma.contains(t) {
            // ∂D = T
            let face = CellWord { sigma: cell.sigma.without(t), omega: cell.omega.with(t) };
            out.add_signed(face, prefix_dim % 2 == 1, &one);
            prefix_dim += 2;
        } else if cell.omega.contains(t) {
            prefix_dim += 1;
        }
    }
    out
}

pub fn boundary_chain(x: &CellChain) -> CellChain {
    x.map_linear(boundary)
}

/// Diagonal of a product cell: every way of sending each non-`1` letter left or right, with the
/// Koszul sign of shuffling `(l_1⊗r_1) ⊗ ... ⊗ (l_m⊗r_m)` into `(l_1⊗...⊗l_m) ⊗ (r_1⊗...⊗r_m)`.
pub fn coproduct(cell: &CellWord) -> Vec<(bool, CellWord, CellWord)> {
    cell.support()
        .subsets()
        .map(|left| {
            let l = CellWord { sigma: cell.sigma.intersection(left), omega: cell.omega.intersection(left) };
            let r = CellWord { sigma: cell.sigma.difference(left), omega: cell.omega.difference(left) };
            // odd letters that go right pass over later odd letters that go left
            (inversion_parity(l.omega, r.omega), l, r)
        })
        .collect()
}

/// A cellular cochain on `(D²)^m` or on `𝒵_K`, as a combination of dual cells `𝒯(σ, ω)*`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellCochain {
    pub m: usize,
    pub terms: CellChain,
}

impl CellCochain {
    pub fn zero(m: usize) -> Self {
        CellCochain { m, terms: CellChain::zero() }
    }

    pub fn dual(m: usize, cell: CellWord) -> Self {
        CellCochain { m, terms: CellChain::basis(cell) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Evaluation on a cellular chain.
    pub fn evaluate(&self, chain: &CellChain) -> BigInt {
        chain.iter().map(|(c, x)| self.terms.coeff(c) * x).sum()
    }

    pub fn is_supported_on(&self, k: &SimplicialComplex) -> bool {
        self.terms.basis_elements().all(|c| c.lies_in(k))
    }
}

/// `δα = α ∘ ∂` on `𝒵_K`.
pub fn coboundary(k: &SimplicialComplex, alpha: &CellCochain) -> CellCochain {
    let mut out = CellChain::zero();
    for (e, a) in alpha.terms.iter() {
        // cells whose boundary can contain e: turn one T of e back into D
        for i in e.omega.iter() {
            let c = CellWord { sigma: e.sigma.with(i), omega: e.omega.without(i) };
            if !c.lies_in(k) {
                continue;
            }
            let coefficient = boundary(&c).coeff(e);
            out.add_term(c, coefficient * a);
        }
    }
    CellCochain { m: alpha.m, terms: out }
}

/// Cup product induced by the cellular diagonal: `(α ⌣ β)(c) = Σ ± α(l) β(r)` over `Δc`.
pub fn cup(k: &SimplicialComplex, alpha: &CellCochain, beta: &CellCochain) -> Result<CellCochain, AlgebraError> {
    if alpha.m != beta.m {
        return Err(AlgebraError::MismatchedM(alpha.m, beta.m));
    }
    if alpha.m != k.m() {
        return Err(AlgebraError::MismatchedM(alpha.m, k.m()));
    }
    let mut out = CellChain::zero();
    for (l, a) in alpha.terms.iter() {
        for (r, b) in beta.terms.iter() {
            if !l.support().is_disjoint(r.support()) {
                continue;
            }
            // the only cell whose diagonal can contain l ⊗ r
            let c = CellWord { sigma: l.sigma.union(r.sigma), omega: l.omega.union(r.omega) };
            if !c.lies_in(k) {
                continue;
            }
            for (neg, cl, cr) in coproduct(&c) {
                if cl == *l && cr == *r {
                    out.add_signed(c, neg, &(a * b));
                }
            }
        }
    }
    Ok(CellCochain { m: alpha.m, terms: out })
}

/// `g : R*(K) -> C*(𝒵_K)`, `u_ω v_σ ↦ 𝒯(σ, ω)*`.
pub fn iso_g(m: usize, x: &Chain) -> CellCochain {
    CellCochain { m, terms: x.map_linear(|mono| CellChain::basis(CellWord { sigma: mono.sigma, omega: mono.omega })) }
}

/// Inverse of [`iso_g`].
pub fn iso_g_inverse(c: &CellCochain) -> Chain {
    c.terms.map_linear(|cell| Chain::basis(Monomial { omega: cell.omega, sigma: cell.sigma }))
}

/// `f = g` for the full simplex: `R*(Δ^{m-1}) -> C*((D²)^m)`.
pub fn iso_f(m: usize, x: &Chain) -> CellCochain {
    iso_g(m, x)
}

/// `q : C*((D²)^m) -> C*(𝒵_K)`: drops dual cells outside `𝒵_K`.
pub fn restrict_q(c: &CellCochain, k: &SimplicialComplex) -> CellCochain {
    CellCochain { m: c.m, terms: c.terms.filter(|cell| cell.lies_in(k)) }
}

/// Number of cells in each dimension and the Euler characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCensus {
    pub counts: BTreeMap<usize, usize>,
    pub euler_characteristic: i64,
}

pub fn census(k: &SimplicialComplex) -> CellCensus {
    let counts: BTreeMap<usize, usize> = cells(k).into_iter().map(|(d, v)| (d, v.len())).collect();
    let euler_characteristic = counts.iter().map(|(&d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) }).sum();
    CellCensus { counts, euler_characteristic }
}
