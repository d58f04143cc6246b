use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::vertex_set::VertexSet;

/// The bidegree `(-i, 2j)`, stored as the non-negative pair `(i, j)`.
///
/// `u_k` has bidegree `(-1, 2)` and `v_k` has `(0, 2)`; the topological degree is `2j - i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub i: usize,
    pub j: usize,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { i: 0, j: 0 };

    pub fn new(i: usize, j: usize) -> Self {
        Bidegree { i, j }
    }

    pub fn total(self) -> usize {
        2 * self.j - self.i
    }

    /// Second coordinate `2j` as written in `(-i, 2j)`.
    pub fn j2(self) -> usize {
        2 * self.j
    }
}

impl std::ops::Add for Bidegree {
    type Output = Bidegree;

    fn add(self, other: Bidegree) -> Bidegree {
        Bidegree { i: self.i + other.i, j: self.j + other.j }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", -(self.i as i64), 2 * self.j)
    }
}

/// Square-free monomial `u_ω v_σ` with `ω ∩ σ = ∅`; the additive basis of `R*(K)`.
///
/// Ordered lexicographically on `(σ, ω)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub omega: VertexSet,
    pub sigma: VertexSet,
}

impl Monomial {
    pub const UNIT: Monomial = Monomial { omega: VertexSet::EMPTY, sigma: VertexSet::EMPTY };

    pub fn new(omega: VertexSet, sigma: VertexSet) -> Self {
        assert!(omega.is_disjoint(sigma), "u_{omega} v_{sigma}: exterior and polynomial parts overlap");
        Monomial { omega, sigma }
    }

    pub fn from_lists(omega: &[usize], sigma: &[usize]) -> Self {
        Self::new(VertexSet::from_vertices(omega.iter().copied()), VertexSet::from_vertices(sigma.iter().copied()))
    }

    pub fn u(k: usize) -> Self {
        Self::new(VertexSet::singleton(k), VertexSet::EMPTY)
    }

    pub fn v(k: usize) -> Self {
        Self::new(VertexSet::EMPTY, VertexSet::singleton(k))
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree { i: self.omega.len(), j: self.omega.len() + self.sigma.len() }
    }

    pub fn total_degree(&self) -> usize {
        self.omega.len() + 2 * self.sigma.len()
    }

    /// `ω ∪ σ`, preserved by the differential.
    pub fn support(&self) -> VertexSet {
        self.omega.union(self.sigma)
    }

    /// Parity of the exterior part.
    pub fn is_odd(&self) -> bool {
        self.omega.len() % 2 == 1
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sigma.cmp(&other.sigma).then(self.omega.cmp(&other.omega))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_product(f: &mut fmt::Formatter<'_>, omega: VertexSet, powers: &[(usize, u32)]) -> fmt::Result {
    if omega.is_empty() && powers.is_empty() {
        return write!(f, "1");
    }
    for k in omega.iter() {
        write!(f, "u{k}")?;
    }
    for &(k, e) in powers {
        if e == 1 {
            write!(f, "v{k}")?;
        } else {
            write!(f, "v{k}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let powers: Vec<(usize, u32)> = self.sigma.iter().map(|k| (k, 1)).collect();
        write_product(f, self.omega, &powers)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Basis element `u_ω v_1^{a_1} ... v_m^{a_m}` of `E_m = Λ[u_1..u_m] ⊗ ℤ[v_1..v_m]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EMonomial {
    pub omega: VertexSet,
    /// `exponents[k - 1]` is the power of `v_k`
    pub exponents: Vec<u32>,
}

impl EMonomial {
    pub fn new(omega: VertexSet, exponents: Vec<u32>) -> Self {
        debug_assert!(omega.max().is_none_or(|v| v <= exponents.len()));
        EMonomial { omega, exponents }
    }

    pub fn unit(m: usize) -> Self {
        EMonomial { omega: VertexSet::EMPTY, exponents: vec![0; m] }
    }

    pub fn m(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponent(&self, k: usize) -> u32 {
        self.exponents[k - 1]
    }

    /// Vertices with a positive exponent.
    pub fn polynomial_support(&self) -> VertexSet {
        VertexSet::from_vertices(self.exponents.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, _)| k + 1))
    }

    pub fn polynomial_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn total_degree(&self) -> usize {
        self.omega.len() + 2 * self.polynomial_degree() as usize
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree { i: self.omega.len(), j: self.omega.len() + self.polynomial_degree() as usize }
    }

    pub fn is_odd(&self) -> bool {
        self.omega.len() % 2 == 1
    }

    /// The same element viewed in `E_m`.
    pub fn from_monomial(m: usize, mono: &Monomial) -> Self {
        let mut exponents = vec![0; m];
        for k in mono.sigma.iter() {
            exponents[k - 1] = 1;
        }
        EMonomial { omega: mono.omega, exponents }
    }

    /// `Some` when this is square-free and disjoint from the exterior part.
    pub fn as_monomial(&self) -> Option<Monomial> {
        let sigma = self.polynomial_support();
        let square_free = self.exponents.iter().all(|&e| e <= 1);
        (square_free && sigma.is_disjoint(self.omega)).then_some(Monomial { omega: self.omega, sigma })
    }
}

impl fmt::Display for EMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let powers: Vec<(usize, u32)> =
            self.exponents.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, &e)| (k + 1, e)).collect();
        write_product(f, self.omega, &powers)
    }
}

impl fmt::Debug for EMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
