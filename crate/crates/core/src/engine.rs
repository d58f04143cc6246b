//! Bigraded cohomology of `R*(K)` and its ring structure.
//!
//! The differential preserves the support `ω ∪ σ` of a monomial, so every bidegree splits into
//! independent blocks, one per support set `S ⊆ [m]` with `|S| = j`. The default path computes the
//! blocks separately (in parallel); the monolithic path assembles whole bidegrees and is kept as a
//! cross-check.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::EngineError;
use crate::koszul::{
    basis_in, basis_with_support, differential_monomial, differential_unchecked, multiply_chains, Bidegree, Chain,
    Monomial,
};
use crate::linalg::{
    cohomology_at, cohomology_group, solve, AbelianGroup, CohomologyData, IntMatrix, Order, SparseVec,
};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug)]
pub struct EngineOptions {
    /// Split every bidegree by support set.
    pub split_by_support: bool,
    /// Process support blocks on the rayon pool.
    pub parallel: bool,
    /// Shuffle each block's basis before assembling matrices. Only changes the chosen generators.
    pub basis_shuffle_seed: Option<u64>,
    /// Check that every product cocycle minus its coordinate expansion is a coboundary.
    pub verify_products: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions { split_by_support: true, parallel: true, basis_shuffle_seed: None, verify_products: true }
    }
}

/// Cohomology groups only, keyed by bidegree; zero groups are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub m: usize,
    pub entries: BTreeMap<Bidegree, AbelianGroup>,
}

impl BettiTable {
    pub fn group(&self, bidegree: Bidegree) -> AbelianGroup {
        self.entries.get(&bidegree).cloned().unwrap_or_default()
    }

    /// `H^n(𝒵_K)` as the sum of the bidegrees with `2j - i = n`.
    pub fn total_degree(&self, n: usize) -> AbelianGroup {
        self.entries.iter().filter(|(b, _)| b.total() == n).map(|(_, g)| g.clone()).sum()
    }

    /// `Σ_n (-1)^n rank H^n`.
    pub fn euler_characteristic(&self) -> i64 {
        self.entries.iter().map(|(b, g)| if b.total() % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) }).sum()
    }
}

/// Cohomology with chosen generators, for every bidegree with a nonempty basis.
#[derive(Clone, Debug)]
pub struct BigradedTable {
    pub m: usize,
    pub entries: BTreeMap<Bidegree, CohomologyData<Monomial>>,
}

impl BigradedTable {
    pub fn betti(&self) -> BettiTable {
        BettiTable {
            m: self.m,
            entries: self
                .entries
                .iter()
                .filter(|(_, d)| !d.group.is_zero())
                .map(|(b, d)| (*b, d.group.clone()))
                .collect(),
        }
    }

    pub fn data(&self, bidegree: Bidegree) -> Option<&CohomologyData<Monomial>> {
        self.entries.get(&bidegree)
    }

    /// Number of chosen generators in a bidegree.
    pub fn num_generators(&self, bidegree: Bidegree) -> usize {
        self.entries.get(&bidegree).map_or(0, |d| d.generators.len())
    }

    /// Cocycle `Σ c_l g_l` for class coordinates `c` in `bidegree`.
    pub fn representative(&self, bidegree: Bidegree, coords: &[BigInt]) -> Result<Chain, EngineError> {
        let mut out = Chain::zero();
        if coords.iter().all(Zero::is_zero) {
            return Ok(out);
        }
        let data = self.entries.get(&bidegree).ok_or(EngineError::NoSuchClass(coords.len()))?;
        if coords.len() != data.generators.len() {
            return Err(EngineError::NoSuchClass(coords.len()));
        }
        for (g, c) in data.generators.iter().zip(coords) {
            out += &Chain::from(g.representative.clone()).scale(c);
        }
        Ok(out)
    }

    /// Unit vector of generator `index` in `bidegree`.
    pub fn unit_vector(&self, bidegree: Bidegree, index: usize) -> Vec<BigInt> {
        let n = self.num_generators(bidegree);
        (0..n).map(|l| if l == index { BigInt::one() } else { BigInt::zero() }).collect()
    }
}

/// The complex of one support set `S`: level `i` is spanned by `u_{S∖σ} v_σ` with `|S∖σ| = i`.
struct SupportBlock {
    levels: Vec<Vec<Monomial>>,
}

impl SupportBlock {
    fn new(k: &SimplicialComplex, support: VertexSet, shuffle: Option<u64>) -> Self {
        let levels = (0..=support.len())
            .map(|i| {
                let mut b = basis_with_support(k, support, i);
                if let Some(seed) = shuffle {
                    let mut rng =
                        ChaCha8Rng::seed_from_u64(seed ^ support.bits().wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ i as u64);
                    b.shuffle(&mut rng);
                }
                b
            })
            .collect();
        SupportBlock { levels }
    }

    fn level(&self, i: usize) -> &[Monomial] {
        self.levels.get(i).map_or(&[], |v| v.as_slice())
    }

    /// `d : level i -> level i-1`.
    fn differential(&self, k: &SimplicialComplex, i: usize) -> IntMatrix {
        let target = if i == 0 { &[][..] } else { self.level(i - 1) };
        assemble(k, self.level(i), target)
    }
}

/// Matrix of `d` from `source` to `target` (columns indexed by `source`).
fn assemble(k: &SimplicialComplex, source: &[Monomial], target: &[Monomial]) -> IntMatrix {
    let index: HashMap<Monomial, usize> = target.iter().enumerate().map(|(r, m)| (*m, r)).collect();
    let mut d = IntMatrix::zeros(target.len(), source.len());
    for (c, mono) in source.iter().enumerate() {
        for (t, coeff) in differential_monomial(k, mono).iter() {
            let r = *index.get(t).expect("differential leaves the target basis");
            d.set(r, c, coeff.clone());
        }
    }
    d
}

fn supports(k: &SimplicialComplex) -> Vec<VertexSet> {
    let mut s: Vec<VertexSet> = k.ground_set().subsets().collect();
    s.sort();
    s
}

fn map_blocks<T: Send>(parallel: bool, supports: &[VertexSet], f: impl Fn(VertexSet) -> T + Sync) -> Vec<T> {
    if parallel {
        supports.par_iter().map(|&s| f(s)).collect()
    } else {
        supports.iter().map(|&s| f(s)).collect()
    }
}

/// Groups `H^{-i,2j}(R*(K))` with the default options.
pub fn betti_table(k: &SimplicialComplex) -> Result<BettiTable, EngineError> {
    betti_table_with(k, &EngineOptions::default())
}

pub fn betti_table_with(k: &SimplicialComplex, opts: &EngineOptions) -> Result<BettiTable, EngineError> {
    let mut entries: BTreeMap<Bidegree, Vec<AbelianGroup>> = BTreeMap::new();
    if opts.split_by_support {
        let all = supports(k);
        let blocks = map_blocks(opts.parallel, &all, |s| -> Result<Vec<(Bidegree, AbelianGroup)>, EngineError> {
            let block = SupportBlock::new(k, s, opts.basis_shuffle_seed);
            let mut out = Vec::new();
            for i in 0..=s.len() {
                if block.level(i).is_empty() {
                    continue;
                }
                let g = cohomology_group(&block.differential(k, i + 1), &block.differential(k, i))?;
                out.push((Bidegree::new(i, s.len()), g));
            }
            Ok(out)
        });
        for block in blocks {
            for (b, g) in block? {
                entries.entry(b).or_default().push(g);
            }
        }
    } else {
        for b in populated_bidegrees(k) {
            let (d_in, d_out) = monolithic_fragment(k, b, opts.basis_shuffle_seed);
            entries.entry(b).or_default().push(cohomology_group(&d_in, &d_out)?);
        }
    }
    Ok(BettiTable {
        m: k.m(),
        entries: entries
            .into_iter()
            .map(|(b, gs)| (b, gs.into_iter().sum::<AbelianGroup>()))
            .filter(|(_, g)| !g.is_zero())
            .collect(),
    })
}

fn populated_bidegrees(k: &SimplicialComplex) -> Vec<Bidegree> {
    let mut out = Vec::new();
    for j in 0..=k.m() {
        for i in 0..=j {
            let b = Bidegree::new(i, j);
            if !basis_in(k, b).is_empty() {
                out.push(b);
            }
        }
    }
    out
}

fn shuffled_basis(k: &SimplicialComplex, b: Bidegree, seed: Option<u64>) -> Vec<Monomial> {
    let mut basis = basis_in(k, b);
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((b.i as u64) << 32) ^ b.j as u64);
        basis.shuffle(&mut rng);
    }
    basis
}

fn monolithic_fragment(k: &SimplicialComplex, b: Bidegree, seed: Option<u64>) -> (IntMatrix, IntMatrix) {
    let mid = shuffled_basis(k, b, seed);
    let below = shuffled_basis(k, Bidegree::new(b.i + 1, b.j), seed);
    let above = if b.i == 0 { Vec::new() } else { shuffled_basis(k, Bidegree::new(b.i - 1, b.j), seed) };
    (assemble(k, &below, &mid), assemble(k, &mid, &above))
}

/// Full cohomology data (generators and coordinate functionals) with the default options.
pub fn bigraded_cohomology(k: &SimplicialComplex) -> Result<BigradedTable, EngineError> {
    bigraded_cohomology_with(k, &EngineOptions::default())
}

pub fn bigraded_cohomology_with(k: &SimplicialComplex, opts: &EngineOptions) -> Result<BigradedTable, EngineError> {
    let mut parts: BTreeMap<Bidegree, Vec<CohomologyData<Monomial>>> = BTreeMap::new();
    if opts.split_by_support {
        let all = supports(k);
        let blocks =
            map_blocks(opts.parallel, &all, |s| -> Result<Vec<(Bidegree, CohomologyData<Monomial>)>, EngineError> {
                let block = SupportBlock::new(k, s, opts.basis_shuffle_seed);
                let mut out = Vec::new();
                for i in 0..=s.len() {
                    let basis = block.level(i);
                    if basis.is_empty() {
                        continue;
                    }
                    let data = cohomology_at(&block.differential(k, i + 1), &block.differential(k, i))?;
                    out.push((Bidegree::new(i, s.len()), data.map_basis(|&idx| basis[idx])));
                }
                Ok(out)
            });
        for block in blocks {
            for (b, d) in block? {
                parts.entry(b).or_default().push(d);
            }
        }
    } else {
        for b in populated_bidegrees(k) {
            let mid = shuffled_basis(k, b, opts.basis_shuffle_seed);
            let (d_in, d_out) = monolithic_fragment(k, b, opts.basis_shuffle_seed);
            let data = cohomology_at(&d_in, &d_out)?;
            parts.entry(b).or_default().push(data.map_basis(|&idx| mid[idx]));
        }
    }
    let entries = parts
        .into_iter()
        .map(|(b, datas)| {
            let group = datas.iter().map(|d| d.group.clone()).sum();
            let generators = datas.into_iter().flat_map(|d| d.generators).collect();
            (b, CohomologyData { group, generators })
        })
        .collect();
    Ok(BigradedTable { m: k.m(), entries })
}

/// Matrix of `d` into `bidegree` restricted to one support set, with its column basis.
fn incoming_block(k: &SimplicialComplex, support: VertexSet, i: usize) -> (IntMatrix, Vec<Monomial>, Vec<Monomial>) {
    let source = basis_with_support(k, support, i + 1);
    let target = basis_with_support(k, support, i);
    (assemble(k, &source, &target), source, target)
}

/// `true` when `z` is a coboundary in `bidegree`; checked support block by support block.
pub fn is_coboundary(k: &SimplicialComplex, bidegree: Bidegree, z: &Chain) -> bool {
    let mut by_support: BTreeMap<VertexSet, Vec<(Monomial, BigInt)>> = BTreeMap::new();
    for (mono, c) in z.iter() {
        if mono.bidegree() != bidegree {
            return false;
        }
        by_support.entry(mono.support()).or_default().push((*mono, c.clone()));
    }
    by_support.into_iter().all(|(s, terms)| {
        let (d, _, target) = incoming_block(k, s, bidegree.i);
        let index: HashMap<Monomial, usize> = target.iter().enumerate().map(|(r, m)| (*m, r)).collect();
        let b: SparseVec = terms.into_iter().map(|(m, c)| (index[&m], c)).collect();
        solve(&d, &b).is_some()
    })
}

/// Product of two classes, returned as the target bidegree and the coordinates of the product
/// class in that bidegree's generators (empty when the target group has no generators).
pub fn cup_on_cohomology(
    k: &SimplicialComplex,
    table: &BigradedTable,
    a: (Bidegree, &[BigInt]),
    b: (Bidegree, &[BigInt]),
    verify: bool,
) -> Result<(Bidegree, Vec<BigInt>), EngineError> {
    let target = a.0 + b.0;
    let x = table.representative(a.0, a.1)?;
    let y = table.representative(b.0, b.1)?;
    let product = multiply_chains(k, &x, &y);
    let Some(data) = table.data(target) else {
        return if product.is_zero() {
            Ok((target, Vec::new()))
        } else {
            Err(EngineError::ProductNotCocycle { i: target.i, j2: target.j2() })
        };
    };
    if !differential_unchecked(k, &product).is_zero() {
        return Err(EngineError::ProductNotCocycle { i: target.i, j2: target.j2() });
    }
    let coords = data.coordinates(product.as_map());
    if verify {
        let mut residual = product.clone();
        residual -= &table.representative(target, &coords)?;
        if !is_coboundary(k, target, &residual) {
            return Err(EngineError::ReductionFailed { i: target.i, j2: target.j2() });
        }
    }
    Ok((target, coords))
}

/// One additive generator of `H*(𝒵_K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingGenerator {
    pub bidegree: Bidegree,
    /// position among the generators of its bidegree
    pub index: usize,
    pub order: Order,
    pub representative: Chain,
}

impl RingGenerator {
    pub fn total_degree(&self) -> usize {
        self.bidegree.total()
    }
}

/// All additive generators and the products of every pair `(a, b)` with `a ≤ b`.
///
/// `products[(a, b)]` holds the coordinates of `g_a · g_b` in the generators of the bidegree
/// `bidegree(a) + bidegree(b)`, torsion coordinates reduced; pairs with zero product are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub m: usize,
    pub generators: Vec<RingGenerator>,
    pub products: BTreeMap<(usize, usize), Vec<BigInt>>,
}

impl RingPresentation {
    /// Generators of one bidegree, as indices into `generators`.
    pub fn generators_in(&self, bidegree: Bidegree) -> Vec<usize> {
        (0..self.generators.len()).filter(|&g| self.generators[g].bidegree == bidegree).collect()
    }

    /// Coordinates of `g_a · g_b` in the target bidegree, using graded commutativity for `a > b`.
    pub fn product(&self, a: usize, b: usize) -> Vec<BigInt> {
        let target = self.generators[a].bidegree + self.generators[b].bidegree;
        let n = self.generators_in(target).len();
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let Some(coords) = self.products.get(&(lo, hi)) else {
            return vec![BigInt::zero(); n];
        };
        let odd = self.generators[a].total_degree() % 2 == 1 && self.generators[b].total_degree() % 2 == 1;
        if a > b && odd {
            let gens = self.generators_in(target);
            coords.iter().zip(gens).map(|(c, g)| self.generators[g].order.reduce(-c)).collect()
        } else {
            coords.clone()
        }
    }

    /// Matrix of the pairing `H^{p} ⊗ H^{q} -> H^{p+q}` onto coordinate `target_index` of the
    /// target bidegree; rows are the generators of `left`, columns those of `right`.
    pub fn pairing_matrix(&self, left: Bidegree, right: Bidegree, target_index: usize) -> Vec<Vec<BigInt>> {
        let rows = self.generators_in(left);
        let cols = self.generators_in(right);
        rows.iter()
            .map(|&a| cols.iter().map(|&b| self.product(a, b).get(target_index).cloned().unwrap_or_default()).collect())
            .collect()
    }
}

pub fn ring_presentation(k: &SimplicialComplex) -> Result<RingPresentation, EngineError> {
    ring_presentation_with(k, &EngineOptions::default())
}

pub fn ring_presentation_with(k: &SimplicialComplex, opts: &EngineOptions) -> Result<RingPresentation, EngineError> {
    let table = bigraded_cohomology_with(k, opts)?;
    ring_presentation_from(k, &table, opts.verify_products)
}

pub fn ring_presentation_from(
    k: &SimplicialComplex,
    table: &BigradedTable,
    verify: bool,
) -> Result<RingPresentation, EngineError> {
    let mut generators = Vec::new();
    for (b, data) in &table.entries {
        for (index, g) in data.generators.iter().enumerate() {
            generators.push(RingGenerator {
                bidegree: *b,
                index,
                order: g.order.clone(),
                representative: Chain::from(g.representative.clone()),
            });
        }
    }
    let mut products = BTreeMap::new();
    for a in 0..generators.len() {
        for b in a..generators.len() {
            let (ga, gb) = (&generators[a], &generators[b]);
            let target = ga.bidegree + gb.bidegree;
            if table.num_generators(target) == 0 {
                continue;
            }
            let ua = table.unit_vector(ga.bidegree, ga.index);
            let ub = table.unit_vector(gb.bidegree, gb.index);
            let (_, coords) = cup_on_cohomology(k, table, (ga.bidegree, &ua), (gb.bidegree, &ub), verify)?;
            if coords.iter().any(|c| !c.is_zero()) {
                products.insert((a, b), coords);
            }
        }
    }
    Ok(RingPresentation { m: k.m(), generators, products })
}

/// `Σ_n rank(H^n) t^n`, stored densely by exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareSeries(pub Vec<usize>);

impl PoincareSeries {
    pub fn coefficient(&self, n: usize) -> usize {
        self.0.get(n).copied().unwrap_or(0)
    }

    pub fn from_coefficients(pairs: &[(usize, usize)]) -> Self {
        let len = pairs.iter().map(|&(n, _)| n + 1).max().unwrap_or(0);
        let mut c = vec![0; len];
        for &(n, r) in pairs {
            c[n] += r;
        }
        PoincareSeries(c).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(n, &c)| match (n, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (n, 1) => format!("t^{n}"),
                (n, c) => format!("{c}t^{n}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

pub fn poincare_series(table: &BettiTable) -> PoincareSeries {
    let pairs: Vec<(usize, usize)> = table.entries.iter().map(|(b, g)| (b.total(), g.rank)).collect();
    PoincareSeries::from_coefficients(&pairs)
}
