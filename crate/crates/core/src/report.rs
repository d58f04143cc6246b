//! Versioned JSON documents emitted by the command line.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cellular::{cells, CellCensus};
use crate::engine::{BettiTable, RingPresentation};
use crate::koszul::Bidegree;
use crate::linalg::{AbelianGroup, Order};
use crate::simplicial::SimplicialComplex;
use crate::verify::SuiteReport;

pub const SCHEMA: &str = "macring/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j2: usize,
    pub rank: usize,
    #[serde(with = "crate::json::bigint_vec")]
    pub torsion: Vec<BigInt>,
}

/// Nonzero entries of the bigraded table, ordered by `(i, j2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub schema: String,
    pub m: usize,
    pub entries: Vec<BettiEntry>,
}

impl BettiReport {
    pub fn from_table(table: &BettiTable) -> Self {
        let entries = table
            .entries
            .iter()
            .map(|(b, g)| BettiEntry { i: b.i, j2: b.j2(), rank: g.rank, torsion: g.torsion.clone() })
            .collect();
        BettiReport { schema: SCHEMA.to_string(), m: table.m, entries }
    }

    pub fn to_table(&self) -> BettiTable {
        let entries = self
            .entries
            .iter()
            .map(|e| (Bidegree::new(e.i, e.j2 / 2), AbelianGroup::new(e.rank, e.torsion.clone())))
            .filter(|(_, g)| !g.is_zero())
            .collect();
        BettiTable { m: self.m, entries }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub name: String,
    pub pass: bool,
    pub detail: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: String,
    pub suites: Vec<SuiteEntry>,
}

impl VerifyReport {
    pub fn from_suites(suites: &[SuiteReport]) -> Self {
        let suites = suites
            .iter()
            .map(|s| SuiteEntry { name: s.name.clone(), pass: s.pass, detail: s.detail.clone() })
            .collect();
        VerifyReport { schema: SCHEMA.to_string(), suites }
    }

    pub fn pass(&self) -> bool {
        self.suites.iter().all(|s| s.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub monomial: String,
    #[serde(with = "crate::json::bigint")]
    pub coeff: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub id: usize,
    pub i: usize,
    pub j2: usize,
    pub degree: usize,
    /// `null` for a free generator
    pub order: Option<String>,
    pub representative: Vec<TermEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: usize,
    pub right: usize,
    /// ids of the generators of the target bidegree, matching `coords`
    pub basis: Vec<usize>,
    #[serde(with = "crate::json::bigint_vec")]
    pub coords: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReport {
    pub schema: String,
    pub m: usize,
    pub generators: Vec<GeneratorEntry>,
    pub products: Vec<ProductEntry>,
}

impl RingReport {
    pub fn from_presentation(ring: &RingPresentation) -> Self {
        let generators = ring
            .generators
            .iter()
            .enumerate()
            .map(|(id, g)| GeneratorEntry {
                id,
                i: g.bidegree.i,
                j2: g.bidegree.j2(),
                degree: g.total_degree(),
                order: match &g.order {
                    Order::Infinite => None,
                    Order::Finite(n) => Some(n.to_string()),
                },
                representative: g
                    .representative
                    .iter()
                    .map(|(mono, c)| TermEntry { monomial: mono.to_string(), coeff: c.clone() })
                    .collect(),
            })
            .collect();
        let products = ring
            .products
            .iter()
            .map(|(&(a, b), coords)| {
                let target = ring.generators[a].bidegree + ring.generators[b].bidegree;
                ProductEntry { left: a, right: b, basis: ring.generators_in(target), coords: coords.clone() }
            })
            .collect();
        RingReport { schema: SCHEMA.to_string(), m: ring.m, generators, products }
    }
}

/// Cell counts and words of `𝒵_K`, indexed by dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellsReport {
    pub schema: String,
    pub m: usize,
    pub counts: Vec<usize>,
    pub euler_characteristic: i64,
    pub cells: Vec<Vec<String>>,
}

impl CellsReport {
    pub fn new(k: &SimplicialComplex, census: &CellCensus) -> Self {
        let top = census.counts.keys().max().map_or(0, |d| d + 1);
        let counts = (0..top).map(|d| census.counts.get(&d).copied().unwrap_or(0)).collect();
        let by_dim = cells(k);
        let cells = (0..top)
            .map(|d| by_dim.get(&d).map_or_else(Vec::new, |cs| cs.iter().map(|c| c.word(k.m())).collect()))
            .collect();
        CellsReport {
            schema: SCHEMA.to_string(),
            m: k.m(),
            counts,
            euler_characteristic: census.euler_characteristic,
            cells,
        }
    }
}
