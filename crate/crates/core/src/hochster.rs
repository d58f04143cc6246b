//! Additive cross-check through Hochster's decomposition
//! `Tor^{-i,2j}(ℤ[K], ℤ) ≅ ⊕_{|ω| = j} H̃^{j-i-1}(K_ω; ℤ)`.
//!
//! Everything here is built from full subcomplexes and their augmented simplicial cochain
//! complexes; nothing is shared with the Koszul model except the integer linear algebra.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::engine::{betti_table_with, BettiTable, EngineOptions};
use crate::error::{EngineError, LinalgError};
use crate::koszul::Bidegree;
use crate::linalg::AbelianGroup;
use crate::simplicial::{reduced_cochain_complex, SimplicialComplex};
use crate::vertex_set::VertexSet;

/// Where the reduced cohomology of `K_ω` in degree `d` is placed: `d = j - i + offset`.
/// The correct offset is `-1`; other values exist to test the comparison harness.
pub const HOCHSTER_OFFSET: isize = -1;

/// One nonzero summand `H̃^degree(K_ω)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contribution {
    pub omega: VertexSet,
    pub degree: isize,
    pub group: AbelianGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub m: usize,
    pub groups: BTreeMap<Bidegree, AbelianGroup>,
    pub contributions: Vec<Contribution>,
}

impl OracleReport {
    pub fn group(&self, b: Bidegree) -> AbelianGroup {
        self.groups.get(&b).cloned().unwrap_or_default()
    }
}

/// `⊕_{|ω|=j} H̃^{j-i-1}(K_ω)`.
pub fn oracle_bigraded(k: &SimplicialComplex, i: usize, j: usize) -> Result<AbelianGroup, LinalgError> {
    oracle_bigraded_shifted(k, i, j, HOCHSTER_OFFSET)
}

/// Like [`oracle_bigraded`] with the reduced degree `j - i + offset`.
pub fn oracle_bigraded_shifted(
    k: &SimplicialComplex,
    i: usize,
    j: usize,
    offset: isize,
) -> Result<AbelianGroup, LinalgError> {
    assert!(j <= k.m(), "j = {j} exceeds m = {}", k.m());
    let degree = j as isize - i as isize + offset;
    let mut parts = Vec::new();
    for omega in k.ground_set().subsets_of_size(j) {
        let (sub, _) = k.full_subcomplex(omega);
        parts.push(reduced_cochain_complex(&sub).reduced_cohomology(degree)?);
    }
    Ok(parts.into_iter().sum())
}

/// All bidegrees at once: every full subcomplex is visited once and each of its reduced
/// cohomology groups is routed to its bidegree.
pub fn oracle_report(k: &SimplicialComplex) -> Result<OracleReport, LinalgError> {
    oracle_report_shifted(k, HOCHSTER_OFFSET)
}

pub fn oracle_report_shifted(k: &SimplicialComplex, offset: isize) -> Result<OracleReport, LinalgError> {
    let mut omegas: Vec<VertexSet> = k.ground_set().subsets().collect();
    omegas.sort();
    let per_subset: Vec<Result<Vec<Contribution>, LinalgError>> = omegas
        .par_iter()
        .map(|&omega| {
            let (sub, _) = k.full_subcomplex(omega);
            let complex = reduced_cochain_complex(&sub);
            let mut out = Vec::new();
            for degree in -1..=complex.top_degree() {
                let group = complex.reduced_cohomology(degree)?;
                if !group.is_zero() {
                    out.push(Contribution { omega, degree, group });
                }
            }
            Ok(out)
        })
        .collect();

    let mut contributions = Vec::new();
    let mut buckets: BTreeMap<Bidegree, Vec<AbelianGroup>> = BTreeMap::new();
    for part in per_subset {
        for c in part? {
            let j = c.omega.len() as isize;
            let i = j - c.degree + offset;
            if i >= 0 && i <= j {
                buckets.entry(Bidegree::new(i as usize, j as usize)).or_default().push(c.group.clone());
            }
            contributions.push(c);
        }
    }
    let groups = buckets
        .into_iter()
        .map(|(b, gs)| (b, gs.into_iter().sum::<AbelianGroup>()))
        .filter(|(_, g)| !g.is_zero())
        .collect();
    Ok(OracleReport { m: k.m(), groups, contributions })
}

/// A bidegree where the Koszul engine and the oracle disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub bidegree: Bidegree,
    pub engine: AbelianGroup,
    pub oracle: AbelianGroup,
}

/// Compares two tables over every bidegree `0 ≤ i ≤ j ≤ m`.
pub fn diff_tables(engine: &BettiTable, oracle: &OracleReport) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for j in 0..=engine.m {
        for i in 0..=j {
            let b = Bidegree::new(i, j);
            let (e, o) = (engine.group(b), oracle.group(b));
            if e != o {
                out.push(Mismatch { bidegree: b, engine: e, oracle: o });
            }
        }
    }
    out
}

/// Engine vs. oracle on `K`; an empty list means they agree everywhere.
pub fn compare(k: &SimplicialComplex) -> Result<Vec<Mismatch>, EngineError> {
    compare_shifted(k, HOCHSTER_OFFSET)
}

pub fn compare_shifted(k: &SimplicialComplex, offset: isize) -> Result<Vec<Mismatch>, EngineError> {
    let engine = betti_table_with(k, &EngineOptions::default())?;
    let oracle = oracle_report_shifted(k, offset)?;
    Ok(diff_tables(&engine, &oracle))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_entry_from_empty_subcomplex() {
        let k = SimplicialComplex::from_facets(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(oracle_bigraded(&k, 0, 0).unwrap(), AbelianGroup::free(1));
        assert_eq!(oracle_bigraded(&k, 1, 3).unwrap(), AbelianGroup::free(1));
        assert!(oracle_bigraded(&k, 0, 3).unwrap().is_zero());
    }

    #[test]
    fn report_agrees_with_pointwise_oracle() {
        let k = SimplicialComplex::from_facets(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let report = oracle_report(&k).unwrap();
        for j in 0..=5 {
            for i in 0..=j {
                assert_eq!(report.group(Bidegree::new(i, j)), oracle_bigraded(&k, i, j).unwrap(), "({i},{j})");
            }
        }
        let total: AbelianGroup = report.contributions.iter().map(|c| c.group.clone()).sum();
        let by_bidegree: AbelianGroup = report.groups.values().cloned().sum();
        assert_eq!(total, by_bidegree);
    }

    #[test]
    fn shifted_oracle_is_caught() {
        let k = SimplicialComplex::from_facets(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(compare(&k).unwrap().is_empty());
        let bad = compare_shifted(&k, 0).unwrap();
        assert!(bad.iter().any(|m| m.bidegree == Bidegree::ZERO), "{bad:?}");
    }
}
