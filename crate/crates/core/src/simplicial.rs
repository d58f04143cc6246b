//! Finite simplicial complexes on the ground set `[m]`, their JSON form, full subcomplexes and
//! augmented simplicial cochain complexes.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{LinalgError, ParseError};
use crate::linalg::{cohomology_group, AbelianGroup, IntMatrix};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A downward-closed family of subsets of `{1, ..., m}` containing `∅`.
///
/// Vertices `i` with `{i}` not a face ("ghost vertices") are allowed.
#[derive(Clone)]
pub struct SimplicialComplex {
    m: usize,
    /// sorted by cardinality, then lexicographically
    faces: Vec<VertexSet>,
    lookup: HashSet<VertexSet>,
}

impl SimplicialComplex {
    /// Downward closure of `facets` on the ground set `[m]`.
    ///
    /// Panics if a facet leaves `[m]` or `m` exceeds [`MAX_VERTICES`]; use [`parse_complex`] for
    /// untrusted input.
    pub fn new<I: IntoIterator<Item = VertexSet>>(m: usize, facets: I) -> Self {
        assert!(m <= MAX_VERTICES, "at most {MAX_VERTICES} vertices are supported");
        let ground = VertexSet::full(m);
        let mut lookup = HashSet::new();
        lookup.insert(VertexSet::EMPTY);
        for f in facets {
            assert!(f.is_subset(ground), "facet {f} is not contained in [{m}]");
            if lookup.contains(&f) {
                continue;
            }
            lookup.extend(f.subsets());
        }
        let mut faces: Vec<VertexSet> = lookup.iter().copied().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        SimplicialComplex { m, faces, lookup }
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_facets(m: usize, facets: &[&[usize]]) -> Self {
        Self::new(m, facets.iter().map(|f| VertexSet::from_vertices(f.iter().copied())))
    }

    /// The full simplex `Δ^{m-1}`.
    pub fn simplex(m: usize) -> Self {
        Self::new(m, [VertexSet::full(m)])
    }

    /// The complex whose only face is `∅`.
    pub fn empty(m: usize) -> Self {
        Self::new(m, [])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ground_set(&self) -> VertexSet {
        VertexSet::full(self.m)
    }

    pub fn is_face(&self, sigma: VertexSet) -> bool {
        self.lookup.contains(&sigma)
    }

    /// All faces in canonical order (by cardinality, then lexicographic).
    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Maximal faces in canonical order.
    pub fn facets(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .faces
            .iter()
            .copied()
            .filter(|f| self.ground_set().difference(*f).iter().all(|v| !self.lookup.contains(&f.with(v))))
            .collect();
        out.sort();
        out
    }

    /// Dimension of the largest face; `-1` when only `∅` is present.
    pub fn dim(&self) -> isize {
        self.faces.last().map_or(-1, |f| f.len() as isize - 1)
    }

    pub fn face_table(&self) -> FaceTable {
        let mut by_dimension: BTreeMap<isize, Vec<VertexSet>> = BTreeMap::new();
        for f in &self.faces {
            by_dimension.entry(f.len() as isize - 1).or_default().push(*f);
        }
        FaceTable { by_dimension }
    }

    /// `true` when every face of `self` is a face of `other`, on the same ground set.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.m == other.m && self.faces.iter().all(|f| other.is_face(*f))
    }

    /// The full subcomplex `K_ω = {σ ∈ K : σ ⊆ ω}`, relabeled onto `1..|ω|` in increasing order.
    ///
    /// The second value maps each new vertex `k` (at index `k - 1`) to its original label.
    pub fn full_subcomplex(&self, omega: VertexSet) -> (SimplicialComplex, Vec<usize>) {
        assert!(omega.is_subset(self.ground_set()), "{omega} is not contained in [{}]", self.m);
        let labels = omega.to_vec();
        let mut position = [0usize; 64];
        for (k, &v) in labels.iter().enumerate() {
            position[v] = k + 1;
        }
        let relabel = |f: VertexSet| VertexSet::from_vertices(f.iter().map(|v| position[v]));
        let faces = self.faces.iter().copied().filter(|f| f.is_subset(omega)).map(relabel);
        (SimplicialComplex::new(labels.len(), faces), labels)
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            m: self.m as i64,
            facets: self.facets().iter().map(|f| f.iter().map(|v| v as i64).collect()).collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("complex serializes")
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.faces == other.faces
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(m={}, facets=[", self.m)?;
        for (k, facet) in self.facets().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "])")
    }
}

/// Faces grouped by dimension, each list in lexicographic order. Dimension `-1` holds `∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceTable {
    pub by_dimension: BTreeMap<isize, Vec<VertexSet>>,
}

impl FaceTable {
    pub fn faces(&self, d: isize) -> &[VertexSet] {
        self.by_dimension.get(&d).map_or(&[], |v| v.as_slice())
    }
}

/// On-disk form: `{"m": <int>, "facets": [[<int>...], ...]}` with 1-based vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub m: i64,
    pub facets: Vec<Vec<i64>>,
}

fn invalid(location: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Invalid { location: location.into(), message: message.into() }
}

/// Parses the JSON input format and returns the downward closure of the listed facets.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    let doc: ComplexJson = serde_json::from_str(text).map_err(|e| ParseError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    complex_from_json(&doc)
}

pub fn complex_from_json(doc: &ComplexJson) -> Result<SimplicialComplex, ParseError> {
    if doc.m < 1 {
        return Err(invalid("m", format!("ground set size must be at least 1, got {}", doc.m)));
    }
    if doc.m > MAX_VERTICES as i64 {
        return Err(invalid("m", format!("at most {MAX_VERTICES} vertices are supported, got {}", doc.m)));
    }
    let m = doc.m as usize;
    let mut facets = Vec::with_capacity(doc.facets.len());
    for (i, facet) in doc.facets.iter().enumerate() {
        let mut set = VertexSet::EMPTY;
        for (k, &v) in facet.iter().enumerate() {
            if v < 1 || v > doc.m {
                return Err(invalid(
                    format!("facets[{i}][{k}]"),
                    format!("vertex out of range: {v} is not in 1..={m}"),
                ));
            }
            let v = v as usize;
            if set.contains(v) {
                return Err(invalid(format!("facets[{i}][{k}]"), format!("duplicate vertex {v} within a facet")));
            }
            set = set.with(v);
        }
        facets.push(set);
    }
    Ok(SimplicialComplex::new(m, facets))
}

/// The augmented cochain complex `0 -> C^{-1} -> C^0 -> C^1 -> ...` of a simplicial complex, with
/// `C^{-1}` spanned by the empty face. Its cohomology is reduced cohomology.
#[derive(Clone, Debug)]
pub struct ReducedCochainComplex {
    pub table: FaceTable,
    coboundaries: BTreeMap<isize, IntMatrix>,
}

impl ReducedCochainComplex {
    /// `δ^d : C^d -> C^{d+1}`, rows indexed by `(d+1)`-faces and columns by `d`-faces.
    pub fn coboundary(&self, d: isize) -> IntMatrix {
        match self.coboundaries.get(&d) {
            Some(m) => m.clone(),
            None => IntMatrix::zeros(self.table.faces(d + 1).len(), self.table.faces(d).len()),
        }
    }

    /// Reduced cohomology `H̃^d` with ℤ coefficients.
    pub fn reduced_cohomology(&self, d: isize) -> Result<AbelianGroup, LinalgError> {
        cohomology_group(&self.coboundary(d - 1), &self.coboundary(d))
    }

    /// Largest `d` with `C^d ≠ 0`.
    pub fn top_degree(&self) -> isize {
        *self.table.by_dimension.keys().next_back().unwrap_or(&-1)
    }
}

pub fn reduced_cochain_complex(k: &SimplicialComplex) -> ReducedCochainComplex {
    let table = k.face_table();
    let mut coboundaries = BTreeMap::new();
    for (&d, faces) in &table.by_dimension {
        let upper = table.faces(d + 1);
        let index: HashMap<VertexSet, usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let mut delta = IntMatrix::zeros(upper.len(), faces.len());
        for (row, tau) in upper.iter().enumerate() {
            for (pos, v) in tau.iter().enumerate() {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                delta.set(row, index[&tau.without(v)], BigInt::from(sign));
            }
        }
        coboundaries.insert(d, delta);
    }
    ReducedCochainComplex { table, coboundaries }
}
