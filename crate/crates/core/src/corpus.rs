//! Standard small complexes and a seeded random generator.

use rand::Rng;

use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;

/// Boundary of the simplex on `m` vertices, `∂Δ^{m-1}` (a sphere `S^{m-2}`).
pub fn simplex_boundary(m: usize) -> SimplicialComplex {
    let full = VertexSet::full(m);
    SimplicialComplex::new(m, full.iter().map(|v| full.without(v)))
}

/// `k` isolated vertices.
pub fn disjoint_points(k: usize) -> SimplicialComplex {
    SimplicialComplex::new(k, (1..=k).map(VertexSet::singleton))
}

/// The cycle graph on `n ≥ 3` vertices (a triangulated circle).
pub fn cycle(n: usize) -> SimplicialComplex {
    assert!(n >= 3, "a cycle needs at least three vertices");
    SimplicialComplex::new(n, (1..=n).map(|v| VertexSet::from_vertices([v, v % n + 1])))
}

/// The six-vertex triangulation of the real projective plane (hemi-icosahedron).
pub fn real_projective_plane() -> SimplicialComplex {
    SimplicialComplex::from_facets(
        6,
        &[
            &[1, 2, 3],
            &[1, 3, 4],
            &[1, 4, 5],
            &[1, 5, 6],
            &[1, 2, 6],
            &[2, 3, 5],
            &[2, 4, 5],
            &[2, 4, 6],
            &[3, 4, 6],
            &[3, 5, 6],
        ],
    )
}

/// Downward closure of a few random subsets of `[m]`. Ghost vertices are possible.
pub fn random_complex<R: Rng>(rng: &mut R, m: usize) -> SimplicialComplex {
    let count = rng.gen_range(1..=m + 2);
    let max_size = m.min(4);
    let facets: Vec<VertexSet> = (0..count)
        .map(|_| {
            let size = rng.gen_range(0..=max_size);
            let mut s = VertexSet::EMPTY;
            while s.len() < size {
                s = s.with(rng.gen_range(1..=m));
            }
            s
        })
        .collect();
    SimplicialComplex::new(m, facets)
}

/// A named complex for reports and test output.
#[derive(Clone, Debug)]
pub struct NamedComplex {
    pub name: String,
    pub complex: SimplicialComplex,
}

impl NamedComplex {
    pub fn new(name: impl Into<String>, complex: SimplicialComplex) -> Self {
        NamedComplex { name: name.into(), complex }
    }
}

/// The deterministic part of the test corpus: full simplices and sphere boundaries for `m ≤ 5`,
/// up to six disjoint points, the pentagon and hexagon, and `ℝP²` on six vertices.
pub fn standard_corpus() -> Vec<NamedComplex> {
    let mut out = Vec::new();
    for m in 1..=5 {
        out.push(NamedComplex::new(format!("simplex({m})"), SimplicialComplex::simplex(m)));
    }
    for m in 2..=5 {
        out.push(NamedComplex::new(format!("simplex_boundary({m})"), simplex_boundary(m)));
    }
    for k in 1..=6 {
        out.push(NamedComplex::new(format!("points({k})"), disjoint_points(k)));
    }
    out.push(NamedComplex::new("pentagon", cycle(5)));
    out.push(NamedComplex::new("hexagon", cycle(6)));
    out.push(NamedComplex::new("rp2_6", real_projective_plane()));
    out
}

/// `count` random complexes with `m` drawn from `2..=max_m`.
pub fn random_corpus<R: Rng>(rng: &mut R, count: usize, max_m: usize) -> Vec<NamedComplex> {
    (0..count)
        .map(|n| {
            let m = rng.gen_range(2..=max_m);
            NamedComplex::new(format!("random#{n}(m={m})"), random_complex(rng, m))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(simplex_boundary(3).num_faces(), 7);
        assert_eq!(disjoint_points(4).num_faces(), 5);
        assert_eq!(cycle(5).facets().len(), 5);
        let rp2 = real_projective_plane();
        assert_eq!(rp2.num_faces(), 1 + 6 + 15 + 10);
        // every edge of K_6 lies in exactly two triangles
        for e in rp2.faces().iter().filter(|f| f.len() == 2) {
            let n = rp2.facets().iter().filter(|t| e.is_subset(**t)).count();
            assert_eq!(n, 2, "{e}");
        }
    }
}
