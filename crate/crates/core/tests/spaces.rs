mod common;

use macring::cellular::census;
use macring::corpus::{
    cycle, disjoint_points, random_complex, real_projective_plane, simplex_boundary, standard_corpus,
};
use macring::engine::{
    betti_table, betti_table_with, bigraded_cohomology_with, poincare_series, ring_presentation_from, EngineOptions,
};
use macring::koszul::Bidegree;
use macring::linalg::AbelianGroup;
use macring::simplicial::SimplicialComplex;
use macring::vertex_set::VertexSet;
use num_bigint::BigInt;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn disjoint_points_poincare_series() {
    // 𝒵_K for k points is a wedge of spheres; t^{j+1} has coefficient (j-1) C(k, j)
    for k in 2..=6 {
        let series = poincare_series(&betti_table(&disjoint_points(k)).unwrap());
        assert_eq!(series.coefficient(0), 1);
        for j in 2..=k {
            assert_eq!(series.coefficient(j + 1), (j - 1) * common::binomial(k, j), "k={k}, j={j}");
        }
        let expected: usize = 1 + (2..=k).map(|j| (j - 1) * common::binomial(k, j)).sum::<usize>();
        assert_eq!(series.0.iter().sum::<usize>(), expected, "nothing else, k={k}");
    }
}

#[test]
fn sphere_boundaries_give_odd_spheres() {
    // ∂Δ^{m-1} gives 𝒵_K = S^{2m-1}
    for m in 2..=5 {
        let t = betti_table(&simplex_boundary(m)).unwrap();
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.group(Bidegree::new(1, m)), AbelianGroup::free(1));
        assert_eq!(poincare_series(&t).coefficient(2 * m - 1), 1);
    }
}

fn simplicial_coboundary(k: &SimplicialComplex, d: usize) -> common::Dense {
    let src: Vec<VertexSet> = k.faces().iter().copied().filter(|f| f.len() == d + 1).collect();
    let dst: Vec<VertexSet> = k.faces().iter().copied().filter(|f| f.len() == d + 2).collect();
    dst.iter()
        .map(|tau| {
            let verts = tau.to_vec();
            src.iter()
                .map(|s| match verts.iter().position(|&v| tau.without(v) == *s) {
                    Some(p) => BigInt::from(if p % 2 == 0 { 1 } else { -1 }),
                    None => BigInt::from(0),
                })
                .collect()
        })
        .collect()
}

#[test]
fn projective_plane_has_two_torsion_in_degree_nine() {
    let k = real_projective_plane();
    // H^2(ℝP²) = coker δ^1 computed from determinantal divisors
    let delta1 = simplicial_coboundary(&k, 1);
    assert_eq!(delta1.len(), 10);
    let r = common::rank(&delta1);
    assert_eq!(r, 10, "δ^1 is onto over ℚ");
    assert_eq!(common::minor_gcd(&delta1, 10), BigInt::from(2), "coker δ^1 has order 2");
    // H^1 = 0: ker δ^1 equals im δ^0 over ℤ, checked by ranks over ℚ and 𝔽_2
    let delta0 = simplicial_coboundary(&k, 0);
    assert_eq!(15 - r, common::rank(&delta0));
    assert_eq!(15 - common::rank_mod_p(&delta1, 2), common::rank_mod_p(&delta0, 2) + 1);

    // Hochster places H̃^2(K) (ω = [6]) at j = 6, i = j - 2 - 1 = 3
    let t = betti_table(&k).unwrap();
    assert_eq!(t.group(Bidegree::new(3, 6)), AbelianGroup::new(0, vec![BigInt::from(2)]));
    assert_eq!(Bidegree::new(3, 6).total(), 9);
    assert!(t.entries.iter().filter(|(b, _)| **b != Bidegree::new(3, 6)).all(|(_, g)| g.torsion.is_empty()));
    assert!(t.group(Bidegree::new(4, 6)).torsion.is_empty());
}

#[test]
fn bidegrees_lie_in_the_triangle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..15 {
        let k = random_complex(&mut rng, 6);
        let t = betti_table(&k).unwrap();
        assert!(t.entries.keys().all(|b| b.i <= b.j && b.j <= k.m()), "{k:?}");
        assert_eq!(t.group(Bidegree::ZERO), AbelianGroup::free(1));
    }
}

#[test]
fn euler_characteristic_matches_cells() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut corpus: Vec<SimplicialComplex> = standard_corpus().into_iter().map(|n| n.complex).collect();
    corpus.extend((0..10).map(|_| random_complex(&mut rng, 6)));
    for k in corpus {
        assert_eq!(betti_table(&k).unwrap().euler_characteristic(), census(&k).euler_characteristic, "{k:?}");
    }
}

#[test]
fn split_and_monolithic_paths_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..8 {
        let k = random_complex(&mut rng, 5);
        let split = betti_table(&k).unwrap();
        let mono = EngineOptions { split_by_support: false, parallel: false, ..Default::default() };
        assert_eq!(betti_table_with(&k, &mono).unwrap(), split, "{k:?}");
    }
}

#[test]
fn pairing_is_independent_of_representatives() {
    let k = cycle(5);
    let (h3, h4, h7) = (Bidegree::new(1, 2), Bidegree::new(2, 3), Bidegree::new(3, 5));
    let mut dets = Vec::new();
    for seed in [None, Some(1), Some(2), Some(3)] {
        let opts = EngineOptions { split_by_support: seed.is_none(), basis_shuffle_seed: seed, ..Default::default() };
        let table = bigraded_cohomology_with(&k, &opts).unwrap();
        let ring = ring_presentation_from(&k, &table, true).unwrap();
        assert_eq!(ring.generators_in(h7).len(), 1);
        let pairing = ring.pairing_matrix(h3, h4, 0);
        assert_eq!(pairing.len(), 5);
        dets.push(common::determinant(&pairing).abs());
    }
    assert!(dets.iter().all(|d| *d == BigInt::from(1)), "{dets:?}");
}

#[test]
fn small_rings() {
    let point = macring::ring_presentation(&SimplicialComplex::simplex(1)).unwrap();
    assert_eq!(point.generators.len(), 1);
    assert_eq!(point.generators[0].bidegree, Bidegree::ZERO);

    let two = disjoint_points(2);
    let ring = macring::ring_presentation(&two).unwrap();
    assert_eq!(ring.generators.len(), 2);
    assert_eq!(ring.generators[1].bidegree, Bidegree::new(1, 2));
    assert!(ring.product(1, 1).iter().all(|c| c == &BigInt::from(0)));
    assert_eq!(poincare_series(&betti_table(&two).unwrap()).to_string(), "1 + t^3");
    assert_eq!(poincare_series(&betti_table(&SimplicialComplex::simplex(3)).unwrap()).to_string(), "1");
}
