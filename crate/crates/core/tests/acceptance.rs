//! Acceptance criteria 1-7. Every criterion runs even if an earlier one fails; each prints one
//! PASS/FAIL line and the test fails at the end if any did.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use macring::corpus::{
    cycle, disjoint_points, random_corpus, real_projective_plane, simplex_boundary, standard_corpus, NamedComplex,
};
use macring::engine::{betti_table, poincare_series, ring_presentation, BettiTable};
use macring::hochster::{compare, oracle_report};
use macring::koszul::{homogeneous_bidegree, multiply_chains, Bidegree};
use macring::linalg::AbelianGroup;
use macring::simplicial::SimplicialComplex;
use macring::verify::{axioms_suite, default_truncation, diagonal_suite, homotopy_suite, SuiteConfig};
use macring::vertex_set::VertexSet;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CORPUS_SEED: u64 = 20_240_601;

fn corpus() -> Vec<NamedComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut all = standard_corpus();
    all.extend(random_corpus(&mut rng, 20, 7));
    all
}

struct Outcome {
    pass: bool,
    summary: String,
    failures: Vec<String>,
}

impl Outcome {
    fn new(failures: Vec<String>, summary: String) -> Self {
        Outcome { pass: failures.is_empty(), summary, failures }
    }
}

fn within(elapsed: Duration, budget_secs: u64, failures: &mut Vec<String>) {
    if elapsed > Duration::from_secs(budget_secs) {
        failures.push(format!("took {elapsed:.1?}, budget {budget_secs} s"));
    }
}

fn criterion_1(corpus: &[NamedComplex]) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for nc in corpus {
        match compare(&nc.complex) {
            Ok(m) if m.is_empty() => {}
            Ok(m) => failures.push(format!("{}: {} mismatching bidegrees, first {:?}", nc.name, m.len(), m[0])),
            Err(e) => failures.push(format!("{}: {e}", nc.name)),
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, 60, &mut failures);
    Outcome::new(failures, format!("{} complexes, engine = oracle in every bidegree, {elapsed:.1?}", corpus.len()))
}

fn degrees_with_z(t: &BettiTable) -> Vec<usize> {
    let mut v: Vec<usize> =
        t.entries.iter().filter(|(_, g)| **g == AbelianGroup::free(1)).map(|(b, _)| b.total()).collect();
    v.sort();
    v
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |name: &str, k: &SimplicialComplex, ok: &dyn Fn(&BettiTable) -> bool| {
        let t = betti_table(k).expect("engine");
        let oracle = oracle_report(k).expect("oracle");
        if t.entries != oracle.groups {
            failures.push(format!("{name}: engine and oracle disagree"));
        }
        if !ok(&t) {
            failures.push(format!("{name}: unexpected table {:?}", t.entries));
        }
    };
    check("∂Δ²", &simplex_boundary(3), &|t| t.entries.len() == 2 && degrees_with_z(t) == vec![0, 5]);
    check("two points", &disjoint_points(2), &|t| t.entries.len() == 2 && degrees_with_z(t) == vec![0, 3]);
    check("pentagon", &cycle(5), &|t| poincare_series(t).to_string() == "1 + 5t^3 + 5t^4 + t^7");

    // ℝP²: the torsion sits where the oracle routes the torsion of the full complex
    let rp2 = real_projective_plane();
    let oracle = oracle_report(&rp2).expect("oracle");
    let torsion: Vec<_> = oracle.contributions.iter().filter(|c| !c.group.torsion.is_empty()).collect();
    let z2 = AbelianGroup::new(0, vec![BigInt::from(2)]);
    let placed = match torsion.as_slice() {
        [c] if c.omega == VertexSet::full(6) && c.degree == 2 && c.group == z2 => Some(Bidegree::new(3, 6)),
        _ => None,
    };
    let t = betti_table(&rp2).expect("engine");
    match placed {
        Some(b) if t.group(b) == z2 && t.entries.iter().all(|(c, g)| *c == b || g.torsion.is_empty()) => {}
        _ => failures.push(format!("ℝP²: torsion contributions {torsion:?}, table {:?}", t.entries)),
    }
    Outcome::new(failures, "S⁵, S³, pentagon series, ℤ/2 at (-3,12) for ℝP²".into())
}

fn criterion_3(corpus: &[NamedComplex]) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut elements = 0u64;
    let mut targets: Vec<(String, SimplicialComplex)> =
        (1..=4).map(|m| (format!("E_{m}"), SimplicialComplex::simplex(m))).collect();
    targets.extend(corpus.iter().filter(|n| n.complex.m() <= 4).map(|n| (n.name.clone(), n.complex.clone())));
    for (name, k) in &targets {
        let r = homotopy_suite(k, default_truncation(k.m()));
        elements += r.checks;
        if !r.pass {
            failures.push(format!("{name}: {:?}", r.failures));
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, 10, &mut failures);
    Outcome::new(
        failures,
        format!("{} models, {elements} basis elements through degree 2m+2, {elapsed:.1?}", targets.len()),
    )
}

fn criterion_4(corpus: &[NamedComplex]) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let cfg = SuiteConfig { axiom_samples: 200, ..Default::default() };
    let (mut exhaustive, mut sampled, mut pairs) = (0, 0, 0u64);
    for nc in corpus.iter().filter(|n| n.complex.m() <= 7) {
        let r = diagonal_suite(&nc.complex, &cfg);
        pairs += r.detail["multiplicativity_pairs"].as_u64().unwrap_or(0);
        if nc.complex.m() <= cfg.exhaustive_max_m {
            exhaustive += 1;
        } else {
            sampled += 1;
        }
        if !r.pass {
            failures.push(format!("{}: {:?}", nc.name, r.failures));
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, 30, &mut failures);
    Outcome::new(
        failures,
        format!("{exhaustive} exhaustive, {sampled} sampled at 10⁴ pairs, {pairs} products, {elapsed:.1?}"),
    )
}

fn criterion_5(corpus: &[NamedComplex]) -> Outcome {
    let mut failures = Vec::new();
    let cfg = SuiteConfig { axiom_samples: 1_000, ..Default::default() };
    let mut total = 0;
    for nc in corpus {
        let r = axioms_suite(&nc.complex, &cfg);
        total += r.checks;
        if !r.pass {
            failures.push(format!("{}: {:?}", nc.name, r.failures));
        }
    }
    if total < 100_000 {
        failures.push(format!("only {total} assertions"));
    }
    Outcome::new(failures, format!("{total} assertions"))
}

fn criterion_6(corpus: &[NamedComplex]) -> Outcome {
    let mut failures = Vec::new();
    let pentagon = ring_presentation(&cycle(5)).expect("ring");
    let (h3, h4, h7) = (Bidegree::new(1, 2), Bidegree::new(2, 3), Bidegree::new(3, 5));
    let matrix = pentagon.pairing_matrix(h3, h4, 0);
    let det = common::determinant(&matrix);
    if matrix.len() != 5
        || matrix.iter().any(|r| r.len() != 5)
        || pentagon.generators_in(h7).len() != 1
        || !det.abs().is_one()
    {
        failures.push(format!("pentagon pairing {matrix:?}, det {det}"));
    }

    let mut products = 0;
    for nc in corpus {
        let k = &nc.complex;
        let ring = match ring_presentation(k) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{}: {e}", nc.name));
                continue;
            }
        };
        let unit = ring.generators_in(Bidegree::ZERO);
        if unit.len() != 1 {
            failures.push(format!("{}: H^0 has {} generators", nc.name, unit.len()));
            continue;
        }
        for g in 0..ring.generators.len() {
            let target = ring.generators_in(ring.generators[g].bidegree);
            let expected: Vec<BigInt> =
                target.iter().map(|&h| if h == g { BigInt::one() } else { BigInt::zero() }).collect();
            if ring.product(unit[0], g) != expected || ring.product(g, unit[0]) != expected {
                failures.push(format!("{}: unit law fails on g{g}", nc.name));
            }
        }
        for &(a, b) in ring.products.keys() {
            products += 1;
            let (ga, gb) = (&ring.generators[a], &ring.generators[b]);
            let sum = ga.bidegree + gb.bidegree;
            let rep = multiply_chains(k, &ga.representative, &gb.representative);
            let additive = match homogeneous_bidegree(&rep) {
                Ok(Some(bd)) => bd == sum,
                Ok(None) => false,
                Err(_) => false,
            };
            if !additive || ring.products[&(a, b)].len() != ring.generators_in(sum).len() {
                failures.push(format!("{}: g{a}·g{b} leaves bidegree {sum}", nc.name));
            }
        }
    }
    Outcome::new(failures, format!("pentagon det = {det}, {products} nonzero products checked"))
}

fn criterion_7(corpus: &[NamedComplex]) -> Outcome {
    let mut failures = Vec::new();
    let dir = std::env::temp_dir().join(format!("macring-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut runs = 0;
    for (n, nc) in corpus.iter().enumerate().filter(|(n, _)| n % 3 == 0) {
        let path = dir.join(format!("k{n}.json"));
        std::fs::write(&path, nc.complex.to_json_string()).unwrap();
        let once = || {
            Command::new(env!("CARGO_BIN_EXE_macring"))
                .args(["betti", path.to_str().unwrap(), "--format", "json"])
                .output()
                .expect("binary runs")
        };
        let (a, b) = (once(), once());
        runs += 1;
        if !a.status.success() || a.stdout != b.stdout || a.stdout.is_empty() {
            failures.push(format!("{}: outputs differ or run failed", nc.name));
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    Outcome::new(failures, format!("{runs} inputs, byte-identical JSON"))
}

#[test]
fn acceptance() {
    let corpus = corpus();
    assert!(corpus.len() >= 12 + 20);
    let results = [
        ("1 oracle equivalence", criterion_1(&corpus)),
        ("2 known spaces", criterion_2()),
        ("3 homotopy operator", criterion_3(&corpus)),
        ("4 diagonal and g", criterion_4(&corpus)),
        ("5 DGA axioms", criterion_5(&corpus)),
        ("6 ring structure", criterion_6(&corpus)),
        ("7 determinism", criterion_7(&corpus)),
    ];
    let mut all = true;
    for (name, o) in &results {
        println!("{} criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.summary);
        for f in o.failures.iter().take(5) {
            println!("    {f}");
        }
        all &= o.pass;
    }
    assert!(all, "acceptance criteria failed");
}
