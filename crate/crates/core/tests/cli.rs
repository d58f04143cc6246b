use std::path::PathBuf;
use std::process::Command;

use macring::corpus::{cycle, real_projective_plane};
use macring::report::{BettiReport, VerifyReport};
use macring::simplicial::SimplicialComplex;

fn fixture(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("macring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn macring(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_macring")).args(args).output().expect("binary runs");
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn betti_table_for_the_pentagon() {
    let p = fixture("pentagon.json", &cycle(5).to_json_string());
    let (code, out, _) = macring(&["betti", p.to_str().unwrap(), "--format", "table"]);
    assert_eq!(code, 0);
    assert!(out.contains("  -1    4    3  Z^5"), "{out}");
    assert!(out.contains("Poincare series: 1 + 5t^3 + 5t^4 + t^7"), "{out}");
}

#[test]
fn betti_json_is_stable_and_round_trips() {
    let p = fixture("rp2.json", &real_projective_plane().to_json_string());
    let (c1, first, _) = macring(&["betti", p.to_str().unwrap(), "--format", "json"]);
    let (c2, second, _) = macring(&["betti", p.to_str().unwrap(), "--format", "json"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(first, second);
    let report: BettiReport = serde_json::from_str(&first).unwrap();
    assert_eq!(report.schema, "macring/1");
    assert_eq!(report.to_table(), macring::betti_table(&real_projective_plane()).unwrap());
    let torsion: Vec<_> = report.entries.iter().filter(|e| !e.torsion.is_empty()).map(|e| (e.i, e.j2)).collect();
    assert_eq!(torsion, vec![(3, 12)]);
}

#[test]
fn verify_exit_codes() {
    let delta = fixture("delta.json", &SimplicialComplex::simplex(3).to_json_string());
    let d = delta.to_str().unwrap();
    let (code, out, _) = macring(&["verify", "--hochster", "--diagonal", d]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = macring(&["verify", "--homotopy", "--truncate", "8", d]);
    assert_eq!(code, 0);
    assert!(out.contains("checked through degree 8"), "{out}");

    let (code, out, _) = macring(&["verify", "--axioms", "--format", "json", d]);
    assert_eq!(code, 0);
    let report: VerifyReport = serde_json::from_str(&out).unwrap();
    assert!(report.pass() && report.suites.len() == 1);
}

#[test]
fn parse_errors_exit_one() {
    let bad_vertex = fixture("bad_vertex.json", r#"{"m": 2, "facets": [[1, 3]]}"#);
    let (code, _, err) = macring(&["betti", bad_vertex.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("facets[0][1]"), "{err}");

    let bad_json = fixture("bad.json", "{\"m\": 2,");
    assert_eq!(macring(&["cells", bad_json.to_str().unwrap()]).0, 1);
    assert_eq!(macring(&["ring", "/nonexistent/k.json"]).0, 1);
    assert_eq!(macring(&["verify", bad_vertex.to_str().unwrap()]).0, 1, "verify without suites");
    assert_eq!(macring(&["frobnicate"]).0, 1);
    assert_eq!(macring(&["--help"]).0, 0);
}

#[test]
fn large_ground_sets_need_force() {
    let big = fixture("big.json", r#"{"m": 21, "facets": [[1]]}"#);
    let (code, _, err) = macring(&["betti", big.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("--force"), "{err}");
    assert_eq!(
        macring(&["cells", "--format", "json", fixture("small.json", r#"{"m": 1, "facets": []}"#).to_str().unwrap()]).0,
        0
    );
}

#[test]
fn ring_and_cells_json() {
    let p = fixture("pentagon2.json", &cycle(5).to_json_string());
    let (code, out, _) = macring(&["ring", p.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 12);

    let (code, out, _) = macring(&["cells", p.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["euler_characteristic"], 0);
    let total: u64 = v["counts"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).sum();
    // Σ_{σ ∈ K} 2^{m - |σ|}
    assert_eq!(total, 32 + 5 * 16 + 5 * 8);
}
