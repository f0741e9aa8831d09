use std::path::PathBuf;
use std::process::Command;

use clap::Parser;
use pointed_hopf::algebra::{basis_vector, build_algebra, BuildOptions, HopfAlgebra, StructureTables};
use pointed_hopf::cli::export::{basis_labels, from_json, to_json, TablesJson};
use pointed_hopf::cli::{run, Cli};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pointed-hopf")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn ribbon_verdicts_and_exit_codes() {
    let taft3 = data("taft3.toml");
    let (code, out) = bin(&["ribbon", "--datum", taft3.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("verdict: RIBBON"));
    assert!(out.contains("ribbon element: v = u"));

    let taft2 = data("taft2.toml");
    let (code, out) = bin(&["ribbon", "--datum", taft2.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0, "a non-RIBBON verdict is data, not a failure");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_ne!(v["data"]["verdict"], "RIBBON");
}

#[test]
fn build_a2_reports_dimension() {
    let (code, out) = bin(&["build", "--datum", data("a2_33.toml").to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("dim = 243"));
}

#[test]
fn invalid_datum_is_an_error_with_json_failure() {
    let (code, out) = bin(&["build", "--datum", data("invalid_cartan.toml").to_str().unwrap(), "--json"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["error"].as_str().unwrap().contains("a_ij=0 ⇔ a_ji=0 violated"));
    let (code, _) = bin(&["build"]);
    assert_eq!(code, 2);
}

#[test]
fn reports_are_deterministic() {
    let p = data("taft3.toml");
    let args = ["pointed-hopf", "integrals", "--datum", p.to_str().unwrap()];
    let a = serde_json::to_string(&run(&Cli::parse_from(args)).unwrap().0).unwrap();
    let b = serde_json::to_string(&run(&Cli::parse_from(args)).unwrap().0).unwrap();
    assert_eq!(a, b);
}

#[test]
fn two_param_file_and_selftest() {
    let p = data("a2_two_param.toml");
    let (rep, _) = run(&Cli::parse_from(["pointed-hopf", "validate", "--datum", p.to_str().unwrap()])).unwrap();
    assert!(rep.passed);
    assert_eq!(rep.datum.unwrap().dim, 243);
    let (rep, _) = run(&Cli::parse_from(["pointed-hopf", "selftest"])).unwrap();
    assert!(rep.passed, "{:?}", rep.failures);
}

#[test]
fn structure_constants_round_trip() {
    let d = pointed_hopf::cli::datum::parse_datum(&data("a1xa1.toml")).unwrap();
    let a = build_algebra(&d, BuildOptions::default()).unwrap();
    let t = StructureTables::from_algebra(&a);
    let text = serde_json::to_string(&to_json(&t, basis_labels(&a))).unwrap();
    let back = from_json(&serde_json::from_str::<TablesJson>(&text).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let x = basis_vector(rng.random_range(0..a.dim()));
        let y = basis_vector(rng.random_range(0..a.dim()));
        assert_eq!(a.mul(&x, &y), back.mul(&x, &y));
    }
    let mut broken: TablesJson = serde_json::from_str(&text).unwrap();
    broken.mult[0].2 = 10_000;
    assert!(from_json(&broken).is_err());
}
