mod common;

use pointed_hopf::abelian::{Character, GroupElement};
use pointed_hopf::algebra::{build_algebra, check_hopf_axioms, BuildOptions, CheckLevel, HopfAlgebra};
use pointed_hopf::cartan::CartanDatum;
use pointed_hopf::hopf::biproduct::biproduct_report;
use pointed_hopf::hopf::integrals::integrals;
use pointed_hopf::hopf::{
    dual_build, grouplikes_basis_scan, grouplikes_of_algebra, grouplikes_of_dual, match_dual_datum,
    verify_dual_relations, Grouplike,
};

fn assert_all(res: &[pointed_hopf::algebra::CheckResult]) {
    for r in res {
        assert!(r.passed, "{r:?}");
    }
}

fn dual_suite(d: &CartanDatum, pairing: bool, level: CheckLevel) {
    let a = build_algebra(d, BuildOptions::default()).unwrap();
    let dual = dual_build(&a);
    assert_eq!(dual.pbw_rank, a.dim());
    assert_all(&check_hopf_axioms(&dual, &dual.generators(), level, 20, 5));
    assert_all(&verify_dual_relations(&a, &dual, pairing));
    assert_all(&match_dual_datum(&dual, level).unwrap());
    assert_eq!(grouplikes_of_dual(&dual).len() as u64, d.group.order());
    assert_eq!(grouplikes_of_algebra(&a).len() as u64, d.group.order());
}

#[test]
fn taft_dual() {
    for n in [2, 3, 4] {
        dual_suite(&common::taft(n), true, CheckLevel::FullBasis);
    }
}

#[test]
fn a2_dual() {
    dual_suite(&common::a2(), true, CheckLevel::Generators);
}

#[test]
fn a1xa1_dual() {
    dual_suite(&common::a1xa1(), false, CheckLevel::Generators);
}

#[test]
fn basis_scan_finds_the_group() {
    let a = build_algebra(&common::a2(), BuildOptions::default()).unwrap();
    assert_eq!(grouplikes_basis_scan(&a).len(), 9);
}

#[test]
fn taft_integrals() {
    let a = build_algebra(&common::taft(3), BuildOptions::default()).unwrap();
    let dual = dual_build(&a);
    let r = integrals(&a, &dual).unwrap();
    assert_eq!((r.left_space_dim, r.right_space_dim), (1, 1));
    assert!(r.left_formula_matches && r.right_formula_matches && r.antipode_swaps_sides);
    // t_l g = χ(g)^{-2} t_l
    assert_eq!(r.gamma, Grouplike::Char(Character(vec![1])));
    assert!(r.gamma_matches_inverse_product());
    assert!(!r.gamma_matches_product());
    assert!(!r.unimodular);
    assert_eq!(r.g_dist, Grouplike::Group(GroupElement(vec![2])));
    assert!(r.g_dist_matches());
    let rd = integrals(&dual, &a).unwrap();
    assert!(rd.left_formula_matches && rd.right_formula_matches);
    assert!(rd.gamma_matches_inverse_product() && rd.g_dist_matches());
}

#[test]
fn a2_integrals() {
    let a = build_algebra(&common::a2(), BuildOptions::default()).unwrap();
    let dual = dual_build(&a);
    for r in [integrals(&a, &dual).unwrap(), integrals(&dual, &a).unwrap()] {
        assert_eq!((r.left_space_dim, r.right_space_dim), (1, 1));
        assert!(r.left_formula_matches && r.right_formula_matches && r.antipode_swaps_sides, "{r:?}");
        assert!(r.gamma_matches_inverse_product(), "{r:?}");
        assert!(r.g_dist_matches(), "{r:?}");
    }
}

#[test]
fn biproduct_maps() {
    for d in [common::taft(3), common::a2()] {
        let a = build_algebra(&d, BuildOptions::default()).unwrap();
        let rep = biproduct_report(&a);
        assert_all(&rep.checks);
        // With a right group factor the projection drops it, so ν(a h) = ν(a) h fails.
        assert!(rep.right_factor_counterexample.is_some());
    }
}
