mod common;

use pointed_hopf::abelian::{Character, GroupElement};
use pointed_hopf::algebra::{build_algebra, BuildOptions};
use pointed_hopf::cartan::CartanDatum;
use pointed_hopf::double::{drinfeld_u, r_matrix, DrinfeldDouble};
use pointed_hopf::hopf::dual_build;
use pointed_hopf::hopf::integrals::integrals;
use pointed_hopf::ribbon::{kr_criterion, ribbon_element_search, RibbonReport, Verdict};

fn report(d: &CartanDatum) -> (RibbonReport, DrinfeldDouble) {
    let a = build_algebra(d, BuildOptions::default()).unwrap();
    let dual = dual_build(&a);
    let ir = integrals(&a, &dual).unwrap();
    let rep = kr_criterion(&a, &dual, &ir).unwrap();
    assert!(rep.twist_is_algebra_map);
    (rep, DrinfeldDouble::new(a, dual))
}

#[test]
fn taft3_is_ribbon_with_explicit_element() {
    let (mut rep, d) = report(&common::taft(3));
    assert_eq!(rep.verdict, Verdict::Ribbon);
    assert_eq!(rep.g_dist, GroupElement(vec![2]));
    assert_eq!(rep.gamma, Character(vec![1]));
    assert_eq!(rep.criterion_witness, Some((GroupElement(vec![1]), Character(vec![2]))));
    let w = rep.theorem_witness.as_ref().unwrap();
    assert!(w.passes);
    assert_eq!((w.h.clone(), w.delta.clone()), (GroupElement(vec![1]), Character(vec![2])));
    assert_eq!(rep.theorem_witness_among_passing, Some(true));
    let r = r_matrix(&d);
    let u = drinfeld_u(&d, &r);
    ribbon_element_search(&d, &r, &u, &mut rep);
    let v = rep.ribbon_element.as_ref().expect("a ribbon element");
    for t in v.transcript.iter().filter(|t| !t.name.contains("literal")) {
        assert!(t.passed, "{t:?}");
    }
}

#[test]
fn even_taft_is_not_ribbon() {
    for n in [2, 4] {
        let (mut rep, d) = report(&common::taft(n));
        assert_ne!(rep.verdict, Verdict::Ribbon, "N = {n}");
        assert!(rep.theorem_witness.is_err());
        let r = r_matrix(&d);
        let u = drinfeld_u(&d, &r);
        ribbon_element_search(&d, &r, &u, &mut rep);
        assert!(rep.ribbon_element.is_none(), "N = {n}");
    }
}

#[test]
fn taft5_is_ribbon() {
    let (rep, _) = report(&common::taft(5));
    assert_eq!(rep.verdict, Verdict::Ribbon);
    assert_eq!(rep.theorem_witness_among_passing, Some(true));
}

#[test]
fn group_algebra_is_ribbon() {
    let (mut rep, d) = report(&common::trivial());
    assert_eq!(rep.verdict, Verdict::Ribbon);
    assert_eq!(rep.criterion_witness, Some((GroupElement(vec![0]), Character(vec![0]))));
    let r = r_matrix(&d);
    let u = drinfeld_u(&d, &r);
    ribbon_element_search(&d, &r, &u, &mut rep);
    let v = rep.ribbon_element.expect("v = u passes");
    assert_eq!((v.grouplike_character, v.grouplike_element), (Character(vec![0]), GroupElement(vec![0])));
}

#[test]
fn a2_is_ribbon() {
    let (rep, _) = report(&common::a2());
    assert_eq!(rep.verdict, Verdict::Ribbon);
    let w = rep.theorem_witness.as_ref().unwrap();
    assert!(w.passes, "{w:?}");
    assert_eq!(w.rho_identity, vec![2, 2]);
    assert_eq!(rep.theorem_witness_among_passing, Some(true));
}

#[test]
fn a1xa1_is_ribbon() {
    let (rep, _) = report(&common::a1xa1());
    assert_eq!(rep.verdict, Verdict::Ribbon);
    assert!(rep.theorem_witness.unwrap().passes);
}

#[test]
fn other_rank_one_data() {
    // Z_6 with g = 2, χ = 1: χ(g) = ζ_6^2 has order 3.
    let d = pointed_hopf::cartan::validate_datum(&common::raw(vec![6], vec![vec![2]], vec![vec![1]], vec![vec![2]])).unwrap();
    let (rep, _) = report(&d);
    assert_eq!(rep.verdict, Verdict::Ribbon);
    // Z_6 with g = 3, χ = 1: order 2.
    let d = pointed_hopf::cartan::validate_datum(&common::raw(vec![6], vec![vec![3]], vec![vec![1]], vec![vec![2]])).unwrap();
    let (rep, _) = report(&d);
    assert_ne!(rep.verdict, Verdict::Ribbon);
}
