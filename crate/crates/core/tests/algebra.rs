mod common;

use pointed_hopf::abelian::GroupElement;
use pointed_hopf::algebra::{
    basis_vector, build_algebra, check_hopf_axioms, BuildOptions, CheckLevel, HopfAlgebra, Symbol,
};
use pointed_hopf::cyclotomic::CycNum;
use pointed_hopf::linalg::scale;

#[test]
fn taft_dimension_and_axioms() {
    let a = build_algebra(&common::taft(3), BuildOptions::default()).unwrap();
    assert_eq!(a.dim(), 9);
    let res = check_hopf_axioms(&a, &a.generators(), CheckLevel::FullBasis, 0, 1);
    for r in &res {
        assert!(r.passed, "{r:?}");
    }
}

#[test]
fn taft_relations() {
    let a = build_algebra(&common::taft(3), BuildOptions::default()).unwrap();
    let g = GroupElement(vec![1]);
    // g x g^{-1} = χ(g) x
    let gx = a.normal_form(&[Symbol::G(g.clone()), Symbol::X(0)]);
    let xg = a.normal_form(&[Symbol::X(0), Symbol::G(g.clone())]);
    assert_eq!(gx, scale(&xg, &CycNum::zeta(3, 1)));
    assert!(a.normal_form(&[Symbol::X(0), Symbol::X(0), Symbol::X(0)]).is_empty());
    // S²(x) = χ(g)^{-1} x
    let x = a.x(0);
    assert_eq!(a.antipode(&a.antipode(&x)), scale(&x, &CycNum::zeta(3, -1)));
}

#[test]
fn trivial_datum_is_group_algebra() {
    let a = build_algebra(&common::trivial(), BuildOptions::default()).unwrap();
    assert_eq!(a.dim(), 2);
    assert_eq!(a.mul_basis(1, 1).as_ref(), &basis_vector(0));
}

#[test]
fn a2_dimension_and_axioms() {
    let a = build_algebra(&common::a2(), BuildOptions::default()).unwrap();
    assert_eq!(a.dim(), 243);
    let res = check_hopf_axioms(&a, &a.generators(), CheckLevel::Generators, 200, 7);
    for r in &res {
        assert!(r.passed, "{r:?}");
    }
}

#[test]
fn a2_serre_and_grading() {
    let a = build_algebra(&common::a2(), BuildOptions::default()).unwrap();
    // ad_c(x1)^2(x2) = 0 and ad_c(x2)^2(x1) = 0
    let z = a.braided_ad(0, &a.braided_ad(0, &a.x(1)));
    assert!(z.is_empty());
    let z = a.braided_ad(1, &a.braided_ad(1, &a.x(0)));
    assert!(z.is_empty());
    // braided_ad(x1, x2) = x1x2 − χ2(g1) x2x1
    let mut expect = a.mul(&a.x(0), &a.x(1));
    pointed_hopf::linalg::axpy(&mut expect, &-a.datum.q(0, 1), &a.mul(&a.x(1), &a.x(0)));
    assert_eq!(a.braided_ad(0, &a.x(1)), expect);
    // agrees with the Hopf adjoint
    assert_eq!(a.adjoint(&a.x(0), &a.x(1)), expect);
    // degree additivity
    for i in [1usize, 20, 50, 100] {
        for j in [3usize, 30, 81, 200] {
            let d: Vec<i32> = a.degree(i).iter().zip(a.degree(j)).map(|(x, y)| x + y).collect();
            for (k, _) in a.mul_basis(i, j).iter() {
                assert_eq!(a.degree(*k), d);
            }
        }
    }
}

#[test]
fn b2_and_a1xa1_build() {
    let a = build_algebra(&common::a1xa1(), BuildOptions::default()).unwrap();
    assert_eq!(a.dim(), 81);
    let res = check_hopf_axioms(&a, &a.generators(), CheckLevel::Generators, 50, 3);
    assert!(res.iter().all(|r| r.passed), "{res:?}");
    let b = build_algebra(&common::b2(), BuildOptions { max_dim: 0, ..Default::default() }).unwrap();
    assert_eq!(b.dim(), 729);
}
