//! Independent check of the PBW engine against the Nichols algebra realized as
//! `T(V)` modulo the common kernel of the skew derivations.
//!
//! `D_i(x_j) = δ_ij`, `D_i(u x_j) = u δ_ij + χ_j(g_i) D_i(u) x_j`. A homogeneous `w` of
//! positive degree vanishes in `B(V)` iff every `D_i(w)` does.

mod common;

use std::collections::HashMap;

use pointed_hopf::algebra::free::{self, words_of_degree, FreePoly, Word};
use pointed_hopf::algebra::{build_algebra, BuildOptions, HopfAlgebra};
use pointed_hopf::cartan::CartanDatum;
use pointed_hopf::cyclotomic::CycNum;
use pointed_hopf::linalg::{add_entry, Echelon, SparseVec};

struct Nichols {
    theta: usize,
    q: Vec<Vec<CycNum>>,
    /// Per degree: for each word, its coordinates in `B_d`.
    coords: HashMap<Vec<i32>, HashMap<Word, SparseVec>>,
    dims: HashMap<Vec<i32>, usize>,
}

impl Nichols {
    fn new(d: &CartanDatum) -> Self {
        let theta = d.rank();
        let q = (0..theta).map(|i| (0..theta).map(|j| d.q(i, j)).collect()).collect();
        Nichols { theta, q, coords: HashMap::new(), dims: HashMap::new() }
    }

    fn derivation(&self, i: usize, w: &[u8]) -> FreePoly {
        let mut out = FreePoly::new();
        for p in 0..w.len() {
            if w[p] as usize != i {
                continue;
            }
            let mut c = CycNum::from_int(1);
            for &l in &w[p + 1..] {
                c = c * &self.q[i][l as usize];
            }
            let mut rest = w[..p].to_vec();
            rest.extend_from_slice(&w[p + 1..]);
            add_entry(&mut out, rest, &c);
        }
        out
    }

    /// Coordinates of a homogeneous polynomial in `B_d`.
    fn project(&mut self, d: &[i32], p: &FreePoly) -> SparseVec {
        self.ensure(d);
        let table = &self.coords[d];
        let mut out = SparseVec::new();
        for (w, c) in p {
            for (k, v) in &table[w] {
                add_entry(&mut out, *k, &(c * v));
            }
        }
        out
    }

    fn dim(&mut self, d: &[i32]) -> usize {
        self.ensure(d);
        self.dims[d]
    }

    fn ensure(&mut self, d: &[i32]) {
        if self.coords.contains_key(d) {
            return;
        }
        let words = words_of_degree(d);
        if d.iter().all(|&x| x == 0) {
            let mut m = HashMap::new();
            m.insert(Vec::new(), SparseVec::from([(0usize, CycNum::from_int(1))]));
            self.coords.insert(d.to_vec(), m);
            self.dims.insert(d.to_vec(), 1);
            return;
        }
        // Raw image: block i holds the coordinates of D_i(w) in B_{d − α_i}.
        let mut offsets = Vec::new();
        let mut offset = 0usize;
        for i in 0..self.theta {
            offsets.push(offset);
            if d[i] > 0 {
                let mut lower = d.to_vec();
                lower[i] -= 1;
                offset += self.dim(&lower);
            }
        }
        let mut images: Vec<SparseVec> = Vec::with_capacity(words.len());
        for w in &words {
            let mut v = SparseVec::new();
            for i in 0..self.theta {
                if d[i] == 0 {
                    continue;
                }
                let mut lower = d.to_vec();
                lower[i] -= 1;
                let di = self.derivation(i, w);
                for (k, c) in self.project(&lower, &di) {
                    add_entry(&mut v, offsets[i] + k, &c);
                }
            }
            images.push(v);
        }
        // Restriction to the pivot columns of the span is injective on the span.
        let mut e = Echelon::new();
        for v in &images {
            e.insert(v);
        }
        let pivots: Vec<usize> = e.pivots().collect();
        let pos: HashMap<usize, usize> = pivots.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut m = HashMap::new();
        for (w, v) in words.into_iter().zip(images) {
            let r: SparseVec = v.into_iter().filter_map(|(k, c)| pos.get(&k).map(|&i| (i, c))).collect();
            m.insert(w, r);
        }
        self.dims.insert(d.to_vec(), pivots.len());
        self.coords.insert(d.to_vec(), m);
    }
}

fn all_degrees_up_to(top: &[i32]) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for &t in top {
        out = out.into_iter().flat_map(|p: Vec<i32>| (0..=t).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

fn compare_dimensions(d: &CartanDatum) {
    let a = build_algebra(d, BuildOptions { max_dim: 0, ..Default::default() }).unwrap();
    let mut oracle = Nichols::new(d);
    let theta = d.rank();
    let top: Vec<i32> = (0..theta)
        .map(|s| (0..a.roots.len()).map(|k| (a.roots.n[k] as i32 - 1) * a.roots.positive_roots[k][s]).sum())
        .collect();
    let mut total = 0;
    for deg in all_degrees_up_to(&top) {
        let expected = a.engine.monomials_of_degree(&deg).len();
        assert_eq!(oracle.dim(&deg), expected, "degree {deg:?}");
        total += expected;
    }
    // One step past the top degree the Nichols algebra vanishes.
    for i in 0..theta {
        let mut beyond = top.clone();
        beyond[i] += 1;
        assert_eq!(oracle.dim(&beyond), 0);
    }
    assert_eq!(total * d.group.order() as usize, a.dim());
}

fn check_rules(d: &CartanDatum) {
    let a = build_algebra(d, BuildOptions { max_dim: 0, ..Default::default() }).unwrap();
    let mut oracle = Nichols::new(d);
    for (&(j, i), rule) in &a.engine.rules {
        let mut rel = free::mul(&a.engine.root_vectors[j], &a.engine.root_vectors[i]);
        for (w, c) in rule {
            pointed_hopf::linalg::axpy(&mut rel, &-c.clone(), &a.engine.expand(w));
        }
        let deg: Vec<i32> =
            a.engine.root_degrees[i].iter().zip(&a.engine.root_degrees[j]).map(|(x, y)| x + y).collect();
        assert!(oracle.project(&deg, &rel).is_empty(), "rule y{} y{} fails in B(V)", j + 1, i + 1);
    }
}

#[test]
fn taft_dimensions_match() {
    for n in [2, 3, 4, 5] {
        compare_dimensions(&common::taft(n));
    }
}

#[test]
fn a2_dimensions_and_rules_match() {
    compare_dimensions(&common::a2());
    check_rules(&common::a2());
}

#[test]
fn a1xa1_dimensions_and_rules_match() {
    compare_dimensions(&common::a1xa1());
    check_rules(&common::a1xa1());
}

#[test]
fn b2_dimensions_and_rules_match() {
    compare_dimensions(&common::b2());
    check_rules(&common::b2());
}

#[test]
fn a2_straightening_of_y3_y1() {
    // y3 y1 = χ_{β3}(g_{β1})^{-1} (y1 y3 − y2) with y2 = y1 y3 − χ_{β3}(g_{β1}) y3 y1.
    let d = common::a2();
    let a = build_algebra(&d, BuildOptions::default()).unwrap();
    let c = d.q(0, 1).inv().unwrap();
    let lhs = a.mul(&a.y(2), &a.y(0));
    let mut rhs = pointed_hopf::linalg::scale(&a.mono_element(&[1, 0, 1]), &c);
    pointed_hopf::linalg::axpy(&mut rhs, &-c.clone(), &a.y(1));
    assert_eq!(lhs, rhs);
    // The same identity holds in the oracle's B(V).
    let mut oracle = Nichols::new(&d);
    let mut rel = free::mul(&a.engine.root_vectors[2], &a.engine.root_vectors[0]);
    pointed_hopf::linalg::axpy(&mut rel, &-c.clone(), &free::mul(&a.engine.root_vectors[0], &a.engine.root_vectors[2]));
    pointed_hopf::linalg::axpy(&mut rel, &c, &a.engine.root_vectors[1]);
    assert!(oracle.project(&[1, 1], &rel).is_empty());
}
