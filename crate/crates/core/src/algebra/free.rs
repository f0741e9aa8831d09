//! The free algebra `T(V)` on letters `x_1..x_θ` and its graded quotients by the
//! defining ideal (quantum Serre relations and root-vector powers).

use std::collections::HashMap;

use crate::cyclotomic::CycNum;
use crate::linalg::{add_entry, axpy, Echelon, SparseVec};

/// A word in the letters `0..θ`.
pub type Word = Vec<u8>;
/// A noncommutative polynomial.
pub type FreePoly = SparseVec<Word>;

pub fn letter(i: usize) -> FreePoly {
    let mut p = FreePoly::new();
    p.insert(vec![i as u8], CycNum::from_int(1));
    p
}

pub fn one() -> FreePoly {
    let mut p = FreePoly::new();
    p.insert(Vec::new(), CycNum::from_int(1));
    p
}

pub fn mul(a: &FreePoly, b: &FreePoly) -> FreePoly {
    let mut out = FreePoly::new();
    for (u, c) in a {
        for (v, d) in b {
            let mut w = u.clone();
            w.extend_from_slice(v);
            add_entry(&mut out, w, &(c * d));
        }
    }
    out
}

/// `x·y − c·y·x`.
pub fn commutator(x: &FreePoly, y: &FreePoly, c: &CycNum) -> FreePoly {
    let mut out = mul(x, y);
    axpy(&mut out, &-c.clone(), &mul(y, x));
    out
}

pub fn power(a: &FreePoly, n: u32) -> FreePoly {
    (0..n).fold(one(), |acc, _| mul(&acc, a))
}

pub fn word_degree(w: &[u8], theta: usize) -> Vec<i32> {
    let mut d = vec![0; theta];
    for &l in w {
        d[l as usize] += 1;
    }
    d
}

/// All words of the given multidegree, in lexicographic order.
pub fn words_of_degree(d: &[i32]) -> Vec<Word> {
    let total: i32 = d.iter().sum();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(total as usize);
    let mut rem = d.to_vec();
    fn rec(rem: &mut Vec<i32>, cur: &mut Word, left: i32, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in 0..rem.len() {
            if rem[i] > 0 {
                rem[i] -= 1;
                cur.push(i as u8);
                rec(rem, cur, left - 1, out);
                cur.pop();
                rem[i] += 1;
            }
        }
    }
    rec(&mut rem, &mut cur, total, &mut out);
    out
}

fn leq(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// A homogeneous relation with its multidegree.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub degree: Vec<i32>,
    pub poly: FreePoly,
}

/// The homogeneous component `T_d / I_d` of a graded quotient.
pub struct QuotientSpace {
    pub words: Vec<Word>,
    index: HashMap<Word, usize>,
    ideal: Echelon,
}

impl QuotientSpace {
    /// `I_d` is spanned by `u·r·v` over relations `r` and words `u`, `v` of complementary degree.
    pub fn new(d: &[i32], relations: &[Relation]) -> Self {
        let words = words_of_degree(d);
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut ideal = Echelon::new();
        for r in relations {
            if !leq(&r.degree, d) {
                continue;
            }
            let rest: Vec<i32> = d.iter().zip(&r.degree).map(|(a, b)| a - b).collect();
            for w in words_of_degree(&rest) {
                for cut in 0..=w.len() {
                    let mut row = SparseVec::new();
                    for (m, c) in &r.poly {
                        let mut full = w[..cut].to_vec();
                        full.extend_from_slice(m);
                        full.extend_from_slice(&w[cut..]);
                        add_entry(&mut row, index[&full], c);
                    }
                    ideal.insert(&row);
                }
            }
        }
        QuotientSpace { words, index, ideal }
    }

    pub fn dimension(&self) -> usize {
        self.words.len() - self.ideal.rank()
    }

    /// Canonical coordinates of the class of a homogeneous polynomial of this degree.
    pub fn reduce(&self, p: &FreePoly) -> SparseVec {
        let mut v = SparseVec::new();
        for (w, c) in p {
            add_entry(&mut v, self.index[w], c);
        }
        self.ideal.reduce(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_enumeration() {
        assert_eq!(words_of_degree(&[1, 1]), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(words_of_degree(&[2, 1]).len(), 3);
        assert_eq!(words_of_degree(&[0, 0]), vec![Vec::<u8>::new()]);
    }

    #[test]
    fn quantum_plane_quotient() {
        // xy − q yx = 0 and x^2 = y^2 = 0: degree (1,1) is one-dimensional.
        let q = CycNum::zeta(3, 1);
        let rels = vec![
            Relation { name: "c".into(), degree: vec![1, 1], poly: commutator(&letter(0), &letter(1), &q) },
            Relation { name: "x2".into(), degree: vec![2, 0], poly: power(&letter(0), 2) },
        ];
        let s = QuotientSpace::new(&[1, 1], &rels);
        assert_eq!(s.dimension(), 1);
        assert_eq!(QuotientSpace::new(&[2, 0], &rels).dimension(), 0);
        assert_eq!(QuotientSpace::new(&[1, 2], &rels).dimension(), 3 - 2);
    }
}
