//! Sparse exact linear algebra over cyclotomic fields.

use std::collections::BTreeMap;

use crate::cyclotomic::CycNum;

/// Sparse vector keyed by any ordered index.
pub type SparseVec<K = usize> = BTreeMap<K, CycNum>;

/// `y += a·x`, dropping entries that cancel.
pub fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &CycNum, x: &SparseVec<K>) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        add_entry(y, k.clone(), &(a * v));
    }
}

/// `y[k] += c`, dropping the entry when it cancels.
pub fn add_entry<K: Ord>(y: &mut SparseVec<K>, k: K, c: &CycNum) {
    if c.is_zero() {
        return;
    }
    match y.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub fn scale<K: Ord + Clone>(x: &SparseVec<K>, a: &CycNum) -> SparseVec<K> {
    if a.is_zero() {
        return SparseVec::new();
    }
    x.iter().map(|(k, v)| (k.clone(), a * v)).collect()
}

/// Row echelon form built incrementally; each stored row has pivot coefficient 1
/// and its pivot is its smallest column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Canonical remainder of `v` modulo the row span: no entry in any pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(c) = next else { return v };
            let coef = -v[&c].clone();
            axpy(&mut v, &coef, &self.rows[&c]);
            cursor = c + 1;
        }
    }

    /// Adds `v` to the span; returns false when it was already dependent.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else { return false };
        let inv = lead.inv().expect("nonzero pivot");
        self.rows.insert(p, scale(&r, &inv));
        true
    }

    /// Back-substitutes so every pivot column is zero in all other rows.
    pub fn make_reduced(&mut self) {
        let keys: Vec<usize> = self.rows.keys().rev().copied().collect();
        for &p in &keys {
            let row = self.rows[&p].clone();
            let others: Vec<usize> = self.rows.range(..p).map(|(k, _)| *k).collect();
            for q in others {
                if let Some(c) = self.rows[&q].get(&p).cloned() {
                    let target = self.rows.get_mut(&q).unwrap();
                    axpy(target, &-c, &row);
                }
            }
        }
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows.get(&pivot)
    }
}

/// Basis of `{x : r·x = 0 for every row r}` in `ncols` unknowns.
pub fn nullspace(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.make_reduced();
    let pivots: Vec<usize> = e.pivots().collect();
    let mut out = Vec::new();
    for f in 0..ncols {
        if e.rows.contains_key(&f) {
            continue;
        }
        let mut x = SparseVec::new();
        x.insert(f, CycNum::from_int(1));
        for &p in &pivots {
            if let Some(c) = e.rows[&p].get(&f) {
                x.insert(p, -c.clone());
            }
        }
        out.push(x);
    }
    out
}

/// Solves `Σ_j x_j cols[j] = rhs`, returning one solution if consistent.
pub fn solve(cols: &[SparseVec], rhs: &SparseVec) -> Option<SparseVec> {
    // Unknown j lives in column j of the transposed system; augment with the rhs.
    let nrows = cols.iter().chain(std::iter::once(rhs)).filter_map(|c| c.keys().next_back()).max().map_or(0, |m| m + 1);
    let mut rows: Vec<SparseVec> = vec![SparseVec::new(); nrows];
    for (j, c) in cols.iter().enumerate() {
        for (&i, v) in c {
            rows[i].insert(j, v.clone());
        }
    }
    let aug = cols.len();
    for (&i, v) in rhs {
        rows[i].insert(aug, v.clone());
    }
    let mut e = Echelon::new();
    for r in &rows {
        e.insert(r);
    }
    if e.rows.contains_key(&aug) {
        return None;
    }
    e.make_reduced();
    let mut x = SparseVec::new();
    for (&p, row) in &e.rows {
        if let Some(c) = row.get(&aug) {
            x.insert(p, c.clone());
        }
    }
    Some(x)
}

/// Rank of a list of sparse vectors.
pub fn rank(rows: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    rows.iter().filter(|r| e.insert(r)).count()
}
