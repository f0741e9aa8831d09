//! Commutation rules between PBW root vectors and the rewriting engine on
//! exponent vectors.
//!
//! For every pair `i < j` of positions in the convex order the rule
//! `y_j y_i = Σ_w c_w y_w` is derived by exact linear algebra in the homogeneous
//! component of degree `β_i + β_j` of `T(V)` modulo the defining ideal. Products
//! of PBW monomials are then computed by appending letters on the right and
//! applying the rules until the word is ordered.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use thiserror::Error;

use super::free::{self, FreePoly, QuotientSpace, Relation};
use crate::cartan::{CartanDatum, RootData};
use crate::cyclotomic::CycNum;
use crate::linalg::{add_entry, axpy, solve, SparseVec};

/// Exponent vector `(u_1, …, u_p)` of a PBW monomial `y_1^{u_1} ⋯ y_p^{u_p}`.
pub type Mono = Vec<u8>;
pub type MonoPoly = SparseVec<Mono>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("completion failure at {overlap}: {detail}")]
    Completion { overlap: String, detail: String },
    #[error("algebra of dimension {dim} exceeds the limit {limit}")]
    TooLarge { dim: usize, limit: usize },
}

fn completion(overlap: impl Into<String>, detail: impl Into<String>) -> BuildError {
    BuildError::Completion { overlap: overlap.into(), detail: detail.into() }
}

const MAX_DEPTH: usize = 10_000;

/// Root vectors, defining relations and derived commutation rules.
pub struct PbwEngine {
    pub p: usize,
    pub n: Vec<u32>,
    pub root_degrees: Vec<Vec<i32>>,
    /// Root vectors as polynomials in the free algebra.
    pub root_vectors: Vec<FreePoly>,
    pub relations: Vec<Relation>,
    /// `rules[(j, i)]` expresses `y_j y_i` for `j > i`.
    pub rules: BTreeMap<(usize, usize), MonoPoly>,
    letter_memo: Mutex<HashMap<(Mono, usize), Arc<MonoPoly>>>,
    mono_memo: Mutex<HashMap<(Mono, Mono), Arc<MonoPoly>>>,
}

/// `χ_b(g_a)` for degrees `a`, `b` in simple-root coordinates.
pub fn bicharacter(d: &CartanDatum, a: &[i32], b: &[i32]) -> CycNum {
    d.group.pair(&d.chi_root(b), &d.g_root(a)).expect("validated datum")
}

fn add_deg(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl PbwEngine {
    pub fn new(d: &CartanDatum, roots: &RootData) -> Result<Self, BuildError> {
        let theta = d.rank();
        let p = roots.len();
        let deg = roots.positive_roots.clone();

        // Root vectors via the splitting plan: y_k = y_{k1} y_{k2} − χ_{β_{k2}}(g_{β_{k1}}) y_{k2} y_{k1}.
        let mut yv: Vec<Option<FreePoly>> = vec![None; p];
        for (i, &m) in roots.simple_positions.iter().enumerate() {
            yv[m] = Some(free::letter(i));
        }
        let mut progress = true;
        while progress {
            progress = false;
            for k in 0..p {
                if yv[k].is_some() {
                    continue;
                }
                let (k1, k2) = roots.splitting_plan[k].expect("non-simple root has a split");
                if let (Some(a), Some(b)) = (&yv[k1], &yv[k2]) {
                    let c = bicharacter(d, &deg[k1], &deg[k2]);
                    yv[k] = Some(free::commutator(a, b, &c));
                    progress = true;
                }
            }
        }
        let root_vectors: Vec<FreePoly> = yv.into_iter().map(|x| x.expect("all root vectors built")).collect();

        // Only relations that fit below some rule degree can matter.
        let pair_degrees: Vec<Vec<i32>> = (0..p)
            .flat_map(|i| (i + 1..p).map(move |j| (i, j)))
            .map(|(i, j)| add_deg(&deg[i], &deg[j]))
            .collect();
        let relations = defining_relations(d, roots, &root_vectors, |r| {
            pair_degrees.iter().any(|pd| r.iter().zip(pd).all(|(a, b)| a <= b))
        });
        let mut engine = PbwEngine {
            p,
            n: roots.n.clone(),
            root_degrees: deg,
            root_vectors,
            relations,
            rules: BTreeMap::new(),
            letter_memo: Mutex::new(HashMap::new()),
            mono_memo: Mutex::new(HashMap::new()),
        };
        engine.derive_rules(theta)?;
        engine.check_overlaps()?;
        Ok(engine)
    }

    /// All PBW monomials of multidegree `d` (exponents below `N_k`).
    pub fn monomials_of_degree(&self, d: &[i32]) -> Vec<Mono> {
        let mut out = Vec::new();
        let mut cur = vec![0u8; self.p];
        self.mono_rec(0, d.to_vec(), &mut cur, &mut out);
        out
    }

    fn mono_rec(&self, k: usize, rem: Vec<i32>, cur: &mut Mono, out: &mut Vec<Mono>) {
        if k == self.p {
            if rem.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let mut r = rem;
        let mut e = 0u8;
        loop {
            cur[k] = e;
            self.mono_rec(k + 1, r.clone(), cur, out);
            e += 1;
            if e as u32 >= self.n[k] {
                break;
            }
            r = r.iter().zip(&self.root_degrees[k]).map(|(a, b)| a - b).collect();
            if r.iter().any(|&x| x < 0) {
                break;
            }
        }
        cur[k] = 0;
    }

    /// Expands a PBW monomial as a polynomial in `T(V)`.
    pub fn expand(&self, u: &[u8]) -> FreePoly {
        let mut acc = free::one();
        for (k, &e) in u.iter().enumerate() {
            for _ in 0..e {
                acc = free::mul(&acc, &self.root_vectors[k]);
            }
        }
        acc
    }

    pub fn mono_degree(&self, u: &[u8]) -> Vec<i32> {
        let theta = self.root_degrees.first().map_or(0, |r| r.len());
        let mut d = vec![0; theta];
        for (k, &e) in u.iter().enumerate() {
            for (x, y) in d.iter_mut().zip(&self.root_degrees[k]) {
                *x += e as i32 * y;
            }
        }
        d
    }

    fn unit_mono(&self, k: usize) -> Mono {
        let mut m = vec![0u8; self.p];
        m[k] = 1;
        m
    }

    fn derive_rules(&mut self, theta: usize) -> Result<(), BuildError> {
        let _ = theta;
        let mut spaces: HashMap<Vec<i32>, QuotientSpace> = HashMap::new();
        for i in 0..self.p {
            for j in i + 1..self.p {
                let d = add_deg(&self.root_degrees[i], &self.root_degrees[j]);
                let space = spaces.entry(d.clone()).or_insert_with(|| QuotientSpace::new(&d, &self.relations));
                let monos = self.monomials_of_degree(&d);
                let overlap = format!("y{} y{}", j + 1, i + 1);
                if space.dimension() != monos.len() {
                    return Err(completion(
                        overlap,
                        format!("degree {d:?}: quotient dimension {} but {} PBW monomials", space.dimension(), monos.len()),
                    ));
                }
                let cols: Vec<SparseVec> = monos.iter().map(|m| space.reduce(&self.expand(m))).collect();
                if crate::linalg::rank(&cols) != monos.len() {
                    return Err(completion(overlap, format!("PBW monomials of degree {d:?} are dependent")));
                }
                let lhs = free::mul(&self.root_vectors[j], &self.root_vectors[i]);
                let sol = solve(&cols, &space.reduce(&lhs))
                    .ok_or_else(|| completion(overlap.clone(), "product is not in the PBW span"))?;
                let mut rule = MonoPoly::new();
                for (idx, c) in sol {
                    let m = &monos[idx];
                    // Levendorskii–Soibelman shape: besides y_i y_j only letters strictly between i and j.
                    let ordered = {
                        let mut e = vec![0u8; self.p];
                        e[i] = 1;
                        e[j] = 1;
                        e
                    };
                    if *m != ordered && m.iter().enumerate().any(|(k, &e)| e > 0 && (k <= i || k >= j)) {
                        return Err(completion(overlap, format!("rule has a term {m:?} outside ({}, {})", i + 1, j + 1)));
                    }
                    rule.insert(m.clone(), c);
                }
                self.rules.insert((j, i), rule);
            }
        }
        Ok(())
    }

    /// `y_u · y_k`, normal ordered.
    pub fn mul_letter(&self, u: &[u8], k: usize) -> Arc<MonoPoly> {
        self.mul_letter_depth(u, k, 0)
    }

    fn mul_letter_depth(&self, u: &[u8], k: usize, depth: usize) -> Arc<MonoPoly> {
        assert!(depth < MAX_DEPTH, "rewriting does not terminate at {u:?}·y{}", k + 1);
        let key = (u.to_vec(), k);
        if let Some(r) = self.letter_memo.lock().unwrap().get(&key) {
            return r.clone();
        }
        let last = u.iter().rposition(|&e| e > 0);
        let result = match last {
            Some(l) if l > k => {
                let mut prefix = u.to_vec();
                prefix[l] -= 1;
                let mut acc = MonoPoly::new();
                for (w, c) in &self.rules[&(l, k)] {
                    let prod = self.mul_mono_depth(&prefix, w, depth + 1);
                    axpy(&mut acc, c, &prod);
                }
                acc
            }
            _ => {
                let mut acc = MonoPoly::new();
                if (u[k] as u32) + 1 < self.n[k] {
                    let mut v = u.to_vec();
                    v[k] += 1;
                    acc.insert(v, CycNum::from_int(1));
                }
                acc
            }
        };
        let result = Arc::new(result);
        self.letter_memo.lock().unwrap().insert(key, result.clone());
        result
    }

    /// `y_u · y_v`, normal ordered.
    pub fn mul_mono(&self, u: &[u8], v: &[u8]) -> Arc<MonoPoly> {
        self.mul_mono_depth(u, v, 0)
    }

    fn mul_mono_depth(&self, u: &[u8], v: &[u8], depth: usize) -> Arc<MonoPoly> {
        let key = (u.to_vec(), v.to_vec());
        if let Some(r) = self.mono_memo.lock().unwrap().get(&key) {
            return r.clone();
        }
        let mut acc = MonoPoly::new();
        acc.insert(u.to_vec(), CycNum::from_int(1));
        for (k, &e) in v.iter().enumerate() {
            for _ in 0..e {
                let mut next = MonoPoly::new();
                for (w, c) in &acc {
                    axpy(&mut next, c, &self.mul_letter_depth(w, k, depth + 1));
                }
                acc = next;
            }
        }
        let acc = Arc::new(acc);
        self.mono_memo.lock().unwrap().insert(key, acc.clone());
        acc
    }

    pub fn mul_poly(&self, a: &MonoPoly, b: &MonoPoly) -> MonoPoly {
        let mut out = MonoPoly::new();
        for (u, c) in a {
            for (v, d) in b {
                axpy(&mut out, &(c * d), &self.mul_mono(u, v));
            }
        }
        out
    }

    /// Image of a free-algebra polynomial (letter `i` ↦ `x_i`).
    pub fn eval_free(&self, poly: &FreePoly, simple_positions: &[usize]) -> MonoPoly {
        let mut out = MonoPoly::new();
        for (w, c) in poly {
            let mut acc = MonoPoly::new();
            acc.insert(vec![0u8; self.p], c.clone());
            for &l in w {
                let k = simple_positions[l as usize];
                let mut next = MonoPoly::new();
                for (m, a) in &acc {
                    axpy(&mut next, a, &self.mul_letter(m, k));
                }
                acc = next;
            }
            for (m, a) in acc {
                add_entry(&mut out, m, &a);
            }
        }
        out
    }

    /// Confluence of the overlaps `y_k y_j y_i`, `y_j^{N} y_i` and `y_j y_i^{N}`.
    fn check_overlaps(&self) -> Result<(), BuildError> {
        for i in 0..self.p {
            for j in i + 1..self.p {
                let yj = self.unit_mono(j);
                let yi = self.unit_mono(i);
                // y_j^N y_i: the power vanishes, so y_j^{N-1}·(y_j y_i) must vanish.
                let mut top = vec![0u8; self.p];
                top[j] = (self.n[j] - 1) as u8;
                let mut acc = MonoPoly::new();
                for (w, c) in &self.rules[&(j, i)] {
                    axpy(&mut acc, c, &self.mul_mono(&top, w));
                }
                if !acc.is_empty() {
                    return Err(completion(format!("y{}^{} y{}", j + 1, self.n[j], i + 1), "does not reduce to 0"));
                }
                // y_j y_i^N, reduced from the left.
                let mut acc = MonoPoly::new();
                acc.insert(yj.clone(), CycNum::from_int(1));
                for _ in 0..self.n[i] {
                    let mut next = MonoPoly::new();
                    for (w, c) in &acc {
                        axpy(&mut next, c, &self.mul_letter(w, i));
                    }
                    acc = next;
                }
                if !acc.is_empty() {
                    return Err(completion(format!("y{} y{}^{}", j + 1, i + 1, self.n[i]), "does not reduce to 0"));
                }
                for k in j + 1..self.p {
                    let yk = self.unit_mono(k);
                    // (y_k y_j) y_i
                    let mut left = MonoPoly::new();
                    for (w, c) in self.mul_letter(&yk, j).iter() {
                        axpy(&mut left, c, &self.mul_letter(w, i));
                    }
                    // y_k (y_j y_i)
                    let mut right = MonoPoly::new();
                    for (w, c) in &self.rules[&(j, i)] {
                        axpy(&mut right, c, &self.mul_mono(&yk, w));
                    }
                    if left != right {
                        return Err(completion(
                            format!("y{} y{} y{}", k + 1, j + 1, i + 1),
                            "the two reductions disagree",
                        ));
                    }
                }
                let _ = yi;
            }
        }
        Ok(())
    }
}

/// Quantum Serre relations `ad_c(x_i)^{1−a_ij}(x_j)` for `i ≠ j` and root powers `y_k^{N_k}`.
/// Root powers are only expanded when `keep` accepts their degree.
pub fn defining_relations(
    d: &CartanDatum,
    roots: &RootData,
    root_vectors: &[FreePoly],
    keep: impl Fn(&[i32]) -> bool,
) -> Vec<Relation> {
    let theta = d.rank();
    let mut rels = Vec::new();
    for i in 0..theta {
        for j in 0..theta {
            if i == j {
                continue;
            }
            let mut y = free::letter(j);
            let mut deg = crate::cartan::roots::unit(theta, j);
            let ai = crate::cartan::roots::unit(theta, i);
            for _ in 0..(1 - d.cartan.entry(i, j)) {
                let c = bicharacter(d, &ai, &deg);
                y = free::commutator(&free::letter(i), &y, &c);
                deg = add_deg(&deg, &ai);
            }
            rels.push(Relation { name: format!("serre({},{})", i + 1, j + 1), degree: deg, poly: y });
        }
    }
    for (k, yk) in root_vectors.iter().enumerate() {
        let n = roots.n[k];
        let degree: Vec<i32> = roots.positive_roots[k].iter().map(|&c| c * n as i32).collect();
        if keep(&degree) {
            rels.push(Relation { name: format!("y{}^{}", k + 1, n), degree, poly: free::power(yk, n) });
        }
    }
    rels
}
