//! The `HopfAlgebra` interface on a fixed basis, materialized structure tables,
//! tensor arithmetic, and the Hopf-axiom checker.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycNum;
use crate::linalg::{add_entry, axpy, SparseVec};

/// Finite linear combination of basis elements.
pub type AlgElement = SparseVec<usize>;
/// Element of `A ⊗ A`.
pub type Tensor = SparseVec<(usize, usize)>;
/// Element of `A ⊗ A ⊗ A`.
pub type Tensor3 = SparseVec<(usize, usize, usize)>;

pub fn basis_vector(k: usize) -> AlgElement {
    let mut e = AlgElement::new();
    e.insert(k, CycNum::from_int(1));
    e
}

pub fn tensor_of(a: &AlgElement, b: &AlgElement) -> Tensor {
    let mut t = Tensor::new();
    for (i, x) in a {
        for (j, y) in b {
            add_entry(&mut t, (*i, *j), &(x * y));
        }
    }
    t
}

/// Flips the factors of a tensor.
pub fn flip(t: &Tensor) -> Tensor {
    t.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect()
}

/// A finite-dimensional Hopf algebra presented on a basis. Structure constants may
/// be computed on demand; implementations memoize.
pub trait HopfAlgebra {
    fn dim(&self) -> usize;
    fn unit(&self) -> AlgElement;
    fn mul_basis(&self, i: usize, j: usize) -> Arc<AlgElement>;
    fn comul_basis(&self, k: usize) -> Arc<Tensor>;
    fn counit_basis(&self, k: usize) -> CycNum;
    fn antipode_basis(&self, k: usize) -> Arc<AlgElement>;
    fn antipode_inv_basis(&self, k: usize) -> Arc<AlgElement>;

    fn mul(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        let mut out = AlgElement::new();
        for (i, x) in a {
            for (j, y) in b {
                axpy(&mut out, &(x * y), &self.mul_basis(*i, *j));
            }
        }
        out
    }

    fn mul_all(&self, factors: &[&AlgElement]) -> AlgElement {
        factors.iter().fold(self.unit(), |acc, f| self.mul(&acc, f))
    }

    fn pow(&self, a: &AlgElement, n: u32) -> AlgElement {
        (0..n).fold(self.unit(), |acc, _| self.mul(&acc, a))
    }

    fn comul(&self, a: &AlgElement) -> Tensor {
        let mut out = Tensor::new();
        for (k, c) in a {
            axpy(&mut out, c, &self.comul_basis(*k));
        }
        out
    }

    fn counit(&self, a: &AlgElement) -> CycNum {
        a.iter().fold(CycNum::from_int(0), |acc, (k, c)| acc + c * &self.counit_basis(*k))
    }

    fn antipode(&self, a: &AlgElement) -> AlgElement {
        let mut out = AlgElement::new();
        for (k, c) in a {
            axpy(&mut out, c, &self.antipode_basis(*k));
        }
        out
    }

    fn antipode_inv(&self, a: &AlgElement) -> AlgElement {
        let mut out = AlgElement::new();
        for (k, c) in a {
            axpy(&mut out, c, &self.antipode_inv_basis(*k));
        }
        out
    }

    fn scalar(&self, c: &CycNum) -> AlgElement {
        crate::linalg::scale(&self.unit(), c)
    }

    /// Product in `A ⊗ A`.
    fn tensor_mul(&self, s: &Tensor, t: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (&(a, b), x) in s {
            for (&(c, d), y) in t {
                let left = self.mul_basis(a, c);
                let right = self.mul_basis(b, d);
                let xy = x * y;
                for (p, u) in left.iter() {
                    let xyu = &xy * u;
                    for (q, v) in right.iter() {
                        add_entry(&mut out, (*p, *q), &(&xyu * v));
                    }
                }
            }
        }
        out
    }

    /// `(Δ ⊗ id)(t)`.
    fn comul_left(&self, t: &Tensor) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&(a, b), c) in t {
            for (&(p, q), d) in self.comul_basis(a).iter() {
                add_entry(&mut out, (p, q, b), &(c * d));
            }
        }
        out
    }

    /// `(id ⊗ Δ)(t)`.
    fn comul_right(&self, t: &Tensor) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&(a, b), c) in t {
            for (&(p, q), d) in self.comul_basis(b).iter() {
                add_entry(&mut out, (a, p, q), &(c * d));
            }
        }
        out
    }

    /// Commutator `ab − ba`.
    fn commutator(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        let mut out = self.mul(a, b);
        axpy(&mut out, &CycNum::from_int(-1), &self.mul(b, a));
        out
    }

    /// Hopf adjoint action `ad(h)(k) = h₁ k S(h₂)`.
    fn adjoint(&self, h: &AlgElement, k: &AlgElement) -> AlgElement {
        let mut out = AlgElement::new();
        for (&(a, b), c) in self.comul(h).iter() {
            let left = self.mul(&basis_vector(a), k);
            let prod = self.mul(&left, &self.antipode_basis(b));
            axpy(&mut out, c, &prod);
        }
        out
    }

    /// Multiplicative inverse by solving `a·x = 1`; `None` if not invertible.
    fn inverse(&self, a: &AlgElement) -> Option<AlgElement> {
        let dim = self.dim();
        let cols: Vec<AlgElement> = (0..dim).map(|j| self.mul(a, &basis_vector(j))).collect();
        let x = crate::linalg::solve(&cols, &self.unit())?;
        if self.mul(&x, a) == self.unit() {
            Some(x)
        } else {
            None
        }
    }
}

/// Structure constants held in memory.
#[derive(Debug, Clone)]
pub struct StructureTables {
    pub dim: usize,
    pub unit: AlgElement,
    /// Absent pairs multiply to zero.
    pub mult: HashMap<(usize, usize), Arc<AlgElement>>,
    pub comult: Vec<Arc<Tensor>>,
    pub counit: Vec<CycNum>,
    pub antipode: Vec<Arc<AlgElement>>,
    pub antipode_inv: Vec<Arc<AlgElement>>,
}

impl StructureTables {
    /// Materializes every structure constant of `h`.
    pub fn from_algebra<H: HopfAlgebra + ?Sized>(h: &H) -> Self {
        let dim = h.dim();
        let mut mult = HashMap::new();
        for i in 0..dim {
            for j in 0..dim {
                let p = h.mul_basis(i, j);
                if !p.is_empty() {
                    mult.insert((i, j), p);
                }
            }
        }
        StructureTables {
            dim,
            unit: h.unit(),
            mult,
            comult: (0..dim).map(|k| h.comul_basis(k)).collect(),
            counit: (0..dim).map(|k| h.counit_basis(k)).collect(),
            antipode: (0..dim).map(|k| h.antipode_basis(k)).collect(),
            antipode_inv: (0..dim).map(|k| h.antipode_inv_basis(k)).collect(),
        }
    }

    /// Flat list of `(left, right, result, coefficient)` entries, sorted.
    pub fn mult_entries(&self) -> Vec<(usize, usize, usize, CycNum)> {
        let mut out: Vec<_> = self
            .mult
            .iter()
            .flat_map(|(&(i, j), e)| e.iter().map(move |(&k, c)| (i, j, k, c.clone())))
            .collect();
        out.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
        out
    }
}

impl HopfAlgebra for StructureTables {
    fn dim(&self) -> usize {
        self.dim
    }
    fn unit(&self) -> AlgElement {
        self.unit.clone()
    }
    fn mul_basis(&self, i: usize, j: usize) -> Arc<AlgElement> {
        self.mult.get(&(i, j)).cloned().unwrap_or_default()
    }
    fn comul_basis(&self, k: usize) -> Arc<Tensor> {
        self.comult[k].clone()
    }
    fn counit_basis(&self, k: usize) -> CycNum {
        self.counit[k].clone()
    }
    fn antipode_basis(&self, k: usize) -> Arc<AlgElement> {
        self.antipode[k].clone()
    }
    fn antipode_inv_basis(&self, k: usize) -> Arc<AlgElement> {
        self.antipode_inv[k].clone()
    }
}

/// How much of the basis the quadratic axiom checks cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CheckLevel {
    /// Every identity on all basis pairs (and triples for associativity).
    FullBasis,
    /// Quadratic identities with one factor an algebra generator, plus random samples.
    Generators,
}

/// Outcome of one family of checks.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, passed: bool, cases: usize, detail: Option<String>) -> Self {
        CheckResult { name: name.into(), passed, cases, detail }
    }
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

fn tensor3_eq(a: &Tensor3, b: &Tensor3) -> bool {
    a == b
}

/// Verifies the Hopf-algebra axioms on the basis.
///
/// `generators` must generate the algebra. At [`CheckLevel::Generators`] the quadratic
/// identities `(ab)x = a(bx)` and `Δ(ax) = Δ(a)Δ(x)` run over all basis `a`, `b` and
/// generators `x`, which proves them everywhere by induction on word length; `samples`
/// extra random basis triples are checked as well.
pub fn check_hopf_axioms<H: HopfAlgebra + ?Sized>(
    h: &H,
    generators: &[AlgElement],
    level: CheckLevel,
    samples: usize,
    seed: u64,
) -> Vec<CheckResult> {
    let dim = h.dim();
    let basis: Vec<AlgElement> = (0..dim).map(basis_vector).collect();
    let unit = h.unit();
    let mut out = Vec::new();

    // Unit.
    let mut fail = None;
    for (k, b) in basis.iter().enumerate() {
        if h.mul(&unit, b) != *b || h.mul(b, &unit) != *b {
            fail = Some(format!("basis {k}"));
            break;
        }
    }
    out.push(CheckResult::new("unit: 1·a = a = a·1", fail.is_none(), dim, fail));

    // Coassociativity, counit, antipode (linear: always on the full basis).
    let mut coassoc = None;
    let mut counit = None;
    let mut antipode = None;
    for k in 0..dim {
        let d = h.comul_basis(k);
        if coassoc.is_none() && !tensor3_eq(&h.comul_left(&d), &h.comul_right(&d)) {
            coassoc = Some(format!("basis {k}"));
        }
        let mut left = AlgElement::new();
        let mut right = AlgElement::new();
        let mut s_left = AlgElement::new();
        let mut s_right = AlgElement::new();
        for (&(a, b), c) in d.iter() {
            axpy(&mut left, &(c * &h.counit_basis(a)), &basis[b]);
            axpy(&mut right, &(c * &h.counit_basis(b)), &basis[a]);
            axpy(&mut s_left, c, &h.mul(&h.antipode_basis(a), &basis[b]));
            axpy(&mut s_right, c, &h.mul(&basis[a], &h.antipode_basis(b)));
        }
        if counit.is_none() && (left != basis[k] || right != basis[k]) {
            counit = Some(format!("basis {k}"));
        }
        let expect = h.scalar(&h.counit_basis(k));
        if antipode.is_none() && (s_left != expect || s_right != expect) {
            antipode = Some(format!("basis {k}"));
        }
        let sinv = h.antipode_inv_basis(k);
        if antipode.is_none() && h.antipode(&sinv) != basis[k] {
            antipode = Some(format!("S(S^-1) at basis {k}"));
        }
    }
    out.push(CheckResult::new("coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ", coassoc.is_none(), dim, coassoc));
    out.push(CheckResult::new("counit: (ε⊗id)Δ = id = (id⊗ε)Δ", counit.is_none(), dim, counit));
    out.push(CheckResult::new("antipode: m(S⊗id)Δ = ηε = m(id⊗S)Δ", antipode.is_none(), dim, antipode));

    // Quadratic identities.
    let right_factors: Vec<AlgElement> = match level {
        CheckLevel::FullBasis => basis.clone(),
        CheckLevel::Generators => generators.to_vec(),
    };
    let mut assoc = None;
    let mut mult = None;
    let mut eps = None;
    let mut cases = 0;
    for a in 0..dim {
        let da = h.comul_basis(a);
        for x in &right_factors {
            let ax = h.mul(&basis[a], x);
            if mult.is_none() && h.comul(&ax) != h.tensor_mul(&da, &h.comul(x)) {
                mult = Some(format!("Δ(e_{a}·x)"));
            }
            if eps.is_none() && h.counit(&ax) != &h.counit_basis(a) * &h.counit(x) {
                eps = Some(format!("ε(e_{a}·x)"));
            }
            for b in 0..dim {
                cases += 1;
                let ab = h.mul_basis(a, b);
                if assoc.is_none() && h.mul(&ab, x) != h.mul(&basis[a], &h.mul(&basis[b], x)) {
                    assoc = Some(format!("(e_{a} e_{b})x"));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let (a, b, c) = (rng.random_range(0..dim), rng.random_range(0..dim), rng.random_range(0..dim));
        cases += 1;
        let l = h.mul(&h.mul_basis(a, b), &basis[c]);
        let r = h.mul(&basis[a], &h.mul_basis(b, c));
        if assoc.is_none() && l != r {
            assoc = Some(format!("random triple ({a},{b},{c})"));
        }
        let dab = h.comul(&h.mul_basis(a, b));
        if mult.is_none() && dab != h.tensor_mul(&h.comul_basis(a), &h.comul_basis(b)) {
            mult = Some(format!("random pair ({a},{b})"));
        }
    }
    out.push(CheckResult::new("associativity: (ab)c = a(bc)", assoc.is_none(), cases, assoc));
    out.push(CheckResult::new("Δ is multiplicative: Δ(ab) = Δ(a)Δ(b)", mult.is_none(), cases, mult));
    out.push(CheckResult::new("ε is multiplicative: ε(ab) = ε(a)ε(b)", eps.is_none(), cases, eps));
    let d1 = h.comul(&unit);
    let one_one = tensor_of(&unit, &unit);
    out.push(CheckResult::new("Δ(1) = 1⊗1", d1 == one_one, 1, None));
    out
}
