//! The Drinfeld double `D(A) = A*^{cop} ⋈ A` on the basis `e^f ⊗ e_a`, multiplied on
//! demand through the straightening rule `a f = (a₁ ⇀ f ↼ S⁻¹a₃) a₂` with
//! `(a ⇀ f)(b) = f(ba)` and `(f ↼ a)(b) = f(ab)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{Character, GroupElement};
use crate::algebra::tables::Tensor3;
use crate::algebra::{
    basis_vector, tensor_of, AlgElement, CheckResult, HopfAlgebra, PointedHopfAlgebra, Tensor,
};
use crate::cyclotomic::CycNum;
use crate::hopf::DualAlgebra;
use crate::linalg::{add_entry, axpy, scale};

/// Element of `D(A)`; index `f·dim A + a` stands for `e^f ⊗ e_a`.
pub type DoubleElement = AlgElement;

/// Above this dimension no check walks the whole basis of `D(A)`.
pub const FULL_CHECK_LIMIT: usize = 10_000;

type Memo<K, V> = Mutex<HashMap<K, Arc<V>>>;

pub struct DrinfeldDouble {
    pub a: PointedHopfAlgebra,
    pub dual: DualAlgebra,
    n: usize,
    one: usize,
    eps: AlgElement,
    straighten_memo: Memo<(usize, usize), DoubleElement>,
    mul_memo: Memo<(usize, usize), DoubleElement>,
    a_comul2: Memo<usize, Tensor3>,
    /// `Δ²(e^f)` grouped by the third leg.
    f_comul2: Memo<usize, HashMap<usize, Vec<(usize, usize, CycNum)>>>,
}

fn cached<K: std::hash::Hash + Eq + Copy, V>(m: &Memo<K, V>, k: K, f: impl FnOnce() -> V) -> Arc<V> {
    if let Some(v) = m.lock().unwrap().get(&k) {
        return v.clone();
    }
    let v = Arc::new(f());
    m.lock().unwrap().entry(k).or_insert(v).clone()
}

impl DrinfeldDouble {
    pub fn new(a: PointedHopfAlgebra, dual: DualAlgebra) -> Self {
        let n = a.dim();
        let one = *a.unit().keys().next().expect("unit is a basis element");
        let eps = dual.unit();
        DrinfeldDouble {
            a,
            dual,
            n,
            one,
            eps,
            straighten_memo: Mutex::default(),
            mul_memo: Mutex::default(),
            a_comul2: Mutex::default(),
            f_comul2: Mutex::default(),
        }
    }

    pub fn pair_index(&self, f: usize, a: usize) -> usize {
        f * self.n + a
    }

    pub fn split(&self, k: usize) -> (usize, usize) {
        (k / self.n, k % self.n)
    }

    /// `f ⊗ a`.
    pub fn tensor(&self, f: &AlgElement, a: &AlgElement) -> DoubleElement {
        let mut out = DoubleElement::new();
        for (i, c) in f {
            for (j, d) in a {
                add_entry(&mut out, self.pair_index(*i, *j), &(c * d));
            }
        }
        out
    }

    /// `f ↦ f ⊗ 1`.
    pub fn embed_dual(&self, f: &AlgElement) -> DoubleElement {
        self.tensor(f, &basis_vector(self.one))
    }

    /// `a ↦ ε ⊗ a`.
    pub fn embed(&self, a: &AlgElement) -> DoubleElement {
        self.tensor(&self.eps, a)
    }

    pub fn g(&self, g: &GroupElement) -> DoubleElement {
        self.embed(&self.a.group_element(g))
    }

    pub fn chi(&self, c: &Character) -> DoubleElement {
        self.embed_dual(&self.dual.character(c))
    }

    pub fn x(&self, i: usize) -> DoubleElement {
        self.embed(&self.a.x(i))
    }

    pub fn xi(&self, i: usize) -> DoubleElement {
        self.embed_dual(&self.dual.xi(i))
    }

    /// `ξ_i χ_i^{-1}`.
    pub fn z(&self, i: usize) -> DoubleElement {
        let grp = &self.a.datum.group;
        self.mul(&self.xi(i), &self.chi(&grp.char_inv(&self.a.datum.chi[i])))
    }

    /// Generators `g`, `χ` (unit exponent vectors), `x_i`, `ξ_i`.
    pub fn generators(&self) -> Vec<DoubleElement> {
        let mut out: Vec<DoubleElement> = self.a.generators().iter().map(|x| self.embed(x)).collect();
        out.extend(self.dual.generators().iter().map(|f| self.embed_dual(f)));
        out
    }

    /// Grouplikes `χ g` of `D(A)`.
    pub fn grouplikes(&self) -> Vec<(Character, GroupElement, DoubleElement)> {
        let grp = &self.a.datum.group;
        let mut out = Vec::new();
        for c in grp.enumerate_characters(u64::MAX).unwrap() {
            for g in &self.a.group_elements {
                let e = self.mul(&self.chi(&c), &self.g(g));
                out.push((c.clone(), g.clone(), e));
            }
        }
        out
    }

    fn a_delta2(&self, a: usize) -> Arc<Tensor3> {
        cached(&self.a_comul2, a, || self.a.comul_left(&self.a.comul_basis(a)))
    }

    fn f_delta2(&self, f: usize) -> Arc<HashMap<usize, Vec<(usize, usize, CycNum)>>> {
        cached(&self.f_comul2, f, || {
            let mut by_third: HashMap<usize, Vec<(usize, usize, CycNum)>> = HashMap::new();
            for (&(f1, f2, f3), c) in self.dual.comul_left(&self.dual.comul_basis(f)).iter() {
                by_third.entry(f3).or_default().push((f1, f2, c.clone()));
            }
            by_third
        })
    }

    /// `(ε ⊗ e_a)(e^f ⊗ 1) = Σ ⟨f₁, S⁻¹a₃⟩ ⟨f₃, a₁⟩ f₂ ⊗ a₂`.
    pub fn straighten(&self, a: usize, f: usize) -> Arc<DoubleElement> {
        cached(&self.straighten_memo, (a, f), || {
            let fd = self.f_delta2(f);
            let mut out = DoubleElement::new();
            for (&(a1, a2, a3), c) in self.a_delta2(a).iter() {
                let Some(terms) = fd.get(&a1) else { continue };
                let s = self.a.antipode_inv_basis(a3);
                for (f1, f2, d) in terms {
                    if let Some(e) = s.get(f1) {
                        add_entry(&mut out, self.pair_index(*f2, a2), &(c * d * e));
                    }
                }
            }
            out
        })
    }

    /// `(ε ⊗ a)(f ⊗ 1)` for general `a`, `f`.
    pub fn straighten_elements(&self, a: &AlgElement, f: &AlgElement) -> DoubleElement {
        let mut out = DoubleElement::new();
        for (i, c) in a {
            for (j, d) in f {
                axpy(&mut out, &(c * d), &self.straighten(*i, *j));
            }
        }
        out
    }

    /// `(Δ ⊗ id)` and friends on `D ⊗ D ⊗ D`: product of three-leg tensors.
    pub fn tensor3_mul(&self, s: &Tensor3, t: &Tensor3) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&(a, b, c), x) in s {
            for (&(p, q, r), y) in t {
                let xy = x * y;
                let (m1, m2, m3) = (self.mul_basis(a, p), self.mul_basis(b, q), self.mul_basis(c, r));
                for (i, u) in m1.iter() {
                    let xyu = &xy * u;
                    for (j, v) in m2.iter() {
                        let xyuv = &xyu * v;
                        for (k, w) in m3.iter() {
                            add_entry(&mut out, (*i, *j, *k), &(&xyuv * w));
                        }
                    }
                }
            }
        }
        out
    }
}

impl HopfAlgebra for DrinfeldDouble {
    fn dim(&self) -> usize {
        self.n * self.n
    }

    fn unit(&self) -> AlgElement {
        self.tensor(&self.eps, &basis_vector(self.one))
    }

    fn mul_basis(&self, i: usize, j: usize) -> Arc<AlgElement> {
        cached(&self.mul_memo, (i, j), || {
            let (f, a) = self.split(i);
            let (f2, a2) = self.split(j);
            let mut out = DoubleElement::new();
            for (k, c) in self.straighten(a, f2).iter() {
                let (g, b) = self.split(*k);
                let left = self.dual.mul_basis(f, g);
                let right = self.a.mul_basis(b, a2);
                for (p, x) in left.iter() {
                    let cx = c * x;
                    for (q, y) in right.iter() {
                        add_entry(&mut out, self.pair_index(*p, *q), &(&cx * y));
                    }
                }
            }
            out
        })
    }

    /// `Δ(f ⊗ a) = (f₂ ⊗ a₁) ⊗ (f₁ ⊗ a₂)`.
    fn comul_basis(&self, k: usize) -> Arc<Tensor> {
        let (f, a) = self.split(k);
        let mut out = Tensor::new();
        for (&(f1, f2), c) in self.dual.comul_basis(f).iter() {
            for (&(a1, a2), d) in self.a.comul_basis(a).iter() {
                add_entry(&mut out, (self.pair_index(f2, a1), self.pair_index(f1, a2)), &(c * d));
            }
        }
        Arc::new(out)
    }

    fn counit_basis(&self, k: usize) -> CycNum {
        let (f, a) = self.split(k);
        self.dual.counit_basis(f) * self.a.counit_basis(a)
    }

    /// `S(f ⊗ a) = (ε ⊗ S(a)) (f∘S⁻¹ ⊗ 1)`.
    fn antipode_basis(&self, k: usize) -> Arc<AlgElement> {
        let (f, a) = self.split(k);
        Arc::new(self.straighten_elements(&self.a.antipode_basis(a), &self.dual.antipode_inv_basis(f)))
    }

    /// `S⁻¹(f ⊗ a) = (ε ⊗ S⁻¹(a)) (f∘S ⊗ 1)`.
    fn antipode_inv_basis(&self, k: usize) -> Arc<AlgElement> {
        let (f, a) = self.split(k);
        Arc::new(self.straighten_elements(&self.a.antipode_inv_basis(a), &self.dual.antipode_basis(f)))
    }
}

fn eq_check(name: impl Into<String>, lhs: &AlgElement, rhs: &AlgElement) -> CheckResult {
    let ok = lhs == rhs;
    let detail = (!ok).then(|| format!("lhs has {} terms, rhs has {} terms", lhs.len(), rhs.len()));
    CheckResult::new(name, ok, 1, detail)
}

fn all_check(name: impl Into<String>, cases: Vec<(String, bool)>) -> CheckResult {
    let n = cases.len();
    let fail = cases.into_iter().find(|(_, ok)| !ok).map(|(s, _)| s);
    CheckResult::new(name, fail.is_none(), n, fail)
}

/// The cross relations, the relations joining `A` and `A*` inside `D(A)`, the double
/// Serre relations and the power rule, each evaluated exactly.
pub fn verify_double_relations(d: &DrinfeldDouble, assoc_samples: usize, seed: u64) -> Vec<CheckResult> {
    let datum = &d.a.datum;
    let grp = &datum.group;
    let theta = datum.rank();
    let elems = &d.a.group_elements;
    let chars = grp.enumerate_characters(u64::MAX).unwrap();
    let mut out = Vec::new();

    let dim_expected = grp.order() as usize * d.a.roots.pbw_dimension();
    out.push(CheckResult::new(
        "dim D(A) = |G|² ∏ N_β²",
        d.dim() == dim_expected * dim_expected,
        1,
        Some(format!("{}", d.dim())),
    ));

    for i in 0..theta {
        let xi = d.xi(i);
        out.push(all_check(
            format!("g ξ_{0} g^-1 = χ_{0}^-1(g) ξ_{0}", i + 1),
            elems
                .iter()
                .map(|g| {
                    let lhs = d.mul_all(&[&d.g(g), &xi, &d.g(&grp.inv(g))]);
                    let c = grp.pair(&datum.chi[i], g).unwrap().inv().unwrap();
                    (format!("g = {g}"), lhs == scale(&xi, &c))
                })
                .collect(),
        ));
    }
    let mut pairs = Vec::new();
    for g in elems {
        for c in &chars {
            let (dg, dc) = (d.g(g), d.chi(c));
            pairs.push((format!("g = {g}, χ = {c}"), d.mul(&dg, &dc) == d.mul(&dc, &dg)));
        }
    }
    out.push(all_check("g χ = χ g", pairs));
    for i in 0..theta {
        for j in 0..theta {
            if i != j {
                let (x, xi) = (d.x(i), d.xi(j));
                out.push(eq_check(format!("x_{} ξ_{} = ξ_{} x_{}", i + 1, j + 1, j + 1, i + 1), &d.mul(&x, &xi), &d.mul(&xi, &x)));
            }
        }
        let mut rhs = d.chi(&datum.chi[i]);
        axpy(&mut rhs, &CycNum::from_int(-1), &d.g(&datum.g[i]));
        out.push(eq_check(format!("[x_{0}, ξ_{0}] = χ_{0} − g_{0}", i + 1), &d.commutator(&d.x(i), &d.xi(i)), &rhs));
        let x = d.x(i);
        out.push(all_check(
            format!("χ^-1 x_{0} χ = χ(g_{0}) x_{0}", i + 1),
            chars
                .iter()
                .map(|c| {
                    let lhs = d.mul_all(&[&d.chi(&grp.char_inv(c)), &x, &d.chi(c)]);
                    (format!("χ = {c}"), lhs == scale(&x, &grp.pair(c, &datum.g[i]).unwrap()))
                })
                .collect(),
        ));
    }

    for i in 0..theta {
        let n = datum.order_n(i);
        out.push(eq_check(format!("x_{}^{} = 0", i + 1, n), &d.pow(&d.x(i), n), &AlgElement::new()));
        out.push(eq_check(format!("(ξ_{0}χ_{0}^-1)^{1} = 0", i + 1, n), &d.pow(&d.z(i), n), &AlgElement::new()));
        let (x, z) = (d.x(i), d.z(i));
        let mut conj_x = Vec::new();
        let mut conj_z = Vec::new();
        for g in elems {
            for c in &chars {
                let gc = d.mul(&d.g(g), &d.chi(c));
                let gc_inv = d.mul(&d.g(&grp.inv(g)), &d.chi(&grp.char_inv(c)));
                // ⟨χ_i ĝ_i^{-1}, gχ⟩ = χ_i(g) χ(g_i)^{-1}
                let s = grp.pair(&datum.chi[i], g).unwrap() * grp.pair(c, &datum.g[i]).unwrap().inv().unwrap();
                let label = format!("g = {g}, χ = {c}");
                conj_x.push((label.clone(), d.mul_all(&[&gc, &x, &gc_inv]) == scale(&x, &s)));
                conj_z.push((label, d.mul_all(&[&gc, &z, &gc_inv]) == scale(&z, &s.inv().unwrap())));
            }
        }
        out.push(all_check(format!("(gχ) x_{0} (gχ)^-1 = <χ_{0} ĝ_{0}^-1, gχ> x_{0}", i + 1), conj_x));
        out.push(all_check(
            format!("(gχ) ξ_{0}χ_{0}^-1 (gχ)^-1 = <χ_{0}^-1 ĝ_{0}, gχ> ξ_{0}χ_{0}^-1", i + 1),
            conj_z,
        ));
    }

    for i in 0..theta {
        for j in 0..theta {
            if i == j {
                continue;
            }
            let r = 1 - datum.cartan.entry(i, j);
            let (mut zx, mut zz) = (d.x(j), d.z(j));
            let (xi_, zi) = (d.x(i), d.z(i));
            for _ in 0..r {
                zx = d.adjoint(&xi_, &zx);
                zz = d.adjoint(&zi, &zz);
            }
            out.push(eq_check(format!("ad(x_{})^{}(x_{}) = 0", i + 1, r, j + 1), &zx, &AlgElement::new()));
            out.push(eq_check(
                format!("ad(ξ_{0}χ_{0}^-1)^{1}(ξ_{2}χ_{2}^-1) = 0", i + 1, r, j + 1),
                &zz,
                &AlgElement::new(),
            ));
        }
    }

    for i in 0..theta {
        let mut rhs = d.unit();
        let gc = d.mul(&d.g(&datum.g[i]), &d.chi(&grp.char_inv(&datum.chi[i])));
        axpy(&mut rhs, &CycNum::from_int(-1), &gc);
        out.push(eq_check(format!("ad(x_{0})(ξ_{0}χ_{0}^-1) = 1 − g_{0}χ_{0}^-1", i + 1), &d.adjoint(&d.x(i), &d.z(i)), &rhs));
        let x = d.x(i);
        let mut dx = tensor_of(&x, &d.unit());
        axpy(&mut dx, &CycNum::from_int(1), &tensor_of(&d.g(&datum.g[i]), &x));
        out.push(CheckResult::new(format!("Δ(x_{0}) = x_{0}⊗1 + g_{0}⊗x_{0}", i + 1), d.comul(&x) == dx, 1, None));
        let z = d.z(i);
        let ci = d.chi(&grp.char_inv(&datum.chi[i]));
        let mut dz = tensor_of(&ci, &z);
        axpy(&mut dz, &CycNum::from_int(1), &tensor_of(&z, &d.unit()));
        out.push(CheckResult::new(
            format!("Δ(ξ_{0}χ_{0}^-1) = χ_{0}^-1⊗ξ_{0}χ_{0}^-1 + ξ_{0}χ_{0}^-1⊗1", i + 1),
            d.comul(&z) == dz,
            1,
            None,
        ));
        // Coproduct of ξ_i seen in D(A)^{cop}-convention.
        let xi = d.xi(i);
        let mut dxi = tensor_of(&d.unit(), &xi);
        axpy(&mut dxi, &CycNum::from_int(1), &tensor_of(&xi, &d.chi(&datum.chi[i])));
        out.push(CheckResult::new(format!("Δ(ξ_{0}) = 1⊗ξ_{0} + ξ_{0}⊗χ_{0}", i + 1), d.comul(&xi) == dxi, 1, None));
    }

    for i in 0..theta {
        let xi = d.xi(i);
        let n_i = datum.order_n(i);
        let mut cases = Vec::new();
        for c in &chars {
            let base = d.mul(&xi, &d.chi(c));
            for n in 1..=n_i {
                let q = grp.pair(c, &datum.g[i]).unwrap().pow((n * (n - 1) / 2) as i64);
                let rhs = scale(&d.mul(&d.pow(&xi, n), &d.chi(&grp.char_pow(c, n as i64))), &q);
                cases.push((format!("χ = {c}, n = {n}"), d.pow(&base, n) == rhs));
            }
        }
        out.push(all_check(format!("(ξ_{0}χ)^n = χ(g_{0})^(n(n-1)/2) ξ_{0}^n χ^n in D(A)", i + 1), cases));
    }

    let gens = d.generators();
    let mut cases = Vec::new();
    for (p, x) in gens.iter().enumerate() {
        for (q, y) in gens.iter().enumerate() {
            let lhs = d.antipode(&d.mul(x, y));
            let rhs = d.mul(&d.antipode(y), &d.antipode(x));
            cases.push((format!("generators {p}, {q}"), lhs == rhs));
        }
    }
    out.push(all_check("S(xy) = S(y) S(x) on generators", cases));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = d.a.dim();
    let mut cases = Vec::new();
    for _ in 0..assoc_samples {
        let (p, q) = (rng.random_range(0..n), rng.random_range(0..n));
        let (fa, fb) = (basis_vector(rng.random_range(0..n)), basis_vector(rng.random_range(0..n)));
        let (ea, eb) = (basis_vector(p), basis_vector(q));
        let lhs = d.embed(&d.a.mul(&ea, &eb));
        let rhs = d.mul(&d.embed(&ea), &d.embed(&eb));
        let lhs2 = d.embed_dual(&d.dual.mul(&fa, &fb));
        let rhs2 = d.mul(&d.embed_dual(&fa), &d.embed_dual(&fb));
        cases.push((format!("basis {p}, {q}"), lhs == rhs && lhs2 == rhs2));
    }
    out.push(all_check("A and A* embed as subalgebras", cases));
    let dim = d.dim();
    let mut cases = Vec::new();
    for _ in 0..assoc_samples {
        let t: Vec<usize> = (0..3).map(|_| rng.random_range(0..dim)).collect();
        let (x, y, z) = (basis_vector(t[0]), basis_vector(t[1]), basis_vector(t[2]));
        let lhs = d.mul(&d.mul(&x, &y), &z);
        let rhs = d.mul(&x, &d.mul(&y, &z));
        cases.push((format!("basis triple {t:?}"), lhs == rhs));
    }
    out.push(all_check("associativity on random basis triples", cases));
    out
}

/// `R = Σ_l (ε ⊗ e_l) ⊗ (e^l ⊗ 1)`.
pub fn r_matrix(d: &DrinfeldDouble) -> Tensor {
    let mut out = Tensor::new();
    for l in 0..d.a.dim() {
        let left = d.embed(&basis_vector(l));
        let right = d.embed_dual(&basis_vector(l));
        axpy(&mut out, &CycNum::from_int(1), &tensor_of(&left, &right));
    }
    out
}

/// `u = Σ S(R²) R¹`.
pub fn drinfeld_u(d: &DrinfeldDouble, r: &Tensor) -> DoubleElement {
    let mut out = DoubleElement::new();
    for (&(i, j), c) in r {
        axpy(&mut out, c, &d.mul(&d.antipode_basis(j), &basis_vector(i)));
    }
    out
}

fn legs(t: &Tensor, pos: (usize, usize), one: &AlgElement) -> Tensor3 {
    let mut out = Tensor3::new();
    for (&(i, j), c) in t {
        for (k, e) in one {
            let key = match pos {
                (0, 1) => (i, j, *k),
                (0, 2) => (i, *k, j),
                (1, 2) => (*k, i, j),
                _ => unreachable!("leg positions"),
            };
            add_entry(&mut out, key, &(c * e));
        }
    }
    out
}

/// Quasitriangularity of `R`, invertibility, and Yang–Baxter (when `full`).
pub fn quasitriangular_checks(d: &DrinfeldDouble, r: &Tensor, full: bool) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let gens = d.generators();
    let mut cases = Vec::new();
    for (p, x) in gens.iter().enumerate() {
        let dx = d.comul(x);
        let lhs = d.tensor_mul(&crate::algebra::tables::flip(&dx), r);
        let rhs = d.tensor_mul(r, &dx);
        cases.push((format!("generator {p}"), lhs == rhs));
    }
    out.push(all_check("Δ^cop(x) R = R Δ(x) on generators", cases));

    // R⁻¹ = (S ⊗ id) R.
    let mut r_inv = Tensor::new();
    for (&(i, j), c) in r {
        for (k, e) in d.antipode_basis(i).iter() {
            add_entry(&mut r_inv, (*k, j), &(c * e));
        }
    }
    let one = d.unit();
    out.push(CheckResult::new(
        "R (S⊗id)(R) = 1⊗1",
        d.tensor_mul(r, &r_inv) == tensor_of(&one, &one) && d.tensor_mul(&r_inv, r) == tensor_of(&one, &one),
        1,
        None,
    ));
    if !full {
        return out;
    }
    let r12 = legs(r, (0, 1), &one);
    let r13 = legs(r, (0, 2), &one);
    let r23 = legs(r, (1, 2), &one);
    out.push(CheckResult::new("(Δ⊗id) R = R13 R23", d.comul_left(r) == d.tensor3_mul(&r13, &r23), 1, None));
    out.push(CheckResult::new("(id⊗Δ) R = R13 R12", d.comul_right(r) == d.tensor3_mul(&r13, &r12), 1, None));
    let lhs = d.tensor3_mul(&d.tensor3_mul(&r12, &r13), &r23);
    let rhs = d.tensor3_mul(&d.tensor3_mul(&r23, &r13), &r12);
    out.push(CheckResult::new("R12 R13 R23 = R23 R13 R12", lhs == rhs, 1, None));
    out
}

/// `S²(a) u = u a` on generators, invertibility of `u` (when `full`), and centrality of `uS(u)`.
pub fn drinfeld_element_checks(d: &DrinfeldDouble, u: &DoubleElement, full: bool) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let gens = d.generators();
    let cases = gens
        .iter()
        .enumerate()
        .map(|(p, x)| (format!("generator {p}"), d.mul(&d.antipode(&d.antipode(x)), u) == d.mul(u, x)))
        .collect();
    out.push(all_check("S²(a) u = u a on generators", cases));
    if full {
        let inv = d.inverse(u);
        out.push(CheckResult::new("u is invertible", inv.is_some(), 1, None));
        if let Some(ui) = inv {
            let cases = gens
                .iter()
                .enumerate()
                .map(|(p, x)| (format!("generator {p}"), d.antipode(&d.antipode(x)) == d.mul_all(&[u, x, &ui])))
                .collect();
            out.push(all_check("S²(a) = u a u^-1 on generators", cases));
        }
    }
    let datum = &d.a.datum;
    let cases = (0..datum.rank())
        .map(|i| {
            let x = d.x(i);
            let c = datum.q(i, i).inv().unwrap();
            (format!("i = {}", i + 1), d.antipode(&d.antipode(&x)) == scale(&x, &c))
        })
        .collect();
    out.push(all_check("S²(x_i) = χ_i(g_i)^-1 x_i", cases));
    let c = d.mul(u, &d.antipode(u));
    let cases =
        gens.iter().enumerate().map(|(p, x)| (format!("generator {p}"), d.mul(&c, x) == d.mul(x, &c))).collect();
    out.push(all_check("u S(u) is central", cases));
    out
}
