//! The pointed Hopf algebra `A = u(D,0,0)` on its PBW basis `y_1^{u_1} ⋯ y_p^{u_p} g`.

pub mod free;
pub mod pbw;
pub mod tables;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::abelian::{Character, GroupElement, DEFAULT_ENUMERATION_CAP};
use crate::cartan::{CartanDatum, RootData};
use crate::cyclotomic::{qbinom, CycNum};
use crate::linalg::{add_entry, axpy};
pub use pbw::{BuildError, Mono, MonoPoly, PbwEngine};
pub use tables::{
    basis_vector, check_hopf_axioms, tensor_of, AlgElement, CheckLevel, CheckResult, HopfAlgebra, StructureTables,
    Tensor,
};

/// Options for [`build_algebra`].
#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Multiplication is tabulated eagerly up to this dimension; on demand above it.
    pub max_dim: usize,
    pub enumeration_cap: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_dim: 1024, enumeration_cap: DEFAULT_ENUMERATION_CAP }
    }
}

/// A generator symbol for [`PointedHopfAlgebra::normal_form`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Symbol {
    X(usize),
    G(GroupElement),
}

type Memo<K, V> = Mutex<HashMap<K, Arc<V>>>;

pub struct PointedHopfAlgebra {
    pub datum: CartanDatum,
    pub roots: RootData,
    pub engine: PbwEngine,
    /// Elements of `G` in enumeration order.
    pub group_elements: Vec<GroupElement>,
    /// PBW monomials in lexicographic order.
    pub monos: Vec<Mono>,
    mono_index: HashMap<Mono, usize>,
    /// Powers of the primitive root of unity of the ambient conductor.
    zetas: Vec<CycNum>,
    mult: Memo<(usize, usize), AlgElement>,
    comult_mono: Memo<Mono, Tensor>,
    antipode_mono: Memo<Mono, AlgElement>,
    antipode_inv_mono: Memo<Mono, AlgElement>,
}

/// Builds `u(D,0,0)` with derived commutation rules; fails on any completion tripwire.
pub fn build_algebra(d: &CartanDatum, opts: BuildOptions) -> Result<PointedHopfAlgebra, crate::Error> {
    let roots = d.roots();
    let dim = roots.pbw_dimension() * d.group.order() as usize;
    let engine = PbwEngine::new(d, &roots)?;
    let group_elements = d.group.enumerate(opts.enumeration_cap)?;
    let mut monos = Vec::new();
    let mut cur = vec![0u8; roots.len()];
    loop {
        monos.push(cur.clone());
        let mut k = roots.len();
        let done = loop {
            if k == 0 {
                break true;
            }
            k -= 1;
            cur[k] += 1;
            if (cur[k] as u32) < roots.n[k] {
                break false;
            }
            cur[k] = 0;
        };
        if done {
            break;
        }
    }
    let mono_index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let e = d.conductor();
    let a = PointedHopfAlgebra {
        datum: d.clone(),
        roots,
        engine,
        group_elements,
        monos,
        mono_index,
        zetas: (0..e).map(|k| CycNum::zeta(e, k as i64)).collect(),
        mult: Mutex::new(HashMap::new()),
        comult_mono: Mutex::new(HashMap::new()),
        antipode_mono: Mutex::new(HashMap::new()),
        antipode_inv_mono: Mutex::new(HashMap::new()),
    };
    debug_assert_eq!(a.dim(), dim);
    a.verify_defining_relations()?;
    if dim <= opts.max_dim {
        for i in 0..dim {
            for j in 0..dim {
                a.mul_basis(i, j);
            }
        }
    }
    Ok(a)
}

impl PointedHopfAlgebra {
    pub fn order(&self) -> usize {
        self.group_elements.len()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn index(&self, u: &[u8], g: &GroupElement) -> usize {
        self.mono_index[u] * self.order() + self.datum.group.index_of(g)
    }

    pub fn decompose(&self, k: usize) -> (&Mono, &GroupElement) {
        (&self.monos[k / self.order()], &self.group_elements[k % self.order()])
    }

    pub fn mono_position(&self, u: &[u8]) -> usize {
        self.mono_index[u]
    }

    fn identity_mono(&self) -> Mono {
        vec![0u8; self.roots.len()]
    }

    fn zeta(&self, k: u32) -> &CycNum {
        &self.zetas[k as usize % self.zetas.len()]
    }

    /// `χ(g)` as a cached root of unity.
    pub fn pair(&self, chi: &Character, g: &GroupElement) -> CycNum {
        self.zeta(self.datum.group.pair_exponent(chi, g)).clone()
    }

    /// Character `χ_u = ∏ χ_{β_k}^{u_k}` by which `G` acts on `y_u`.
    pub fn mono_character(&self, u: &[u8]) -> Character {
        let grp = &self.datum.group;
        u.iter()
            .enumerate()
            .fold(grp.trivial_character(), |acc, (k, &e)| grp.char_mul(&acc, &grp.char_pow(&self.roots.chi[k], e as i64)))
    }

    /// Grouplike `g_u = ∏ g_{β_k}^{u_k}`.
    pub fn mono_grouplike(&self, u: &[u8]) -> GroupElement {
        let grp = &self.datum.group;
        u.iter()
            .enumerate()
            .fold(grp.identity(), |acc, (k, &e)| grp.mul(&acc, &grp.pow(&self.roots.g[k], e as i64)))
    }

    /// `Z^θ`-degree of a basis element.
    pub fn degree(&self, k: usize) -> Vec<i32> {
        self.engine.mono_degree(self.decompose(k).0)
    }

    pub fn group_element(&self, g: &GroupElement) -> AlgElement {
        basis_vector(self.index(&self.identity_mono(), g))
    }

    /// The root vector `y_k` (position in the convex order).
    pub fn y(&self, k: usize) -> AlgElement {
        let mut u = self.identity_mono();
        u[k] = 1;
        basis_vector(self.index(&u, &self.datum.group.identity()))
    }

    /// The generator `x_i = y_{m_i}`.
    pub fn x(&self, i: usize) -> AlgElement {
        self.y(self.roots.simple_positions[i])
    }

    /// Basis element `y_u · 1`.
    pub fn mono_element(&self, u: &[u8]) -> AlgElement {
        basis_vector(self.index(u, &self.datum.group.identity()))
    }

    fn mono_poly_element(&self, p: &MonoPoly, g: &GroupElement) -> AlgElement {
        let mut out = AlgElement::new();
        for (w, c) in p {
            add_entry(&mut out, self.index(w, g), c);
        }
        out
    }

    /// Algebra generators: one grouplike per invariant factor and the `x_i`.
    pub fn generators(&self) -> Vec<AlgElement> {
        let grp = &self.datum.group;
        let mut out: Vec<AlgElement> = (0..grp.rank())
            .map(|j| {
                let mut v = vec![0i64; grp.rank()];
                v[j] = 1;
                self.group_element(&grp.element(&v).unwrap())
            })
            .collect();
        out.extend((0..self.rank()).map(|i| self.x(i)));
        out
    }

    /// Unique PBW expansion of a word in `x_i` and group elements.
    pub fn normal_form(&self, word: &[Symbol]) -> AlgElement {
        word.iter().fold(self.unit(), |acc, s| {
            let f = match s {
                Symbol::X(i) => self.x(*i),
                Symbol::G(g) => self.group_element(g),
            };
            self.mul(&acc, &f)
        })
    }

    /// Conjugation `g a g^{-1}`.
    pub fn conjugate(&self, g: &GroupElement, a: &AlgElement) -> AlgElement {
        let gi = self.datum.group.inv(g);
        self.mul_all(&[&self.group_element(g), a, &self.group_element(&gi)])
    }

    /// `ad_c(x)(y) = x y − (g_x y g_x^{-1}) x` for `x` with grouplike `g_x`.
    pub fn braided_ad_with(&self, x: &AlgElement, g_x: &GroupElement, y: &AlgElement) -> AlgElement {
        let mut out = self.mul(x, y);
        axpy(&mut out, &CycNum::from_int(-1), &self.mul(&self.conjugate(g_x, y), x));
        out
    }

    /// `ad_c(x_i)(y)`.
    pub fn braided_ad(&self, i: usize, y: &AlgElement) -> AlgElement {
        self.braided_ad_with(&self.x(i), &self.datum.g[i], y)
    }

    /// Closed form `Σ_s (−1)^s {N choose s}_{χ(a)} χ(a)^{s(s−1)/2} μ(a)^s x^{N−s} y x^s` for
    /// `x`, `y` skew-primitive with grouplike `a` for `x`, where `g x g^{-1} = χ(g) x`,
    /// `g y g^{-1} = μ(g) y`.
    pub fn ad_power_closed_form<H: HopfAlgebra + ?Sized>(
        h: &H,
        x: &AlgElement,
        y: &AlgElement,
        chi_a: &CycNum,
        mu_a: &CycNum,
        n: u32,
    ) -> AlgElement {
        let mut out = AlgElement::new();
        for s in 0..=n {
            let mut c = qbinom(n, s, chi_a).expect("nonzero base") * chi_a.pow((s * s.saturating_sub(1) / 2) as i64);
            c = c * mu_a.pow(s as i64);
            if s % 2 == 1 {
                c = -c;
            }
            let term = h.mul_all(&[&h.pow(x, n - s), y, &h.pow(x, s)]);
            axpy(&mut out, &c, &term);
        }
        out
    }

    /// Checks Serre relations, root powers, and that each non-simple root vector
    /// equals its defining braided commutator.
    fn verify_defining_relations(&self) -> Result<(), BuildError> {
        let fail = |what: String| BuildError::Completion { overlap: what, detail: "does not vanish in the built algebra".into() };
        let theta = self.rank();
        for i in 0..theta {
            for j in 0..theta {
                if i == j {
                    continue;
                }
                let mut z = self.x(j);
                for _ in 0..(1 - self.datum.cartan.entry(i, j)) {
                    z = self.braided_ad(i, &z);
                }
                if !z.is_empty() {
                    return Err(fail(format!("Serre relation ({},{})", i + 1, j + 1)));
                }
            }
        }
        for k in 0..self.roots.len() {
            if !self.pow(&self.y(k), self.roots.n[k]).is_empty() {
                return Err(fail(format!("y{}^{}", k + 1, self.roots.n[k])));
            }
            if let Some((k1, k2)) = self.roots.splitting_plan[k] {
                let c = pbw::bicharacter(&self.datum, &self.roots.positive_roots[k1], &self.roots.positive_roots[k2]);
                let mut v = self.mul(&self.y(k1), &self.y(k2));
                axpy(&mut v, &-c, &self.mul(&self.y(k2), &self.y(k1)));
                if v != self.y(k) {
                    return Err(BuildError::Completion {
                        overlap: format!("root vector y{}", k + 1),
                        detail: "differs from its braided commutator".into(),
                    });
                }
            }
        }
        Ok(())
    }

    fn comul_of_mono(&self, u: &[u8]) -> Arc<Tensor> {
        if let Some(t) = self.comult_mono.lock().unwrap().get(u) {
            return t.clone();
        }
        let e = self.datum.group.identity();
        let result = match u.iter().rposition(|&x| x > 0) {
            None => {
                let one = self.index(u, &e);
                Tensor::from([((one, one), CycNum::from_int(1))])
            }
            Some(l) => {
                let mut prefix = u.to_vec();
                prefix[l] -= 1;
                let head = self.comul_of_mono(&prefix);
                let letter = self.comul_of_root(l);
                self.tensor_mul(&head, &letter)
            }
        };
        let result = Arc::new(result);
        self.comult_mono.lock().unwrap().insert(u.to_vec(), result.clone());
        result
    }

    fn comul_of_root(&self, k: usize) -> Tensor {
        match self.roots.splitting_plan[k] {
            None => {
                let i = self.roots.simple_positions.iter().position(|&m| m == k).unwrap();
                let x = self.x(i);
                let mut t = tensor_of(&x, &self.unit());
                axpy(&mut t, &CycNum::from_int(1), &tensor_of(&self.group_element(&self.datum.g[i]), &x));
                t
            }
            Some((k1, k2)) => {
                let c = pbw::bicharacter(&self.datum, &self.roots.positive_roots[k1], &self.roots.positive_roots[k2]);
                let mut m1 = self.identity_mono();
                m1[k1] = 1;
                let mut m2 = self.identity_mono();
                m2[k2] = 1;
                let d1 = self.comul_of_mono(&m1);
                let d2 = self.comul_of_mono(&m2);
                let mut t = self.tensor_mul(&d1, &d2);
                axpy(&mut t, &-c, &self.tensor_mul(&d2, &d1));
                t
            }
        }
    }

    fn antipode_of_mono(&self, u: &[u8], inverse: bool) -> Arc<AlgElement> {
        let memo = if inverse { &self.antipode_inv_mono } else { &self.antipode_mono };
        if let Some(t) = memo.lock().unwrap().get(u) {
            return t.clone();
        }
        let result = match u.iter().rposition(|&x| x > 0) {
            None => self.unit(),
            Some(l) => {
                let mut prefix = u.to_vec();
                prefix[l] -= 1;
                let head = self.antipode_of_mono(&prefix, inverse);
                let letter = self.antipode_of_root(l, inverse);
                self.mul(&letter, &head)
            }
        };
        let result = Arc::new(result);
        memo.lock().unwrap().insert(u.to_vec(), result.clone());
        result
    }

    fn antipode_of_root(&self, k: usize, inverse: bool) -> AlgElement {
        match self.roots.splitting_plan[k] {
            None => {
                let i = self.roots.simple_positions.iter().position(|&m| m == k).unwrap();
                let gi = self.group_element(&self.datum.group.inv(&self.datum.g[i]));
                let x = self.x(i);
                // S(x_i) = −g_i^{-1} x_i,  S^{-1}(x_i) = −x_i g_i^{-1}
                let prod = if inverse { self.mul(&x, &gi) } else { self.mul(&gi, &x) };
                crate::linalg::scale(&prod, &CycNum::from_int(-1))
            }
            Some((k1, k2)) => {
                let c = pbw::bicharacter(&self.datum, &self.roots.positive_roots[k1], &self.roots.positive_roots[k2]);
                let mut m1 = self.identity_mono();
                m1[k1] = 1;
                let mut m2 = self.identity_mono();
                m2[k2] = 1;
                let s1 = self.antipode_of_mono(&m1, inverse);
                let s2 = self.antipode_of_mono(&m2, inverse);
                let mut t = self.mul(&s2, &s1);
                axpy(&mut t, &-c, &self.mul(&s1, &s2));
                t
            }
        }
    }
}

impl HopfAlgebra for PointedHopfAlgebra {
    fn dim(&self) -> usize {
        self.monos.len() * self.order()
    }

    fn unit(&self) -> AlgElement {
        self.group_element(&self.datum.group.identity())
    }

    fn mul_basis(&self, i: usize, j: usize) -> Arc<AlgElement> {
        if let Some(r) = self.mult.lock().unwrap().get(&(i, j)) {
            return r.clone();
        }
        let (u, g) = self.decompose(i);
        let (v, h) = self.decompose(j);
        // (y_u g)(y_v h) = χ_v(g) y_u y_v gh
        let c = self.pair(&self.mono_character(v), g);
        let gh = self.datum.group.mul(g, h);
        let prod = self.engine.mul_mono(u, v);
        let mut out = self.mono_poly_element(&prod, &gh);
        if !c.is_one() {
            out = crate::linalg::scale(&out, &c);
        }
        let out = Arc::new(out);
        self.mult.lock().unwrap().insert((i, j), out.clone());
        out
    }

    fn comul_basis(&self, k: usize) -> Arc<Tensor> {
        let (u, g) = self.decompose(k);
        let du = self.comul_of_mono(u);
        if g.0.iter().all(|&x| x == 0) {
            return du;
        }
        let gg = self.group_element(g);
        Arc::new(self.tensor_mul(&du, &tensor_of(&gg, &gg)))
    }

    fn counit_basis(&self, k: usize) -> CycNum {
        let (u, _) = self.decompose(k);
        CycNum::from_int(if u.iter().all(|&x| x == 0) { 1 } else { 0 })
    }

    fn antipode_basis(&self, k: usize) -> Arc<AlgElement> {
        let (u, g) = self.decompose(k);
        let gi = self.group_element(&self.datum.group.inv(g));
        Arc::new(self.mul(&gi, &self.antipode_of_mono(u, false)))
    }

    fn antipode_inv_basis(&self, k: usize) -> Arc<AlgElement> {
        let (u, g) = self.decompose(k);
        let gi = self.group_element(&self.datum.group.inv(g));
        Arc::new(self.mul(&gi, &self.antipode_of_mono(u, true)))
    }
}
