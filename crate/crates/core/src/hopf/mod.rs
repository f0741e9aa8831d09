//! The dual Hopf algebra `A*`, the functionals `ξ_i`, grouplike searches, integrals
//! and the biproduct maps.
//!
//! Convention: `(fg)(a) = Σ f(a₁) g(a₂)` and `Δ(f)(a ⊗ b) = f(ab)`.

pub mod biproduct;
pub mod integrals;

use std::collections::HashMap;
use std::sync::Arc;

use crate::abelian::{Character, GroupElement};
use crate::algebra::tables::Tensor3;
use crate::algebra::{
    basis_vector, build_algebra, tensor_of, AlgElement, BuildOptions, CheckLevel, CheckResult, HopfAlgebra,
    PointedHopfAlgebra, StructureTables, Tensor,
};
use crate::cartan::{dual_datum, CartanDatum, RootData};
use crate::cyclotomic::CycNum;
use crate::linalg::{add_entry, axpy, scale};

/// Transposes the structure of `a` into its dual on the dual basis `e^k`.
pub fn dual_tables<H: HopfAlgebra + ?Sized>(a: &H) -> StructureTables {
    let dim = a.dim();
    // e^i e^j = Σ_k Δ(e_k)_{ij} e^k
    let mut mult_raw: HashMap<(usize, usize), AlgElement> = HashMap::new();
    for k in 0..dim {
        for (&(i, j), c) in a.comul_basis(k).iter() {
            add_entry(mult_raw.entry((i, j)).or_default(), k, c);
        }
    }
    // Δ(e^k) = Σ_{i,j} (e_i e_j)_k e^i ⊗ e^j
    let mut comult: Vec<Tensor> = vec![Tensor::new(); dim];
    for i in 0..dim {
        for j in 0..dim {
            for (&k, c) in a.mul_basis(i, j).iter() {
                add_entry(&mut comult[k], (i, j), c);
            }
        }
    }
    let transpose = |f: &dyn Fn(usize) -> Arc<AlgElement>| -> Vec<Arc<AlgElement>> {
        let mut out: Vec<AlgElement> = vec![AlgElement::new(); dim];
        for i in 0..dim {
            for (&k, c) in f(i).iter() {
                add_entry(&mut out[k], i, c);
            }
        }
        out.into_iter().map(Arc::new).collect()
    };
    let antipode = transpose(&|i| a.antipode_basis(i));
    let antipode_inv = transpose(&|i| a.antipode_inv_basis(i));
    let one = a.unit();
    let unit: AlgElement =
        (0..dim).filter_map(|k| Some((k, a.counit_basis(k))).filter(|(_, c)| !c.is_zero())).collect();
    StructureTables {
        dim,
        unit,
        mult: mult_raw.into_iter().map(|(k, v)| (k, Arc::new(v))).collect(),
        comult: comult.into_iter().map(Arc::new).collect(),
        counit: (0..dim).map(|k| one.get(&k).cloned().unwrap_or_else(|| CycNum::from_int(0))).collect(),
        antipode,
        antipode_inv,
    }
}

/// Pairing `⟨f, a⟩` of a functional (dual coordinates) with an element.
pub fn evaluate(f: &AlgElement, a: &AlgElement) -> CycNum {
    let mut acc = CycNum::from_int(0);
    for (k, c) in f {
        if let Some(d) = a.get(k) {
            acc = acc + c * d;
        }
    }
    acc
}

/// `A*` with its identification as `u(D̃,0,0)`.
pub struct DualAlgebra {
    pub tables: StructureTables,
    /// The primal datum `D`.
    pub datum: CartanDatum,
    /// `D̃`, over `Ĝ` with grouplikes `χ_i` and characters `ĝ_i`.
    pub dual_datum: CartanDatum,
    pub roots: RootData,
    /// Root data of `D̃`: `g̃_β = χ_β`, `χ̃_β = ĝ_β`, same convex order.
    pub dual_roots: RootData,
    group_elements: Vec<GroupElement>,
    monos: Vec<Vec<u8>>,
    /// Image in `A*` of the PBW basis `Y_u χ` of `u(D̃)`, indexed like that algebra's basis.
    pub pbw_images: Vec<AlgElement>,
    /// Rank of `pbw_images`; equals the dimension iff the change of basis is invertible.
    pub pbw_rank: usize,
}

impl HopfAlgebra for DualAlgebra {
    fn dim(&self) -> usize {
        self.tables.dim
    }
    fn unit(&self) -> AlgElement {
        self.tables.unit()
    }
    fn mul_basis(&self, i: usize, j: usize) -> Arc<AlgElement> {
        self.tables.mul_basis(i, j)
    }
    fn comul_basis(&self, k: usize) -> Arc<Tensor> {
        self.tables.comul_basis(k)
    }
    fn counit_basis(&self, k: usize) -> CycNum {
        self.tables.counit_basis(k)
    }
    fn antipode_basis(&self, k: usize) -> Arc<AlgElement> {
        self.tables.antipode_basis(k)
    }
    fn antipode_inv_basis(&self, k: usize) -> Arc<AlgElement> {
        self.tables.antipode_inv_basis(k)
    }
}

/// Builds `A*` and the change of basis from the PBW basis `{χ Y_u}`.
pub fn dual_build(a: &PointedHopfAlgebra) -> DualAlgebra {
    let tables = dual_tables(a);
    let dd = dual_datum(&a.datum);
    let mut dual = DualAlgebra {
        tables,
        datum: a.datum.clone(),
        dual_roots: dd.roots(),
        dual_datum: dd,
        roots: a.roots.clone(),
        group_elements: a.group_elements.clone(),
        monos: a.monos.clone(),
        pbw_images: Vec::new(),
        pbw_rank: 0,
    };
    let y: Vec<AlgElement> = dual.root_vectors();
    let order = dual.group_elements.len();
    let mut images = Vec::with_capacity(a.dim());
    for u in &dual.monos {
        let mut yu = dual.unit();
        for (k, &e) in u.iter().enumerate() {
            for _ in 0..e {
                yu = dual.mul(&yu, &y[k]);
            }
        }
        for g in &dual.group_elements[..order] {
            let chi = Character(g.0.clone());
            images.push(dual.mul(&yu, &dual.character(&chi)));
        }
    }
    dual.pbw_rank = crate::linalg::rank(&images);
    dual.pbw_images = images;
    dual
}

impl DualAlgebra {
    /// Basis index of `y_u g` (also the index of `Y_u χ` in `u(D̃)`).
    pub fn index(&self, u: &[u8], g: &GroupElement) -> usize {
        let pos = self.monos.iter().position(|m| m == u).expect("PBW monomial");
        pos * self.group_elements.len() + self.datum.group.index_of(g)
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// `ξ_i`: value 1 on every `x_i g`, 0 on the rest of the basis.
    pub fn xi(&self, i: usize) -> AlgElement {
        let mut u = vec![0u8; self.roots.len()];
        u[self.roots.simple_positions[i]] = 1;
        self.group_elements.iter().map(|g| (self.index(&u, g), CycNum::from_int(1))).collect()
    }

    /// The character `χ` extended by `χ(y_u g) = 0` for `u ≠ 0`.
    pub fn character(&self, chi: &Character) -> AlgElement {
        let u = vec![0u8; self.roots.len()];
        let grp = &self.datum.group;
        self.group_elements
            .iter()
            .map(|g| (self.index(&u, g), CycNum::zeta(grp.exponent(), grp.pair_exponent(chi, g) as i64)))
            .collect()
    }

    /// Root vectors `Y_k` of `A*`, iterated braided commutators of the `ξ_i` along the
    /// splitting plan with the scalars of `D̃`.
    pub fn root_vectors(&self) -> Vec<AlgElement> {
        let p = self.roots.len();
        let mut y: Vec<Option<AlgElement>> = vec![None; p];
        for (i, &m) in self.roots.simple_positions.iter().enumerate() {
            y[m] = Some(self.xi(i));
        }
        let rd = &self.roots;
        while y.iter().any(|v| v.is_none()) {
            for k in 0..p {
                if y[k].is_some() {
                    continue;
                }
                let (k1, k2) = rd.splitting_plan[k].unwrap();
                if let (Some(a), Some(b)) = (&y[k1], &y[k2]) {
                    // χ̃_{β2}(g̃_{β1}) = χ_{β1}(g_{β2})
                    let c = self.datum.group.pair(&rd.chi[k1], &rd.g[k2]).unwrap();
                    let mut v = self.mul(a, b);
                    axpy(&mut v, &-c, &self.mul(b, a));
                    y[k] = Some(v);
                }
            }
        }
        y.into_iter().map(Option::unwrap).collect()
    }

    /// Algebra generators: extended characters dual to each invariant factor and the `ξ_i`.
    pub fn generators(&self) -> Vec<AlgElement> {
        let grp = &self.datum.group;
        let mut out: Vec<AlgElement> = (0..grp.rank())
            .map(|j| {
                let mut v = vec![0u32; grp.rank()];
                v[j] = 1;
                self.character(&Character(v))
            })
            .collect();
        out.extend((0..self.rank()).map(|i| self.xi(i)));
        out
    }

    /// Maps an element of `u(D̃)` (in its basis) to `A*`.
    pub fn from_pbw(&self, b: &AlgElement) -> AlgElement {
        let mut out = AlgElement::new();
        for (k, c) in b {
            axpy(&mut out, c, &self.pbw_images[*k]);
        }
        out
    }

    fn from_pbw_tensor(&self, t: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (&(i, j), c) in t {
            axpy(&mut out, c, &tensor_of(&self.pbw_images[i], &self.pbw_images[j]));
        }
        out
    }
}

/// Checks that `Y_u χ ↦ y_u χ` identifies `A*` with `u(D̃,0,0)` as Hopf algebras.
///
/// Multiplicativity is checked on generators of `u(D̃)` against its whole basis (or all
/// pairs at [`CheckLevel::FullBasis`]); together with invertibility this proves the
/// isomorphism.
pub fn match_dual_datum(dual: &DualAlgebra, level: CheckLevel) -> Result<Vec<CheckResult>, crate::Error> {
    let b = build_algebra(&dual.dual_datum, BuildOptions::default())?;
    let mut out = Vec::new();
    out.push(CheckResult::new(
        "change of basis to {χ Y_u} is invertible",
        dual.pbw_rank == dual.dim(),
        1,
        Some(format!("rank {} of {}", dual.pbw_rank, dual.dim())),
    ));
    out.push(CheckResult::new("dim u(D̃) = dim A*", b.dim() == dual.dim(), 1, None));
    let dim = b.dim();
    let left: Vec<AlgElement> = match level {
        CheckLevel::FullBasis => (0..dim).map(basis_vector).collect(),
        CheckLevel::Generators => b.generators(),
    };
    let mut fail = None;
    let mut cases = 0;
    for x in &left {
        let fx = dual.from_pbw(x);
        for j in 0..dim {
            cases += 1;
            let lhs = dual.from_pbw(&b.mul(x, &basis_vector(j)));
            let rhs = dual.mul(&fx, &dual.pbw_images[j]);
            if lhs != rhs {
                fail = Some(format!("product with basis {j}"));
                break;
            }
        }
        if fail.is_some() {
            break;
        }
    }
    out.push(CheckResult::new("structure constants of products agree", fail.is_none(), cases, fail));
    let mut fail = None;
    for k in 0..dim {
        let lhs = dual.from_pbw_tensor(&b.comul_basis(k));
        let rhs = dual.comul(&dual.pbw_images[k]);
        if lhs != rhs {
            fail = Some(format!("Δ on basis {k}"));
            break;
        }
    }
    out.push(CheckResult::new("coproducts agree", fail.is_none(), dim, fail));
    let mut fail = None;
    for k in 0..dim {
        let img = &dual.pbw_images[k];
        if dual.counit(img) != b.counit_basis(k) || dual.antipode(img) != dual.from_pbw(&b.antipode_basis(k)) {
            fail = Some(format!("basis {k}"));
            break;
        }
    }
    out.push(CheckResult::new("counit and antipode agree", fail.is_none(), dim, fail));
    Ok(out)
}

/// The relation families of `A*`: coproduct of `ξ_i`, conjugation by characters,
/// nilpotency, the Serre relations, and the power rule for `ξ_i χ`.
pub fn verify_dual_relations(a: &PointedHopfAlgebra, dual: &DualAlgebra, exhaustive_pairing: bool) -> Vec<CheckResult> {
    let theta = dual.rank();
    let grp = &dual.datum.group;
    let chars = grp.enumerate_characters(u64::MAX).expect("enumerable");
    let mut out = Vec::new();

    for i in 0..theta {
        let xi = dual.xi(i);
        let chi_i = dual.character(&dual.datum.chi[i]);
        let mut expect = tensor_of(&xi, &dual.unit());
        axpy(&mut expect, &CycNum::from_int(1), &tensor_of(&chi_i, &xi));
        out.push(CheckResult::new(format!("Δ(ξ_{0}) = ξ_{0}⊗1 + χ_{0}⊗ξ_{0}", i + 1), dual.comul(&xi) == expect, 1, None));
    }

    if exhaustive_pairing {
        // ξ_i(ab) = ξ_i(a)ε(b) + χ_i(a)ξ_i(b) evaluated with the multiplication of A.
        let dim = a.dim();
        for i in 0..theta {
            let xi = dual.xi(i);
            let chi_i = dual.character(&dual.datum.chi[i]);
            let mut fail = None;
            'outer: for p in 0..dim {
                let ea = basis_vector(p);
                for q in 0..dim {
                    let eb = basis_vector(q);
                    let lhs = evaluate(&xi, &a.mul(&ea, &eb));
                    let rhs = evaluate(&xi, &ea) * a.counit(&eb) + evaluate(&chi_i, &ea) * evaluate(&xi, &eb);
                    if lhs != rhs {
                        fail = Some(format!("basis pair ({p},{q})"));
                        break 'outer;
                    }
                }
            }
            out.push(CheckResult::new(
                format!("ξ_{0}(ab) = ξ_{0}(a)ε(b) + χ_{0}(a)ξ_{0}(b) on all basis pairs", i + 1),
                fail.is_none(),
                dim * dim,
                fail,
            ));
        }
    }

    for i in 0..theta {
        let xi = dual.xi(i);
        let mut fail = None;
        for chi in &chars {
            let c = dual.character(chi);
            let ci = dual.character(&grp.char_inv(chi));
            let lhs = dual.mul_all(&[&c, &xi, &ci]);
            let rhs = scale(&xi, &grp.pair(chi, &dual.datum.g[i]).unwrap());
            if lhs != rhs {
                fail = Some(format!("χ = {chi}"));
                break;
            }
        }
        out.push(CheckResult::new(format!("χ ξ_{0} χ^-1 = χ(g_{0}) ξ_{0}", i + 1), fail.is_none(), chars.len(), fail));
        let n = dual.datum.order_n(i);
        out.push(CheckResult::new(format!("ξ_{}^{} = 0", i + 1, n), dual.pow(&xi, n).is_empty(), 1, None));
    }

    for i in 0..theta {
        for j in 0..theta {
            if i == j {
                continue;
            }
            let xi = dual.xi(i);
            let mut z = dual.xi(j);
            let r = 1 - dual.datum.cartan.entry(i, j);
            for _ in 0..r {
                z = dual.adjoint(&xi, &z);
            }
            out.push(CheckResult::new(format!("ad(ξ_{})^{}(ξ_{}) = 0", i + 1, r, j + 1), z.is_empty(), 1, None));
        }
    }

    out.extend(power_rule(dual));
    out
}

/// `(ξ_i χ)^n = χ(g_i)^{n(n−1)/2} ξ_i^n χ^n` for all characters and `n ≤ N_i`.
pub fn power_rule(dual: &DualAlgebra) -> Vec<CheckResult> {
    let grp = &dual.datum.group;
    let chars = grp.enumerate_characters(u64::MAX).expect("enumerable");
    let mut out = Vec::new();
    for i in 0..dual.rank() {
        let xi = dual.xi(i);
        let n_i = dual.datum.order_n(i);
        let mut fail = None;
        let mut cases = 0;
        for chi in &chars {
            let c = dual.character(chi);
            let base = dual.mul(&xi, &c);
            for n in 1..=n_i {
                cases += 1;
                let lhs = dual.pow(&base, n);
                let q = grp.pair(chi, &dual.datum.g[i]).unwrap().pow((n * (n - 1) / 2) as i64);
                let rhs = scale(&dual.mul(&dual.pow(&xi, n), &dual.character(&grp.char_pow(chi, n as i64))), &q);
                if lhs != rhs {
                    fail = Some(format!("χ = {chi}, n = {n}"));
                }
            }
        }
        out.push(CheckResult::new(
            format!("(ξ_{0} χ)^n = χ(g_{0})^(n(n-1)/2) ξ_{0}^n χ^n", i + 1),
            fail.is_none(),
            cases,
            fail,
        ));
    }
    out
}

/// `true` when `x` satisfies `Δ(x) = x ⊗ x` and `ε(x) = 1`.
pub fn is_grouplike<H: HopfAlgebra + ?Sized>(h: &H, x: &AlgElement) -> bool {
    h.counit(x).is_one() && h.comul(x) == tensor_of(x, x)
}

/// A grouplike identified by its label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum Grouplike {
    Group(GroupElement),
    Char(Character),
}

impl std::fmt::Display for Grouplike {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Grouplike::Group(g) => write!(f, "g{:?}", g.0),
            Grouplike::Char(c) => write!(f, "chi{:?}", c.0),
        }
    }
}

/// Grouplikes of `A`: the basis words with `u = 0` that pass the grouplike test.
pub fn grouplikes_of_algebra(a: &PointedHopfAlgebra) -> Vec<GroupElement> {
    a.group_elements.iter().filter(|g| is_grouplike(a, &a.group_element(g))).cloned().collect()
}

/// Grouplikes of `A*`: the extended characters that pass the grouplike test.
pub fn grouplikes_of_dual(dual: &DualAlgebra) -> Vec<Character> {
    dual.datum
        .group
        .enumerate_characters(u64::MAX)
        .unwrap()
        .into_iter()
        .filter(|c| is_grouplike(dual, &dual.character(c)))
        .collect()
}

/// Fallback search over rescaled single basis elements `λ e_k`.
pub fn grouplikes_basis_scan<H: HopfAlgebra + ?Sized>(h: &H) -> Vec<AlgElement> {
    let mut out = Vec::new();
    for k in 0..h.dim() {
        let d = h.comul_basis(k);
        if d.len() != 1 {
            continue;
        }
        if let Some(c) = d.get(&(k, k)) {
            let x = scale(&basis_vector(k), c);
            if is_grouplike(h, &x) {
                out.push(x);
            }
        }
    }
    out
}

/// `(Δ ⊗ id)` and `(id ⊗ Δ)` agree on `t`; used by the double module for R-matrix checks.
pub fn tensor3_from(a: &AlgElement, b: &AlgElement, c: &AlgElement) -> Tensor3 {
    let mut out = Tensor3::new();
    for (i, x) in a {
        for (j, y) in b {
            let xy = x * y;
            for (k, z) in c {
                add_entry(&mut out, (*i, *j, *k), &(&xy * z));
            }
        }
    }
    out
}
