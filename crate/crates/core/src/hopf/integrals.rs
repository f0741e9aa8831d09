//! Integrals of `A` and `A*` and the distinguished grouplikes.

use serde::Serialize;

use super::{DualAlgebra, Grouplike};
use crate::abelian::{Character, FiniteAbelianGroup, GroupElement};
use crate::algebra::{basis_vector, AlgElement, HopfAlgebra, PointedHopfAlgebra};
use crate::cartan::{CartanDatum, RootData};
use crate::cyclotomic::CycNum;
use crate::linalg::{add_entry, axpy, nullspace, scale, SparseVec};

/// Which side of the pair `A`, `A*` an object realizes.
///
/// `A` is `u(D)` over `G`; `A*` is `u(D̃)` over `Ĝ`. Exponent vectors over the shared
/// invariants label grouplikes of one side and characters of the other.
pub trait PointedSide: HopfAlgebra {
    /// The datum this side is built on.
    fn side_datum(&self) -> &CartanDatum;
    fn side_roots(&self) -> &RootData;
    /// The grouplike with exponent vector `v`.
    fn grouplike(&self, v: &[u32]) -> AlgElement;
    /// The skew-primitive generators.
    fn skew_generators(&self) -> Vec<AlgElement>;
    /// `y_top` with all root exponents `N − 1`.
    fn top_element(&self) -> AlgElement;
    /// Labels an exponent vector of this side's grouplikes.
    fn label_grouplike(&self, v: Vec<u32>) -> Grouplike;
    /// Labels an exponent vector of this side's characters.
    fn label_character(&self, v: Vec<u32>) -> Grouplike;

    fn group(&self) -> &FiniteAbelianGroup {
        &self.side_datum().group
    }

    fn algebra_generators(&self) -> Vec<AlgElement> {
        let r = self.group().rank();
        let mut out: Vec<AlgElement> = (0..r).map(|j| self.grouplike(&unit_vec(r, j))).collect();
        out.extend(self.skew_generators());
        out
    }

    /// `Λ = Σ_g g`.
    fn group_sum(&self) -> AlgElement {
        let mut out = AlgElement::new();
        for g in self.group().enumerate(u64::MAX).expect("enumerable") {
            axpy(&mut out, &CycNum::from_int(1), &self.grouplike(&g.0));
        }
        out
    }
}

fn unit_vec(r: usize, j: usize) -> Vec<u32> {
    let mut v = vec![0u32; r];
    v[j] = 1;
    v
}

impl PointedSide for PointedHopfAlgebra {
    fn side_datum(&self) -> &CartanDatum {
        &self.datum
    }
    fn side_roots(&self) -> &RootData {
        &self.roots
    }
    fn grouplike(&self, v: &[u32]) -> AlgElement {
        self.group_element(&GroupElement(v.to_vec()))
    }
    fn skew_generators(&self) -> Vec<AlgElement> {
        (0..self.rank()).map(|i| self.x(i)).collect()
    }
    fn top_element(&self) -> AlgElement {
        let top: Vec<u8> = self.roots.n.iter().map(|&n| (n - 1) as u8).collect();
        self.mono_element(&top)
    }
    fn label_grouplike(&self, v: Vec<u32>) -> Grouplike {
        Grouplike::Group(GroupElement(v))
    }
    fn label_character(&self, v: Vec<u32>) -> Grouplike {
        Grouplike::Char(Character(v))
    }
}

impl PointedSide for DualAlgebra {
    fn side_datum(&self) -> &CartanDatum {
        &self.dual_datum
    }
    fn side_roots(&self) -> &RootData {
        &self.dual_roots
    }
    fn grouplike(&self, v: &[u32]) -> AlgElement {
        self.character(&Character(v.to_vec()))
    }
    fn skew_generators(&self) -> Vec<AlgElement> {
        (0..self.rank()).map(|i| self.xi(i)).collect()
    }
    fn top_element(&self) -> AlgElement {
        let top: Vec<u8> = self.roots.n.iter().map(|&n| (n - 1) as u8).collect();
        self.pbw_images[self.index(&top, &self.datum.group.identity())].clone()
    }
    fn label_grouplike(&self, v: Vec<u32>) -> Grouplike {
        Grouplike::Char(Character(v))
    }
    fn label_character(&self, v: Vec<u32>) -> Grouplike {
        Grouplike::Group(GroupElement(v))
    }
}

/// Integrals and distinguished grouplikes of one side.
#[derive(Debug, Clone, Serialize)]
pub struct IntegralReport {
    pub dim: usize,
    pub left_space_dim: usize,
    pub right_space_dim: usize,
    #[serde(skip)]
    pub left_integral: AlgElement,
    #[serde(skip)]
    pub right_integral: AlgElement,
    /// `Λ y_top` spans the left integrals.
    pub left_formula_matches: bool,
    /// `y_top Λ` spans the right integrals.
    pub right_formula_matches: bool,
    /// `S(t_l)` is a nonzero multiple of `t_r`.
    pub antipode_swaps_sides: bool,
    /// Solved from `t_l a = γ(a) t_l`; a grouplike of the dual side.
    pub gamma: Grouplike,
    /// `∏_β χ_β^{-(N_β-1)}`.
    pub gamma_inverse_product: Grouplike,
    /// `∏_β χ_β^{N_β-1}`.
    pub gamma_product: Grouplike,
    /// Solved from `f λ = f(g) λ` for a right integral `λ` of the dual side.
    pub g_dist: Grouplike,
    /// `∏_β g_β^{N_β-1}`.
    pub g_dist_formula: Grouplike,
    pub unimodular: bool,
}

impl IntegralReport {
    pub fn gamma_matches_inverse_product(&self) -> bool {
        self.gamma == self.gamma_inverse_product
    }
    pub fn gamma_matches_product(&self) -> bool {
        self.gamma == self.gamma_product
    }
    pub fn g_dist_matches(&self) -> bool {
        self.g_dist == self.g_dist_formula
    }
}

/// Left (`left = true`) or right integrals: the common solutions of `a t = ε(a) t`
/// (resp. `t a = ε(a) t`) over the algebra generators.
pub fn integral_space<H: PointedSide + ?Sized>(h: &H, left: bool) -> Vec<AlgElement> {
    let dim = h.dim();
    let mut rows: Vec<SparseVec> = Vec::new();
    for a in h.algebra_generators() {
        let eps = h.counit(&a);
        // Column j of the operator t ↦ a t − ε(a) t.
        let mut by_row: Vec<SparseVec> = vec![SparseVec::new(); dim];
        for j in 0..dim {
            let e = basis_vector(j);
            let mut col = if left { h.mul(&a, &e) } else { h.mul(&e, &a) };
            add_entry(&mut col, j, &-eps.clone());
            for (k, c) in col {
                by_row[k].insert(j, c);
            }
        }
        rows.extend(by_row.into_iter().filter(|r| !r.is_empty()));
    }
    nullspace(&rows, dim)
}

/// `Some(c)` with `a = c b` when `b ≠ 0`.
pub fn proportional(a: &AlgElement, b: &AlgElement) -> Option<CycNum> {
    let (k, bk) = b.iter().next()?;
    let c = a.get(k).cloned().unwrap_or_else(|| CycNum::from_int(0)).checked_div(bk).ok()?;
    (scale(b, &c) == *a).then_some(c)
}

/// Exponent `k < m` with `c = ζ_m^k`.
fn exponent_in(c: &CycNum, m: u32) -> Option<u32> {
    (0..m).find(|&k| *c == CycNum::zeta(m, k as i64))
}

/// Solves `t x_j = c_j t` for the unit grouplikes `x_j` of `side`, returning the exponent
/// vector `k` with `c_j = ζ_{m_j}^{k_j}`.
fn eigen_exponents<H: PointedSide + ?Sized>(side: &H, t: &AlgElement, right_action: bool) -> Option<Vec<u32>> {
    let grp = side.group();
    let r = grp.rank();
    let mut out = Vec::with_capacity(r);
    for j in 0..r {
        let x = side.grouplike(&unit_vec(r, j));
        let img = if right_action { side.mul(t, &x) } else { side.mul(&x, t) };
        let c = proportional(&img, t)?;
        out.push(exponent_in(&c, grp.invariants()[j])?);
    }
    Some(out)
}

fn character_product(grp: &FiniteAbelianGroup, roots: &RootData, sign: i64) -> Vec<u32> {
    roots
        .chi
        .iter()
        .zip(&roots.n)
        .fold(grp.trivial_character(), |acc, (c, &n)| grp.char_mul(&acc, &grp.char_pow(c, sign * (n as i64 - 1))))
        .0
}

fn grouplike_product(grp: &FiniteAbelianGroup, roots: &RootData) -> Vec<u32> {
    roots.g.iter().zip(&roots.n).fold(grp.identity(), |acc, (g, &n)| grp.mul(&acc, &grp.pow(g, n as i64 - 1))).0
}

/// Integrals of `h`, with `hd` the dual side (used for the distinguished grouplike of `h`).
pub fn integrals<H: PointedSide + ?Sized, D: PointedSide + ?Sized>(h: &H, hd: &D) -> Result<IntegralReport, crate::Error> {
    let fail = |m: &str| crate::Error::Verification(m.to_string());
    let left = integral_space(h, true);
    let right = integral_space(h, false);
    let t_l = left.first().cloned().ok_or_else(|| fail("no nonzero left integral"))?;
    let t_r = right.first().cloned().ok_or_else(|| fail("no nonzero right integral"))?;
    let lambda = h.group_sum();
    let top = h.top_element();
    let left_formula = h.mul(&lambda, &top);
    let right_formula = h.mul(&top, &lambda);

    // γ: t_l x = γ(x) t_l on grouplikes; it must kill the skew-primitives.
    let gamma_exps = eigen_exponents(h, &t_l, true).ok_or_else(|| fail("t_l is not a common eigenvector"))?;
    if h.skew_generators().iter().any(|x| !h.mul(&t_l, x).is_empty()) {
        return Err(fail("t_l x_i ≠ 0"));
    }
    let grp = h.group();
    for g in grp.enumerate(u64::MAX).expect("enumerable") {
        let expect = scale(&t_l, &grp.pair(&Character(gamma_exps.clone()), &g)?);
        if h.mul(&t_l, &h.grouplike(&g.0)) != expect {
            return Err(fail("γ is not multiplicative on G"));
        }
    }

    // g: f λ = f(g) λ for a right integral λ of the dual side.
    let lam = integral_space(hd, false).into_iter().next().ok_or_else(|| fail("no right integral of the dual"))?;
    let g_exps = eigen_exponents(hd, &lam, false).ok_or_else(|| fail("λ is not a common eigenvector"))?;

    let roots = h.side_roots();
    let unimodular = gamma_exps.iter().all(|&e| e == 0);
    Ok(IntegralReport {
        dim: h.dim(),
        left_space_dim: left.len(),
        right_space_dim: right.len(),
        left_formula_matches: left.len() == 1 && proportional(&left_formula, &t_l).is_some_and(|c| !c.is_zero()),
        right_formula_matches: right.len() == 1 && proportional(&right_formula, &t_r).is_some_and(|c| !c.is_zero()),
        antipode_swaps_sides: proportional(&h.antipode(&t_l), &t_r).is_some_and(|c| !c.is_zero()),
        gamma: h.label_character(gamma_exps),
        gamma_inverse_product: h.label_character(character_product(grp, roots, -1)),
        gamma_product: h.label_character(character_product(grp, roots, 1)),
        g_dist: h.label_grouplike(g_exps),
        g_dist_formula: h.label_grouplike(grouplike_product(grp, roots)),
        unimodular,
        left_integral: t_l,
        right_integral: t_r,
    })
}
