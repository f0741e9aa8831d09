//! Ribbon structure on `D(A)` through the Kauffman–Radford square-root criterion.

use serde::Serialize;

use crate::abelian::{Character, GroupElement};
use crate::algebra::{basis_vector, tensor_of, AlgElement, CheckResult, HopfAlgebra, PointedHopfAlgebra, Tensor};
use crate::cartan::{rho_identity_check, CartanDatum};
use crate::cyclotomic::CycNum;
use crate::double::{DoubleElement, DrinfeldDouble};
use crate::hopf::integrals::IntegralReport;
use crate::hopf::{DualAlgebra, Grouplike};
use crate::linalg::add_entry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Ribbon,
    QuasiRibbonOnly,
    Neither,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Ribbon => "RIBBON",
            Verdict::QuasiRibbonOnly => "QUASI_RIBBON_ONLY",
            Verdict::Neither => "NEITHER",
        })
    }
}

/// The explicit pair `δ = ∏ χ_α^{-(N_α-1)/2}`, `h = ∏ g_α^{(N_α-1)/2}` and its checks.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremWitness {
    pub delta: Character,
    pub h: GroupElement,
    pub delta_squared_is_gamma: bool,
    pub h_squared_is_g: bool,
    /// `χ_i(h) δ^{-1}(g_i) = χ_i(g_i)^{-1}` per simple root.
    pub condition_on_r: Vec<bool>,
    /// `S²(g) = h (δ ⇀ g ↼ δ^{-1}) h^{-1}` on the group generators.
    pub condition_on_h: bool,
    /// `Σ_s a_is c_s` per simple root; 2 when the exponent identity holds.
    pub rho_identity: Vec<i64>,
    pub passes: bool,
}

/// Candidate `v = u ℓ^{-1}` that passed every axiom.
#[derive(Debug, Clone, Serialize)]
pub struct RibbonElement {
    pub grouplike_character: Character,
    pub grouplike_element: GroupElement,
    #[serde(skip)]
    pub v: DoubleElement,
    pub transcript: Vec<CheckResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RibbonReport {
    pub g_dist: GroupElement,
    pub gamma: Character,
    pub square_roots_h: Vec<GroupElement>,
    pub square_roots_delta: Vec<Character>,
    /// Every `(h, δ)` satisfying the `S²` condition.
    pub passing_pairs: Vec<(GroupElement, Character)>,
    pub criterion_witness: Option<(GroupElement, Character)>,
    /// `Err` carries the reason the explicit pair is undefined.
    pub theorem_witness: Result<TheoremWitness, String>,
    pub theorem_witness_among_passing: Option<bool>,
    /// `h ↦ h(δ ⇀ · ↼ δ^{-1})h^{-1}` is multiplicative (checked once on generator × basis).
    pub twist_is_algebra_map: bool,
    pub ribbon_element: Option<RibbonElement>,
    /// Search outcome when the criterion holds: number of candidates tried.
    pub search_candidates: usize,
    pub verdict: Verdict,
}

fn as_group(g: &Grouplike) -> Option<GroupElement> {
    match g {
        Grouplike::Group(x) => Some(x.clone()),
        Grouplike::Char(_) => None,
    }
}

fn as_char(g: &Grouplike) -> Option<Character> {
    match g {
        Grouplike::Char(x) => Some(x.clone()),
        Grouplike::Group(_) => None,
    }
}

/// `h (δ ⇀ a ↼ δ^{-1}) h^{-1}` with `δ ⇀ a = a₁ δ(a₂)` and `a ↼ δ = δ(a₁) a₂`.
pub fn twist(a: &PointedHopfAlgebra, dual: &DualAlgebra, h: &GroupElement, delta: &Character, x: &AlgElement) -> AlgElement {
    let grp = &a.datum.group;
    let d = dual.character(delta);
    let di = dual.character(&grp.char_inv(delta));
    let mut inner = AlgElement::new();
    let zero = CycNum::from_int(0);
    for (&(i, j, k), c) in a.comul_left(&a.comul(x)).iter() {
        let s = di.get(&i).unwrap_or(&zero) * d.get(&k).unwrap_or(&zero);
        if !s.is_zero() {
            add_entry(&mut inner, j, &(c * &s));
        }
    }
    a.conjugate(h, &inner)
}

/// Decides ribbon structure of `D(A)` from the solved distinguished grouplikes.
pub fn kr_criterion(
    a: &PointedHopfAlgebra,
    dual: &DualAlgebra,
    report: &IntegralReport,
) -> Result<RibbonReport, crate::Error> {
    let bad = |m: &str| crate::Error::Verification(m.to_string());
    let grp = &a.datum.group;
    let g_dist = as_group(&report.g_dist).ok_or_else(|| bad("distinguished grouplike of A must be a group element"))?;
    let gamma = as_char(&report.gamma).ok_or_else(|| bad("distinguished grouplike of A* must be a character"))?;
    let square_roots_h: Vec<GroupElement> =
        a.group_elements.iter().filter(|h| grp.mul(h, h) == g_dist).cloned().collect();
    let square_roots_delta: Vec<Character> = grp
        .enumerate_characters(u64::MAX)?
        .into_iter()
        .filter(|d| grp.char_mul(d, d) == gamma)
        .collect();

    let gens = a.generators();
    let s2: Vec<AlgElement> = gens.iter().map(|x| a.antipode(&a.antipode(x))).collect();
    let mut passing_pairs = Vec::new();
    for h in &square_roots_h {
        for d in &square_roots_delta {
            if gens.iter().zip(&s2).all(|(x, sx)| twist(a, dual, h, d, x) == *sx) {
                passing_pairs.push((h.clone(), d.clone()));
            }
        }
    }

    // Both sides are algebra maps; confirm it for the twist on one pair of labels.
    let twist_is_algebra_map = {
        let h = square_roots_h.first().cloned().unwrap_or_else(|| grp.identity());
        let d = square_roots_delta.first().cloned().unwrap_or_else(|| grp.trivial_character());
        let dim = a.dim();
        gens.iter().all(|x| {
            let tx = twist(a, dual, &h, &d, x);
            (0..dim).all(|k| {
                let b = basis_vector(k);
                twist(a, dual, &h, &d, &a.mul(x, &b)) == a.mul(&tx, &twist(a, dual, &h, &d, &b))
            })
        })
    };

    let theorem = theorem_witness(&a.datum, report);
    let theorem_witness_among_passing =
        theorem.as_ref().ok().map(|w| passing_pairs.contains(&(w.h.clone(), w.delta.clone())));
    let criterion_witness = passing_pairs.first().cloned();
    let verdict = if criterion_witness.is_some() {
        Verdict::Ribbon
    } else if !square_roots_h.is_empty() && !square_roots_delta.is_empty() {
        Verdict::QuasiRibbonOnly
    } else {
        Verdict::Neither
    };
    Ok(RibbonReport {
        g_dist,
        gamma,
        square_roots_h,
        square_roots_delta,
        passing_pairs,
        criterion_witness,
        theorem_witness: theorem,
        theorem_witness_among_passing,
        twist_is_algebra_map,
        ribbon_element: None,
        search_candidates: 0,
        verdict,
    })
}

/// The explicit pair built from half exponents; undefined when some `N_α` is even.
pub fn theorem_witness(d: &CartanDatum, report: &IntegralReport) -> Result<TheoremWitness, String> {
    let roots = d.roots();
    if let Some(k) = roots.n.iter().position(|n| n % 2 == 0) {
        return Err(format!("N = {} is even at root {:?}; half exponents are not integers", roots.n[k], roots.positive_roots[k]));
    }
    let grp = &d.group;
    let mut delta = grp.trivial_character();
    let mut h = grp.identity();
    for k in 0..roots.len() {
        let half = (roots.n[k] as i64 - 1) / 2;
        delta = grp.char_mul(&delta, &grp.char_pow(&roots.chi[k], -half));
        h = grp.mul(&h, &grp.pow(&roots.g[k], half));
    }
    let delta_squared_is_gamma = report.gamma == Grouplike::Char(grp.char_mul(&delta, &delta));
    let h_squared_is_g = report.g_dist == Grouplike::Group(grp.mul(&h, &h));
    let delta_inv = grp.char_inv(&delta);
    let condition_on_r: Vec<bool> = (0..d.rank())
        .map(|i| {
            let lhs = grp.pair(&d.chi[i], &h).unwrap() * grp.pair(&delta_inv, &d.g[i]).unwrap();
            lhs == d.q(i, i).inv().unwrap()
        })
        .collect();
    // On group elements S² = id, and δ ⇀ g ↼ δ^{-1} = δ^{-1}(g) δ(g) g = g.
    let condition_on_h = d.group.invariants().iter().enumerate().all(|(j, _)| {
        let mut v = vec![0i64; grp.rank()];
        v[j] = 1;
        let g = grp.element(&v).unwrap();
        (grp.pair(&delta_inv, &g).unwrap() * grp.pair(&delta, &g).unwrap()).is_one()
    });
    let rho_identity: Vec<i64> = (0..d.rank()).map(|i| rho_identity_check(&d.cartan, &roots, i)).collect();
    let passes = delta_squared_is_gamma && h_squared_is_g && condition_on_r.iter().all(|&b| b) && condition_on_h;
    Ok(TheoremWitness { delta, h, delta_squared_is_gamma, h_squared_is_g, condition_on_r, condition_on_h, rho_identity, passes })
}

fn tensor_flip_r(r: &Tensor) -> Tensor {
    crate::algebra::tables::flip(r)
}

/// Tests `v` against `v² = uS(u)`, `S(v) = v`, `ε(v) = 1`, `R̃R Δ(v) = v ⊗ v`, and
/// centrality; also records the coproduct axiom read as `Δ(v) = R R̃^{-1}(v ⊗ v)`.
pub fn ribbon_axioms(d: &DrinfeldDouble, r: &Tensor, u: &DoubleElement, v: &DoubleElement) -> Vec<CheckResult> {
    let c = d.mul(u, &d.antipode(u));
    let mut out = vec![
        CheckResult::new("v² = u S(u)", d.mul(v, v) == c, 1, None),
        CheckResult::new("S(v) = v", d.antipode(v) == *v, 1, None),
        CheckResult::new("ε(v) = 1", d.counit(v).is_one(), 1, None),
    ];
    let rt = tensor_flip_r(r);
    let dv = d.comul(v);
    let vv = tensor_of(v, v);
    out.push(CheckResult::new("Δ(v) = (R̃R)^-1 (v⊗v)", d.tensor_mul(&d.tensor_mul(&rt, r), &dv) == vv, 1, None));
    // R̃^{-1} = (id ⊗ S)(R̃)
    let mut rt_inv = Tensor::new();
    for (&(i, j), x) in &rt {
        for (k, y) in d.antipode_basis(j).iter() {
            add_entry(&mut rt_inv, (i, *k), &(x * y));
        }
    }
    let literal = d.tensor_mul(&d.tensor_mul(r, &rt_inv), &vv);
    out.push(CheckResult::new("Δ(v) = R R̃^-1 (v⊗v) (literal reading)", dv == literal, 1, None));
    let central = d.generators().iter().all(|x| d.mul(v, x) == d.mul(x, v));
    out.push(CheckResult::new("v is central", central, d.generators().len(), None));
    out
}

/// Searches `v = u ℓ^{-1}` over the grouplikes `ℓ = χ g` of `D(A)`; the first candidate
/// passing every axiom except the literal coproduct reading is returned.
pub fn ribbon_element_search(d: &DrinfeldDouble, r: &Tensor, u: &DoubleElement, report: &mut RibbonReport) {
    let grp = &d.a.datum.group;
    let mut tried = 0;
    for (chi, g, _) in d.grouplikes() {
        tried += 1;
        let inv = d.mul(&d.chi(&grp.char_inv(&chi)), &d.g(&grp.inv(&g)));
        let v = d.mul(u, &inv);
        let transcript = ribbon_axioms(d, r, u, &v);
        let ok = transcript.iter().filter(|t| !t.name.contains("literal")).all(|t| t.passed);
        if ok {
            report.ribbon_element = Some(RibbonElement { grouplike_character: chi, grouplike_element: g, v, transcript });
            break;
        }
    }
    report.search_candidates = tried;
}
