//! The decomposition `A ≅ R # kG` through `π = j∘p` and `ν(a) = a₁ π(S(a₂))`.

use serde::Serialize;

use crate::algebra::{basis_vector, tensor_of, AlgElement, CheckResult, HopfAlgebra, PointedHopfAlgebra, Tensor};
use crate::linalg::{axpy, rank};

/// `π(y_u g) = δ_{u,0} g`.
pub fn project(a: &PointedHopfAlgebra, x: &AlgElement) -> AlgElement {
    x.iter()
        .filter(|(k, _)| a.decompose(**k).0.iter().all(|&e| e == 0))
        .map(|(k, c)| (*k, c.clone()))
        .collect()
}

/// `ν(x) = x₁ π(S(x₂))`.
pub fn nu(a: &PointedHopfAlgebra, x: &AlgElement) -> AlgElement {
    let mut out = AlgElement::new();
    for (&(i, j), c) in a.comul(x).iter() {
        let right = project(a, &a.antipode_basis(j));
        axpy(&mut out, c, &a.mul(&basis_vector(i), &right));
    }
    out
}

fn tensor_map(t: &Tensor, f: impl Fn(usize) -> AlgElement, g: impl Fn(usize) -> AlgElement) -> Tensor {
    let mut out = Tensor::new();
    for (&(i, j), c) in t {
        axpy(&mut out, c, &tensor_of(&f(i), &g(j)));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct BiproductReport {
    pub checks: Vec<CheckResult>,
    /// Rank of `ν(A)`, the dimension of the coinvariants `R`.
    pub image_rank: usize,
    /// A basis pair `(a, h)` with `ν(a h) ≠ ν(a) h`, if any.
    pub right_factor_counterexample: Option<String>,
}

/// Checks the biproduct maps on the full basis.
pub fn biproduct_report(a: &PointedHopfAlgebra) -> BiproductReport {
    let dim = a.dim();
    let grp = &a.datum.group;
    let mut checks = Vec::new();
    let basis: Vec<AlgElement> = (0..dim).map(basis_vector).collect();
    let gens = a.generators();

    let ok = a.group_elements.iter().all(|g| project(a, &a.group_element(g)) == a.group_element(g));
    checks.push(CheckResult::new("p ∘ j = id on kG", ok, a.group_elements.len(), None));

    let mut cases = 0;
    let ok = gens.iter().all(|x| {
        basis.iter().all(|b| {
            cases += 1;
            project(a, &a.mul(x, b)) == a.mul(&project(a, x), &project(a, b))
        })
    });
    checks.push(CheckResult::new("π is multiplicative", ok, cases, None));
    let ok = (0..dim).all(|k| {
        let lhs = a.comul(&project(a, &basis[k]));
        let rhs = tensor_map(&a.comul_basis(k), |i| project(a, &basis_vector(i)), |j| project(a, &basis_vector(j)));
        lhs == rhs
    });
    checks.push(CheckResult::new("π is comultiplicative", ok, dim, None));

    let ok = (0..a.rank()).all(|i| nu(a, &a.x(i)) == a.x(i));
    checks.push(CheckResult::new("ν(x_i) = x_i", ok, a.rank(), None));
    let ok = a.group_elements.iter().all(|g| nu(a, &a.group_element(g)) == a.unit());
    checks.push(CheckResult::new("ν(g) = 1", ok, a.group_elements.len(), None));

    let images: Vec<AlgElement> = basis.iter().map(|b| nu(a, b)).collect();
    let mut counterexample = None;
    let mut ok = true;
    for (k, b) in basis.iter().enumerate() {
        for g in &a.group_elements {
            let h = a.group_element(g);
            let lhs = nu(a, &a.mul(b, &h));
            // ε(h) = 1 for a grouplike.
            ok &= lhs == images[k];
            if counterexample.is_none() && lhs != a.mul(&images[k], &h) {
                counterexample = Some(format!("a = basis {k}, h = {g}"));
            }
        }
    }
    checks.push(CheckResult::new("ν(a j(h)) = ν(a) ε(h)", ok, dim * grp.order() as usize, None));

    let ok = images.iter().all(|r| nu(a, r) == *r);
    checks.push(CheckResult::new("ν is idempotent", ok, dim, None));
    let ok = images.iter().all(|r| {
        let lhs = tensor_map(&a.comul(r), basis_vector, |j| project(a, &basis_vector(j)));
        lhs == tensor_of(r, &a.unit())
    });
    checks.push(CheckResult::new("(id ⊗ π)Δ(ν(a)) = ν(a) ⊗ 1", ok, dim, None));

    let image_rank = rank(&images);
    let expected = a.roots.pbw_dimension();
    checks.push(CheckResult::new(
        "dim ν(A) = dim R",
        image_rank == expected,
        1,
        Some(format!("{image_rank} vs {expected}")),
    ));
    BiproductReport { checks, image_rank, right_factor_counterexample: counterexample }
}
