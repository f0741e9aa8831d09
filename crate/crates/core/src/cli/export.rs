//! Structure-constant JSON.
//!
//! Schema `pointed-hopf/structure-constants/v1`: an object with
//!
//! - `format`: the schema name above;
//! - `dim`: the dimension `n`; basis indices run over `0..n`;
//! - `basis`: `n` human-readable labels, in index order;
//! - `unit`: `[[k, c], ...]`, the unit as `Σ c e_k`;
//! - `mult`: `[[i, j, k, c], ...]`, `e_i e_j = Σ c e_k`; absent triples are zero;
//! - `comult`: `[[k, i, j, c], ...]`, `Δ(e_k) = Σ c e_i ⊗ e_j`;
//! - `counit`: `[[k, c], ...]`, `ε(e_k) = c`; absent entries are zero;
//! - `antipode`, `antipode_inv`: `[[k, i, c], ...]`, `S^{±1}(e_k) = Σ c e_i`.
//!
//! Every list is sorted by its integer fields. A coefficient `c` is
//! `{"conductor": m, "numerators": [...], "denominators": [...]}`: the rational coordinates,
//! as decimal strings, of `c` in the power basis `1, ζ_m, ..., ζ_m^{φ(m)-1}` of `Q(ζ_m)`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgElement, PointedHopfAlgebra, StructureTables, Tensor};
use crate::cyclotomic::CycNum;
use crate::linalg::add_entry;
use crate::Error;

pub const FORMAT: &str = "pointed-hopf/structure-constants/v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesJson {
    pub format: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<(usize, CycNum)>,
    pub mult: Vec<(usize, usize, usize, CycNum)>,
    pub comult: Vec<(usize, usize, usize, CycNum)>,
    pub counit: Vec<(usize, CycNum)>,
    pub antipode: Vec<(usize, usize, CycNum)>,
    pub antipode_inv: Vec<(usize, usize, CycNum)>,
}

/// `y1^2 y3 g(1,0)`; the PBW label of a basis element of `A`.
pub fn basis_labels(a: &PointedHopfAlgebra) -> Vec<String> {
    (0..a.group_elements.len() * a.monos.len())
        .map(|k| {
            let (u, g) = a.decompose(k);
            let mut parts: Vec<String> = u
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("y{}", i + 1) } else { format!("y{}^{e}", i + 1) })
                .collect();
            let exps: Vec<String> = g.0.iter().map(u32::to_string).collect();
            parts.push(format!("g({})", exps.join(",")));
            parts.join(" ")
        })
        .collect()
}

fn flat_elem(e: &AlgElement) -> impl Iterator<Item = (usize, CycNum)> + '_ {
    e.iter().map(|(&k, c)| (k, c.clone()))
}

pub fn to_json(t: &StructureTables, basis: Vec<String>) -> TablesJson {
    let per_basis = |v: &[Arc<AlgElement>]| -> Vec<(usize, usize, CycNum)> {
        v.iter().enumerate().flat_map(|(k, e)| flat_elem(e).map(move |(i, c)| (k, i, c))).collect()
    };
    TablesJson {
        format: FORMAT.to_string(),
        dim: t.dim,
        basis,
        unit: flat_elem(&t.unit).collect(),
        mult: t.mult_entries(),
        comult: t
            .comult
            .iter()
            .enumerate()
            .flat_map(|(k, e)| e.iter().map(move |(&(i, j), c)| (k, i, j, c.clone())))
            .collect(),
        counit: t.counit.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect(),
        antipode: per_basis(&t.antipode),
        antipode_inv: per_basis(&t.antipode_inv),
    }
}

pub fn from_json(j: &TablesJson) -> Result<StructureTables, Error> {
    if j.format != FORMAT {
        return Err(Error::Parse(format!("unsupported structure-constant format `{}`", j.format)));
    }
    let n = j.dim;
    let bad = |what: &str| Error::Parse(format!("{what} index out of range for dim {n}"));
    let mut unit = AlgElement::new();
    for (k, c) in &j.unit {
        if *k >= n {
            return Err(bad("unit"));
        }
        add_entry(&mut unit, *k, c);
    }
    let mut mult: HashMap<(usize, usize), AlgElement> = HashMap::new();
    for (a, b, k, c) in &j.mult {
        if *a >= n || *b >= n || *k >= n {
            return Err(bad("mult"));
        }
        add_entry(mult.entry((*a, *b)).or_default(), *k, c);
    }
    let mut comult = vec![Tensor::new(); n];
    for (k, a, b, c) in &j.comult {
        if *a >= n || *b >= n || *k >= n {
            return Err(bad("comult"));
        }
        add_entry(&mut comult[*k], (*a, *b), c);
    }
    let mut counit = vec![CycNum::from_int(0); n];
    for (k, c) in &j.counit {
        if *k >= n {
            return Err(bad("counit"));
        }
        counit[*k] = c.clone();
    }
    let per_basis = |v: &[(usize, usize, CycNum)], what: &str| -> Result<Vec<Arc<AlgElement>>, Error> {
        let mut out = vec![AlgElement::new(); n];
        for (k, i, c) in v {
            if *k >= n || *i >= n {
                return Err(bad(what));
            }
            add_entry(&mut out[*k], *i, c);
        }
        Ok(out.into_iter().map(Arc::new).collect())
    };
    Ok(StructureTables {
        dim: n,
        unit,
        mult: mult.into_iter().filter(|(_, e)| !e.is_empty()).map(|(k, e)| (k, Arc::new(e))).collect(),
        comult: comult.into_iter().map(Arc::new).collect(),
        counit,
        antipode: per_basis(&j.antipode, "antipode")?,
        antipode_inv: per_basis(&j.antipode_inv, "antipode_inv")?,
    })
}
