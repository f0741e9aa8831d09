//! Data of finite Cartan type: validation, root data, and the derived dual and
//! double data.

pub mod roots;

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::abelian::{Character, FiniteAbelianGroup, GroupElement, GroupError};
use crate::cyclotomic::CycNum;
pub use roots::Root;

/// Validation failures. Generator indices are 1-based, as in the datum file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatumError {
    #[error("malformed datum: {0}")]
    Shape(String),
    #[error("a_ii = 2 violated at i = {i}: a_ii = {value}")]
    Diagonal { i: usize, value: i32 },
    #[error("a_ij <= 0 violated at ({i},{j}): a_ij = {value}")]
    PositiveOffDiagonal { i: usize, j: usize, value: i32 },
    #[error("a_ij=0 ⇔ a_ji=0 violated at ({i},{j}): a_ij = {a_ij}, a_ji = {a_ji}")]
    ZeroPattern { i: usize, j: usize, a_ij: i32, a_ji: i32 },
    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("χ_i(g_i) ≠ 1 violated at i = {i}")]
    TrivialSelfBraiding { i: usize },
    #[error("Cartan condition violated at ({i},{j}): χ_j(g_i)χ_i(g_j) = {lhs}, χ_i(g_i)^a_ij = {rhs}")]
    CartanCondition { i: usize, j: usize, lhs: String, rhs: String },
    #[error("order of χ_i(g_i) not constant on a component: N_{i} = {n_i}, N_{j} = {n_j}")]
    NonConstantOrder { i: usize, j: usize, n_i: u32, n_j: u32 },
    #[error("order N_{i} = {n} of χ_i(g_i) must be odd in a component of rank > 1")]
    EvenOrder { i: usize, n: u32 },
    #[error("order N_{i} = {n} of χ_i(g_i) must be prime to 3 in a G2 component")]
    DivisibleByThree { i: usize, n: u32 },
    #[error("unsupported lifting: {kind}_{{{i},{j}}} is nonzero")]
    UnsupportedLifting { kind: &'static str, i: usize, j: usize },
    #[error("two-parameter datum: {0}")]
    TwoParam(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<i32>>,
}

impl CartanMatrix {
    /// Checks squareness and the entry-wise axioms; finite type is checked separately.
    pub fn new(entries: Vec<Vec<i32>>) -> Result<Self, DatumError> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(DatumError::Shape("Cartan matrix is not square".into()));
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(DatumError::Diagonal { i: i + 1, value: entries[i][i] });
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    return Err(DatumError::PositiveOffDiagonal { i: i + 1, j: j + 1, value: entries[i][j] });
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(DatumError::ZeroPattern {
                        i: i + 1,
                        j: j + 1,
                        a_ij: entries[i][j],
                        a_ji: entries[j][i],
                    });
                }
            }
        }
        Ok(CartanMatrix { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.entries
    }

    /// Connected components of the Dynkin graph, each sorted, ordered by smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for w in 0..n {
                    if w != v && self.entries[v][w] != 0 && comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn component_of(&self, i: usize) -> Vec<usize> {
        self.components().into_iter().find(|c| c.contains(&i)).expect("node in some component")
    }

    /// Minimal positive integers `d_i` with `d_i a_ij = d_j a_ji`, per component.
    pub fn symmetrizer(&self) -> Result<Vec<i64>, DatumError> {
        let n = self.rank();
        let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
        for comp in self.components() {
            d[comp[0]] = Some(Ratio::from_integer(1));
            let mut stack = vec![comp[0]];
            while let Some(v) = stack.pop() {
                let dv = d[v].unwrap();
                for &w in &comp {
                    if w == v || self.entries[v][w] == 0 {
                        continue;
                    }
                    // d_w a_wv = d_v a_vw
                    let dw = dv * Ratio::from_integer(self.entries[v][w] as i64)
                        / Ratio::from_integer(self.entries[w][v] as i64);
                    match d[w] {
                        None => {
                            d[w] = Some(dw);
                            stack.push(w);
                        }
                        Some(old) if old != dw => {
                            return Err(DatumError::NotFiniteType("matrix is not symmetrizable".into()))
                        }
                        _ => {}
                    }
                }
            }
            let den = comp.iter().fold(1i64, |acc, &i| acc.lcm(d[i].unwrap().denom()));
            let scaled: Vec<i64> = comp.iter().map(|&i| (d[i].unwrap() * den).to_integer()).collect();
            let g = scaled.iter().fold(0i64, |acc, &x| acc.gcd(&x));
            for (&i, &s) in comp.iter().zip(&scaled) {
                d[i] = Some(Ratio::from_integer(s / g));
            }
        }
        Ok(d.into_iter().map(|x| x.unwrap().to_integer()).collect())
    }

    /// Finite type: symmetrizable with positive definite symmetrized form.
    pub fn check_finite_type(&self) -> Result<(), DatumError> {
        let d = self.symmetrizer()?;
        let n = self.rank();
        let b: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| (0..n).map(|j| Ratio::from_integer(d[i] * self.entries[i][j] as i64)).collect())
            .collect();
        // Sylvester: all leading principal minors positive, via Gaussian elimination pivots.
        let mut m = b;
        for k in 0..n {
            if m[k][k] <= Ratio::from_integer(0) {
                return Err(DatumError::NotFiniteType("symmetrized form is not positive definite".into()));
            }
            for i in k + 1..n {
                let f = m[i][k] / m[k][k];
                for j in k..n {
                    let t = m[k][j] * f;
                    m[i][j] -= t;
                }
            }
        }
        Ok(())
    }

    /// Recognizes a connected component of rank 2 as `G2`.
    pub fn is_g2(&self, comp: &[usize]) -> bool {
        comp.len() == 2 && self.entries[comp[0]][comp[1]] * self.entries[comp[1]][comp[0]] == 3
    }

    /// Block-diagonal matrix with `self` repeated twice.
    pub fn doubled(&self) -> CartanMatrix {
        let n = self.rank();
        let mut e = vec![vec![0; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                e[i][j] = self.entries[i][j];
                e[n + i][n + j] = self.entries[i][j];
            }
        }
        CartanMatrix { entries: e }
    }
}

/// A validated datum `(G, (g_i), (χ_i), (a_ij))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    pub group: FiniteAbelianGroup,
    pub g: Vec<GroupElement>,
    pub chi: Vec<Character>,
    pub cartan: CartanMatrix,
}

/// Unvalidated input; `lambda` and `mu` must be absent or zero.
#[derive(Debug, Clone, Default)]
pub struct RawDatum {
    pub group: Vec<u32>,
    pub g: Vec<Vec<i64>>,
    pub chi: Vec<Vec<i64>>,
    pub cartan: Vec<Vec<i32>>,
    pub lambda: Option<Vec<Vec<i64>>>,
    pub mu: Option<Vec<i64>>,
}

pub fn validate_datum(raw: &RawDatum) -> Result<CartanDatum, DatumError> {
    if let Some(l) = &raw.lambda {
        for (i, row) in l.iter().enumerate() {
            if let Some(j) = row.iter().position(|&x| x != 0) {
                return Err(DatumError::UnsupportedLifting { kind: "λ", i: i + 1, j: j + 1 });
            }
        }
    }
    if let Some(m) = &raw.mu {
        if let Some(i) = m.iter().position(|&x| x != 0) {
            return Err(DatumError::UnsupportedLifting { kind: "μ", i: i + 1, j: i + 1 });
        }
    }
    let group = FiniteAbelianGroup::new(raw.group.clone())?;
    let theta = raw.cartan.len();
    if raw.g.len() != theta || raw.chi.len() != theta {
        return Err(DatumError::Shape(format!(
            "rank {theta} Cartan matrix but {} grouplikes and {} characters",
            raw.g.len(),
            raw.chi.len()
        )));
    }
    let g = raw.g.iter().map(|v| group.element(v)).collect::<Result<Vec<_>, _>>()?;
    let chi = raw.chi.iter().map(|v| group.character(v)).collect::<Result<Vec<_>, _>>()?;
    let cartan = CartanMatrix::new(raw.cartan.clone())?;
    CartanDatum::new(group, g, chi, cartan)
}

impl CartanDatum {
    /// Validates every invariant of a datum of finite Cartan type.
    pub fn new(
        group: FiniteAbelianGroup,
        g: Vec<GroupElement>,
        chi: Vec<Character>,
        cartan: CartanMatrix,
    ) -> Result<Self, DatumError> {
        cartan.check_finite_type()?;
        let d = CartanDatum { group, g, chi, cartan };
        let theta = d.rank();
        for i in 0..theta {
            if d.q(i, i).is_one() {
                return Err(DatumError::TrivialSelfBraiding { i: i + 1 });
            }
        }
        for i in 0..theta {
            for j in 0..theta {
                let lhs = &d.q(i, j) * &d.q(j, i);
                let rhs = d.q(i, i).pow(d.cartan.entry(i, j) as i64);
                if lhs != rhs {
                    return Err(DatumError::CartanCondition {
                        i: i + 1,
                        j: j + 1,
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                }
            }
        }
        for comp in d.cartan.components() {
            let n0 = d.order_n(comp[0]);
            for &i in &comp {
                let ni = d.order_n(i);
                if ni != n0 {
                    return Err(DatumError::NonConstantOrder { i: comp[0] + 1, j: i + 1, n_i: n0, n_j: ni });
                }
                if comp.len() > 1 && ni % 2 == 0 {
                    return Err(DatumError::EvenOrder { i: i + 1, n: ni });
                }
                if d.cartan.is_g2(&comp) && ni % 3 == 0 {
                    return Err(DatumError::DivisibleByThree { i: i + 1, n: ni });
                }
            }
        }
        Ok(d)
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// `q_ij = χ_j(g_i)`.
    pub fn q(&self, i: usize, j: usize) -> CycNum {
        self.group.pair(&self.chi[j], &self.g[i]).expect("validated shapes")
    }

    /// `N_i`, the multiplicative order of `χ_i(g_i)`.
    pub fn order_n(&self, i: usize) -> u32 {
        let e = self.group.exponent();
        let k = self.group.pair_exponent(&self.chi[i], &self.g[i]);
        e / e.gcd(&k)
    }

    /// Conductor of the field holding every scalar of the constructions.
    pub fn conductor(&self) -> u32 {
        self.group.exponent()
    }

    /// `g_β = ∏ g_i^{n_i}` for `β = Σ n_i α_i`.
    pub fn g_root(&self, beta: &[i32]) -> GroupElement {
        let mut acc = self.group.identity();
        for (i, &n) in beta.iter().enumerate() {
            acc = self.group.mul(&acc, &self.group.pow(&self.g[i], n as i64));
        }
        acc
    }

    /// `χ_β = ∏ χ_i^{n_i}`.
    pub fn chi_root(&self, beta: &[i32]) -> Character {
        let mut acc = self.group.trivial_character();
        for (i, &n) in beta.iter().enumerate() {
            acc = self.group.char_mul(&acc, &self.group.char_pow(&self.chi[i], n as i64));
        }
        acc
    }

    pub fn roots(&self) -> RootData {
        RootData::new(self)
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: Z{:?} (order {})", self.group.invariants(), self.group.order())?;
        writeln!(f, "rank: {}", self.rank())?;
        for i in 0..self.rank() {
            writeln!(
                f,
                "  g{} = {:?}, chi{} = {:?}, chi{}(g{}) = {} (N = {})",
                i + 1,
                self.g[i].0,
                i + 1,
                self.chi[i].0,
                i + 1,
                i + 1,
                self.q(i, i),
                self.order_n(i)
            )?;
        }
        write!(f, "cartan: {:?}", self.cartan.rows())
    }
}

/// Positive roots in convex order with their root data.
#[derive(Debug, Clone, Serialize)]
pub struct RootData {
    pub reduced_word: Vec<usize>,
    pub positive_roots: Vec<Root>,
    pub heights: Vec<i32>,
    pub n: Vec<u32>,
    pub g: Vec<GroupElement>,
    pub chi: Vec<Character>,
    /// `simple_positions[i] = k` with `β_k = α_i`.
    pub simple_positions: Vec<usize>,
    pub splitting_plan: Vec<Option<(usize, usize)>>,
}

impl RootData {
    pub fn new(d: &CartanDatum) -> Self {
        let word = roots::longest_word(&d.cartan);
        let order = roots::convex_order(&d.cartan, &word);
        let plan = roots::splitting_plan(&order);
        let g: Vec<_> = order.iter().map(|b| d.g_root(b)).collect();
        let chi: Vec<_> = order.iter().map(|b| d.chi_root(b)).collect();
        let e = d.group.exponent();
        let n = g
            .iter()
            .zip(&chi)
            .map(|(gb, cb)| {
                let k = d.group.pair_exponent(cb, gb);
                e / e.gcd(&k)
            })
            .collect();
        let simple_positions = (0..d.rank())
            .map(|i| order.iter().position(|b| *b == roots::unit(d.rank(), i)).expect("simple root listed"))
            .collect();
        RootData {
            reduced_word: word,
            heights: order.iter().map(|b| b.iter().sum()).collect(),
            positive_roots: order,
            n,
            g,
            chi,
            simple_positions,
            splitting_plan: plan,
        }
    }

    pub fn len(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive_roots.is_empty()
    }

    /// Number of PBW monomials `∏ N_β`.
    pub fn pbw_dimension(&self) -> usize {
        self.n.iter().map(|&x| x as usize).product()
    }

    pub fn is_convex(&self) -> bool {
        roots::is_convex(&self.positive_roots)
    }
}

/// `Σ_{β ∈ Φ⁺_J} Σ_{s ∈ J} a_is c_s(β)` over the component `J` of node `i`.
pub fn rho_identity_check(cartan: &CartanMatrix, roots: &RootData, i: usize) -> i64 {
    let comp = cartan.component_of(i);
    roots
        .positive_roots
        .iter()
        .filter(|b| b.iter().enumerate().any(|(s, &c)| c != 0 && comp.contains(&s)))
        .map(|b| comp.iter().map(|&s| cartan.entry(i, s) as i64 * b[s] as i64).sum::<i64>())
        .sum()
}

/// The datum over `Ĝ` with grouplikes `χ_i` and characters `ĝ_i`.
pub fn dual_datum(d: &CartanDatum) -> CartanDatum {
    let g = d.chi.iter().map(|c| d.group.char_as_element(c)).collect();
    let chi = d.g.iter().map(|x| d.group.hat(x)).collect();
    CartanDatum::new(d.group.clone(), g, chi, d.cartan.clone()).expect("dual of a valid datum is valid")
}

/// Datum over `G × Ĝ` with `a_i = g_i`, `a_{θ+i} = χ_i^{-1}`, `μ_i = χ_i ĝ_i^{-1}`,
/// `μ_{θ+i} = χ_i^{-1} ĝ_i`, block-diagonal Cartan matrix, and the linking matrix
/// with `λ_{i,θ+i} = 1`.
pub fn double_datum(d: &CartanDatum) -> (CartanDatum, Vec<Vec<i64>>) {
    let theta = d.rank();
    let grp = &d.group;
    let big = grp.product(grp);
    let concat = |a: &[u32], b: &[u32]| -> Vec<i64> { a.iter().chain(b).map(|&x| x as i64).collect() };
    let zero = vec![0u32; grp.rank()];
    let mut a = Vec::with_capacity(2 * theta);
    let mut mu = Vec::with_capacity(2 * theta);
    for i in 0..theta {
        a.push(big.element(&concat(&d.g[i].0, &zero)).unwrap());
    }
    for i in 0..theta {
        a.push(big.element(&concat(&zero, &grp.char_inv(&d.chi[i]).0)).unwrap());
    }
    for i in 0..theta {
        mu.push(big.character(&concat(&d.chi[i].0, &grp.inv(&d.g[i]).0)).unwrap());
    }
    for i in 0..theta {
        mu.push(big.character(&concat(&grp.char_inv(&d.chi[i]).0, &d.g[i].0)).unwrap());
    }
    let datum = CartanDatum::new(big, a, mu, d.cartan.doubled()).expect("double datum is valid");
    let mut lambda = vec![vec![0i64; 2 * theta]; 2 * theta];
    for (i, row) in lambda.iter_mut().enumerate().take(theta) {
        row[i + theta] = 1;
    }
    (datum, lambda)
}

/// Euler form `<i,j> = d_i a_ij (i<j), d_i (i=j), 0 (i>j)`.
pub fn euler_form(cartan: &CartanMatrix, d: &[i64], i: usize, j: usize) -> i64 {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Less => d[i] * cartan.entry(i, j) as i64,
        Equal => d[i],
        Greater => 0,
    }
}

/// Datum over `Z_N^θ` with `g_i` the standard generators and
/// `χ_i(g_j) = r^{<i,j>} s^{-<j,i>}`, `r = ζ_N^{r_exp}`, `s = ζ_N^{s_exp}`.
pub fn two_param_datum(
    cartan: &CartanMatrix,
    d: &[i64],
    n: u32,
    r_exp: i64,
    s_exp: i64,
) -> Result<CartanDatum, DatumError> {
    let theta = cartan.rank();
    if d.len() != theta {
        return Err(DatumError::TwoParam(format!("{} symmetrizer entries for rank {theta}", d.len())));
    }
    for i in 0..theta {
        for j in 0..theta {
            if d[i] * cartan.entry(i, j) as i64 != d[j] * cartan.entry(j, i) as i64 {
                return Err(DatumError::TwoParam(format!("d does not symmetrize the Cartan matrix at ({},{})", i + 1, j + 1)));
            }
        }
    }
    if n < 2 || (r_exp - s_exp).gcd(&(n as i64)) != 1 {
        return Err(DatumError::TwoParam(format!("r s^-1 = zeta_{n}^{} does not have order {n}", r_exp - s_exp)));
    }
    let group = FiniteAbelianGroup::new(vec![n; theta])?;
    let g = (0..theta)
        .map(|i| {
            let mut v = vec![0i64; theta];
            v[i] = 1;
            group.element(&v)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let chi = (0..theta)
        .map(|i| {
            let v: Vec<i64> = (0..theta)
                .map(|j| r_exp * euler_form(cartan, d, i, j) - s_exp * euler_form(cartan, d, j, i))
                .collect();
            group.character(&v)
        })
        .collect::<Result<Vec<_>, _>>()?;
    CartanDatum::new(group, g, chi, cartan.clone())
}

/// Cartan matrices of the named types supported by the two-parameter block.
pub fn cartan_of_type(name: &str) -> Option<CartanMatrix> {
    let rows: Vec<Vec<i32>> = match name {
        "A1" => vec![vec![2]],
        "A2" => vec![vec![2, -1], vec![-1, 2]],
        "B2" => vec![vec![2, -1], vec![-2, 2]],
        "G2" => vec![vec![2, -1], vec![-3, 2]],
        "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        "A1xA1" => vec![vec![2, 0], vec![0, 2]],
        "A2xA1" => vec![vec![2, -1, 0], vec![-1, 2, 0], vec![0, 0, 2]],
        _ => return None,
    };
    CartanMatrix::new(rows).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(group: Vec<u32>, g: Vec<Vec<i64>>, chi: Vec<Vec<i64>>, cartan: Vec<Vec<i32>>) -> RawDatum {
        RawDatum { group, g, chi, cartan, lambda: None, mu: None }
    }

    pub(crate) fn a2() -> CartanDatum {
        validate_datum(&raw(
            vec![3, 3],
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![1, 2], vec![0, 1]],
            vec![vec![2, -1], vec![-1, 2]],
        ))
        .unwrap()
    }

    #[test]
    fn taft_is_valid_for_every_n() {
        for n in 2..8 {
            let d = validate_datum(&raw(vec![n], vec![vec![1]], vec![vec![1]], vec![vec![2]])).unwrap();
            assert_eq!(d.order_n(0), n);
        }
    }

    #[test]
    fn trivial_self_braiding_rejected() {
        let e = validate_datum(&raw(vec![3], vec![vec![1]], vec![vec![0]], vec![vec![2]])).unwrap_err();
        assert_eq!(e, DatumError::TrivialSelfBraiding { i: 1 });
        assert!(e.to_string().contains("χ_i(g_i) ≠ 1 violated"));
    }

    #[test]
    fn zero_pattern_rejected() {
        let e = CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).unwrap_err();
        assert!(e.to_string().contains("a_ij=0 ⇔ a_ji=0 violated"));
    }

    #[test]
    fn a2_datum() {
        let d = a2();
        assert_eq!((d.order_n(0), d.order_n(1)), (3, 3));
        let r = d.roots();
        assert_eq!(r.positive_roots, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert_eq!(r.n, vec![3, 3, 3]);
        assert_eq!(r.simple_positions, vec![0, 2]);
        assert_eq!(rho_identity_check(&d.cartan, &r, 0), 2);
        assert_eq!(rho_identity_check(&d.cartan, &r, 1), 2);
    }

    #[test]
    fn broken_cartan_condition() {
        let e = validate_datum(&raw(
            vec![3, 3],
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![2, -1], vec![-1, 2]],
        ))
        .unwrap_err();
        assert!(matches!(e, DatumError::CartanCondition { i: 1, j: 2, .. }), "{e}");
    }

    #[test]
    fn liftings_rejected() {
        let mut r = raw(vec![3], vec![vec![1]], vec![vec![1]], vec![vec![2]]);
        r.mu = Some(vec![1]);
        assert!(validate_datum(&r).unwrap_err().to_string().contains("unsupported lifting"));
        r.mu = Some(vec![0]);
        r.lambda = Some(vec![vec![0]]);
        assert!(validate_datum(&r).is_ok());
    }

    #[test]
    fn non_finite_type() {
        let a = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(a.check_finite_type().is_err());
        let a = CartanMatrix::new(vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]).unwrap();
        assert!(a.check_finite_type().is_err());
        assert_eq!(cartan_of_type("B2").unwrap().symmetrizer().unwrap(), vec![2, 1]);
        assert_eq!(cartan_of_type("G2").unwrap().symmetrizer().unwrap(), vec![3, 1]);
    }

    #[test]
    fn dual_and_double() {
        let d = a2();
        let dd = dual_datum(&d);
        for i in 0..2 {
            assert_eq!(dd.order_n(i), d.order_n(i));
        }
        // Dual of the dual is the original under the concrete identification.
        assert_eq!(dual_datum(&dd), d);
        let (big, lambda) = double_datum(&d);
        assert_eq!(big.rank(), 4);
        assert_eq!(big.group.order(), 81);
        assert_eq!(lambda[0][2], 1);
        assert_eq!(lambda[1][3], 1);
        assert_eq!(lambda.iter().flatten().filter(|&&x| x != 0).count(), 2);
    }

    #[test]
    fn two_param() {
        let a1 = cartan_of_type("A1").unwrap();
        let t = two_param_datum(&a1, &[1], 3, 1, 0).unwrap();
        assert_eq!(t.q(0, 0), CycNum::zeta(3, 1));
        let a2c = cartan_of_type("A2").unwrap();
        assert_eq!(euler_form(&a2c, &[1, 1], 0, 1), -1);
        assert_eq!(euler_form(&a2c, &[1, 1], 1, 0), 0);
        let d = two_param_datum(&a2c, &[1, 1], 3, 1, 2).unwrap();
        assert_eq!(d.q(0, 0), CycNum::zeta(3, 2));
        assert_eq!(d.q(1, 0), CycNum::zeta(3, 2));
        assert!(two_param_datum(&a2c, &[1, 1], 3, 1, 1).is_err());
        let b2 = cartan_of_type("B2").unwrap();
        let d = two_param_datum(&b2, &[2, 1], 3, 1, 0).unwrap();
        assert_eq!(d.roots().len(), 4);
        assert_eq!(d.roots().pbw_dimension(), 81);
    }
}
