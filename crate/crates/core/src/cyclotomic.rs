//! Exact arithmetic in cyclotomic fields `Q(ζ_n)` and the q-integer layer.
//!
//! A [`CycNum`] stores an element of `Q[x]/Φ_n(x)` in the power basis
//! `1, ζ, …, ζ^{φ(n)-1}` with a single positive common denominator.
//! Values of different conductors combine by embedding both into the
//! field of the least common multiple, so integer constants (conductor 1)
//! mix freely with anything.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("q-integer requested at q = 0")]
    ZeroBase,
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error("binomial index out of range: k = {k} > n = {n}")]
    BinomialRange { n: u32, k: u32 },
    #[error("element does not lie in Q(zeta_{0})")]
    NotInSubfield(u32),
    #[error("malformed cyclotomic encoding: {0}")]
    Malformed(String),
}

/// Per-conductor data: `φ(n)` and the integer coefficients of `Φ_n`.
#[derive(Debug)]
pub struct Field {
    conductor: u32,
    degree: usize,
    /// Coefficients of Φ_n, lowest degree first; monic, length degree+1.
    phi: Vec<i64>,
}

impl Field {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn cyclotomic_polynomial(&self) -> &[i64] {
        &self.phi
    }
}

fn registry() -> &'static Mutex<HashMap<u32, &'static Field>> {
    static REG: OnceLock<Mutex<HashMap<u32, &'static Field>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Returns the (leaked, interned) field data for conductor `n`.
pub fn field(n: u32) -> &'static Field {
    assert!(n >= 1, "conductor must be positive");
    if let Some(f) = registry().lock().unwrap().get(&n) {
        return f;
    }
    let phi = cyclotomic_poly(n);
    let f: &'static Field = Box::leak(Box::new(Field {
        conductor: n,
        degree: phi.len() - 1,
        phi,
    }));
    registry().lock().unwrap().entry(n).or_insert(f)
}

fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = field(d).phi.clone();
            num = poly_exact_div(&num, &div);
        }
    }
    num
}

fn poly_exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

pub fn euler_phi(n: u32) -> usize {
    field(n).degree
}

fn lcm32(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Exact element of `Q(ζ_n)`.
#[derive(Clone)]
pub struct CycNum {
    field: &'static Field,
    num: Vec<BigInt>,
    den: BigInt,
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl CycNum {
    pub fn zero(n: u32) -> Self {
        let field = field(n);
        CycNum { field, num: vec![BigInt::zero(); field.degree], den: BigInt::one() }
    }

    pub fn one(n: u32) -> Self {
        Self::from_int_in(n, 1)
    }

    /// Integer constant in conductor 1 (embeds automatically on use).
    pub fn from_int(k: i64) -> Self {
        Self::from_int_in(1, k)
    }

    pub fn from_int_in(n: u32, k: i64) -> Self {
        let mut z = Self::zero(n);
        z.num[0] = BigInt::from(k);
        z
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let mut z = Self::zero(1);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Builds from power-basis coordinates; coordinates beyond φ(n) are reduced.
    pub fn from_coeffs(n: u32, coeffs: &[BigRational]) -> Self {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let field = field(n);
        let mut z = CycNum { field, num: reduce_poly(field, ints), den };
        z.normalize();
        z
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    /// Power-basis coordinates as reduced fractions.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num.iter().map(|a| BigRational::new(a.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|a| a.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|a| a.is_zero())
    }

    /// Returns the rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(|a| a.is_zero()) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for a in self.num.iter_mut() {
                *a = -&*a;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for a in &self.num {
            if g.is_one() {
                break;
            }
            if !a.is_zero() {
                g = g.gcd(a);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for a in self.num.iter_mut() {
                *a /= &g;
            }
        }
    }

    /// Lossless image in `Q(ζ_n)` for a multiple `n` of the current conductor.
    pub fn embed(&self, n: u32) -> CycNum {
        let m = self.conductor();
        if m == n {
            return self.clone();
        }
        assert!(n % m == 0, "cannot embed conductor {m} into {n}");
        let step = (n / m) as usize;
        let target = field(n);
        let mut raw = vec![BigInt::zero(); (self.num.len().max(1) - 1) * step + 1];
        for (j, a) in self.num.iter().enumerate() {
            raw[j * step] = a.clone();
        }
        let mut z = CycNum { field: target, num: reduce_poly(target, raw), den: self.den.clone() };
        z.normalize();
        z
    }

    /// Inverse of [`embed`](Self::embed): the same element viewed in `Q(ζ_m)` when it lies there.
    pub fn restrict(&self, m: u32) -> Result<CycNum, CycError> {
        let n = self.conductor();
        if n == m {
            return Ok(self.clone());
        }
        let l = lcm32(n, m);
        let target = self.embed(l);
        let dm = euler_phi(m);
        // Columns: images of ζ_m^j in Q(ζ_l).
        let cols: Vec<Vec<BigRational>> = (0..dm)
            .map(|j| CycNum::zeta(m, j as i64).embed(l).coefficients())
            .collect();
        let rhs = target.coefficients();
        let sol = solve_small(&cols, &rhs).ok_or(CycError::NotInSubfield(m))?;
        Ok(CycNum::from_coeffs(m, &sol))
    }

    fn common(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
        if a.conductor() == b.conductor() {
            return (a.clone(), b.clone());
        }
        let l = lcm32(a.conductor(), b.conductor());
        (a.embed(l), b.embed(l))
    }

    fn add_same(&self, other: &CycNum, sign: bool) -> CycNum {
        debug_assert_eq!(self.conductor(), other.conductor());
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign { other.clone() } else { -other.clone() };
        }
        let (num, den) = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if sign { a + b } else { a - b })
                .collect();
            (num, self.den.clone())
        } else {
            let g = self.den.gcd(&other.den);
            let fa = &other.den / &g;
            let fb = &self.den / &g;
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let x = a * &fa;
                    let y = b * &fb;
                    if sign {
                        x + y
                    } else {
                        x - y
                    }
                })
                .collect();
            (num, &self.den * &fa)
        };
        let mut z = CycNum { field: self.field, num, den };
        z.normalize();
        z
    }

    fn mul_same(&self, other: &CycNum) -> CycNum {
        debug_assert_eq!(self.conductor(), other.conductor());
        if self.is_zero() || other.is_zero() {
            return CycNum::zero(self.conductor());
        }
        let d = self.field.degree;
        let mut raw = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut z = CycNum { field: self.field, num: reduce_poly(self.field, raw), den: &self.den * &other.den };
        z.normalize();
        z
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<CycNum> {
        if self.is_zero() {
            return None;
        }
        let n = self.conductor();
        let d = self.field.degree;
        // Column j of the multiplication matrix is self * ζ^j.
        let cols: Vec<Vec<BigRational>> =
            (0..d).map(|j| (self * &CycNum::zeta(n, j as i64)).coefficients()).collect();
        let mut rhs = vec![BigRational::zero(); d];
        rhs[0] = BigRational::one();
        let sol = solve_small(&cols, &rhs).expect("nonzero field element is invertible");
        Some(CycNum::from_coeffs(n, &sol))
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum, CycError> {
        let inv = other.inv().ok_or(CycError::DivisionByZero("CycNum::checked_div"))?;
        Ok(self * &inv)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> CycNum {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut result = CycNum::one(self.conductor());
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `ζ_n^k`.
    pub fn zeta(n: u32, k: i64) -> CycNum {
        let k = k.rem_euclid(n as i64) as usize;
        let field = field(n);
        let mut raw = vec![BigInt::zero(); k.max(field.degree - 1) + 1];
        raw[k] = BigInt::one();
        CycNum { field, num: reduce_poly(field, raw), den: BigInt::one() }
    }

    /// If `self = ζ_n^k` for the current conductor `n`, returns `k` in `0..n`.
    pub fn root_of_unity_exponent(&self) -> Option<u32> {
        let n = self.conductor();
        (0..n).find(|&k| *self == CycNum::zeta(n, k as i64))
    }

    /// Multiplicative order when the element is a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        let n = self.conductor();
        let k = self.root_of_unity_exponent()?;
        Some(n / n.gcd(&k))
    }
}

/// Reduces an integer polynomial modulo Φ_n (monic) and pads to φ(n).
fn reduce_poly(field: &Field, mut raw: Vec<BigInt>) -> Vec<BigInt> {
    let d = field.degree;
    let phi = &field.phi;
    while raw.len() > d {
        let top = raw.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = raw.len() - d;
        for (j, &c) in phi[..d].iter().enumerate() {
            if c != 0 {
                raw[shift + j] -= &top * c;
            }
        }
    }
    raw.resize(d, BigInt::zero());
    raw
}

/// Solves `Σ_j x_j cols[j] = rhs` by Gauss–Jordan over `Q`; `None` if inconsistent.
fn solve_small(cols: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = rhs.len();
    let ncols = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..=ncols {
                    let t = &m[r][k] * &f;
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = m[i][ncols].clone();
    }
    Some(sol)
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor() == other.conductor() {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = CycNum::common(self, other);
            a.den == b.den && a.num == b.num
        }
    }
}
impl Eq for CycNum {}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, c) in self.coefficients().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match j {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{j}"),
            };
            parts.push(term);
        }
        let body = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
        write!(f, "{} (zeta {})", body, self.conductor())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &'a CycNum) -> CycNum {
                let f: fn(&CycNum, &CycNum) -> CycNum = $body;
                if self.conductor() == rhs.conductor() {
                    f(self, rhs)
                } else {
                    let (a, b) = CycNum::common(self, rhs);
                    f(&a, &b)
                }
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &'a CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_same(b, true));
binop!(Sub, sub, |a, b| a.add_same(b, false));
binop!(Mul, mul, |a, b| a.mul_same(b));

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(mut self) -> CycNum {
        for a in self.num.iter_mut() {
            *a = -&*a;
        }
        self
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -self.clone()
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        *self = &*self + rhs;
    }
}
impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        *self = &*self - rhs;
    }
}
impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

/// JSON shape `{conductor, numerators[], denominators[]}`.
#[derive(Serialize, Deserialize)]
struct CycNumJson {
    conductor: u32,
    numerators: Vec<String>,
    denominators: Vec<String>,
}

impl Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs = self.coefficients();
        CycNumJson {
            conductor: self.conductor(),
            numerators: coeffs.iter().map(|c| c.numer().to_string()).collect(),
            denominators: coeffs.iter().map(|c| c.denom().to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CycNumJson::deserialize(d)?;
        CycNum::from_json_parts(raw.conductor, &raw.numerators, &raw.denominators)
            .map_err(serde::de::Error::custom)
    }
}

impl CycNum {
    fn from_json_parts(n: u32, nums: &[String], dens: &[String]) -> Result<CycNum, CycError> {
        if n == 0 || nums.len() != dens.len() || nums.len() != euler_phi(n) {
            return Err(CycError::Malformed(format!("conductor {n} with {} coefficients", nums.len())));
        }
        let parse = |s: &String| s.parse::<BigInt>().map_err(|e| CycError::Malformed(e.to_string()));
        let mut coeffs = Vec::with_capacity(nums.len());
        for (a, b) in nums.iter().zip(dens) {
            let b = parse(b)?;
            if b.is_zero() {
                return Err(CycError::Malformed("zero denominator".into()));
            }
            coeffs.push(BigRational::new(parse(a)?, b));
        }
        Ok(CycNum::from_coeffs(n, &coeffs))
    }
}

/// `(n)_q = 1 + q + … + q^{n-1}`, with `(0)_q = 0`.
pub fn qint(n: u32, q: &CycNum) -> Result<CycNum, CycError> {
    if q.is_zero() {
        return Err(CycError::ZeroBase);
    }
    let mut acc = CycNum::zero(q.conductor());
    let mut pw = CycNum::one(q.conductor());
    for _ in 0..n {
        acc += &pw;
        pw = &pw * q;
    }
    Ok(acc)
}

/// `(n)_q! = (1)_q ⋯ (n)_q`, with `(0)_q! = 1`.
pub fn qfactorial(n: u32, q: &CycNum) -> Result<CycNum, CycError> {
    let mut acc = CycNum::one(q.conductor());
    for k in 1..=n {
        acc = &acc * &qint(k, q)?;
    }
    if q.is_zero() {
        return Err(CycError::ZeroBase);
    }
    Ok(acc)
}

/// Gaussian binomial by the Pascal recursion
/// `{n choose k} = {n-1 choose k-1} + q^k {n-1 choose k}`; defined at every root of unity.
pub fn qbinom(n: u32, k: u32, q: &CycNum) -> Result<CycNum, CycError> {
    if q.is_zero() {
        return Err(CycError::ZeroBase);
    }
    if k > n {
        return Err(CycError::BinomialRange { n, k });
    }
    let c = q.conductor();
    let mut row = vec![CycNum::one(c)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let left = if j >= 1 { row[j as usize - 1].clone() } else { CycNum::zero(c) };
            let right = if j < m { &q.pow(j as i64) * &row[j as usize] } else { CycNum::zero(c) };
            next.push(left + right);
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// Gaussian binomial by the factorial quotient; errors when a denominator vanishes.
pub fn qbinom_factorial(n: u32, k: u32, q: &CycNum) -> Result<CycNum, CycError> {
    if k > n {
        return Err(CycError::BinomialRange { n, k });
    }
    let num = qfactorial(n, q)?;
    let den = &qfactorial(k, q)? * &qfactorial(n - k, q)?;
    num.checked_div(&den).map_err(|_| CycError::DivisionByZero("qbinom_factorial"))
}
