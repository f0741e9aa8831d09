//! Finite abelian groups `Z_{m_1} × … × Z_{m_r}`, their characters and the evaluation pairing.
//!
//! Characters are exponent vectors against the same invariants: the character
//! `(c_1, …, c_r)` sends the `j`-th generator to `ζ_{m_j}^{c_j}`. This identifies
//! `Ĝ` with `G` concretely, so the dual group of a character group is the
//! original group again with the roles of the two vectors swapped.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::CycNum;

pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invariant factor {0} is smaller than 2")]
    BadInvariant(u32),
    #[error("element has {got} coordinates, group has {expected}")]
    Mismatch { expected: usize, got: usize },
    #[error("group order {order} exceeds enumeration cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    invariants: Vec<u32>,
}

/// An element of `G`, stored as reduced exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement(pub Vec<u32>);

/// An element of `Ĝ`, stored as reduced exponents against the same invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Character(pub Vec<u32>);

impl FiniteAbelianGroup {
    pub fn new(invariants: Vec<u32>) -> Result<Self, GroupError> {
        if let Some(&m) = invariants.iter().find(|&&m| m < 2) {
            return Err(GroupError::BadInvariant(m));
        }
        Ok(FiniteAbelianGroup { invariants })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariants: Vec::new() }
    }

    pub fn invariants(&self) -> &[u32] {
        &self.invariants
    }

    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn order(&self) -> u64 {
        self.invariants.iter().map(|&m| m as u64).product()
    }

    /// Exponent of the group: lcm of the invariants (1 for the trivial group).
    pub fn exponent(&self) -> u32 {
        self.invariants.iter().fold(1u32, |a, &m| a.lcm(&m))
    }

    /// Direct product `self × other`.
    pub fn product(&self, other: &Self) -> Self {
        let mut inv = self.invariants.clone();
        inv.extend_from_slice(&other.invariants);
        FiniteAbelianGroup { invariants: inv }
    }

    fn check_len(&self, v: &[u32]) -> Result<(), GroupError> {
        if v.len() != self.rank() {
            return Err(GroupError::Mismatch { expected: self.rank(), got: v.len() });
        }
        Ok(())
    }

    fn reduce(&self, v: &[i64]) -> Vec<u32> {
        v.iter().zip(&self.invariants).map(|(&e, &m)| e.rem_euclid(m as i64) as u32).collect()
    }

    pub fn element(&self, exps: &[i64]) -> Result<GroupElement, GroupError> {
        if exps.len() != self.rank() {
            return Err(GroupError::Mismatch { expected: self.rank(), got: exps.len() });
        }
        Ok(GroupElement(self.reduce(exps)))
    }

    pub fn character(&self, exps: &[i64]) -> Result<Character, GroupError> {
        self.element(exps).map(|g| Character(g.0))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    pub fn trivial_character(&self) -> Character {
        Character(vec![0; self.rank()])
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(self.add_vec(&a.0, &b.0, 1))
    }

    pub fn inv(&self, a: &GroupElement) -> GroupElement {
        GroupElement(self.scale_vec(&a.0, -1))
    }

    pub fn pow(&self, a: &GroupElement, k: i64) -> GroupElement {
        GroupElement(self.scale_vec(&a.0, k))
    }

    pub fn char_mul(&self, a: &Character, b: &Character) -> Character {
        Character(self.add_vec(&a.0, &b.0, 1))
    }

    pub fn char_inv(&self, a: &Character) -> Character {
        Character(self.scale_vec(&a.0, -1))
    }

    pub fn char_pow(&self, a: &Character, k: i64) -> Character {
        Character(self.scale_vec(&a.0, k))
    }

    fn add_vec(&self, a: &[u32], b: &[u32], sign: i64) -> Vec<u32> {
        debug_assert_eq!(a.len(), self.rank());
        debug_assert_eq!(b.len(), self.rank());
        a.iter()
            .zip(b)
            .zip(&self.invariants)
            .map(|((&x, &y), &m)| (x as i64 + sign * y as i64).rem_euclid(m as i64) as u32)
            .collect()
    }

    fn scale_vec(&self, a: &[u32], k: i64) -> Vec<u32> {
        a.iter()
            .zip(&self.invariants)
            .map(|(&x, &m)| ((x as i64 % m as i64) * (k % m as i64)).rem_euclid(m as i64) as u32)
            .collect()
    }

    /// Order of an element.
    pub fn element_order(&self, a: &GroupElement) -> u32 {
        a.0.iter().zip(&self.invariants).fold(1u32, |acc, (&e, &m)| acc.lcm(&(m / m.gcd(&e))))
    }

    /// `χ(g)` as an exact angle: returns `k` with `χ(g) = ζ_e^k`, `e` the group exponent.
    pub fn pair_exponent(&self, chi: &Character, g: &GroupElement) -> u32 {
        let e = self.exponent() as u64;
        let mut k: u64 = 0;
        for ((&c, &x), &m) in chi.0.iter().zip(&g.0).zip(&self.invariants) {
            let m = m as u64;
            k += (c as u64 * x as u64 % m) * (e / m);
        }
        (k % e) as u32
    }

    /// `χ(g) = ∏_j ζ_{m_j}^{c_j e_j}`, in the field of conductor equal to the group exponent.
    pub fn pair(&self, chi: &Character, g: &GroupElement) -> Result<CycNum, GroupError> {
        self.check_len(&chi.0)?;
        self.check_len(&g.0)?;
        Ok(CycNum::zeta(self.exponent(), self.pair_exponent(chi, g) as i64))
    }

    /// `ĝ`, the character of `Ĝ` given by evaluation at `g`. Under the concrete
    /// self-duality it is the same exponent vector read as a character.
    pub fn hat(&self, g: &GroupElement) -> Character {
        Character(g.0.clone())
    }

    /// Reads a character as an element of `Ĝ` (the group of the dual datum).
    pub fn char_as_element(&self, chi: &Character) -> GroupElement {
        GroupElement(chi.0.clone())
    }

    /// All elements in lexicographic order of exponent vectors.
    pub fn enumerate(&self, cap: u64) -> Result<Vec<GroupElement>, GroupError> {
        let order = self.order();
        if order > cap {
            return Err(GroupError::CapExceeded { order, cap });
        }
        let mut out = Vec::with_capacity(order as usize);
        let mut cur = vec![0u32; self.rank()];
        loop {
            out.push(GroupElement(cur.clone()));
            let mut j = self.rank();
            loop {
                if j == 0 {
                    return Ok(out);
                }
                j -= 1;
                cur[j] += 1;
                if cur[j] < self.invariants[j] {
                    break;
                }
                cur[j] = 0;
            }
        }
    }

    pub fn enumerate_characters(&self, cap: u64) -> Result<Vec<Character>, GroupError> {
        Ok(self.enumerate(cap)?.into_iter().map(|g| Character(g.0)).collect())
    }

    /// Position of `g` in [`enumerate`](Self::enumerate) order (mixed radix).
    pub fn index_of(&self, g: &GroupElement) -> usize {
        let mut idx = 0usize;
        for (&e, &m) in g.0.iter().zip(&self.invariants) {
            idx = idx * m as usize + e as usize;
        }
        idx
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut v = vec![0u32; self.rank()];
        for j in (0..self.rank()).rev() {
            let m = self.invariants[j] as usize;
            v[j] = (idx % m) as u32;
            idx /= m;
        }
        GroupElement(v)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let g = FiniteAbelianGroup::new(vec![3]).unwrap();
        let chi = g.character(&[1]).unwrap();
        let x = g.element(&[1]).unwrap();
        assert_eq!(g.pair(&chi, &x).unwrap(), CycNum::zeta(3, 1));
        assert!(g.pair(&g.trivial_character(), &x).unwrap().is_one());
        assert!(g.pair(&chi, &GroupElement(vec![0, 1])).is_err());
    }

    #[test]
    fn mixed_invariants_pair_in_exponent_field() {
        let g = FiniteAbelianGroup::new(vec![2, 3]).unwrap();
        assert_eq!(g.exponent(), 6);
        let chi = g.character(&[1, 1]).unwrap();
        let x = g.element(&[1, 1]).unwrap();
        assert_eq!(g.pair(&chi, &x).unwrap(), CycNum::zeta(2, 1) * CycNum::zeta(3, 1));
    }

    #[test]
    fn enumeration() {
        let z2 = FiniteAbelianGroup::new(vec![2]).unwrap();
        assert_eq!(z2.enumerate(10).unwrap(), vec![GroupElement(vec![0]), GroupElement(vec![1])]);
        let g = FiniteAbelianGroup::new(vec![3, 3]).unwrap();
        let all = g.enumerate(DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(all.len(), 9);
        for (i, x) in all.iter().enumerate() {
            assert_eq!(g.index_of(x), i);
            assert_eq!(&g.element_at(i), x);
        }
        let h = FiniteAbelianGroup::new(vec![4, 6]).unwrap();
        assert_eq!(h.enumerate_characters(100).unwrap().len(), 24);
        assert!(matches!(h.enumerate(10), Err(GroupError::CapExceeded { .. })));
        assert_eq!(FiniteAbelianGroup::trivial().enumerate(1).unwrap().len(), 1);
    }

    #[test]
    fn hat_is_evaluation() {
        let g = FiniteAbelianGroup::new(vec![3]).unwrap();
        let els = g.enumerate(100).unwrap();
        let chars = g.enumerate_characters(100).unwrap();
        for x in &els {
            // hat(x) evaluated at χ, computed as the pairing on Ĝ.
            let hx = g.hat(x);
            for chi in &chars {
                let lhs = g.pair(&hx, &g.char_as_element(chi)).unwrap();
                assert_eq!(lhs, g.pair(chi, x).unwrap());
            }
        }
        let h = FiniteAbelianGroup::new(vec![3, 3]).unwrap();
        let els = h.enumerate(100).unwrap();
        for a in &els {
            for b in &els {
                assert_eq!(h.hat(&h.mul(a, b)), h.char_mul(&h.hat(a), &h.hat(b)));
            }
        }
        assert_eq!(h.hat(&h.identity()), h.trivial_character());
    }

    #[test]
    fn rejects_bad_invariants() {
        assert_eq!(FiniteAbelianGroup::new(vec![3, 1]), Err(GroupError::BadInvariant(1)));
    }
}
