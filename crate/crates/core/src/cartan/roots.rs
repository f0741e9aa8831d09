//! Root systems of finite type: positive roots, a convex order from the greedy
//! reduced word of the longest Weyl element, and splitting plans for root vectors.

use std::collections::BTreeSet;

use super::{CartanMatrix, DatumError};

/// Root coordinates in the basis of simple roots.
pub type Root = Vec<i32>;

/// Reflection `s_i(β) = β − (Σ_j a_ij β_j) α_i`.
pub fn reflect(a: &CartanMatrix, i: usize, beta: &[i32]) -> Root {
    let pairing: i32 = (0..a.rank()).map(|j| a.entry(i, j) * beta[j]).sum();
    let mut out = beta.to_vec();
    out[i] -= pairing;
    out
}

fn is_positive(beta: &[i32]) -> bool {
    beta.iter().all(|&c| c >= 0) && beta.iter().any(|&c| c > 0)
}

/// All positive roots by reflection closure of the simple roots; errors when the
/// closure exceeds `cap` (which can only happen outside finite type).
pub fn positive_roots_closure(a: &CartanMatrix, cap: usize) -> Result<BTreeSet<Root>, DatumError> {
    let n = a.rank();
    let mut all: BTreeSet<Root> = BTreeSet::new();
    let mut frontier: Vec<Root> = (0..n).map(|i| unit(n, i)).collect();
    all.extend(frontier.iter().cloned());
    while let Some(beta) = frontier.pop() {
        for i in 0..n {
            let r = reflect(a, i, &beta);
            if is_positive(&r) && all.insert(r.clone()) {
                if all.len() > cap {
                    return Err(DatumError::NotFiniteType("root closure does not terminate".into()));
                }
                frontier.push(r);
            }
        }
    }
    Ok(all)
}

pub fn unit(n: usize, i: usize) -> Root {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Applies the Weyl group element `s_{w[0]} ⋯ s_{w[k-1]}` to `beta`.
fn apply_word(a: &CartanMatrix, word: &[usize], beta: &[i32]) -> Root {
    let mut r = beta.to_vec();
    for &i in word.iter().rev() {
        r = reflect(a, i, &r);
    }
    r
}

/// Lexicographically smallest reduced word for the longest element, built greedily:
/// extend `w` by the smallest `i` with `w(α_i) > 0` until none is left.
pub fn longest_word(a: &CartanMatrix) -> Vec<usize> {
    let n = a.rank();
    let mut word = Vec::new();
    'outer: loop {
        for i in 0..n {
            if is_positive(&apply_word(a, &word, &unit(n, i))) {
                word.push(i);
                continue 'outer;
            }
        }
        return word;
    }
}

/// Positive roots in the convex order `β_k = s_{i_1} ⋯ s_{i_{k-1}}(α_{i_k})`.
pub fn convex_order(a: &CartanMatrix, word: &[usize]) -> Vec<Root> {
    let n = a.rank();
    (0..word.len()).map(|k| apply_word(a, &word[..k], &unit(n, word[k]))).collect()
}

/// Checks: whenever `β_i + β_j = β_k` with `i < j`, then `i < k < j`.
pub fn is_convex(order: &[Root]) -> bool {
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            let sum: Root = order[i].iter().zip(&order[j]).map(|(x, y)| x + y).collect();
            if let Some(k) = order.iter().position(|r| *r == sum) {
                if !(i < k && k < j) {
                    return false;
                }
            }
        }
    }
    true
}

/// For every non-simple `β_k`, the pair `(k1, k2)`, `k1 < k < k2`, with
/// `β_k = β_{k1} + β_{k2}` and `k1` minimal.
pub fn splitting_plan(order: &[Root]) -> Vec<Option<(usize, usize)>> {
    order
        .iter()
        .enumerate()
        .map(|(k, beta)| {
            if beta.iter().sum::<i32>() == 1 {
                return None;
            }
            for k1 in 0..k {
                for k2 in k + 1..order.len() {
                    if order[k1].iter().zip(&order[k2]).zip(beta).all(|((x, y), z)| x + y == *z) {
                        return Some((k1, k2));
                    }
                }
            }
            // Convexity guarantees a split; reaching here means the order is broken.
            panic!("no splitting for root {beta:?}")
        })
        .collect()
}
