#![allow(dead_code)]

use pats_core::dialgebra::{DialgebraWord, Letter};
use pats_core::identities::TrilinearOp;
use pats_core::ternary::Monomial;
use proptest::prelude::*;

/// Words of length 1..=5 over `a..f` with any center.
pub fn word() -> impl Strategy<Value = DialgebraWord> {
    prop::collection::vec(0u8..6, 1..=5).prop_flat_map(|letters| {
        let n = letters.len();
        (Just(letters), 0..n).prop_map(|(l, c)| DialgebraWord::new(l, c).unwrap())
    })
}

/// Ternary monomials of depth at most 3 over `a..i`, letters may repeat.
pub fn monomial() -> impl Strategy<Value = Monomial> {
    let leaf = (0u8..9).prop_map(Monomial::Leaf);
    leaf.prop_recursive(3, 27, 3, |inner| {
        (inner.clone(), inner.clone(), inner).prop_map(|(x, y, z)| Monomial::node(x, y, z))
    })
}

/// Every ternary tree shape of odd degree n, leaves labelled `a`.
pub fn all_shapes(n: usize) -> Vec<Monomial> {
    if n == 1 {
        return vec![Monomial::Leaf(0)];
    }
    let mut out = Vec::new();
    for i in (1..n).step_by(2) {
        for j in (1..n - i).step_by(2) {
            let k = n - i - j;
            if k.is_multiple_of(2) || i + j + k != n {
                continue;
            }
            for x in all_shapes(i) {
                for y in all_shapes(j) {
                    for z in all_shapes(k) {
                        out.push(Monomial::node(x.clone(), y.clone(), z.clone()));
                    }
                }
            }
        }
    }
    out
}

/// Expansion as a sorted list of (letters, center, coefficient).
pub fn expansion(m: &Monomial, scale: i64) -> Vec<(Vec<Letter>, usize, i64)> {
    TrilinearOp::pats()
        .expand(m)
        .into_iter()
        .map(|(w, c)| (w.letters().to_vec(), w.center(), c * scale))
        .collect()
}
