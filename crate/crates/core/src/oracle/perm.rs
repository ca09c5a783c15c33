//! Permutations of `[n]` with descents and ascents counted after padding a
//! zero at both ends.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::poly::{Monomial, Polynomial, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PermutationStats {
    pub n: usize,
    pub des: u32,
    pub asc: u32,
}

fn padded(word: &[u32], i: usize) -> u32 {
    // index 0 and len+1 are the padding zeros
    if i == 0 || i > word.len() {
        0
    } else {
        word[i - 1]
    }
}

/// Descents `s_i > s_{i+1}` and ascents `s_{i-1} < s_i` for `1 <= i <= len`,
/// with `s_0 = s_{len+1} = 0`. Also used for Stirling words.
pub(crate) fn des_asc(word: &[u32]) -> (u32, u32) {
    let len = word.len();
    let mut des = 0;
    let mut asc = 0;
    for i in 1..=len {
        if padded(word, i) > padded(word, i + 1) {
            des += 1;
        }
        if padded(word, i - 1) < padded(word, i) {
            asc += 1;
        }
    }
    (des, asc)
}

pub fn permutation_stats(perm: &[u32]) -> PermutationStats {
    let (des, asc) = des_asc(perm);
    PermutationStats {
        n: perm.len(),
        des,
        asc,
    }
}

/// A double descent is `1 <= i <= n-1` with `s_i > s_{i+1} > s_{i+2}`,
/// where `s_{n+1} = 0`.
pub fn has_double_descent(perm: &[u32]) -> bool {
    let n = perm.len();
    (1..n)
        .any(|i| padded(perm, i) > padded(perm, i + 1) && padded(perm, i + 1) > padded(perm, i + 2))
}

/// Rearranges `a` into the next permutation in lexicographic order; returns
/// false (leaving `a` sorted ascending) after the last one.
fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Calls `visit` on every permutation of `[n]` in lexicographic order.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[u32])) {
    let mut perm: Vec<u32> = (1..=n as u32).collect();
    loop {
        visit(&perm);
        if !next_permutation(&mut perm) {
            break;
        }
    }
}

/// `sum over S_n of x^des y^asc`.
pub fn permutation_distribution(n: usize) -> Polynomial {
    let mut hist: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for_each_permutation(n, |p| {
        let s = permutation_stats(p);
        assert_eq!(
            s.des + s.asc,
            n as u32 + 1,
            "des + asc = n + 1 fails on {p:?}"
        );
        *hist.entry((s.des, s.asc)).or_default() += 1;
    });
    let (x, y) = (Var::new("x"), Var::new("y"));
    Polynomial::from_terms(hist.into_iter().map(|((d, a), c)| {
        (
            Monomial::from_pairs([(x, d as i64), (y, a as i64)]),
            BigInt::from(c),
        )
    }))
    .with_order_vars(&[x, y])
}

/// Permutations without double descents, counted by number of descents.
pub fn no_double_descent_counts(n: usize) -> BTreeMap<u32, u64> {
    let mut hist = BTreeMap::new();
    for_each_permutation(n, |p| {
        if !has_double_descent(p) {
            *hist.entry(permutation_stats(p).des).or_default() += 1;
        }
    });
    hist
}
