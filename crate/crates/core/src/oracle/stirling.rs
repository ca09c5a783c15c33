//! Stirling permutations of the multiset `{1,1,2,2,...,n,n}`: words where
//! everything between the two copies of `j` exceeds `j`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::perm::des_asc;
use crate::poly::{Monomial, Polynomial, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StirlingStats {
    pub n: usize,
    pub des: u32,
    pub asc: u32,
    pub plat: u32,
}

/// Statistics of a Stirling word, padded with zeros at both ends.
pub fn stirling_stats(word: &[u32]) -> StirlingStats {
    let (des, asc) = des_asc(word);
    let plat = word.windows(2).filter(|w| w[0] == w[1]).count() as u32;
    StirlingStats {
        n: word.len() / 2,
        des,
        asc,
        plat,
    }
}

pub fn is_stirling_permutation(word: &[u32]) -> bool {
    if !word.len().is_multiple_of(2) {
        return false;
    }
    let n = word.len() / 2;
    for j in 1..=n as u32 {
        let positions: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == j)
            .map(|(i, _)| i)
            .collect();
        if positions.len() != 2 {
            return false;
        }
        if word[positions[0] + 1..positions[1]].iter().any(|&v| v <= j) {
            return false;
        }
    }
    true
}

/// Visits every word of `Q_n`, built by inserting `j j` into each of the
/// `2j - 1` gaps of a word of `Q_{j-1}`.
pub fn for_each_stirling_permutation(n: usize, mut visit: impl FnMut(&[u32])) {
    fn grow(word: &mut Vec<u32>, j: u32, n: u32, visit: &mut dyn FnMut(&[u32])) {
        if j > n {
            visit(word);
            return;
        }
        for gap in 0..=word.len() {
            word.splice(gap..gap, [j, j]);
            grow(word, j + 1, n, visit);
            word.drain(gap..gap + 2);
        }
    }
    if n == 0 {
        visit(&[]);
        return;
    }
    let mut word = Vec::with_capacity(2 * n);
    grow(&mut word, 1, n as u32, &mut visit);
}

/// `sum over Q_n of x^des y^asc z^plat`.
pub fn stirling_distribution(n: usize) -> Polynomial {
    let mut hist: BTreeMap<(u32, u32, u32), u64> = BTreeMap::new();
    for_each_stirling_permutation(n, |w| {
        let s = stirling_stats(w);
        assert_eq!(
            s.des + s.asc + s.plat,
            2 * n as u32 + 1,
            "des + asc + plat = 2n + 1 fails on {w:?}"
        );
        *hist.entry((s.des, s.asc, s.plat)).or_default() += 1;
    });
    let (x, y, z) = (Var::new("x"), Var::new("y"), Var::new("z"));
    Polynomial::from_terms(hist.into_iter().map(|((d, a, p), c)| {
        (
            Monomial::from_pairs([(x, d as i64), (y, a as i64), (z, p as i64)]),
            BigInt::from(c),
        )
    }))
    .with_order_vars(&[x, y, z])
}

/// Second-order Eulerian numbers `C(n, k)`: words of `Q_n` by descents.
pub fn second_order_numbers(n: usize) -> BTreeMap<u32, u64> {
    let mut hist = BTreeMap::new();
    for_each_stirling_permutation(n, |w| {
        *hist.entry(stirling_stats(w).des).or_default() += 1;
    });
    hist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn statistics_of_small_words() {
        assert_eq!(
            stirling_stats(&[1, 1]),
            StirlingStats {
                n: 1,
                des: 1,
                asc: 1,
                plat: 1
            }
        );
        assert_eq!(
            stirling_stats(&[1, 2, 2, 1]),
            StirlingStats {
                n: 2,
                des: 2,
                asc: 2,
                plat: 1
            }
        );
        assert_eq!(
            stirling_stats(&[1, 1, 2, 2]),
            StirlingStats {
                n: 2,
                des: 1,
                asc: 2,
                plat: 2
            }
        );
    }

    #[test]
    fn validity() {
        assert!(is_stirling_permutation(&[1, 2, 2, 1]));
        assert!(!is_stirling_permutation(&[2, 1, 1, 2]));
        assert!(!is_stirling_permutation(&[1, 2, 1, 2]));
        assert!(!is_stirling_permutation(&[1, 1, 2]));
    }

    #[test]
    fn generation_is_complete_and_valid() {
        for n in 0..=6usize {
            let mut words = std::collections::HashSet::new();
            for_each_stirling_permutation(n, |w| {
                assert!(is_stirling_permutation(w), "{w:?}");
                assert!(words.insert(w.to_vec()));
            });
            let double_factorial: usize = (1..=n).map(|j| 2 * j - 1).product();
            assert_eq!(words.len(), double_factorial);
        }
    }

    #[test]
    fn generation_matches_filtered_multiset_permutations() {
        // Independent route for n = 3: filter all 90 arrangements of 112233.
        let mut filtered = std::collections::BTreeSet::new();
        super::super::perm::for_each_permutation(6, |p| {
            let word: Vec<u32> = p.iter().map(|&v| v.div_ceil(2)).collect();
            if is_stirling_permutation(&word) {
                filtered.insert(word);
            }
        });
        let mut generated = std::collections::BTreeSet::new();
        for_each_stirling_permutation(3, |w| {
            generated.insert(w.to_vec());
        });
        assert_eq!(filtered, generated);
    }

    #[test]
    fn distribution_examples() {
        assert_eq!(stirling_distribution(1), parse("x*y*z").unwrap());
        assert_eq!(
            stirling_distribution(2),
            parse("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2").unwrap()
        );
        assert_eq!(stirling_distribution(3).eval_ones(), BigInt::from(15));
    }

    #[test]
    fn second_order_number_examples() {
        assert_eq!(second_order_numbers(1), BTreeMap::from([(1, 1)]));
        assert_eq!(second_order_numbers(2), BTreeMap::from([(1, 1), (2, 2)]));
        assert_eq!(second_order_numbers(4).values().sum::<u64>(), 105);
    }
}
