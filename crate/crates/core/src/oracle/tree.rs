//! Increasing trees on `[n]` with a bound on the number of children.
//!
//! Trees are grown by attaching `m + 1` as a new leaf to a tree on `[m]`.
//! In plane mode a vertex with `d` children offers `d + 1` ordered slots;
//! otherwise children are unordered and the new leaf is simply appended.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("invalid tree: {0}")]
    Invalid(String),
    #[error("vertex {label} has {degree} children, bound is {bound}")]
    DegreeBound {
        label: u32,
        degree: usize,
        bound: usize,
    },
    #[error("labeling sum {explicit} differs from closed form {closed}")]
    ClassWeightMismatch { explicit: String, closed: String },
}

/// Rooted increasing tree on `1..=n` with root 1 and ordered children.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    children: Vec<Vec<u32>>,
}

impl PlaneTree {
    pub fn single() -> PlaneTree {
        PlaneTree {
            children: vec![Vec::new()],
        }
    }

    /// `children[v - 1]` lists the children of `v` in order.
    pub fn from_children(children: Vec<Vec<u32>>) -> Result<PlaneTree, TreeError> {
        let n = children.len();
        if n == 0 {
            return Err(TreeError::Invalid("empty tree".into()));
        }
        let mut seen = vec![false; n + 1];
        for (i, kids) in children.iter().enumerate() {
            let parent = i as u32 + 1;
            for &c in kids {
                if c as usize > n || c <= parent {
                    return Err(TreeError::Invalid(format!(
                        "child {c} of {parent} breaks the increasing labeling"
                    )));
                }
                if std::mem::replace(&mut seen[c as usize], true) {
                    return Err(TreeError::Invalid(format!("{c} has two parents")));
                }
            }
        }
        if let Some(orphan) = (2..=n).find(|&v| !seen[v]) {
            return Err(TreeError::Invalid(format!("{orphan} has no parent")));
        }
        Ok(PlaneTree { children })
    }

    pub fn n(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self, label: u32) -> &[u32] {
        &self.children[label as usize - 1]
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.children.iter().map(Vec::len)
    }

    pub fn count_degree(&self, d: usize) -> u32 {
        self.degrees().filter(|&e| e == d).count() as u32
    }

    pub fn leaves(&self) -> u32 {
        self.count_degree(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// `(degree-two count, degree-one count, leaf count)`.
    pub fn profile(&self) -> (u32, u32, u32) {
        (
            self.count_degree(2),
            self.count_degree(1),
            self.count_degree(0),
        )
    }

    fn check_bound(&self, bound: usize) -> Result<(), TreeError> {
        for (i, kids) in self.children.iter().enumerate() {
            if kids.len() > bound {
                return Err(TreeError::DegreeBound {
                    label: i as u32 + 1,
                    degree: kids.len(),
                    bound,
                });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n(), "children": self.children })
    }
}

/// Bracket notation, e.g. `1(5,2(3(4,6)))`.
impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_node(t: &PlaneTree, v: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{v}")?;
            let kids = t.children(v);
            if !kids.is_empty() {
                f.write_str("(")?;
                for (i, &c) in kids.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write_node(t, c, f)?;
                }
                f.write_str(")")?;
            }
            Ok(())
        }
        write_node(self, 1, f)
    }
}

/// Visits every increasing tree on `[n]` whose vertices have at most
/// `degree_bound` children.
pub fn for_each_tree(
    n: usize,
    degree_bound: usize,
    plane: bool,
    mut visit: impl FnMut(&PlaneTree),
) {
    fn grow(
        tree: &mut PlaneTree,
        n: usize,
        bound: usize,
        plane: bool,
        visit: &mut dyn FnMut(&PlaneTree),
    ) {
        let m = tree.children.len();
        if m == n {
            visit(tree);
            return;
        }
        let label = m as u32 + 1;
        tree.children.push(Vec::new());
        for v in 0..m {
            let d = tree.children[v].len();
            if d >= bound {
                continue;
            }
            let slots = if plane { 0..=d } else { d..=d };
            for slot in slots {
                tree.children[v].insert(slot, label);
                grow(tree, n, bound, plane, visit);
                tree.children[v].remove(slot);
            }
        }
        tree.children.pop();
    }
    if n == 0 {
        return;
    }
    let mut tree = PlaneTree::single();
    grow(&mut tree, n, degree_bound, plane, &mut visit);
}

pub fn enumerate_trees(n: usize, degree_bound: usize, plane: bool) -> Vec<PlaneTree> {
    let mut out = Vec::new();
    for_each_tree(n, degree_bound, plane, |t| out.push(t.clone()));
    out
}

/// Trees counted by number of leaves: `t(n,k)` in plane mode, `s(n,k)`
/// otherwise (for `degree_bound = 2`).
pub fn tree_leaf_histogram(n: usize, degree_bound: usize, plane: bool) -> BTreeMap<u32, u64> {
    let mut hist = BTreeMap::new();
    for_each_tree(n, degree_bound, plane, |t| {
        *hist.entry(t.leaves()).or_default() += 1
    });
    hist
}

/// Trees counted by `(degree-two, degree-one, leaf)` counts.
pub fn profile_histogram(
    n: usize,
    degree_bound: usize,
    plane: bool,
) -> BTreeMap<(u32, u32, u32), u64> {
    let mut hist = BTreeMap::new();
    for_each_tree(n, degree_bound, plane, |t| {
        *hist.entry(t.profile()).or_default() += 1
    });
    hist
}

/// Profile histogram of 0-1-2-3 increasing plane trees on `[n]`.
pub fn tree_profile_histogram(n: usize) -> BTreeMap<(u32, u32, u32), u64> {
    profile_histogram(n, 3, true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Labeling {
    /// leaf `u`, one child `v`, two children `1`.
    Gamma,
    /// leaf `w`, one child `v`, two children `u`, three children `1`.
    Elementary,
}

/// Product of the vertex labels.
pub fn tree_weight(t: &PlaneTree, labeling: Labeling) -> Result<Polynomial, TreeError> {
    let (u, v, w) = (Var::new("u"), Var::new("v"), Var::new("w"));
    let (labels, bound): (&[Option<Var>], usize) = match labeling {
        Labeling::Gamma => (&[Some(u), Some(v), None], 2),
        Labeling::Elementary => (&[Some(w), Some(v), Some(u), None], 3),
    };
    t.check_bound(bound)?;
    let monomial = Monomial::from_pairs(t.degrees().filter_map(|d| labels[d]).map(|x| (x, 1)));
    Ok(Polynomial::term(1, monomial).with_order_vars(&[u, v, w]))
}

/// Sum of weights over all labelings that give a degree-one vertex `x` or
/// `y`, a leaf `xy`, and a degree-two vertex `1`. Enumerates the labelings
/// explicitly and checks the sum against `(xy)^k (x+y)^(n+1-2k)`.
pub fn class_weight_sum(t: &PlaneTree) -> Result<Polynomial, TreeError> {
    t.check_bound(2)?;
    let (x, y) = (Var::new("x"), Var::new("y"));
    let k = t.leaves() as i64;
    let ones = t.count_degree(1);
    let mut explicit: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    for mask in 0u64..(1u64 << ones) {
        let xs = mask.count_ones() as i64;
        let ys = ones as i64 - xs;
        let m = Monomial::from_pairs([(x, k + xs), (y, k + ys)]);
        *explicit.entry(m).or_default() += 1;
    }
    let explicit = Polynomial::from_terms(explicit).with_order_vars(&[x, y]);

    let xy = Polynomial::term(1, Monomial::from_pairs([(x, 1), (y, 1)]));
    let sum = &Polynomial::var(x) + &Polynomial::var(y);
    let closed = (&xy.pow(k).unwrap() * &sum.pow(t.n() as i64 + 1 - 2 * k).unwrap())
        .with_order_vars(&[x, y]);
    if explicit != closed {
        return Err(TreeError::ClassWeightMismatch {
            explicit: explicit.to_string(),
            closed: closed.to_string(),
        });
    }
    Ok(closed)
}

/// `sum over 0-1-2 increasing (non-plane) trees of x^leaves y^(one-child vertices)`.
pub fn andre_distribution(n: usize) -> Polynomial {
    let (x, y) = (Var::new("x"), Var::new("y"));
    let mut hist: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    for_each_tree(n, 2, false, |t| {
        let m = Monomial::from_pairs([(x, t.leaves() as i64), (y, t.count_degree(1) as i64)]);
        *hist.entry(m).or_default() += 1;
    });
    Polynomial::from_terms(hist).with_order_vars(&[x, y])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn tree(children: &[&[u32]]) -> PlaneTree {
        PlaneTree::from_children(children.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(PlaneTree::from_children(vec![vec![2], vec![]]).is_ok());
        assert!(PlaneTree::from_children(vec![vec![], vec![1]]).is_err());
        assert!(PlaneTree::from_children(vec![vec![2, 2], vec![]]).is_err());
        assert!(PlaneTree::from_children(vec![vec![], vec![]]).is_err());
        assert!(PlaneTree::from_children(vec![]).is_err());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_trees(1, 2, true), vec![PlaneTree::single()]);
        assert_eq!(enumerate_trees(1, 3, false).len(), 1);
        let three = enumerate_trees(3, 2, true);
        assert_eq!(three.len(), 3);
        let leaves: Vec<u32> = three.iter().map(PlaneTree::leaves).collect();
        assert_eq!(leaves.iter().filter(|&&k| k == 1).count(), 1);
        assert_eq!(leaves.iter().filter(|&&k| k == 2).count(), 2);
        assert!(enumerate_trees(0, 2, true).is_empty());
    }

    #[test]
    fn enumeration_has_no_duplicates_and_respects_bound() {
        for (bound, plane) in [(2, true), (2, false), (3, true), (3, false)] {
            let trees = enumerate_trees(6, bound, plane);
            let unique: std::collections::HashSet<_> = trees.iter().cloned().collect();
            assert_eq!(unique.len(), trees.len());
            assert!(trees.iter().all(|t| t.max_degree() <= bound));
        }
    }

    #[test]
    fn unbounded_plane_counts_are_double_factorials() {
        // Plane increasing trees on [n] number (2n-3)!!; with bound >= n-1
        // nothing is excluded.
        for n in 2..=7usize {
            let expected: usize = (1..n).map(|j| 2 * j - 1).product();
            assert_eq!(enumerate_trees(n, n, true).len(), expected);
        }
        // Non-plane increasing trees on [n] number (n-1)!.
        assert_eq!(enumerate_trees(6, 6, false).len(), 120);
    }

    #[test]
    fn histograms() {
        assert_eq!(
            tree_leaf_histogram(3, 2, true),
            BTreeMap::from([(1, 1), (2, 2)])
        );
        assert_eq!(
            tree_leaf_histogram(3, 2, false),
            BTreeMap::from([(1, 1), (2, 1)])
        );
        assert_eq!(tree_leaf_histogram(1, 2, true), BTreeMap::from([(1, 1)]));
        assert_eq!(tree_leaf_histogram(1, 2, false), BTreeMap::from([(1, 1)]));
        assert_eq!(tree_profile_histogram(1), BTreeMap::from([((0, 0, 1), 1)]));
        assert_eq!(tree_profile_histogram(2), BTreeMap::from([((0, 1, 1), 1)]));
        assert_eq!(
            tree_profile_histogram(3),
            BTreeMap::from([((1, 0, 2), 2), ((0, 2, 1), 1)])
        );
        assert_eq!(
            tree_profile_histogram(5),
            BTreeMap::from([
                ((0, 1, 3), 42),
                ((0, 4, 1), 1),
                ((1, 2, 2), 22),
                ((2, 0, 3), 16)
            ])
        );
    }

    #[test]
    fn weights() {
        let gamma_tree = tree(&[&[5, 2], &[3], &[4, 6], &[], &[], &[]]);
        assert_eq!(
            tree_weight(&gamma_tree, Labeling::Gamma).unwrap(),
            parse("u^3*v").unwrap()
        );
        let e_tree = tree(&[
            &[4, 2],
            &[5, 3],
            &[8],
            &[6],
            &[],
            &[10, 7, 9],
            &[],
            &[],
            &[],
            &[],
        ]);
        assert_eq!(
            tree_weight(&e_tree, Labeling::Elementary).unwrap(),
            parse("u^2*v^2*w^5").unwrap()
        );
        assert!(matches!(
            tree_weight(&e_tree, Labeling::Gamma),
            Err(TreeError::DegreeBound {
                label: 6,
                degree: 3,
                bound: 2
            })
        ));
        assert_eq!(
            tree_weight(&PlaneTree::single(), Labeling::Gamma).unwrap(),
            parse("u").unwrap()
        );
        assert_eq!(
            tree_weight(&PlaneTree::single(), Labeling::Elementary).unwrap(),
            parse("w").unwrap()
        );
    }

    #[test]
    fn class_weights() {
        assert_eq!(
            class_weight_sum(&PlaneTree::single()).unwrap(),
            parse("x*y").unwrap()
        );
        let path = tree(&[&[2], &[3], &[]]);
        assert_eq!(
            class_weight_sum(&path).unwrap(),
            parse("x*y*(x+y)^2").unwrap()
        );
    }

    #[test]
    fn andre_examples() {
        assert_eq!(andre_distribution(1), parse("x").unwrap());
        assert_eq!(andre_distribution(2), parse("x*y").unwrap());
        assert_eq!(andre_distribution(3), parse("x^2 + x*y^2").unwrap());
        // Euler zigzag numbers count the trees.
        let counts: Vec<BigInt> = (1..=7).map(|n| andre_distribution(n).eval_ones()).collect();
        let zigzag: Vec<BigInt> = [1, 1, 2, 5, 16, 61, 272].map(BigInt::from).to_vec();
        assert_eq!(counts, zigzag);
    }

    #[test]
    fn bracket_notation() {
        let t = tree(&[&[5, 2], &[3], &[4, 6], &[], &[], &[]]);
        assert_eq!(t.to_string(), "1(5,2(3(4,6)))");
        assert_eq!(PlaneTree::single().to_string(), "1");
        assert_eq!(t.to_json()["children"][0], serde_json::json!([5, 2]));
    }
}
