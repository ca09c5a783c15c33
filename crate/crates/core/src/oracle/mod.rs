//! Exhaustive combinatorial ground truth: permutations, Stirling
//! permutations and bounded-degree increasing trees, with their statistics.
//!
//! Everything here is brute force and independent of the grammar engine.

mod perm;
mod stirling;
mod tree;

pub use perm::{
    for_each_permutation, has_double_descent, no_double_descent_counts, permutation_distribution,
    permutation_stats, PermutationStats,
};
pub use stirling::{
    for_each_stirling_permutation, is_stirling_permutation, second_order_numbers,
    stirling_distribution, stirling_stats, StirlingStats,
};
pub use tree::{
    andre_distribution, class_weight_sum, enumerate_trees, for_each_tree, profile_histogram,
    tree_leaf_histogram, tree_profile_histogram, tree_weight, Labeling, PlaneTree, TreeError,
};

/// Soft limits for the enumerations; callers may override them explicitly.
pub const MAX_PERMUTATION_N: usize = 10;
pub const MAX_STIRLING_N: usize = 7;
pub const MAX_TREE_N: usize = 9;
