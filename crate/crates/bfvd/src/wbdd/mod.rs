//! Kernelization for (weighted) bounded-degree deletion, parameterized by
//! the feedback edge number.

pub mod path;
pub mod rules;
pub mod table;

pub use path::{characteristic_matrix, opt_path, weights_from_offsets, CharMatrix};
pub use rules::{
    apply_basic_rules, apply_path_rule, expand_weights, kernelize_bdd, reduce_to_fixpoint,
    remove_weights,
};
pub use table::{build_replacement_table, build_replacement_table_seq, ReplacementTable};
