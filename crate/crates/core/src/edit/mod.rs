//! Tree edits over [`AstNode`]: the four unit operations, script
//! application, unit-cost tree-edit distance with adjacent-sibling swaps,
//! and enumeration of minimal modification edits used by the mutation stage.

mod distance;
mod enumerate;
mod ops;
mod vocab;

pub use distance::{tree_edit_distance, tree_edit_distance_no_swap};
pub use enumerate::{enumerate_minimal_valid_edits, identifier_candidates, EditResult, EnumerateConfig};
pub use ops::{apply, apply_script, EditOp, EditScript};
pub use vocab::{default_vocabulary, is_reserved_word};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EditError {
    #[error("no node at tree path {path:?}")]
    Path { path: Vec<usize> },
    #[error("edit violates node shape at {path:?}: {detail}")]
    Arity { path: Vec<usize>, detail: String },
}
