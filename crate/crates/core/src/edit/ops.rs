//! The four unit edit operations and script application.
//!
//! Operations work on raw labeled trees: intermediate trees inside a script
//! do not have to convert back to a method (`a + b` → `a[b]` passes through
//! a two-child `binop`), only to stay well-formed trees. Deleting a node
//! promotes its children in place; inserting a node may absorb a span of its
//! new parent's children, which makes insert and delete exact inverses.

use super::EditError;
use crate::ast::AstNode;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum EditOp {
    InsertNode {
        parent: Vec<usize>,
        index: usize,
        label: String,
        /// How many existing children, starting at `index`, become children
        /// of the inserted node. Zero inserts a leaf.
        #[serde(default)]
        take: usize,
    },
    DeleteNode { path: Vec<usize> },
    RenameNode { path: Vec<usize>, label: String },
    /// Exchange the sibling subtrees at `index` and `index + 1`.
    SwapSiblings { parent: Vec<usize>, index: usize },
}

pub type EditScript = Vec<EditOp>;

/// Labels that must stay leaves.
pub(crate) fn is_terminal_label(label: &str) -> bool {
    label == "empty"
        || ["name:", "lit:", "op:", "uop:", "word:", "mod:", "type:"]
            .iter()
            .any(|p| label.starts_with(p))
}

/// Apply one operation, leaving the input untouched.
pub fn apply(op: &EditOp, tree: &AstNode) -> Result<AstNode, EditError> {
    let mut out = tree.clone();
    apply_in_place(op, &mut out)?;
    Ok(out)
}

/// Apply a script left to right.
pub fn apply_script(script: &[EditOp], tree: &AstNode) -> Result<AstNode, EditError> {
    let mut out = tree.clone();
    for op in script {
        apply_in_place(op, &mut out)?;
    }
    Ok(out)
}

fn apply_in_place(op: &EditOp, tree: &mut AstNode) -> Result<(), EditError> {
    match op {
        EditOp::InsertNode { parent, index, label, take } => {
            let node = tree
                .get_mut(parent)
                .ok_or_else(|| EditError::Path { path: parent.clone() })?;
            if is_terminal_label(&node.label) {
                return Err(EditError::Arity {
                    path: parent.clone(),
                    detail: format!("cannot insert under terminal {}", node.label),
                });
            }
            if *index > node.children.len() || index + take > node.children.len() {
                return Err(EditError::Path { path: parent.clone() });
            }
            if *take > 0 && is_terminal_label(label) {
                return Err(EditError::Arity {
                    path: parent.clone(),
                    detail: format!("terminal {label} cannot absorb children"),
                });
            }
            let absorbed: Vec<AstNode> = node.children.drain(*index..index + take).collect();
            node.children
                .insert(*index, AstNode { label: label.clone(), children: absorbed });
            Ok(())
        }
        EditOp::DeleteNode { path } => {
            let Some((&last, parent_path)) = path.split_last() else {
                return Err(EditError::Arity {
                    path: path.clone(),
                    detail: "cannot delete the root".into(),
                });
            };
            let parent = tree
                .get_mut(parent_path)
                .ok_or_else(|| EditError::Path { path: path.clone() })?;
            if last >= parent.children.len() {
                return Err(EditError::Path { path: path.clone() });
            }
            let removed = parent.children.remove(last);
            for (k, child) in removed.children.into_iter().enumerate() {
                parent.children.insert(last + k, child);
            }
            Ok(())
        }
        EditOp::RenameNode { path, label } => {
            let node =
                tree.get_mut(path).ok_or_else(|| EditError::Path { path: path.clone() })?;
            if is_terminal_label(label) && !node.children.is_empty() {
                return Err(EditError::Arity {
                    path: path.clone(),
                    detail: format!("terminal {label} cannot keep children"),
                });
            }
            node.label = label.clone();
            Ok(())
        }
        EditOp::SwapSiblings { parent, index } => {
            let node = tree
                .get_mut(parent)
                .ok_or_else(|| EditError::Path { path: parent.clone() })?;
            if index + 1 >= node.children.len() {
                return Err(EditError::Path { path: parent.clone() });
            }
            node.children.swap(*index, index + 1);
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::parse_method;

    fn expr_tree(src: &str) -> AstNode {
        let m = parse_method(&format!("void f() {{ x = {src}; }}")).unwrap();
        // method -> block -> exprstmt(assign) -> value
        m.to_tree().get(&[1, 0, 0, 1]).unwrap().clone()
    }

    #[test]
    fn rename_identifier_terminal() {
        let t = expr_tree("a + b");
        let renamed = apply(
            &EditOp::RenameNode { path: vec![1, 0], label: "name:b".into() },
            &t,
        )
        .unwrap();
        assert_eq!(renamed, expr_tree("b + b"));
    }

    #[test]
    fn swap_operand_siblings() {
        let t = expr_tree("a + b");
        let swapped =
            apply(&EditOp::SwapSiblings { parent: vec![], index: 1 }, &t).unwrap();
        assert_eq!(swapped, expr_tree("b + a"));
    }

    #[test]
    fn delete_statement_from_block() {
        // deletion promotes children, so removing a whole statement in one
        // op needs a single-node statement
        let m = parse_method("void f() { a(); ; c(); }").unwrap();
        let t = m.to_tree();
        let out = apply(&EditOp::DeleteNode { path: vec![1, 1] }, &t).unwrap();
        let expect = parse_method("void f() { a(); c(); }").unwrap().to_tree();
        assert_eq!(out, expect);
        // a statement with inner structure promotes its child instead
        let m2 = parse_method("void f() { a(); b(); c(); }").unwrap();
        let promoted = apply(&EditOp::DeleteNode { path: vec![1, 1] }, &m2.to_tree()).unwrap();
        assert_eq!(promoted.get(&[1]).unwrap().children.len(), 3);
        assert_eq!(promoted.get(&[1, 1]).unwrap().label, "call");
    }

    #[test]
    fn two_ops_turn_addition_into_indexing() {
        let t = expr_tree("a + b");
        let script = vec![
            EditOp::DeleteNode { path: vec![0] },
            EditOp::RenameNode { path: vec![], label: "index".into() },
        ];
        assert_eq!(apply_script(&script, &t).unwrap(), expr_tree("a[b]"));
    }

    #[test]
    fn insert_absorbing_span_inverts_delete() {
        let m = parse_method("void f() { if (c) { a(); b(); } }").unwrap();
        let t = m.to_tree();
        // delete the if statement: its cond and block splice into the outer block
        let deleted = apply(&EditOp::DeleteNode { path: vec![1, 0] }, &t).unwrap();
        let restored = apply(
            &EditOp::InsertNode { parent: vec![1], index: 0, label: "if".into(), take: 2 },
            &deleted,
        )
        .unwrap();
        assert_eq!(restored, t);
    }

    #[test]
    fn terminal_nodes_refuse_children() {
        let t = expr_tree("a + b");
        let err = apply(
            &EditOp::InsertNode { parent: vec![0], index: 0, label: "x".into(), take: 0 },
            &t,
        )
        .unwrap_err();
        assert!(matches!(err, EditError::Arity { .. }));
    }

    #[test]
    fn missing_paths_error() {
        let t = expr_tree("a");
        let err =
            apply(&EditOp::RenameNode { path: vec![9, 9], label: "x".into() }, &t).unwrap_err();
        assert!(matches!(err, EditError::Path { .. }));
    }
}
