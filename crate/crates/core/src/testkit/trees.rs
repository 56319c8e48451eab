//! Random labeled trees and random tree mutations, for distance testing.

use crate::ast::AstNode;
use rand::seq::SliceRandom;
use rand::Rng;

#[derive(Debug, Clone)]
pub struct TreeGenConfig {
    pub max_nodes: usize,
    pub labels: Vec<String>,
}

impl Default for TreeGenConfig {
    fn default() -> Self {
        TreeGenConfig {
            max_nodes: 8,
            labels: ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// A uniform-ish random tree with between 1 and `max_nodes` nodes.
pub fn random_tree(rng: &mut impl Rng, config: &TreeGenConfig) -> AstNode {
    let nodes = rng.gen_range(1..=config.max_nodes.max(1));
    let mut root = AstNode::leaf(config.labels.choose(rng).unwrap().clone());
    for _ in 1..nodes {
        // attach a new leaf under a random existing node
        let mut positions = Vec::new();
        collect_positions(&root, &mut Vec::new(), &mut positions);
        let parent = positions.choose(rng).unwrap().clone();
        let node = root.get_mut(&parent).unwrap();
        let index = rng.gen_range(0..=node.children.len());
        node.children
            .insert(index, AstNode::leaf(config.labels.choose(rng).unwrap().clone()));
    }
    root
}

fn collect_positions(node: &AstNode, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(path.clone());
    for (i, child) in node.children.iter().enumerate() {
        path.push(i);
        collect_positions(child, path, out);
        path.pop();
    }
}

/// Apply `edits` random unit edits (rename, delete, insert, swap) to a copy
/// of `tree`. The true distance to the result is at most `edits`.
pub fn mutate_tree(rng: &mut impl Rng, tree: &AstNode, edits: usize, config: &TreeGenConfig) -> AstNode {
    let mut t = tree.clone();
    for _ in 0..edits {
        let mut positions = Vec::new();
        collect_positions(&t, &mut Vec::new(), &mut positions);
        match rng.gen_range(0..4u8) {
            0 => {
                // rename
                let path = positions.choose(rng).unwrap();
                let node = t.get_mut(path).unwrap();
                node.label = config.labels.choose(rng).unwrap().clone();
            }
            1 => {
                // delete a non-root node, promoting children
                let candidates: Vec<_> =
                    positions.iter().filter(|p| !p.is_empty()).collect();
                if let Some(path) = candidates.choose(rng) {
                    let (&last, parent) = path.split_last().unwrap();
                    let parent = t.get_mut(parent).unwrap();
                    let removed = parent.children.remove(last);
                    for (k, c) in removed.children.into_iter().enumerate() {
                        parent.children.insert(last + k, c);
                    }
                }
            }
            2 => {
                // insert, absorbing a random span
                let path = positions.choose(rng).unwrap();
                let node = t.get_mut(path).unwrap();
                let index = rng.gen_range(0..=node.children.len());
                let take = rng.gen_range(0..=node.children.len() - index);
                let absorbed: Vec<AstNode> = node.children.drain(index..index + take).collect();
                node.children.insert(
                    index,
                    AstNode { label: config.labels.choose(rng).unwrap().clone(), children: absorbed },
                );
            }
            _ => {
                // swap adjacent siblings somewhere, if possible
                let candidates: Vec<_> = positions
                    .iter()
                    .filter(|p| t.get(p).map(|n| n.children.len() >= 2).unwrap_or(false))
                    .collect();
                if let Some(path) = candidates.choose(rng) {
                    let node = t.get_mut(path).unwrap();
                    let i = rng.gen_range(0..node.children.len() - 1);
                    node.children.swap(i, i + 1);
                }
            }
        }
    }
    t
}
