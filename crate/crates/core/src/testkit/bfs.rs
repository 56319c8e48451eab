//! Bidirectional breadth-first search over the edit graph. The independent
//! distance oracle: it enumerates neighbor trees directly (its own edit
//! application, not the edit engine's) and meets in the middle. The four
//! moves are mutually inverse, so forward and backward neighborhoods agree.

use crate::ast::AstNode;
use std::collections::{HashMap, HashSet};

/// Exact minimum number of unit edits (insert with span, delete with
/// promotion, rename, adjacent-sibling swap) transforming `a` into `b`.
/// Both trees' labels form the rename/insert alphabet. Gives up (returns
/// `None`) past `max_depth` total edits or `state_cap` explored states.
pub fn bfs_distance(a: &AstNode, b: &AstNode, max_depth: usize, state_cap: usize) -> Option<usize> {
    if a == b {
        return Some(0);
    }
    let mut alphabet: Vec<String> = Vec::new();
    collect_labels(a, &mut alphabet);
    collect_labels(b, &mut alphabet);
    alphabet.sort();
    alphabet.dedup();

    let key = |t: &AstNode| serialize(t);
    let mut fwd: HashMap<String, usize> = HashMap::new();
    let mut bwd: HashMap<String, usize> = HashMap::new();
    let mut fwd_frontier = vec![a.clone()];
    let mut bwd_frontier = vec![b.clone()];
    fwd.insert(key(a), 0);
    bwd.insert(key(b), 0);
    let mut fwd_depth = 0;
    let mut bwd_depth = 0;
    let mut states = 0usize;

    loop {
        if fwd_depth + bwd_depth >= max_depth {
            return None;
        }
        // expand the smaller frontier
        let expand_fwd = fwd_frontier.len() <= bwd_frontier.len();
        let (frontier, this_side, other_side, depth) = if expand_fwd {
            (&mut fwd_frontier, &mut fwd, &bwd, &mut fwd_depth)
        } else {
            (&mut bwd_frontier, &mut bwd, &fwd, &mut bwd_depth)
        };
        *depth += 1;
        let mut next = Vec::new();
        let mut best_meet: Option<usize> = None;
        for tree in frontier.iter() {
            for n in neighbors(tree, &alphabet) {
                let k = serialize(&n);
                if this_side.contains_key(&k) {
                    continue;
                }
                states += 1;
                if states > state_cap {
                    return None;
                }
                if let Some(&other_d) = other_side.get(&k) {
                    let total = *depth + other_d;
                    best_meet = Some(best_meet.map_or(total, |b: usize| b.min(total)));
                }
                this_side.insert(k, *depth);
                next.push(n);
            }
        }
        if let Some(meet) = best_meet {
            return Some(meet);
        }
        if next.is_empty() {
            return None;
        }
        *frontier = next;
    }
}

fn collect_labels(t: &AstNode, out: &mut Vec<String>) {
    out.push(t.label.clone());
    for c in &t.children {
        collect_labels(c, out);
    }
}

fn serialize(t: &AstNode) -> String {
    let mut s = String::new();
    fn go(t: &AstNode, s: &mut String) {
        s.push('(');
        s.push_str(&t.label);
        for c in &t.children {
            go(c, s);
        }
        s.push(')');
    }
    go(t, &mut s);
    s
}

fn neighbors(t: &AstNode, alphabet: &[String]) -> Vec<AstNode> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut paths = Vec::new();
    collect_paths(t, &mut Vec::new(), &mut paths);
    for path in &paths {
        // renames
        let current = t.get(path).unwrap().label.clone();
        for label in alphabet {
            if *label != current {
                let mut n = t.clone();
                n.get_mut(path).unwrap().label = label.clone();
                push_unique(n, &mut out, &mut seen);
            }
        }
        // delete (non-root)
        if let Some((&last, parent)) = path.split_last() {
            let mut n = t.clone();
            let p = n.get_mut(parent).unwrap();
            let removed = p.children.remove(last);
            for (k, c) in removed.children.into_iter().enumerate() {
                p.children.insert(last + k, c);
            }
            push_unique(n, &mut out, &mut seen);
        }
        let arity = t.get(path).unwrap().children.len();
        // inserts with every span
        for index in 0..=arity {
            for take in 0..=arity - index {
                for label in alphabet {
                    let mut n = t.clone();
                    let p = n.get_mut(path).unwrap();
                    let absorbed: Vec<AstNode> = p.children.drain(index..index + take).collect();
                    p.children
                        .insert(index, AstNode { label: label.clone(), children: absorbed });
                    push_unique(n, &mut out, &mut seen);
                }
            }
        }
        // adjacent swaps
        for i in 0..arity.saturating_sub(1) {
            let mut n = t.clone();
            n.get_mut(path).unwrap().children.swap(i, i + 1);
            push_unique(n, &mut out, &mut seen);
        }
    }
    out
}

fn push_unique(n: AstNode, out: &mut Vec<AstNode>, seen: &mut HashSet<String>) {
    if seen.insert(serialize(&n)) {
        out.push(n);
    }
}

fn collect_paths(node: &AstNode, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(path.clone());
    for (i, child) in node.children.iter().enumerate() {
        path.push(i);
        collect_paths(child, path, out);
        path.pop();
    }
}
