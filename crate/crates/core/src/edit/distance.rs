//! Unit-cost tree-edit distance over labeled ordered trees.
//!
//! Base recurrences follow the Zhang–Shasha forest decomposition (forests
//! are postorder intervals; deleting a root promotes its children). Two
//! extra candidate moves price the swap operation:
//!
//! - crossing the two rightmost trees of both forests at cost 1, and
//! - for forests with the same small number of trees, matching the trees
//!   under an arbitrary permutation at a cost of its inversion count.
//!
//! Every candidate corresponds to a realizable script, so the result is
//! always an upper bound reachable by actual operations; the search cases
//! make it exact on small trees (checked against a breadth-first edit-graph
//! oracle in the test suites).

use crate::ast::AstNode;
use std::collections::HashMap;

pub fn tree_edit_distance(a: &AstNode, b: &AstNode) -> usize {
    Dp::new(a, b, true).tree_distance()
}

/// Distance when the swap operation is not available (insert, delete,
/// rename only).
pub fn tree_edit_distance_no_swap(a: &AstNode, b: &AstNode) -> usize {
    Dp::new(a, b, false).tree_distance()
}

struct Flat {
    labels: Vec<String>,
    /// postorder index of the leftmost leaf in each node's subtree
    lml: Vec<usize>,
    /// structural hash of each subtree, for equal-forest short-circuits
    hash: Vec<u64>,
}

fn flatten(root: &AstNode) -> Flat {
    let mut flat = Flat { labels: Vec::new(), lml: Vec::new(), hash: Vec::new() };
    fn walk(node: &AstNode, flat: &mut Flat) -> (usize, u64) {
        let mut lml = usize::MAX;
        let mut h: u64 = 0xcbf29ce484222325;
        for child in &node.children {
            let (child_lml, child_hash) = walk(child, flat);
            if lml == usize::MAX {
                lml = child_lml;
            }
            h = h.wrapping_mul(0x100000001b3) ^ child_hash;
        }
        for byte in node.label.bytes() {
            h = h.wrapping_mul(0x100000001b3) ^ u64::from(byte);
        }
        let id = flat.labels.len();
        if lml == usize::MAX {
            lml = id;
        }
        flat.labels.push(node.label.clone());
        flat.lml.push(lml);
        flat.hash.push(h);
        (lml, h)
    }
    walk(root, &mut flat);
    flat
}

struct Dp {
    a: Flat,
    b: Flat,
    swaps: bool,
    memo: HashMap<(usize, usize, usize, usize), usize>,
}

const PERM_TREES: usize = 4;

impl Dp {
    fn new(a: &AstNode, b: &AstNode, swaps: bool) -> Dp {
        Dp { a: flatten(a), b: flatten(b), swaps, memo: HashMap::new() }
    }

    fn tree_distance(&mut self) -> usize {
        let (n, m) = (self.a.labels.len(), self.b.labels.len());
        self.forest(0, n, 0, m)
    }

    /// Roots of the forest [i, e), rightmost first.
    fn roots(flat: &Flat, i: usize, e: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut r = e;
        while r > i {
            let root = r - 1;
            out.push(root);
            r = flat.lml[root];
        }
        out
    }

    fn forests_equal(&self, i1: usize, e1: usize, i2: usize, e2: usize) -> bool {
        if e1 - i1 != e2 - i2 {
            return false;
        }
        let r1 = Self::roots(&self.a, i1, e1);
        let r2 = Self::roots(&self.b, i2, e2);
        r1.len() == r2.len()
            && r1.iter().zip(&r2).all(|(&x, &y)| self.a.hash[x] == self.b.hash[y])
    }

    fn subtree(&mut self, x: usize, y: usize) -> usize {
        self.forest(self.a.lml[x], x + 1, self.b.lml[y], y + 1)
    }

    fn forest(&mut self, i1: usize, e1: usize, i2: usize, e2: usize) -> usize {
        if i1 == e1 {
            return e2 - i2;
        }
        if i2 == e2 {
            return e1 - i1;
        }
        if let Some(&d) = self.memo.get(&(i1, e1, i2, e2)) {
            return d;
        }
        if self.forests_equal(i1, e1, i2, e2) {
            self.memo.insert((i1, e1, i2, e2), 0);
            return 0;
        }
        let r1 = e1 - 1;
        let r2 = e2 - 1;
        let l1 = self.a.lml[r1];
        let l2 = self.b.lml[r2];

        let mut best = self.forest(i1, e1 - 1, i2, e2) + 1; // delete r1
        best = best.min(self.forest(i1, e1, i2, e2 - 1) + 1); // insert r2

        let rename = usize::from(self.a.labels[r1] != self.b.labels[r2]);
        if l1 == i1 && l2 == i2 {
            // both forests are single trees: match roots directly
            best = best.min(self.forest(i1, e1 - 1, i2, e2 - 1) + rename);
        } else {
            let match_cost = self.forest(i1, l1, i2, l2) + self.subtree(r1, r2);
            best = best.min(match_cost);
        }

        if self.swaps {
            // cross the two rightmost trees of both forests
            if l1 > i1 && l2 > i2 {
                let p1 = l1 - 1;
                let p2 = l2 - 1;
                let left = self.forest(i1, self.a.lml[p1], i2, self.b.lml[p2]);
                let cross = left + 1 + self.subtree(p1, r2) + self.subtree(r1, p2);
                best = best.min(cross);
            }
            // small forests: align trees by any injective partial matching.
            // Unmatched trees are deleted or inserted whole; matched pairs
            // may cross, paying one swap per inversion of the matching.
            let trees1 = Self::roots(&self.a, i1, e1);
            let trees2 = Self::roots(&self.b, i2, e2);
            if trees1.len() <= PERM_TREES
                && trees2.len() <= PERM_TREES
                && trees1.len().max(trees2.len()) >= 2
            {
                // rightmost-first; reverse for left-to-right positions
                let t1: Vec<usize> = trees1.into_iter().rev().collect();
                let t2: Vec<usize> = trees2.into_iter().rev().collect();
                let mut assignment: Vec<Option<usize>> = vec![None; t1.len()];
                let mut used = vec![false; t2.len()];
                let aligned = self.align_trees(&t1, &t2, 0, &mut assignment, &mut used, best);
                best = best.min(aligned);
            }
        }

        self.memo.insert((i1, e1, i2, e2), best);
        best
    }
}

impl Dp {
    // Exhaustive search over injective partial matchings of the trees in two
    // small forests. Returns the cheapest alignment cost.
    fn align_trees(
        &mut self,
        t1: &[usize],
        t2: &[usize],
        pos: usize,
        assignment: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        bound: usize,
    ) -> usize {
        if pos == t1.len() {
            let mut cost = 0;
            let mut images: Vec<usize> = Vec::new();
            for (i, a) in assignment.iter().enumerate() {
                match a {
                    Some(j) => {
                        images.push(*j);
                        cost += self.subtree(t1[i], t2[*j]);
                    }
                    None => {
                        let x = t1[i];
                        cost += x + 1 - self.a.lml[x];
                    }
                }
                if cost >= bound {
                    return bound;
                }
            }
            for (j, u) in used.iter().enumerate() {
                if !u {
                    let y = t2[j];
                    cost += y + 1 - self.b.lml[y];
                }
            }
            cost += inversions(&images);
            return cost.min(bound);
        }
        let mut best = bound;
        // leave t1[pos] unmatched
        best = best.min(self.align_trees(t1, t2, pos + 1, assignment, used, best));
        for j in 0..t2.len() {
            if !used[j] {
                used[j] = true;
                assignment[pos] = Some(j);
                best = best.min(self.align_trees(t1, t2, pos + 1, assignment, used, best));
                assignment[pos] = None;
                used[j] = false;
            }
        }
        best
    }
}

fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::parse_method;

    fn expr_tree(src: &str) -> AstNode {
        let m = parse_method(&format!("void f() {{ x = {src}; }}")).unwrap();
        m.to_tree().get(&[1, 0, 0, 1]).unwrap().clone()
    }

    #[test]
    fn identical_trees_have_distance_zero() {
        let t = parse_method(crate::testkit::SAVE_BITMAP_SRC).unwrap().to_tree();
        assert_eq!(tree_edit_distance(&t, &t), 0);
    }

    #[test]
    fn addition_to_indexing_costs_two() {
        assert_eq!(tree_edit_distance(&expr_tree("a + b"), &expr_tree("a[b]")), 2);
        assert_eq!(tree_edit_distance(&expr_tree("a[b]"), &expr_tree("a + b")), 2);
    }

    #[test]
    fn operand_swap_costs_one() {
        assert_eq!(tree_edit_distance(&expr_tree("a + b"), &expr_tree("b + a")), 1);
        assert_eq!(
            tree_edit_distance_no_swap(&expr_tree("a + b"), &expr_tree("b + a")),
            2
        );
    }

    #[test]
    fn statement_reorder_costs_one() {
        let m1 = parse_method("void f() { first(x); second(y, z); }").unwrap();
        let m2 = parse_method("void f() { second(y, z); first(x); }").unwrap();
        assert_eq!(tree_edit_distance(&m1.to_tree(), &m2.to_tree()), 1);
    }

    #[test]
    fn rotation_of_three_statements_costs_two() {
        let m1 = parse_method("void f() { a(p); b(q); c(r); }").unwrap();
        let m2 = parse_method("void f() { c(r); a(p); b(q); }").unwrap();
        assert_eq!(tree_edit_distance(&m1.to_tree(), &m2.to_tree()), 2);
    }

    #[test]
    fn single_rename_costs_one() {
        let m1 = parse_method("void f() { log(msg); }").unwrap();
        let m2 = parse_method("void f() { log(data); }").unwrap();
        assert_eq!(tree_edit_distance(&m1.to_tree(), &m2.to_tree()), 1);
    }

    #[test]
    fn word_substitution_in_string_costs_one() {
        let m1 = parse_method("void f() { log(\"save to file succeeded\"); }").unwrap();
        let m2 = parse_method("void f() { log(\"save to file failed\"); }").unwrap();
        assert_eq!(tree_edit_distance(&m1.to_tree(), &m2.to_tree()), 1);
    }

    #[test]
    fn swap_never_hurts() {
        let pairs = [
            ("a + b", "b + a"),
            ("f(a, b, c)", "f(c, b, a)"),
            ("x[i]", "i[x]"),
        ];
        for (s1, s2) in pairs {
            let (t1, t2) = (expr_tree(s1), expr_tree(s2));
            assert!(tree_edit_distance(&t1, &t2) <= tree_edit_distance_no_swap(&t1, &t2));
        }
    }

    #[test]
    fn matches_bfs_oracle_on_random_small_pairs() {
        use crate::testkit::{bfs_distance, mutate_tree, random_tree, TreeGenConfig};
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let config = TreeGenConfig::default();
        let mut checked = 0;
        for round in 0..200 {
            let a = random_tree(&mut rng, &config);
            let b = mutate_tree(&mut rng, &a, 1 + round % 4, &config);
            if a.size() > 8 || b.size() > 8 {
                continue;
            }
            let dp = tree_edit_distance(&a, &b);
            let oracle = bfs_distance(&a, &b, 8, 2_000_000)
                .expect("oracle must terminate on small pairs");
            assert_eq!(dp, oracle, "pair {round}: {a:?} vs {b:?}");
            checked += 1;
        }
        assert!(checked > 100, "generator produced too few small pairs: {checked}");
    }

    #[test]
    fn symmetric_and_triangle_on_random_pairs() {
        use crate::testkit::{random_tree, TreeGenConfig};
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let config = TreeGenConfig { max_nodes: 10, ..TreeGenConfig::default() };
        for _ in 0..60 {
            let a = random_tree(&mut rng, &config);
            let b = random_tree(&mut rng, &config);
            let c = random_tree(&mut rng, &config);
            let ab = tree_edit_distance(&a, &b);
            assert_eq!(ab, tree_edit_distance(&b, &a));
            assert_eq!(tree_edit_distance(&a, &a), 0);
            assert!(ab <= tree_edit_distance(&a, &c) + tree_edit_distance(&c, &b));
            assert!((ab == 0) == (a == b));
        }
    }
}
