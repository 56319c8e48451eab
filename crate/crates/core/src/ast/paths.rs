//! Positional addressing of body statements and the subset view it induces.
//!
//! Control statements contribute their own path (the "shell": structure plus
//! predicates) and each nested body element contributes its own path,
//! recursively. A subset may keep body elements without their enclosing
//! shell, or a shell without its body elements; `restrict` splices orphaned
//! elements into the parent level and gives kept shells empty blocks.

use super::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Sequence of child indices from the body root into nested control bodies.
/// A control statement's nested bodies form one flattened index space in
/// source order (then-body then else-body; try, catch, finally).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StatementPath(pub Vec<usize>);

impl StatementPath {
    pub fn root(i: usize) -> StatementPath {
        StatementPath(vec![i])
    }

    pub fn child(&self, i: usize) -> StatementPath {
        let mut v = self.0.clone();
        v.push(i);
        StatementPath(v)
    }

    pub fn is_prefix_of(&self, other: &StatementPath) -> bool {
        other.0.len() > self.0.len() && other.0[..self.0.len()] == self.0[..]
    }
}

/// An ordered set of statement paths over one method.
pub type StatementSet = BTreeSet<StatementPath>;

/// All statement paths of a method, shells and nested elements alike.
pub fn statement_universe(method: &MethodUnit) -> StatementSet {
    let mut out = StatementSet::new();
    collect_paths(&method.body, &StatementPath(Vec::new()), 0, &mut out);
    out
}

fn collect_paths(body: &[Stmt], base: &StatementPath, offset: usize, out: &mut StatementSet) {
    for (j, stmt) in body.iter().enumerate() {
        let path = base.child(offset + j);
        let mut flat = 0usize;
        for sub in stmt.child_bodies() {
            collect_paths(sub, &path, flat, out);
            flat += sub.len();
        }
        out.insert(path);
    }
}

/// Fetch the statement a path addresses.
pub fn get_stmt<'a>(method: &'a MethodUnit, path: &StatementPath) -> Option<&'a Stmt> {
    let (first, rest) = path.0.split_first()?;
    let mut stmt = method.body.get(*first)?;
    for &i in rest {
        let mut flat: Vec<&Stmt> = Vec::new();
        for sub in stmt.child_bodies() {
            flat.extend(sub.iter());
        }
        stmt = flat.get(i).copied()?;
    }
    Some(stmt)
}

/// Keep exactly the addressed statements. Kept shells whose elements are all
/// dropped get empty blocks; dropped shells with kept elements have those
/// elements spliced into the parent level, in order.
pub fn restrict(method: &MethodUnit, keep: &StatementSet) -> Result<MethodUnit, AstError> {
    restrict_with_map(method, keep).map(|(m, _)| m)
}

/// As [`restrict`], also returning for every kept path the path its
/// statement occupies in the restricted view, ordered by view position.
pub fn restrict_with_map(
    method: &MethodUnit,
    keep: &StatementSet,
) -> Result<(MethodUnit, Vec<(StatementPath, StatementPath)>), AstError> {
    let universe = statement_universe(method);
    if let Some(bad) = keep.iter().find(|p| !universe.contains(*p)) {
        return Err(AstError::Path { path: bad.0.clone() });
    }
    let mut order = Vec::new();
    let body = build(&method.body, &StatementPath(Vec::new()), 0, keep, &mut order);
    let view = MethodUnit { header: method.header.clone(), body };
    let view_paths: Vec<StatementPath> = statement_universe(&view).into_iter().collect();
    debug_assert_eq!(order.len(), view_paths.len());
    let map = order.into_iter().zip(view_paths).collect();
    Ok((view, map))
}

// Builds the restricted statement list for one body. `order` receives the
// kept origin paths in pre-order of the produced view, which matches the
// sorted order of the view's own statement paths.
fn build(
    body: &[Stmt],
    base: &StatementPath,
    offset: usize,
    keep: &StatementSet,
    order: &mut Vec<StatementPath>,
) -> Vec<Stmt> {
    let mut out = Vec::new();
    for (j, stmt) in body.iter().enumerate() {
        let path = base.child(offset + j);
        if stmt.is_control() {
            if keep.contains(&path) {
                order.push(path.clone());
                out.push(rebuild_control(stmt, &path, keep, order));
            } else {
                let mut flat = 0usize;
                for sub in stmt.child_bodies() {
                    out.extend(build(sub, &path, flat, keep, order));
                    flat += sub.len();
                }
            }
        } else if keep.contains(&path) {
            order.push(path.clone());
            out.push(stmt.clone());
        }
    }
    out
}

fn rebuild_control(
    stmt: &Stmt,
    path: &StatementPath,
    keep: &StatementSet,
    order: &mut Vec<StatementPath>,
) -> Stmt {
    let bodies = stmt.child_bodies();
    let mut flat = 0usize;
    let mut rebuilt: Vec<Vec<Stmt>> = Vec::with_capacity(bodies.len());
    for sub in &bodies {
        rebuilt.push(build(sub, path, flat, keep, order));
        flat += sub.len();
    }
    let mut parts = rebuilt.into_iter();
    match stmt {
        Stmt::If { cond, else_body, .. } => Stmt::If {
            cond: cond.clone(),
            then_body: parts.next().unwrap(),
            else_body: else_body.as_ref().map(|_| parts.next().unwrap()),
        },
        Stmt::While { cond, .. } => Stmt::While { cond: cond.clone(), body: parts.next().unwrap() },
        Stmt::For { init, cond, update, .. } => Stmt::For {
            init: init.clone(),
            cond: cond.clone(),
            update: update.clone(),
            body: parts.next().unwrap(),
        },
        Stmt::TryCatch { catch_param, finally_body, .. } => Stmt::TryCatch {
            try_body: parts.next().unwrap(),
            catch_param: catch_param.clone(),
            catch_body: parts.next().unwrap(),
            finally_body: finally_body.as_ref().map(|_| parts.next().unwrap()),
        },
        _ => unreachable!("rebuild_control on non-control statement"),
    }
}
