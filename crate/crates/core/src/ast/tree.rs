//! Projection of methods onto labeled ordered trees and back.
//!
//! Label scheme (terminals carry their lexeme after a colon):
//!
//! - `method` → `[header, block]`
//! - `header` → `[mods, type:T, name:f, params, throws]`
//! - `binop` → `[op:+, lhs, rhs]` — the operator is a separate terminal, so
//!   structure changes such as `a + b` → `a[b]` cost two edits (delete the
//!   operator, rename the node), never one.
//! - names are wrapped: `qname` → `[name:a, name:b, ...]`
//! - string literals split on single spaces: `str` → `[word:save, word:to, ...]`,
//!   which makes one-word substitutions a single rename.
//!
//! `method_from_tree` is the inverse and doubles as the structural validity
//! check for edited trees.

use super::*;
use serde::{Deserialize, Serialize};

/// A finite labeled ordered tree. Terminals have no children.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AstNode {
    pub label: String,
    pub children: Vec<AstNode>,
}

impl AstNode {
    pub fn leaf(label: impl Into<String>) -> AstNode {
        AstNode { label: label.into(), children: Vec::new() }
    }

    pub fn new(label: impl Into<String>, children: Vec<AstNode>) -> AstNode {
        AstNode { label: label.into(), children }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(AstNode::size).sum::<usize>()
    }

    pub fn get(&self, path: &[usize]) -> Option<&AstNode> {
        let mut node = self;
        for &i in path {
            node = node.children.get(i)?;
        }
        Some(node)
    }

    pub fn get_mut(&mut self, path: &[usize]) -> Option<&mut AstNode> {
        let mut node = self;
        for &i in path {
            node = node.children.get_mut(i)?;
        }
        Some(node)
    }
}

fn name_node(parts: &[String]) -> AstNode {
    AstNode::new("qname", parts.iter().map(|p| AstNode::leaf(format!("name:{p}"))).collect())
}

fn type_leaf(ty: &TypeName) -> AstNode {
    AstNode::leaf(format!("type:{}", ty.0))
}

pub fn method_to_tree(m: &MethodUnit) -> AstNode {
    let h = &m.header;
    let mods = AstNode::new(
        "mods",
        h.modifiers.iter().map(|md| AstNode::leaf(format!("mod:{}", md.as_str()))).collect(),
    );
    let params = AstNode::new(
        "params",
        h.params
            .iter()
            .map(|p| {
                AstNode::new(
                    "param",
                    vec![type_leaf(&p.ty), AstNode::leaf(format!("name:{}", p.name))],
                )
            })
            .collect(),
    );
    let throws = AstNode::new("throws", h.throws.iter().map(type_leaf).collect());
    let header = AstNode::new(
        "header",
        vec![mods, type_leaf(&h.result_type), AstNode::leaf(format!("name:{}", h.name)), params, throws],
    );
    AstNode::new("method", vec![header, block_to_tree(&m.body)])
}

pub fn block_to_tree(body: &[Stmt]) -> AstNode {
    AstNode::new("block", body.iter().map(stmt_to_tree).collect())
}

pub fn stmt_to_tree(s: &Stmt) -> AstNode {
    match s {
        Stmt::LocalVarDecl { ty, name, init } => {
            let mut children = vec![type_leaf(ty), AstNode::leaf(format!("name:{name}"))];
            if let Some(e) = init {
                children.push(expr_to_tree(e));
            }
            AstNode::new("decl", children)
        }
        Stmt::ExprStmt(e) => AstNode::new("exprstmt", vec![expr_to_tree(e)]),
        Stmt::Return(e) => {
            AstNode::new("return", e.iter().map(expr_to_tree).collect())
        }
        Stmt::If { cond, then_body, else_body } => {
            let mut children = vec![expr_to_tree(cond), block_to_tree(then_body)];
            if let Some(eb) = else_body {
                children.push(block_to_tree(eb));
            }
            AstNode::new("if", children)
        }
        Stmt::While { cond, body } => {
            AstNode::new("while", vec![expr_to_tree(cond), block_to_tree(body)])
        }
        Stmt::For { init, cond, update, body } => AstNode::new(
            "for",
            vec![
                AstNode::new("finit", init.iter().map(|s| stmt_to_tree(s)).collect()),
                AstNode::new("fcond", cond.iter().map(expr_to_tree).collect()),
                AstNode::new("fupd", update.iter().map(expr_to_tree).collect()),
                block_to_tree(body),
            ],
        ),
        Stmt::TryCatch { try_body, catch_param, catch_body, finally_body } => {
            let catch = AstNode::new(
                "catchclause",
                vec![
                    AstNode::new(
                        "param",
                        vec![
                            type_leaf(&catch_param.ty),
                            AstNode::leaf(format!("name:{}", catch_param.name)),
                        ],
                    ),
                    block_to_tree(catch_body),
                ],
            );
            let mut children = vec![block_to_tree(try_body), catch];
            if let Some(fb) = finally_body {
                children.push(AstNode::new("finally", vec![block_to_tree(fb)]));
            }
            AstNode::new("try", children)
        }
        Stmt::Empty => AstNode::leaf("empty"),
    }
}

pub fn expr_to_tree(e: &Expr) -> AstNode {
    match e {
        Expr::Identifier(name) => name_node(std::slice::from_ref(name)),
        Expr::Qualified(parts) => name_node(parts),
        Expr::Literal { kind: LiteralKind::Str, lexeme } => AstNode::new(
            "str",
            lexeme.split(' ').map(|w| AstNode::leaf(format!("word:{w}"))).collect(),
        ),
        Expr::Literal { kind, lexeme } => {
            AstNode::leaf(format!("lit:{}:{lexeme}", kind_tag(*kind)))
        }
        Expr::MethodCall { callee, args } => {
            let mut children = vec![name_node(callee)];
            children.extend(args.iter().map(expr_to_tree));
            AstNode::new("call", children)
        }
        Expr::Binary { op, lhs, rhs } => AstNode::new(
            "binop",
            vec![AstNode::leaf(format!("op:{}", op.as_str())), expr_to_tree(lhs), expr_to_tree(rhs)],
        ),
        Expr::Unary { op, operand } => AstNode::new(
            "unary",
            vec![AstNode::leaf(format!("uop:{}", op.as_str())), expr_to_tree(operand)],
        ),
        Expr::Assignment { target, value } => {
            AstNode::new("assign", vec![expr_to_tree(target), expr_to_tree(value)])
        }
        Expr::ArrayIndex { base, index } => {
            AstNode::new("index", vec![expr_to_tree(base), expr_to_tree(index)])
        }
        Expr::FieldAccess { base, field } => AstNode::new(
            "field",
            vec![expr_to_tree(base), AstNode::leaf(format!("name:{field}"))],
        ),
        Expr::New { ty, args } => {
            let mut children = vec![type_leaf(ty)];
            children.extend(args.iter().map(expr_to_tree));
            AstNode::new("new", children)
        }
    }
}

fn kind_tag(kind: LiteralKind) -> &'static str {
    match kind {
        LiteralKind::Int => "int",
        LiteralKind::Long => "long",
        LiteralKind::Float => "float",
        LiteralKind::Double => "double",
        LiteralKind::Bool => "bool",
        LiteralKind::Char => "char",
        LiteralKind::Str => "str",
    }
}

fn kind_from_tag(tag: &str) -> Option<LiteralKind> {
    Some(match tag {
        "int" => LiteralKind::Int,
        "long" => LiteralKind::Long,
        "float" => LiteralKind::Float,
        "double" => LiteralKind::Double,
        "bool" => LiteralKind::Bool,
        "char" => LiteralKind::Char,
        "str" => LiteralKind::Str,
        _ => return None,
    })
}

fn strip<'a>(label: &'a str, prefix: &str) -> Option<&'a str> {
    label.strip_prefix(prefix)
}

pub fn method_from_tree(node: &AstNode) -> Result<MethodUnit, AstError> {
    if node.label != "method" || node.children.len() != 2 {
        return Err(AstError::tree("method", format!("label {}", node.label)));
    }
    let header = header_from_tree(&node.children[0])?;
    let body = block_from_tree(&node.children[1])?;
    Ok(MethodUnit { header, body })
}

fn header_from_tree(node: &AstNode) -> Result<MethodHeader, AstError> {
    if node.label != "header" || node.children.len() != 5 {
        return Err(AstError::tree("header", format!("label {}", node.label)));
    }
    let mods_node = &node.children[0];
    if mods_node.label != "mods" {
        return Err(AstError::tree("header", "missing mods"));
    }
    let mut modifiers = Vec::new();
    for c in &mods_node.children {
        let m = match strip(&c.label, "mod:") {
            Some("public") => Modifier::Public,
            Some("protected") => Modifier::Protected,
            Some("private") => Modifier::Private,
            Some("static") => Modifier::Static,
            _ => return Err(AstError::tree("modifier", c.label.clone())),
        };
        if !c.children.is_empty() {
            return Err(AstError::tree("modifier", "terminal with children"));
        }
        if !modifiers.contains(&m) {
            modifiers.push(m);
        }
    }
    modifiers.sort();
    let result_type = type_from_leaf(&node.children[1])?;
    let name = name_from_leaf(&node.children[2])?;
    let params_node = &node.children[3];
    if params_node.label != "params" {
        return Err(AstError::tree("header", "missing params"));
    }
    let mut params = Vec::new();
    for p in &params_node.children {
        let param = param_from_tree(p)?;
        if params.iter().any(|q: &Param| q.name == param.name) {
            return Err(AstError::tree("params", format!("duplicate parameter {}", param.name)));
        }
        params.push(param);
    }
    let throws_node = &node.children[4];
    if throws_node.label != "throws" {
        return Err(AstError::tree("header", "missing throws"));
    }
    let throws =
        throws_node.children.iter().map(type_from_leaf).collect::<Result<Vec<_>, _>>()?;
    if !valid_identifier(&name) {
        return Err(AstError::tree("method name", name));
    }
    Ok(MethodHeader { modifiers, result_type, name, params, throws })
}

fn param_from_tree(node: &AstNode) -> Result<Param, AstError> {
    if node.label != "param" || node.children.len() != 2 {
        return Err(AstError::tree("param", node.label.clone()));
    }
    Ok(Param { ty: type_from_leaf(&node.children[0])?, name: name_from_leaf(&node.children[1])? })
}

fn type_from_leaf(node: &AstNode) -> Result<TypeName, AstError> {
    let t = strip(&node.label, "type:")
        .ok_or_else(|| AstError::tree("type", node.label.clone()))?;
    if !node.children.is_empty() {
        return Err(AstError::tree("type", "terminal with children"));
    }
    if t.is_empty() || !t.split('.').all(valid_type_part) {
        return Err(AstError::tree("type", t.to_string()));
    }
    Ok(TypeName(t.to_string()))
}

fn valid_type_part(part: &str) -> bool {
    const PRIMITIVES: &[&str] =
        &["boolean", "byte", "short", "int", "long", "char", "float", "double", "void"];
    PRIMITIVES.contains(&part) || valid_identifier(part)
}

fn name_from_leaf(node: &AstNode) -> Result<String, AstError> {
    let n = strip(&node.label, "name:")
        .ok_or_else(|| AstError::tree("name", node.label.clone()))?;
    if !node.children.is_empty() {
        return Err(AstError::tree("name", "terminal with children"));
    }
    if n != "null" && !valid_identifier(n) {
        return Err(AstError::tree("name", n.to_string()));
    }
    Ok(n.to_string())
}

fn valid_identifier(s: &str) -> bool {
    !s.is_empty()
        && !lexer::is_keyword(s)
        && s.bytes().next().map(|c| c.is_ascii_alphabetic() || c == b'_' || c == b'$').unwrap_or(false)
        && s.bytes().all(|c| c.is_ascii_alphanumeric() || c == b'_' || c == b'$')
}

pub fn block_from_tree(node: &AstNode) -> Result<Vec<Stmt>, AstError> {
    if node.label != "block" {
        return Err(AstError::tree("block", node.label.clone()));
    }
    node.children.iter().map(stmt_from_tree).collect()
}

pub fn stmt_from_tree(node: &AstNode) -> Result<Stmt, AstError> {
    match node.label.as_str() {
        "decl" => match node.children.len() {
            2 => Ok(Stmt::LocalVarDecl {
                ty: type_from_leaf(&node.children[0])?,
                name: name_from_leaf(&node.children[1])?,
                init: None,
            }),
            3 => Ok(Stmt::LocalVarDecl {
                ty: type_from_leaf(&node.children[0])?,
                name: name_from_leaf(&node.children[1])?,
                init: Some(expr_from_tree(&node.children[2])?),
            }),
            n => Err(AstError::tree("decl", format!("{n} children"))),
        },
        "exprstmt" => {
            if node.children.len() != 1 {
                return Err(AstError::tree("exprstmt", "needs one child"));
            }
            let e = expr_from_tree(&node.children[0])?;
            if !valid_statement_expr(&e) {
                return Err(AstError::tree("exprstmt", "expression not usable as a statement"));
            }
            Ok(Stmt::ExprStmt(e))
        }
        "return" => match node.children.len() {
            0 => Ok(Stmt::Return(None)),
            1 => Ok(Stmt::Return(Some(expr_from_tree(&node.children[0])?))),
            n => Err(AstError::tree("return", format!("{n} children"))),
        },
        "if" => match node.children.len() {
            2 => Ok(Stmt::If {
                cond: expr_from_tree(&node.children[0])?,
                then_body: block_from_tree(&node.children[1])?,
                else_body: None,
            }),
            3 => Ok(Stmt::If {
                cond: expr_from_tree(&node.children[0])?,
                then_body: block_from_tree(&node.children[1])?,
                else_body: Some(block_from_tree(&node.children[2])?),
            }),
            n => Err(AstError::tree("if", format!("{n} children"))),
        },
        "while" => {
            if node.children.len() != 2 {
                return Err(AstError::tree("while", "needs cond and block"));
            }
            Ok(Stmt::While {
                cond: expr_from_tree(&node.children[0])?,
                body: block_from_tree(&node.children[1])?,
            })
        }
        "for" => {
            if node.children.len() != 4 {
                return Err(AstError::tree("for", "needs init/cond/update/block"));
            }
            let finit = &node.children[0];
            if finit.label != "finit" || finit.children.len() > 1 {
                return Err(AstError::tree("for", "bad init slot"));
            }
            let init = match finit.children.first() {
                None => None,
                Some(c) => {
                    let s = stmt_from_tree(c)?;
                    match &s {
                        Stmt::LocalVarDecl { .. } | Stmt::ExprStmt(_) => Some(Box::new(s)),
                        _ => return Err(AstError::tree("for", "init must be decl or expression")),
                    }
                }
            };
            let fcond = &node.children[1];
            if fcond.label != "fcond" || fcond.children.len() > 1 {
                return Err(AstError::tree("for", "bad cond slot"));
            }
            let cond = fcond.children.first().map(expr_from_tree).transpose()?;
            let fupd = &node.children[2];
            if fupd.label != "fupd" || fupd.children.len() > 1 {
                return Err(AstError::tree("for", "bad update slot"));
            }
            let update = fupd.children.first().map(expr_from_tree).transpose()?;
            Ok(Stmt::For { init, cond, update, body: block_from_tree(&node.children[3])? })
        }
        "try" => {
            if node.children.len() < 2 || node.children.len() > 3 {
                return Err(AstError::tree("try", "needs try and catch"));
            }
            let try_body = block_from_tree(&node.children[0])?;
            let catch = &node.children[1];
            if catch.label != "catchclause" || catch.children.len() != 2 {
                return Err(AstError::tree("try", "bad catch clause"));
            }
            let catch_param = param_from_tree(&catch.children[0])?;
            let catch_body = block_from_tree(&catch.children[1])?;
            let finally_body = match node.children.get(2) {
                None => None,
                Some(f) => {
                    if f.label != "finally" || f.children.len() != 1 {
                        return Err(AstError::tree("try", "bad finally clause"));
                    }
                    Some(block_from_tree(&f.children[0])?)
                }
            };
            Ok(Stmt::TryCatch { try_body, catch_param, catch_body, finally_body })
        }
        "empty" => {
            if !node.children.is_empty() {
                return Err(AstError::tree("empty", "terminal with children"));
            }
            Ok(Stmt::Empty)
        }
        other => Err(AstError::tree("statement", other.to_string())),
    }
}

/// Only calls, assignments, news, and inc/dec forms may stand as statements.
fn valid_statement_expr(e: &Expr) -> bool {
    matches!(
        e,
        Expr::MethodCall { .. }
            | Expr::Assignment { .. }
            | Expr::New { .. }
            | Expr::Unary {
                op: UnOp::PostInc | UnOp::PostDec | UnOp::PreInc | UnOp::PreDec,
                ..
            }
    )
}

pub fn expr_from_tree(node: &AstNode) -> Result<Expr, AstError> {
    match node.label.as_str() {
        "qname" => {
            let parts = qname_parts(node)?;
            if parts.len() == 1 {
                Ok(Expr::Identifier(parts.into_iter().next().unwrap()))
            } else {
                Ok(Expr::Qualified(parts))
            }
        }
        "str" => {
            let mut words = Vec::new();
            for c in &node.children {
                let w = strip(&c.label, "word:")
                    .ok_or_else(|| AstError::tree("str", c.label.clone()))?;
                if !c.children.is_empty() {
                    return Err(AstError::tree("str", "word with children"));
                }
                if w.contains(' ') {
                    return Err(AstError::tree("str", format!("bad word {w:?}")));
                }
                words.push(w.to_string());
            }
            let lexeme = words.join(" ");
            if !lexeme_matches_kind(LiteralKind::Str, &lexeme) {
                return Err(AstError::tree("str", lexeme));
            }
            Ok(Expr::Literal { kind: LiteralKind::Str, lexeme })
        }
        "call" => {
            if node.children.is_empty() {
                return Err(AstError::tree("call", "missing callee"));
            }
            let callee = qname_parts(&node.children[0])?;
            let args = node.children[1..]
                .iter()
                .map(expr_from_tree)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Expr::MethodCall { callee, args })
        }
        "binop" => {
            if node.children.len() != 3 {
                return Err(AstError::tree("binop", "needs op and two operands"));
            }
            let op = strip(&node.children[0].label, "op:")
                .and_then(BinOp::from_str)
                .ok_or_else(|| AstError::tree("binop", node.children[0].label.clone()))?;
            if !node.children[0].children.is_empty() {
                return Err(AstError::tree("binop", "operator with children"));
            }
            Ok(Expr::Binary {
                op,
                lhs: Box::new(expr_from_tree(&node.children[1])?),
                rhs: Box::new(expr_from_tree(&node.children[2])?),
            })
        }
        "unary" => {
            if node.children.len() != 2 {
                return Err(AstError::tree("unary", "needs op and operand"));
            }
            let op = strip(&node.children[0].label, "uop:")
                .and_then(UnOp::from_str)
                .ok_or_else(|| AstError::tree("unary", node.children[0].label.clone()))?;
            if !node.children[0].children.is_empty() {
                return Err(AstError::tree("unary", "operator with children"));
            }
            let operand = expr_from_tree(&node.children[1])?;
            if matches!(op, UnOp::PreInc | UnOp::PreDec | UnOp::PostInc | UnOp::PostDec)
                && !matches!(
                    operand,
                    Expr::Identifier(_) | Expr::Qualified(_) | Expr::ArrayIndex { .. } | Expr::FieldAccess { .. }
                )
            {
                return Err(AstError::tree("unary", "inc/dec needs an lvalue"));
            }
            Ok(Expr::Unary { op, operand: Box::new(operand) })
        }
        "assign" => {
            if node.children.len() != 2 {
                return Err(AstError::tree("assign", "needs target and value"));
            }
            let target = expr_from_tree(&node.children[0])?;
            if !matches!(
                target,
                Expr::Identifier(_) | Expr::Qualified(_) | Expr::ArrayIndex { .. } | Expr::FieldAccess { .. }
            ) {
                return Err(AstError::tree("assign", "invalid target"));
            }
            Ok(Expr::Assignment {
                target: Box::new(target),
                value: Box::new(expr_from_tree(&node.children[1])?),
            })
        }
        "index" => {
            if node.children.len() != 2 {
                return Err(AstError::tree("index", "needs base and index"));
            }
            Ok(Expr::ArrayIndex {
                base: Box::new(expr_from_tree(&node.children[0])?),
                index: Box::new(expr_from_tree(&node.children[1])?),
            })
        }
        "field" => {
            if node.children.len() != 2 {
                return Err(AstError::tree("field", "needs base and name"));
            }
            let base = expr_from_tree(&node.children[0])?;
            if matches!(base, Expr::Identifier(_) | Expr::Qualified(_)) {
                return Err(AstError::tree("field", "name bases fold into qname"));
            }
            Ok(Expr::FieldAccess {
                base: Box::new(base),
                field: name_from_leaf(&node.children[1])?,
            })
        }
        "new" => {
            if node.children.is_empty() {
                return Err(AstError::tree("new", "missing type"));
            }
            Ok(Expr::New {
                ty: type_from_leaf(&node.children[0])?,
                args: node.children[1..]
                    .iter()
                    .map(expr_from_tree)
                    .collect::<Result<Vec<_>, _>>()?,
            })
        }
        label => {
            if let Some(rest) = strip(label, "lit:") {
                if !node.children.is_empty() {
                    return Err(AstError::tree("literal", "terminal with children"));
                }
                let (tag, lexeme) = rest
                    .split_once(':')
                    .ok_or_else(|| AstError::tree("literal", label.to_string()))?;
                let kind =
                    kind_from_tag(tag).ok_or_else(|| AstError::tree("literal", tag.to_string()))?;
                if !lexeme_matches_kind(kind, lexeme) {
                    return Err(AstError::tree("literal", format!("{tag}:{lexeme}")));
                }
                return Ok(Expr::Literal { kind, lexeme: lexeme.to_string() });
            }
            Err(AstError::tree("expression", label.to_string()))
        }
    }
}

fn qname_parts(node: &AstNode) -> Result<Vec<String>, AstError> {
    if node.label != "qname" || node.children.is_empty() {
        return Err(AstError::tree("qname", node.label.clone()));
    }
    node.children.iter().map(name_from_leaf).collect()
}

/// Literal lexemes must be type-consistent with their kind.
pub fn lexeme_matches_kind(kind: LiteralKind, lexeme: &str) -> bool {
    match kind {
        LiteralKind::Int | LiteralKind::Long => {
            let digits = lexeme.strip_prefix('-').unwrap_or(lexeme);
            !digits.is_empty() && digits.bytes().all(|c| c.is_ascii_digit())
        }
        LiteralKind::Float | LiteralKind::Double => {
            let digits = lexeme.strip_prefix('-').unwrap_or(lexeme);
            let mut dots = 0;
            !digits.is_empty()
                && digits.bytes().all(|c| {
                    if c == b'.' {
                        dots += 1;
                        true
                    } else {
                        c.is_ascii_digit()
                    }
                })
                && dots <= 1
                && !digits.starts_with('.')
                && !digits.ends_with('.')
        }
        LiteralKind::Bool => lexeme == "true" || lexeme == "false",
        // the lexer is the authority on what survives a print/re-lex cycle
        LiteralKind::Char => matches!(
            lexer::lex(&format!("'{lexeme}'")).as_deref(),
            Ok([Token { kind: TokenKind::Char(s), .. }]) if s == lexeme
        ),
        LiteralKind::Str => matches!(
            lexer::lex(&format!("\"{lexeme}\"")).as_deref(),
            Ok([Token { kind: TokenKind::Str(s), .. }]) if s == lexeme
        ),
    }
}
