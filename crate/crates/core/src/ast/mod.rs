//! Java-subset method AST: parsing, canonical printing, the statement-set
//! view of bodies, and the labeled-ordered-tree projection used by the edit
//! engine.
//!
//! The subset covers what the pipeline needs: declarations, assignments,
//! calls, returns, `if`/`else`, `while`, `for`, `try`/`catch`/`finally`, and
//! the expression forms below. Methods are parsed standalone; names never
//! need to resolve and nothing has to compile.

mod lexer;
mod parser;
mod paths;
mod printer;
mod tree;

pub use lexer::{lex, Token, TokenKind};
pub use parser::parse_method;
pub use paths::{statement_universe, restrict, restrict_with_map, StatementPath, StatementSet};
pub use tree::AstNode;

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AstError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax { line: u32, col: u32, message: String },
    #[error("path {path:?} does not address a statement")]
    Path { path: Vec<usize> },
    #[error("tree node is not a valid {expected}: {detail}")]
    Tree { expected: &'static str, detail: String },
}

impl AstError {
    pub(crate) fn tree(expected: &'static str, detail: impl Into<String>) -> Self {
        AstError::Tree { expected, detail: detail.into() }
    }
}

/// Access modifiers admitted on a method header.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Modifier {
    Public,
    Protected,
    Private,
    Static,
}

impl Modifier {
    pub fn as_str(self) -> &'static str {
        match self {
            Modifier::Public => "public",
            Modifier::Protected => "protected",
            Modifier::Private => "private",
            Modifier::Static => "static",
        }
    }
}

/// A primitive or named type. Named types may be dotted (`a.b.C`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeName(pub String);

impl fmt::Display for TypeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Param {
    pub ty: TypeName,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MethodHeader {
    pub modifiers: Vec<Modifier>,
    pub result_type: TypeName,
    pub name: String,
    pub params: Vec<Param>,
    pub throws: Vec<TypeName>,
}

/// A single parsed method: header plus an ordered statement body.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MethodUnit {
    pub header: MethodHeader,
    pub body: Vec<Stmt>,
}

impl MethodUnit {
    /// Canonical source text. Byte equality of two pretty-printed methods
    /// implies structural equality.
    pub fn pretty(&self) -> String {
        printer::print_method(self)
    }

    /// The labeled ordered tree over the whole method (header included).
    pub fn to_tree(&self) -> AstNode {
        tree::method_to_tree(self)
    }

    /// Rebuild a method from its tree form. Fails when the tree does not
    /// encode a structurally valid method.
    pub fn from_tree(node: &AstNode) -> Result<MethodUnit, AstError> {
        tree::method_from_tree(node)
    }

    /// Token count of the canonical source, the unit used by size reports.
    pub fn token_count(&self) -> usize {
        lex(&self.pretty()).map(|t| t.len()).unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LiteralKind {
    Int,
    Long,
    Float,
    Double,
    Bool,
    Char,
    Str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Rem,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
}

impl BinOp {
    pub fn as_str(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Rem => "%",
            BinOp::Eq => "==",
            BinOp::Ne => "!=",
            BinOp::Lt => "<",
            BinOp::Le => "<=",
            BinOp::Gt => ">",
            BinOp::Ge => ">=",
            BinOp::And => "&&",
            BinOp::Or => "||",
        }
    }

    pub fn from_str(s: &str) -> Option<BinOp> {
        Some(match s {
            "+" => BinOp::Add,
            "-" => BinOp::Sub,
            "*" => BinOp::Mul,
            "/" => BinOp::Div,
            "%" => BinOp::Rem,
            "==" => BinOp::Eq,
            "!=" => BinOp::Ne,
            "<" => BinOp::Lt,
            "<=" => BinOp::Le,
            ">" => BinOp::Gt,
            ">=" => BinOp::Ge,
            "&&" => BinOp::And,
            "||" => BinOp::Or,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnOp {
    Not,
    Neg,
    PreInc,
    PreDec,
    PostInc,
    PostDec,
}

impl UnOp {
    pub fn as_str(self) -> &'static str {
        match self {
            UnOp::Not => "!",
            UnOp::Neg => "-",
            UnOp::PreInc => "pre++",
            UnOp::PreDec => "pre--",
            UnOp::PostInc => "post++",
            UnOp::PostDec => "post--",
        }
    }

    pub fn from_str(s: &str) -> Option<UnOp> {
        Some(match s {
            "!" => UnOp::Not,
            "-" => UnOp::Neg,
            "pre++" => UnOp::PreInc,
            "pre--" => UnOp::PreDec,
            "post++" => UnOp::PostInc,
            "post--" => UnOp::PostDec,
            _ => return None,
        })
    }

    pub fn is_postfix(self) -> bool {
        matches!(self, UnOp::PostInc | UnOp::PostDec)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    /// A single identifier.
    Identifier(String),
    /// A dotted name `a.b.c` of two or more parts.
    Qualified(Vec<String>),
    Literal { kind: LiteralKind, lexeme: String },
    /// A call whose callee is a (possibly dotted) name.
    MethodCall { callee: Vec<String>, args: Vec<Expr> },
    Binary { op: BinOp, lhs: Box<Expr>, rhs: Box<Expr> },
    Unary { op: UnOp, operand: Box<Expr> },
    Assignment { target: Box<Expr>, value: Box<Expr> },
    ArrayIndex { base: Box<Expr>, index: Box<Expr> },
    /// Field selection on a non-name base (`f().x`); dotted names parse as
    /// `Qualified` instead.
    FieldAccess { base: Box<Expr>, field: String },
    New { ty: TypeName, args: Vec<Expr> },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Stmt {
    LocalVarDecl { ty: TypeName, name: String, init: Option<Expr> },
    ExprStmt(Expr),
    Return(Option<Expr>),
    If { cond: Expr, then_body: Vec<Stmt>, else_body: Option<Vec<Stmt>> },
    While { cond: Expr, body: Vec<Stmt> },
    For {
        init: Option<Box<Stmt>>,
        cond: Option<Expr>,
        update: Option<Expr>,
        body: Vec<Stmt>,
    },
    TryCatch {
        try_body: Vec<Stmt>,
        catch_param: Param,
        catch_body: Vec<Stmt>,
        finally_body: Option<Vec<Stmt>>,
    },
    Empty,
}

impl Stmt {
    /// Control statements own nested bodies that the statement-set view
    /// addresses independently of the statement itself.
    pub fn is_control(&self) -> bool {
        matches!(
            self,
            Stmt::If { .. } | Stmt::While { .. } | Stmt::For { .. } | Stmt::TryCatch { .. }
        )
    }

    /// The nested bodies of a control statement, flattened in source order.
    /// Non-control statements have none.
    pub fn child_bodies(&self) -> Vec<&Vec<Stmt>> {
        match self {
            Stmt::If { then_body, else_body, .. } => {
                let mut v = vec![then_body];
                if let Some(e) = else_body {
                    v.push(e);
                }
                v
            }
            Stmt::While { body, .. } => vec![body],
            Stmt::For { body, .. } => vec![body],
            Stmt::TryCatch { try_body, catch_body, finally_body, .. } => {
                let mut v = vec![try_body, catch_body];
                if let Some(f) = finally_body {
                    v.push(f);
                }
                v
            }
            _ => Vec::new(),
        }
    }

    /// The statement with nested bodies cleared. For control statements this
    /// is the "shell" (predicate and structure) the statement-set view
    /// addresses; non-control statements are returned unchanged.
    pub fn shell(&self) -> Stmt {
        match self {
            Stmt::If { cond, else_body, .. } => Stmt::If {
                cond: cond.clone(),
                then_body: Vec::new(),
                else_body: else_body.as_ref().map(|_| Vec::new()),
            },
            Stmt::While { cond, .. } => Stmt::While { cond: cond.clone(), body: Vec::new() },
            Stmt::For { init, cond, update, .. } => Stmt::For {
                init: init.clone(),
                cond: cond.clone(),
                update: update.clone(),
                body: Vec::new(),
            },
            Stmt::TryCatch { catch_param, finally_body, .. } => Stmt::TryCatch {
                try_body: Vec::new(),
                catch_param: catch_param.clone(),
                catch_body: Vec::new(),
                finally_body: finally_body.as_ref().map(|_| Vec::new()),
            },
            other => other.clone(),
        }
    }
}

#[cfg(test)]
mod tests;
