//! Canonical pretty-printer: one statement per line, braces on the same
//! line, four-space indent, minimal parentheses by precedence. Printing is a
//! pure function of the AST, so byte equality of printed text implies
//! structural equality.

use super::*;

pub fn print_method(m: &MethodUnit) -> String {
    let mut out = String::new();
    for modifier in &m.header.modifiers {
        out.push_str(modifier.as_str());
        out.push(' ');
    }
    out.push_str(&m.header.result_type.0);
    out.push(' ');
    out.push_str(&m.header.name);
    out.push('(');
    for (i, p) in m.header.params.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&p.ty.0);
        out.push(' ');
        out.push_str(&p.name);
    }
    out.push(')');
    if !m.header.throws.is_empty() {
        out.push_str(" throws ");
        for (i, t) in m.header.throws.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push_str(&t.0);
        }
    }
    out.push_str(" {\n");
    for stmt in &m.body {
        print_stmt(stmt, 1, &mut out);
    }
    out.push_str("}\n");
    out
}

fn indent(level: usize, out: &mut String) {
    for _ in 0..level {
        out.push_str("    ");
    }
}

fn print_block(body: &[Stmt], level: usize, out: &mut String) {
    out.push_str("{\n");
    for stmt in body {
        print_stmt(stmt, level + 1, out);
    }
    indent(level, out);
    out.push('}');
}

fn print_stmt(stmt: &Stmt, level: usize, out: &mut String) {
    indent(level, out);
    match stmt {
        Stmt::LocalVarDecl { ty, name, init } => {
            out.push_str(&ty.0);
            out.push(' ');
            out.push_str(name);
            if let Some(e) = init {
                out.push_str(" = ");
                print_expr(e, 0, out);
            }
            out.push_str(";\n");
        }
        Stmt::ExprStmt(e) => {
            print_expr(e, 0, out);
            out.push_str(";\n");
        }
        Stmt::Return(e) => {
            out.push_str("return");
            if let Some(e) = e {
                out.push(' ');
                print_expr(e, 0, out);
            }
            out.push_str(";\n");
        }
        Stmt::If { cond, then_body, else_body } => {
            out.push_str("if (");
            print_expr(cond, 0, out);
            out.push_str(") ");
            print_block(then_body, level, out);
            if let Some(else_body) = else_body {
                out.push_str(" else ");
                print_block(else_body, level, out);
            }
            out.push('\n');
        }
        Stmt::While { cond, body } => {
            out.push_str("while (");
            print_expr(cond, 0, out);
            out.push_str(") ");
            print_block(body, level, out);
            out.push('\n');
        }
        Stmt::For { init, cond, update, body } => {
            out.push_str("for (");
            if let Some(init) = init {
                match init.as_ref() {
                    Stmt::LocalVarDecl { ty, name, init } => {
                        out.push_str(&ty.0);
                        out.push(' ');
                        out.push_str(name);
                        if let Some(e) = init {
                            out.push_str(" = ");
                            print_expr(e, 0, out);
                        }
                    }
                    Stmt::ExprStmt(e) => print_expr(e, 0, out),
                    other => panic!("unprintable for-init statement: {other:?}"),
                }
            }
            out.push_str("; ");
            if let Some(cond) = cond {
                print_expr(cond, 0, out);
            }
            out.push_str("; ");
            if let Some(update) = update {
                print_expr(update, 0, out);
            }
            out.push_str(") ");
            print_block(body, level, out);
            out.push('\n');
        }
        Stmt::TryCatch { try_body, catch_param, catch_body, finally_body } => {
            out.push_str("try ");
            print_block(try_body, level, out);
            out.push_str(" catch (");
            out.push_str(&catch_param.ty.0);
            out.push(' ');
            out.push_str(&catch_param.name);
            out.push_str(") ");
            print_block(catch_body, level, out);
            if let Some(finally_body) = finally_body {
                out.push_str(" finally ");
                print_block(finally_body, level, out);
            }
            out.push('\n');
        }
        Stmt::Empty => out.push_str(";\n"),
    }
}

/// Binding strength used to decide where parentheses are required.
fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Assignment { .. } => 1,
        Expr::Binary { op, .. } => match op {
            BinOp::Or => 2,
            BinOp::And => 3,
            BinOp::Eq | BinOp::Ne => 4,
            BinOp::Lt | BinOp::Le | BinOp::Gt | BinOp::Ge => 5,
            BinOp::Add | BinOp::Sub => 6,
            BinOp::Mul | BinOp::Div | BinOp::Rem => 7,
        },
        Expr::Unary { .. } => 8,
        _ => 9,
    }
}

pub(crate) fn print_expr(e: &Expr, min_prec: u8, out: &mut String) {
    let prec = precedence(e);
    let parens = prec < min_prec;
    if parens {
        out.push('(');
    }
    match e {
        Expr::Identifier(name) => out.push_str(name),
        Expr::Qualified(parts) => out.push_str(&parts.join(".")),
        Expr::Literal { kind, lexeme } => print_literal(*kind, lexeme, out),
        Expr::MethodCall { callee, args } => {
            out.push_str(&callee.join("."));
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                print_expr(a, 0, out);
            }
            out.push(')');
        }
        Expr::Binary { op, lhs, rhs } => {
            // left-associative: the right operand needs strictly higher
            // binding to avoid parentheses
            print_expr(lhs, prec, out);
            out.push(' ');
            out.push_str(op.as_str());
            out.push(' ');
            print_expr(rhs, prec + 1, out);
        }
        Expr::Unary { op, operand } => {
            if op.is_postfix() {
                print_expr(operand, prec + 1, out);
                out.push_str(match op {
                    UnOp::PostInc => "++",
                    UnOp::PostDec => "--",
                    _ => unreachable!(),
                });
            } else {
                out.push_str(match op {
                    UnOp::Not => "!",
                    UnOp::Neg => "-",
                    UnOp::PreInc => "++",
                    UnOp::PreDec => "--",
                    _ => unreachable!(),
                });
                // nested unary always parenthesized: `-(-x)` not `--x`
                print_expr(operand, prec + 1, out);
            }
        }
        Expr::Assignment { target, value } => {
            print_expr(target, prec + 1, out);
            out.push_str(" = ");
            print_expr(value, prec, out);
        }
        Expr::ArrayIndex { base, index } => {
            print_expr(base, 9, out);
            out.push('[');
            print_expr(index, 0, out);
            out.push(']');
        }
        Expr::FieldAccess { base, field } => {
            print_expr(base, 9, out);
            out.push('.');
            out.push_str(field);
        }
        Expr::New { ty, args } => {
            out.push_str("new ");
            out.push_str(&ty.0);
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                print_expr(a, 0, out);
            }
            out.push(')');
        }
    }
    if parens {
        out.push(')');
    }
}

fn print_literal(kind: LiteralKind, lexeme: &str, out: &mut String) {
    match kind {
        LiteralKind::Int | LiteralKind::Double | LiteralKind::Bool => out.push_str(lexeme),
        LiteralKind::Long => {
            out.push_str(lexeme);
            out.push('L');
        }
        LiteralKind::Float => {
            out.push_str(lexeme);
            out.push('f');
        }
        LiteralKind::Char => {
            out.push('\'');
            out.push_str(lexeme);
            out.push('\'');
        }
        LiteralKind::Str => {
            out.push('"');
            out.push_str(lexeme);
            out.push('"');
        }
    }
}
