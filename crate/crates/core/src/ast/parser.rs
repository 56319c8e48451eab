//! Recursive-descent parser for standalone method declarations.

use super::lexer::{lex, Token, TokenKind};
use super::*;

/// Parse a single method declaration. The source only has to be
/// syntactically valid; nothing needs to resolve or compile.
pub fn parse_method(source: &str) -> Result<MethodUnit, AstError> {
    let tokens = lex(source)?;
    let mut p = Parser { tokens, pos: 0 };
    let method = p.method()?;
    p.expect_eof()?;
    Ok(method)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    fn peek_at(&self, off: usize) -> Option<&TokenKind> {
        self.tokens.get(self.pos + off).map(|t| &t.kind)
    }

    fn bump(&mut self) -> Option<TokenKind> {
        let t = self.tokens.get(self.pos).map(|t| t.kind.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, message: impl Into<String>) -> AstError {
        match self.tokens.get(self.pos.min(self.tokens.len().saturating_sub(1))) {
            Some(t) => AstError::Syntax { line: t.line, col: t.col, message: message.into() },
            None => AstError::Syntax { line: 1, col: 1, message: message.into() },
        }
    }

    fn expect_punct(&mut self, p: &str) -> Result<(), AstError> {
        match self.peek() {
            Some(TokenKind::Punct(s)) if s == p => {
                self.bump();
                Ok(())
            }
            other => Err(self.err_here(format!("expected `{p}`, found {other:?}"))),
        }
    }

    fn expect_keyword(&mut self, k: &str) -> Result<(), AstError> {
        match self.peek() {
            Some(TokenKind::Keyword(s)) if s == k => {
                self.bump();
                Ok(())
            }
            other => Err(self.err_here(format!("expected `{k}`, found {other:?}"))),
        }
    }

    fn expect_ident(&mut self) -> Result<String, AstError> {
        match self.peek() {
            Some(TokenKind::Ident(s)) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            other => Err(self.err_here(format!("expected identifier, found {other:?}"))),
        }
    }

    fn at_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Some(TokenKind::Punct(s)) if s == p)
    }

    fn at_keyword(&self, k: &str) -> bool {
        matches!(self.peek(), Some(TokenKind::Keyword(s)) if s == k)
    }

    fn expect_eof(&self) -> Result<(), AstError> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            Err(self.err_here("trailing tokens after method"))
        }
    }

    fn method(&mut self) -> Result<MethodUnit, AstError> {
        let mut modifiers = Vec::new();
        loop {
            let m = match self.peek() {
                Some(TokenKind::Keyword(k)) => match k.as_str() {
                    "public" => Modifier::Public,
                    "protected" => Modifier::Protected,
                    "private" => Modifier::Private,
                    "static" => Modifier::Static,
                    _ => break,
                },
                _ => break,
            };
            self.bump();
            if !modifiers.contains(&m) {
                modifiers.push(m);
            }
        }
        modifiers.sort();
        let result_type = self.type_name()?;
        let name = self.expect_ident()?;
        self.expect_punct("(")?;
        let mut params = Vec::new();
        if !self.at_punct(")") {
            loop {
                let ty = self.type_name()?;
                let pname = self.expect_ident()?;
                if params.iter().any(|p: &Param| p.name == pname) {
                    return Err(self.err_here(format!("duplicate parameter name `{pname}`")));
                }
                params.push(Param { ty, name: pname });
                if self.at_punct(",") {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect_punct(")")?;
        let mut throws = Vec::new();
        if self.at_keyword("throws") {
            self.bump();
            loop {
                throws.push(self.type_name()?);
                if self.at_punct(",") {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        let body = self.block()?;
        Ok(MethodUnit {
            header: MethodHeader { modifiers, result_type, name, params, throws },
            body,
        })
    }

    fn type_name(&mut self) -> Result<TypeName, AstError> {
        const PRIMITIVES: &[&str] =
            &["boolean", "byte", "short", "int", "long", "char", "float", "double", "void"];
        match self.peek() {
            Some(TokenKind::Keyword(k)) if PRIMITIVES.contains(&k.as_str()) => {
                let k = k.clone();
                self.bump();
                Ok(TypeName(k))
            }
            Some(TokenKind::Ident(_)) => {
                let mut parts = vec![self.expect_ident()?];
                while self.at_punct(".") && matches!(self.peek_at(1), Some(TokenKind::Ident(_))) {
                    self.bump();
                    parts.push(self.expect_ident()?);
                }
                Ok(TypeName(parts.join(".")))
            }
            other => Err(self.err_here(format!("expected type, found {other:?}"))),
        }
    }

    fn block(&mut self) -> Result<Vec<Stmt>, AstError> {
        self.expect_punct("{")?;
        let mut body = Vec::new();
        while !self.at_punct("}") {
            if self.peek().is_none() {
                return Err(self.err_here("unterminated block"));
            }
            body.push(self.statement()?);
        }
        self.expect_punct("}")?;
        Ok(body)
    }

    fn statement(&mut self) -> Result<Stmt, AstError> {
        match self.peek() {
            Some(TokenKind::Punct(p)) if p == ";" => {
                self.bump();
                Ok(Stmt::Empty)
            }
            Some(TokenKind::Keyword(k)) => match k.as_str() {
                "return" => {
                    self.bump();
                    if self.at_punct(";") {
                        self.bump();
                        Ok(Stmt::Return(None))
                    } else {
                        let e = self.expression()?;
                        self.expect_punct(";")?;
                        Ok(Stmt::Return(Some(e)))
                    }
                }
                "if" => {
                    self.bump();
                    self.expect_punct("(")?;
                    let cond = self.expression()?;
                    self.expect_punct(")")?;
                    let then_body = self.block()?;
                    let else_body = if self.at_keyword("else") {
                        self.bump();
                        Some(self.block()?)
                    } else {
                        None
                    };
                    Ok(Stmt::If { cond, then_body, else_body })
                }
                "while" => {
                    self.bump();
                    self.expect_punct("(")?;
                    let cond = self.expression()?;
                    self.expect_punct(")")?;
                    let body = self.block()?;
                    Ok(Stmt::While { cond, body })
                }
                "for" => {
                    self.bump();
                    self.expect_punct("(")?;
                    let init = if self.at_punct(";") {
                        None
                    } else {
                        Some(Box::new(self.for_init()?))
                    };
                    self.expect_punct(";")?;
                    let cond = if self.at_punct(";") { None } else { Some(self.expression()?) };
                    self.expect_punct(";")?;
                    let update = if self.at_punct(")") { None } else { Some(self.expression()?) };
                    self.expect_punct(")")?;
                    let body = self.block()?;
                    Ok(Stmt::For { init, cond, update, body })
                }
                "try" => {
                    self.bump();
                    let try_body = self.block()?;
                    self.expect_keyword("catch")?;
                    self.expect_punct("(")?;
                    let ty = self.type_name()?;
                    let name = self.expect_ident()?;
                    self.expect_punct(")")?;
                    let catch_body = self.block()?;
                    let finally_body = if self.at_keyword("finally") {
                        self.bump();
                        Some(self.block()?)
                    } else {
                        None
                    };
                    Ok(Stmt::TryCatch {
                        try_body,
                        catch_param: Param { ty, name },
                        catch_body,
                        finally_body,
                    })
                }
                _ if self.starts_decl() => self.decl_statement(),
                _ => {
                    let e = self.expression()?;
                    self.expect_punct(";")?;
                    Ok(Stmt::ExprStmt(e))
                }
            },
            _ if self.starts_decl() => self.decl_statement(),
            _ => {
                let e = self.expression()?;
                self.expect_punct(";")?;
                Ok(Stmt::ExprStmt(e))
            }
        }
    }

    /// Lookahead: `Type name ...` where Type is a primitive keyword or a
    /// dotted identifier chain followed by an identifier.
    fn starts_decl(&self) -> bool {
        const PRIMITIVES: &[&str] =
            &["boolean", "byte", "short", "int", "long", "char", "float", "double"];
        match self.peek() {
            Some(TokenKind::Keyword(k)) => PRIMITIVES.contains(&k.as_str()),
            Some(TokenKind::Ident(_)) => {
                // scan over `.ident` repeats, then require an identifier
                let mut off = 1;
                loop {
                    match (self.peek_at(off), self.peek_at(off + 1)) {
                        (Some(TokenKind::Punct(p)), Some(TokenKind::Ident(_))) if p == "." => {
                            off += 2;
                        }
                        _ => break,
                    }
                }
                matches!(self.peek_at(off), Some(TokenKind::Ident(_)))
            }
            _ => false,
        }
    }

    fn decl_statement(&mut self) -> Result<Stmt, AstError> {
        let (ty, name, init) = self.decl_parts()?;
        self.expect_punct(";")?;
        Ok(Stmt::LocalVarDecl { ty, name, init })
    }

    fn decl_parts(&mut self) -> Result<(TypeName, String, Option<Expr>), AstError> {
        let ty = self.type_name()?;
        let name = self.expect_ident()?;
        let init = if self.at_punct("=") {
            self.bump();
            Some(self.expression()?)
        } else {
            None
        };
        Ok((ty, name, init))
    }

    fn for_init(&mut self) -> Result<Stmt, AstError> {
        if self.starts_decl() {
            let (ty, name, init) = self.decl_parts()?;
            Ok(Stmt::LocalVarDecl { ty, name, init })
        } else {
            Ok(Stmt::ExprStmt(self.expression()?))
        }
    }

    fn expression(&mut self) -> Result<Expr, AstError> {
        let lhs = self.or_expr()?;
        if self.at_punct("=") {
            match lhs {
                Expr::Identifier(_)
                | Expr::Qualified(_)
                | Expr::ArrayIndex { .. }
                | Expr::FieldAccess { .. } => {}
                _ => return Err(self.err_here("invalid assignment target")),
            }
            self.bump();
            let value = self.expression()?;
            return Ok(Expr::Assignment { target: Box::new(lhs), value: Box::new(value) });
        }
        Ok(lhs)
    }

    fn or_expr(&mut self) -> Result<Expr, AstError> {
        let mut lhs = self.and_expr()?;
        while self.at_punct("||") {
            self.bump();
            let rhs = self.and_expr()?;
            lhs = Expr::Binary { op: BinOp::Or, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
        Ok(lhs)
    }

    fn and_expr(&mut self) -> Result<Expr, AstError> {
        let mut lhs = self.equality_expr()?;
        while self.at_punct("&&") {
            self.bump();
            let rhs = self.equality_expr()?;
            lhs = Expr::Binary { op: BinOp::And, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
        Ok(lhs)
    }

    fn equality_expr(&mut self) -> Result<Expr, AstError> {
        let mut lhs = self.relational_expr()?;
        loop {
            let op = if self.at_punct("==") {
                BinOp::Eq
            } else if self.at_punct("!=") {
                BinOp::Ne
            } else {
                break;
            };
            self.bump();
            let rhs = self.relational_expr()?;
            lhs = Expr::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
        Ok(lhs)
    }

    fn relational_expr(&mut self) -> Result<Expr, AstError> {
        let mut lhs = self.additive_expr()?;
        loop {
            let op = if self.at_punct("<=") {
                BinOp::Le
            } else if self.at_punct(">=") {
                BinOp::Ge
            } else if self.at_punct("<") {
                BinOp::Lt
            } else if self.at_punct(">") {
                BinOp::Gt
            } else {
                break;
            };
            self.bump();
            let rhs = self.additive_expr()?;
            lhs = Expr::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
        Ok(lhs)
    }

    fn additive_expr(&mut self) -> Result<Expr, AstError> {
        let mut lhs = self.multiplicative_expr()?;
        loop {
            let op = if self.at_punct("+") {
                BinOp::Add
            } else if self.at_punct("-") {
                BinOp::Sub
            } else {
                break;
            };
            self.bump();
            let rhs = self.multiplicative_expr()?;
            lhs = Expr::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
        Ok(lhs)
    }

    fn multiplicative_expr(&mut self) -> Result<Expr, AstError> {
        let mut lhs = self.unary_expr()?;
        loop {
            let op = if self.at_punct("*") {
                BinOp::Mul
            } else if self.at_punct("/") {
                BinOp::Div
            } else if self.at_punct("%") {
                BinOp::Rem
            } else {
                break;
            };
            self.bump();
            let rhs = self.unary_expr()?;
            lhs = Expr::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
        Ok(lhs)
    }

    fn unary_expr(&mut self) -> Result<Expr, AstError> {
        if self.at_punct("!") {
            self.bump();
            let e = self.unary_expr()?;
            return Ok(Expr::Unary { op: UnOp::Not, operand: Box::new(e) });
        }
        if self.at_punct("-") {
            self.bump();
            // fold a negated numeric literal into a signed lexeme so the
            // canonical print round-trips
            if let Some(lit) = self.try_numeric_literal()? {
                if let Expr::Literal { kind, lexeme } = lit {
                    return Ok(Expr::Literal { kind, lexeme: format!("-{lexeme}") });
                }
                unreachable!();
            }
            let e = self.unary_expr()?;
            return Ok(Expr::Unary { op: UnOp::Neg, operand: Box::new(e) });
        }
        if self.at_punct("++") || self.at_punct("--") {
            let op = if self.at_punct("++") { UnOp::PreInc } else { UnOp::PreDec };
            self.bump();
            let e = self.unary_expr()?;
            return Ok(Expr::Unary { op, operand: Box::new(e) });
        }
        self.postfix_expr()
    }

    fn try_numeric_literal(&mut self) -> Result<Option<Expr>, AstError> {
        let lit = match self.peek() {
            Some(TokenKind::Int(s)) => Some((LiteralKind::Int, s.clone())),
            Some(TokenKind::Long(s)) => Some((LiteralKind::Long, s.clone())),
            Some(TokenKind::Float(s)) => Some((LiteralKind::Float, s.clone())),
            Some(TokenKind::Double(s)) => Some((LiteralKind::Double, s.clone())),
            _ => None,
        };
        if let Some((kind, lexeme)) = lit {
            self.bump();
            return Ok(Some(Expr::Literal { kind, lexeme }));
        }
        Ok(None)
    }

    fn postfix_expr(&mut self) -> Result<Expr, AstError> {
        let mut e = self.primary()?;
        loop {
            if self.at_punct("[") {
                self.bump();
                let index = self.expression()?;
                self.expect_punct("]")?;
                e = Expr::ArrayIndex { base: Box::new(e), index: Box::new(index) };
            } else if self.at_punct(".") {
                // only reached for non-name bases; dotted names are consumed
                // inside `primary`
                self.bump();
                let field = self.expect_ident()?;
                if self.at_punct("(") {
                    return Err(self.err_here("calls on computed receivers are not supported"));
                }
                e = Expr::FieldAccess { base: Box::new(e), field };
            } else if self.at_punct("++") {
                self.bump();
                e = Expr::Unary { op: UnOp::PostInc, operand: Box::new(e) };
            } else if self.at_punct("--") {
                self.bump();
                e = Expr::Unary { op: UnOp::PostDec, operand: Box::new(e) };
            } else {
                break;
            }
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr, AstError> {
        match self.peek().cloned() {
            Some(TokenKind::Punct(p)) if p == "(" => {
                self.bump();
                let e = self.expression()?;
                self.expect_punct(")")?;
                Ok(e)
            }
            Some(TokenKind::Keyword(k)) if k == "new" => {
                self.bump();
                let ty = self.type_name()?;
                self.expect_punct("(")?;
                let args = self.arguments()?;
                Ok(Expr::New { ty, args })
            }
            Some(TokenKind::Keyword(k)) if k == "true" || k == "false" => {
                self.bump();
                Ok(Expr::Literal { kind: LiteralKind::Bool, lexeme: k })
            }
            Some(TokenKind::Keyword(k)) if k == "null" => {
                self.bump();
                // modeled as a plain identifier-like name token is wrong;
                // keep it as a literal of its own spelling
                Ok(Expr::Identifier("null".to_string()))
            }
            Some(TokenKind::Int(s)) => {
                self.bump();
                Ok(Expr::Literal { kind: LiteralKind::Int, lexeme: s })
            }
            Some(TokenKind::Long(s)) => {
                self.bump();
                Ok(Expr::Literal { kind: LiteralKind::Long, lexeme: s })
            }
            Some(TokenKind::Float(s)) => {
                self.bump();
                Ok(Expr::Literal { kind: LiteralKind::Float, lexeme: s })
            }
            Some(TokenKind::Double(s)) => {
                self.bump();
                Ok(Expr::Literal { kind: LiteralKind::Double, lexeme: s })
            }
            Some(TokenKind::Char(s)) => {
                self.bump();
                Ok(Expr::Literal { kind: LiteralKind::Char, lexeme: s })
            }
            Some(TokenKind::Str(s)) => {
                self.bump();
                Ok(Expr::Literal { kind: LiteralKind::Str, lexeme: s })
            }
            Some(TokenKind::Ident(_)) => {
                let mut parts = vec![self.expect_ident()?];
                while self.at_punct(".") && matches!(self.peek_at(1), Some(TokenKind::Ident(_))) {
                    self.bump();
                    parts.push(self.expect_ident()?);
                }
                if self.at_punct("(") {
                    self.bump();
                    let args = self.arguments()?;
                    Ok(Expr::MethodCall { callee: parts, args })
                } else if parts.len() == 1 {
                    Ok(Expr::Identifier(parts.pop().unwrap()))
                } else {
                    Ok(Expr::Qualified(parts))
                }
            }
            other => Err(self.err_here(format!("expected expression, found {other:?}"))),
        }
    }

    fn arguments(&mut self) -> Result<Vec<Expr>, AstError> {
        let mut args = Vec::new();
        if !self.at_punct(")") {
            loop {
                args.push(self.expression()?);
                if self.at_punct(",") {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect_punct(")")?;
        Ok(args)
    }
}
