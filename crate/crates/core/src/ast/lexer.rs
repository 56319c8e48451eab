//! Tokenizer for the method subset. Also the token stream the grammar module
//! parses against, so the two stay in sync by construction.

use super::AstError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TokenKind {
    Ident(String),
    Keyword(String),
    Int(String),
    Long(String),
    Float(String),
    Double(String),
    Char(String),
    Str(String),
    /// Punctuation and operators, by exact spelling.
    Punct(String),
}

impl TokenKind {
    /// The token as it appears in source text.
    pub fn text(&self) -> String {
        match self {
            TokenKind::Ident(s) | TokenKind::Keyword(s) | TokenKind::Punct(s) => s.clone(),
            TokenKind::Int(s) => s.clone(),
            TokenKind::Long(s) => format!("{s}L"),
            TokenKind::Float(s) => format!("{s}f"),
            TokenKind::Double(s) => s.clone(),
            TokenKind::Char(s) => format!("'{s}'"),
            TokenKind::Str(s) => format!("\"{s}\""),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: u32,
    pub col: u32,
}

pub const KEYWORDS: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "false", "final", "finally",
    "float", "for", "goto", "if", "implements", "import", "instanceof", "int", "interface",
    "long", "native", "new", "null", "package", "private", "protected", "public", "return",
    "short", "static", "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
    "transient", "true", "try", "void", "volatile", "while",
];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.binary_search(&word).is_ok()
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek2(&self) -> Option<u8> {
        self.src.get(self.pos + 1).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn err(&self, message: impl Into<String>) -> AstError {
        AstError::Syntax { line: self.line, col: self.col, message: message.into() }
    }
}

pub fn lex(source: &str) -> Result<Vec<Token>, AstError> {
    let mut cur = Cursor { src: source.as_bytes(), pos: 0, line: 1, col: 1 };
    let mut out = Vec::new();
    loop {
        // skip whitespace and comments
        loop {
            match cur.peek() {
                Some(c) if c.is_ascii_whitespace() => {
                    cur.bump();
                }
                Some(b'/') if cur.peek2() == Some(b'/') => {
                    while let Some(c) = cur.peek() {
                        if c == b'\n' {
                            break;
                        }
                        cur.bump();
                    }
                }
                Some(b'/') if cur.peek2() == Some(b'*') => {
                    cur.bump();
                    cur.bump();
                    loop {
                        match cur.peek() {
                            None => return Err(cur.err("unterminated block comment")),
                            Some(b'*') if cur.peek2() == Some(b'/') => {
                                cur.bump();
                                cur.bump();
                                break;
                            }
                            _ => {
                                cur.bump();
                            }
                        }
                    }
                }
                _ => break,
            }
        }
        let (line, col) = (cur.line, cur.col);
        let Some(c) = cur.peek() else { break };
        let kind = match c {
            b'a'..=b'z' | b'A'..=b'Z' | b'_' | b'$' => {
                let mut word = String::new();
                while let Some(c) = cur.peek() {
                    if c.is_ascii_alphanumeric() || c == b'_' || c == b'$' {
                        word.push(c as char);
                        cur.bump();
                    } else {
                        break;
                    }
                }
                if is_keyword(&word) {
                    TokenKind::Keyword(word)
                } else {
                    TokenKind::Ident(word)
                }
            }
            b'0'..=b'9' => lex_number(&mut cur)?,
            b'"' => {
                cur.bump();
                let mut s = String::new();
                loop {
                    match cur.peek() {
                        None | Some(b'\n') => return Err(cur.err("unterminated string literal")),
                        Some(b'"') => {
                            cur.bump();
                            break;
                        }
                        Some(b'\\') => {
                            // keep escapes verbatim
                            s.push(cur.bump().unwrap() as char);
                            if let Some(c) = cur.bump() {
                                s.push(c as char);
                            }
                        }
                        Some(c) => {
                            s.push(c as char);
                            cur.bump();
                        }
                    }
                }
                TokenKind::Str(s)
            }
            b'\'' => {
                cur.bump();
                let mut s = String::new();
                loop {
                    match cur.peek() {
                        None | Some(b'\n') => return Err(cur.err("unterminated char literal")),
                        Some(b'\'') => {
                            cur.bump();
                            break;
                        }
                        Some(b'\\') => {
                            s.push(cur.bump().unwrap() as char);
                            if let Some(c) = cur.bump() {
                                s.push(c as char);
                            }
                        }
                        Some(c) => {
                            s.push(c as char);
                            cur.bump();
                        }
                    }
                }
                TokenKind::Char(s)
            }
            _ => {
                let two: Option<String> = cur.peek2().map(|d| {
                    let mut s = String::new();
                    s.push(c as char);
                    s.push(d as char);
                    s
                });
                match two.as_deref() {
                    Some(op @ ("==" | "!=" | "<=" | ">=" | "&&" | "||" | "++" | "--")) => {
                        let op = op.to_string();
                        cur.bump();
                        cur.bump();
                        TokenKind::Punct(op)
                    }
                    _ => match c {
                        b'(' | b')' | b'{' | b'}' | b'[' | b']' | b';' | b',' | b'.' | b'='
                        | b'<' | b'>' | b'+' | b'-' | b'*' | b'/' | b'%' | b'!' => {
                            cur.bump();
                            TokenKind::Punct((c as char).to_string())
                        }
                        other => {
                            return Err(cur.err(format!("unexpected character {:?}", other as char)))
                        }
                    },
                }
            }
        };
        out.push(Token { kind, line, col });
    }
    Ok(out)
}

fn lex_number(cur: &mut Cursor<'_>) -> Result<TokenKind, AstError> {
    let mut digits = String::new();
    while let Some(c) = cur.peek() {
        if c.is_ascii_digit() {
            digits.push(c as char);
            cur.bump();
        } else {
            break;
        }
    }
    let mut is_double = false;
    if cur.peek() == Some(b'.') && cur.peek2().map(|c| c.is_ascii_digit()).unwrap_or(false) {
        is_double = true;
        digits.push('.');
        cur.bump();
        while let Some(c) = cur.peek() {
            if c.is_ascii_digit() {
                digits.push(c as char);
                cur.bump();
            } else {
                break;
            }
        }
    }
    match cur.peek() {
        Some(b'l') | Some(b'L') if !is_double => {
            cur.bump();
            Ok(TokenKind::Long(digits))
        }
        Some(b'f') | Some(b'F') => {
            cur.bump();
            Ok(TokenKind::Float(digits))
        }
        Some(b'd') | Some(b'D') => {
            cur.bump();
            if !digits.contains('.') {
                digits.push_str(".0");
            }
            Ok(TokenKind::Double(digits))
        }
        _ if is_double => Ok(TokenKind::Double(digits)),
        _ => Ok(TokenKind::Int(digits)),
    }
}
