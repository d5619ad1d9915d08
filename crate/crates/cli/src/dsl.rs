//! The group expression language.
//!
//! ```text
//! expr := IDENT "(" [expr ("," expr)*] ")" | INT | IDENT
//! ```

use std::fmt;

use thiserror::Error;

pub const MAX_INPUT: usize = 4096;

/// 1-based line and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// Byte range in the source plus the position of its first character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub pos: Pos,
}

#[derive(Debug, Clone)]
pub enum ExprKind {
    Call(String, Vec<Expr>),
    Int(u64),
    Symbol(String),
}

#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

/// Structural equality; spans are ignored.
impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        match (&self.kind, &other.kind) {
            (ExprKind::Call(a, x), ExprKind::Call(b, y)) => a == b && x == y,
            (ExprKind::Int(a), ExprKind::Int(b)) => a == b,
            (ExprKind::Symbol(a), ExprKind::Symbol(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Expr {}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Int(n) => write!(f, "{n}"),
            ExprKind::Symbol(s) => write!(f, "{s}"),
            ExprKind::Call(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Canonical text of an expression.
pub fn render(e: &Expr) -> String {
    e.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pos}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub pos: Pos,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    Open,
    Close,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Open => "\"(\"".into(),
            Tok::Close => "\")\"".into(),
            Tok::Comma => "\",\"".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    at: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.src[self.at..].chars().next()?;
        self.at += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<char> {
        self.src[self.at..].chars().next()
    }

    fn next(&mut self) -> Result<(Tok, Span), ParseError> {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
        let (start, pos) = (self.at, self.pos());
        let tok = match self.peek() {
            None => Tok::End,
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.bump();
                }
                Tok::Ident(self.src[start..self.at].to_string())
            }
            Some(c) if c.is_ascii_digit() => {
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.bump();
                }
                let text = &self.src[start..self.at];
                Tok::Int(text.parse().map_err(|_| ParseError {
                    pos,
                    expected: vec!["an integer below 2^64".into()],
                    found: format!("`{text}`"),
                })?)
            }
            Some(c) => {
                self.bump();
                match c {
                    '(' => Tok::Open,
                    ')' => Tok::Close,
                    ',' => Tok::Comma,
                    _ => {
                        return Err(ParseError {
                            pos,
                            expected: vec!["an expression".into()],
                            found: format!("`{c}`"),
                        })
                    }
                }
            }
        };
        Ok((
            tok,
            Span {
                start,
                end: self.at,
                pos,
            },
        ))
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    tok: Tok,
    span: Span,
}

impl<'a> Parser<'a> {
    fn advance(&mut self) -> Result<(), ParseError> {
        let (t, s) = self.lex.next()?;
        self.tok = t;
        self.span = s;
        Ok(())
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.span.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.tok.describe(),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let span = self.span;
        match self.tok.clone() {
            Tok::Int(n) => {
                self.advance()?;
                Ok(Expr {
                    kind: ExprKind::Int(n),
                    span,
                })
            }
            Tok::Ident(name) => {
                self.advance()?;
                if self.tok != Tok::Open {
                    return Ok(Expr {
                        kind: ExprKind::Symbol(name),
                        span,
                    });
                }
                self.advance()?;
                let mut args = Vec::new();
                if self.tok != Tok::Close {
                    loop {
                        args.push(self.expr()?);
                        match self.tok {
                            Tok::Comma => self.advance()?,
                            Tok::Close => break,
                            _ => return self.fail(&["\")\"", "\",\""]),
                        }
                    }
                }
                let end = self.span.end;
                self.advance()?;
                Ok(Expr {
                    kind: ExprKind::Call(name, args),
                    span: Span { end, ..span },
                })
            }
            _ => self.fail(&["identifier", "integer"]),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    if src.len() > MAX_INPUT {
        return Err(ParseError {
            pos: Pos { line: 1, col: 1 },
            expected: vec![format!("at most {MAX_INPUT} bytes of input")],
            found: format!("{} bytes", src.len()),
        });
    }
    let mut lex = Lexer {
        src,
        at: 0,
        line: 1,
        col: 1,
    };
    let (tok, span) = lex.next()?;
    let mut p = Parser { lex, tok, span };
    let e = p.expr()?;
    if p.tok != Tok::End {
        return p.fail(&["end of input"]);
    }
    Ok(e)
}
