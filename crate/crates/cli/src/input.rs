//! Line-oriented input documents.
//!
//! ```text
//! # twisted cubic
//! p 32003
//! n 3
//! x0*x2 - x1^2, x0*x3 - x1*x2,
//! x1*x3 - x2^2
//! ```
//!
//! An optional `vars a b c d` line renames the variables. Everything after
//! the header is a comma-separated list of homogeneous generators built from
//! integers, variables, `+ - * ^` and parentheses; `*` is never implied.

use std::fmt;

use subcanon::{AlgebraError, Monomial, Poly, PolyRing};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `{0}` header")]
    MissingHeader(&'static str),
    #[error("duplicate `{0}` header")]
    DuplicateHeader(&'static str),
    #[error("expected an integer after `{0}`")]
    BadHeader(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("n = {0} is below 3")]
    DimensionTooSmall(usize),
    #[error("too many variables ({0})")]
    TooManyVariables(usize),
    #[error("`vars` lists {got} names, expected {expected}")]
    VarCount { got: usize, expected: usize },
    #[error("invalid variable name `{0}`")]
    BadName(String),
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected {0}")]
    Unexpected(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent too large")]
    ExponentTooLarge,
    #[error("generator is not homogeneous")]
    Inhomogeneous,
    #[error("no generators")]
    NoGenerators,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

/// A parsed input: the ambient ring and the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub ring: PolyRing,
    /// Whether the variable names differ from the default `x0..xn`.
    pub custom_names: bool,
    pub gens: Vec<Poly>,
    pub comment: Option<String>,
}

impl InputDocument {
    pub fn new(ring: PolyRing, gens: Vec<Poly>) -> Self {
        let custom_names = ring
            .names()
            .iter()
            .enumerate()
            .any(|(i, s)| *s != format!("x{i}"));
        InputDocument {
            ring,
            custom_names,
            gens,
            comment: None,
        }
    }

    pub fn with_comment(mut self, c: impl Into<String>) -> Self {
        self.comment = Some(c.into());
        self
    }
}

impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = &self.comment {
            for line in c.split('\n') {
                writeln!(f, "# {line}")?;
            }
        }
        writeln!(f, "p {}", self.ring.p())?;
        writeln!(f, "n {}", self.ring.n())?;
        if self.custom_names {
            writeln!(f, "vars {}", self.ring.names().join(" "))?;
        }
        let k = self.gens.len();
        for (i, g) in self.gens.iter().enumerate() {
            let sep = if i + 1 < k { "," } else { "" };
            writeln!(f, "{}{sep}", g.display(&self.ring))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("integer {v}"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, col, kind }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn tokenize(lines: &[(usize, &str)]) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let (mut last_line, mut last_col) = (1, 1);
    for &(ln, text) in lines {
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let single = match c {
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                '^' => Some(Tok::Caret),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                ',' => Some(Tok::Comma),
                _ => None,
            };
            if let Some(tok) = single {
                out.push(Spanned { tok, line: ln, col });
                i += 1;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let v = s
                    .parse::<u64>()
                    .map_err(|_| err(ln, col, ParseErrorKind::Unexpected(format!("integer `{s}`"))))?;
                out.push(Spanned {
                    tok: Tok::Int(v),
                    line: ln,
                    col,
                });
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line: ln,
                    col,
                });
            } else {
                return Err(err(ln, col, ParseErrorKind::UnexpectedChar(c)));
            }
            last_line = ln;
            last_col = i + 1;
        }
    }
    out.push(Spanned {
        tok: Tok::End,
        line: last_line,
        col: last_col,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    ring: &'a PolyRing,
}

impl Parser<'_> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self) -> ParseError {
        let t = self.peek();
        err(t.line, t.col, ParseErrorKind::Unexpected(t.tok.describe()))
    }

    fn neg(&self, p: &Poly) -> Poly {
        p.scale(self.ring, self.ring.field().neg(1))
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.merge(self.ring, 1, &Monomial::one(), b)
    }

    // expr := ['-'] term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = if self.peek().tok == Tok::Minus {
            self.bump();
            let t = self.term()?;
            self.neg(&t)
        } else {
            self.term()?
        };
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.add(&acc, &t);
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.add(&acc, &self.neg(&t));
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := power ('*' power)*
    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.power()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            let f = self.power()?;
            acc = acc.mul(self.ring, &f);
        }
        Ok(acc)
    }

    // power := atom ['^' int]
    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match t.tok {
            Tok::Int(e) if e <= 64 => Ok(base.pow(self.ring, e as u32)),
            Tok::Int(_) => Err(err(t.line, t.col, ParseErrorKind::ExponentTooLarge)),
            other => Err(err(t.line, t.col, ParseErrorKind::Unexpected(other.describe()))),
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Int(v) => {
                let c = (v % self.ring.p() as u64) as i64;
                Ok(Poly::constant(self.ring, c))
            }
            Tok::Ident(name) => match self.ring.names().iter().position(|s| *s == name) {
                Some(i) => Ok(self.ring.var(i)),
                None => Err(err(t.line, t.col, ParseErrorKind::UnknownVariable(name))),
            },
            Tok::LParen => {
                let e = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.unexpected());
                }
                self.bump();
                Ok(e)
            }
            other => Err(err(t.line, t.col, ParseErrorKind::Unexpected(other.describe()))),
        }
    }
}

fn header_value(rest: &str, key: &'static str, line: usize) -> Result<u64, ParseError> {
    rest.trim()
        .parse::<u64>()
        .map_err(|_| err(line, key.len() + 2, ParseErrorKind::BadHeader(key)))
}

fn header_key(text: &str) -> Option<(&str, &str)> {
    let t = text.trim_start();
    let (k, rest) = t.split_once(char::is_whitespace).unwrap_or((t, ""));
    matches!(k, "p" | "n" | "vars").then_some((k, rest))
}

/// Parses a document. Generators are checked for homogeneity; zero
/// generators are dropped.
pub fn parse_input(text: &str) -> Result<InputDocument, ParseError> {
    let mut p: Option<u64> = None;
    let mut n: Option<usize> = None;
    let mut names: Option<(usize, Vec<String>)> = None;
    let mut body: Vec<(usize, &str)> = Vec::new();
    let mut comment: Vec<String> = Vec::new();
    let mut in_header = true;
    for (k, raw) in text.lines().enumerate() {
        let ln = k + 1;
        let line = strip_comment(raw);
        if in_header && line.trim().is_empty() {
            if let Some(c) = raw.trim_start().strip_prefix('#') {
                comment.push(c.strip_prefix(' ').unwrap_or(c).to_string());
            }
            continue;
        }
        if in_header {
            if let Some((key, rest)) = header_key(line) {
                match key {
                    "p" => {
                        if p.is_some() {
                            return Err(err(ln, 1, ParseErrorKind::DuplicateHeader("p")));
                        }
                        p = Some(header_value(rest, "p", ln)?);
                    }
                    "n" => {
                        if n.is_some() {
                            return Err(err(ln, 1, ParseErrorKind::DuplicateHeader("n")));
                        }
                        n = Some(header_value(rest, "n", ln)? as usize);
                    }
                    _ => {
                        if names.is_some() {
                            return Err(err(ln, 1, ParseErrorKind::DuplicateHeader("vars")));
                        }
                        let list: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                        for s in &list {
                            let ok = s.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                                && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                            if !ok {
                                return Err(err(ln, 1, ParseErrorKind::BadName(s.clone())));
                            }
                        }
                        names = Some((ln, list));
                    }
                }
                continue;
            }
            in_header = false;
        }
        body.push((ln, line));
    }
    let p = p.ok_or(err(1, 1, ParseErrorKind::MissingHeader("p")))?;
    let n = n.ok_or(err(1, 1, ParseErrorKind::MissingHeader("n")))?;
    let (custom_names, ring) = match names {
        Some((ln, list)) => {
            if list.len() != n + 1 {
                return Err(err(
                    ln,
                    1,
                    ParseErrorKind::VarCount {
                        got: list.len(),
                        expected: n + 1,
                    },
                ));
            }
            let default = list.iter().enumerate().all(|(i, s)| *s == format!("x{i}"));
            (!default, PolyRing::with_names(p as u32, n, list))
        }
        None => (false, PolyRing::new(p.min(u32::MAX as u64) as u32, n)),
    };
    let ring = ring.map_err(|e| {
        let kind = match e {
            AlgebraError::NotPrime(v) => ParseErrorKind::NotPrime(v),
            AlgebraError::DimensionTooSmall(v) => ParseErrorKind::DimensionTooSmall(v),
            AlgebraError::TooManyVariables(v) => ParseErrorKind::TooManyVariables(v),
            other => ParseErrorKind::Unexpected(other.to_string()),
        };
        err(1, 1, kind)
    })?;
    if p > u32::MAX as u64 {
        return Err(err(1, 1, ParseErrorKind::NotPrime(p)));
    }
    let toks = tokenize(&body)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        ring: &ring,
    };
    let mut gens = Vec::new();
    if parser.peek().tok == Tok::End {
        let t = parser.peek();
        return Err(err(t.line, t.col, ParseErrorKind::NoGenerators));
    }
    loop {
        let start = parser.peek().clone();
        let g = parser.expr()?;
        if !g.is_homogeneous() {
            return Err(err(start.line, start.col, ParseErrorKind::Inhomogeneous));
        }
        if !g.is_zero() {
            gens.push(g);
        }
        match parser.peek().tok {
            Tok::Comma => {
                parser.bump();
            }
            Tok::End => break,
            _ => return Err(parser.unexpected()),
        }
    }
    let comment = (!comment.is_empty()).then(|| comment.join("\n"));
    Ok(InputDocument {
        ring,
        custom_names,
        gens,
        comment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_cubic_document() {
        let doc = parse_input("p 32003\nn 3\nx0*x2 - x1^2, x0*x3 - x1*x2,\nx1*x3 - x2^2\n").unwrap();
        assert_eq!(doc.gens.len(), 3);
        assert_eq!(doc.gens[0].display(&doc.ring), "-x1^2 + x0*x2");
    }

    #[test]
    fn inhomogeneous_has_location() {
        let e = parse_input("p 32003\nn 3\nx0*x1,\n  x0 + x1^2\n").unwrap_err();
        assert_eq!((e.line, e.col), (4, 3));
        assert_eq!(e.kind, ParseErrorKind::Inhomogeneous);
    }

    #[test]
    fn header_errors() {
        assert_eq!(parse_input("p 32004\nn 3\nx0\n").unwrap_err().kind, ParseErrorKind::NotPrime(32004));
        assert_eq!(
            parse_input("p 7\nn 2\nx0\n").unwrap_err().kind,
            ParseErrorKind::DimensionTooSmall(2)
        );
        assert_eq!(
            parse_input("n 3\nx0\n").unwrap_err().kind,
            ParseErrorKind::MissingHeader("p")
        );
    }

    #[test]
    fn implicit_product_rejected() {
        let e = parse_input("p 7\nn 3\n2 x0\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 3));
    }

    #[test]
    fn unknown_variable() {
        let e = parse_input("p 7\nn 3\nx0*y\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("y".into()));
        assert_eq!((e.line, e.col), (3, 4));
    }

    #[test]
    fn named_variables_and_parentheses() {
        let doc = parse_input("# a comment\np 101\nn 3\nvars a b c d\n(a - b)^2 * c, 3*d^3 # tail\n").unwrap();
        assert!(doc.custom_names);
        assert_eq!(doc.gens.len(), 2);
        assert_eq!(doc.comment.as_deref(), Some("a comment"));
        let again = parse_input(&doc.to_string()).unwrap();
        assert_eq!(again, doc);
    }
}
