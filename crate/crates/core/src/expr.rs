//! A small closed-form expression language for metric and field components.
//!
//! Grammar, in precedence order: `^` (right-associative) binds tighter than
//! unary minus, then `*` `/`, then `+` `-`. Parentheses and single-argument
//! functions `sin cos tan exp log sqrt sinh cosh` are supported; variables
//! are `x1..xn` for the chart dimension `n`.

use crate::num::{Jet2, Scalar, LANES};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Sinh,
    Cosh,
}

impl Func {
    const ALL: [(&'static str, Func); 8] = [
        ("sin", Func::Sin),
        ("cos", Func::Cos),
        ("tan", Func::Tan),
        ("exp", Func::Exp),
        ("log", Func::Log),
        ("sqrt", Func::Sqrt),
        ("sinh", Func::Sinh),
        ("cosh", Func::Cosh),
    ];

    fn name(self) -> &'static str {
        Self::ALL.iter().find(|(_, f)| *f == self).unwrap().0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

/// Abstract syntax tree of a parsed expression. `Var(i)` is the 0-based
/// coordinate index (so `x1` parses to `Var(0)`).
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(f64),
    Var(usize),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Fun(Func, Box<Expr>),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {col}: expected {expected}, found {found}")]
    Syntax { line: usize, col: usize, expected: String, found: String },
    #[error("unknown identifier `{name}` at line {line}, column {col}")]
    UnknownIdentifier { line: usize, col: usize, name: String },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DomainError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("log of non-positive value {0}")]
    LogNonPositive(f64),
    #[error("sqrt of negative value {0}")]
    SqrtNegative(f64),
    #[error("power of non-positive base {0} with non-integer exponent")]
    PowNonPositiveBase(f64),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(x) => write!(f, "number `{x}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

type Spanned = (Tok, usize, usize);

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, bytes: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn bump(&mut self) {
        if self.bytes[self.pos] == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        self.pos += 1;
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        while self.pos < self.bytes.len() {
            let c = self.bytes[self.pos];
            let (line, col) = (self.line, self.col);
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => self.bump(),
                b'+' => {
                    out.push((Tok::Plus, line, col));
                    self.bump();
                }
                b'-' => {
                    out.push((Tok::Minus, line, col));
                    self.bump();
                }
                b'*' => {
                    out.push((Tok::Star, line, col));
                    self.bump();
                }
                b'/' => {
                    out.push((Tok::Slash, line, col));
                    self.bump();
                }
                b'^' => {
                    out.push((Tok::Caret, line, col));
                    self.bump();
                }
                b'(' => {
                    out.push((Tok::LParen, line, col));
                    self.bump();
                }
                b')' => {
                    out.push((Tok::RParen, line, col));
                    self.bump();
                }
                b'0'..=b'9' | b'.' => {
                    let start = self.pos;
                    while self.pos < self.bytes.len()
                        && matches!(self.bytes[self.pos], b'0'..=b'9' | b'.')
                    {
                        self.bump();
                    }
                    // exponent part
                    if self.pos < self.bytes.len() && matches!(self.bytes[self.pos], b'e' | b'E') {
                        let mark = (self.pos, self.line, self.col);
                        self.bump();
                        if self.pos < self.bytes.len() && matches!(self.bytes[self.pos], b'+' | b'-')
                        {
                            self.bump();
                        }
                        if self.pos < self.bytes.len()
                            && self.bytes[self.pos].is_ascii_digit()
                        {
                            while self.pos < self.bytes.len()
                                && self.bytes[self.pos].is_ascii_digit()
                            {
                                self.bump();
                            }
                        } else {
                            // not an exponent after all; rewind
                            (self.pos, self.line, self.col) = mark;
                        }
                    }
                    let text = &self.src[start..self.pos];
                    let x: f64 = text.parse().map_err(|_| ParseError::Syntax {
                        line,
                        col,
                        expected: "a numeric literal".into(),
                        found: format!("`{text}`"),
                    })?;
                    out.push((Tok::Num(x), line, col));
                }
                b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                    let start = self.pos;
                    while self.pos < self.bytes.len()
                        && matches!(self.bytes[self.pos], b'a'..=b'z' | b'A'..=b'Z' | b'0'..=b'9' | b'_')
                    {
                        self.bump();
                    }
                    out.push((Tok::Ident(self.src[start..self.pos].to_string()), line, col));
                }
                _ => {
                    return Err(ParseError::Syntax {
                        line,
                        col,
                        expected: "a token".into(),
                        found: format!("`{}`", c as char),
                    })
                }
            }
        }
        out.push((Tok::Eof, self.line, self.col));
        Ok(out)
    }
}

struct Parser {
    toks: Vec<Spanned>,
    at: usize,
    dim: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.at]
    }

    fn advance(&mut self) -> Spanned {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err(&self, expected: &str) -> ParseError {
        let (tok, line, col) = self.peek().clone();
        ParseError::Syntax { line, col, expected: expected.into(), found: tok.to_string() }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().0 {
                Tok::Plus => {
                    self.advance();
                    lhs = Expr::Bin(BinOp::Add, Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.advance();
                    lhs = Expr::Bin(BinOp::Sub, Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek().0 {
                Tok::Star => {
                    self.advance();
                    lhs = Expr::Bin(BinOp::Mul, Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.advance();
                    lhs = Expr::Bin(BinOp::Div, Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if matches!(self.peek().0, Tok::Minus) {
            self.advance();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek().0, Tok::Caret) {
            self.advance();
            // right-associative, and `x^-2` is allowed
            let exp = self.unary()?;
            return Ok(Expr::Bin(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().0.clone() {
            Tok::Num(x) => {
                self.advance();
                Ok(Expr::Num(x))
            }
            Tok::LParen => {
                self.advance();
                let e = self.expr()?;
                if !matches!(self.peek().0, Tok::RParen) {
                    return Err(self.err("`)`"));
                }
                self.advance();
                Ok(e)
            }
            Tok::Ident(name) => {
                let (_, line, col) = *self.peek();
                self.advance();
                if let Some((_, f)) = Func::ALL.iter().find(|(n, _)| *n == name) {
                    if !matches!(self.peek().0, Tok::LParen) {
                        return Err(self.err("`(` after function name"));
                    }
                    self.advance();
                    let arg = self.expr()?;
                    if !matches!(self.peek().0, Tok::RParen) {
                        return Err(self.err("`)`"));
                    }
                    self.advance();
                    return Ok(Expr::Fun(*f, Box::new(arg)));
                }
                if let Some(rest) = name.strip_prefix('x') {
                    if let Ok(idx) = rest.parse::<usize>() {
                        if idx >= 1 && idx <= self.dim {
                            return Ok(Expr::Var(idx - 1));
                        }
                    }
                }
                Err(ParseError::UnknownIdentifier { line, col, name })
            }
            _ => Err(self.err("a number, variable, function or `(`")),
        }
    }
}

/// Parse `source` against the coordinate whitelist `x1..x{dim}`.
pub fn parse_expr(source: &str, dim: usize) -> Result<Expr, ParseError> {
    let toks = Lexer::new(source).tokens()?;
    let mut p = Parser { toks, at: 0, dim };
    let e = p.expr()?;
    if !matches!(p.peek().0, Tok::Eof) {
        return Err(p.err("end of input or an operator"));
    }
    Ok(e)
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
            Expr::Bin(BinOp::Mul | BinOp::Div, ..) => 2,
            Expr::Neg(..) => 3,
            Expr::Bin(BinOp::Pow, ..) => 4,
            _ => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, parent: u8) -> fmt::Result {
        let me = self.prec();
        let paren = me < parent;
        if paren {
            write!(f, "(")?;
        }
        match self {
            Expr::Num(x) => write!(f, "{x}")?,
            Expr::Var(i) => write!(f, "x{}", i + 1)?,
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_prec(f, 3)?;
            }
            Expr::Fun(func, e) => {
                write!(f, "{}(", func.name())?;
                e.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
            Expr::Bin(op, a, b) => {
                let (sym, lp, rp) = match op {
                    BinOp::Add => (" + ", 1, 2),
                    BinOp::Sub => (" - ", 1, 2),
                    BinOp::Mul => ("*", 2, 3),
                    BinOp::Div => ("/", 2, 3),
                    BinOp::Pow => ("^", 5, 4),
                };
                a.fmt_prec(f, lp)?;
                write!(f, "{sym}")?;
                b.fmt_prec(f, rp)?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }

    /// Evaluate with any scalar type; seeding the coordinates with duals or
    /// jets yields the corresponding derivatives.
    pub fn eval<T: Scalar>(&self, x: &[T; LANES]) -> Result<T, DomainError> {
        match self {
            Expr::Num(c) => Ok(T::from_f64(*c)),
            Expr::Var(i) => Ok(x[*i]),
            Expr::Neg(e) => Ok(-e.eval(x)?),
            Expr::Fun(func, e) => {
                let a = e.eval(x)?;
                match func {
                    Func::Sin => Ok(a.sin()),
                    Func::Cos => Ok(a.cos()),
                    Func::Tan => Ok(a.tan()),
                    Func::Exp => Ok(a.exp()),
                    Func::Sinh => Ok(a.sinh()),
                    Func::Cosh => Ok(a.cosh()),
                    Func::Log => {
                        if a.val() <= 0.0 {
                            Err(DomainError::LogNonPositive(a.val()))
                        } else {
                            Ok(a.ln())
                        }
                    }
                    Func::Sqrt => {
                        if a.val() < 0.0 {
                            Err(DomainError::SqrtNegative(a.val()))
                        } else {
                            Ok(a.sqrt())
                        }
                    }
                }
            }
            Expr::Bin(op, l, r) => {
                let a = l.eval(x)?;
                match op {
                    BinOp::Add => Ok(a + r.eval(x)?),
                    BinOp::Sub => Ok(a - r.eval(x)?),
                    BinOp::Mul => Ok(a * r.eval(x)?),
                    BinOp::Div => {
                        let b = r.eval(x)?;
                        if b.val() == 0.0 {
                            Err(DomainError::DivisionByZero)
                        } else {
                            Ok(a / b)
                        }
                    }
                    BinOp::Pow => {
                        // integer literal exponents keep negative bases legal
                        if let Expr::Num(c) = **r {
                            if c.fract() == 0.0 && c.abs() <= i32::MAX as f64 {
                                let n = c as i32;
                                if n < 0 && a.val() == 0.0 {
                                    return Err(DomainError::DivisionByZero);
                                }
                                return Ok(a.powi(n));
                            }
                        }
                        let b = r.eval(x)?;
                        if a.val() <= 0.0 {
                            Err(DomainError::PowNonPositiveBase(a.val()))
                        } else {
                            Ok(a.powf(b))
                        }
                    }
                }
            }
        }
    }

    /// Largest 0-based variable index used, if any.
    pub fn max_var(&self) -> Option<usize> {
        match self {
            Expr::Num(_) => None,
            Expr::Var(i) => Some(*i),
            Expr::Neg(e) | Expr::Fun(_, e) => e.max_var(),
            Expr::Bin(_, a, b) => a.max_var().max(b.max_var()),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Value, gradient and Hessian of `e` at `x` by forward-mode jets.
pub fn eval_jet2(e: &Expr, x: &[f64; LANES]) -> Result<Jet2<f64>, DomainError> {
    let mut seeded = [Jet2::constant(0.0); LANES];
    for (mu, s) in seeded.iter_mut().enumerate() {
        *s = Jet2::var(x[mu], mu);
    }
    e.eval(&seeded)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_precedence() {
        let e = parse_expr("x1^2 + sin(x2)", 4).unwrap();
        assert_eq!(
            e,
            Expr::Bin(
                BinOp::Add,
                Box::new(Expr::Bin(
                    BinOp::Pow,
                    Box::new(Expr::Var(0)),
                    Box::new(Expr::Num(2.0))
                )),
                Box::new(Expr::Fun(Func::Sin, Box::new(Expr::Var(1)))),
            )
        );
        // unary minus binds looser than ^
        let e = parse_expr("-x1^2", 4).unwrap();
        assert!(matches!(e, Expr::Neg(_)));
        // right associativity
        let e = parse_expr("x1^2^3", 4).unwrap();
        let Expr::Bin(BinOp::Pow, _, rhs) = e else { panic!() };
        assert!(matches!(*rhs, Expr::Bin(BinOp::Pow, ..)));
    }

    #[test]
    fn whitelist_violation() {
        match parse_expr("x5", 4) {
            Err(ParseError::UnknownIdentifier { name, .. }) => assert_eq!(name, "x5"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expr("x3", 2), Err(ParseError::UnknownIdentifier { .. })));
        assert!(matches!(parse_expr("foo(x1)", 4), Err(ParseError::UnknownIdentifier { .. })));
    }

    #[test]
    fn incomplete_expression_position() {
        match parse_expr("1 +", 4) {
            Err(ParseError::Syntax { line, col, .. }) => {
                assert_eq!((line, col), (1, 4));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bilinear_jet() {
        let e = parse_expr("x1*x2", 4).unwrap();
        let j = eval_jet2(&e, &[3.0, 5.0, 0.0, 0.0]).unwrap();
        assert_eq!(j.v, 15.0);
        assert_eq!(j.g, [5.0, 3.0, 0.0, 0.0]);
        assert_eq!(j.h[0][1], 1.0);
        assert_eq!(j.h[1][0], 1.0);
        assert_eq!(j.h[0][0], 0.0);
    }

    #[test]
    fn constant_jet() {
        let e = parse_expr("7", 4).unwrap();
        let j = eval_jet2(&e, &[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(j.v, 7.0);
        assert!(j.g.iter().all(|&g| g == 0.0));
    }

    #[test]
    fn sin_jet_against_finite_differences() {
        let e = parse_expr("sin(x3)", 4).unwrap();
        let x = [0.0, 0.0, 0.7, 0.0];
        let j = eval_jet2(&e, &x).unwrap();
        let h = 1e-4;
        let v = |t: f64| t.sin();
        let fd1 = (v(0.7 + h) - v(0.7 - h)) / (2.0 * h);
        let fd2 = (v(0.7 + h) - 2.0 * v(0.7) + v(0.7 - h)) / (h * h);
        assert!((j.g[2] - fd1).abs() <= 1e-6 * (1.0 + fd1.abs()));
        assert!((j.h[2][2] - fd2).abs() <= 1e-6 * (1.0 + fd2.abs()));
        assert!((j.g[2] - 0.7f64.cos()).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        let x = [0.0f64, -1.0, 0.0, 0.0];
        assert!(matches!(
            parse_expr("1/x1", 4).unwrap().eval(&x),
            Err(DomainError::DivisionByZero)
        ));
        assert!(matches!(
            parse_expr("log(x1)", 4).unwrap().eval(&x),
            Err(DomainError::LogNonPositive(_))
        ));
        assert!(matches!(
            parse_expr("sqrt(x2)", 4).unwrap().eval(&x),
            Err(DomainError::SqrtNegative(_))
        ));
        // integer exponent on negative base is fine
        assert_eq!(parse_expr("x2^2", 4).unwrap().eval(&x).unwrap(), 1.0);
    }

    #[test]
    fn print_parse_fixed_point() {
        for src in [
            "x1^2 + sin(x2)",
            "-(x1 + x2)*x3",
            "1 - 2 - 3",
            "2^x1^2",
            "x1/x2/x3",
            "-x1^2",
            "(x1 + 1)*(x2 - 1)",
            "cosh(x4)^-2",
        ] {
            let e = parse_expr(src, 4).unwrap();
            let p1 = e.to_string();
            let e2 = parse_expr(&p1, 4).unwrap();
            assert_eq!(e, e2, "reparse of `{p1}` changed the tree");
            assert_eq!(p1, e2.to_string());
        }
    }
}
