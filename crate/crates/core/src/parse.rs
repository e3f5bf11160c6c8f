//! Text grammar for polynomials, rational functions and projective points.
//!
//! Polynomials: integers, variables from a declared set, `+ - * / ^` and
//! parentheses. Multiplication is always explicit (`2*x`, never `2x` or
//! `x y`), exponents are non-negative integer literals, and a single
//! top-level `=` turns `lhs = rhs` into `lhs - rhs`. In polynomial context
//! the divisor of `/` must be a nonzero constant, which is how rational
//! coefficients such as `3/4*x` are written; rational-function context
//! (used for affine maps) allows arbitrary divisors.
//!
//! Points are written `[a:b:c]` where each coordinate may use `i` and
//! `sqrt(n)` besides rational arithmetic.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::{BinaryForm, Mono, TriPoly, UniPoly};
use crate::scalar::{Field, QuadExt, Rat};

pub const MAX_EXPONENT: u32 = 1000;

/// Input text together with a label used in error messages.
#[derive(Clone, Copy, Debug)]
pub struct ExprSource<'a> {
    pub text: &'a str,
    pub origin: &'a str,
}

impl<'a> ExprSource<'a> {
    pub fn new(text: &'a str, origin: &'a str) -> Self {
        ExprSource { text, origin }
    }
}

impl<'a> From<&'a str> for ExprSource<'a> {
    fn from(text: &'a str) -> Self {
        ExprSource { text, origin: "<input>" }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnknownVariable(String),
    BadExponent,
    ExponentTooLarge,
    NonConstantDivisor,
    DivisionByZero,
    IncompatibleRadicals,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match self {
            UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            UnexpectedToken(t) => write!(f, "unexpected {t}"),
            UnexpectedEnd => write!(f, "unexpected end of input"),
            UnknownVariable(v) => write!(f, "unknown variable {v:?}"),
            BadExponent => write!(f, "exponent must be a non-negative integer literal"),
            ExponentTooLarge => write!(f, "exponent exceeds {MAX_EXPONENT}"),
            NonConstantDivisor => write!(f, "division by a non-constant polynomial"),
            DivisionByZero => write!(f, "division by zero"),
            IncompatibleRadicals => write!(f, "coordinates mix different square roots"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{origin}:{line}:{column}: {kind}")]
pub struct ParseError {
    pub origin: String,
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Sym(c) => write!(f, "{c:?}"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(src: &ExprSource) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Int(s.parse().expect("digits")), pos));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(s), pos));
            continue;
        }
        if "+-*/^()=[]:".contains(c) {
            chars.next();
            column += 1;
            out.push((Tok::Sym(c), pos));
            continue;
        }
        return Err(ParseError {
            origin: src.origin.to_string(),
            line,
            column,
            kind: ParseErrorKind::UnexpectedChar(c),
        });
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

#[derive(Clone, Debug)]
enum Expr {
    Num(BigInt),
    Var(usize),
    /// Only produced by the point grammar.
    Sqrt(BigInt),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    origin: &'a str,
    vars: &'a [&'a str],
    point_mode: bool,
}

impl<'a> Parser<'a> {
    fn new(src: &'a ExprSource, vars: &'a [&'a str], point_mode: bool) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(src)?, at: 0, origin: src.origin, vars, point_mode })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err(&self, pos: Pos, kind: ParseErrorKind) -> ParseError {
        ParseError { origin: self.origin.to_string(), line: pos.line, column: pos.column, kind }
    }

    fn unexpected(&self) -> ParseError {
        let kind = match self.peek() {
            Tok::End => ParseErrorKind::UnexpectedEnd,
            t => ParseErrorKind::UnexpectedToken(t.to_string()),
        };
        self.err(self.pos(), kind)
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn equation(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.expr()?;
        let e = if self.eat('=') {
            let rhs = self.expr()?;
            Expr::Sub(Box::new(lhs), Box::new(rhs))
        } else {
            lhs
        };
        self.expect_end()?;
        Ok(e)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
            } else if *self.peek() == Tok::Sym('/') {
                let pos = self.bump().1;
                acc = Expr::Div(Box::new(acc), Box::new(self.unary()?), pos);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while self.eat('^') {
            let pos = self.pos();
            match self.bump().0 {
                Tok::Int(n) => {
                    let e = n.to_u32().filter(|&e| e <= MAX_EXPONENT);
                    let e = e.ok_or_else(|| self.err(pos, ParseErrorKind::ExponentTooLarge))?;
                    base = Expr::Pow(Box::new(base), e);
                }
                _ => return Err(self.err(pos, ParseErrorKind::BadExponent)),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Num(n))
            }
            Tok::Ident(name) => {
                self.bump();
                if self.point_mode {
                    return self.point_ident(&name, pos);
                }
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Expr::Var(i)),
                    None => Err(self.err(pos, ParseErrorKind::UnknownVariable(name))),
                }
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => Err(self.unexpected()),
        }
    }

    fn point_ident(&mut self, name: &str, pos: Pos) -> Result<Expr, ParseError> {
        match name {
            "i" => Ok(Expr::Sqrt(BigInt::from(-1))),
            "sqrt" => {
                self.expect('(')?;
                let neg = self.eat('-');
                let p = self.pos();
                let Tok::Int(n) = self.bump().0 else {
                    return Err(self.err(p, ParseErrorKind::UnexpectedToken("non-integer radicand".into())));
                };
                self.expect(')')?;
                Ok(Expr::Sqrt(if neg { -n } else { n }))
            }
            _ => Err(self.err(pos, ParseErrorKind::UnknownVariable(name.to_string()))),
        }
    }
}

fn eval_poly(e: &Expr, p: &Parser) -> Result<TriPoly<Rat>, ParseError> {
    Ok(match e {
        Expr::Num(n) => TriPoly::constant(Rat::from_integer(n.clone())),
        Expr::Var(i) => TriPoly::var(*i),
        Expr::Sqrt(_) => unreachable!("sqrt only parses in point mode"),
        Expr::Neg(a) => -eval_poly(a, p)?,
        Expr::Add(a, b) => eval_poly(a, p)? + eval_poly(b, p)?,
        Expr::Sub(a, b) => eval_poly(a, p)? - eval_poly(b, p)?,
        Expr::Mul(a, b) => eval_poly(a, p)? * eval_poly(b, p)?,
        Expr::Div(a, b, pos) => {
            let d = eval_poly(b, p)?;
            if d.is_zero() {
                return Err(p.err(*pos, ParseErrorKind::DivisionByZero));
            }
            if !d.is_constant() {
                return Err(p.err(*pos, ParseErrorKind::NonConstantDivisor));
            }
            eval_poly(a, p)?.scale(&(Rat::one() / d.constant_term()))
        }
        Expr::Pow(a, k) => eval_poly(a, p)?.pow(*k),
    })
}

type Frac = (TriPoly<Rat>, TriPoly<Rat>);

fn eval_frac(e: &Expr, p: &Parser) -> Result<Frac, ParseError> {
    Ok(match e {
        Expr::Num(_) | Expr::Var(_) | Expr::Sqrt(_) => (eval_poly(e, p)?, TriPoly::one()),
        Expr::Neg(a) => {
            let (n, d) = eval_frac(a, p)?;
            (-n, d)
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let (n1, d1) = eval_frac(a, p)?;
            let (n2, d2) = eval_frac(b, p)?;
            let (l, r) = (&n1 * &d2, &n2 * &d1);
            let n = if matches!(e, Expr::Add(..)) { l + r } else { l - r };
            (n, &d1 * &d2)
        }
        Expr::Mul(a, b) => {
            let (n1, d1) = eval_frac(a, p)?;
            let (n2, d2) = eval_frac(b, p)?;
            (&n1 * &n2, &d1 * &d2)
        }
        Expr::Div(a, b, pos) => {
            let (n1, d1) = eval_frac(a, p)?;
            let (n2, d2) = eval_frac(b, p)?;
            if n2.is_zero() {
                return Err(p.err(*pos, ParseErrorKind::DivisionByZero));
            }
            (&n1 * &d2, &d1 * &n2)
        }
        Expr::Pow(a, k) => {
            let (n, d) = eval_frac(a, p)?;
            (n.pow(*k), d.pow(*k))
        }
    })
}

fn eval_point(e: &Expr, p: &Parser, at: Pos) -> Result<QuadExt, ParseError> {
    let incompatible = |_| p.err(at, ParseErrorKind::IncompatibleRadicals);
    Ok(match e {
        Expr::Num(n) => QuadExt::rational(Rat::from_integer(n.clone())),
        Expr::Var(_) => unreachable!("no variables in point mode"),
        Expr::Sqrt(n) => {
            let n = n.to_i64().ok_or_else(|| p.err(at, ParseErrorKind::ExponentTooLarge))?;
            if n == 0 {
                QuadExt::zero()
            } else {
                QuadExt::sqrt_of(n).expect("nonzero radicand")
            }
        }
        Expr::Neg(a) => -eval_point(a, p, at)?,
        Expr::Add(a, b) => eval_point(a, p, at)?.checked_add(&eval_point(b, p, at)?).map_err(incompatible)?,
        Expr::Sub(a, b) => eval_point(a, p, at)?.checked_sub(&eval_point(b, p, at)?).map_err(incompatible)?,
        Expr::Mul(a, b) => eval_point(a, p, at)?.checked_mul(&eval_point(b, p, at)?).map_err(incompatible)?,
        Expr::Div(a, b, pos) => {
            let d = eval_point(b, p, at)?;
            if d.is_zero() {
                return Err(p.err(*pos, ParseErrorKind::DivisionByZero));
            }
            eval_point(a, p, at)?.checked_div(&d).map_err(incompatible)?
        }
        Expr::Pow(a, k) => {
            let b = eval_point(a, p, at)?;
            (0..*k).try_fold(QuadExt::one(), |acc, _| acc.checked_mul(&b)).map_err(incompatible)?
        }
    })
}

/// Parses a polynomial (or equation) over the declared variables; variable
/// `vars[i]` lands in slot `i`.
pub fn parse_poly(src: &ExprSource, vars: &[&str]) -> Result<TriPoly<Rat>, ParseError> {
    assert!(vars.len() <= 3);
    let mut p = Parser::new(src, vars, false)?;
    let e = p.equation()?;
    eval_poly(&e, &p)
}

/// Parses a univariate polynomial in `var`.
pub fn parse_uni(src: &ExprSource, var: &str) -> Result<UniPoly<Rat>, ParseError> {
    Ok(parse_poly(src, &[var])?.to_uni(0).expect("single variable"))
}

/// Parses a rational function, returned as `(numerator, denominator)`.
pub fn parse_rational(src: &ExprSource, vars: &[&str]) -> Result<Frac, ParseError> {
    assert!(vars.len() <= 3);
    let mut p = Parser::new(src, vars, false)?;
    let e = p.equation()?;
    eval_frac(&e, &p)
}

/// Parses `[a:b:c]` (brackets optional).
pub fn parse_point(src: &ExprSource) -> Result<[QuadExt; 3], ParseError> {
    let mut p = Parser::new(src, &[], true)?;
    let bracket = p.eat('[');
    let mut coords = Vec::with_capacity(3);
    for k in 0..3 {
        if k > 0 {
            p.expect(':')?;
        }
        let at = p.pos();
        let e = p.expr()?;
        coords.push(eval_point(&e, &p, at)?);
    }
    if bracket {
        p.expect(']')?;
    }
    p.expect_end()?;
    let first = coords.iter().find_map(|c| c.d());
    if coords.iter().any(|c| c.d().is_some() && c.d() != first) {
        return Err(p.err(Pos { line: 1, column: 1 }, ParseErrorKind::IncompatibleRadicals));
    }
    Ok([coords[0].clone(), coords[1].clone(), coords[2].clone()])
}

/// Identifiers occurring in the text, for choosing a variable set.
pub fn identifiers(src: &ExprSource) -> Result<BTreeSet<String>, ParseError> {
    Ok(lex(src)?
        .into_iter()
        .filter_map(|(t, _)| match t {
            Tok::Ident(s) => Some(s),
            _ => None,
        })
        .collect())
}

fn render_mono(m: &Mono, vars: &[&str]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].to_string()),
            _ => parts.push(format!("{}^{e}", vars[i])),
        }
    }
    parts.join("*")
}

/// Deterministic text in descending graded-lex order, e.g.
/// `X^4 + 2*X^2*Y^2 + Y^4 - X^2 + Y^2`.
pub fn render_poly<K: Field>(p: &TriPoly<K>, vars: &[&str]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let (neg, mag, parens) = c.render_parts();
        let mono = render_mono(m, vars);
        let body = if mono.is_empty() {
            if parens { format!("({mag})") } else { mag }
        } else if mag == "1" {
            mono
        } else if parens {
            format!("({mag})*{mono}")
        } else {
            format!("{mag}*{mono}")
        };
        match (k, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

pub fn render_uni<K: Field>(p: &UniPoly<K>, var: &str) -> String {
    render_poly(&TriPoly::from_uni(p, 0), &[var])
}

pub fn render_form<K: Field>(f: &BinaryForm<K>, vars: [&str; 2]) -> String {
    render_poly(&f.to_tri(), &vars)
}

/// `num/den` with parentheses as needed; plain `num` when `den = 1`.
pub fn render_fraction<K: Field>(num: &UniPoly<K>, den: &UniPoly<K>, var: &str) -> String {
    let n = render_uni(num, var);
    if den.degree() == Some(0) && den.coeff(0).is_one() {
        return n;
    }
    let wrap = |s: String, p: &UniPoly<K>| {
        if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 { format!("({s})") } else { s }
    };
    let d = render_uni(den, var);
    format!("{}/{}", wrap(n, num), wrap(d, den))
}

pub fn render_point(coords: &[QuadExt; 3]) -> String {
    format!("[{}:{}:{}]", coords[0], coords[1], coords[2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    const XYZ: [&str; 3] = ["X", "Y", "Z"];

    fn parse(s: &str, vars: &[&str]) -> TriPoly<Rat> {
        parse_poly(&ExprSource::from(s), vars).unwrap()
    }

    #[test]
    fn parses_the_quartic() {
        let f = parse("Y^2*Z^2 - X^4 - Z^4", &XYZ);
        assert_eq!(f.len(), 3);
        assert_eq!(f.coeff(&Mono([4, 0, 0])), int(-1));
        assert_eq!(render_poly(&f, &XYZ), "-X^4 + Y^2*Z^2 - Z^4");
    }

    #[test]
    fn equation_moves_rhs() {
        let f = parse("y^2 = x^3 + x^2", &["x", "y"]);
        assert_eq!(render_poly(&f, &["x", "y"]), "-x^3 - x^2 + y^2");
    }

    #[test]
    fn no_implicit_multiplication() {
        let e = parse_poly(&"x y".into(), &["x", "y"]).unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedToken(_)));
        assert!(parse_poly(&"2x".into(), &["x"]).is_err());
    }

    #[test]
    fn error_kinds() {
        let kind = |s: &str| parse_poly(&s.into(), &["x", "y"]).unwrap_err().kind;
        assert_eq!(kind("z + 1"), ParseErrorKind::UnknownVariable("z".into()));
        assert_eq!(kind("x^y"), ParseErrorKind::BadExponent);
        assert_eq!(kind("x^-1"), ParseErrorKind::BadExponent);
        assert_eq!(kind("x/y"), ParseErrorKind::NonConstantDivisor);
        assert_eq!(kind("x/0"), ParseErrorKind::DivisionByZero);
        assert_eq!(kind("x = y = 1"), ParseErrorKind::UnexpectedToken("'='".into()));
        assert_eq!(kind("nonsense((("), ParseErrorKind::UnknownVariable("nonsense".into()));
        assert_eq!(kind("(x + 1"), ParseErrorKind::UnexpectedEnd);
        assert_eq!(kind("x # 2"), ParseErrorKind::UnexpectedChar('#'));
        assert_eq!(kind("x^99999999999"), ParseErrorKind::ExponentTooLarge);
    }

    #[test]
    fn positions_span_lines() {
        let e = parse_poly(&"x +\n  $".into(), &["x"]).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
    }

    #[test]
    fn rendering_conventions() {
        assert_eq!(render_poly(&TriPoly::<Rat>::zero(), &XYZ), "0");
        assert_eq!(render_poly(&-TriPoly::<Rat>::var(0), &XYZ), "-X");
        let f = parse("3/4*X - 1/2", &XYZ);
        assert_eq!(render_poly(&f, &XYZ), "3/4*X - 1/2");
        assert_eq!(parse(&render_poly(&f, &XYZ), &XYZ), f);
    }

    #[test]
    fn rational_functions() {
        let (n, d) = parse_rational(&"t*(t^2+1)/(t^4+1)".into(), &["t"]).unwrap();
        assert_eq!(render_poly(&n, &["t"]), "t^3 + t");
        assert_eq!(render_poly(&d, &["t"]), "t^4 + 1");
    }

    #[test]
    fn points() {
        let p = parse_point(&"[1:i:0]".into()).unwrap();
        assert_eq!(render_point(&p), "[1:sqrt(-1):0]");
        let q = parse_point(&"-1 : 0 : 1".into()).unwrap();
        assert_eq!(render_point(&q), "[-1:0:1]");
        let r = parse_point(&"[1/2 + sqrt(8) : 1 : 0]".into()).unwrap();
        assert_eq!(render_point(&r), "[1/2 + 2*sqrt(2):1:0]");
        assert!(parse_point(&"[sqrt(2):sqrt(3):1]".into()).is_err());
        assert!(parse_point(&"[1:2]".into()).is_err());
    }
}
