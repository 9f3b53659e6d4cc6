//! Text syntax for elements of R and S.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' integer)?
//! atom  := integer ('/' integer)? | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! `/` is only accepted between two integer literals; S has no division.
//! Products are evaluated in S, so `x*y` normalizes to `σ(y)·x + δ(y)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ore::{OreContext, SkewPoly};
use crate::poly::YPoly;
use crate::scalar::{FieldDescriptor, Scalar};
use crate::{Error, Result};

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(BigRational),
    X,
    Y,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl fmt::Display for Expr {
    /// Fully parenthesized; parses back to an expression of the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write!(f, "({q})"),
            Expr::X => write!(f, "x"),
            Expr::Y => write!(f, "y"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Pow(a, e) => write!(f, "({a})^{e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        let tok = match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let end = chars.get(i).map_or(text.len(), |c| c.0);
                let digits = &text[chars[start].0..end];
                out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            'x' => Tok::X,
            'y' => Tok::Y,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(Error::parse(pos, format!("unexpected character '{other}'"))),
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.1.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    return Err(Error::parse(self.pos(), "division is not defined in S"))
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(e)) => {
                let e: u32 = e
                    .try_into()
                    .map_err(|_| Error::parse(pos, "exponent too large"))?;
                if self.peek() == Some(&Tok::Caret) {
                    return Err(Error::parse(self.pos(), "chained exponents need parentheses"));
                }
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => Err(Error::parse(pos, "expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Int(d)) if !d.is_zero() => Ok(Expr::Num(BigRational::new(n, d))),
                        Some(Tok::Int(_)) => Err(Error::parse(dpos, "zero denominator")),
                        _ => Err(Error::parse(dpos, "division is not defined in S")),
                    }
                } else {
                    Ok(Expr::Num(BigRational::from_integer(n)))
                }
            }
            Some(Tok::X) => Ok(Expr::X),
            Some(Tok::Y) => Ok(Expr::Y),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                let cpos = self.pos();
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::parse(cpos, "expected ')'")),
                }
            }
            Some(Tok::Slash) => Err(Error::parse(pos, "division is not defined in S")),
            Some(t) => Err(Error::parse(pos, format!("unexpected token {t:?}"))),
            None => Err(Error::parse(pos, "unexpected end of input")),
        }
    }
}

/// Parse text into an expression tree.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return Err(Error::parse(p.pos(), "trailing input"));
    }
    Ok(e)
}

fn scalar_in<K: Scalar>(field: &FieldDescriptor, q: &BigRational) -> Result<K> {
    K::from_rational(field, q)
        .ok_or_else(|| Error::InvalidArgument(format!("{q} has no image in {field}")))
}

// Tagged one, so residues never mix with untagged rationals in output.
fn unit<K: Scalar>(field: &FieldDescriptor) -> Result<K> {
    scalar_in(field, &BigRational::one())
}

/// Evaluate in S; every product is normalized with the Ore relation.
pub fn eval_skew<K: Scalar>(ctx: &OreContext<K>, e: &Expr) -> Result<SkewPoly<K>> {
    Ok(match e {
        Expr::Num(q) => SkewPoly::constant(scalar_in(&ctx.field(), q)?),
        Expr::X => SkewPoly::monomial(unit(&ctx.field())?, 0, 1),
        Expr::Y => SkewPoly::monomial(unit(&ctx.field())?, 1, 0),
        Expr::Neg(a) => -eval_skew(ctx, a)?,
        Expr::Add(a, b) => &eval_skew(ctx, a)? + &eval_skew(ctx, b)?,
        Expr::Sub(a, b) => &eval_skew(ctx, a)? - &eval_skew(ctx, b)?,
        Expr::Mul(a, b) => ctx.mul(&eval_skew(ctx, a)?, &eval_skew(ctx, b)?),
        Expr::Pow(a, k) => ctx.pow(&eval_skew(ctx, a)?, *k as usize),
    })
}

/// Evaluate in R = K[y]; `x` is rejected.
pub fn eval_ypoly<K: Scalar>(field: &FieldDescriptor, e: &Expr) -> Result<YPoly<K>> {
    Ok(match e {
        Expr::Num(q) => YPoly::constant(scalar_in(field, q)?),
        Expr::X => {
            return Err(Error::InvalidArgument(
                "x is not allowed in a polynomial in y".into(),
            ))
        }
        Expr::Y => YPoly::monomial(unit(field)?, 1),
        Expr::Neg(a) => -eval_ypoly(field, a)?,
        Expr::Add(a, b) => eval_ypoly(field, a)? + eval_ypoly(field, b)?,
        Expr::Sub(a, b) => eval_ypoly(field, a)? - eval_ypoly(field, b)?,
        Expr::Mul(a, b) => &eval_ypoly::<K>(field, a)? * &eval_ypoly(field, b)?,
        Expr::Pow(a, k) => eval_ypoly(field, a)?.pow(*k as usize),
    })
}

pub fn parse_skew<K: Scalar>(text: &str, ctx: &OreContext<K>) -> Result<SkewPoly<K>> {
    eval_skew(ctx, &parse_expr(text)?)
}

pub fn parse_ypoly<K: Scalar>(text: &str, field: &FieldDescriptor) -> Result<YPoly<K>> {
    eval_ypoly(field, &parse_expr(text)?)
}

/// `y^k` with an optional coefficient, sign handled by the caller.
fn ypoly_terms<K: Scalar>(p: &YPoly<K>) -> Vec<(bool, String)> {
    let mut terms = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        let unit = if neg { (-c.clone()).is_one() } else { c.is_one() };
        let var = match k {
            0 => String::new(),
            1 => "y".to_string(),
            _ => format!("y^{k}"),
        };
        let body = match (k, unit) {
            (0, _) => mag,
            (_, true) => var,
            (_, false) => format!("{mag}*{var}"),
        };
        terms.push((neg, body));
    }
    terms
}

/// Canonical text of a polynomial in `y`, descending powers.
pub fn format_ypoly<K: Scalar>(p: &YPoly<K>) -> String {
    let terms = ypoly_terms(p);
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(body);
    }
    out
}

/// Canonical text of an element of S: descending powers of `x`, each
/// nonconstant coefficient written as `(…)*x^k`.
pub fn format_skew<K: Scalar>(p: &SkewPoly<K>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let xpart = match k {
            0 => None,
            1 => Some("x".to_string()),
            _ => Some(format!("x^{k}")),
        };
        let text = match xpart {
            None => format_ypoly(c),
            Some(xp) if c.coeffs().len() == 1 && c.coeffs()[0].is_one() => xp,
            Some(xp) if c.coeffs().len() == 1 && (-c.coeffs()[0].clone()).is_one() => format!("-{xp}"),
            Some(xp) => format!("({})*{xp}", format_ypoly(c)),
        };
        parts.push(text);
    }
    let mut out = parts[0].clone();
    for part in &parts[1..] {
        match part.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(part);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldElem;
    use crate::Rational;

    fn ctx(sigma: &str, delta: &str) -> OreContext<Rational> {
        let f = FieldDescriptor::Rationals;
        OreContext::new(f, parse_ypoly(sigma, &f).unwrap(), parse_ypoly(delta, &f).unwrap()).unwrap()
    }

    #[test]
    fn normalizes_products() {
        let c = ctx("y^2", "1");
        assert_eq!(format_skew(&parse_skew("x*y", &c).unwrap()), "(y^2)*x + 1");
        let c0 = ctx("y^2", "0");
        assert_eq!(format_skew(&parse_skew("x^2*y", &c0).unwrap()), "(y^4)*x^2");
        let p = parse_skew("(y^2+1)*x^3 + 5", &c).unwrap();
        assert_eq!(format_skew(&p), "(y^2 + 1)*x^3 + 5");
    }

    #[test]
    fn format_examples() {
        let c = ctx("y^2", "1");
        assert_eq!(format_skew(&SkewPoly::<Rational>::zero()), "0");
        assert_eq!(format_skew(&parse_skew("y^4*x^3", &c).unwrap()), "(y^4)*x^3");
        assert_eq!(format_skew(&parse_skew("x*y - y*x", &c).unwrap()), "(y^2 - y)*x + 1");
        assert_eq!(format_skew(&parse_skew("x - y^2 + 3", &c).unwrap()), "x - y^2 + 3");
        assert_eq!(format_skew(&parse_skew("-1/2*y*x^2 - x", &c).unwrap()), "(-1/2*y)*x^2 - x");
        assert_eq!(format_ypoly(&parse_ypoly::<Rational>("-y^3 + 2*y - 7", &FieldDescriptor::Rationals).unwrap()), "-y^3 + 2*y - 7");
    }

    #[test]
    fn rejects_bad_input() {
        let c = ctx("y^2", "0");
        for bad in ["y/2", "x/y", "2 +", "(y", "y^x", "z", "", "1/0", "y^2^3", "y )"] {
            assert!(parse_skew(bad, &c).is_err(), "accepted {bad:?}");
        }
        match parse_skew("y + /3", &c) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_ypoly::<Rational>("x+1", &FieldDescriptor::Rationals).is_err());
    }

    #[test]
    fn prime_field_text() {
        let f = FieldDescriptor::Prime(7);
        let c = OreContext::<FieldElem>::new(f, parse_ypoly("y^2", &f).unwrap(), parse_ypoly("1", &f).unwrap()).unwrap();
        let p = parse_skew("-x*y + 1/2", &c).unwrap();
        assert_eq!(format_skew(&p), "(6*y^2)*x + 3");
        assert_eq!(parse_skew(&format_skew(&p), &c).unwrap(), p);
        assert!(parse_skew("1/7", &c).is_err());
    }
}
