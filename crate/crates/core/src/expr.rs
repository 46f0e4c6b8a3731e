//! Text syntax for elements of the free algebra.
//!
//! ```text
//! sum     := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' '-'? INT)?
//! atom    := INT | IDENT | IDENT '(' sum ')' | '(' sum ')' | '[' sum ',' sum ']'
//! ```
//!
//! Identifiers are `r`, `s`, `Delta`, the generators (`e1`, `f2`, `w1`,
//! `w2'`, ...), the root vectors `E12 E112 E1112 E21 F12 F112 F1112`, and the
//! calls `T1(..)`, `T2(..)`. Division is only by scalars.

use crate::free::{Gen, NcPoly, Word};
use crate::scalar::{delta, RatFunc};
use num_bigint::BigInt;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Bracket(Box<Expr>, Box<Expr>),
    Call(String, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("unknown identifier `{name}` at byte {offset}")]
    UnknownIdent { offset: usize, name: String },
    #[error("negative power of `{name}` at byte {offset}")]
    NegativePower { offset: usize, name: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownIdent { offset, .. }
            | ParseError::NegativePower { offset, .. } => *offset,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("division by a non-scalar")]
    NonScalarDivisor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot invert {0}")]
    NotInvertible(String),
    #[error("no handler for {0}(..)")]
    NoCall(String),
    #[error("{0}")]
    Call(String),
}

const SCALARS: [&str; 3] = ["r", "s", "Delta"];
const CALLS: [&str; 2] = ["T1", "T2"];

pub fn gen_by_name(name: &str) -> Option<Gen> {
    Some(match name {
        "e1" => Gen::E1,
        "e2" => Gen::E2,
        "f1" => Gen::F1,
        "f2" => Gen::F2,
        "w1" => Gen::W1,
        "w2" => Gen::W2,
        "w1'" => Gen::W1p,
        "w2'" => Gen::W2p,
        _ => return None,
    })
}

fn known_ident(name: &str) -> bool {
    SCALARS.contains(&name) || gen_by_name(name).is_some() || crate::lusztig::root_vector(name).is_some()
}

fn invertible_ident(name: &str) -> bool {
    SCALARS.contains(&name) || gen_by_name(name).is_some_and(Gen::is_group_like)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { offset: self.pos, msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => self.err(format!("expected `{c}`, found `{got}`")),
                None => self.err(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return self.err("expected an integer exponent");
        }
        let n: i64 =
            digits.parse().map_err(|_| ParseError::Syntax { offset: self.pos, msg: "exponent too large".into() })?;
        if neg {
            if let Expr::Sym(name) = &base {
                if !invertible_ident(name) {
                    return Err(ParseError::NegativePower { offset: start, name: name.clone() });
                }
            }
        }
        Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }))
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if f(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.sum()?;
                self.expect(',')?;
                let b = self.sum()?;
                self.expect(']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                Ok(Expr::Num(digits.parse().unwrap()))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'').to_string();
                if CALLS.contains(&name.as_str()) {
                    self.expect('(')?;
                    let arg = self.sum()?;
                    self.expect(')')?;
                    return Ok(Expr::Call(name, Box::new(arg)));
                }
                if !known_ident(&name) {
                    return Err(ParseError::UnknownIdent { offset: start, name });
                }
                Ok(Expr::Sym(name))
            }
            Some(c) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.sum()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(..) => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if prec(e) < min {
        write!(f, "(")?;
        write_at(f, e, 0)?;
        return write!(f, ")");
    }
    match e {
        Expr::Num(n) => write!(f, "{n}"),
        Expr::Sym(s) => write!(f, "{s}"),
        Expr::Neg(x) => {
            write!(f, "-")?;
            write_at(f, x, 3)
        }
        Expr::Add(a, b) => {
            write_at(f, a, 1)?;
            write!(f, " + ")?;
            write_at(f, b, 2)
        }
        Expr::Sub(a, b) => {
            write_at(f, a, 1)?;
            write!(f, " - ")?;
            write_at(f, b, 2)
        }
        Expr::Mul(a, b) => {
            write_at(f, a, 2)?;
            write!(f, "*")?;
            write_at(f, b, 3)
        }
        Expr::Div(a, b) => {
            write_at(f, a, 2)?;
            write!(f, "/")?;
            write_at(f, b, 3)
        }
        Expr::Pow(x, n) => {
            write_at(f, x, 5)?;
            write!(f, "^{n}")
        }
        Expr::Bracket(a, b) => {
            write!(f, "[")?;
            write_at(f, a, 0)?;
            write!(f, ", ")?;
            write_at(f, b, 0)?;
            write!(f, "]")
        }
        Expr::Call(name, x) => {
            write!(f, "{name}(")?;
            write_at(f, x, 0)?;
            write!(f, ")")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_at(f, self, 0)
    }
}

/// Handler for `T1(..)` and `T2(..)`.
pub type CallFn<'a> = &'a dyn Fn(usize, &NcPoly) -> Result<NcPoly, String>;

fn invert(p: &NcPoly) -> Result<NcPoly, EvalError> {
    if let Some(c) = p.as_scalar() {
        return c.inv().map(NcPoly::scalar).map_err(|_| EvalError::DivisionByZero);
    }
    if p.len() == 1 {
        let (w, c) = p.terms().next().unwrap();
        if w.gens().iter().all(|g| g.is_group_like()) {
            let inv: Vec<Gen> = w.gens().iter().rev().map(|g| g.inverse().unwrap()).collect();
            return Ok(NcPoly::term(c.inv().unwrap(), Word::from_gens(&inv)));
        }
    }
    Err(EvalError::NotInvertible(p.render()))
}

impl Expr {
    /// Evaluate in the free algebra. `call` handles `T1(..)` / `T2(..)`.
    pub fn eval(&self, call: Option<CallFn<'_>>) -> Result<NcPoly, EvalError> {
        Ok(match self {
            Expr::Num(n) => NcPoly::scalar(RatFunc::from_bigint(n.clone())),
            Expr::Sym(name) => match name.as_str() {
                "r" => NcPoly::scalar(RatFunc::r()),
                "s" => NcPoly::scalar(RatFunc::s()),
                "Delta" => NcPoly::scalar(delta()),
                _ => match gen_by_name(name) {
                    Some(g) => NcPoly::gen(g),
                    None => crate::lusztig::root_vector(name).expect("identifier checked at parse time"),
                },
            },
            Expr::Neg(x) => x.eval(call)?.neg(),
            Expr::Add(a, b) => a.eval(call)?.add(&b.eval(call)?),
            Expr::Sub(a, b) => a.eval(call)?.sub(&b.eval(call)?),
            Expr::Mul(a, b) => a.eval(call)?.mul(&b.eval(call)?),
            Expr::Div(a, b) => {
                let d = b.eval(call)?.as_scalar().ok_or(EvalError::NonScalarDivisor)?;
                let k = d.inv().map_err(|_| EvalError::DivisionByZero)?;
                a.eval(call)?.scale(&k)
            }
            Expr::Pow(x, n) => {
                let base = x.eval(call)?;
                let base = if *n < 0 { invert(&base)? } else { base };
                base.pow(n.unsigned_abs() as u32)
            }
            Expr::Bracket(a, b) => a.eval(call)?.commutator(&b.eval(call)?),
            Expr::Call(name, x) => {
                let f = call.ok_or_else(|| EvalError::NoCall(name.clone()))?;
                let i = if name == "T1" { 0 } else { 1 };
                f(i, &x.eval(call)?).map_err(EvalError::Call)?
            }
        })
    }
}

/// Parse and evaluate an expression without `T` calls.
pub fn eval_str(text: &str) -> Result<NcPoly, String> {
    let e = parse_expr(text).map_err(|e| e.to_string())?;
    e.eval(None).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse_expr("e2*e1 - r^-3*e1*e2").unwrap();
        assert_eq!(e.to_string(), "e2*e1 - r^-3*e1*e2");
        assert_eq!(parse_expr("-a").unwrap_err().offset(), 1);
        assert_eq!(parse_expr("(e1 + e2)*f1").unwrap().to_string(), "(e1 + e2)*f1");
        assert_eq!(parse_expr("e1 - (e2 - f1)").unwrap().to_string(), "e1 - (e2 - f1)");
        assert_eq!(parse_expr("(w1^2)^3").unwrap().to_string(), "(w1^2)^3");
    }

    #[test]
    fn negative_powers() {
        assert!(parse_expr("w1^-1 * e1").is_ok());
        assert!(matches!(parse_expr("e1^-1"), Err(ParseError::NegativePower { offset: 0, .. })));
        assert!(matches!(parse_expr("f1 + E12^-2"), Err(ParseError::NegativePower { offset: 5, .. })));
    }

    #[test]
    fn evaluation() {
        let p = eval_str("[e1, e2]").unwrap();
        assert_eq!(p.render(), "e1*e2 - e2*e1");
        let q = eval_str("w1'^-1*w1'").unwrap();
        assert_eq!(q.render(), "w1'^-1*w1'");
        assert_eq!(eval_str("(r - s)/(r - s)").unwrap(), NcPoly::one());
        assert!(eval_str("e1/e2").is_err());
        assert!(eval_str("(e1 + w1)^-1").is_err());
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_expr("e1 + x3").unwrap_err(), ParseError::UnknownIdent { offset: 5, name: "x3".into() });
        assert_eq!(parse_expr("e1 +").unwrap_err().offset(), 4);
        assert_eq!(parse_expr("[e1 e2]").unwrap_err().offset(), 4);
    }
}
