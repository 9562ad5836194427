//! Recursive-descent parser for operator expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := 'E' | var | rational | '(' expr ')' | '-' factor
//! ```
//!
//! `^` binds tighter than `*`, `*` tighter than `+`/`-`, and unary minus
//! tighter than `*`. Implicit multiplication is rejected. The relaxed
//! grammar used for recurrence operators in `k` additionally accepts `/`
//! between factors (dividing by a nonzero function) and negative integer
//! exponents on `E`, which is what the text printer emits.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{BigRat, Poly, RatFun};
use crate::ore::{OreOp, Var};
use crate::reducer::InputOperator;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at position {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("unknown symbol {name:?} at position {pos}")]
    UnknownSymbol { pos: usize, name: String },
    #[error("expected {expected} at position {pos}")]
    Expected { pos: usize, expected: &'static str },
    #[error("negative exponent at position {pos}; input operators live in polynomial E")]
    NegativeExponent { pos: usize },
    #[error("exponent at position {pos} must be a nonnegative integer")]
    NonIntegerExponent { pos: usize },
    #[error("division by zero at position {pos}")]
    DivisionByZero { pos: usize },
    #[error("divisor at position {pos} must not contain E")]
    OperatorDivisor { pos: usize },
    #[error("negative power of an expression other than E at position {pos}")]
    NegativePowerOfExpression { pos: usize },
    #[error("trailing input at position {pos}")]
    Trailing { pos: usize },
    #[error("coefficient is not a polynomial")]
    NotPolynomial,
    #[error("empty operator")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
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
                let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                out.push((pos, Tok::Ident(name)));
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ch => return Err(ParseError::UnexpectedChar { pos, ch }),
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
    var: Var,
    relaxed: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<OreOp, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<OreOp, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) if self.relaxed => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.factor()?;
                    acc = acc.scale(&self.divisor(d, pos)?);
                }
                Some(Tok::Ident(_) | Tok::Int(_) | Tok::LParen) => {
                    return Err(ParseError::Expected { pos: self.pos(), expected: "an operator between factors" })
                }
                _ => return Ok(acc),
            }
        }
    }

    fn divisor(&self, d: OreOp, pos: usize) -> Result<RatFun, ParseError> {
        if d.is_zero() {
            return Err(ParseError::DivisionByZero { pos });
        }
        match d.terms().next() {
            Some((0, c)) if d.order() == Some(0) => c.inv().map_err(|_| ParseError::DivisionByZero { pos }),
            _ => Err(ParseError::OperatorDivisor { pos }),
        }
    }

    fn factor(&mut self) -> Result<OreOp, ParseError> {
        let base_pos = self.pos();
        let is_e = matches!(self.peek(), Some(Tok::Ident(n)) if n == "E");
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let exp_pos = self.pos();
        let exp = self.exponent()?;
        if exp < 0 {
            if !self.relaxed {
                return Err(ParseError::NegativeExponent { pos: exp_pos });
            }
            if !is_e {
                return Err(ParseError::NegativePowerOfExpression { pos: base_pos });
            }
            return Ok(OreOp::monomial(self.var, RatFun::one(), exp));
        }
        Ok((0..exp).fold(OreOp::one(self.var), |acc, _| &acc * &base))
    }

    /// `uint`, or a parenthesized signed rational that is rejected unless
    /// it is a (possibly negative) integer.
    fn exponent(&mut self) -> Result<i64, ParseError> {
        let pos = self.pos();
        let value = match self.bump() {
            Some(Tok::Int(n)) => BigRat::from_integer(n),
            Some(Tok::LParen) => {
                let neg = if self.peek() == Some(&Tok::Minus) {
                    self.bump();
                    true
                } else {
                    false
                };
                let v = self.rational_literal()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(ParseError::Expected { pos: self.pos(), expected: "')'" });
                }
                if neg {
                    -v
                } else {
                    v
                }
            }
            Some(Tok::Minus) => return Err(ParseError::NegativeExponent { pos }),
            _ => return Err(ParseError::Expected { pos, expected: "an exponent" }),
        };
        // `n/1` is fine, anything with a fractional part is not
        if !value.is_integer() {
            return Err(ParseError::NonIntegerExponent { pos });
        }
        i64::try_from(value.to_integer()).map_err(|_| ParseError::NonIntegerExponent { pos })
    }

    fn rational_literal(&mut self) -> Result<BigRat, ParseError> {
        let pos = self.pos();
        let Some(Tok::Int(n)) = self.bump() else {
            return Err(ParseError::Expected { pos, expected: "a number" });
        };
        if self.peek() == Some(&Tok::Slash) && matches!(self.toks.get(self.at + 1), Some((_, Tok::Int(_)))) {
            self.bump();
            let dpos = self.pos();
            let Some(Tok::Int(d)) = self.bump() else { unreachable!() };
            if d.is_zero() {
                return Err(ParseError::DivisionByZero { pos: dpos });
            }
            return Ok(BigRat::new(n, d));
        }
        Ok(BigRat::from_integer(n))
    }

    fn base(&mut self) -> Result<OreOp, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.bump();
                match name.as_str() {
                    "E" => Ok(OreOp::shift(self.var)),
                    n if self.var_matches(n) => Ok(OreOp::constant(self.var, RatFun::var())),
                    _ => Err(ParseError::UnknownSymbol { pos, name }),
                }
            }
            Some(Tok::Int(_)) => {
                let v = if self.relaxed {
                    // in relaxed mode `/` is general division anyway
                    let Some(Tok::Int(n)) = self.bump() else { unreachable!() };
                    BigRat::from_integer(n)
                } else {
                    self.rational_literal()?
                };
                Ok(OreOp::constant(self.var, RatFun::constant(v)))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(ParseError::Expected { pos: self.pos().min(self.end), expected: "')'" });
                }
                Ok(inner)
            }
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.factor()?)
            }
            _ => Err(ParseError::Expected { pos, expected: "a number, variable, E or '('" }),
        }
    }

    fn var_matches(&self, name: &str) -> bool {
        match self.var {
            Var::N => name == "n" || name == "x",
            Var::K => name == "k",
        }
    }
}

fn run(text: &str, var: Var, relaxed: bool) -> Result<OreOp, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser { toks, at: 0, end: text.len(), var, relaxed };
    let op = p.expr()?;
    if p.at < p.toks.len() {
        return Err(ParseError::Trailing { pos: p.pos() });
    }
    Ok(op)
}

/// Parses an input operator in `n` (alias `x`) with polynomial
/// coefficients and nonnegative powers of `E`.
pub fn parse_operator(text: &str) -> Result<InputOperator, ParseError> {
    let op = run(text, Var::N, false)?;
    InputOperator::new(op).map_err(|e| match e {
        crate::reducer::ReduceError::ZeroOperator => ParseError::Empty,
        _ => ParseError::NotPolynomial,
    })
}

/// Parses a recurrence operator in `var`, accepting everything the text
/// printer produces: rational-function coefficients and negative powers of `E`.
pub fn parse_ore(text: &str, var: Var) -> Result<OreOp, ParseError> {
    run(text, var, true)
}

/// Parses a polynomial in `var` (no `E`).
pub fn parse_poly(text: &str, var: Var) -> Result<Poly, ParseError> {
    let op = run(text, var, false)?;
    match (op.order(), op.coeff(0)) {
        (None, _) => Ok(Poly::zero()),
        (Some(0), Some(c)) if op.low() == Some(0) && c.is_polynomial() => Ok(c.num().clone()),
        _ => Err(ParseError::NotPolynomial),
    }
}
