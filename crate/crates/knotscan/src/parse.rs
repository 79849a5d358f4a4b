//! Polynomial expressions such as `1 - z^2 + 2z^4 + z^6` or `-t^-1 + 3 - t`.
//!
//! ```text
//! polynomial = [ sign ] term { sign term } ;
//! term       = integer [ [ "*" ] power ] | power ;
//! power      = variable [ "^" exponent ] ;
//! exponent   = [ sign ] digits ;
//! sign       = "+" | "-" ;
//! variable   = "z" | "t" ;
//! ```
//!
//! Whitespace may appear between any two tokens. Repeated exponents are
//! summed. Negative exponents are accepted only for `t`.

use std::fmt;
use std::str::FromStr;

use conway_core::{AlexanderPolynomial, ConwayPolynomial, LaurentPolynomial, Polynomial};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

/// Exponents beyond this are rejected rather than allocated.
pub const MAX_EXPONENT: i64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variable {
    Z,
    T,
}

impl Variable {
    pub fn symbol(self) -> char {
        match self {
            Variable::Z => 'z',
            Variable::T => 't',
        }
    }
}

impl FromStr for Variable {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "z" | "Z" => Ok(Variable::Z),
            "t" | "T" => Ok(Variable::T),
            other => Err(format!("unknown variable {other:?}, expected z or t")),
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Syntax error at a 1-based character column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct SyntaxError {
    pub column: usize,
    pub message: String,
}

/// Failure to turn text into a Conway or Alexander polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("syntax error at {0}")]
    Syntax(#[from] SyntaxError),
    #[error("invalid polynomial: {0}")]
    Form(#[from] conway_core::Error),
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    var: Variable,
}

impl Lexer {
    fn new(text: &str, var: Variable) -> Self {
        Lexer {
            chars: text.chars().collect(),
            pos: 0,
            var,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// `Some(true)` for minus, `Some(false)` for plus.
    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-' | '\u{2212}') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn exponent(&mut self) -> Result<i64, SyntaxError> {
        let negative = self.sign().unwrap_or(false);
        let at = self.pos;
        let Some(text) = self.digits() else {
            return self.error("expected an exponent");
        };
        let value: i64 = match text.parse::<i64>() {
            Ok(v) if v <= MAX_EXPONENT => v,
            _ => {
                self.pos = at;
                return self.error(format!("exponent exceeds {MAX_EXPONENT}"));
            }
        };
        if negative && self.var == Variable::Z {
            self.pos = at;
            return self.error("negative exponents are only allowed for t");
        }
        Ok(if negative { -value } else { value })
    }

    fn power(&mut self) -> Result<Option<i64>, SyntaxError> {
        match self.peek() {
            Some(c) if c == self.var.symbol() => {
                self.pos += 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    return self.exponent().map(Some);
                }
                Ok(Some(1))
            }
            Some(c) if c.is_alphabetic() => self.error(format!("unexpected variable '{c}', expected '{}'", self.var)),
            _ => Ok(None),
        }
    }

    fn term(&mut self) -> Result<(i64, BigInt), SyntaxError> {
        let coeff = match self.digits() {
            Some(d) => Some(BigInt::from_str(&d).expect("ascii digits")),
            None => None,
        };
        if coeff.is_some() && self.peek() == Some('*') {
            self.pos += 1;
            return match self.power()? {
                Some(e) => Ok((e, coeff.unwrap_or_else(BigInt::one))),
                None => self.error(format!("expected '{}' after '*'", self.var)),
            };
        }
        match (coeff, self.power()?) {
            (Some(c), e) => Ok((e.unwrap_or(0), c)),
            (None, Some(e)) => Ok((e, BigInt::one())),
            (None, None) => match self.peek() {
                Some(c) => self.error(format!("unexpected '{c}'")),
                None => self.error("expected a term"),
            },
        }
    }

    fn polynomial(&mut self) -> Result<Vec<(i64, BigInt)>, SyntaxError> {
        let mut terms = Vec::new();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let (e, c) = self.term()?;
            terms.push((e, if negative { -c } else { c }));
            match self.peek() {
                None => return Ok(terms),
                Some(_) => match self.sign() {
                    Some(s) => negative = s,
                    None => {
                        let c = self.peek().expect("not at end");
                        return self.error(format!("expected '+' or '-', found '{c}'"));
                    }
                },
            }
        }
    }
}

/// Parses an expression in `var` into a Laurent polynomial.
pub fn parse_polynomial(text: &str, var: Variable) -> Result<LaurentPolynomial<BigInt>, SyntaxError> {
    let mut lexer = Lexer::new(text, var);
    let terms = lexer.polynomial()?;
    Ok(LaurentPolynomial::from_terms(terms))
}

/// Parses and validates a Conway polynomial in `z`.
pub fn parse_conway(text: &str) -> Result<ConwayPolynomial, InputError> {
    let laurent = parse_polynomial(text, Variable::Z)?;
    let high = laurent.high().unwrap_or(0);
    let poly = Polynomial::new((0..=high).map(|e| laurent.coeff(e)).collect());
    Ok(ConwayPolynomial::from_z_polynomial(&poly)?)
}

/// Parses an Alexander polynomial in `t`.
///
/// The Alexander polynomial is only defined up to multiplication by `±t^k`,
/// so the input is first centred and its sign fixed so that `A(1) = 1`.
pub fn parse_alexander(text: &str) -> Result<AlexanderPolynomial, InputError> {
    let laurent = parse_polynomial(text, Variable::T)?;
    Ok(AlexanderPolynomial::from_laurent(&normalize_alexander(&laurent))?)
}

/// Shifts `a` so its exponents are symmetric about 0 and flips the sign if
/// `a(1) = -1`. Inputs that cannot be normalized are returned unchanged.
pub fn normalize_alexander(a: &LaurentPolynomial<BigInt>) -> LaurentPolynomial<BigInt> {
    let (Some(low), Some(high)) = (a.low(), a.high()) else {
        return a.clone();
    };
    let span = low + high;
    let shifted = if span % 2 == 0 {
        LaurentPolynomial::from_terms(a.terms().map(|(e, c)| (e - span / 2, c.clone())))
    } else {
        a.clone()
    };
    let at_one = shifted.eval_one();
    if at_one.is_negative() && (-at_one).is_one() {
        -&shifted
    } else {
        shifted
    }
}
