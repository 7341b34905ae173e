//! Expression language shared by scalar literals and the `dua eval` command.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' uint)*
//! atom   := int | 'lambda' | 'mu' | 'sqrt' '(' ['-'] int ')' | 'u' | 'w' | 'd'
//!         | '(' expr ')' | '-' factor
//! ```
//!
//! `*` is noncommutative and left-associative; `/` needs a scalar divisor.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::pbw::{NcPoly, PbwError, Presentation};
use crate::scalars::{Scalar, ScalarError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Lambda,
    Mu,
    Sqrt(BigInt),
    Symbol(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn has_symbol(&self) -> bool {
        match self {
            Expr::Symbol(_) => true,
            Expr::Int(_) | Expr::Lambda | Expr::Mu | Expr::Sqrt(_) => false,
            Expr::Neg(e) | Expr::Pow(e, _) => e.has_symbol(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.has_symbol() || b.has_symbol()
            }
        }
    }
}

/// Syntax error with a 1-based position and the tokens that would have been accepted.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: expected {}, found {found}", .expected.join(" | "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum EvalError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("symbol `{0}` is not a scalar")]
    NotScalar(char),
    #[error("division by a non-scalar expression")]
    NonScalarDivisor,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
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
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

const ATOM_START: &[&str] = &["integer", "lambda", "mu", "sqrt", "u", "w", "d", "(", "-"];

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Spanned {
                tok: Tok::Int(s.parse().expect("digits")),
                line: l0,
                column: c0,
            });
            continue;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Spanned {
                tok: Tok::Ident(s),
                line: l0,
                column: c0,
            });
            continue;
        } else {
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => {
                    return Err(ParseError {
                        line,
                        column,
                        expected: ATOM_START.iter().map(|s| s.to_string()).collect(),
                        found: format!("character `{other}`"),
                    })
                }
            }
        };
        out.push(Spanned {
            tok,
            line: l0,
            column: c0,
        });
        i += 1;
        column += 1;
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let s = &self.toks[self.pos];
        ParseError {
            line: s.line,
            column: s.column,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found: s.tok.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = if *self.peek() == Tok::Minus {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            match self.bump() {
                Tok::Int(n) => {
                    let e = n.to_u32().ok_or_else(|| {
                        self.pos -= 1;
                        self.error(&["exponent below 2^32"])
                    })?;
                    base = Expr::Pow(Box::new(base), e);
                }
                _ => {
                    self.pos -= 1;
                    return Err(self.error(&["unsigned integer exponent"]));
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&[")", "+", "-", "*", "/", "^"]));
                }
                self.bump();
                Ok(e)
            }
            Tok::Ident(s) => match s.as_str() {
                "lambda" => {
                    self.bump();
                    Ok(Expr::Lambda)
                }
                "mu" => {
                    self.bump();
                    Ok(Expr::Mu)
                }
                "u" | "w" | "d" => {
                    self.bump();
                    Ok(Expr::Symbol(s.chars().next().unwrap()))
                }
                "sqrt" => {
                    self.bump();
                    if *self.peek() != Tok::LParen {
                        return Err(self.error(&["("]));
                    }
                    self.bump();
                    let neg = if *self.peek() == Tok::Minus {
                        self.bump();
                        true
                    } else {
                        false
                    };
                    let Tok::Int(n) = self.peek().clone() else {
                        return Err(self.error(&["integer"]));
                    };
                    self.bump();
                    if *self.peek() != Tok::RParen {
                        return Err(self.error(&[")"]));
                    }
                    self.bump();
                    Ok(Expr::Sqrt(if neg { -n } else { n }))
                }
                _ => Err(self.error(ATOM_START)),
            },
            _ => Err(self.error(ATOM_START)),
        }
    }
}

/// Parses a full expression.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["+", "-", "*", "/", "^", "end of input"]));
    }
    Ok(e)
}

fn sqrt_scalar(n: &BigInt) -> Result<Scalar, EvalError> {
    let n = BigRational::from_integer(n.clone());
    let (k, d) = crate::scalars::rational_sqrt_parts(&n);
    if d == 1 {
        Ok(Scalar::from(k))
    } else {
        Ok(Scalar::quad(BigRational::from_integer(0.into()), k, d))
    }
}

/// Evaluates a symbol-free expression to a scalar.
pub fn eval_scalar(e: &Expr) -> Result<Scalar, EvalError> {
    Ok(match e {
        Expr::Int(n) => Scalar::from(BigRational::from_integer(n.clone())),
        Expr::Lambda => Scalar::lambda(),
        Expr::Mu => Scalar::mu(),
        Expr::Sqrt(n) => sqrt_scalar(n)?,
        Expr::Symbol(c) => return Err(EvalError::NotScalar(*c)),
        Expr::Neg(a) => eval_scalar(a)?.neg_ref(),
        Expr::Add(a, b) => eval_scalar(a)?.try_add(&eval_scalar(b)?)?,
        Expr::Sub(a, b) => eval_scalar(a)?.try_sub(&eval_scalar(b)?)?,
        Expr::Mul(a, b) => eval_scalar(a)?.try_mul(&eval_scalar(b)?)?,
        Expr::Div(a, b) => eval_scalar(a)?.try_div(&eval_scalar(b)?)?,
        Expr::Pow(a, n) => eval_scalar(a)?.pow(i64::from(*n))?,
    })
}

/// Parses a scalar literal such as `3/4`, `1/2 - 1/2*sqrt(5)` or `(lambda + mu)/lambda`.
pub fn parse_scalar(src: &str) -> Result<Scalar, EvalError> {
    eval_scalar(&parse_expr(src)?)
}

/// Evaluates an expression inside a presentation.
pub fn eval_poly(e: &Expr, pres: &Arc<Presentation>) -> Result<NcPoly, EvalError> {
    if !e.has_symbol() {
        let c = eval_scalar(e)?;
        pres.check_coefficient(&c)?;
        return Ok(NcPoly::constant(pres, c));
    }
    Ok(match e {
        Expr::Symbol(c) => NcPoly::generator_named(pres, &c.to_string())?,
        Expr::Neg(a) => eval_poly(a, pres)?.neg(),
        Expr::Add(a, b) => eval_poly(a, pres)?.try_add(&eval_poly(b, pres)?)?,
        Expr::Sub(a, b) => eval_poly(a, pres)?.try_sub(&eval_poly(b, pres)?)?,
        Expr::Mul(a, b) => eval_poly(a, pres)?.nc_mul(&eval_poly(b, pres)?)?,
        Expr::Div(a, b) => {
            if b.has_symbol() {
                return Err(EvalError::NonScalarDivisor);
            }
            let inv = eval_scalar(b)?.try_inv()?;
            pres.check_coefficient(&inv)?;
            eval_poly(a, pres)?.scale(&inv)?
        }
        Expr::Pow(a, n) => eval_poly(a, pres)?.pow(*n)?,
        Expr::Int(_) | Expr::Lambda | Expr::Mu | Expr::Sqrt(_) => unreachable!(),
    })
}

/// Parses and normalizes `src` in `pres`.
pub fn parse_poly(src: &str, pres: &Arc<Presentation>) -> Result<NcPoly, EvalError> {
    eval_poly(&parse_expr(src)?, pres)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_literals() {
        assert_eq!(parse_scalar("1/2 + 1/3").unwrap(), Scalar::ratio(5, 6));
        assert_eq!(parse_scalar("-3").unwrap(), Scalar::int(-3));
        let x = parse_scalar("(1 + sqrt(2))*(-1 + sqrt(2))").unwrap();
        assert!(x.is_one());
        let y = parse_scalar("(lambda^2 - mu^2)/(lambda - mu)").unwrap();
        assert_eq!(y, Scalar::lambda() + Scalar::mu());
        assert_eq!(parse_scalar("sqrt(8)").unwrap(), Scalar::int(2) * Scalar::sqrt_int(2));
    }

    #[test]
    fn positions_and_expected_sets() {
        let e = parse_expr("1 +\n  * u").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert!(e.expected.contains(&"lambda".to_string()));
        let e = parse_expr("(u + w").unwrap_err();
        assert_eq!(e.expected[0], ")");
        let e = parse_expr("u^x").unwrap_err();
        assert_eq!(e.column, 3);
        assert!(parse_expr("u $").is_err());
    }

    #[test]
    fn symbols_are_not_scalars() {
        assert_eq!(parse_scalar("2*u"), Err(EvalError::NotScalar('u')));
    }

    #[test]
    fn power_binds_tighter_than_product() {
        let e = parse_expr("2*u^3").unwrap();
        assert_eq!(
            e,
            Expr::Mul(
                Box::new(Expr::Int(2.into())),
                Box::new(Expr::Pow(Box::new(Expr::Symbol('u')), 3))
            )
        );
    }
}
