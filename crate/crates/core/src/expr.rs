//! Text syntax for algebra elements.
//!
//! ```text
//! expr     := ['-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' ['-'] integer)?
//! atom     := 'x' | 'y' | 'g' | 'gi' | 'xi' | 'u' | 'v' | rational | '(' expr ')'
//! rational := integer ('/' positive-integer)?
//! ```
//!
//! Whitespace is ignored. Negative exponents are accepted on `g` and `gi`
//! only.

use crate::algebra::{multiply, AlgebraElement, Generator, PbwMonomial};
use crate::linalg::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Gen(Generator),
    Pow(Box<Expr>, i64),
    Product(Vec<Expr>),
    /// Terms with their signs (`true` = negated).
    Sum(Vec<(bool, Expr)>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&(_, c)) = it.peek().filter(|(_, c)| c.is_ascii_alphanumeric()) {
                s.push(c);
                it.next();
            }
            out.push((Tok::Ident(s), i));
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, c)) = it.peek().filter(|(_, c)| c.is_ascii_digit()) {
                s.push(c);
                it.next();
            }
            out.push((Tok::Int(s.parse().expect("digits")), i));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            it.next();
        } else {
            return Err(ParseError { offset: i, message: format!("unexpected character '{c}'") });
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![(self.eat('-'), self.term()?)];
        loop {
            if self.eat('+') {
                terms.push((false, self.term()?));
            } else if self.eat('-') {
                terms.push((true, self.term()?));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 && !terms[0].0 { terms.pop().unwrap().1 } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let atom = self.atom()?;
        if !self.eat('^') {
            return Ok(atom);
        }
        let start = self.offset();
        let neg = self.eat('-');
        let Tok::Int(k) = self.peek().clone() else {
            return self.error("expected integer exponent");
        };
        let k: i64 = match i64::try_from(k) {
            Ok(k) if k <= u32::MAX as i64 => k,
            _ => return self.error("exponent too large"),
        };
        self.bump();
        if neg && !matches!(atom, Expr::Gen(Generator::G | Generator::GInv)) {
            return Err(ParseError {
                offset: start,
                message: "negative exponent is only allowed on g and gi".into(),
            });
        }
        Ok(Expr::Pow(Box::new(atom), if neg { -k } else { k }))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => match Generator::from_name(&name) {
                Some(g) => {
                    self.bump();
                    Ok(Expr::Gen(g))
                }
                None => self.error(format!("unknown generator '{name}' (expected x, y, g, gi, xi, u, v)")),
            },
            Tok::Int(n) => {
                self.bump();
                if !self.eat('/') {
                    return Ok(Expr::Num(Rational::from_integer(n)));
                }
                match self.peek().clone() {
                    Tok::Int(d) if !d.is_zero() => {
                        self.bump();
                        Ok(Expr::Num(Rational::new(n, d)))
                    }
                    Tok::Int(_) => self.error("zero denominator"),
                    _ => self.error("expected positive integer denominator"),
                }
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                Ok(e)
            }
            Tok::End => self.error("unexpected end of input"),
            Tok::Sym(c) => self.error(format!("unexpected '{c}'")),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

impl Expr {
    /// PBW normal form of the expression.
    pub fn evaluate(&self) -> AlgebraElement {
        match self {
            Expr::Num(c) => AlgebraElement::scalar(c.clone()),
            Expr::Gen(g) => AlgebraElement::generator(*g),
            Expr::Pow(base, k) => match (base.as_ref(), *k) {
                (Expr::Gen(Generator::G), k) => g_power(k),
                (Expr::Gen(Generator::GInv), k) => g_power(-k),
                (b, k) => {
                    let b = b.evaluate();
                    (0..k).fold(AlgebraElement::one(), |acc, _| multiply(&acc, &b))
                }
            },
            Expr::Product(fs) => {
                fs.iter().fold(AlgebraElement::one(), |acc, f| multiply(&acc, &f.evaluate()))
            }
            Expr::Sum(ts) => {
                let mut out = AlgebraElement::zero();
                for (neg, t) in ts {
                    let c = if *neg { -Rational::one() } else { Rational::one() };
                    out.add_scaled(&t.evaluate(), &c);
                }
                out
            }
        }
    }
}

fn g_power(k: i64) -> AlgebraElement {
    AlgebraElement::monomial(PbwMonomial::new(0, 0, k, 0, 0, 0))
}

/// Parses and normalizes in one step.
pub fn evaluate(text: &str) -> Result<AlgebraElement, ParseError> {
    parse(text).map(|e| e.evaluate())
}
