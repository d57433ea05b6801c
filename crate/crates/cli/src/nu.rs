//! Parser for input classes `ν` written as polynomials in the generators.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'N' integer | 'x' | '(' expr ')'
//! ```
//!
//! Division is only allowed by a non-zero constant, so `1/2*N2` and
//! `N2/2` both work. Whitespace is ignored.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use pekt::series::TruncSeries;
use pekt::{BigInt, Lambda, Partition, Rank1Element, Rational};
use thiserror::Error;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: usize = 256;

#[derive(Debug, Error, PartialEq)]
pub enum NuError {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("column {column}: the rank-one generator x cannot be mixed with power sums N_k")]
    MixedAlgebras { column: usize },
}

/// A parsed input class, in whichever algebra its generators belong to.
#[derive(Clone, Debug, PartialEq)]
pub enum ParsedNu {
    PowerSums(Lambda),
    Rank1(Rank1Element),
}

impl ParsedNu {
    pub fn max_weight(&self) -> Option<usize> {
        match self {
            ParsedNu::PowerSums(l) => l.max_weight(),
            ParsedNu::Rank1(l) => l.max_weight(),
        }
    }

    pub fn min_weight(&self) -> Option<usize> {
        match self {
            ParsedNu::PowerSums(l) => l.min_weight(),
            ParsedNu::Rank1(l) => l.min_weight(),
        }
    }
}

/// Parses `expr` into an element with the given weight cap and q-order.
///
/// Terms above `weight_cap` are dropped as soon as they appear.
pub fn parse_nu(expr: &str, weight_cap: usize, q_order: usize) -> Result<ParsedNu, NuError> {
    let tokens = tokenize(expr)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        weight_cap,
        kind: None,
    };
    let poly = p.expr()?;
    if let Some(t) = p.tokens.get(p.pos) {
        return Err(NuError::Parse {
            column: t.column,
            message: format!("unexpected {}", t.kind.describe()),
        });
    }
    let terms = poly
        .into_iter()
        .map(|(m, c)| (m, TruncSeries::constant(c, q_order)));
    Ok(match p.kind {
        Some(Kind::X) => ParsedNu::Rank1(Rank1Element::from_terms(terms, weight_cap, q_order)),
        _ => ParsedNu::PowerSums(Lambda::from_terms(terms, weight_cap, q_order)),
    })
}

#[derive(Clone, Debug, PartialEq)]
enum TokenKind {
    Int(BigInt),
    PowerSum(usize),
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Int(n) => format!("number {n}"),
            TokenKind::PowerSum(k) => format!("N{k}"),
            TokenKind::X => "x".into(),
            TokenKind::Plus => "'+'".into(),
            TokenKind::Minus => "'-'".into(),
            TokenKind::Star => "'*'".into(),
            TokenKind::Slash => "'/'".into(),
            TokenKind::Caret => "'^'".into(),
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    kind: TokenKind,
    column: usize,
    /// Column just past the token.
    end: usize,
}

fn tokenize(expr: &str) -> Result<Vec<Token>, NuError> {
    let chars: Vec<char> = expr.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(TokenKind::Plus),
            '-' | '\u{2212}' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '/' => Some(TokenKind::Slash),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            'x' => Some(TokenKind::X),
            _ => None,
        };
        if let Some(kind) = simple {
            i += 1;
            out.push(Token { kind, column, end: i + 1 });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token {
                kind: TokenKind::Int(digits.parse().expect("ascii digits")),
                column,
                end: i + 1,
            });
            continue;
        }
        if c == 'N' {
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let k: usize = match digits.parse() {
                Ok(k) if k >= 1 => k,
                _ => {
                    return Err(NuError::Parse {
                        column,
                        message: "N must be followed by a positive index, as in N2".into(),
                    })
                }
            };
            out.push(Token {
                kind: TokenKind::PowerSum(k),
                column,
                end: i + 1,
            });
            continue;
        }
        return Err(NuError::Parse {
            column,
            message: format!("unexpected character {c:?}"),
        });
    }
    Ok(out)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Kind {
    N,
    X,
}

/// Power-sum monomial ↦ coefficient; `x^e` is the monomial `(1^e)`.
type Poly = BTreeMap<Partition, Rational>;

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    weight_cap: usize,
    kind: Option<Kind>,
}

impl Parser {
    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    fn column(&self) -> usize {
        match self.tokens.get(self.pos) {
            Some(t) => t.column,
            None => self.tokens.last().map_or(1, |t| t.end),
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, NuError> {
        Err(NuError::Parse {
            column: self.column(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Poly, NuError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(TokenKind::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = add(acc, rhs);
                }
                Some(TokenKind::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = add(acc, scale(rhs, &-Rational::one()));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, NuError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(TokenKind::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = mul(&acc, &rhs, self.weight_cap);
                }
                Some(TokenKind::Slash) => {
                    self.pos += 1;
                    let column = self.column();
                    let rhs = self.unary()?;
                    let c = match as_constant(&rhs) {
                        Some(c) if !c.is_zero() => c,
                        Some(_) => {
                            return Err(NuError::Parse {
                                column,
                                message: "division by zero".into(),
                            })
                        }
                        None => {
                            return Err(NuError::Parse {
                                column,
                                message: "can only divide by a constant".into(),
                            })
                        }
                    };
                    acc = scale(acc, &(Rational::one() / c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, NuError> {
        if self.peek() == Some(&TokenKind::Minus) {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(scale(inner, &-Rational::one()));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, NuError> {
        let base = self.atom()?;
        if self.peek() != Some(&TokenKind::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let e = match self.peek() {
            Some(TokenKind::Int(e)) => match usize::try_from(e) {
                Ok(e) if e <= MAX_EXPONENT => e,
                _ => return self.error(format!("exponent must be at most {MAX_EXPONENT}")),
            },
            _ => return self.error("expected a non-negative integer exponent"),
        };
        self.pos += 1;
        let mut acc = constant(Rational::one());
        for _ in 0..e {
            acc = mul(&acc, &base, self.weight_cap);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Poly, NuError> {
        let column = self.column();
        let Some(kind) = self.peek().cloned() else {
            return self.error("unexpected end of input");
        };
        self.pos += 1;
        match kind {
            TokenKind::Int(n) => Ok(constant(Rational::from_integer(n))),
            TokenKind::PowerSum(k) => {
                self.claim(Kind::N, column)?;
                Ok(generator(vec![k], self.weight_cap))
            }
            TokenKind::X => {
                self.claim(Kind::X, column)?;
                Ok(generator(vec![1], self.weight_cap))
            }
            TokenKind::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&TokenKind::RParen) {
                    return self.error("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(NuError::Parse {
                column,
                message: format!("unexpected {}", other.describe()),
            }),
        }
    }

    fn claim(&mut self, kind: Kind, column: usize) -> Result<(), NuError> {
        match self.kind {
            Some(k) if k != kind => Err(NuError::MixedAlgebras { column }),
            _ => {
                self.kind = Some(kind);
                Ok(())
            }
        }
    }
}

fn constant(c: Rational) -> Poly {
    let mut p = Poly::new();
    if !c.is_zero() {
        p.insert(Partition::empty(), c);
    }
    p
}

fn generator(parts: Vec<usize>, weight_cap: usize) -> Poly {
    let m = Partition::new(parts).expect("single positive part");
    let mut p = Poly::new();
    if m.n() <= weight_cap {
        p.insert(m, Rational::one());
    }
    p
}

fn as_constant(p: &Poly) -> Option<Rational> {
    match p.len() {
        0 => Some(Rational::zero()),
        1 => p.get(&Partition::empty()).cloned(),
        _ => None,
    }
}

fn add(mut a: Poly, b: Poly) -> Poly {
    for (m, c) in b {
        let slot = a.entry(m).or_insert_with(Rational::zero);
        *slot += c;
    }
    a.retain(|_, c| !c.is_zero());
    a
}

fn scale(a: Poly, c: &Rational) -> Poly {
    if c.is_zero() {
        return Poly::new();
    }
    a.into_iter().map(|(m, x)| (m, x * c)).collect()
}

fn mul(a: &Poly, b: &Poly, weight_cap: usize) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            if ma.n() + mb.n() > weight_cap {
                continue;
            }
            let slot = out.entry(ma.union(mb)).or_insert_with(Rational::zero);
            *slot += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}
