//! Tokenizer and expression parser shared by the two polynomial types.
//!
//! Grammar: a sum of signed terms; a term is an optional rational coefficient
//! (`integer` or `integer/integer`) and `*`-separated variable powers `v^e`.
//! Whitespace is insignificant. Parenthesized subexpressions are accepted as a
//! superset of that grammar (with `^` applying to them too), which keeps
//! transcribed formulas readable in tests. `/` is only valid between integers.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let pos = i;
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => toks.push(Token {
                tok: Tok::Plus,
                pos,
            }),
            b'-' => toks.push(Token {
                tok: Tok::Minus,
                pos,
            }),
            b'*' => toks.push(Token {
                tok: Tok::Star,
                pos,
            }),
            b'^' => toks.push(Token {
                tok: Tok::Caret,
                pos,
            }),
            b'/' => toks.push(Token {
                tok: Tok::Slash,
                pos,
            }),
            b'(' => toks.push(Token {
                tok: Tok::LParen,
                pos,
            }),
            b')' => toks.push(Token {
                tok: Tok::RParen,
                pos,
            }),
            b'0'..=b'9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let n: BigInt = text[i..j].parse().expect("digit run");
                toks.push(Token {
                    tok: Tok::Int(n),
                    pos,
                });
                i = j;
                continue;
            }
            _ if b.is_ascii_alphabetic() => {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                    j += 1;
                }
                toks.push(Token {
                    tok: Tok::Ident(text[i..j].to_string()),
                    pos,
                });
                i = j;
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("unexpected character {:?}", b as char),
                })
            }
        }
        i += 1;
    }
    Ok(toks)
}

/// The polynomial operations the parser needs from its target type.
pub(crate) trait ParseTarget: Sized + Clone {
    fn from_rational(q: BigRational) -> Self;
    fn variable(id: u32) -> Self;
    fn p_add(&self, rhs: &Self) -> Self;
    fn p_mul(&self, rhs: &Self) -> Self;
    fn p_neg(&self) -> Self;
}

fn pow_of<P: ParseTarget>(base: &P, e: u32) -> P {
    let mut acc = P::from_rational(BigRational::one());
    for _ in 0..e {
        acc = acc.p_mul(base);
    }
    acc
}

struct Parser<'a, P: ParseTarget> {
    toks: Vec<Token>,
    at: usize,
    resolve: &'a dyn Fn(&str) -> Option<u32>,
    end: usize,
    _marker: std::marker::PhantomData<P>,
}

impl<'a, P: ParseTarget> Parser<'a, P> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.pos).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.tok.clone());
        self.at += 1;
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<P> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.p_add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.p_add(&self.term()?.p_neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<P> {
        let mut negate = false;
        while let Some(t) = self.peek() {
            match t {
                Tok::Minus => {
                    negate = !negate;
                    self.bump();
                }
                Tok::Plus => {
                    self.bump();
                }
                _ => break,
            }
        }
        let mut acc = self.primary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.p_mul(&self.primary()?);
                }
                // Juxtaposition like "3x0" or "2(...)": multiplication.
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.p_mul(&self.primary()?);
                }
                _ => break,
            }
        }
        Ok(if negate { acc.p_neg() } else { acc })
    }

    fn primary(&mut self) -> Result<P> {
        let base = match self.bump() {
            Some(Tok::Int(n)) => {
                // Integer, possibly "n/d".
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if num::Zero::is_zero(&d) {
                                return self.fail("zero denominator");
                            }
                            return Ok(P::from_rational(BigRational::new(n, d)));
                        }
                        _ => return self.fail("expected integer after '/'"),
                    }
                }
                P::from_rational(BigRational::from_integer(n))
            }
            Some(Tok::Ident(name)) => match (self.resolve)(&name) {
                Some(id) => P::variable(id),
                None => return self.fail(format!("unknown variable {name:?}")),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => inner,
                    _ => return self.fail("expected ')'"),
                }
            }
            other => {
                return self.fail(format!(
                    "expected a term, found {}",
                    match other {
                        Some(t) => format!("{t:?}"),
                        None => "end of input".to_string(),
                    }
                ))
            }
        };
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            match self.bump() {
                Some(Tok::Int(e)) => {
                    let e: u32 = e.try_into().map_err(|_| Error::Parse {
                        position: self.pos(),
                        message: "exponent too large".into(),
                    })?;
                    return Ok(pow_of(&base, e));
                }
                _ => return self.fail("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }
}

/// Parses `text` into `P`, resolving variable names through `resolve`.
pub(crate) fn parse_expression<P: ParseTarget>(
    text: &str,
    resolve: &dyn Fn(&str) -> Option<u32>,
) -> Result<P> {
    let toks = tokenize(text)?;
    let mut parser = Parser::<P> {
        toks,
        at: 0,
        resolve,
        end: text.len(),
        _marker: std::marker::PhantomData,
    };
    let value = parser.expr()?;
    if parser.at != parser.toks.len() {
        return parser.fail("trailing input");
    }
    Ok(value)
}
