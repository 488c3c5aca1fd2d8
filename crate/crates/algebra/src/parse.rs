//! A small expression parser for polynomials over Q(i).
//!
//! Accepts `+ - * / ^`, parentheses, decimal integers, the imaginary unit
//! `i`, and variable names from the frame. Juxtaposition acts as
//! multiplication (`2i`, `(1-i)x2`), so printed equations can be embedded
//! nearly verbatim. Division requires a constant divisor.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::AlgebraError;
use crate::gaussian::GaussianRational;
use crate::monomial::VariableFrame;
use crate::poly::SparsePolynomial;

#[derive(Debug, Clone, PartialEq)]
enum Token {
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

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self { src: src.as_bytes(), pos: 0 }
    }

    fn next_token(&mut self) -> Result<Token, AlgebraError> {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Token::End);
        }
        let c = self.src[self.pos] as char;
        self.pos += 1;
        match c {
            '+' => Ok(Token::Plus),
            '-' | '−' => Ok(Token::Minus),
            '*' => Ok(Token::Star),
            '/' => Ok(Token::Slash),
            '^' => Ok(Token::Caret),
            '(' => Ok(Token::LParen),
            ')' => Ok(Token::RParen),
            '0'..='9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && (self.src[self.pos] as char).is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(Token::Int(s.parse().unwrap()))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() {
                    let ch = self.src[self.pos] as char;
                    if ch.is_ascii_alphanumeric() || ch == '_' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(Token::Ident(s.to_string()))
            }
            other => Err(AlgebraError::Parse(format!("unexpected character '{other}'"))),
        }
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    frame: Arc<VariableFrame>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<SparsePolynomial, AlgebraError> {
        let mut acc = match self.peek() {
            Token::Minus => {
                self.bump();
                self.term()?.neg()
            }
            Token::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Token::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Token::Int(_) | Token::Ident(_) | Token::LParen)
    }

    fn term(&mut self) -> Result<SparsePolynomial, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Token::Star => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Token::Slash => {
                    self.bump();
                    let f = self.factor()?;
                    let c = constant_of(&f)?;
                    if c.is_zero() {
                        return Err(AlgebraError::Parse("division by zero".into()));
                    }
                    acc = acc.scale(&c.inv());
                }
                _ if self.starts_factor() => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<SparsePolynomial, AlgebraError> {
        let base = self.atom()?;
        if matches!(self.peek(), Token::Caret) {
            self.bump();
            match self.bump() {
                Token::Int(e) => {
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| AlgebraError::Parse("bad exponent".into()))?;
                    Ok(base.pow(e))
                }
                other => Err(AlgebraError::Parse(format!("expected exponent, got {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<SparsePolynomial, AlgebraError> {
        match self.bump() {
            Token::Int(v) => Ok(SparsePolynomial::constant(
                self.frame.clone(),
                GaussianRational::from_int(v),
            )),
            Token::Ident(name) => {
                if let Some(idx) = self.frame.index_of(&name) {
                    Ok(SparsePolynomial::variable(self.frame.clone(), idx))
                } else if name == "i" {
                    Ok(SparsePolynomial::constant(
                        self.frame.clone(),
                        GaussianRational::i(),
                    ))
                } else {
                    Err(AlgebraError::Parse(format!("unknown variable '{name}'")))
                }
            }
            Token::Minus => Ok(self.factor()?.neg()),
            Token::LParen => {
                let e = self.expr()?;
                match self.bump() {
                    Token::RParen => Ok(e),
                    other => Err(AlgebraError::Parse(format!("expected ')', got {other:?}"))),
                }
            }
            other => Err(AlgebraError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn constant_of(p: &SparsePolynomial) -> Result<GaussianRational, AlgebraError> {
    if p.is_zero() {
        return Ok(GaussianRational::zero());
    }
    if p.num_terms() == 1 && p.terms()[0].0.is_one() {
        return Ok(p.terms()[0].1.clone());
    }
    Err(AlgebraError::Parse("expected a constant".into()))
}

/// Parse an expression into a polynomial over the frame.
pub fn parse_polynomial(
    frame: &Arc<VariableFrame>,
    src: &str,
) -> Result<SparsePolynomial, AlgebraError> {
    let mut lexer = Lexer::new(src);
    let mut tokens = Vec::new();
    loop {
        let t = lexer.next_token()?;
        let end = t == Token::End;
        tokens.push(t);
        if end {
            break;
        }
    }
    let mut parser = Parser { tokens, pos: 0, frame: frame.clone() };
    let p = parser.expr()?;
    if *parser.peek() != Token::End {
        return Err(AlgebraError::Parse(format!(
            "trailing input at token {:?}",
            parser.peek()
        )));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_paper_style_expressions() {
        let f = VariableFrame::numbered("y", 7);
        let p = parse_polynomial(&f, "7y1 + y2 + y3 - (2 + 3i) y4 - (2 + 3i) y5 + y6 + y7").unwrap();
        assert_eq!(p.num_terms(), 7);
        let q = parse_polynomial(
            &f,
            "7*y1 + y2 + y3 - (2+3i)*y4 - (2+3i)*y5 + y6 + y7",
        )
        .unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn halves_and_powers() {
        let f = VariableFrame::numbered("u", 2);
        let p = parse_polynomial(&f, "1/2(1+3i) u1 - u2^2").unwrap();
        assert_eq!(p.num_terms(), 2);
        let c = &p
            .terms()
            .iter()
            .find(|(m, _)| m.total_degree() == 1)
            .unwrap()
            .1;
        assert_eq!(c, &GaussianRational::from_parts(1, 3, 2));
    }

    #[test]
    fn rejects_unknowns() {
        let f = VariableFrame::numbered("x", 2);
        assert!(parse_polynomial(&f, "x1 + w").is_err());
        assert!(parse_polynomial(&f, "x1 / x2").is_err());
    }
}
