//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants. Identifiers are variable
//! names (ASCII or Greek) or names supplied by the caller's resolver, which
//! is how group shorthands such as `a1` or `b3` are expanded.

use num_bigint::BigInt;

use super::{ExactError, Polynomial, Rational, VarId};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>, ExactError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                return Err(ExactError::Parse(format!(
                    "decimal literals are not allowed: {s:?}"
                )));
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Int(digits.parse().expect("ascii digits")));
        } else if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Token::Op(ch));
            i += 1;
        } else {
            return Err(ExactError::Parse(format!("unexpected character {ch:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    source: &'a str,
    resolve: &'a dyn Fn(&str) -> Option<Polynomial>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn error(&self, msg: &str) -> ExactError {
        ExactError::Parse(format!("{msg} in {:?}", self.source))
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ExactError> {
        let mut acc = self.term()?;
        loop {
            if self.eat_op('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_op('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ExactError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_op('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat_op('/') {
                let rhs = self.unary()?;
                let divisor = rhs
                    .as_constant()
                    .ok_or_else(|| self.error("division by a non-constant"))?;
                let inv = divisor.recip().map_err(|_| self.error("division by zero"))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ExactError> {
        if self.eat_op('-') {
            return Ok(-self.unary()?);
        }
        if self.eat_op('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ExactError> {
        let base = self.atom()?;
        if self.eat_op('^') {
            match self.peek().cloned() {
                Some(Token::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.error("exponent too large"))?;
                    if e > 64 {
                        return Err(self.error("exponent too large"));
                    }
                    Ok(base.pow(e))
                }
                _ => Err(self.error("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ExactError> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(
                    Rational::from_big(n, BigInt::from(1)).expect("unit denominator"),
                ))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if let Some(v) = VarId::from_name(&name) {
                    Ok(Polynomial::var(v))
                } else if let Some(p) = (self.resolve)(&name) {
                    Ok(p)
                } else {
                    Err(ExactError::UnknownSymbol(name))
                }
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat_op(')') {
                    return Err(self.error("missing ')'"));
                }
                Ok(inner)
            }
            Some(tok) => Err(self.error(&format!("unexpected token {tok:?}"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

pub(crate) fn parse_polynomial(
    s: &str,
    resolve: &dyn Fn(&str) -> Option<Polynomial>,
) -> Result<Polynomial, ExactError> {
    let tokens = tokenize(s)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        source: s,
        resolve,
    };
    let out = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(out)
}
