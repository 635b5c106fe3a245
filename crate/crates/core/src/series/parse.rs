//! A small expression reader for polynomials written the way they are
//! printed in tables: implicit products, `^` powers, parentheses.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{Coeff, SeriesError, TruncatedSeries, Vars};

pub(super) fn parse(
    vars: &Arc<Vars>,
    order: i32,
    text: &str,
) -> Result<TruncatedSeries, SeriesError> {
    let tokens: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser {
        vars,
        order,
        tokens,
        pos: 0,
    };
    let s = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("trailing input"));
    }
    Ok(s)
}

struct Parser<'a> {
    vars: &'a Arc<Vars>,
    order: i32,
    tokens: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> SeriesError {
        SeriesError::Parse(format!("{what} at position {}", self.pos))
    }

    fn expr(&mut self) -> Result<TruncatedSeries, SeriesError> {
        let mut acc = TruncatedSeries::zero(self.vars, self.order);
        let mut sign = 1;
        if let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            sign = if c == '-' { -1 } else { 1 };
        }
        loop {
            let t = self.product()?;
            acc = if sign < 0 { acc - t } else { acc + t };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<TruncatedSeries, SeriesError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() => acc = acc * self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<TruncatedSeries, SeriesError> {
        let start = self.pos;
        let (base, var) = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        let k = self.integer()?;
        let k: i32 = k.try_into().map_err(|_| self.error("exponent too large"))?;
        match (var, negative) {
            (Some(name), _) => {
                let k = if negative { -k } else { k };
                TruncatedSeries::monomial(
                    self.vars,
                    self.order,
                    Coeff::from_integer(1.into()),
                    &[(&name, k)],
                )
            }
            (None, false) => Ok(base.pow(k as u32)),
            (None, true) => {
                self.pos = start;
                Err(self.error("negative power of a compound expression"))
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt, SeriesError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.tokens[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.error("bad number"))
    }

    fn atom(&mut self) -> Result<(TruncatedSeries, Option<String>), SeriesError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok((inner, None))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let value = if self.peek() == Some('/') {
                    self.pos += 1;
                    Coeff::new(n, self.integer()?)
                } else {
                    Coeff::from_integer(n)
                };
                Ok((
                    TruncatedSeries::constant(self.vars, self.order, value),
                    None,
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let rest: String = self.tokens[self.pos..].iter().collect();
                let name = self
                    .vars
                    .names()
                    .iter()
                    .filter(|n| rest.starts_with(n.as_str()))
                    .max_by_key(|n| n.len())
                    .cloned()
                    .ok_or_else(|| self.error("unknown variable"))?;
                self.pos += name.chars().count();
                Ok((
                    TruncatedSeries::var(self.vars, self.order, &name)?,
                    Some(name),
                ))
            }
            _ => Err(self.error("unexpected token")),
        }
    }
}
