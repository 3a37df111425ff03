//! Reader for the textual rational-function grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/')? factor)*      juxtaposition multiplies: 2q
//! factor := '-' factor | atom ('^' int)?
//! atom   := integer | 'q' | '(' expr ')'
//! int    := ['-'] digits | '(' ['-'] digits ')'
//! ```
//!
//! Everything the printer emits (`q^2+1`, `(q-q^-1)/(q^2+1)`, `-3/2*q^-4`)
//! is accepted.

use num_bigint::BigInt;

use super::laurent::{Coeff, LaurentPoly};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let mut p = Parser {
        chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    if p.chars.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!(
            "unexpected '{}' at offset {} in {s:?}",
            p.chars[p.pos], p.pos
        )));
    }
    Ok(v)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                acc = acc.div(&self.factor()?)?;
            } else if matches!(self.peek(), Some('q' | '(')) || self.peek().is_some_and(|c| c.is_ascii_digit()) {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        if self.eat('-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.exponent()?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let digits = self.digits()?;
        if paren && !self.eat(')') {
            return Err(self.err("expected ')' after exponent"));
        }
        let v: i64 = digits.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some('q') => {
                self.pos += 1;
                Ok(RatFunc::q_pow(1))
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                let n: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
                Ok(RatFunc::from(LaurentPoly::constant(Coeff::from_integer(n))))
            }
            Some(c) => Err(self.err(&format!("unexpected '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_printer_output() {
        let r = parse_ratfunc("(q^2+1)/(q)").unwrap();
        assert_eq!(r.to_string(), "q+q^-1");
        let s = parse_ratfunc("(q-q^-1)/(q^2+1)").unwrap();
        assert_eq!(parse_ratfunc(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn parses_exponent_forms() {
        assert_eq!(parse_ratfunc("q^-1").unwrap(), RatFunc::q_pow(-1));
        assert_eq!(parse_ratfunc("q^(-2)").unwrap(), RatFunc::q_pow(-2));
        assert_eq!(parse_ratfunc("2q").unwrap(), RatFunc::from(2) * RatFunc::q_pow(1));
        assert_eq!(parse_ratfunc("-3/2*q^-4").unwrap().to_string(), "-3/2*q^-4");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratfunc("").is_err());
        assert!(parse_ratfunc("q^").is_err());
        assert!(parse_ratfunc("x").is_err());
        assert!(parse_ratfunc("(q+1").is_err());
        assert_eq!(parse_ratfunc("1/(q-q)"), Err(Error::DivisionByZero));
    }
}
