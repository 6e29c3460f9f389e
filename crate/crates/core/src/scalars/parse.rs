//! Small expression parser for elements of Q(q), e.g. `q^-1/(1-q^{-2})` or `(q+q^-1)*2q^3`.

use num_bigint::BigInt;

use super::rational::RationalQ;
use crate::error::Error;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalQ, Error> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalQ, Error> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d)?;
                }
                Some(c) if c == b'q' || c == b'(' || c.is_ascii_digit() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalQ, Error> {
        if self.eat(b'-') {
            Ok(-&self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RationalQ, Error> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            if e >= 0 {
                Ok(base.pow(e as u32))
            } else {
                Ok(base.inv()?.pow((-e) as u32))
            }
        } else {
            Ok(base)
        }
    }

    fn exponent(&mut self) -> Result<i64, Error> {
        let close = if self.eat(b'{') {
            Some(b'}')
        } else if self.eat(b'(') {
            Some(b')')
        } else {
            None
        };
        let neg = self.eat(b'-');
        let v = self.integer()?;
        let v: i64 = v.try_into().map_err(|_| self.err("exponent too large"))?;
        if let Some(c) = close {
            if !self.eat(c) {
                return Err(self.err("unclosed exponent"));
            }
        }
        Ok(if neg { -v } else { v })
    }

    fn integer(&mut self) -> Result<BigInt, Error> {
        self.peek();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn atom(&mut self) -> Result<RationalQ, Error> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(RationalQ::q_pow(1))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(RationalQ::from_int(self.integer()?)),
            _ => Err(self.err("unexpected token")),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<RationalQ, Error> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        let a = parse_rational("q^{-1}/(1-q^{-2})").unwrap();
        let b = parse_rational("q^-1/(1-q^-2)").unwrap();
        assert_eq!(a, b);
        let c = parse_rational("2q^3 - q").unwrap();
        assert_eq!(c.to_string(), "-q+2q^3");
        assert!(parse_rational("1/(q-q)").is_err());
        assert!(parse_rational("q^").is_err());
        assert_eq!(parse_rational("(q+q^-1)^2").unwrap().to_string(), "q^-2+2+q^2");
    }
}
