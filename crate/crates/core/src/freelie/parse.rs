use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{LieExpr, LiePoly};
use crate::error::{Error, Result};

const MAX_VAR: usize = 255;

/// Parse a free Lie polynomial.
///
/// ```
/// use liemap_core::freelie::{parse, LieExpr};
/// let p = parse("[X1,X2]").unwrap();
/// assert_eq!(p.expr, LieExpr::bracket(LieExpr::Var(1), LieExpr::Var(2)));
/// ```
pub fn parse(text: &str) -> Result<LiePoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let expr = p.poly()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(LiePoly::new(expr))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn poly(&mut self) -> Result<LieExpr> {
        let mut terms = Vec::new();
        let mut bare = true;
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
            bare = false;
        }
        loop {
            let (coef, atom, had_coef) = self.term()?;
            bare &= !had_coef;
            terms.push((if negate { -coef } else { coef }, atom));
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => break,
            }
            self.pos += 1;
        }
        if bare && terms.len() == 1 {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(LieExpr::Sum(terms))
    }

    fn term(&mut self) -> Result<(BigRational, LieExpr, bool)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coef = self.coefficient()?;
                self.expect(b'*')?;
                Ok((coef, self.atom()?, true))
            }
            _ => Ok((BigRational::one(), self.atom()?, false)),
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            std::str::from_utf8(&self.src[start..self.pos]).ok()
        }
    }

    fn coefficient(&mut self) -> Result<BigRational> {
        let num: BigInt = self.digits().and_then(|s| s.parse().ok()).ok_or_else(|| self.error("expected coefficient"))?;
        if self.peek() != Some(b'/') {
            return Ok(BigRational::from_integer(num));
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let den: BigInt = self.digits().and_then(|s| s.parse().ok()).ok_or_else(|| self.error("expected denominator"))?;
        if den.is_zero() {
            return Err(Error::Syntax { offset: at, message: "zero denominator".into() });
        }
        Ok(BigRational::new(num, den))
    }

    fn atom(&mut self) -> Result<LieExpr> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let a = self.poly()?;
                self.expect(b',')?;
                let b = self.poly()?;
                self.expect(b']')?;
                Ok(LieExpr::bracket(a, b))
            }
            Some(b'(') => {
                self.pos += 1;
                let a = self.poly()?;
                self.expect(b')')?;
                Ok(a)
            }
            Some(c @ (b'X' | b'Y' | b'Z' | b'T')) => {
                let start = self.pos;
                self.pos += 1;
                let alias = match c {
                    b'X' => 1,
                    b'Y' => 2,
                    b'Z' => 3,
                    _ => 4,
                };
                match self.digits() {
                    None => Ok(LieExpr::Var(alias)),
                    Some(_) if c != b'X' => Err(Error::Syntax { offset: start, message: "only X takes an index".into() }),
                    Some(d) => match d.parse::<usize>() {
                        Ok(0) => Err(Error::Syntax { offset: start, message: "variable index 0".into() }),
                        Ok(i) if i <= MAX_VAR => Ok(LieExpr::Var(i)),
                        _ => Err(Error::Syntax { offset: start, message: "variable index too large".into() }),
                    },
                }
            }
            None => Err(self.error("unexpected end of input")),
            Some(_) => Err(self.error("expected variable, '[' or '('")),
        }
    }
}
