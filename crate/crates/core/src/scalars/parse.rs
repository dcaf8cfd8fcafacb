//! Recursive-descent parser for scalar literals.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*        left-associative
//! factor := atom ('^' sint)?
//! atom   := uint | 'z' | 'q' | '(' expr ')'
//! sint   := ['-'] uint
//! ```
//!
//! `z` is `ζ_n` and is only legal in `cyclotomic(n)`; `q` only in
//! `rational_function`. Juxtaposition (`2z`) is rejected.

use num_bigint::BigInt;

use super::{FieldTag, Rational, Scalar, ScalarError};

/// Parses `text` into an exact value of `field`. Error positions are 1-based columns.
pub fn parse_scalar(text: &str, field: FieldTag) -> Result<Scalar, ScalarError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        field,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty scalar"));
    }
    let v = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(&format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(v)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    field: FieldTag,
}

impl Parser {
    fn error(&self, message: &str) -> ScalarError {
        ScalarError::Parse {
            position: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn arith(&self, r: Result<Scalar, ScalarError>, at: usize) -> Result<Scalar, ScalarError> {
        r.map_err(|e| match e {
            ScalarError::DivisionByZero => ScalarError::Parse {
                position: at + 1,
                message: "division by zero".into(),
            },
            other => other,
        })
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let negate = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.try_add(&t)?;
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.try_sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.try_mul(&f)?;
                }
                Some('/') => {
                    let at = self.pos;
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.arith(acc.try_div(&f), at)?;
                }
                Some(c) if c.is_ascii_digit() || c == 'z' || c == 'q' || c == '(' => {
                    return Err(self.error("implicit multiplication is not allowed; use '*'"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            let at = self.pos;
            self.pos += 1;
            let e = self.sint()?;
            return self.arith(base.pow(e), at);
        }
        Ok(base)
    }

    fn sint(&mut self) -> Result<i64, ScalarError> {
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error("expected integer exponent"));
        }
        let v: i64 = digits.parse().map_err(|_| ScalarError::Parse {
            position: start + 1,
            message: "exponent too large".into(),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let n: BigInt = d.parse().expect("ascii digits");
                Ok(Scalar::from_rational(self.field, Rational::from_integer(n)))
            }
            Some('z') => match self.field {
                FieldTag::Cyclotomic(n) => {
                    self.pos += 1;
                    Ok(Scalar::zeta(n))
                }
                other => Err(self.error(&format!("'z' is not available in field {other}"))),
            },
            Some('q') => match self.field {
                FieldTag::RationalFunction => {
                    self.pos += 1;
                    Ok(Scalar::q_pow(1))
                }
                other => Err(self.error(&format!("'q' is not available in field {other}"))),
            },
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) => Err(self.error(&format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
