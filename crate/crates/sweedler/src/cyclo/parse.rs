//! Literal syntax for cyclotomic numbers.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr     := '-'? term (('+' | '-') term)*
//! term     := factor ('*'? factor)*
//! factor   := rational | 'i' | 'z' '(' uint ')' ('^' int)? | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! `i` is sugar for `z(4)`. A signed rational is accepted where a term begins
//! or directly after an explicit `*`; an implicit product never continues with
//! a sign, so `3 - 2` is always subtraction. The formatter emits one fixed
//! form per representation (ascending powers, `i` for conductor 4), and
//! parsing that form reproduces the value exactly.

use num::{One, Signed, Zero};

use super::{CycNumber, CycloError, Rational};

/// Parses a cyclotomic literal.
pub fn parse_cyc(text: &str) -> Result<CycNumber, CycloError> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.error("expected '+', '-', '*', or end of input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> CycloError {
        CycloError::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8, what: &str) -> Result<(), CycloError> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn expr(&mut self) -> Result<CycNumber, CycloError> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = acc.checked_add(&t)?;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = acc.checked_sub(&t)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<CycNumber, CycloError> {
        let mut acc = self.factor(true)?;
        loop {
            if self.eat(b'*') {
                let f = self.factor(true)?;
                acc = acc.checked_mul(&f)?;
            } else if matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == b'i' || c == b'z' || c == b'(')
            {
                let f = self.factor(false)?;
                acc = acc.checked_mul(&f)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self, allow_sign: bool) -> Result<CycNumber, CycloError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')', "expected ')'")?;
                Ok(inner)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(CycNumber::i())
            }
            Some(b'z') => {
                self.pos += 1;
                self.expect(b'(', "expected '(' after 'z'")?;
                let n = self.uint()?;
                if n == 0 {
                    return Err(self.error("root-of-unity order must be at least 1"));
                }
                self.expect(b')', "expected ')'")?;
                let k = if self.eat(b'^') { self.int()? } else { 1 };
                CycNumber::root_of_unity(n, k)
            }
            Some(b'-') if allow_sign => {
                self.pos += 1;
                self.skip_ws();
                let r = self.rational()?;
                Ok(CycNumber::from_rational(-r))
            }
            Some(c) if c.is_ascii_digit() => Ok(CycNumber::from_rational(self.rational()?)),
            _ => Err(self.error("expected a number, 'i', 'z(N)', or '('")),
        }
    }

    fn rational(&mut self) -> Result<Rational, CycloError> {
        let numerator = self.uint()?;
        if self.eat(b'/') {
            let at = self.pos;
            let denominator = self.uint()?;
            if denominator == 0 {
                return Err(CycloError::Parse {
                    position: at,
                    message: "zero denominator".to_string(),
                });
            }
            Ok(Rational::new(numerator.into(), denominator.into()))
        } else {
            Ok(Rational::from_integer(numerator.into()))
        }
    }

    fn uint(&mut self) -> Result<u64, CycloError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.bytes.get(self.pos).copied() {
            if !c.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(c - b'0')))
                .ok_or_else(|| CycloError::Parse {
                    position: start,
                    message: "number too large".to_string(),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        Ok(value)
    }

    fn int(&mut self) -> Result<i64, CycloError> {
        let negative = self.eat(b'-');
        if !negative {
            let _ = self.eat(b'+');
        }
        let magnitude = self.uint()?;
        let signed = i64::try_from(magnitude).map_err(|_| self.error("exponent too large"))?;
        Ok(if negative { -signed } else { signed })
    }
}

/// Canonical rendering: terms in ascending power order, `i` for conductor 4,
/// explicit `*` between a non-unit coefficient and its root symbol.
pub(super) fn format_cyc(value: &CycNumber) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let n = value.conductor();
    let mut out = String::new();
    for (j, coeff) in value.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let negative = coeff.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let magnitude = coeff.abs();
        if j == 0 {
            out.push_str(&format_rational(&magnitude));
            continue;
        }
        let symbol = if n == 4 {
            "i".to_string()
        } else if j == 1 {
            format!("z({n})")
        } else {
            format!("z({n})^{j}")
        };
        if magnitude.is_one() {
            out.push_str(&symbol);
        } else {
            out.push_str(&format_rational(&magnitude));
            out.push('*');
            out.push_str(&symbol);
        }
    }
    out
}

fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
