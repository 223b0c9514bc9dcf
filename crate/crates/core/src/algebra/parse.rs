//! Parser for the textual form printed by `Display`:
//! `q^2 + 1 + q^-2`, `-3*q^-1`, and `(num)/(den)` for rational functions.

use num_bigint::BigInt;

use super::{AlgebraError, LaurentPoly, RationalFunction};

fn err(input: &str, reason: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn exponent(&mut self) -> Result<i32, AlgebraError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let neg = self.eat(b'-');
        let d = self.digits().ok_or_else(|| err(self.src, "expected exponent"))?;
        let e: i32 = d.parse().map_err(|_| err(self.src, "exponent out of range"))?;
        Ok(if neg { -e } else { e })
    }

    /// One unsigned term: `7`, `q`, `q^-2`, `3*q^4`, `3q`.
    fn term(&mut self) -> Result<(i32, BigInt), AlgebraError> {
        self.skip_ws();
        let coeff = self.digits().map(|d| d.parse::<BigInt>().expect("digits parse"));
        self.skip_ws();
        let starred = self.eat(b'*');
        self.skip_ws();
        if self.eat(b'q') {
            let e = self.exponent()?;
            Ok((e, coeff.unwrap_or_else(|| BigInt::from(1))))
        } else if starred {
            Err(err(self.src, "expected 'q' after '*'"))
        } else {
            coeff
                .map(|c| (0, c))
                .ok_or_else(|| err(self.src, format!("unexpected input at byte {}", self.pos)))
        }
    }
}

pub(crate) fn parse_laurent(s: &str) -> Result<LaurentPoly, AlgebraError> {
    let mut cur = Cursor::new(s);
    let mut terms = Vec::new();
    cur.skip_ws();
    let mut neg = cur.eat(b'-');
    loop {
        let (e, c) = cur.term()?;
        terms.push((e, if neg { -c } else { c }));
        cur.skip_ws();
        if cur.eat(b'+') {
            neg = false;
        } else if cur.eat(b'-') {
            neg = true;
        } else {
            break;
        }
    }
    if cur.pos != cur.bytes.len() {
        return Err(err(s, format!("trailing input at byte {}", cur.pos)));
    }
    Ok(LaurentPoly::from_terms(terms))
}

fn strip_parens(s: &str) -> Option<&str> {
    s.trim().strip_prefix('(')?.strip_suffix(')')
}

pub(crate) fn parse_ratfn(s: &str) -> Result<RationalFunction, AlgebraError> {
    let t = s.trim();
    if let Some(idx) = t.find(")/(") {
        let num = strip_parens(&t[..=idx]).ok_or_else(|| err(s, "unbalanced numerator"))?;
        let den = strip_parens(&t[idx + 2..]).ok_or_else(|| err(s, "unbalanced denominator"))?;
        return RationalFunction::new(parse_laurent(num)?, parse_laurent(den)?);
    }
    let body = strip_parens(t).unwrap_or(t);
    Ok(RationalFunction::from(parse_laurent(body)?))
}
