//! Text forms: structure functions such as `-3*Q0^2 - 3*Q0 + 2`, and the
//! small cursor shared with the differential-operator parser.

use num::BigInt;

use crate::algebra::{structure_function, QuadraticAlgebraSpec};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poly::format_in;

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn starts_number(&mut self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_digit())
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a digit");
        }
        Ok(&self.src[start..self.pos])
    }

    pub(crate) fn uint(&mut self) -> Result<usize> {
        let at = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Parse {
            pos: at,
            msg: format!("integer {d} out of range"),
        })
    }

    /// `int ["/" int]`, unsigned.
    pub(crate) fn rational(&mut self) -> Result<Rational> {
        let numer: BigInt = self.digits()?.parse().expect("digits");
        if self.peek_raw() == Some('.') {
            return self.err("decimals are not accepted; write an exact fraction p/q");
        }
        if self.eat('/') {
            let at = self.pos;
            let denom: BigInt = self.digits()?.parse().expect("digits");
            if denom == BigInt::from(0) {
                return Err(Error::Parse {
                    pos: at,
                    msg: "zero denominator".into(),
                });
            }
            return Ok(Rational::new(numer, denom));
        }
        Ok(Rational::from(numer))
    }

    /// Leading `+`/`-` of a term: `Some(negative)`, or `None` at the first
    /// term when no sign is written.
    pub(crate) fn sign(&mut self, first: bool) -> Result<bool> {
        if self.eat('+') {
            Ok(false)
        } else if self.eat('-') {
            Ok(true)
        } else if first {
            Ok(false)
        } else {
            self.err("expected '+' or '-'")
        }
    }
}

/// Parses `expr := term (("+"|"-") term)*`, `term := [coef "*"] atom`,
/// `atom := "Q0^2" | "Q0" | rational`.
pub fn parse_spec(text: &str) -> Result<QuadraticAlgebraSpec> {
    let mut cur = Cursor::new(text);
    let mut coeffs = [Rational::zero(), Rational::zero(), Rational::zero()];
    if cur.at_end() {
        return cur.err("empty expression");
    }
    let mut first = true;
    while !cur.at_end() {
        let negative = cur.sign(first)?;
        first = false;
        let (mut c, power) = if cur.starts_number() {
            let r = cur.rational()?;
            if cur.eat('*') {
                (r, q0_power(&mut cur)?)
            } else {
                (r, 0)
            }
        } else {
            (Rational::one(), q0_power(&mut cur)?)
        };
        if negative {
            c = -c;
        }
        coeffs[power] += c;
    }
    let [c, b, a] = coeffs;
    Ok(QuadraticAlgebraSpec::new(a, b, c))
}

fn q0_power(cur: &mut Cursor) -> Result<usize> {
    if !cur.eat_str("Q0") {
        return cur.err("expected Q0, Q0^2 or a rational");
    }
    if !cur.eat('^') {
        return Ok(1);
    }
    let at = cur.pos();
    let p = cur.uint()?;
    if p > 2 {
        return Err(Error::Parse {
            pos: at,
            msg: format!("degree {p} exceeds 2"),
        });
    }
    Ok(p)
}

/// Canonical text form, e.g. `-3*Q0^2 - 3*Q0 + 2`.
pub fn print_spec(spec: &QuadraticAlgebraSpec) -> String {
    format_in(&structure_function(spec), "Q0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn spec(a: Rational, b: Rational, c: Rational) -> QuadraticAlgebraSpec {
        QuadraticAlgebraSpec::new(a, b, c)
    }

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn examples() {
        assert_eq!(parse_spec("-3*Q0^2 - 3*Q0 + 2").unwrap(), spec(r(-3), r(-3), r(2)));
        assert_eq!(parse_spec("2*Q0").unwrap(), spec(r(0), r(2), r(0)));
        assert_eq!(parse_spec("Q0^2 + Q0^2").unwrap(), spec(r(2), r(0), r(0)));
        assert_eq!(parse_spec("1/2 - 7/4*Q0").unwrap(), spec(r(0), q(-7, 4), q(1, 2)));
        assert_eq!(parse_spec("-Q0^2").unwrap(), spec(r(-1), r(0), r(0)));
        assert_eq!(parse_spec("  3*Q0^0 ").unwrap(), spec(r(0), r(0), r(3)));
    }

    #[test]
    fn errors_carry_positions() {
        let cases = [
            ("", 0),
            ("Q0^3", 3),
            ("2*", 2),
            ("Q0 Q0", 3),
            ("1.5*Q0", 1),
            ("1/0", 2),
            ("x", 0),
        ];
        for (text, pos) in cases {
            match parse_spec(text) {
                Err(Error::Parse { pos: p, .. }) => assert_eq!(p, pos, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn print_round_trip() {
        for s in [
            spec(r(-3), r(-3), r(2)),
            spec(r(0), r(2), r(0)),
            spec(r(0), r(0), r(0)),
            spec(q(1, 3), r(-1), q(-5, 7)),
        ] {
            let text = print_spec(&s);
            assert_eq!(parse_spec(&text).unwrap(), s, "{text}");
        }
        assert_eq!(print_spec(&spec(r(-3), r(-3), r(2))), "-3*Q0^2 - 3*Q0 + 2");
    }
}
