//! Recursive-descent parser for scalar expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := ['-'] atom ['^' nonneg-integer]
//! atom   := integer | parameter-name | '(' expr ')'
//! ```
//!
//! Whitespace between tokens is ignored. A leading minus binds looser than
//! `^`, so `-2^2` is `-4`.

use super::{Field, ParamScalar, Poly, Rational};
use num_bigint::BigInt;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownParameter(String),
    DivisionByZero,
}

/// Parse failure with the byte offset it was detected at.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error at offset {}: {msg}", self.offset),
            ParseErrorKind::UnknownParameter(name) => {
                write!(f, "unknown parameter '{name}' at offset {}", self.offset)
            }
            ParseErrorKind::DivisionByZero => {
                write!(f, "division by zero at offset {}", self.offset)
            }
        }
    }
}

/// Parse `text` into a canonical scalar. `allowed_param` names the only
/// identifier that may appear.
pub fn parse_scalar(text: &str, allowed_param: Option<&str>) -> Result<ParamScalar, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        param: allowed_param,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    param: Option<&'a str>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            kind: ParseErrorKind::Syntax(msg.into()),
            offset: self.pos,
        }
    }

    fn expr(&mut self) -> Result<ParamScalar, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<ParamScalar, ParseError> {
        let mut acc = self.factor()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.factor()?;
            acc = if op == b'*' {
                acc.mul(&rhs)
            } else {
                acc.div(&rhs).ok_or(ParseError {
                    kind: ParseErrorKind::DivisionByZero,
                    offset: at,
                })?
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ParamScalar, ParseError> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut value = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.syntax("expected non-negative integer exponent"));
            }
            let k: u32 = digits.parse().map_err(|_| ParseError {
                kind: ParseErrorKind::Syntax("exponent too large".into()),
                offset: start,
            })?;
            value = value.pow(k);
        }
        Ok(if negate { value.neg() } else { value })
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<ParamScalar, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(ParamScalar::from_rational(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if self.param == Some(name) {
                    Ok(ParamScalar::from_poly(Poly::x()))
                } else {
                    Err(ParseError {
                        kind: ParseErrorKind::UnknownParameter(name.to_string()),
                        offset: start,
                    })
                }
            }
            Some(c) => Err(self.syntax(format!("unexpected '{}'", c as char))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    #[test]
    fn literal() {
        assert_eq!(parse_scalar("-5/4", None).unwrap(), rat(-5, 4));
        assert_eq!(parse_scalar(" 12 ", None).unwrap(), int(12));
        assert_eq!(parse_scalar("-2^2", None).unwrap(), int(-4));
        assert_eq!(parse_scalar("(-2)^2", None).unwrap(), int(4));
        assert_eq!(parse_scalar("2^0", None).unwrap(), int(1));
    }

    #[test]
    fn parameterized_simplifies() {
        let s = parse_scalar("-8/h + 1/2", Some("h")).unwrap();
        // (h - 16) / (2h)
        let expected = ParamScalar::new(
            Poly::from_coeffs(vec![int(-16), int(1)]),
            Poly::from_coeffs(vec![int(0), int(2)]),
        )
        .unwrap();
        assert_eq!(s, expected);
        for t in [int(2), int(-4)] {
            let direct = int(-8) / &t + rat(1, 2);
            assert_eq!(s.eval(&t).unwrap(), direct);
        }
        assert_eq!(s.to_expr("h"), "(1/2*h - 8)/h");
    }

    #[test]
    fn syntax_errors_report_offset() {
        let e = parse_scalar("(x", Some("x")).unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        assert_eq!(parse_scalar("1 +", None).unwrap_err().offset, 3);
        assert_eq!(parse_scalar("1 2", None).unwrap_err().offset, 2);
        assert_eq!(parse_scalar("2^", None).unwrap_err().offset, 2);
        assert_eq!(parse_scalar("2^-1", None).unwrap_err().offset, 2);
    }

    #[test]
    fn unknown_parameter() {
        let e = parse_scalar("1 + k", Some("h")).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownParameter("k".into()));
        assert_eq!(e.offset, 4);
        assert!(parse_scalar("h", None).is_err());
    }

    #[test]
    fn division_by_zero_polynomial() {
        let e = parse_scalar("1/(h - h)", Some("h")).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DivisionByZero);
        assert_eq!(e.offset, 1);
    }
}
