//! Parser for the canonical polynomial text format.
//!
//! The grammar is exactly what [`Poly`]'s `Display` emits:
//!
//! ```text
//! poly   := "0" | [sign] term { sign term }
//! term   := coeff [ "*" factors ] | factors
//! factor := var [ "^" uint ]
//! var    := "z" | "lam" | "t" | "X" | "Y" | "p" uint | "H[" int "," int "]"
//! coeff  := uint [ "/" uint ]
//! ```

use crate::poly::{Monomial, Poly};
use crate::rat::{rat, Rational};
use crate::var::VarId;
use num::bigint::BigInt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
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

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.uint()?;
        Ok(if neg { -n } else { n })
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

/// Parses the canonical text format produced by `Poly::to_string`.
pub fn parse_poly(src: &str) -> Result<Poly, ParseError> {
    let mut lx = Lexer::new(src);
    let mut out = Poly::zero();
    let mut first = true;
    loop {
        let sign = match lx.peek() {
            None if first => return Err(lx.err("empty input")),
            None => break,
            Some(b'+') => {
                lx.bump();
                rat(1)
            }
            Some(b'-') => {
                lx.bump();
                rat(-1)
            }
            Some(_) if first => rat(1),
            Some(c) => return Err(lx.err(format!("expected '+' or '-', found '{}'", c as char))),
        };
        first = false;
        let (c, m) = parse_term(&mut lx)?;
        out.add_term(c * sign, m);
    }
    Ok(out)
}

fn parse_term(lx: &mut Lexer) -> Result<(Rational, Monomial), ParseError> {
    let mut coeff = rat(1);
    let mut mono = Monomial::one();
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = lx.uint()?;
                let r = if lx.peek() == Some(b'/') {
                    lx.bump();
                    let d = lx.uint()?;
                    Rational::new(n, d)
                } else {
                    Rational::from_integer(n)
                };
                coeff *= r;
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let v = parse_var(lx)?;
                let e = if lx.peek() == Some(b'^') {
                    lx.bump();
                    let n = lx.uint()?;
                    u32::try_from(n).map_err(|_| lx.err("exponent too large"))?
                } else {
                    1
                };
                mono = mono.mul(&Monomial::from_pairs(&[(v, e)]));
            }
            _ => return Err(lx.err("expected coefficient or variable")),
        }
        if lx.peek() == Some(b'*') {
            lx.bump();
        } else {
            break;
        }
    }
    Ok((coeff, mono))
}

fn parse_var(lx: &mut Lexer) -> Result<VarId, ParseError> {
    let name = lx.ident();
    match name.as_str() {
        "z" => Ok(VarId::Z),
        "lam" => Ok(VarId::Lam),
        "t" => Ok(VarId::T),
        "X" => Ok(VarId::X),
        "Y" => Ok(VarId::Y),
        "p" => {
            let n = lx.uint()?;
            let j = u32::try_from(n).map_err(|_| lx.err("p index too large"))?;
            Ok(VarId::P(j))
        }
        "H" => {
            if lx.bump() != Some(b'[') {
                return Err(lx.err("expected '[' after H"));
            }
            let j = lx.int()?;
            if lx.bump() != Some(b',') {
                return Err(lx.err("expected ',' in H index"));
            }
            let k = lx.int()?;
            if lx.bump() != Some(b']') {
                return Err(lx.err("expected ']' in H index"));
            }
            let j = i32::try_from(j).map_err(|_| lx.err("H index out of range"))?;
            let k = i32::try_from(k).map_err(|_| lx.err("H index out of range"))?;
            Ok(VarId::h(j, k))
        }
        other => Err(lx.err(format!("unknown variable '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn round_trip_simple() {
        for s in [
            "0",
            "lam^2 - 1",
            "-lam^3 - 2*lam^2*H[3,-1] + p3^2",
            "15/2*p1*H[1,1]^2",
            "-z^4 + 3*z*X*Y - 1/3",
        ] {
            let p = parse_poly(s).unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn coefficients_parse() {
        let p = parse_poly("15/2*H[1,1]").unwrap();
        assert_eq!(p.coeff(&Monomial::var(VarId::h(1, 1))), ratio(15, 2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("q3").is_err());
        assert!(parse_poly("H[3").is_err());
        assert!(parse_poly("1 +").is_err());
    }
}
