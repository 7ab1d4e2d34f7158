//! Exact rational coefficients.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; zero is `0/1`. `num::BigRational` maintains exactly
//! these invariants, so it is used directly.

use num::bigint::BigInt;
pub use num::rational::BigRational as Rational;
use num::{One, Signed, Zero};

/// Integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fraction `n/d` in lowest terms; panics on `d = 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text: `"n"` for integers, `"n/d"` otherwise, `d > 0`.
pub fn print_rat(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the output of [`print_rat`].
pub fn parse_rat(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rational::from_integer(n))
    }
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing_round_trips() {
        for r in [rat(0), rat(-7), ratio(15, 2), ratio(-3, 4), ratio(4, -6)] {
            assert_eq!(parse_rat(&print_rat(&r)).unwrap(), r);
        }
        assert_eq!(print_rat(&ratio(4, -6)), "-2/3");
    }
}
