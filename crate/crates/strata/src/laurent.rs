//! Truncated Laurent series in `z` with polynomial coefficients.
//!
//! A series knows the highest exponent that can carry a coefficient (`top`)
//! and the lowest exponent at which its coefficients are reliable (`floor`).
//! Products propagate the floor so that no coefficient is ever reported in a
//! region where one of the factors was truncated.

use crate::poly::Poly;
use crate::rat::Rational;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    top: i64,
    floor: i64,
    coeffs: BTreeMap<i64, Poly>,
}

impl LaurentSeries {
    /// Series with no known nonzero coefficients on `[floor, top]`.
    pub fn zero(top: i64, floor: i64) -> Self {
        assert!(floor <= top, "floor {floor} above top {top}");
        LaurentSeries {
            top,
            floor,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit series `1` reliable down to `floor`.
    pub fn one(floor: i64) -> Self {
        let mut s = LaurentSeries::zero(0, floor.min(0));
        s.set(0, Poly::one());
        s
    }

    pub fn top(&self) -> i64 {
        self.top
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    pub fn set(&mut self, exp: i64, value: Poly) {
        assert!(
            exp >= self.floor && exp <= self.top,
            "exponent {exp} outside [{}, {}]",
            self.floor,
            self.top
        );
        if value.is_zero() {
            self.coeffs.remove(&exp);
        } else {
            self.coeffs.insert(exp, value);
        }
    }

    pub fn coeff(&self, exp: i64) -> Poly {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Poly::zero)
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = (i64, &Poly)> {
        self.coeffs.iter().map(|(&e, p)| (e, p))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact convolution on the reliable window.
    ///
    /// `result.top = f.top + g.top`;
    /// `result.floor = max(f.floor + g.top, g.floor + f.top)` — below that a
    /// truncated tail of one factor could contribute, so coefficients there
    /// are unknown and discarded.
    pub fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        let top = self.top + other.top;
        let floor = (self.floor + other.top).max(other.floor + self.top);
        let mut out = LaurentSeries::zero(top, floor);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e < floor || e > top {
                    continue;
                }
                let prod = ca.mul(cb);
                let cur = out.coeff(e);
                out.set(e, cur.add(&prod));
            }
        }
        out
    }

    /// Multiplies by `z^(2n)`.
    pub fn shift_even(&self, n: i64) -> LaurentSeries {
        assert!(n >= 0);
        let d = 2 * n;
        LaurentSeries {
            top: self.top + d,
            floor: self.floor + d,
            coeffs: self.coeffs.iter().map(|(&e, p)| (e + d, p.clone())).collect(),
        }
    }

    pub fn add(&self, other: &LaurentSeries) -> LaurentSeries {
        let top = self.top.max(other.top);
        let floor = self.floor.max(other.floor);
        let mut out = LaurentSeries::zero(top, floor);
        for e in floor..=top {
            let c = self.coeff_or_zero(e).add(&other.coeff_or_zero(e));
            out.set(e, c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentSeries) -> LaurentSeries {
        self.add(&other.scale_poly(&Poly::int(-1)))
    }

    fn coeff_or_zero(&self, e: i64) -> Poly {
        self.coeffs.get(&e).cloned().unwrap_or_else(Poly::zero)
    }

    /// Multiplies every coefficient by a z-free polynomial.
    pub fn scale_poly(&self, c: &Poly) -> LaurentSeries {
        let mut out = LaurentSeries::zero(self.top, self.floor);
        for (&e, p) in &self.coeffs {
            out.set(e, p.mul(c));
        }
        out
    }

    /// Restricts the reliable window from below.
    pub fn raise_floor(&self, floor: i64) -> LaurentSeries {
        assert!(floor >= self.floor && floor <= self.top);
        LaurentSeries {
            top: self.top,
            floor,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&e, _)| e >= floor)
                .map(|(&e, p)| (e, p.clone()))
                .collect(),
        }
    }

    /// Applies a symbol substitution to every coefficient.
    pub fn substitute_coeffs(&self, bindings: &BTreeMap<crate::var::VarId, Poly>) -> LaurentSeries {
        let mut out = LaurentSeries::zero(self.top, self.floor);
        for (&e, p) in &self.coeffs {
            out.set(e, p.substitute_unchecked(bindings));
        }
        out
    }

    /// Specializes every coefficient to a rational (all variables bound).
    pub fn specialize(&self, point: &BTreeMap<crate::var::VarId, Rational>) -> BTreeMap<i64, Rational> {
        self.coeffs
            .iter()
            .map(|(&e, p)| (e, p.eval(point)))
            .collect()
    }

    /// JSON form: `{"top": int, "floor": int, "coeffs": {"<exp>": "<poly>"}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(e, p)| (e.to_string(), p.to_string()))
            .collect();
        serde_json::json!({
            "top": self.top,
            "floor": self.floor,
            "coeffs": coeffs,
        })
    }
}

impl Serialize for LaurentSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentSeries[{}..{}]{{", self.floor, self.top)?;
        for (e, p) in self.coeffs.iter().rev() {
            write!(f, " z^{e}: {p};")?;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::var::VarId;

    #[test]
    fn unit_series_is_idempotent() {
        let one = LaurentSeries::one(-12);
        let prod = one.mul(&one);
        assert_eq!(prod.coeff(0), Poly::one());
        assert_eq!(prod.top(), 0);
    }

    #[test]
    fn symbolic_square_matches_closed_form() {
        // (z + H*z^-1)^2 = z^2 + 2H + H^2 z^-2; the factor window must reach
        // down to z^-3 for the product window to include z^-2.
        let h = Poly::var(VarId::h(1, 1));
        let mut f = LaurentSeries::zero(1, -3);
        f.set(1, Poly::one());
        f.set(-1, h.clone());
        let sq = f.mul(&f);
        assert_eq!(sq.coeff(2), Poly::one());
        assert_eq!(sq.coeff(0), h.scale(&rat(2)));
        assert_eq!(sq.coeff(-2), h.pow(2));
        assert_eq!(sq.floor(), -3 + 1); // max(f.floor + g.top, g.floor + f.top)
    }

    #[test]
    fn floor_contract() {
        let f = LaurentSeries::zero(1, -5);
        let g = LaurentSeries::zero(3, -7);
        let prod = f.mul(&g);
        assert_eq!(prod.top(), 4);
        assert_eq!(prod.floor(), -2);
    }

    #[test]
    fn shift_even_moves_window() {
        let one = LaurentSeries::one(-4);
        let shifted = one.shift_even(1);
        assert_eq!(shifted.coeff(2), Poly::one());
        assert_eq!(shifted.top(), 2);
        assert_eq!(shifted.floor(), -2);
        assert_eq!(one.shift_even(0), one);
    }
}
