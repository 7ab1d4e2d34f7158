//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under the
//! graded-lexicographic order built on the fixed [`VarId`] order. Canonical
//! printing walks the map in descending order, which makes the text format a
//! deterministic golden-file contract.

use crate::rat::{is_positive, print_rat, rat, Rational};
use crate::var::VarId;
use num::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// An exponent vector: sorted `(variable, exponent)` pairs, no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VarId) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn from_pairs(pairs: &[(VarId, u32)]) -> Self {
        let mut exps: Vec<(VarId, u32)> = pairs.iter().copied().filter(|&(_, e)| e > 0).collect();
        exps.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { exps: merged }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn pairs(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => {
                    exps.push((va, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    exps.push((vb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    exps.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    /// `self / other` when every exponent of `other` fits under `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        for &(v, e) in &other.exps {
            let slot = exps.iter_mut().find(|(w, _)| *w == v)?;
            if slot.1 < e {
                return None;
            }
            slot.1 -= e;
        }
        exps.retain(|&(_, e)| e > 0);
        Some(Monomial { exps })
    }

    /// Removes variable `v` entirely, returning its exponent.
    pub fn without(&self, v: VarId) -> (Monomial, u32) {
        let e = self.exponent(v);
        let exps = self
            .exps
            .iter()
            .copied()
            .filter(|&(w, _)| w != v)
            .collect();
        (Monomial { exps }, e)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: higher total degree first; on ties, the first
    /// variable (ascending `VarId` order) with a different exponent decides,
    /// higher exponent winning.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => {
                    // `self` has leftover exponent on some variable the other
                    // lacks; that variable is "earlier" there with exponent 0.
                    return Ordering::Greater;
                }
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A sparse multivariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(rat(n))
    }

    pub fn var(v: VarId) -> Self {
        Poly::term(rat(1), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(list: Vec<(Rational, Monomial)>) -> Self {
        let mut p = Poly::zero();
        for (c, m) in list {
            p.add_term(c, m);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in descending monomial order (the canonical print order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, c: Rational, m: Monomial) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(|| rat(0))
    }

    /// Constant (monomial-free) coefficient.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_one())
    }

    /// Leading term under the monomial order, if nonzero.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(-c.clone(), m.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ca * cb, ma.mul(mb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_var(&self, v: VarId, e: u32) -> Poly {
        if e == 0 {
            return self.clone();
        }
        let shift = Monomial::from_pairs(&[(v, e)]);
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&shift), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Simultaneous substitution of polynomials for variables.
    ///
    /// Rejected when a bound variable occurs in any binding value, so a single
    /// pass is always enough.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, Poly>) -> Result<Poly, SubstituteError> {
        for (v, value) in bindings {
            for bound in bindings.keys() {
                if value.contains_var(*bound) {
                    return Err(SubstituteError::Cyclic {
                        binding: *v,
                        occurs: *bound,
                    });
                }
            }
        }
        Ok(self.substitute_unchecked(bindings))
    }

    /// Substitution without the acyclicity check; used internally where the
    /// bindings are triangular by construction.
    pub fn substitute_unchecked(&self, bindings: &BTreeMap<VarId, Poly>) -> Poly {
        if bindings.is_empty() || bindings.keys().all(|v| !self.contains_var(*v)) {
            return self.clone();
        }
        let mut out = Poly::zero();
        let mut pow_cache: BTreeMap<(VarId, u32), Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            let mut kept = Monomial::one();
            for &(v, e) in m.pairs() {
                match bindings.get(&v) {
                    None => kept = kept.mul(&Monomial::from_pairs(&[(v, e)])),
                    Some(val) => {
                        let p = pow_cache
                            .entry((v, e))
                            .or_insert_with(|| val.pow(e))
                            .clone();
                        term = term.mul(&p);
                    }
                }
            }
            if !kept.is_one() {
                term = term.mul(&Poly::term(rat(1), kept));
            }
            out = out.add(&term);
        }
        out
    }

    /// Substitutes a single variable.
    pub fn substitute_var(&self, v: VarId, value: &Poly) -> Poly {
        let mut map = BTreeMap::new();
        map.insert(v, value.clone());
        self.substitute_unchecked(&map)
    }

    /// Partial derivative.
    pub fn derivative(&self, v: VarId) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let (rest, _) = m.without(v);
            let m2 = if e > 1 {
                rest.mul(&Monomial::from_pairs(&[(v, e - 1)]))
            } else {
                rest
            };
            out.add_term(c * rat(e as i64), m2);
        }
        out
    }

    /// Content: positive rational `c` such that `self / c` has coprime integer
    /// coefficients. Zero polynomial has content 0.
    pub fn content(&self) -> Rational {
        use num::bigint::BigInt;
        use num::Integer;
        if self.is_zero() {
            return rat(0);
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Divides out the content and fixes the sign so the leading coefficient
    /// is positive. This is the normal form used for constraint and curve
    /// comparison.
    pub fn primitive_normalized(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if let Some((_, lead)) = self.leading() {
            if !is_positive(lead) {
                c = -c;
            }
        }
        self.scale(&c.recip())
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn exact_div(&self, other: &Poly) -> Option<Poly> {
        if other.is_zero() {
            return None;
        }
        let (lm, lc) = other.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let qm = rm.div(lm)?;
            let qc = rc / lc;
            let qt = Poly::term(qc, qm);
            rem = rem.sub(&qt.mul(other));
            quot = quot.add(&qt);
        }
        Some(quot)
    }

    /// Coefficients of `self` viewed as univariate in `v`, index = power of `v`.
    pub fn coeffs_in(&self, v: VarId) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(); d + 1];
        for (m, c) in &self.terms {
            let (rest, e) = m.without(v);
            out[e as usize].add_term(c.clone(), rest);
        }
        out
    }

    /// Rebuilds from univariate-in-`v` coefficients.
    pub fn from_coeffs_in(v: VarId, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            out = out.add(&c.mul_var(v, e as u32));
        }
        out
    }

    /// Evaluates at rational points for every variable present; panics if a
    /// variable is missing from the assignment.
    pub fn eval(&self, point: &BTreeMap<VarId, Rational>) -> Rational {
        let mut acc = rat(0);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let x = point
                    .get(&v)
                    .unwrap_or_else(|| panic!("missing value for {v}"));
                let mut p = rat(1);
                for _ in 0..e {
                    p *= x;
                }
                t *= p;
            }
            acc += t;
        }
        acc
    }

    /// Weight of `H` symbols under `w(H^j_k) = j + k` when every term agrees;
    /// `None` for the zero polynomial or inhomogeneous input.
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut weight = None;
        for m in self.terms.keys() {
            let w: i64 = m
                .pairs()
                .iter()
                .map(|&(v, e)| v.weight().unwrap_or(0) * e as i64)
                .sum();
            match weight {
                None => weight = Some(w),
                Some(prev) if prev != w => return None,
                _ => {}
            }
        }
        weight
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SubstituteError {
    #[error("cyclic bindings: value bound to {binding} mentions bound variable {occurs}")]
    Cyclic { binding: VarId, occurs: VarId },
}

impl fmt::Display for Poly {
    /// Canonical text: terms descending in the monomial order, `*` between
    /// factors, coefficients as `n` or `n/d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms_desc() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", print_rat(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", print_rat(&abs))?;
                }
                write!(f, "{:?}", m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn lam() -> Poly {
        Poly::var(VarId::Lam)
    }

    #[test]
    fn difference_of_squares() {
        let a = lam().add(&Poly::one());
        let b = lam().sub(&Poly::one());
        assert_eq!(a.mul(&b), lam().pow(2).sub(&Poly::one()));
        assert_eq!(a.mul(&b).to_string(), "lam^2 - 1");
    }

    #[test]
    fn binomial_cube_constant_term() {
        // (p1^2 - 2*H[1,1])^3 has constant-in-p1 term -8*H[1,1]^3.
        let p1 = Poly::var(VarId::p(1));
        let h = Poly::var(VarId::h(1, 1));
        let f = p1.pow(2).sub(&h.scale(&rat(2))).pow(3);
        let coeffs = f.coeffs_in(VarId::p(1));
        assert_eq!(coeffs[0], h.pow(3).scale(&rat(-8)));
    }

    #[test]
    fn nonlinear_constraint_vanishes_on_family_point() {
        // 2*H[3,0]*H[3,-2] - H[3,-2]^2*H[4,-2] - H[4,-2]^2 + H[4,0]
        let a = Poly::var(VarId::h(3, -2));
        let b = Poly::var(VarId::h(3, 0));
        let c = Poly::var(VarId::h(4, -2));
        let d = Poly::var(VarId::h(4, 0));
        let f = b
            .mul(&a)
            .scale(&rat(2))
            .sub(&a.pow(2).mul(&c))
            .sub(&c.pow(2))
            .add(&d);
        let mut pt = BTreeMap::new();
        pt.insert(VarId::h(3, -2), rat(0));
        pt.insert(VarId::h(3, 0), rat(1));
        pt.insert(VarId::h(4, -2), rat(1));
        pt.insert(VarId::h(4, 0), rat(1));
        assert_eq!(f.eval(&pt), rat(0));
    }

    #[test]
    fn substitution_rejects_cycles() {
        let p1 = VarId::p(1);
        let f = Poly::var(p1);
        let mut bind = BTreeMap::new();
        bind.insert(p1, Poly::var(p1).add(&Poly::one()));
        assert!(f.substitute(&bind).is_err());
    }

    #[test]
    fn substitution_renames() {
        // lam - p1^2 + 2*H[1,1] under lam -> t^2
        let f = lam()
            .sub(&Poly::var(VarId::p(1)).pow(2))
            .add(&Poly::var(VarId::h(1, 1)).scale(&rat(2)));
        let mut bind = BTreeMap::new();
        bind.insert(VarId::Lam, Poly::var(VarId::T).pow(2));
        let g = f.substitute(&bind).unwrap();
        assert_eq!(g.degree_in(VarId::T), 2);
        assert!(!g.contains_var(VarId::Lam));
    }

    #[test]
    fn zero_parameter_substitution() {
        // p1^2 - 2*H[1,1] with p1 -> z, H[1,1] -> 0 gives z^2.
        let f = Poly::var(VarId::p(1))
            .pow(2)
            .sub(&Poly::var(VarId::h(1, 1)).scale(&rat(2)));
        let mut bind = BTreeMap::new();
        bind.insert(VarId::p(1), Poly::var(VarId::Z));
        bind.insert(VarId::h(1, 1), Poly::zero());
        assert_eq!(f.substitute(&bind).unwrap(), Poly::var(VarId::Z).pow(2));
    }

    #[test]
    fn primitive_normalization() {
        let f = Poly::var(VarId::Lam)
            .scale(&ratio(-4, 6))
            .add(&Poly::constant(ratio(-2, 6)));
        let g = f.primitive_normalized();
        assert_eq!(g.to_string(), "2*lam + 1");
    }

    #[test]
    fn exact_division() {
        let a = lam().pow(3).sub(&Poly::one());
        let b = lam().sub(&Poly::one());
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, lam().pow(2).add(&lam()).add(&Poly::one()));
        assert!(lam().pow(2).exact_div(&b.add(&Poly::int(2))).is_none());
    }

    #[test]
    fn grlex_leading_term() {
        // lam^3 dominates p3^2 by degree.
        let f = Poly::var(VarId::p(3)).pow(2).sub(&lam().pow(3));
        let (m, c) = f.leading().unwrap();
        assert_eq!(m.exponent(VarId::Lam), 3);
        assert_eq!(c, &rat(-1));
    }
}
