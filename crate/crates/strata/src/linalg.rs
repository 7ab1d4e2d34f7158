//! Exact linear algebra over the monomial basis: bounded ideal membership.
//!
//! Membership of `f` in the ideal generated by a small set of polynomials is
//! decided against the linear span of `m * g_i` over all monomials `m` up to
//! a degree bound. The span is echelonized once (unique leading monomials,
//! leading coefficient 1) and each query is a plain reduction, so repeated
//! queries against the same generators are cheap.

use crate::poly::{Monomial, Poly};
use crate::var::VarId;
use std::cell::RefCell;
use std::collections::BTreeMap;

/// Echelonized linear span of a family of polynomials.
pub struct SpanBasis {
    rows: BTreeMap<Monomial, Poly>,
}

impl SpanBasis {
    pub fn new() -> Self {
        SpanBasis {
            rows: BTreeMap::new(),
        }
    }

    /// Inserts a polynomial, keeping the echelon property.
    pub fn insert(&mut self, p: Poly) {
        let r = self.reduce(&p);
        if let Some((m, c)) = r.leading() {
            let m = m.clone();
            let monic = r.scale(&c.clone().recip());
            self.rows.insert(m, monic);
        }
    }

    /// Fully reduces `p` against the span.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let mut r = p.clone();
        loop {
            let hit = r
                .terms_desc()
                .find(|(m, _)| self.rows.contains_key(*m))
                .map(|(m, c)| (m.clone(), c.clone()));
            match hit {
                None => return r,
                Some((m, c)) => {
                    let row = &self.rows[&m];
                    r = r.sub(&row.scale(&c));
                }
            }
        }
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

impl Default for SpanBasis {
    fn default() -> Self {
        Self::new()
    }
}

/// All monomials of total degree `<= max_deg` over the given variables.
pub fn monomials_up_to(vars: &[VarId], max_deg: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut frontier = vec![Monomial::one()];
    for _ in 0..max_deg {
        let mut next = Vec::new();
        for m in &frontier {
            for &v in vars {
                // Avoid duplicates: only extend by variables >= the largest
                // variable already present.
                if m.pairs().last().map(|&(w, _)| v >= w).unwrap_or(true) {
                    next.push(m.mul(&Monomial::var(v)));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Decision procedure for bounded ideal membership: is `f` a combination
/// `sum q_i g_i` with `deg q_i <= max_cofactor_deg`?
pub struct BoundedIdeal {
    span: SpanBasis,
}

impl BoundedIdeal {
    pub fn new(gens: &[Poly], max_cofactor_deg: u32) -> Self {
        let mut vars: Vec<VarId> = Vec::new();
        for g in gens {
            for v in g.vars() {
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
        }
        vars.sort();
        let mut span = SpanBasis::new();
        for m in monomials_up_to(&vars, max_cofactor_deg) {
            for g in gens {
                span.insert(g.mul(&Poly::term(crate::rat::rat(1), m.clone())));
            }
        }
        BoundedIdeal { span }
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.span.contains(f)
    }

    pub fn reduce(&self, f: &Poly) -> Poly {
        self.span.reduce(f)
    }
}

/// All monomials over `vars` of exact weight `w`, where every variable must
/// carry a positive weight (so the set is finite).
pub fn monomials_of_weight(vars: &[VarId], w: i64) -> Vec<Monomial> {
    fn rec(vars: &[VarId], w: i64, cur: &Monomial, out: &mut Vec<Monomial>) {
        if w == 0 {
            out.push(cur.clone());
            return;
        }
        let Some((&v, rest)) = vars.split_first() else {
            return;
        };
        let wv = v.weight().expect("weighted variable");
        let mut e: u32 = 0;
        while i64::from(e) * wv <= w {
            let m = if e == 0 {
                cur.clone()
            } else {
                cur.mul(&Monomial::from_pairs(&[(v, e)]))
            };
            rec(rest, w - i64::from(e) * wv, &m, out);
            e += 1;
        }
    }
    let mut out = Vec::new();
    if w >= 0 {
        rec(vars, w, &Monomial::one(), &mut out);
    }
    out
}

/// Exact ideal membership for weight-homogeneous polynomials.
///
/// If `f` and all generators are homogeneous for the variable weights, the
/// weight-`W` component of any combination `sum q_i g_i` only receives
/// contributions `m g_i` with `weight(m) = W - weight(g_i)` — a finite
/// monomial set. Membership therefore reduces to finite linear algebra with
/// no degree heuristic, unlike [`BoundedIdeal`].
pub struct GradedIdeal {
    gens: Vec<(i64, Poly)>,
    vars: Vec<VarId>,
    spans: RefCell<BTreeMap<i64, SpanBasis>>,
}

impl GradedIdeal {
    /// `None` when a generator is zero, not weight-homogeneous, or mentions
    /// a variable without a positive weight.
    pub fn new(gens: &[Poly]) -> Option<GradedIdeal> {
        let mut out = Vec::new();
        let mut vars: Vec<VarId> = Vec::new();
        for g in gens {
            if g.is_zero() {
                return None;
            }
            let w = g.homogeneous_weight()?;
            for v in g.vars() {
                if v.weight().filter(|&wv| wv > 0).is_none() {
                    return None;
                }
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
            out.push((w, g.clone()));
        }
        vars.sort();
        Some(GradedIdeal {
            gens: out,
            vars,
            spans: RefCell::new(BTreeMap::new()),
        })
    }

    fn build_span(&self, w: i64, vars: &[VarId]) -> SpanBasis {
        let mut s = SpanBasis::new();
        for (wg, g) in &self.gens {
            for m in monomials_of_weight(vars, w - wg) {
                s.insert(g.mul(&Poly::term(crate::rat::rat(1), m)));
            }
        }
        s
    }

    /// Reduces every weight-homogeneous component of `f` against the exact
    /// graded span; terms mentioning weightless variables pass through
    /// untouched.
    pub fn reduce(&self, f: &Poly) -> Poly {
        // Split f into weight components; cofactors may involve any weighted
        // variable of f, so widen the span variables when needed.
        let mut extra: Vec<VarId> = self.vars.clone();
        let mut widened = false;
        for v in f.vars() {
            if !extra.contains(&v) {
                if let Some(wv) = v.weight() {
                    if wv > 0 {
                        extra.push(v);
                        widened = true;
                    }
                }
            }
        }
        extra.sort();
        let mut byw: BTreeMap<i64, Poly> = BTreeMap::new();
        let mut rest = Poly::zero();
        for (m, c) in f.terms_desc() {
            let mut w = Some(0i64);
            for &(v, e) in m.pairs() {
                match v.weight() {
                    Some(wv) if wv > 0 => w = w.map(|x| x + wv * i64::from(e)),
                    _ => {
                        w = None;
                        break;
                    }
                }
            }
            let term = Poly::term(c.clone(), m.clone());
            match w {
                Some(w) => {
                    let acc = byw.entry(w).or_insert_with(Poly::zero);
                    *acc = acc.add(&term);
                }
                None => rest = rest.add(&term),
            }
        }
        let mut out = rest;
        for (w, comp) in byw {
            let reduced = if widened {
                self.build_span(w, &extra).reduce(&comp)
            } else {
                let mut spans = self.spans.borrow_mut();
                let span = spans
                    .entry(w)
                    .or_insert_with(|| self.build_span(w, &self.vars));
                span.reduce(&comp)
            };
            out = out.add(&reduced);
        }
        out
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.reduce(f).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn h(j: i32, k: i32) -> Poly {
        Poly::var(VarId::h(j, k))
    }

    #[test]
    fn membership_in_principal_ideal() {
        let g = h(1, 1).pow(2).add(&h(2, 0));
        let ideal = BoundedIdeal::new(std::slice::from_ref(&g), 3);
        let f = g.mul(&h(1, 1).add(&Poly::int(5)));
        assert!(ideal.contains(&f));
        assert!(!ideal.contains(&h(1, 1)));
        assert!(!ideal.contains(&g.add(&Poly::one())));
    }

    #[test]
    fn membership_with_two_generators() {
        let g1 = h(4, 0).add(&h(3, 0).mul(&h(3, -2)).scale(&rat(2)));
        let g2 = h(3, 0).pow(2).sub(&h(4, -2).mul(&h(4, 0)));
        let ideal = BoundedIdeal::new(&[g1.clone(), g2.clone()], 4);
        let f = g1.mul(&h(3, -2)).sub(&g2.scale(&rat(3)));
        assert!(ideal.contains(&f));
        assert!(!ideal.contains(&h(3, 0)));
    }

    #[test]
    fn monomial_enumeration_counts() {
        let vars = [VarId::h(1, 1), VarId::h(2, 0)];
        // C(2+2, 2) = 6 monomials of degree <= 2 in two variables.
        assert_eq!(monomials_up_to(&vars, 2).len(), 6);
    }
}
