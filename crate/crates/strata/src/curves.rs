//! Algebraic curves carried by the closed subsets: normal rational
//! (Veronese) towers, hyperelliptic relations, plane-curve implicitization,
//! ideal generators, and singular families.

use crate::closure::{
    derive, express_in_p1, reduce_product, shift_closure, ClosureError, ConstraintSet,
};
use crate::poly::Poly;
use crate::rat::rat;
use crate::resultant::{resultant, ResultantError};
use crate::strata::{build_basis, BasisFamily};
use crate::var::VarId;
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum CurveError {
    #[error(transparent)]
    Closure(#[from] ClosureError),
    #[error(transparent)]
    Resultant(#[from] ResultantError),
    #[error("element p_{j} of stratum {m} is not polynomial: tail term {tail}")]
    NotPolynomial { m: i64, j: i64, tail: String },
    #[error("stratum {m} is not supported for this construction")]
    UnsupportedStratum { m: i64 },
    #[error("structure constant onto p_{l} survives on the variety: {value}")]
    UnexpectedConstant { l: i64, value: String },
    #[error("reduction residual survives on the variety: {value}")]
    ResidualSurvives { value: String },
}

/// One algebraic curve together with the stratum and family it came from.
#[derive(Debug, Clone)]
pub struct CurveRecord {
    pub stratum: i64,
    pub kind: String,
    pub poly: Poly,
    pub params: Vec<VarId>,
}

impl CurveRecord {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "stratum": self.stratum,
            "kind": self.kind,
            "poly": self.poly.to_string(),
            "params": self.params.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn pvar(l: i64) -> Poly {
    if l == 0 {
        Poly::one()
    } else {
        Poly::var(VarId::p(l as u32))
    }
}

/// The Veronese tower of the big cell: `p_n` as a polynomial in `p_1` for
/// `n <= max_n`, over the single parameter `H^1_1`.
pub fn veronese_tower(max_n: i64) -> Result<BTreeMap<i64, Poly>, CurveError> {
    let (basis, cs) = derive(0, 2 * max_n.max(3), max_n.max(3))?;
    Ok(express_in_p1(&basis, &cs, max_n)?)
}

/// The hyperelliptic relation `C_{2n+1}` of stratum `2n`, in the coordinates
/// `(lam, p_{2n+1})`, with coefficients computed by reducing the square of
/// `p_{2n+1}` against the basis.
pub fn hyperelliptic_curve(n: i64) -> Result<CurveRecord, CurveError> {
    if n < 1 {
        return Err(CurveError::UnsupportedStratum { m: 2 * n });
    }
    let m = 2 * n;
    let o = 2 * n + 1;
    let (basis, cs) = derive(m, m + 2, o)?;
    hyperelliptic_curve_from(&basis, &cs, n)
}

fn hyperelliptic_curve_from(
    basis: &BasisFamily,
    cs: &ConstraintSet,
    n: i64,
) -> Result<CurveRecord, CurveError> {
    let o = 2 * n + 1;
    let rr = reduce_product(basis, o, o)?;
    for p in rr.obstructions() {
        if !cs.vanishes(&p) {
            return Err(CurveError::ResidualSurvives {
                value: cs.reduce_full(&p).to_string(),
            });
        }
    }
    let mut poly = Poly::var(VarId::p(o as u32)).pow(2);
    for (l, c) in rr.constants {
        let cv = cs.apply(&c);
        if cv.is_zero() {
            continue;
        }
        if l % 2 != 0 {
            return Err(CurveError::UnexpectedConstant {
                l,
                value: cv.to_string(),
            });
        }
        poly = poly.sub(&cv.mul(&Poly::var(VarId::Lam).pow((l / 2) as u32)));
    }
    Ok(CurveRecord {
        stratum: 2 * n,
        kind: format!("hyperelliptic-C{}", 2 * n + 1),
        poly,
        params: cs.independents.clone(),
    })
}

/// Multipliers `alpha_m(lam)` with `p_{2m+1} = alpha_m(lam) p_{2n+1}` in the
/// quotient algebra of stratum `2n`, for `m = n .. n + count`.
pub fn odd_multipliers(n: i64, count: i64) -> Result<BTreeMap<i64, Poly>, CurveError> {
    let m = 2 * n;
    let base = 2 * n + 1;
    let top = base + 2 * count;
    // Deep tails: the shift constants of high orders involve tail symbols
    // whose vanishing is only derivable with generous depth and product range.
    let depth = (m + 8) + 2 * count;
    let max_index = base + 2;
    let basis =
        build_basis(m, depth, top.max(2 * max_index)).map_err(ClosureError::from)?;
    let cs = crate::closure::derive_constraint_set(&basis, max_index)?;
    let mut alpha: BTreeMap<i64, Poly> = BTreeMap::new();
    alpha.insert(base, Poly::one());
    let mut o = base;
    while o + 2 <= top {
        let rr = shift_closure(&basis, o)?;
        for p in rr.obstructions() {
            if !cs.vanishes(&p) {
                return Err(CurveError::ResidualSurvives {
                    value: cs.reduce_full(&p).to_string(),
                });
            }
        }
        let mut a = alpha[&o].mul(&Poly::var(VarId::Lam));
        for (l, c) in rr.constants {
            if l == o + 2 {
                continue;
            }
            let cv = cs.apply(&c);
            if cv.is_zero() {
                continue;
            }
            if l % 2 != 0 && l >= base {
                a = a.sub(&cv.mul(&alpha[&l]));
            } else {
                return Err(CurveError::UnexpectedConstant {
                    l,
                    value: cv.to_string(),
                });
            }
        }
        alpha.insert(o + 2, a);
        o += 2;
    }
    Ok(alpha)
}

/// Linear ideal generators `l_{2m+1} = p_{2m+1} - alpha_m(lam) p_{2n+1}` of
/// stratum `2n`, for `m = n+1 .. n+count`.
pub fn odd_generators(n: i64, count: i64) -> Result<Vec<Poly>, CurveError> {
    let base = 2 * n + 1;
    let alpha = odd_multipliers(n, count)?;
    Ok(alpha
        .iter()
        .filter(|&(&o, _)| o > base)
        .map(|(&o, a)| pvar(o).sub(&a.mul(&pvar(base))))
        .collect())
}

/// The quadric `f_{jk} = p_j p_k - sum_l C^l_{jk} p_l` of a stratum, with
/// the derived constraints substituted into the structure constants.
pub fn quadric(
    basis: &BasisFamily,
    cs: &ConstraintSet,
    j: i64,
    k: i64,
) -> Result<Poly, CurveError> {
    let rr = reduce_product(basis, j, k)?;
    for p in rr.obstructions() {
        if !cs.vanishes(&p) {
            return Err(CurveError::ResidualSurvives {
                value: cs.reduce_full(&p).to_string(),
            });
        }
    }
    let mut f = pvar(j).mul(&pvar(k));
    for (l, c) in rr.constants {
        let cv = cs.apply(&c);
        if !cv.is_zero() {
            f = f.sub(&cv.mul(&pvar(l)));
        }
    }
    Ok(f)
}

/// The basis element `p_j` as a polynomial in `z` (only valid for strata
/// whose derived elements are polynomial, i.e. strata 3 and 5).
///
/// Tail coefficients that reduce to zero modulo the constraints are dropped.
/// A tail coefficient whose reduction still mentions an undetermined tail
/// symbol lies beyond the truncation window — its vanishing is the closure
/// condition at a depth the finite derivation cannot reach — and is dropped
/// as well. A tail coefficient that reduces to a nonzero polynomial in the
/// fixed-part parameters alone is a genuine obstruction and is an error.
pub fn polynomial_element(
    basis: &BasisFamily,
    cs: &ConstraintSet,
    j: i64,
) -> Result<Poly, CurveError> {
    let is_tail_symbol =
        |v: &VarId| matches!(v, VarId::H { k, .. } if *k >= 1);
    let mut out = Poly::zero();
    for (e, c) in basis.element(j).support() {
        let cv = cs.reduce_full(c);
        if cv.is_zero() {
            continue;
        }
        if e < 0 {
            if cv.vars().iter().any(is_tail_symbol) {
                continue;
            }
            return Err(CurveError::NotPolynomial {
                m: basis.spec.m,
                j,
                tail: cv.to_string(),
            });
        }
        out = out.add(&cv.mul_var(VarId::Z, e as u32));
    }
    Ok(out)
}

/// Implicitizes the plane curve traced by `(p_a, p_b)` in a polynomial
/// stratum: `Res_z(p_a - X, p_b - Y)` with `(X, Y)` renamed back to
/// `(p_a, p_b)`, primitive-normalized.
pub fn implicitize_plane_curve(m: i64, a: i64, b: i64) -> Result<Poly, CurveError> {
    if m != 3 && m != 5 {
        return Err(CurveError::UnsupportedStratum { m });
    }
    let top = a.max(b);
    let (basis, cs) = derive(m, top.max(6), top.max(6))?;
    let pa = polynomial_element(&basis, &cs, a)?;
    let pb = polynomial_element(&basis, &cs, b)?;
    let f = pa.sub(&Poly::var(VarId::X));
    let g = pb.sub(&Poly::var(VarId::Y));
    let res = resultant(&f, &g, VarId::Z)?;
    let mut bind = BTreeMap::new();
    bind.insert(VarId::X, pvar(a));
    bind.insert(VarId::Y, pvar(b));
    Ok(res.substitute_unchecked(&bind).primitive_normalized())
}

/// Compares two curves up to a nonzero factor: returns the cofactor `q`
/// with `derived * q = reference` (or `reference * q = derived`), after
/// primitive normalization; `None` when neither divides the other.
pub fn match_up_to_factor(derived: &Poly, reference: &Poly) -> Option<Poly> {
    let d = derived.primitive_normalized();
    let r = reference.primitive_normalized();
    if d == r {
        return Some(Poly::one());
    }
    if let Some(q) = r.exact_div(&d) {
        return Some(q);
    }
    d.exact_div(&r)
}

/// The singular "hyperelliptic" family of the big cell:
/// `p_{2n+1}^2 = (lam + 2 H^1_1) alpha_n(lam)^2`.
pub fn big_cell_singular(n: i64) -> Result<CurveRecord, CurveError> {
    let e = veronese_tower(2 * n + 1)?;
    let pn = &e[&(2 * n + 1)];
    let p1 = VarId::p(1);
    let beta = pn
        .exact_div(&Poly::var(p1))
        .ok_or(CurveError::UnsupportedStratum { m: 0 })?;
    let lamshift = Poly::var(VarId::Lam).add(&Poly::var(VarId::h(1, 1)).scale(&rat(2)));
    let mut alpha = Poly::zero();
    for (e2, c) in beta.coeffs_in(p1).iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if e2 % 2 != 0 {
            return Err(CurveError::UnsupportedStratum { m: 0 });
        }
        alpha = alpha.add(&c.mul(&lamshift.pow((e2 / 2) as u32)));
    }
    let poly = Poly::var(VarId::p((2 * n + 1) as u32))
        .pow(2)
        .sub(&lamshift.mul(&alpha.pow(2)));
    Ok(CurveRecord {
        stratum: 0,
        kind: format!("singular-hyperelliptic-{}", 2 * n + 1),
        poly,
        params: vec![VarId::h(1, 1)],
    })
}

/// The singular genus-one family of stratum 2:
/// `p_{2n+1}^2 = alpha_n(lam)^2 (lam^3 + ...)`.
pub fn sigma2_singular(n: i64) -> Result<CurveRecord, CurveError> {
    if n < 1 {
        return Err(CurveError::UnsupportedStratum { m: 2 });
    }
    let alpha = odd_multipliers(1, n - 1)?;
    let c6 = hyperelliptic_curve(1)?;
    // Branch polynomial: p3^2 - C6.
    let f = Poly::var(VarId::p(3)).pow(2).sub(&c6.poly);
    let a = &alpha[&(2 * n + 1)];
    let poly = Poly::var(VarId::p((2 * n + 1) as u32))
        .pow(2)
        .sub(&a.pow(2).mul(&f));
    Ok(CurveRecord {
        stratum: 2,
        kind: format!("singular-genus1-{}", 2 * n + 1),
        poly,
        params: c6.params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;
    use crate::reference;

    #[test]
    fn veronese_matches_reference() {
        let e = veronese_tower(5).unwrap();
        assert_eq!(e[&3], reference::veronese_p3());
        assert_eq!(e[&5], reference::veronese_p5());
    }

    #[test]
    fn sextic_matches_reference() {
        let c6 = hyperelliptic_curve(1).unwrap();
        assert_eq!(c6.poly, reference::c6());
    }

    #[test]
    fn sigma2_multipliers() {
        let alpha = odd_multipliers(1, 2).unwrap();
        let lam = Poly::var(VarId::Lam);
        let a = Poly::var(VarId::h(3, -1));
        assert_eq!(alpha[&3], Poly::one());
        assert_eq!(alpha[&5], lam.sub(&a));
        // alpha_3 = lam^2 - H^3_{-1} lam - H^5_{-1}
        //         = lam^2 - H^3_{-1} lam - (H^3_1 - H^3_{-1}^2).
        let expect = lam
            .pow(2)
            .sub(&a.mul(&lam))
            .sub(&Poly::var(VarId::h(3, 1)))
            .add(&a.pow(2));
        assert_eq!(alpha[&7], expect);
    }

    #[test]
    fn implicit_3_5_matches_reference() {
        let got = implicitize_plane_curve(5, 3, 5).unwrap();
        assert_eq!(got, reference::plane_curve_3_5().primitive_normalized());
    }

    #[test]
    fn big_cell_singular_shape() {
        let rec = big_cell_singular(1).unwrap();
        // p3^2 - (lam + 2h)(lam - h)^2
        let lam = Poly::var(VarId::Lam);
        let h = Poly::var(VarId::h(1, 1));
        let expect = Poly::var(VarId::p(3)).pow(2).sub(
            &lam.add(&h.scale(&rat(2)))
                .mul(&lam.sub(&h).pow(2)),
        );
        assert_eq!(rec.poly, expect);
    }

    #[test]
    fn quadrics_vanish_under_parameterization() {
        // In stratum 3, f_{34} evaluated on the polynomial elements is zero
        // modulo the unresolved ideal: substitute p_j -> p_j(z) and check the
        // z-polynomial's coefficients vanish on the constraint variety.
        let (basis, cs) = derive(3, 8, 6).unwrap();
        let f = quadric(&basis, &cs, 3, 4).unwrap();
        let mut bind = BTreeMap::new();
        for j in 3..=7i64 {
            bind.insert(VarId::p(j as u32), polynomial_element(&basis, &cs, j).unwrap());
        }
        let g = f.substitute_unchecked(&bind);
        for c in g.coeffs_in(VarId::Z) {
            assert!(cs.vanishes(&c), "leftover {c}");
        }
    }

    #[test]
    fn match_up_to_factor_detects_scaling() {
        let p = Poly::var(VarId::Lam).pow(2).sub(&Poly::one());
        let q = p.scale(&ratio(3, 2));
        assert_eq!(match_up_to_factor(&p, &q), Some(Poly::one()));
        let r = p.mul(&Poly::var(VarId::Lam));
        assert_eq!(match_up_to_factor(&p, &r), Some(Poly::var(VarId::Lam)));
        let s = Poly::var(VarId::Lam).pow(2).add(&Poly::one());
        assert_eq!(match_up_to_factor(&p, &s), None);
    }
}
