//! Resultants via the fraction-free subresultant remainder sequence, plus
//! univariate gcd and squarefree decomposition.
//!
//! The subresultant PRS keeps intermediate coefficient growth polynomial,
//! which matters once the implicitization runs on the higher (2m+1,2m+3)
//! families. All divisions performed by the PRS are exact by construction.

use crate::poly::Poly;
use crate::rat::rat;
use crate::var::VarId;
use num::Zero;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ResultantError {
    #[error("resultant input has degree 0 in {var}")]
    DegreeZero { var: VarId },
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SquarefreeError {
    #[error("squarefree decomposition needs univariate input in {var}; found {found}")]
    NonUnivariate { var: VarId, found: VarId },
}

/// Leading coefficient of `f` viewed as univariate in `v`.
fn lead_coeff_in(f: &Poly, v: VarId) -> Poly {
    let d = f.degree_in(v);
    f.coeffs_in(v).swap_remove(d as usize)
}

/// Pseudo-remainder: returns `lc(B)^(deg A - deg B + 1) * A mod B` in `v`.
fn pseudo_rem(a: &Poly, b: &Poly, v: VarId) -> Poly {
    let db = b.degree_in(v);
    let lb = lead_coeff_in(b, v);
    let mut r = a.clone();
    let mut e = a.degree_in(v) as i64 - db as i64 + 1;
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = lead_coeff_in(&r, v);
        r = lb.mul(&r).sub(&lr.mul_var(v, dr - db).mul(b));
        e -= 1;
    }
    let mut scale = Poly::one();
    for _ in 0..e.max(0) {
        scale = scale.mul(&lb);
    }
    scale.mul(&r)
}

/// `Res_v(f, g)` by the subresultant PRS. Both inputs must have positive
/// degree in `v`.
pub fn resultant(f: &Poly, g: &Poly, v: VarId) -> Result<Poly, ResultantError> {
    if f.degree_in(v) == 0 || g.degree_in(v) == 0 {
        return Err(ResultantError::DegreeZero { var: v });
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut sign = 1i64;
    if a.degree_in(v) < b.degree_in(v) {
        if a.degree_in(v) % 2 == 1 && b.degree_in(v) % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g_var = Poly::one();
    let mut h_var = Poly::one();
    loop {
        let da = a.degree_in(v);
        let db = b.degree_in(v);
        if db == 0 {
            break;
        }
        let d = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&a, &b, v);
        a = b;
        let mut divisor = g_var.clone();
        for _ in 0..d {
            divisor = divisor.mul(&h_var);
        }
        b = r
            .exact_div(&divisor)
            .expect("subresultant PRS division is exact");
        g_var = lead_coeff_in(&a, v);
        if d > 0 {
            let mut num = Poly::one();
            for _ in 0..d {
                num = num.mul(&g_var);
            }
            let mut den = Poly::one();
            for _ in 0..d - 1 {
                den = den.mul(&h_var);
            }
            h_var = num
                .exact_div(&den)
                .expect("subresultant PRS division is exact");
        }
        if b.is_zero() {
            // Common factor of positive degree.
            return Ok(Poly::zero());
        }
    }
    let da = a.degree_in(v);
    let mut num = Poly::one();
    for _ in 0..da {
        num = num.mul(&b);
    }
    let mut den = Poly::one();
    for _ in 0..da.saturating_sub(1) {
        den = den.mul(&h_var);
    }
    let res = num
        .exact_div(&den)
        .expect("subresultant PRS division is exact");
    Ok(if sign < 0 { res.neg() } else { res })
}

/// Remainder of univariate division over the rationals.
fn rem_univ(a: &Poly, b: &Poly, v: VarId) -> Poly {
    let db = b.degree_in(v);
    let lb = lead_coeff_in(b, v).constant_term();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = lead_coeff_in(&r, v).constant_term();
        let q = Poly::constant(lr / &lb).mul_var(v, dr - db);
        r = r.sub(&q.mul(b));
    }
    r
}

/// Primitive, positive-leading gcd of univariate rational polynomials.
pub fn gcd_univ(a: &Poly, b: &Poly, v: VarId) -> Poly {
    let mut a = a.primitive_normalized();
    let mut b = b.primitive_normalized();
    while !b.is_zero() {
        let r = rem_univ(&a, &b, v).primitive_normalized();
        a = b;
        b = r;
    }
    if a.is_zero() {
        Poly::zero()
    } else {
        a.primitive_normalized()
    }
}

/// Squarefree decomposition of a univariate polynomial (Yun's algorithm).
///
/// Returns `(factor, multiplicity)` pairs with pairwise-coprime squarefree
/// factors whose weighted product reproduces the input up to a nonzero
/// rational constant.
pub fn squarefree_decompose(
    f: &Poly,
    v: VarId,
) -> Result<Vec<(Poly, u32)>, SquarefreeError> {
    for w in f.vars() {
        if w != v {
            return Err(SquarefreeError::NonUnivariate { var: v, found: w });
        }
    }
    let f = f.primitive_normalized();
    if f.is_zero() || f.degree_in(v) == 0 {
        return Ok(Vec::new());
    }
    let df = f.derivative(v);
    let a0 = gcd_univ(&f, &df, v);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = df.exact_div(&a0).expect("gcd divides derivative");
    let mut d = c.sub(&b.derivative(v));
    let mut out = Vec::new();
    let mut i = 1u32;
    while b.degree_in(v) > 0 {
        let ai = gcd_univ(&b, &d, v);
        if ai.degree_in(v) > 0 {
            out.push((ai.clone(), i));
        }
        b = b.exact_div(&ai).expect("gcd divides");
        c = d.exact_div(&ai).expect("gcd divides");
        d = c.sub(&b.derivative(v));
        i += 1;
    }
    Ok(out)
}

/// Squarefree part: product of the distinct factors, primitive-normalized.
pub fn squarefree_part(f: &Poly, v: VarId) -> Result<Poly, SquarefreeError> {
    let factors = squarefree_decompose(f, v)?;
    let mut out = Poly::one();
    for (p, _) in factors {
        out = out.mul(&p);
    }
    Ok(out.primitive_normalized())
}

/// Naive Sylvester-determinant resultant for rational univariate inputs.
/// Slow but independent of the PRS; kept for cross-checks.
pub fn sylvester_resultant_univ(f: &Poly, g: &Poly, v: VarId) -> Option<crate::rat::Rational> {
    let m = f.degree_in(v) as usize;
    let n = g.degree_in(v) as usize;
    if m == 0 || n == 0 {
        return None;
    }
    let fc: Vec<_> = f.coeffs_in(v).iter().map(|c| c.constant_term()).collect();
    let gc: Vec<_> = g.coeffs_in(v).iter().map(|c| c.constant_term()).collect();
    let size = m + n;
    let mut mat = vec![vec![rat(0); size]; size];
    for row in 0..n {
        for (idx, c) in fc.iter().enumerate() {
            mat[row][row + m - idx] = c.clone();
        }
    }
    for row in 0..m {
        for (idx, c) in gc.iter().enumerate() {
            mat[n + row][row + n - idx] = c.clone();
        }
    }
    // Gaussian elimination with exact arithmetic.
    let mut det = rat(1);
    for col in 0..size {
        let pivot = (col..size).find(|&r| !mat[r][col].is_zero())?;
        if pivot != col {
            mat.swap(pivot, col);
            det = -det;
        }
        let pv = mat[col][col].clone();
        det *= &pv;
        for r in col + 1..size {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &pv;
            for c in col..size {
                let sub = &factor * &mat[col][c];
                mat[r][c] -= sub;
            }
        }
    }
    Some(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::var::VarId;

    fn z() -> Poly {
        Poly::var(VarId::Z)
    }

    #[test]
    fn linear_elimination() {
        // Res_z(z - X, z^2 - Y) = Y - X^2
        let f = z().sub(&Poly::var(VarId::X));
        let g = z().pow(2).sub(&Poly::var(VarId::Y));
        let r = resultant(&f, &g, VarId::Z).unwrap();
        let expected = Poly::var(VarId::Y).sub(&Poly::var(VarId::X).pow(2));
        assert_eq!(r.primitive_normalized(), expected.primitive_normalized());
    }

    #[test]
    fn coprime_power_maps() {
        // Res_z(z^3 - X, z^4 - Y) = +/-(Y^3 - X^4); likewise (3,5).
        let x = Poly::var(VarId::X);
        let y = Poly::var(VarId::Y);
        let r34 = resultant(&z().pow(3).sub(&x), &z().pow(4).sub(&y), VarId::Z).unwrap();
        assert_eq!(
            r34.primitive_normalized(),
            y.pow(3).sub(&x.pow(4)).primitive_normalized()
        );
        let r35 = resultant(&z().pow(3).sub(&x), &z().pow(5).sub(&y), VarId::Z).unwrap();
        assert_eq!(
            r35.primitive_normalized(),
            y.pow(3).sub(&x.pow(5)).primitive_normalized()
        );
    }

    #[test]
    fn shared_root_gives_zero() {
        let shared = z().sub(&Poly::int(2));
        let f = shared.mul(&z().add(&Poly::one()));
        let g = shared.mul(&z().pow(2).add(&Poly::int(5)));
        assert_eq!(resultant(&f, &g, VarId::Z).unwrap(), Poly::zero());
    }

    #[test]
    fn rejects_degree_zero() {
        let f = Poly::var(VarId::X);
        let g = z().pow(2);
        assert!(matches!(
            resultant(&f, &g, VarId::Z),
            Err(ResultantError::DegreeZero { .. })
        ));
    }

    #[test]
    fn prs_matches_sylvester_on_random_specializations() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut f = z().pow(3);
            let mut g = z().pow(4);
            for e in 0..3 {
                f = f.add(&Poly::int(rng.gen_range(-5..5)).mul_var(VarId::Z, e));
            }
            for e in 0..4 {
                g = g.add(&Poly::int(rng.gen_range(-5..5)).mul_var(VarId::Z, e));
            }
            let prs = resultant(&f, &g, VarId::Z).unwrap().constant_term();
            let syl = sylvester_resultant_univ(&f, &g, VarId::Z);
            match syl {
                Some(det) => assert_eq!(prs, det),
                // Singular elimination only happens when the determinant is 0.
                None => assert_eq!(prs, rat(0)),
            }
        }
    }

    #[test]
    fn pure_power_decomposition() {
        let lam = Poly::var(VarId::Lam);
        let d = squarefree_decompose(&lam.pow(3), VarId::Lam).unwrap();
        assert_eq!(d, vec![(lam.clone(), 3)]);
    }

    #[test]
    fn squarefree_cubic() {
        let lam = Poly::var(VarId::Lam);
        let f = lam.pow(3).add(&Poly::one());
        let d = squarefree_decompose(&f, VarId::Lam).unwrap();
        assert_eq!(d, vec![(f.clone(), 1)]);
        assert_eq!(gcd_univ(&f, &f.derivative(VarId::Lam), VarId::Lam), Poly::one());
    }

    #[test]
    fn squared_factor_shape() {
        // (lam + 2)(lam - 1)^2
        let lam = Poly::var(VarId::Lam);
        let f = lam
            .add(&Poly::int(2))
            .mul(&lam.sub(&Poly::one()).pow(2));
        let d = squarefree_decompose(&f, VarId::Lam).unwrap();
        assert_eq!(
            d,
            vec![
                (lam.add(&Poly::int(2)), 1),
                (lam.sub(&Poly::one()), 2)
            ]
        );
        // Re-multiplying reproduces the input up to a rational constant.
        let mut prod = Poly::one();
        for (p, k) in &d {
            prod = prod.mul(&p.pow(*k));
        }
        assert_eq!(prod.primitive_normalized(), f.primitive_normalized());
    }

    #[test]
    fn rejects_multivariate() {
        let f = Poly::var(VarId::Lam).mul(&Poly::var(VarId::X));
        assert!(squarefree_decompose(&f, VarId::Lam).is_err());
    }
}
