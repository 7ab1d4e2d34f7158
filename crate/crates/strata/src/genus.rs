//! Genus certificates for hyperelliptic-shaped curves `y^2 = f(lam)`.
//!
//! The geometric genus of `y^2 = f` with `f` a nonzero univariate polynomial
//! is `floor((deg g - 1) / 2)` where `g` is the product of the irreducible
//! factors of `f` appearing with odd multiplicity: square factors split off
//! as `y -> s(lam) y'` without changing the normalization of the curve.

use crate::poly::Poly;
use crate::rat::{rat, Rational};
use crate::resultant::{squarefree_decompose, SquarefreeError};
use crate::var::VarId;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum GenusError {
    #[error("curve is not of the shape y^2 - f(lam): {detail}")]
    NotHyperelliptic { detail: String },
    #[error(transparent)]
    Squarefree(#[from] SquarefreeError),
    #[error("branch polynomial vanishes identically at the chosen point")]
    DegenerateSpecialization,
}

/// A verified genus computation: the branch polynomial, its odd-multiplicity
/// part, and the parameter point at which the curve was specialized (empty
/// when the computation was already parameter-free).
#[derive(Debug, Clone)]
pub struct GenusCert {
    pub branch: Poly,
    pub odd_part: Poly,
    pub genus: i64,
    pub squarefree: bool,
    pub point: BTreeMap<VarId, Rational>,
}

impl GenusCert {
    pub fn to_json(&self) -> serde_json::Value {
        let point: BTreeMap<String, String> = self
            .point
            .iter()
            .map(|(v, r)| (v.to_string(), crate::rat::print_rat(r)))
            .collect();
        serde_json::json!({
            "branch": self.branch.to_string(),
            "oddPart": self.odd_part.to_string(),
            "genus": self.genus,
            "squarefree": self.squarefree,
            "point": point,
        })
    }
}

/// Extracts the branch polynomial `f` from `c = a y^2 - (...)`, requiring
/// `c` to be quadratic in `y` with a constant leading coefficient and no
/// linear term.
fn branch_polynomial(curve: &Poly, y: VarId) -> Result<Poly, GenusError> {
    if curve.degree_in(y) != 2 {
        return Err(GenusError::NotHyperelliptic {
            detail: format!("degree in {y} is {}", curve.degree_in(y)),
        });
    }
    let coeffs = curve.coeffs_in(y);
    if !coeffs[1].is_zero() {
        return Err(GenusError::NotHyperelliptic {
            detail: format!("linear term in {y}: {}", coeffs[1]),
        });
    }
    if !coeffs[2].is_constant() {
        return Err(GenusError::NotHyperelliptic {
            detail: format!("leading coefficient {}", coeffs[2]),
        });
    }
    let lead = coeffs[2].constant_term();
    Ok(coeffs[0].scale(&(-lead.recip())))
}

/// Genus of `curve = 0` read as `y^2 = f(lam)`; `f` must be univariate in
/// `lam` (specialize parameters first, see [`generic_genus`]).
pub fn hyperelliptic_genus(curve: &Poly, y: VarId) -> Result<GenusCert, GenusError> {
    let f = branch_polynomial(curve, y)?;
    if f.is_zero() {
        return Err(GenusError::DegenerateSpecialization);
    }
    let dec = squarefree_decompose(&f, VarId::Lam)?;
    let mut odd = Poly::one();
    let mut squarefree = true;
    for (p, k) in &dec {
        if *k > 1 && p.degree_in(VarId::Lam) > 0 {
            squarefree = false;
        }
        if k % 2 == 1 {
            odd = odd.mul(p);
        }
    }
    let d = odd.degree_in(VarId::Lam) as i64;
    Ok(GenusCert {
        branch: f,
        odd_part: odd.primitive_normalized(),
        genus: ((d - 1).div_euclid(2)).max(0),
        squarefree,
        point: BTreeMap::new(),
    })
}

/// Genus of the generic member of a parameterized family `y^2 = f(lam; H)`:
/// samples parameter points from a seeded stream and returns the certificate
/// of maximal genus (specialization can only lower the genus, so the maximum
/// over random points is the generic value with overwhelming likelihood).
pub fn generic_genus(
    curve: &Poly,
    y: VarId,
    seed: u64,
    attempts: u32,
) -> Result<GenusCert, GenusError> {
    let f = branch_polynomial(curve, y)?;
    let params: Vec<VarId> = f
        .vars()
        .into_iter()
        .filter(|v| *v != VarId::Lam)
        .collect();
    if params.is_empty() {
        return hyperelliptic_genus(curve, y);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<GenusCert> = None;
    for _ in 0..attempts.max(1) {
        let point: BTreeMap<VarId, Rational> = params
            .iter()
            .map(|&v| (v, rat(rng.gen_range(-50i64..=50))))
            .collect();
        let bind: BTreeMap<VarId, Poly> = point
            .iter()
            .map(|(&v, r)| (v, Poly::constant(r.clone())))
            .collect();
        let fp = f.substitute_unchecked(&bind);
        if fp.is_zero() {
            continue;
        }
        let dec = squarefree_decompose(&fp, VarId::Lam)?;
        let mut odd = Poly::one();
        let mut squarefree = true;
        for (p, k) in &dec {
            if *k > 1 && p.degree_in(VarId::Lam) > 0 {
                squarefree = false;
            }
            if k % 2 == 1 {
                odd = odd.mul(p);
            }
        }
        let d = odd.degree_in(VarId::Lam) as i64;
        let cert = GenusCert {
            branch: fp,
            odd_part: odd.primitive_normalized(),
            genus: ((d - 1).div_euclid(2)).max(0),
            squarefree,
            point,
        };
        if best.as_ref().map_or(true, |b| cert.genus > b.genus) {
            best = Some(cert);
        }
    }
    best.ok_or(GenusError::DegenerateSpecialization)
}

/// Sampling report for injectivity of a polynomial parameterization
/// `z -> (p_a(z), p_b(z))`: evidence, not a proof.
#[derive(Debug, Clone)]
pub struct InjectivityReport {
    pub samples: usize,
    pub collisions: usize,
    pub coprime_orders: bool,
    pub note: &'static str,
}

impl InjectivityReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "samples": self.samples,
            "collisions": self.collisions,
            "coprimeOrders": self.coprime_orders,
            "note": self.note,
        })
    }
}

fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd64(b, a % b)
    }
}

/// Samples distinct rational `z` values and counts collisions of the pair
/// `(p_a(z), p_b(z))`. `pa`/`pb` are polynomials in `z` whose remaining
/// variables are specialized from the same seeded stream.
pub fn parameterization_injectivity(
    pa: &Poly,
    pb: &Poly,
    a: i64,
    b: i64,
    seed: u64,
    samples: usize,
) -> InjectivityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut params: BTreeMap<VarId, Rational> = BTreeMap::new();
    for v in pa.vars().union(&pb.vars()) {
        if *v != VarId::Z {
            params.insert(*v, rat(rng.gen_range(-20i64..=20)));
        }
    }
    let mut seen: BTreeMap<(String, String), Rational> = BTreeMap::new();
    let mut collisions = 0usize;
    let mut used: Vec<Rational> = Vec::new();
    while used.len() < samples {
        let zv = rat(rng.gen_range(-10_000i64..=10_000));
        if used.contains(&zv) {
            continue;
        }
        used.push(zv.clone());
        let mut point = params.clone();
        point.insert(VarId::Z, zv.clone());
        let key = (
            crate::rat::print_rat(&pa.eval(&point)),
            crate::rat::print_rat(&pb.eval(&point)),
        );
        if let Some(prev) = seen.get(&key) {
            if *prev != zv {
                collisions += 1;
            }
        } else {
            seen.insert(key, zv);
        }
    }
    InjectivityReport {
        samples,
        collisions,
        coprime_orders: gcd64(a, b) == 1,
        note: "random sampling: evidence of injectivity, not a proof",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference;

    fn lam() -> Poly {
        Poly::var(VarId::Lam)
    }

    #[test]
    fn squarefree_cubic_has_genus_one() {
        // y^2 = lam^3 - lam
        let c = Poly::var(VarId::Y)
            .pow(2)
            .sub(&lam().pow(3).sub(&lam()));
        let cert = hyperelliptic_genus(&c, VarId::Y).unwrap();
        assert_eq!(cert.genus, 1);
        assert!(cert.squarefree);
    }

    #[test]
    fn odd_multiplicity_part_drives_the_genus() {
        // y^2 = (lam + 2)(lam - 1)^2: rational nodal cubic, genus 0.
        let f = lam()
            .add(&Poly::int(2))
            .mul(&lam().sub(&Poly::one()).pow(2));
        let c = Poly::var(VarId::Y).pow(2).sub(&f);
        let cert = hyperelliptic_genus(&c, VarId::Y).unwrap();
        assert_eq!(cert.genus, 0);
        assert!(!cert.squarefree);
        assert_eq!(cert.odd_part, lam().add(&Poly::int(2)));

        // y^2 = (lam - 1)^2 (lam^3 - lam + 3)(lam - 4)^3: odd part has
        // degree 4, genus 1.
        let f2 = lam()
            .sub(&Poly::one())
            .pow(2)
            .mul(&lam().pow(3).sub(&lam()).add(&Poly::int(3)))
            .mul(&lam().sub(&Poly::int(4)).pow(3));
        let c2 = Poly::var(VarId::Y).pow(2).sub(&f2);
        let cert2 = hyperelliptic_genus(&c2, VarId::Y).unwrap();
        assert_eq!(cert2.genus, 1);
    }

    #[test]
    fn shape_violations_are_reported() {
        let err = hyperelliptic_genus(&lam().pow(3), VarId::Y).unwrap_err();
        assert!(matches!(err, GenusError::NotHyperelliptic { .. }));
        let mixed = Poly::var(VarId::Y)
            .pow(2)
            .add(&Poly::var(VarId::Y).mul(&lam()));
        assert!(hyperelliptic_genus(&mixed, VarId::Y).is_err());
    }

    #[test]
    fn generic_sextic_has_genus_one() {
        let cert = generic_genus(&reference::c6(), VarId::p(3), 7, 8).unwrap();
        assert_eq!(cert.genus, 1);
        assert_eq!(cert.point.len(), 3);
    }

    #[test]
    fn generic_genus_is_deterministic_per_seed() {
        let a = generic_genus(&reference::c6(), VarId::p(3), 11, 4).unwrap();
        let b = generic_genus(&reference::c6(), VarId::p(3), 11, 4).unwrap();
        assert_eq!(a.point, b.point);
        assert_eq!(a.branch, b.branch);
    }

    #[test]
    fn veronese_parameterization_is_injective_in_samples() {
        let z = Poly::var(VarId::Z);
        let h = Poly::var(VarId::h(1, 1));
        let p3 = z.pow(3).sub(&h.mul(&z).scale(&rat(3)));
        let rep = parameterization_injectivity(&z, &p3, 1, 3, 42, 200);
        assert_eq!(rep.collisions, 0);
        assert!(rep.coprime_orders);
    }
}
