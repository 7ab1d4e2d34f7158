//! Reference relation tables the engine cross-checks its derivation against.
//!
//! Each entry carries the relation exactly as printed in the reference table
//! (`printed`) and, where the printed form is suspected of a transcription
//! slip, the corrected form the engine expects (`corrected`). The verifier
//! reports a relation as flagged when only the corrected form vanishes on the
//! derived constraint variety.

use crate::closure::ConstraintSet;
use crate::poly::Poly;
use crate::rat::rat;
use crate::var::VarId;

fn h(j: i64, k: i64) -> Poly {
    Poly::var(VarId::h(j as i32, k as i32))
}

fn pv(j: i64) -> Poly {
    Poly::var(VarId::p(j as u32))
}

#[derive(Debug, Clone)]
pub struct ReferenceRelation {
    pub name: String,
    pub printed: Poly,
    pub corrected: Option<Poly>,
    pub note: Option<&'static str>,
}

impl ReferenceRelation {
    fn plain(name: impl Into<String>, printed: Poly) -> Self {
        ReferenceRelation {
            name: name.into(),
            printed,
            corrected: None,
            note: None,
        }
    }

    fn flagged(
        name: impl Into<String>,
        printed: Poly,
        corrected: Poly,
        note: &'static str,
    ) -> Self {
        ReferenceRelation {
            name: name.into(),
            printed,
            corrected: Some(corrected),
            note: Some(note),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum VerdictStatus {
    /// Printed form vanishes identically after substitution.
    Pass,
    /// Printed form vanishes modulo the unresolved ideal.
    PassModuloUnresolved,
    /// Printed form does not vanish but the corrected form does.
    Flagged,
    /// The residue involves symbols beyond the truncation, so the relation
    /// cannot be decided at this depth.
    Undecided,
    /// Neither form vanishes.
    Fail,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub name: String,
    pub status: VerdictStatus,
    pub detail: Option<String>,
}

impl Verdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "status": format!("{:?}", self.status),
            "detail": self.detail,
        })
    }
}

/// Checks every reference relation of stratum `cs.m` against the derived
/// constraint set.
pub fn verify(cs: &ConstraintSet) -> Vec<Verdict> {
    relations(cs.m)
        .into_iter()
        .map(|r| {
            let direct = cs.apply(&r.printed);
            if direct.is_zero() {
                return Verdict {
                    name: r.name,
                    status: VerdictStatus::Pass,
                    detail: None,
                };
            }
            if cs.vanishes(&r.printed) {
                return Verdict {
                    name: r.name,
                    status: VerdictStatus::PassModuloUnresolved,
                    detail: None,
                };
            }
            if let Some(corrected) = &r.corrected {
                if cs.vanishes(corrected) {
                    return Verdict {
                        name: r.name,
                        status: VerdictStatus::Flagged,
                        detail: Some(format!(
                            "printed form leaves {}; corrected form {} vanishes ({})",
                            direct,
                            corrected,
                            r.note.unwrap_or("transcription slip")
                        )),
                    };
                }
            }
            // A residue mentioning symbols the derivation never reached
            // (neither solved nor independent) is out of scope at this
            // truncation, not a refutation.
            let solved: std::collections::BTreeSet<_> =
                cs.solved.iter().map(|(v, _)| *v).collect();
            let out_of_scope = direct
                .vars()
                .iter()
                .any(|v| !solved.contains(v) && !cs.independents.contains(v));
            if out_of_scope {
                return Verdict {
                    name: r.name,
                    status: VerdictStatus::Undecided,
                    detail: Some(format!(
                        "residue {direct} mentions symbols beyond this truncation"
                    )),
                };
            }
            Verdict {
                name: r.name,
                status: VerdictStatus::Fail,
                detail: Some(format!("residue {direct}")),
            }
        })
        .collect()
}

/// The reference relation table of stratum `m` (sampled instances of the
/// indexed families, restricted to indices the default derivation resolves).
pub fn relations(m: i64) -> Vec<ReferenceRelation> {
    match m {
        0 => relations_s0(),
        1 => relations_s1(),
        2 => relations_s2(),
        3 => relations_s3(),
        4 => relations_s4(),
        5 => relations_s5(),
        _ => Vec::new(),
    }
}

fn relations_s0() -> Vec<ReferenceRelation> {
    let mut out = Vec::new();
    // Even elements are exact powers: H^{2n}_i = 0.
    for n in 0..=3i64 {
        for i in 1..=4i64 {
            out.push(ReferenceRelation::plain(
                format!("s0-even-tail[n={n},i={i}]"),
                h(2 * n, i),
            ));
        }
    }
    // Even-depth tails of odd elements vanish: H^{2n+i}_{2i} = 0 (odd i).
    for n in 0..=2i64 {
        for i in [1i64, 3] {
            out.push(ReferenceRelation::plain(
                format!("s0-mixed-tail[n={n},i={i}]"),
                h(2 * n + i, 2 * i),
            ));
        }
    }
    // Family A: H^{2m+1}_{2(k+n)+1} - H^{2(m+n)+1}_{2k+1}
    //           - sum_{s=0}^{n-1} H^{2m+1}_{2s+1} H^{2(n-s)-1}_{2k+1} = 0.
    for mm in 0..=1i64 {
        for n in 1..=2i64 {
            for k in 0..=2i64 {
                let mut p = h(2 * mm + 1, 2 * (k + n) + 1).sub(&h(2 * (mm + n) + 1, 2 * k + 1));
                for s in 0..n {
                    p = p.sub(&h(2 * mm + 1, 2 * s + 1).mul(&h(2 * (n - s) - 1, 2 * k + 1)));
                }
                out.push(ReferenceRelation::plain(
                    format!("s0-shift-family[m={mm},n={n},k={k}]"),
                    p,
                ));
            }
        }
    }
    // Family B: H^{2m+1}_{2(k+n)+1} + H^{2n+1}_{2(k+m)+1}
    //           + sum_{l=0}^{k-1} H^{2m+1}_{2l+1} H^{2n+1}_{2(k-l)-1} = 0,
    // sampled for k >= 1 (the k = 0 instances describe the constant structure
    // constant of the product rather than a vanishing relation).
    for mm in 0..=1i64 {
        for n in 0..=1i64 {
            for k in 1..=2i64 {
                let mut p = h(2 * mm + 1, 2 * (k + n) + 1).add(&h(2 * n + 1, 2 * (k + mm) + 1));
                for l in 0..k {
                    p = p.add(&h(2 * mm + 1, 2 * l + 1).mul(&h(2 * n + 1, 2 * (k - l) - 1)));
                }
                out.push(ReferenceRelation::plain(
                    format!("s0-product-family[m={mm},n={n},k={k}]"),
                    p,
                ));
            }
        }
    }
    out
}

fn relations_s1() -> Vec<ReferenceRelation> {
    let mut out = Vec::new();
    // 2 H^1_1 - H^2_0 + (H^1_0)^2 = 0 as printed; the engine derives the
    // squared term with the opposite sign.
    out.push(ReferenceRelation::flagged(
        "s1-quadratic-shift",
        h(1, 1).scale(&rat(2)).sub(&h(2, 0)).add(&h(1, 0).pow(2)),
        h(1, 1).scale(&rat(2)).sub(&h(2, 0)).sub(&h(1, 0).pow(2)),
        "sign of the squared term",
    ));
    out.push(ReferenceRelation::plain(
        "s1-cubic-shift",
        h(3, 0).add(&h(1, 0).mul(&h(2, 0))).add(&h(1, 0).mul(&h(1, 1))),
    ));
    // H^{2(j+k)}_0 + H^{2j}_0 H^{2k}_0 = 0.
    for j in 1..=2i64 {
        for k in j..=2i64 {
            out.push(ReferenceRelation::plain(
                format!("s1-even-constants[j={j},k={k}]"),
                h(2 * (j + k), 0).add(&h(2 * j, 0).mul(&h(2 * k, 0))),
            ));
        }
    }
    // Third family as printed: the first/fifth and second/fourth terms cancel
    // pairwise, leaving a truncated relation; the corrected form restores the
    // leading tail term.
    for j in 1..=2i64 {
        for k in 0..=1i64 {
            for l in 0..=1i64 {
                let mut printed = h(2 * k + 1, 2 * (j + l) + 1)
                    .add(&h(2 * j, 0).mul(&h(2 * k + 1, 2 * l + 1)))
                    .sub(&h(2 * (k + j) + 1, 2 * l + 1))
                    .sub(&h(2 * j, 0).mul(&h(2 * k + 1, 2 * l + 1)))
                    .sub(&h(2 * k + 1, 2 * (l + j) + 1));
                let mut corrected =
                    h(2 * k + 1, 2 * (j + l) + 1).sub(&h(2 * (k + j) + 1, 2 * l + 1));
                for s in 0..j {
                    let t = h(2 * k + 1, 2 * s + 1).mul(&h(2 * (j - s) - 1, 2 * l + 1));
                    printed = printed.sub(&t);
                    corrected = corrected.sub(&t);
                }
                out.push(ReferenceRelation::flagged(
                    format!("s1-shift-family[j={j},k={k},l={l}]"),
                    printed,
                    corrected,
                    "duplicated cancelling terms drop the leading tail symbol",
                ));
            }
        }
    }
    // H^{2n}_0 = -(-H^2_0)^n.
    for n in 2..=3i64 {
        let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
        out.push(ReferenceRelation::plain(
            format!("s1-even-power[n={n}]"),
            h(2 * n, 0).add(&h(2, 0).pow(n as u32).scale(&sign)),
        ));
    }
    // H^{2n}_i = 0.
    for n in 1..=2i64 {
        for i in 1..=3i64 {
            out.push(ReferenceRelation::plain(
                format!("s1-even-tail[n={n},i={i}]"),
                h(2 * n, i),
            ));
        }
    }
    out
}

fn relations_s2() -> Vec<ReferenceRelation> {
    let mut out = Vec::new();
    // H^{2n}_k = 0 for k = -1, 1, 2, 3, ... (and the order-0 tails).
    for k in 1..=3i64 {
        out.push(ReferenceRelation::plain(
            format!("s2-unit-tail[k={k}]"),
            h(0, k),
        ));
    }
    for n in 1..=3i64 {
        for k in [-1i64, 1, 2, 3] {
            out.push(ReferenceRelation::plain(
                format!("s2-even-tail[n={n},k={k}]"),
                h(2 * n, k),
            ));
        }
    }
    // Printed: H^{2n+1}_k = 0 for all n, k >= 1; that would kill the free
    // odd tails. The corrected reading restricts to even depths.
    for n in 1..=2i64 {
        for k in 1..=2i64 {
            out.push(ReferenceRelation::flagged(
                format!("s2-odd-even-tail[n={n},k={k}]"),
                h(2 * n + 1, k),
                h(2 * n + 1, 2 * k),
                "tail depth index should read 2k",
            ));
        }
    }
    // Shift family; printed has the basis order exponent 2(n-s)+1, which
    // exceeds the product order; the engine derives 2(n-s)-1.
    for mm in 1..=2i64 {
        for n in 1..=2i64 {
            if mm + n > 3 {
                continue;
            }
            for k in [-1i64, 0, 1] {
                let head = h(2 * mm + 1, 2 * (k + n) + 1).sub(&h(2 * (mm + n) + 1, 2 * k + 1));
                let mut printed = head.clone();
                let mut corrected = head;
                for s in -1..=(n - 2) {
                    printed =
                        printed.sub(&h(2 * mm + 1, 2 * s + 1).mul(&h(2 * (n - s) + 1, 2 * k + 1)));
                    corrected =
                        corrected.sub(&h(2 * mm + 1, 2 * s + 1).mul(&h(2 * (n - s) - 1, 2 * k + 1)));
                }
                out.push(ReferenceRelation::flagged(
                    format!("s2-shift-family[m={mm},n={n},k={k}]"),
                    printed,
                    corrected,
                    "basis order index off by two",
                ));
            }
        }
    }
    // Product family (free index resolved as k), sampled for k >= 1.
    for mm in 1..=2i64 {
        for n in mm..=2i64 {
            if mm + n > 3 {
                continue;
            }
            for k in 1..=2i64 {
                let mut p = h(2 * mm + 1, 2 * (n + k) + 1).add(&h(2 * n + 1, 2 * (mm + k) + 1));
                for s in -1..=k {
                    p = p.add(&h(2 * mm + 1, 2 * s + 1).mul(&h(2 * n + 1, 2 * (k - s) - 1)));
                }
                out.push(ReferenceRelation::plain(
                    format!("s2-product-family[m={mm},n={n},k={k}]"),
                    p,
                ));
            }
        }
    }
    out
}

fn relations_s3() -> Vec<ReferenceRelation> {
    let mut out = Vec::new();
    let a = h(3, -2);
    let b = h(3, 0);
    let c = h(4, -2);
    let d = h(4, 0);
    // Polynomiality: tails vanish.
    for j in 3..=6i64 {
        for k in 1..=4i64 {
            out.push(ReferenceRelation::plain(
                format!("s3-poly[j={j},k={k}]"),
                h(j, k),
            ));
        }
    }
    // Linear recursion on the fixed parts.
    for j in 5..=8i64 {
        out.push(ReferenceRelation::plain(
            format!("s3-fixed-z2[j={j}]"),
            h(j, -2).add(&h(j - 2, -2).mul(&c)).sub(&h(j - 2, 0)),
        ));
        out.push(ReferenceRelation::plain(
            format!("s3-fixed-z0[j={j}]"),
            h(j, 0).add(&h(j - 2, -2).mul(&d)),
        ));
    }
    // The two quadratic generators.
    out.push(ReferenceRelation::plain(
        "s3-quadratic-1",
        d.add(&b.mul(&a).scale(&rat(2)))
            .sub(&a.pow(2).mul(&c))
            .sub(&c.pow(2)),
    ));
    out.push(ReferenceRelation::plain(
        "s3-quadratic-2",
        b.pow(2).sub(&a.pow(2).mul(&d)).sub(&c.mul(&d)),
    ));
    // Explicit low rows of the fixed-part recursion.
    out.push(ReferenceRelation::plain(
        "s3-row-5-z2",
        h(5, -2).sub(&b).add(&a.mul(&c)),
    ));
    out.push(ReferenceRelation::plain(
        "s3-row-5-z0",
        h(5, 0).add(&a.mul(&d)),
    ));
    out.push(ReferenceRelation::plain(
        "s3-row-6-z2",
        h(6, -2).sub(&d).add(&c.pow(2)),
    ));
    out.push(ReferenceRelation::plain(
        "s3-row-6-z0",
        h(6, 0).add(&c.mul(&d)),
    ));
    out.push(ReferenceRelation::plain(
        "s3-row-7-z2",
        h(7, -2).add(&a.mul(&h(6, -2))).add(&b.mul(&c)),
    ));
    out.push(ReferenceRelation::plain(
        "s3-row-7-z0",
        h(7, 0).add(&a.mul(&h(6, 0))).add(&b.mul(&d)),
    ));
    // Square-of-p3 coefficient conditions; printed with minus signs, but the
    // coefficient match gives plus signs (then both reduce to the quadratic
    // generators).
    out.push(ReferenceRelation::flagged(
        "s3-square-z2",
        h(6, -2)
            .sub(&a.mul(&h(5, -2)).scale(&rat(2)))
            .sub(&a.pow(2).mul(&c)),
        h(6, -2)
            .add(&a.mul(&h(5, -2)).scale(&rat(2)))
            .add(&a.pow(2).mul(&c)),
        "signs of the correction terms",
    ));
    out.push(ReferenceRelation::flagged(
        "s3-square-z0",
        h(6, 0)
            .sub(&b.pow(2))
            .sub(&a.mul(&h(5, 0)).scale(&rat(2)))
            .sub(&a.pow(2).mul(&d)),
        h(6, 0)
            .add(&b.pow(2))
            .add(&a.mul(&h(5, 0)).scale(&rat(2)))
            .add(&a.pow(2).mul(&d)),
        "signs of the correction terms",
    ));
    out
}

fn relations_s4() -> Vec<ReferenceRelation> {
    let mut out = Vec::new();
    // Even elements are exact powers: gap corrections and tails vanish.
    out.push(ReferenceRelation::plain("s4-even-gap[2,-1]", h(2, -1)));
    for (j, k) in [(4i64, -1i64), (4, -3), (6, -1), (6, -3)] {
        out.push(ReferenceRelation::plain(
            format!("s4-even-gap[{j},{k}]"),
            h(j, k),
        ));
    }
    for j in [2i64, 4, 6] {
        for k in 1..=2i64 {
            out.push(ReferenceRelation::plain(
                format!("s4-even-tail[{j},{k}]"),
                h(j, k),
            ));
        }
    }
    // Even-depth tails of odd elements vanish.
    for (j, k) in [(5i64, 2i64), (5, 4), (7, 2)] {
        out.push(ReferenceRelation::plain(
            format!("s4-odd-even-tail[{j},{k}]"),
            h(j, k),
        ));
    }
    out
}

fn relations_s5() -> Vec<ReferenceRelation> {
    let mut out = Vec::new();
    let a = h(3, -2);
    let b = h(3, 0);
    // Polynomiality.
    for j in [3i64, 5, 6] {
        for k in 1..=3i64 {
            out.push(ReferenceRelation::plain(
                format!("s5-poly[j={j},k={k}]"),
                h(j, k),
            ));
        }
    }
    // Fixed-part table rows through order 7.
    out.push(ReferenceRelation::plain("s5-row[5,0]", h(5, 0)));
    out.push(ReferenceRelation::plain("s5-row[5,-2]", h(5, -2).sub(&b)));
    out.push(ReferenceRelation::plain("s5-row[5,-4]", h(5, -4).sub(&a)));
    out.push(ReferenceRelation::plain(
        "s5-row[6,0]",
        h(6, 0).add(&b.pow(2)),
    ));
    out.push(ReferenceRelation::plain(
        "s5-row[6,-2]",
        h(6, -2).add(&a.mul(&b).scale(&rat(2))),
    ));
    out.push(ReferenceRelation::plain(
        "s5-row[6,-4]",
        h(6, -4).add(&a.pow(2)),
    ));
    out.push(ReferenceRelation::plain(
        "s5-row[7,-4]",
        h(7, -4).sub(&a.pow(3)).sub(&b),
    ));
    out.push(ReferenceRelation::plain(
        "s5-row[7,-2]",
        h(7, -2).sub(&a.pow(2).mul(&b).scale(&rat(2))),
    ));
    out.push(ReferenceRelation::plain(
        "s5-row[7,0]",
        h(7, 0).sub(&a.mul(&b.pow(2))),
    ));
    out
}

/// The sextic relation of stratum 2 in the coordinates `(lam, p3)`.
pub fn c6() -> Poly {
    let lam = Poly::var(VarId::Lam);
    let a = h(3, -1);
    let b = h(3, 1);
    let c = h(3, 3);
    pv(3)
        .pow(2)
        .sub(&lam.pow(3))
        .sub(&a.mul(&lam.pow(2)).scale(&rat(2)))
        .sub(&a.pow(2).add(&b.scale(&rat(2))).mul(&lam))
        .sub(&a.mul(&b).scale(&rat(2)))
        .sub(&c.scale(&rat(2)))
}

/// Reference parameterization of the twisted cubic: `p_3` as a polynomial
/// in `p_1`.
pub fn veronese_p3() -> Poly {
    let p1 = pv(1);
    p1.pow(3).sub(&h(1, 1).mul(&p1).scale(&rat(3)))
}

/// Reference parameterization of the degree-5 normal curve.
pub fn veronese_p5() -> Poly {
    let p1 = pv(1);
    let hh = h(1, 1);
    p1.pow(5)
        .sub(&hh.mul(&p1.pow(3)).scale(&rat(5)))
        .add(&hh.pow(2).mul(&p1).scale(&crate::rat::ratio(15, 2)))
}

/// The plane (3,4) curve of stratum 3, in `(p3, p4)` with the four fixed
/// parameters.
pub fn plane_curve_3_4() -> Poly {
    let x = pv(3);
    let y = pv(4);
    let a = h(3, -2);
    let b = h(3, 0);
    let c = h(4, -2);
    let d = h(4, 0);
    let mut p = y.pow(3).sub(&x.pow(4));
    p = p.add(&a.mul(&x).mul(&y.pow(2)).scale(&rat(4)));
    // -(3c - 2a^2) x^2 y
    p = p.sub(
        &c.scale(&rat(3))
            .sub(&a.pow(2).scale(&rat(2)))
            .mul(&x.pow(2).mul(&y)),
    );
    // -(-4b + 2ac) x^3
    p = p.sub(
        &b.scale(&rat(-4))
            .add(&a.mul(&c).scale(&rat(2)))
            .mul(&x.pow(3)),
    );
    // -(3d + 4ab + a^4 + a^2 c) y^2
    p = p.sub(
        &d.scale(&rat(3))
            .add(&a.mul(&b).scale(&rat(4)))
            .add(&a.pow(4))
            .add(&a.pow(2).mul(&c))
            .mul(&y.pow(2)),
    );
    // -(4a^2 b + 8ad - 2ac^2 - 6bc - 2a^3 c) x y
    p = p.sub(
        &a.pow(2)
            .mul(&b)
            .scale(&rat(4))
            .add(&a.mul(&d).scale(&rat(8)))
            .sub(&a.mul(&c.pow(2)).scale(&rat(2)))
            .sub(&b.mul(&c).scale(&rat(6)))
            .sub(&a.pow(3).mul(&c).scale(&rat(2)))
            .mul(&x.mul(&y)),
    );
    // -(-3dc + 6b^2 - 6abc + 2a^2 d + a^2 c^2 + c^3) x^2
    p = p.sub(
        &d.mul(&c)
            .scale(&rat(-3))
            .add(&b.pow(2).scale(&rat(6)))
            .sub(&a.mul(&b).mul(&c).scale(&rat(6)))
            .add(&a.pow(2).mul(&d).scale(&rat(2)))
            .add(&a.pow(2).mul(&c.pow(2)))
            .add(&c.pow(3))
            .mul(&x.pow(2)),
    );
    // -(-3d^2 - 2b^2 a^2 - 2a^2 d c - 2a^4 d + 3b^2 c + 2abc^2 - 8abd + 2b a^3 c) y
    p = p.sub(
        &d.pow(2)
            .scale(&rat(-3))
            .sub(&b.pow(2).mul(&a.pow(2)).scale(&rat(2)))
            .sub(&a.pow(2).mul(&d).mul(&c).scale(&rat(2)))
            .sub(&a.pow(4).mul(&d).scale(&rat(2)))
            .add(&b.pow(2).mul(&c).scale(&rat(3)))
            .add(&a.mul(&b).mul(&c.pow(2)).scale(&rat(2)))
            .sub(&a.mul(&b).mul(&d).scale(&rat(8)))
            .add(&b.mul(&a.pow(3)).mul(&c).scale(&rat(2)))
            .mul(&y),
    );
    // -(-4b^3 - 4ad^2 + 6bdc - 4bda^2 + 6b^2 ac + 2dac^2 + 2da^3 c
    //   - 2ba^2 c^2 - 2bc^3) x
    p = p.sub(
        &b.pow(3)
            .scale(&rat(-4))
            .sub(&a.mul(&d.pow(2)).scale(&rat(4)))
            .add(&b.mul(&d).mul(&c).scale(&rat(6)))
            .sub(&b.mul(&d).mul(&a.pow(2)).scale(&rat(4)))
            .add(&b.pow(2).mul(&a).mul(&c).scale(&rat(6)))
            .add(&d.mul(&a).mul(&c.pow(2)).scale(&rat(2)))
            .add(&d.mul(&a.pow(3)).mul(&c).scale(&rat(2)))
            .sub(&b.mul(&a.pow(2)).mul(&c.pow(2)).scale(&rat(2)))
            .sub(&b.mul(&c.pow(3)).scale(&rat(2)))
            .mul(&x),
    );
    p
}

/// The plane (3,5) curve of stratum 5, in `(p3, p5)`.
pub fn plane_curve_3_5() -> Poly {
    let x = pv(3);
    let y = pv(5);
    let a = h(3, -2);
    let b = h(3, 0);
    y.pow(3)
        .sub(&x.pow(5))
        .add(&a.mul(&x.pow(3)).mul(&y).scale(&rat(2)))
        .sub(&a.pow(2).mul(&x).mul(&y.pow(2)))
        .add(&b.mul(&x.pow(4)).scale(&rat(2)))
        .sub(&b.mul(&a).mul(&x.pow(2)).mul(&y).scale(&rat(2)))
        .sub(&b.pow(2).mul(&x.pow(3)))
}

/// The plane (5,6) curve of stratum 5, in `(p5, p6)`.
pub fn plane_curve_5_6() -> Poly {
    let x = pv(5);
    let y = pv(6);
    let a = h(3, -2);
    let b = h(3, 0);
    let mut p = y.pow(5).sub(&x.pow(6));
    p = p.add(&a.mul(&x).mul(&y.pow(4)).scale(&rat(6)));
    p = p.add(&a.pow(2).mul(&x.pow(2)).mul(&y.pow(3)).scale(&rat(14)));
    // -(-6b - 16a^3) x^3 y^2
    p = p.sub(
        &b.scale(&rat(-6))
            .sub(&a.pow(3).scale(&rat(16)))
            .mul(&x.pow(3).mul(&y.pow(2))),
    );
    // -(-16ab - 9a^4) x^4 y
    p = p.sub(
        &a.mul(&b)
            .scale(&rat(-16))
            .sub(&a.pow(4).scale(&rat(9)))
            .mul(&x.pow(4).mul(&y)),
    );
    // -(-10a^2 b - 2a^5) x^5
    p = p.sub(
        &a.pow(2)
            .mul(&b)
            .scale(&rat(-10))
            .sub(&a.pow(5).scale(&rat(2)))
            .mul(&x.pow(5)),
    );
    p = p.add(&b.pow(2).mul(&y.pow(4)).scale(&rat(2)));
    p = p.add(&b.pow(2).mul(&a).mul(&x).mul(&y.pow(3)).scale(&rat(8)));
    p = p.add(
        &a.pow(2)
            .mul(&b.pow(2))
            .mul(&x.pow(2))
            .mul(&y.pow(2))
            .scale(&rat(10)),
    );
    // -(-14b^3 - 4a^3 b^2) x^3 y
    p = p.sub(
        &b.pow(3)
            .scale(&rat(-14))
            .sub(&a.pow(3).mul(&b.pow(2)).scale(&rat(4)))
            .mul(&x.pow(3).mul(&y)),
    );
    p = p.add(&b.pow(3).mul(&a).mul(&x.pow(4)).scale(&rat(20)));
    p = p.add(&b.pow(4).mul(&y.pow(3)));
    p = p.add(&b.pow(4).mul(&a).mul(&x).mul(&y.pow(2)).scale(&rat(2)));
    p = p.add(&b.pow(5).mul(&x.pow(3)).scale(&rat(8)));
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use std::collections::BTreeMap;

    #[test]
    fn c6_is_weight_graded() {
        // Under w(lam) = 2, w(p3) = 3 (and w(H^j_k) = j + k) the sextic is
        // homogeneous of weight 6; spot-check by scaling.
        let p = c6();
        let mut scaled = BTreeMap::new();
        let t = rat(2);
        scaled.insert(VarId::Lam, Poly::var(VarId::Lam).scale(&(&t * &t)));
        scaled.insert(VarId::p(3), pv(3).scale(&(&t * &t * &t)));
        scaled.insert(VarId::h(3, -1), h(3, -1).scale(&(&t * &t)));
        scaled.insert(VarId::h(3, 1), h(3, 1).scale(&(&t * &t * &t * &t)));
        scaled.insert(
            VarId::h(3, 3),
            h(3, 3).scale(&(&t * &t * &t * &t * &t * &t)),
        );
        let lhs = p.substitute_unchecked(&scaled);
        assert_eq!(lhs, p.scale(&rat(64)));
    }

    #[test]
    fn plane_curves_vanish_on_polynomial_family() {
        // Stratum 5 at (a, b): p3 = z^3 + a z^2 + b, p5 = z^2 p3,
        // p6 = p3^2 - 2a p5 - 2b p3.
        let z = Poly::var(VarId::Z);
        for (av, bv) in [(1i64, 2i64), (-3, 5), (0, 1), (2, -7)] {
            let a = Poly::int(av);
            let b = Poly::int(bv);
            let q3 = z.pow(3).add(&a.mul(&z.pow(2))).add(&b);
            let q5 = z.pow(2).mul(&q3);
            let q6 = q3
                .pow(2)
                .sub(&a.mul(&q5).scale(&rat(2)))
                .sub(&b.mul(&q3).scale(&rat(2)));
            let mut bind = BTreeMap::new();
            bind.insert(VarId::p(3), q3.clone());
            bind.insert(VarId::p(5), q5.clone());
            bind.insert(VarId::h(3, -2), a.clone());
            bind.insert(VarId::h(3, 0), b.clone());
            assert!(plane_curve_3_5().substitute_unchecked(&bind).is_zero());
            let mut bind56 = BTreeMap::new();
            bind56.insert(VarId::p(5), q5);
            bind56.insert(VarId::p(6), q6);
            bind56.insert(VarId::h(3, -2), a);
            bind56.insert(VarId::h(3, 0), b);
            assert!(plane_curve_5_6().substitute_unchecked(&bind56).is_zero());
        }
    }

    #[test]
    fn quartic_curve_vanishes_on_rational_family() {
        // Stratum 3 rational family (a, b, c, d) = (0, t^3, t^2, t^4):
        // p3 = z^3 + t^3, p4 = z^4 + t^2 z^2 + t^4.
        let z = Poly::var(VarId::Z);
        let t = Poly::var(VarId::T);
        let q3 = z.pow(3).add(&t.pow(3));
        let q4 = z.pow(4).add(&t.pow(2).mul(&z.pow(2))).add(&t.pow(4));
        let mut bind = BTreeMap::new();
        bind.insert(VarId::p(3), q3);
        bind.insert(VarId::p(4), q4);
        bind.insert(VarId::h(3, -2), Poly::zero());
        bind.insert(VarId::h(3, 0), t.pow(3));
        bind.insert(VarId::h(4, -2), t.pow(2));
        bind.insert(VarId::h(4, 0), t.pow(4));
        assert!(plane_curve_3_4().substitute_unchecked(&bind).is_zero());
        // The family satisfies both quadratic generators.
        for r in ["s3-quadratic-1", "s3-quadratic-2"] {
            let rel = relations(3).into_iter().find(|x| x.name == r).unwrap();
            assert!(rel.printed.substitute_unchecked(&bind).is_zero(), "{r}");
        }
    }
}
