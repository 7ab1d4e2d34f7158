//! The closure engine: reduction of shifts and products against a stratum
//! basis, extraction of structure constants and obstruction polynomials,
//! weight-graded elimination of dependent parameters, and verification of
//! associativity and of the reference relation tables.

use crate::laurent::LaurentSeries;
use crate::linalg::{BoundedIdeal, GradedIdeal};
use crate::poly::Poly;
use crate::strata::{build_basis, BasisFamily, StrataError};
use crate::var::VarId;
use std::collections::{BTreeMap, BTreeSet};

/// Cofactor degree bound for ideal-membership checks against `unresolved`.
pub const MAX_COFACTOR_DEG: u32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum ClosureError {
    #[error(transparent)]
    Strata(#[from] StrataError),
    #[error("reliable window of p_{j}*p_{k} does not reach exponent 0: depth {depth} < required {required}")]
    DepthTooSmall {
        j: i64,
        k: i64,
        required: i64,
        depth: i64,
    },
    #[error("order {j} is not a basis order of stratum {m}")]
    NotBasisOrder { m: i64, j: i64 },
    #[error("order {order} exceeds the built basis range {max_order}")]
    OrderOutOfRange { order: i64, max_order: i64 },
    #[error("inconsistent constraint system: nonzero constant relation {relation}")]
    Inconsistent { relation: String },
    #[error("obstruction is not weight-homogeneous: {relation}")]
    Inhomogeneous { relation: String },
    #[error("residual did not vanish after elimination at exponent {exponent}: {relation}")]
    ResidualLeft { exponent: i64, relation: String },
}

/// Outcome of reducing one series against the basis.
#[derive(Debug, Clone)]
pub struct ReductionResult {
    /// Coefficient of `p_l` in the reduction, keyed by `l`; absent means 0.
    pub constants: BTreeMap<i64, Poly>,
    /// What is left after reduction: obstructions at exponents no basis
    /// element can absorb.
    pub residual: LaurentSeries,
}

impl ReductionResult {
    pub fn obstructions(&self) -> Vec<Poly> {
        self.residual.support().map(|(_, p)| p.clone()).collect()
    }
}

/// Greedy top-down reduction of `f` against the basis elements whose orders
/// are listed in `absorb`.
///
/// The caller guarantees `f.floor() <= 0`, so every absorbable nonnegative
/// exponent is inside the reliable window.
pub fn reduce_series(
    f: &LaurentSeries,
    basis: &BasisFamily,
    absorb: &BTreeSet<i64>,
) -> ReductionResult {
    assert!(f.floor() <= 0, "reliable window must reach exponent 0");
    let mut g = f.clone();
    let mut constants = BTreeMap::new();
    for e in (0..=g.top()).rev() {
        if !absorb.contains(&e) {
            continue;
        }
        let c = g.coeff(e);
        if c.is_zero() {
            continue;
        }
        g = g.sub(&basis.element(e).scale_poly(&c));
        constants.insert(e, c);
    }
    ReductionResult {
        constants,
        residual: g,
    }
}

/// Reduces `p_j * p_k` against the basis.
pub fn reduce_product(
    basis: &BasisFamily,
    j: i64,
    k: i64,
) -> Result<ReductionResult, ClosureError> {
    let spec = &basis.spec;
    for &o in &[j, k] {
        if !spec.basis_indices.contains(&o) {
            return Err(ClosureError::NotBasisOrder { m: spec.m, j: o });
        }
    }
    if j + k > spec.max_order {
        return Err(ClosureError::OrderOutOfRange {
            order: j + k,
            max_order: spec.max_order,
        });
    }
    let required = j.max(k);
    if required > spec.depth {
        return Err(ClosureError::DepthTooSmall {
            j,
            k,
            required,
            depth: spec.depth,
        });
    }
    let prod = basis.element(j).mul(basis.element(k));
    let absorb: BTreeSet<i64> = spec.basis_indices.iter().copied().collect();
    Ok(reduce_series(&prod, basis, &absorb))
}

/// Reduces `z^2 * p_j` against the basis.
pub fn shift_closure(basis: &BasisFamily, j: i64) -> Result<ReductionResult, ClosureError> {
    let spec = &basis.spec;
    if !spec.basis_indices.contains(&j) {
        return Err(ClosureError::NotBasisOrder { m: spec.m, j });
    }
    if j + 2 > spec.max_order {
        return Err(ClosureError::OrderOutOfRange {
            order: j + 2,
            max_order: spec.max_order,
        });
    }
    let shifted = basis.element(j).shift_even(1);
    let absorb: BTreeSet<i64> = spec.basis_indices.iter().copied().collect();
    Ok(reduce_series(&shifted, basis, &absorb))
}

/// The declared independent parameters of each stratum's closed subset.
///
/// These are the symbols the elimination never solves for; every other `H`
/// symbol is expressed through them (or ends up in `unresolved`).
pub fn protected_independents(m: i64) -> Result<Vec<VarId>, ClosureError> {
    let vars = match m {
        0 => vec![VarId::h(1, 1)],
        1 => vec![VarId::h(1, 0), VarId::h(1, 1)],
        3 => vec![
            VarId::h(3, -2),
            VarId::h(3, 0),
            VarId::h(4, -2),
            VarId::h(4, 0),
        ],
        5 => vec![VarId::h(3, -2), VarId::h(3, 0)],
        m if m % 2 == 0 => {
            // Sigma_{2n}: the 2n+1 odd coefficients of p_{2n+1}.
            let n = (m / 2) as i32;
            (-n..=n).map(|k| VarId::h(2 * n as i32 + 1, 2 * k + 1)).collect()
        }
        _ => {
            return Err(ClosureError::Strata(StrataError::UnsupportedStratum {
                m,
                max: 6,
            }))
        }
    };
    Ok(vars)
}

/// Constraints on the `H` parameters together with their resolution.
#[derive(Debug, Clone)]
pub struct ConstraintSet {
    pub m: i64,
    /// Normalized, deduplicated obstruction polynomials, weight-ascending.
    pub obstructions: Vec<Poly>,
    /// Dependent symbols with their values over the independents (triangular:
    /// no value mentions a solved symbol).
    pub solved: Vec<(VarId, Poly)>,
    pub independents: Vec<VarId>,
    /// Relations with no linear pivot, e.g. the quadratic generators of
    /// stratum 3; minimal modulo bounded ideal membership.
    pub unresolved: Vec<Poly>,
}

impl ConstraintSet {
    pub fn solved_map(&self) -> BTreeMap<VarId, Poly> {
        self.solved.iter().cloned().collect()
    }

    /// Substitutes every solved symbol into `p`.
    pub fn apply(&self, p: &Poly) -> Poly {
        p.substitute_unchecked(&self.solved_map())
    }

    pub fn unresolved_ideal(&self) -> Option<BoundedIdeal> {
        if self.unresolved.is_empty() {
            None
        } else {
            Some(BoundedIdeal::new(&self.unresolved, MAX_COFACTOR_DEG))
        }
    }

    /// Substitutes `solved` and reduces modulo the `unresolved` ideal. The
    /// reduction is exact (weight-graded) whenever the generators are
    /// weight-homogeneous, with the bounded-degree test as a fallback.
    pub fn reduce_full(&self, p: &Poly) -> Poly {
        let q = self.apply(p);
        if q.is_zero() || self.unresolved.is_empty() {
            return q;
        }
        match GradedIdeal::new(&self.unresolved) {
            Some(ideal) => ideal.reduce(&q),
            None => match self.unresolved_ideal() {
                Some(ideal) => ideal.reduce(&q),
                None => q,
            },
        }
    }

    /// Whether `p` vanishes on the constraint variety (zero after `solved`,
    /// possibly modulo the `unresolved` ideal).
    pub fn vanishes(&self, p: &Poly) -> bool {
        self.reduce_full(p).is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let solved: BTreeMap<String, String> = self
            .solved
            .iter()
            .map(|(v, p)| (v.to_string(), p.to_string()))
            .collect();
        serde_json::json!({
            "stratum": self.m,
            "obstructions": self.obstructions.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "solved": solved,
            "independents": self.independents.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "unresolved": self.unresolved.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Collects every closure obstruction of the basis: residuals of `z^2 p_j`
/// for all basis orders, and of `p_j p_k` for `j <= k <= max_index`
/// (skipping pairs whose product order exceeds the built range).
pub fn closure_obstructions(
    basis: &BasisFamily,
    max_index: i64,
) -> Result<Vec<Poly>, ClosureError> {
    let spec = &basis.spec;
    let mut raw = Vec::new();
    for &j in &spec.basis_indices {
        if j + 2 <= spec.max_order {
            raw.extend(shift_closure(basis, j)?.obstructions());
        }
    }
    for (a, &j) in spec.basis_indices.iter().enumerate() {
        if j > max_index {
            break;
        }
        for &k in &spec.basis_indices[a..] {
            if k > max_index || j + k > spec.max_order {
                break;
            }
            raw.extend(reduce_product(basis, j, k)?.obstructions());
        }
    }
    Ok(raw)
}

/// Derives the full constraint set of the basis and eliminates it.
pub fn derive_constraint_set(
    basis: &BasisFamily,
    max_index: i64,
) -> Result<ConstraintSet, ClosureError> {
    let raw = closure_obstructions(basis, max_index)?;
    let protected: BTreeSet<VarId> = protected_independents(basis.spec.m)?.into_iter().collect();
    eliminate(basis.spec.m, raw, &protected)
}

/// Convenience: builds the basis (orders up to `2 * max_index`) and derives.
pub fn derive(
    m: i64,
    depth: i64,
    max_index: i64,
) -> Result<(BasisFamily, ConstraintSet), ClosureError> {
    let basis = build_basis(m, depth, 2 * max_index)?;
    let cs = derive_constraint_set(&basis, max_index)?;
    Ok((basis, cs))
}

fn normalize_raw(raw: Vec<Poly>) -> Result<Vec<(i64, String, Poly)>, ClosureError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in raw {
        let q = p.primitive_normalized();
        if q.is_zero() {
            continue;
        }
        let key = q.to_string();
        if !seen.insert(key.clone()) {
            continue;
        }
        let w = q
            .homogeneous_weight()
            .ok_or_else(|| ClosureError::Inhomogeneous {
                relation: key.clone(),
            })?;
        out.push((w, key, q));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    Ok(out)
}

fn is_h(v: &VarId) -> bool {
    matches!(v, VarId::H { .. })
}

/// Finds a linear pivot: the highest non-protected `H` symbol in which `q`
/// is linear with a rational constant coefficient.
fn try_solve(q: &Poly, protected: &BTreeSet<VarId>) -> Option<(VarId, Poly)> {
    let vars = q.vars();
    let v = *vars
        .iter()
        .filter(|v| is_h(v) && !protected.contains(v))
        .next_back()?;
    if q.degree_in(v) != 1 {
        return None;
    }
    let coeffs = q.coeffs_in(v);
    if !coeffs[1].is_constant() {
        return None;
    }
    let c = coeffs[1].constant_term();
    Some((v, coeffs[0].scale(&(-c.recip()))))
}

/// Weight-graded elimination with a fixed protected (independent) set.
pub fn eliminate(
    m: i64,
    raw: Vec<Poly>,
    protected: &BTreeSet<VarId>,
) -> Result<ConstraintSet, ClosureError> {
    let normalized = normalize_raw(raw)?;
    let obstructions: Vec<Poly> = normalized.iter().map(|(_, _, p)| p.clone()).collect();

    let mut solved: BTreeMap<VarId, Poly> = BTreeMap::new();
    let mut pending = normalized;
    loop {
        let mut progress = false;
        let mut next = Vec::new();
        for (w, key, p) in pending {
            let q = p.substitute_unchecked(&solved);
            if q.is_zero() {
                continue;
            }
            if q.is_constant() {
                return Err(ClosureError::Inconsistent {
                    relation: q.to_string(),
                });
            }
            match try_solve(&q, protected) {
                Some((v, value)) => {
                    // Keep the triangular invariant: no solved value mentions
                    // a solved symbol.
                    for val in solved.values_mut() {
                        if val.contains_var(v) {
                            *val = val.substitute_var(v, &value);
                        }
                    }
                    solved.insert(v, value);
                    progress = true;
                }
                None => next.push((w, key, q)),
            }
        }
        pending = next;
        if !progress || pending.is_empty() {
            break;
        }
    }

    // Relations without a linear pivot: back-substitute, normalize, and keep
    // a minimal generating subset under bounded ideal membership.
    let mut finals: Vec<(i64, String, Poly)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (_, _, p) in pending {
        let q = p.substitute_unchecked(&solved).primitive_normalized();
        if q.is_zero() {
            continue;
        }
        if q.is_constant() {
            return Err(ClosureError::Inconsistent {
                relation: q.to_string(),
            });
        }
        let key = q.to_string();
        if !seen.insert(key.clone()) {
            continue;
        }
        let w = q.homogeneous_weight().unwrap_or(0);
        finals.push((w, key, q));
    }
    finals.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    let mut unresolved: Vec<Poly> = Vec::new();
    for (_, _, q) in finals {
        // Reduce each candidate modulo the generators accepted so far, so the
        // kept set is both minimal and canonical (no redundant multiples of
        // earlier generators folded into later ones).
        let reduced = if unresolved.is_empty() {
            q
        } else {
            match GradedIdeal::new(&unresolved) {
                Some(ideal) => ideal.reduce(&q),
                None => {
                    if BoundedIdeal::new(&unresolved, MAX_COFACTOR_DEG).contains(&q) {
                        Poly::zero()
                    } else {
                        q
                    }
                }
            }
        };
        if !reduced.is_zero() {
            unresolved.push(reduced.primitive_normalized());
        }
    }

    Ok(ConstraintSet {
        m,
        obstructions,
        solved: solved.into_iter().collect(),
        independents: protected.iter().copied().collect(),
        unresolved,
    })
}

/// Structure constants of all pairs `j <= k <= max_index`, with `solved`
/// substituted, keyed by `(j, k)`.
pub fn structure_constants(
    basis: &BasisFamily,
    cs: &ConstraintSet,
    max_index: i64,
) -> Result<BTreeMap<(i64, i64), BTreeMap<i64, Poly>>, ClosureError> {
    let solved = cs.solved_map();
    let mut out = BTreeMap::new();
    for (a, &j) in basis.spec.basis_indices.iter().enumerate() {
        if j > max_index {
            break;
        }
        for &k in &basis.spec.basis_indices[a..] {
            if k > max_index || j + k > basis.spec.max_order {
                break;
            }
            let rr = reduce_product(basis, j, k)?;
            let row: BTreeMap<i64, Poly> = rr
                .constants
                .into_iter()
                .map(|(l, c)| (l, c.substitute_unchecked(&solved)))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            out.insert((j, k), row);
        }
    }
    Ok(out)
}

/// One failed associativity residual.
#[derive(Debug, Clone)]
pub struct AssocFailure {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub r: i64,
    pub residual: Poly,
}

#[derive(Debug)]
pub struct AssocReport {
    pub m: i64,
    pub max_index: i64,
    pub triples: usize,
    pub failures: Vec<AssocFailure>,
}

impl AssocReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "stratum": self.m,
            "maxIndex": self.max_index,
            "triples": self.triples,
            "failures": self.failures.iter().map(|f| serde_json::json!({
                "i": f.i, "j": f.j, "k": f.k, "r": f.r,
                "residual": f.residual.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Verifies `sum_s C^s_ij C^r_sk = sum_s C^s_jk C^r_si` for all triples of
/// basis orders `<= max_index`, modulo `solved` and the `unresolved` ideal.
///
/// Internally the basis is rebuilt with depth `2 * max_index` and orders up
/// to `3 * max_index` so that every intermediate product has a reliable
/// window reaching exponent 0.
pub fn check_associativity(m: i64, max_index: i64) -> Result<AssocReport, ClosureError> {
    let depth = 2 * max_index;
    let basis = build_basis(m, depth, 3 * max_index)?;
    let cs = derive_constraint_set(&basis, 2 * max_index)?;
    let graded = if cs.unresolved.is_empty() {
        None
    } else {
        GradedIdeal::new(&cs.unresolved)
    };
    let bounded = if graded.is_none() {
        cs.unresolved_ideal()
    } else {
        None
    };
    let solved = cs.solved_map();

    let mut cache: BTreeMap<(i64, i64), BTreeMap<i64, Poly>> = BTreeMap::new();
    let mut constants = |basis: &BasisFamily,
                         a: i64,
                         b: i64|
     -> Result<BTreeMap<i64, Poly>, ClosureError> {
        let key = (a.min(b), a.max(b));
        if let Some(row) = cache.get(&key) {
            return Ok(row.clone());
        }
        let rr = reduce_product(basis, key.0, key.1)?;
        let row: BTreeMap<i64, Poly> = rr
            .constants
            .into_iter()
            .map(|(l, c)| (l, c.substitute_unchecked(&solved)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        cache.insert(key, row.clone());
        Ok(row)
    };

    let idx: Vec<i64> = basis
        .spec
        .basis_indices
        .iter()
        .copied()
        .filter(|&j| j <= max_index)
        .collect();
    let mut failures = Vec::new();
    let mut triples = 0usize;
    for &i in &idx {
        for &j in &idx {
            if j < i {
                continue;
            }
            for &k in &idx {
                if k < j {
                    continue;
                }
                triples += 1;
                // (p_i p_j) p_k vs p_i (p_j p_k).
                let cij = constants(&basis, i, j)?;
                let cjk = constants(&basis, j, k)?;
                let mut lhs: BTreeMap<i64, Poly> = BTreeMap::new();
                for (s, c) in &cij {
                    for (r, d) in constants(&basis, *s, k)? {
                        let acc = lhs.entry(r).or_insert_with(Poly::zero);
                        *acc = acc.add(&c.mul(&d));
                    }
                }
                let mut rhs: BTreeMap<i64, Poly> = BTreeMap::new();
                for (s, c) in &cjk {
                    for (r, d) in constants(&basis, *s, i)? {
                        let acc = rhs.entry(r).or_insert_with(Poly::zero);
                        *acc = acc.add(&c.mul(&d));
                    }
                }
                let keys: BTreeSet<i64> =
                    lhs.keys().chain(rhs.keys()).copied().collect();
                for r in keys {
                    let a = lhs.get(&r).cloned().unwrap_or_else(Poly::zero);
                    let b = rhs.get(&r).cloned().unwrap_or_else(Poly::zero);
                    let mut diff = a.sub(&b);
                    if diff.is_zero() {
                        continue;
                    }
                    if let Some(ideal) = &graded {
                        diff = ideal.reduce(&diff);
                    } else if let Some(ideal) = &bounded {
                        diff = ideal.reduce(&diff);
                    }
                    if !diff.is_zero() {
                        failures.push(AssocFailure {
                            i,
                            j,
                            k,
                            r,
                            residual: diff,
                        });
                    }
                }
            }
        }
    }
    Ok(AssocReport {
        m,
        max_index,
        triples,
        failures,
    })
}

/// Expresses every basis element up to `nmax` as a polynomial in `p_1`,
/// with coefficients over the independent parameters. Only meaningful for
/// strata whose basis contains the order-1 element (strata 0 and 1).
pub fn express_in_p1(
    basis: &BasisFamily,
    cs: &ConstraintSet,
    nmax: i64,
) -> Result<BTreeMap<i64, Poly>, ClosureError> {
    if !basis.spec.basis_indices.contains(&1) {
        return Err(ClosureError::NotBasisOrder {
            m: basis.spec.m,
            j: 1,
        });
    }
    let reduced = basis.substituted(&cs.solved_map());
    let absorb: BTreeSet<i64> = reduced.spec.basis_indices.iter().copied().collect();
    let p1 = reduced.element(1).clone();
    let mut expr: BTreeMap<i64, Poly> = BTreeMap::new();
    if reduced.spec.basis_indices.contains(&0) {
        expr.insert(0, Poly::one());
    }
    expr.insert(1, Poly::var(VarId::p(1)));
    let mut pw = p1.clone();
    for n in 2..=nmax {
        pw = pw.mul(&p1);
        let rr = reduce_series(&pw, &reduced, &absorb);
        if let Some((e, r)) = rr.residual.support().next() {
            return Err(ClosureError::ResidualLeft {
                exponent: e,
                relation: r.to_string(),
            });
        }
        let mut pn = Poly::var(VarId::p(1)).pow(n as u32);
        for (&l, c) in &rr.constants {
            if l == n {
                continue;
            }
            pn = pn.sub(&c.mul(&expr[&l]));
        }
        assert_eq!(rr.constants.get(&n), Some(&Poly::one()));
        expr.insert(n, pn);
    }
    Ok(expr)
}

#[derive(Debug)]
pub struct ShiftCheckReport {
    pub depth: i64,
    pub max_index: i64,
    pub checked: Vec<i64>,
    pub failures: Vec<(i64, Poly)>,
}

impl ShiftCheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "depth": self.depth,
            "maxIndex": self.max_index,
            "checked": self.checked,
            "failures": self.failures.iter().map(|(k, p)| serde_json::json!({
                "order": k, "difference": p.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Checks that every derived stratum-1 relation `p_k = w_k(p_1)` turns into
/// the corresponding stratum-0 relation `p_k = v_k(p_1)` under the shift
/// `p_l -> p_l + H^l_0` (with the solved value of `H^l_0` where applicable).
pub fn sigma1_shift_check(depth: i64, max_index: i64) -> Result<ShiftCheckReport, ClosureError> {
    let (b0, cs0) = derive(0, depth, max_index)?;
    let (b1, cs1) = derive(1, depth, max_index)?;
    let e0 = express_in_p1(&b0, &cs0, max_index)?;
    let e1 = express_in_p1(&b1, &cs1, max_index)?;
    let solved1 = cs1.solved_map();
    let h_shift = |l: i64| -> Poly {
        let v = VarId::h(l as i32, 0);
        solved1.get(&v).cloned().unwrap_or_else(|| Poly::var(v))
    };
    let mut checked = Vec::new();
    let mut failures = Vec::new();
    for k in 2..=max_index {
        let r1 = Poly::var(VarId::p(k as u32)).sub(&e1[&k]);
        let mut bind = BTreeMap::new();
        bind.insert(VarId::p(1), Poly::var(VarId::p(1)).add(&h_shift(1)));
        bind.insert(
            VarId::p(k as u32),
            Poly::var(VarId::p(k as u32)).add(&h_shift(k)),
        );
        let r1t = r1.substitute_unchecked(&bind);
        let r0 = Poly::var(VarId::p(k as u32)).sub(&e0[&k]);
        checked.push(k);
        if r1t != r0 {
            failures.push((k, r1t.sub(&r0)));
        }
    }
    Ok(ShiftCheckReport {
        depth,
        max_index,
        checked,
        failures,
    })
}

#[derive(Debug)]
pub struct RelaxedProbeReport {
    pub depth: i64,
    pub max_index: i64,
    /// Tail symbols `H^j_k` (`j >= 3`, `k >= 1`) proven zero.
    pub forced_zero: Vec<VarId>,
    /// Tail symbols solved to something other than zero (unexpected).
    pub nonzero: Vec<(VarId, Poly)>,
    /// Tracked tail symbols the probe could not determine at this depth.
    pub undetermined: Vec<VarId>,
    /// Relations left without a linear pivot (the relaxed variety).
    pub unresolved: Vec<Poly>,
}

impl RelaxedProbeReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "depth": self.depth,
            "maxIndex": self.max_index,
            "forcedZero": self.forced_zero.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "nonzero": self.nonzero.iter().map(|(v, p)| serde_json::json!({
                "symbol": v.to_string(), "value": p.to_string(),
            })).collect::<Vec<_>>(),
            "undetermined": self.undetermined.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "unresolved": self.unresolved.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Probes the relaxed stratum-3 closure: shifts `z^2 p_j` are only required
/// to land in the ambient stratum (so they may spill into the order-1
/// element `p_1`), while products must still stay inside the closed subset.
/// Reports which tails `H^j_k`, `k >= 1`, are forced to vanish anyway.
pub fn relaxed_closure_probe(
    depth: i64,
    max_index: i64,
) -> Result<RelaxedProbeReport, ClosureError> {
    let mut basis = build_basis(3, depth, 2 * max_index)?;
    let mut p1 = LaurentSeries::zero(1, -depth);
    p1.set(1, Poly::one());
    p1.set(0, Poly::var(VarId::h(1, 0)));
    for k in 1..=depth {
        p1.set(-k, Poly::var(VarId::h(1, k as i32)));
    }
    basis.elements.insert(1, p1);

    let prod_absorb: BTreeSet<i64> = basis.spec.basis_indices.iter().copied().collect();
    let mut shift_absorb = prod_absorb.clone();
    shift_absorb.insert(1);

    let mut raw = Vec::new();
    for &j in &basis.spec.basis_indices {
        if j + 2 > basis.spec.max_order {
            continue;
        }
        let shifted = basis.element(j).shift_even(1);
        raw.extend(reduce_series(&shifted, &basis, &shift_absorb).obstructions());
    }
    for (a, &j) in basis.spec.basis_indices.iter().enumerate() {
        if j > max_index {
            break;
        }
        for &k in &basis.spec.basis_indices[a..] {
            if k > max_index || j + k > basis.spec.max_order || k > depth {
                break;
            }
            let prod = basis.element(j).mul(basis.element(k));
            raw.extend(reduce_series(&prod, &basis, &prod_absorb).obstructions());
        }
    }

    // The stratum's fixed-part relations are part of its given algebraic
    // structure (they come from strict product closure); the relaxation only
    // concerns the shift condition. Derive them once and add them to the
    // system, so "forced to zero" means zero on the relaxed variety over the
    // stratum's actual parameter ring.
    let (_, strict) = derive(3, depth.max(8), 6)?;
    let tail_free = |p: &Poly| {
        p.vars()
            .iter()
            .all(|v| !matches!(v, VarId::H { k, .. } if *k >= 1))
    };
    raw.extend(strict.unresolved.iter().filter(|p| tail_free(p)).cloned());

    let mut protected: BTreeSet<VarId> = protected_independents(3)?.into_iter().collect();
    protected.insert(VarId::h(1, 0));
    for k in 1..=depth {
        protected.insert(VarId::h(1, k as i32));
    }
    let cs = eliminate(3, raw, &protected)?;

    let mut forced_zero = Vec::new();
    let mut nonzero = Vec::new();
    let solved = cs.solved_map();
    let mut tracked: Vec<VarId> = Vec::new();
    for &j in &basis.spec.basis_indices {
        if j > max_index {
            break;
        }
        for k in 1..=depth {
            tracked.push(VarId::h(j as i32, k as i32));
        }
    }
    // "Forced to zero" means zero on the relaxed constraint variety: solved
    // values are reduced modulo the relations left without a linear pivot.
    let ideal = if cs.unresolved.is_empty() {
        None
    } else {
        GradedIdeal::new(&cs.unresolved)
    };
    let mut undetermined = Vec::new();
    for v in tracked {
        match solved.get(&v) {
            Some(p) => {
                let r = match &ideal {
                    Some(ideal) => ideal.reduce(p),
                    None => p.clone(),
                };
                if r.is_zero() {
                    forced_zero.push(v);
                } else if r.vars().iter().any(
                    |u| matches!(u, VarId::H { k, .. } if *k >= 1 && !solved.contains_key(u)),
                ) {
                    // The value only involves tail symbols the probe could
                    // not pin down at this depth — no verdict either way.
                    undetermined.push(v);
                } else {
                    nonzero.push((v, r));
                }
            }
            None => undetermined.push(v),
        }
    }
    Ok(RelaxedProbeReport {
        depth,
        max_index,
        forced_zero,
        nonzero,
        undetermined,
        unresolved: cs.unresolved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn h(j: i32, k: i32) -> Poly {
        Poly::var(VarId::h(j, k))
    }

    #[test]
    fn big_cell_even_squares_are_pure_powers() {
        let (basis, cs) = derive(0, 8, 4).unwrap();
        let rr = reduce_product(&basis, 2, 2).unwrap();
        assert_eq!(rr.constants.get(&4), Some(&Poly::one()));
        // Every other constant and the residual vanish on the variety.
        for (&l, c) in &rr.constants {
            if l != 4 {
                assert!(cs.apply(c).is_zero(), "C^{l} = {c}");
            }
        }
        for p in rr.obstructions() {
            assert!(cs.apply(&p).is_zero());
        }
    }

    #[test]
    fn big_cell_tail_tower_collapses_to_one_parameter() {
        let (_, cs) = derive(0, 10, 5).unwrap();
        let solved = cs.solved_map();
        let hh = h(1, 1);
        assert_eq!(solved[&VarId::h(1, 2)], Poly::zero());
        assert_eq!(
            solved[&VarId::h(1, 3)],
            hh.pow(2).scale(&ratio(-1, 2))
        );
        assert_eq!(solved[&VarId::h(1, 5)], hh.pow(3).scale(&ratio(1, 2)));
        assert!(cs.unresolved.is_empty());
    }

    #[test]
    fn sigma1_low_relations() {
        let (_, cs) = derive(1, 10, 5).unwrap();
        let solved = cs.solved_map();
        // H^2_0 = 2 H^1_1 - (H^1_0)^2
        let expect = h(1, 1).scale(&rat(2)).sub(&h(1, 0).pow(2));
        assert_eq!(solved[&VarId::h(2, 0)], expect);
        // H^4_0 = -(H^2_0)^2 as a consequence.
        let h40 = &solved[&VarId::h(4, 0)];
        let relation = h40.add(&solved[&VarId::h(2, 0)].pow(2));
        assert!(relation.is_zero(), "H^4_0 + (H^2_0)^2 = {relation}");
        assert!(cs.unresolved.is_empty());
    }

    #[test]
    fn sigma2_forces_deep_odd_tail() {
        let (_, cs) = derive(2, 10, 5).unwrap();
        let solved = cs.solved_map();
        // H^3_5 = -H^3_{-1} H^3_3 - 1/2 (H^3_1)^2
        let expect = h(3, -1)
            .mul(&h(3, 3))
            .neg()
            .sub(&h(3, 1).pow(2).scale(&ratio(1, 2)));
        assert_eq!(solved[&VarId::h(3, 5)], expect);
        // Even tails of p_3 vanish.
        assert_eq!(solved[&VarId::h(3, 2)], Poly::zero());
        assert_eq!(solved[&VarId::h(3, 4)], Poly::zero());
        assert!(cs.unresolved.is_empty());
    }

    #[test]
    fn sigma3_unresolved_pair() {
        let (_, cs) = derive(3, 8, 6).unwrap();
        assert_eq!(cs.unresolved.len(), 2, "unresolved: {:?}", cs.unresolved);
        // The two quadratic generators, primitive and sign-normalized.
        let g1 = h(4, 0)
            .add(&h(3, 0).mul(&h(3, -2)).scale(&rat(2)))
            .sub(&h(3, -2).pow(2).mul(&h(4, -2)))
            .sub(&h(4, -2).pow(2))
            .primitive_normalized();
        let g2 = h(3, 0)
            .pow(2)
            .sub(&h(3, -2).pow(2).mul(&h(4, 0)))
            .sub(&h(4, -2).mul(&h(4, 0)))
            .primitive_normalized();
        let mut expected = vec![g1.to_string(), g2.to_string()];
        expected.sort();
        let mut got: Vec<String> = cs.unresolved.iter().map(|p| p.to_string()).collect();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn sigma5_solved_rows() {
        let (_, cs) = derive(5, 8, 7).unwrap();
        let solved = cs.solved_map();
        let a = h(3, -2);
        let b = h(3, 0);
        assert_eq!(solved[&VarId::h(5, 0)], Poly::zero());
        assert_eq!(solved[&VarId::h(5, -2)], b);
        assert_eq!(solved[&VarId::h(5, -4)], a);
        assert_eq!(solved[&VarId::h(6, 0)], b.pow(2).neg());
        assert_eq!(solved[&VarId::h(6, -2)], a.mul(&b).scale(&rat(-2)));
        assert_eq!(solved[&VarId::h(6, -4)], a.pow(2).neg());
        assert_eq!(solved[&VarId::h(7, -4)], a.pow(3).add(&b));
        assert_eq!(solved[&VarId::h(7, -2)], a.pow(2).mul(&b).scale(&rat(2)));
        assert_eq!(solved[&VarId::h(7, 0)], a.mul(&b.pow(2)));
        // Polynomiality: all tails vanish.
        assert_eq!(solved[&VarId::h(3, 1)], Poly::zero());
        assert_eq!(solved[&VarId::h(5, 3)], Poly::zero());
        assert!(cs.unresolved.is_empty());
    }

    #[test]
    fn structure_constants_symmetric_and_sound() {
        let (basis, cs) = derive(2, 10, 5).unwrap();
        let r1 = reduce_product(&basis, 0, 3).unwrap();
        let r2 = reduce_product(&basis, 3, 0).unwrap();
        assert_eq!(r1.constants, r2.constants);
        // Soundness: residual obstructions vanish on the variety.
        let r33 = reduce_product(&basis, 3, 3).unwrap();
        for p in r33.obstructions() {
            assert!(cs.apply(&p).is_zero(), "nonzero residual {p}");
        }
    }

    #[test]
    fn express_in_p1_matches_veronese() {
        let (b0, cs0) = derive(0, 10, 5).unwrap();
        let e = express_in_p1(&b0, &cs0, 5).unwrap();
        let p1 = Poly::var(VarId::p(1));
        let hh = h(1, 1);
        assert_eq!(e[&3], p1.pow(3).sub(&hh.mul(&p1).scale(&rat(3))));
        let p5 = p1
            .pow(5)
            .sub(&hh.mul(&p1.pow(3)).scale(&rat(5)))
            .add(&hh.pow(2).mul(&p1).scale(&ratio(15, 2)));
        assert_eq!(e[&5], p5);
    }

    #[test]
    fn unity_triples_are_associative() {
        let report = check_associativity(0, 3).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
        assert!(report.triples > 0);
    }

    #[test]
    fn depth_errors_are_reported() {
        let basis = build_basis(0, 3, 10).unwrap();
        let err = reduce_product(&basis, 4, 4).unwrap_err();
        assert!(matches!(err, ClosureError::DepthTooSmall { required: 4, .. }));
    }

    #[test]
    fn relaxed_probe_still_forces_tails() {
        let rep = relaxed_closure_probe(4, 6).unwrap();
        assert!(rep.nonzero.is_empty(), "nonzero: {:?}", rep.nonzero);
        // Every tail the probe pins down is pinned to zero; the low window is
        // fully determined.
        for (j, kmax) in [(3, 4), (4, 4), (5, 2), (6, 2)] {
            for k in 1..=kmax {
                assert!(
                    rep.forced_zero.contains(&VarId::h(j, k)),
                    "H[{j},{k}] not forced"
                );
            }
        }
        // What survives without a pivot is exactly the fixed-part pair.
        assert_eq!(rep.unresolved.len(), 2);
        for g in &rep.unresolved {
            assert!(g
                .vars()
                .iter()
                .all(|v| !matches!(v, VarId::H { k, .. } if *k >= 1)));
        }
    }
}
