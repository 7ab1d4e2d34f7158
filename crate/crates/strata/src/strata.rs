//! Stratum index sets and symbolic canonical bases.
//!
//! A stratum `Sigma_m` of Gr^(2) has order set
//! `S_m = {-m, -m+2, ..., m, m+1, m+2, ...}` and codimension `m(m+1)/2`.
//! The closed-subset candidate basis keeps only the positive orders that can
//! survive pointwise multiplication; its elements are series `z^j` plus
//! symbolic corrections exactly at the gap exponents below `j` and a tail of
//! depth `N`.

use crate::laurent::LaurentSeries;
use crate::poly::Poly;
use crate::var::VarId;
use std::collections::BTreeMap;

/// Largest stratum the basis builder accepts.
pub const MAX_STRATUM: i64 = 9;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum StrataError {
    #[error("stratum m = {m} unsupported (supported: 0 <= m <= {max})")]
    UnsupportedStratum { m: i64, max: i64 },
    #[error("depth must be >= 1, got {depth}")]
    BadDepth { depth: i64 },
}

/// Index data of a stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumSpec {
    pub m: i64,
    /// Truncation depth of the basis tails.
    pub depth: i64,
    /// Orders of the closed-subset candidate basis, ascending, up to `max_order`.
    pub basis_indices: Vec<i64>,
    /// Nonnegative exponents missing from `S_m`.
    pub gaps: Vec<i64>,
    pub codim: i64,
    pub max_order: i64,
}

impl StratumSpec {
    pub fn new(m: i64, depth: i64, max_order: i64) -> Result<StratumSpec, StrataError> {
        if !(0..=MAX_STRATUM).contains(&m) {
            return Err(StrataError::UnsupportedStratum { m, max: MAX_STRATUM });
        }
        if depth < 1 {
            return Err(StrataError::BadDepth { depth });
        }
        let gaps = gap_exponents(m);
        let basis_indices = (0..=max_order).filter(|&j| is_basis_order(m, j)).collect();
        Ok(StratumSpec {
            m,
            depth,
            basis_indices,
            gaps,
            codim: m * (m + 1) / 2,
            max_order,
        })
    }

    pub fn is_basis_order(&self, j: i64) -> bool {
        is_basis_order(self.m, j)
    }

    /// Membership in the order set `S_m` (nonnegative part).
    pub fn in_index_set(&self, n: i64) -> bool {
        n >= 0 && !self.gaps.contains(&n)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "depth": self.depth,
            "codim": self.codim,
            "gaps": self.gaps,
            "basisIndices": self.basis_indices,
        })
    }
}

/// Nonnegative integers absent from `S_m`: the odd numbers below an even `m`,
/// the even numbers below an odd `m`.
pub fn gap_exponents(m: i64) -> Vec<i64> {
    if m % 2 == 0 {
        (1..m).step_by(2).collect()
    } else {
        (0..m).step_by(2).collect()
    }
}

/// Whether `p_j` belongs to the closed-subset candidate basis of `Sigma_m`.
///
/// Even strata keep every nonnegative order of `S_m`. Odd strata drop the
/// low odd orders whose squares escape the span: for `m = 4q - 1` the basis
/// is `(p_{2q+1}, p_{2q+3}, ..., p_{4q-1}, p_{4q}, ...)`, for `m = 4q + 1`
/// it is `(p_{2q+1}, p_{2q+3}, ..., p_{4q-1}, p_{4q+1}, p_{4q+2}, ...)`.
pub fn is_basis_order(m: i64, j: i64) -> bool {
    if j < 0 {
        return false;
    }
    if m % 2 == 0 {
        !gap_exponents(m).contains(&j)
    } else {
        let q = (m + 1) / 4; // m = 4q - 1 or 4q + 1
        let tail_start = if (m + 1) % 4 == 0 { 4 * q } else { 4 * q + 1 };
        if j >= tail_start {
            true
        } else {
            j >= 2 * q + 1 && j % 2 == 1
        }
    }
}

/// The canonical basis family of a stratum, fully symbolic.
#[derive(Debug, Clone)]
pub struct BasisFamily {
    pub spec: StratumSpec,
    pub elements: BTreeMap<i64, LaurentSeries>,
}

impl BasisFamily {
    pub fn element(&self, j: i64) -> &LaurentSeries {
        self.elements
            .get(&j)
            .unwrap_or_else(|| panic!("basis element p_{j} not built (max_order too small?)"))
    }

    /// A copy of the family with the given bindings substituted into every
    /// coefficient.
    pub fn substituted(&self, bindings: &BTreeMap<VarId, Poly>) -> BasisFamily {
        BasisFamily {
            spec: self.spec.clone(),
            elements: self
                .elements
                .iter()
                .map(|(&j, s)| (j, s.substitute_coeffs(bindings)))
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let elements: BTreeMap<String, serde_json::Value> = self
            .elements
            .iter()
            .map(|(j, s)| (format!("p{j}"), s.to_json()))
            .collect();
        serde_json::json!({
            "spec": self.spec.to_json(),
            "elements": elements,
        })
    }
}

/// Builds the symbolic canonical basis of `Sigma_m` with tails down to
/// `z^-depth`, for orders up to `max_order`.
pub fn build_basis(m: i64, depth: i64, max_order: i64) -> Result<BasisFamily, StrataError> {
    let spec = StratumSpec::new(m, depth, max_order)?;
    let mut elements = BTreeMap::new();
    for &j in &spec.basis_indices {
        elements.insert(j, basis_element(&spec, j));
    }
    Ok(BasisFamily { spec, elements })
}

fn basis_element(spec: &StratumSpec, j: i64) -> LaurentSeries {
    let mut s = LaurentSeries::zero(j, -spec.depth);
    s.set(j, Poly::one());
    for &g in &spec.gaps {
        if g < j {
            s.set(g, Poly::var(VarId::h(j as i32, -(g as i32))));
        }
    }
    for k in 1..=spec.depth {
        s.set(-k, Poly::var(VarId::h(j as i32, k as i32)));
    }
    s
}
