//! Variable identifiers for the symbolic engine.
//!
//! The total order on variables is fixed once and for all:
//!
//! ```text
//! z < lam < p0 < p1 < p2 < ... < H[j,k] (lex by (j,k)) < t < X < Y
//! ```
//!
//! Canonical printing, the monomial order and every golden file depend on
//! this order, so it must never change.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A symbol of the engine: a formal variable or a series parameter `H^j_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VarId {
    /// The Laurent variable `z`.
    Z,
    /// `lam = z^2`, the even coordinate of Gr^(2).
    Lam,
    /// A basis-element coordinate `p_j`, `j >= 0`.
    P(u32),
    /// Series parameter `H^j_k`; `k` may be negative (fixed-part corrections).
    H { j: i32, k: i32 },
    /// Auxiliary parameter used by built-in rational families.
    T,
    /// Elimination variable for implicitization.
    X,
    /// Elimination variable for implicitization.
    Y,
}

impl VarId {
    pub fn h(j: i32, k: i32) -> VarId {
        VarId::H { j, k }
    }

    pub fn p(j: u32) -> VarId {
        VarId::P(j)
    }

    /// Elimination weight of `H^j_k` is `j + k`; other variables carry no weight.
    pub fn weight(&self) -> Option<i64> {
        match self {
            VarId::H { j, k } => Some(*j as i64 + *k as i64),
            _ => None,
        }
    }

    fn rank(&self) -> u8 {
        match self {
            VarId::Z => 0,
            VarId::Lam => 1,
            VarId::P(_) => 2,
            VarId::H { .. } => 3,
            VarId::T => 4,
            VarId::X => 5,
            VarId::Y => 6,
        }
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.rank().cmp(&other.rank()) {
            Ordering::Equal => match (self, other) {
                (VarId::P(a), VarId::P(b)) => a.cmp(b),
                (VarId::H { j: j1, k: k1 }, VarId::H { j: j2, k: k2 }) => {
                    (j1, k1).cmp(&(j2, k2))
                }
                _ => Ordering::Equal,
            },
            ord => ord,
        }
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Z => write!(f, "z"),
            VarId::Lam => write!(f, "lam"),
            VarId::P(j) => write!(f, "p{j}"),
            VarId::H { j, k } => write!(f, "H[{j},{k}]"),
            VarId::T => write!(f, "t"),
            VarId::X => write!(f, "X"),
            VarId::Y => write!(f, "Y"),
        }
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_order_is_documented_one() {
        let mut vars = vec![
            VarId::Y,
            VarId::T,
            VarId::h(1, 1),
            VarId::h(3, -2),
            VarId::h(3, 0),
            VarId::p(4),
            VarId::p(3),
            VarId::Lam,
            VarId::Z,
            VarId::X,
        ];
        vars.sort();
        assert_eq!(
            vars,
            vec![
                VarId::Z,
                VarId::Lam,
                VarId::p(3),
                VarId::p(4),
                VarId::h(1, 1),
                VarId::h(3, -2),
                VarId::h(3, 0),
                VarId::T,
                VarId::X,
                VarId::Y,
            ]
        );
    }

    #[test]
    fn weights() {
        assert_eq!(VarId::h(3, -2).weight(), Some(1));
        assert_eq!(VarId::h(4, 0).weight(), Some(4));
        assert_eq!(VarId::Z.weight(), None);
    }
}
