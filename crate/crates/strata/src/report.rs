//! Machine-readable reports combining a stratum derivation, its structure
//! constants, and the verdicts of the built-in reference checks.
//!
//! JSON maps are emitted with sorted keys, so serialized reports are
//! byte-stable across runs and suitable as golden files.

use crate::closure::{derive, structure_constants, ClosureError, ConstraintSet};
use crate::reference::{self, Verdict, VerdictStatus};
use crate::strata::BasisFamily;
use std::collections::BTreeMap;

/// Overall outcome of a report, mapped onto process exit codes by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Everything passed (exit 0).
    Pass,
    /// Only flagged reference discrepancies, nothing failed (exit 2).
    FlaggedOnly,
    /// At least one hard failure (exit 1).
    Fail,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::FlaggedOnly => 2,
        }
    }
}

/// Full derivation report of one stratum.
#[derive(Debug, Clone)]
pub struct StratumReport {
    pub basis: BasisFamily,
    pub constraints: ConstraintSet,
    pub constants: BTreeMap<(i64, i64), BTreeMap<i64, crate::poly::Poly>>,
    pub verdicts: Vec<Verdict>,
}

/// Derives a stratum, computes its structure constants, and runs the
/// reference checks.
pub fn stratum_report(m: i64, depth: i64, max_index: i64) -> Result<StratumReport, ClosureError> {
    let (basis, constraints) = derive(m, depth, max_index)?;
    let constants = structure_constants(&basis, &constraints, max_index)?;
    let verdicts = reference::verify(&constraints);
    Ok(StratumReport {
        basis,
        constraints,
        constants,
        verdicts,
    })
}

impl StratumReport {
    pub fn outcome(&self) -> Outcome {
        outcome_of(&self.verdicts)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut base = self.constraints.to_json();
        let constants: BTreeMap<String, serde_json::Value> = self
            .constants
            .iter()
            .map(|((j, k), row)| {
                let row: BTreeMap<String, String> = row
                    .iter()
                    .map(|(l, c)| (l.to_string(), c.to_string()))
                    .collect();
                (format!("{j},{k}"), serde_json::json!(row))
            })
            .collect();
        let obj = base.as_object_mut().expect("constraint JSON is an object");
        obj.insert("constants".into(), serde_json::json!(constants));
        obj.insert(
            "verdicts".into(),
            serde_json::Value::Array(self.verdicts.iter().map(|v| v.to_json()).collect()),
        );
        base
    }
}

/// Collapses a verdict list to an overall outcome.
pub fn outcome_of(verdicts: &[Verdict]) -> Outcome {
    let mut flagged = false;
    for v in verdicts {
        match v.status {
            VerdictStatus::Fail => return Outcome::Fail,
            VerdictStatus::Flagged | VerdictStatus::Undecided => flagged = true,
            VerdictStatus::Pass | VerdictStatus::PassModuloUnresolved => {}
        }
    }
    if flagged {
        Outcome::FlaggedOnly
    } else {
        Outcome::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_is_deterministic_and_sorted() {
        let a = stratum_report(2, 8, 5).unwrap();
        let b = stratum_report(2, 8, 5).unwrap();
        let sa = serde_json::to_string(&a.to_json()).unwrap();
        let sb = serde_json::to_string(&b.to_json()).unwrap();
        assert_eq!(sa, sb);
        let obj = a.to_json();
        let keys: Vec<&String> = obj.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(obj["constants"].get("3,3").is_some());
    }

    #[test]
    fn outcomes_map_to_exit_codes() {
        use crate::reference::Verdict;
        let v = |s| Verdict {
            name: "x".into(),
            status: s,
            detail: None,
        };
        assert_eq!(outcome_of(&[v(VerdictStatus::Pass)]).exit_code(), 0);
        assert_eq!(
            outcome_of(&[v(VerdictStatus::Pass), v(VerdictStatus::Flagged)]).exit_code(),
            2
        );
        assert_eq!(
            outcome_of(&[v(VerdictStatus::Flagged), v(VerdictStatus::Fail)]).exit_code(),
            1
        );
    }
}
