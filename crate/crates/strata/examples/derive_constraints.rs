//! Derives the closure constraints of a stratum and prints the full report:
//! solved parameters, unresolved generators, structure constants, and the
//! verdicts against the built-in reference relations.
//!
//! Usage: `cargo run --example derive_constraints [m] [depth] [max_index]`

use strata::report::stratum_report;

fn main() {
    let mut args = std::env::args().skip(1);
    let m: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let depth: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(12);
    let max_index: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(8);

    let rep = stratum_report(m, depth, max_index).expect("derivation");
    println!(
        "{}",
        serde_json::to_string_pretty(&rep.to_json()).expect("serializable")
    );
    eprintln!("outcome: {:?}", rep.outcome());
}
