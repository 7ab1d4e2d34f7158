//! Verifies that the derived structure constants define an associative
//! product: (p_i p_j) p_k - p_i (p_j p_k) reduces to zero on the constraint
//! variety for every triple of basis orders up to the bound.
//!
//! Usage: `cargo run --example associativity [m] [max_index]`

use strata::check_associativity;

fn main() {
    let mut args = std::env::args().skip(1);
    let m: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let max_index: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);

    let rep = check_associativity(m, max_index).expect("associativity check");
    println!(
        "{}",
        serde_json::to_string_pretty(&rep.to_json()).expect("serializable")
    );
    assert!(rep.passed(), "associativity failed");
    println!("stratum {m}: all triples up to {max_index} associate");
}
