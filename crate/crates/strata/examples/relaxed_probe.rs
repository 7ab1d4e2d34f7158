//! Relaxed-closure probe for stratum 3: even shifts z^2 p_j may spill into
//! the ambient order-1 element p1 instead of closing strictly, while
//! products must still close. The probe reports which tail parameters
//! H[j,k] (k >= 1) are forced to vanish anyway.
//!
//! Usage: `cargo run --example relaxed_probe [depth] [max_index]`

use strata::closure::relaxed_closure_probe;

fn main() {
    let mut args = std::env::args().skip(1);
    let depth: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let max_index: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(8);

    let rep = relaxed_closure_probe(depth, max_index).expect("probe");
    println!(
        "{}",
        serde_json::to_string_pretty(&rep.to_json()).expect("serializable")
    );
    println!(
        "\nforced to zero: {} tails; undetermined: {}; nonzero: {}",
        rep.forced_zero.len(),
        rep.undetermined.len(),
        rep.nonzero.len()
    );
}
