//! Prints the symbolic canonical basis of a stratum.
//!
//! Usage: `cargo run --example dump_basis [m] [depth] [max_order]`

use strata::build_basis;

fn main() {
    let mut args = std::env::args().skip(1);
    let m: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let depth: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let max_order: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(8);

    let basis = build_basis(m, depth, max_order).expect("basis");
    println!("stratum {m}: basis orders {:?}", basis.spec.basis_indices);
    println!("gap exponents {:?}", strata::strata::gap_exponents(m));
    for &j in &basis.spec.basis_indices {
        println!("\np{j} = {:?}", basis.element(j));
    }
}
