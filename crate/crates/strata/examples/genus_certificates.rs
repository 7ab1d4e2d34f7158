//! Genus certificates for the hyperelliptic family and its degenerations:
//! the stratum-2n curve has genus n at generic parameters, while the
//! singular families of the big cell and of stratum 2 drop to genus 0 and 1.

use strata::curves::{big_cell_singular, hyperelliptic_curve, sigma2_singular};
use strata::genus::generic_genus;
use strata::VarId;

fn main() {
    for n in 1..=4 {
        let rec = hyperelliptic_curve(n).expect("curve");
        let y = VarId::p((2 * n + 1) as u32);
        let cert = generic_genus(&rec.poly, y, 2024, 8).expect("genus");
        println!(
            "stratum {}: genus {} (squarefree: {})",
            2 * n,
            cert.genus,
            cert.squarefree
        );
    }

    let rec = big_cell_singular(2).expect("singular family");
    let cert = generic_genus(&rec.poly, VarId::p(5), 2024, 8).expect("genus");
    println!(
        "big-cell singular family ({}): genus {} (odd part {})",
        rec.kind, cert.genus, cert.odd_part
    );

    let rec = sigma2_singular(2).expect("singular family");
    let cert = generic_genus(&rec.poly, VarId::p(5), 2024, 8).expect("genus");
    println!(
        "stratum-2 singular family ({}): genus {} (odd part {})",
        rec.kind, cert.genus, cert.odd_part
    );
}
