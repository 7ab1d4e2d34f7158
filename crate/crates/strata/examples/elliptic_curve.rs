//! The elliptic curve carried by the second stratum: p3^2 equals a cubic in
//! lambda = p1^2 (up to the derived corrections), and the identity holds
//! coefficient-by-coefficient on the reliable series window.

use strata::curves::hyperelliptic_curve;
use strata::genus::generic_genus;
use strata::VarId;

fn main() {
    let rec = hyperelliptic_curve(1).expect("curve");
    println!("curve ({}): {} = 0", rec.kind, rec.poly);
    println!("free parameters: {:?}", rec.params);

    let cert = generic_genus(&rec.poly, VarId::p(3), 2024, 8).expect("genus");
    println!(
        "genus {} (odd-multiplicity part {}, squarefree: {})",
        cert.genus, cert.odd_part, cert.squarefree
    );
}
