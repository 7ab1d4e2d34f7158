//! The big cell carries a rational normal curve: every basis element is a
//! polynomial in p1 over the single parameter H[1,1]. The example prints the
//! tower and gathers numerical evidence that the parameterization z ->
//! (p3(z), p5(z)) is injective.

use strata::curves::veronese_tower;
use strata::genus::parameterization_injectivity;

fn main() {
    let tower = veronese_tower(5).expect("tower");
    for (j, p) in &tower {
        println!("p{j} = {p}");
    }

    // Rename the affine coordinate p1 to z and sample the curve
    // t -> (p3(t), p5(t)).
    let mut bind = std::collections::BTreeMap::new();
    bind.insert(strata::VarId::p(1), strata::Poly::var(strata::VarId::Z));
    let p3 = tower[&3].substitute_unchecked(&bind);
    let p5 = tower[&5].substitute_unchecked(&bind);
    let rep = parameterization_injectivity(&p3, &p5, 3, 5, 7, 200);
    println!(
        "\ninjectivity sampling: {} samples, {} collisions ({})",
        rep.samples, rep.collisions, rep.note
    );
}
