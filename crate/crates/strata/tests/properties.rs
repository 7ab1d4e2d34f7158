//! Property tests: the printed form of a polynomial parses back to the same
//! polynomial, and the arithmetic satisfies the ring axioms.

use proptest::prelude::*;
use strata::parse::parse_poly;
use strata::{ratio, Monomial, Poly, VarId};

fn var_strategy() -> impl Strategy<Value = VarId> {
    prop_oneof![
        Just(VarId::Z),
        Just(VarId::Lam),
        (1u32..9).prop_map(VarId::p),
        ((1i32..9), (-4i32..9)).prop_map(|(j, k)| VarId::h(j, k)),
    ]
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    let term = (
        (-30i64..30),
        (1i64..12),
        proptest::collection::vec((var_strategy(), 1u32..4), 0..3),
    );
    proptest::collection::vec(term, 0..6).prop_map(|terms| {
        let mut p = Poly::zero();
        for (num, den, vars) in terms {
            let m = vars
                .iter()
                .fold(Monomial::one(), |acc, (v, e)| {
                    acc.mul(&Monomial::from_pairs(&[(*v, *e)]))
                });
            p = p.add(&Poly::term(ratio(num, den), m));
        }
        p
    })
}

proptest! {
    #[test]
    fn print_parse_round_trip(p in poly_strategy()) {
        let printed = p.to_string();
        let back = parse_poly(&printed).expect("printed form parses");
        prop_assert_eq!(back, p);
    }

    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), Poly::zero());
        prop_assert_eq!(a.mul(&Poly::one()), a.clone());
        prop_assert_eq!(a.mul(&Poly::zero()), Poly::zero());
    }
}
