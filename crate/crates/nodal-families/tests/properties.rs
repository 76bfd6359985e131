//! Property-based invariants of the exact polynomial layer.

use nodal_families::poly::MultiPoly;
use nodal_families::scalar::Scalar;
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::BTreeMap;

const VARS: [&str; 3] = ["x", "y", "z"];

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-12i64..13, 1i64..7).prop_map(|(n, d)| Scalar::new(BigInt::from(n), BigInt::from(d)))
}

fn poly_strategy() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((scalar_strategy(), proptest::collection::vec(0u32..4, 3)), 0..6)
        .prop_map(|terms| MultiPoly::from_terms(&VARS, terms))
}

fn homogeneous4_strategy() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((scalar_strategy(), 0u32..5), 1..6).prop_map(|raw| {
        let terms = raw
            .into_iter()
            .map(|(c, a)| {
                let b = (4 - a).min(4);
                let rest = 4 - a.min(4) - b.min(4 - a.min(4));
                (c, vec![a.min(4), b, rest])
            })
            .collect();
        MultiPoly::from_terms(&VARS, terms)
    })
}

proptest! {
    #[test]
    fn addition_commutes_and_associates(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn multiplication_associates_and_distributes(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn mixed_partials_commute(f in poly_strategy()) {
        let fxy = f.differentiate("x").unwrap().differentiate("y").unwrap();
        let fyx = f.differentiate("y").unwrap().differentiate("x").unwrap();
        prop_assert_eq!(fxy, fyx);
    }

    #[test]
    fn euler_identity_for_homogeneous_quartics(f in homogeneous4_strategy()) {
        let mut acc = MultiPoly::zero(&VARS);
        for v in VARS {
            let xv = MultiPoly::var(&VARS, v);
            acc = acc.add(&xv.mul(&f.differentiate(v).unwrap()));
        }
        prop_assert_eq!(acc, f.scale(&Scalar::new(BigInt::from(4), BigInt::from(1))));
    }

    #[test]
    fn substitution_composes(p in poly_strategy(), c0 in scalar_strategy(), c1 in scalar_strategy()) {
        // sigma: x -> x + c0 * y, tau: y -> c1 * z
        let x = MultiPoly::var(&VARS, "x");
        let y = MultiPoly::var(&VARS, "y");
        let z = MultiPoly::var(&VARS, "z");
        let mut sigma = BTreeMap::new();
        sigma.insert("x".to_string(), x.add(&y.scale(&c0)));
        let mut tau = BTreeMap::new();
        tau.insert("y".to_string(), z.scale(&c1));
        // tau o sigma: substitute sigma, then tau, equals substituting the
        // composed images directly
        let seq = p.substitute(&sigma).substitute(&tau);
        let mut composed = BTreeMap::new();
        for (k, v) in &sigma {
            composed.insert(k.clone(), v.substitute(&tau));
        }
        for (k, v) in &tau {
            composed.entry(k.clone()).or_insert_with(|| v.clone());
        }
        let direct = p.substitute(&composed);
        prop_assert_eq!(seq, direct);
    }

    #[test]
    fn display_parse_round_trip(p in poly_strategy()) {
        let text = p.to_string();
        let back = MultiPoly::parse(&VARS, &text).unwrap();
        prop_assert_eq!(back, p);
    }
}
