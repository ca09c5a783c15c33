use std::collections::HashMap;

use eulergram::{parse, print, EgfSeries, Monomial, Polynomial, Preset, Var};
use num_bigint::BigInt;
use proptest::prelude::*;

fn xyz() -> [Var; 3] {
    [Var::new("x"), Var::new("y"), Var::new("z")]
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::array::uniform3(-2i64..=3).prop_map(|e| {
        let [x, y, z] = xyz();
        Monomial::from_pairs([(x, e[0]), (y, e[1]), (z, e[2])])
    })
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(), -6i64..=6), 0..5).prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(m, c)| (m, BigInt::from(c))))
    })
}

fn series() -> impl Strategy<Value = EgfSeries> {
    prop::collection::vec(polynomial(), 4).prop_map(EgfSeries::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_is_commutative_and_associative(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_is_commutative_associative_distributive(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn laurent_inverse_cancels(p in polynomial(), m in monomial(), negate in any::<bool>()) {
        let unit = Polynomial::term(if negate { -1 } else { 1 }, m);
        let inverse = unit.pow(-1).unwrap();
        prop_assert_eq!(&(&p * &inverse) * &unit, p);
    }

    #[test]
    fn partial_derivative_product_rule(f in polynomial(), g in polynomial()) {
        for v in xyz() {
            let lhs = (&f * &g).partial_derivative(v);
            let rhs = &(&f.partial_derivative(v) * &g) + &(&f * &g.partial_derivative(v));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn print_then_parse_is_identity(p in polynomial()) {
        prop_assert_eq!(parse(&print(&p)).unwrap(), p);
    }

    #[test]
    fn identity_substitution(p in polynomial()) {
        let bindings: HashMap<Var, Polynomial> = xyz().into_iter().map(|v| (v, Polynomial::var(v))).collect();
        prop_assert_eq!(p.substitute(&bindings).unwrap(), p);
    }

    #[test]
    fn derivation_rule_on_trivariate_grammar(f in polynomial(), g in polynomial()) {
        let d = Preset::DumontTrivariate.grammar();
        let lhs = d.derive(&(&f * &g));
        let rhs = &(&d.derive(&f) * &g) + &(&f * &d.derive(&g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_product_is_commutative_and_associative(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&EgfSeries::unit(a.order())).unwrap(), a);
    }
}
