//! Property tests for the polynomial layer and the ideal lattice.

use proptest::prelude::*;

use subschemes::poly::Polynomial;
use subschemes::text::{format_polynomial, parse_polynomial};
use subschemes::{rat, AffineAlgebra, Ideal, Monomial, MonomialOrder, Poly};

const ARITY: usize = 3;

fn names() -> Vec<String> {
    vec!["x".into(), "y".into(), "z".into()]
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..4, ARITY).prop_map(Monomial::new)
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec((arb_monomial(), -4i64..=4), 0..5).prop_map(|terms| {
        Polynomial::from_terms(
            ARITY,
            terms
                .into_iter()
                .map(|(m, c)| (m, rat(c, 1)))
                .collect(),
        )
    })
}

fn arb_order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::GrevLex),
        Just(MonomialOrder::Block(1)),
        Just(MonomialOrder::Block(2)),
    ]
}

proptest! {
    #[test]
    fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f - &f, Poly::zero(ARITY));
    }

    #[test]
    fn orders_are_total_multiplicative_well_orders(
        ord in arb_order(),
        a in arb_monomial(),
        b in arb_monomial(),
        c in arb_monomial(),
    ) {
        prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
        prop_assert_eq!(ord.cmp(&a, &b) == std::cmp::Ordering::Equal, a == b);
        if ord.cmp(&a, &b) != std::cmp::Ordering::Greater
            && ord.cmp(&b, &c) != std::cmp::Ordering::Greater
        {
            prop_assert_ne!(ord.cmp(&a, &c), std::cmp::Ordering::Greater);
        }
        prop_assert_ne!(
            ord.cmp(&Monomial::one(ARITY), &a),
            std::cmp::Ordering::Greater
        );
        prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ord.cmp(&a, &b));
    }

    #[test]
    fn format_parse_round_trip(f in arb_poly(), ord in arb_order()) {
        let text = format_polynomial(&f, &names(), ord);
        let back: Poly = parse_polynomial(&text, &names()).unwrap();
        prop_assert_eq!(&back, &f);
        // Formatting is idempotent through a parse.
        prop_assert_eq!(format_polynomial(&back, &names(), ord), text);
    }

    #[test]
    fn leading_terms_multiply(f in arb_poly(), g in arb_poly(), ord in arb_order()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (fc, fm) = f.leading_term(ord).unwrap();
        let (gc, gm) = g.leading_term(ord).unwrap();
        let prod = &f * &g;
        let (pc, pm) = prod.leading_term(ord).unwrap();
        prop_assert_eq!(pc.clone(), fc.clone() * gc.clone());
        prop_assert_eq!(pm.clone(), fm.mul(gm));
    }
}

fn small_ideal(gens: Vec<Poly>) -> Ideal {
    let algebra = AffineAlgebra::free(vec!["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
    Ideal::new(&algebra, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ideal_lattice_absorption(
        f in arb_poly(), g in arb_poly(), h in arb_poly(),
    ) {
        let i = small_ideal(vec![f, g.clone()]);
        let j = small_ideal(vec![g, h]);
        let meet = i.intersect(&j).unwrap();
        let join = i.sum(&j).unwrap();
        prop_assert_eq!(i.sum(&meet).unwrap(), i.clone());
        prop_assert_eq!(i.intersect(&join).unwrap(), i);
    }

    #[test]
    fn canonical_form_is_presentation_independent(
        f in arb_poly(), g in arb_poly(),
    ) {
        let i = small_ideal(vec![f.clone(), g.clone()]);
        let j = small_ideal(vec![g.clone(), f.clone(), &f + &g]);
        prop_assert_eq!(i, j);
    }
}
