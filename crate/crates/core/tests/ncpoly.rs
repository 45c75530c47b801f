use balgraph::ncpoly::{
    a, a_minus_b, ab_to_cd, b, c, cd_expand, d, kappa_counit_check, lambda_counit_check,
    newtonian_residual, AbPoly, AbWord, CdPoly, CdWord, IntPoly,
};
use proptest::prelude::*;

fn ab_poly(max_len: usize) -> impl Strategy<Value = AbPoly> {
    let word = format!("[ab]{{0,{max_len}}}");
    prop::collection::vec(
        (proptest::string::string_regex(&word).unwrap(), -9i64..10),
        0..6,
    )
    .prop_map(|terms| {
        AbPoly::from_terms(
            terms
                .into_iter()
                .map(|(w, c)| (AbWord::parse(&w).unwrap(), c)),
        )
    })
}

fn cd_poly(max_len: usize) -> impl Strategy<Value = CdPoly> {
    let word = format!("[cd]{{0,{max_len}}}");
    prop::collection::vec(
        (proptest::string::string_regex(&word).unwrap(), -9i64..10),
        0..6,
    )
    .prop_map(|terms| {
        CdPoly::from_terms(
            terms
                .into_iter()
                .map(|(w, c)| (CdWord::parse(&w).unwrap(), c)),
        )
    })
}

fn int_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-5i64..6, 0..=max_deg + 1).prop_map(|v| IntPoly::from_i64s(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn newtonian_condition(v in ab_poly(4), w in ab_poly(4)) {
        prop_assert!(newtonian_residual(&v, &w).is_zero());
    }

    #[test]
    fn counit_identities(p in ab_poly(8)) {
        prop_assert!(kappa_counit_check(&p).is_zero());
        prop_assert!(lambda_counit_check(&p).is_zero());
    }

    #[test]
    fn bar_intertwines_kappa_and_lambda(p in ab_poly(6)) {
        prop_assert_eq!(p.kappa().bar(), p.bar().lambda());
    }

    #[test]
    fn cd_roundtrip(p in cd_poly(6)) {
        let e = cd_expand(&p);
        prop_assert_eq!(ab_to_cd(&e).unwrap(), p);
    }

    #[test]
    fn ab_roundtrip_on_success(p in ab_poly(5)) {
        if let Ok(w) = ab_to_cd(&p) {
            prop_assert_eq!(cd_expand(&w), p);
        }
    }

    #[test]
    fn residual_witnesses_failure(p in ab_poly(5), w in cd_poly(4)) {
        // adding a cd-polynomial does not change membership
        let q = &p + &cd_expand(&w);
        prop_assert_eq!(ab_to_cd(&p).is_ok(), ab_to_cd(&q).is_ok());
        if let Err(e) = ab_to_cd(&q) {
            prop_assert!(!e.residual.is_zero());
            let back = &q - &e.residual;
            prop_assert!(ab_to_cd(&back).is_ok());
        }
    }

    #[test]
    fn bar_and_star_fix_cd_images(p in cd_poly(6)) {
        let e = cd_expand(&p);
        prop_assert_eq!(e.bar(), e.clone());
        prop_assert_eq!(ab_to_cd(&e.star()).unwrap(), p.map_words(|w| CdWord::new(w.letters().iter().rev().copied().collect())));
    }

    #[test]
    fn matching_odd_parts_give_cd(p in int_poly(6), even in int_poly(6)) {
        // q shares the odd part of p
        let q = &p.odd_part() + &(&even - &even.odd_part());
        let amb = a_minus_b();
        let bma = -amb.clone();
        let first = &p.substitute(&amb) + &q.substitute(&bma);
        prop_assert!(ab_to_cd(&first).is_ok());
        let second = &(&p.substitute(&amb) * &b()) + &(&p.substitute(&bma) * &a());
        prop_assert!(ab_to_cd(&second).is_ok());
    }
}

#[test]
fn powers_of_a_minus_b() {
    let amb = a_minus_b();
    let bma = -amb.clone();
    let c2_2d = &(&c() * &c()) - &(&d() + &d());
    for k in 0..=4 {
        let odd = &amb.pow(2 * k + 1) + &bma.pow(2 * k + 1);
        assert!(odd.is_zero());
        assert_eq!(amb.pow(2 * k), cd_expand(&c2_2d.pow(k)));
        assert_eq!(bma.pow(2 * k), cd_expand(&c2_2d.pow(k)));
        let even_tail = &(&amb.pow(2 * k) * &b()) + &(&bma.pow(2 * k) * &a());
        assert_eq!(ab_to_cd(&even_tail).unwrap(), &c2_2d.pow(k) * &c());
        let odd_tail = &(&amb.pow(2 * k + 1) * &b()) + &(&bma.pow(2 * k + 1) * &a());
        assert_eq!(ab_to_cd(&odd_tail).unwrap(), -c2_2d.pow(k + 1));
    }
}

#[test]
fn odd_power_alone_is_not_cd() {
    let err = ab_to_cd(&a_minus_b().pow(3)).unwrap_err();
    assert!(!err.residual.is_zero());
}
