//! Property tests: printing round trips, adjoint involution, typing
//! symmetry, reversibility, and the permutation homomorphism.

use proptest::prelude::*;

use pi2::generate::TermGen;
use pi2::infer::{self, infer};
use pi2::parse::parse_comb;
use pi2::pretty::pretty;
use pi2::semantics::{
    enumerate, eval, eval_at, eval_rev, eval_rev_at, semantically_equal_at, to_perm_at,
};
use pi2::syntax::Comb;

fn arb_comb() -> impl Strategy<Value = Comb> {
    let leaf = prop_oneof![
        Just(Comb::Id),
        Just(Comb::SwapPlus),
        Just(Comb::SwapStar),
        Just(Comb::UniteStar),
        Just(Comb::UnitiStar),
        Just(Comb::Dist),
        Just(Comb::Factor),
        Just(Comb::FoldBool),
        Just(Comb::UnfoldBool),
    ];
    leaf.prop_recursive(8, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Comb::inv),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Comb::seq(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Comb::par_plus(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Comb::par_star(a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    // Printing then parsing is the identity on every AST, typed or not.
    #[test]
    fn parse_pretty_round_trip(c in arb_comb()) {
        let printed = pretty(&c);
        prop_assert_eq!(parse_comb(&printed).unwrap(), c);
    }

    // The adjoint is a structural involution away from `!` nodes, and
    // swaps the endpoints of the inferred typing.
    #[test]
    fn adjoint_involution_and_typing(c in arb_comb()) {
        let adj = c.adjoint();
        if !pretty(&c).contains('!') {
            prop_assert_eq!(adj.adjoint(), c.clone());
        }
        if let Ok((dom, cod)) = infer(&c) {
            prop_assert_eq!(infer(&adj), Ok((cod, dom)));
        }
    }
}

#[test]
fn generated_well_typed_terms_round_trip_and_reverse() {
    let mut gen = TermGen::new(0xA11CE);
    for _ in 0..1000 {
        let dom = gen.fin_type(16);
        let (c, cod) = gen.comb_from(&dom, 9);
        // printing round trip holds regardless of typing
        assert_eq!(parse_comb(&pretty(&c)).unwrap(), c);
        for v in enumerate(&dom) {
            let out = eval_at(&c, &dom, &cod, &v).unwrap();
            assert_eq!(eval_rev_at(&c, &dom, &cod, &out).unwrap(), v, "{c}");
            assert_eq!(eval_at(&c.adjoint(), &cod, &dom, &out).unwrap(), v, "{c}");
        }
        // the plain entry points agree whenever the term is closed
        if infer(&c).is_ok() {
            for v in enumerate(&dom) {
                assert_eq!(eval(&c, &v), eval_at(&c, &dom, &cod, &v));
                let out = eval(&c, &v).unwrap();
                assert_eq!(eval_rev(&c, &out).unwrap(), v);
            }
        }
    }
}

#[test]
fn seq_with_identity_is_neutral() {
    let mut gen = TermGen::new(0xBEEF);
    for _ in 0..500 {
        let dom = gen.fin_type(12);
        let (c, cod) = gen.comb_from(&dom, 7);
        assert_eq!(
            semantically_equal_at(&c, &Comb::seq(c.clone(), Comb::Id), &dom, &cod),
            Ok(true),
            "{c}"
        );
        assert_eq!(
            semantically_equal_at(&c, &Comb::seq(Comb::Id, c.clone()), &dom, &cod),
            Ok(true),
            "{c}"
        );
    }
}

#[test]
fn to_perm_is_a_homomorphism() {
    let mut gen = TermGen::new(0xF00D);
    for _ in 0..300 {
        let dom = gen.fin_type(10);
        let (p, mid) = gen.comb_from(&dom, 6);
        let (q, cod) = gen.comb_from(&mid, 6);
        let seq = Comb::seq(p.clone(), q.clone());
        let pp = to_perm_at(&p, &dom, &mid).unwrap();
        let pq = to_perm_at(&q, &mid, &cod).unwrap();
        let ps = to_perm_at(&seq, &dom, &cod).unwrap();
        assert_eq!(ps, pp.then(&pq), "{seq}");
        assert_eq!(
            to_perm_at(&Comb::inv(p.clone()), &mid, &dom).unwrap(),
            pp.inverse(),
            "{p}"
        );
        assert!(to_perm_at(&Comb::seq(p.clone(), Comb::inv(p)), &dom, &dom)
            .unwrap()
            .is_identity());
    }
}

#[test]
fn double_adjoint_is_semantically_neutral_on_inv_terms() {
    let mut gen = TermGen::new(0xCAFE);
    for _ in 0..300 {
        let dom = gen.fin_type(10);
        let (c, cod) = gen.comb_from(&dom, 8);
        // structural equality may fail across `!` nodes; extensional
        // equality always holds
        assert_eq!(
            semantically_equal_at(&c.adjoint().adjoint(), &c, &dom, &cod),
            Ok(true)
        );
    }
}

#[test]
fn infer_at_agrees_with_infer_on_closed_terms() {
    let mut gen = TermGen::new(0x5EED);
    for _ in 0..200 {
        let dom = gen.fin_type(10);
        let (c, cod) = gen.comb_from(&dom, 7);
        assert!(infer::infer_at(&c, &dom, &cod).is_ok(), "{c}");
        if let Ok((d, k)) = infer(&c) {
            assert_eq!((d, k), (dom, cod), "{c}");
        }
    }
}
