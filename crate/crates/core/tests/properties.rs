use proptest::prelude::*;

use psv_core::fock::{lattice_states, FockSpace, ModuleVec};
use psv_core::ideal::{IdealEngine, IdealSpec, Window};
use psv_core::upbw::{multiply, straighten_word, tau};
use psv_core::verifier::gradings;
use psv_core::{AffineWeight, AlgElem, Character, Coeff, LieData, LoopGen};

fn lie2() -> LieData {
    LieData::new(2).unwrap()
}

fn arb_word(max_len: usize, modes: i64) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..3, -modes..=modes), 0..=max_len)
}

fn arb_elem() -> impl Strategy<Value = Vec<(i64, Vec<(usize, i64)>)>> {
    prop::collection::vec((-3i64..=3, arb_word(3, 2)), 1..=3)
}

fn build(lie: &LieData, spec: &[(i64, Vec<(usize, i64)>)]) -> AlgElem {
    let mut out = AlgElem::zero();
    for (c, w) in spec {
        let word: Vec<LoopGen> = w.iter().map(|&(r, m)| LoopGen::new(r, m)).collect();
        out.add_scaled(
            &straighten_word(lie, &word),
            &Coeff::from_integer((*c).into()),
        );
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(a in arb_elem(), b in arb_elem(), c in arb_elem()) {
        let lie = lie2();
        let (a, b, c) = (build(&lie, &a), build(&lie, &b), build(&lie, &c));
        let left = multiply(&lie, &multiply(&lie, &a, &b), &c);
        let right = multiply(&lie, &a, &multiply(&lie, &b, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn straightening_preserves_grading(w in arb_word(5, 3)) {
        let lie = lie2();
        let rs = &lie.roots;
        let word: Vec<LoopGen> = w.iter().map(|&(r, m)| LoopGen::new(r, m)).collect();
        let e = straighten_word(&lie, &word);
        let weight: i64 = word.iter().map(|g| -g.mode).sum();
        let mut charges = vec![0i64; 2];
        for g in &word {
            for (c, r) in charges.iter_mut().zip(rs.root(g.root)) {
                *c += r;
            }
        }
        for (m, _) in e.terms() {
            prop_assert!(m.is_normal());
            prop_assert_eq!(m.weight(), weight);
            prop_assert_eq!(m.charges(rs), charges.clone());
        }
    }

    #[test]
    fn tau_is_multiplicative_and_invertible(
        a in arb_elem(),
        b in arb_elem(),
        lam in prop::collection::vec(-2i64..=2, 2),
        nu in prop::collection::vec(prop_oneof![Just(-2i64), Just(-1), Just(1), Just(3)], 2),
    ) {
        let lie = lie2();
        let (a, b) = (build(&lie, &a), build(&lie, &b));
        let ch = Character::from_signs(&nu).unwrap();
        let ab = tau(&lie, &lam, &ch, &multiply(&lie, &a, &b));
        let ta_tb = multiply(&lie, &tau(&lie, &lam, &ch, &a), &tau(&lie, &lam, &ch, &b));
        prop_assert_eq!(&ab, &ta_tb);
        let neg: Vec<i64> = lam.iter().map(|x| -x).collect();
        let back = tau(&lie, &neg, &ch.inverse(), &tau(&lie, &lam, &ch, &a));
        prop_assert_eq!(back, a);
    }

    #[test]
    fn lattice_action_is_a_representation(a in arb_elem(), b in arb_elem(), pick in 0usize..1000) {
        let lie = lie2();
        let states = lattice_states(&lie, 2);
        let v = ModuleVec::basis(vec![states[pick % states.len()].clone()]);
        let (a, b) = (build(&lie, &a), build(&lie, &b));
        let fock = FockSpace::new(&lie);
        let lhs = fock.act(&multiply(&lie, &a, &b), &v);
        let rhs = fock.act(&a, &fock.act(&b, &v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn translation_commutes_up_to_sign(
        root in 0usize..3,
        m in -3i64..=3,
        mu in prop::collection::vec(-2i64..=2, 2),
        pick in 0usize..1000,
    ) {
        // x_alpha(m) e_mu = c(alpha, mu) e_mu x_alpha(m + <alpha, mu>) on one factor
        let lie = lie2();
        let rs = &lie.roots;
        let states = lattice_states(&lie, 3);
        let v = ModuleVec::basis(vec![states[pick % states.len()].clone()]);
        let fock = FockSpace::new(&lie);
        let alpha = rs.root(root);
        let c = lie.cocycle.commutator_weights(rs, &rs.root_to_weight(alpha), &mu).unwrap();
        let shift = psv_core::RootSystemData::mixed_pairing(alpha, &mu);
        let lhs = fock.act_gen(LoopGen::new(root, m), &fock.e_lambda_tensor(&mu, &v).unwrap());
        let rhs = fock
            .e_lambda_tensor(&mu, &fock.act_gen(LoopGen::new(root, m + shift), &v))
            .unwrap()
            .scale(&Coeff::from_integer(c.into()));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn window_growth_never_lowers_ranks() {
    let lie = lie2();
    for kv in [vec![1, 1, 0], vec![0, 0, 2]] {
        let l = AffineWeight::new(kv).unwrap();
        let spec = IdealSpec::for_weight(&lie, &l).unwrap();
        let small = IdealEngine::compute(&lie, &spec, Window::new(3, 6)).unwrap();
        let large = IdealEngine::compute(&lie, &spec, Window::new(3, 6).with_t_max(5)).unwrap();
        let tight =
            IdealEngine::compute(&lie, &spec, Window::new(3, 6).with_mode_bound(Some(1))).unwrap();
        for g in gradings(2, 3, 6) {
            assert!(
                small.rank(&g).unwrap() <= large.rank(&g).unwrap(),
                "{l} at {g}"
            );
            assert!(
                tight.rank(&g).unwrap() <= small.rank(&g).unwrap(),
                "{l} at {g}"
            );
        }
    }
}
