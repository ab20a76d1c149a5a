use proptest::prelude::*;

use anticyclic::characters::{self as ch, SeriesName};
use anticyclic::linalg::{add, scale};
use anticyclic::nsoperad::{engine, Monomial, OperadKind};
use anticyclic::numbercomb::Partition;
use anticyclic::rat::Rat;
use anticyclic::symfunc::SymFunc;
use anticyclic::symoperad::{generate_ideal, generate_suboperad, module_character, seeds, InducedOperad, Space};

fn kind_strategy() -> impl Strategy<Value = OperadKind> {
    prop_oneof![Just(OperadKind::Dias), Just(OperadKind::Dend)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_linear(kind in kind_strategy(), n in 2usize..=6, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), a in -5i64..5, b in -5i64..5) {
        let mut op = engine(kind);
        let all = Monomial::all(n);
        let (u, v) = (all[i.index(all.len())].clone(), all[j.index(all.len())].clone());
        let combined = op.eval_combination(&[(u.clone(), Rat::int(a)), (v.clone(), Rat::int(b))]).unwrap();
        let separate = add(&scale(&op.eval_monomial(&u).unwrap(), &Rat::int(a)), &scale(&op.eval_monomial(&v).unwrap(), &Rat::int(b)));
        prop_assert_eq!(combined, separate);
    }

    #[test]
    fn normal_form_is_idempotent(kind in kind_strategy(), n in 1usize..=6, i in any::<prop::sample::Index>()) {
        let mut op = engine(kind);
        let all = Monomial::all(n);
        let w = &all[i.index(all.len())];
        let v = op.eval_monomial(w).unwrap();
        let lifted: Vec<(Monomial, Rat)> = v.iter().map(|(k, c)| (op.representative(n, *k).unwrap(), c.clone())).collect();
        prop_assert_eq!(op.eval_combination(&lifted).unwrap(), v);
    }
}

#[test]
fn legendre_is_an_involution_on_named_series() {
    for name in [SeriesName::PermAc, SeriesName::LeibAc, SeriesName::DiasAc] {
        let f = ch::series(name, 10).unwrap();
        assert_eq!(f.legendre().unwrap().legendre().unwrap(), f, "{name}");
    }
}

#[test]
fn legendre_derivatives_are_plethystic_inverses() {
    for name in [SeriesName::PermAc, SeriesName::LeibAc, SeriesName::DiasAc] {
        let f = ch::series(name, 10).unwrap();
        let lhs = f.legendre().unwrap().d_p1();
        let rhs = f.d_p1().plethystic_inverse().unwrap();
        assert!(lhs.agrees_with(&rhs), "{name}");
        let composed = f.d_p1().plethysm(&lhs).unwrap();
        assert!(composed.agrees_with(&SymFunc::p(1, composed.max_degree())), "{name}");
    }
}

#[test]
fn identity_trace_is_dimension() {
    let n = 4;
    for kind in [OperadKind::Dias, OperadKind::Dend] {
        let mut ind = InducedOperad::new(kind, n).unwrap();
        let (sub_seed, ideal_seed) = match kind {
            OperadKind::Dias => (seeds::leibniz_bracket(&ind), seeds::leibniz_bracket(&ind)),
            OperadKind::Dend => (seeds::prelie_product(&ind), seeds::zinbiel_relation(&ind)),
        };
        let subs = generate_suboperad(&mut ind, &sub_seed, n).unwrap();
        let ideals = generate_ideal(&mut ind, &ideal_seed, n).unwrap();
        for k in 1..=n {
            let identity = Partition::new(vec![1; k + 1]);
            for space in [Space::Ambient, Space::Sub(&subs[k - 1]), Space::Sub(&ideals[k - 1]), Space::Quotient(&ideals[k - 1])] {
                let chi = module_character(&ind, k, space).unwrap();
                assert_eq!(chi.trace_eval(&identity), Rat::int(space.dim(&ind, k) as i64), "{kind} arity {k}");
            }
        }
    }
}
