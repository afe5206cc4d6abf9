use proptest::prelude::*;

use quasishuffle::bialg::{check_free_coalgebra, delta_free_ctd};
use quasishuffle::freectd::{eval_phi, Rewriter};
use quasishuffle::syntax::{element_from_json, element_to_json, parse_element, parse_term, render_element, render_term};
use quasishuffle::tensorq::{
    coradical_degree, deconcatenate, involute, op_dot, op_left, op_right, quasi_shuffle, quasi_shuffle_paths,
    square_star, Tensor, Word,
};
use quasishuffle::{builtin_algebras, CoeffAlgebra, FreeTerm, Q};

fn algebra() -> impl Strategy<Value = CoeffAlgebra> {
    prop::sample::select(builtin_algebras())
}

fn word(alg: &CoeffAlgebra, max_len: usize) -> BoxedStrategy<Word> {
    let letters = alg.letters_up_to(2);
    prop::collection::vec(prop::sample::select(letters), 0..=max_len).prop_map(Word::new).boxed()
}

fn element(alg: &CoeffAlgebra, max_len: usize) -> BoxedStrategy<Tensor<Q>> {
    prop::collection::vec((word(alg, max_len), -3i64..=3), 0..=3)
        .prop_map(|terms| terms.into_iter().map(|(w, c)| (w, Q::from_integer(c.into()))).collect())
        .boxed()
}

fn augmented(alg: &CoeffAlgebra, max_len: usize) -> BoxedStrategy<Tensor<Q>> {
    element(alg, max_len).prop_map(|x| x.augmentation_part()).boxed()
}

fn ctd_term(max_gen: u32) -> impl Strategy<Value = FreeTerm> {
    let leaf = (1..=max_gen).prop_map(FreeTerm::Gen);
    leaf.prop_recursive(5, 6, 2, |inner| {
        (inner.clone(), inner, prop::bool::ANY).prop_map(|(l, r, prec)| {
            if prec {
                FreeTerm::prec(l, r)
            } else {
                FreeTerm::dot(l, r)
            }
        })
    })
}

fn with_algebra<T: std::fmt::Debug + Clone + 'static>(
    f: fn(&CoeffAlgebra) -> BoxedStrategy<T>,
) -> BoxedStrategy<(CoeffAlgebra, T)> {
    algebra().prop_flat_map(move |alg| (Just(alg.clone()), f(&alg))).boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recursion_matches_lattice_paths((alg, (u, v)) in with_algebra(|a| (word(a, 3), word(a, 3)).boxed())) {
        let rec = quasi_shuffle::<Q>(&alg, &Tensor::basis(u.clone()), &Tensor::basis(v.clone())).unwrap();
        prop_assert_eq!(rec, quasi_shuffle_paths::<Q>(&alg, &u, &v).unwrap());
    }

    #[test]
    fn star_is_associative((alg, (x, y, z)) in with_algebra(|a| (element(a, 2), element(a, 2), element(a, 2)).boxed())) {
        let l = quasi_shuffle(&alg, &quasi_shuffle(&alg, &x, &y).unwrap(), &z).unwrap();
        let r = quasi_shuffle(&alg, &x, &quasi_shuffle(&alg, &y, &z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn star_commutes_iff_coefficients_do((alg, (x, y)) in with_algebra(|a| (element(a, 3), element(a, 3)).boxed())) {
        if alg.is_commutative() {
            prop_assert_eq!(quasi_shuffle(&alg, &x, &y).unwrap(), quasi_shuffle(&alg, &y, &x).unwrap());
        }
    }

    #[test]
    fn three_operations_split_star((alg, (x, y)) in with_algebra(|a| (augmented(a, 3), augmented(a, 3)).boxed())) {
        let mut sum = op_left(&alg, &x, &y).unwrap();
        sum += &op_right(&alg, &x, &y).unwrap();
        sum += &op_dot(&alg, &x, &y).unwrap();
        prop_assert_eq!(sum, quasi_shuffle(&alg, &x, &y).unwrap());
    }

    #[test]
    fn deconcatenation_is_multiplicative((alg, (x, y)) in with_algebra(|a| (element(a, 3), element(a, 3)).boxed())) {
        let lhs = deconcatenate(&quasi_shuffle(&alg, &x, &y).unwrap());
        let rhs = square_star(&alg, &deconcatenate(&x), &deconcatenate(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coradical_degree_is_max_length((_alg, x) in with_algebra(|a| element(a, 4).boxed())) {
        prop_assert_eq!(coradical_degree(&x), x.augmentation_part().max_length());
    }

    #[test]
    fn involution_squares_to_identity((alg, x) in with_algebra(|a| element(a, 4).boxed())) {
        prop_assert_eq!(involute(&alg, &involute(&alg, &x).unwrap()).unwrap(), x);
    }

    #[test]
    fn text_and_json_round_trip((alg, x) in with_algebra(|a| element(a, 4).boxed())) {
        prop_assert_eq!(&parse_element(&alg, &render_element(&x)).unwrap(), &x);
        prop_assert_eq!(&element_from_json(&alg, &element_to_json(&x)).unwrap(), &x);
    }

    #[test]
    fn normal_forms_are_sound_and_stable(t in ctd_term(3)) {
        let mut rw = Rewriter::<Q>::new();
        let nf = rw.normalize(&t).unwrap();
        let n = t.max_generator();
        let back = nf.try_map_linear(|p| eval_phi::<Q>(&p.to_comb_term(), n)).unwrap();
        prop_assert_eq!(back, eval_phi::<Q>(&t, n).unwrap());
        let again = nf.try_map_linear(|p| rw.normalize(&p.to_comb_term())).unwrap();
        prop_assert_eq!(again, nf);
    }

    #[test]
    fn term_syntax_round_trips(t in ctd_term(4)) {
        prop_assert_eq!(parse_term(&render_term(&t)).unwrap(), t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn free_coproduct_is_a_coalgebra(t in ctd_term(3).prop_filter("degree <= 4", |t| t.degree() <= 4)) {
        let c = check_free_coalgebra::<Q>(&t, t.max_generator()).unwrap();
        prop_assert!(c.holds(), "{:?}", c);
    }

    #[test]
    fn free_coproduct_is_graded(t in ctd_term(3)) {
        let d = delta_free_ctd::<Q>(&t, t.max_generator()).unwrap();
        prop_assert!(d.keys().all(|(u, v)| u.degree() + v.degree() == t.degree()));
    }
}
