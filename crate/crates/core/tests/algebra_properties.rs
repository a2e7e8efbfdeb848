use mzvkit::regularization::{double_shuffle_decompose, harmonic_decompose, harmonic_reassemble, zsh_symbolic};
use mzvkit::verify::indices_up_to;
use mzvkit::word_algebra::{
    apply_generating_map, dual_index, harmonic_index, hoffman_dual, index_to_word, phi, shuffle, sym_harmonic, t_ring, tau,
    GenMap, Index, IndexCombo, Letter, Monomial, NcPoly, RatPoly, SeriesPoly, Var, Word, words_up_to,
};
use proptest::prelude::*;

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(any::<bool>(), 0..=max_len)
        .prop_map(|bits| Word::from_letters(bits.into_iter().map(|b| if b { Letter::Y } else { Letter::X })))
}

fn index_strategy(max_weight: u32) -> impl Strategy<Value = Index> {
    let all = indices_up_to(max_weight, false);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn rat(w: Word) -> RatPoly {
    RatPoly::rational(w)
}

fn sh(p: &RatPoly, q: &RatPoly) -> RatPoly {
    shuffle(p, q).unwrap()
}

#[test]
fn shuffle_commutative_and_associative() {
    let words: Vec<Word> = words_up_to(6).collect();
    for u in &words {
        for v in words.iter().filter(|v| u.len() + v.len() <= 6) {
            let (pu, pv) = (rat(*u), rat(*v));
            assert_eq!(sh(&pu, &pv), sh(&pv, &pu), "{u} {v}");
            for t in words.iter().filter(|t| u.len() + v.len() + t.len() <= 6) {
                let pt = rat(*t);
                assert_eq!(sh(&sh(&pu, &pv), &pt), sh(&pu, &sh(&pv, &pt)), "{u} {v} {t}");
            }
        }
    }
}

#[test]
fn tau_is_an_involutive_anti_automorphism() {
    let words: Vec<Word> = words_up_to(5).collect();
    for u in &words {
        assert_eq!(tau(&tau(&rat(*u))), rat(*u));
        for v in &words {
            let lhs = tau(&sh(&rat(*u), &rat(*v)));
            assert_eq!(lhs, sh(&tau(&rat(*u)), &tau(&rat(*v))), "{u} {v}");
        }
    }
}

#[test]
fn phi_is_an_involution() {
    for w in words_up_to(6) {
        assert_eq!(phi(&phi(&rat(w))), rat(w), "{w}");
    }
}

#[test]
fn dual_index_involution_and_word_form() {
    for k in indices_up_to(8, true) {
        let d = dual_index(&k).unwrap();
        assert_eq!(dual_index(&d).unwrap(), k);
        assert_eq!(d.weight(), k.weight());
        assert_eq!(rat(index_to_word(&d)), tau(&rat(index_to_word(&k))), "{k}");
    }
}

#[test]
fn hoffman_dual_involution() {
    for k in indices_up_to(8, false).into_iter().filter(|k| !k.is_empty()) {
        let d = hoffman_dual(&k).unwrap();
        assert_eq!(d.weight(), k.weight());
        assert_eq!(hoffman_dual(&d).unwrap(), k);
    }
}

#[test]
fn shuffle_antipode_vanishes() {
    for w in words_up_to(6).filter(|w| !w.is_empty()) {
        let k = w.len();
        let mut acc = RatPoly::zero(mzvkit::word_algebra::Rationals);
        for p in 0..=k {
            let term = sh(&rat(w.prefix(p)), &rat(w.suffix_from(p).reversed()));
            acc = if (k - p) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        assert!(acc.is_zero(), "{w}: {acc}");
    }
}

#[test]
fn y_is_the_symmetric_harmonic_unit() {
    for k in indices_up_to(5, false) {
        for (a, b) in [(0, 0), (1, 0), (0, 2), (2, 1)] {
            let w = Word::power(Letter::X, a).concat(&k.h0_word()).concat(&Word::power(Letter::X, b));
            assert_eq!(sym_harmonic(&rat(w), &rat(Word::y())).unwrap(), rat(w));
            assert_eq!(sym_harmonic(&rat(Word::y()), &rat(w)).unwrap(), rat(w));
        }
    }
}

#[test]
fn exact_reassembly_up_to_length_seven() {
    for w in words_up_to(7) {
        assert_eq!(double_shuffle_decompose(&w).reassemble(), rat(w), "{w}");
    }
}

#[test]
fn harmonic_reassembly_up_to_weight_six() {
    for k in indices_up_to(6, false) {
        assert_eq!(harmonic_reassemble(&harmonic_decompose(&k)), IndexCombo::single(k.clone()), "{k}");
    }
}

#[test]
fn zsh_symbolic_is_a_shuffle_homomorphism() {
    let words: Vec<Word> = words_up_to(6).collect();
    for u in &words {
        for v in words.iter().filter(|v| u.len() + v.len() <= 6) {
            let lhs = zsh_symbolic(&sh(&rat(*u), &rat(*v)));
            let rhs = sh(&zsh_symbolic(&rat(*u)), &zsh_symbolic(&rat(*v)));
            assert_eq!(lhs, rhs, "{u} {v}");
        }
    }
}

fn one_minus(ring: &mzvkit::word_algebra::ExactSeries, w: &NcPoly<mzvkit::word_algebra::ExactSeries>) -> SeriesPoly {
    let t = ring.monomial(Monomial::var(Var::T, 1));
    let wt = w.scaled(&t);
    NcPoly::one(ring.clone()).try_sub(&wt).unwrap()
}

#[test]
fn tilde_maps_are_compatible() {
    let maxdeg = 4;
    let ring = t_ring(maxdeg);
    let x = NcPoly::word(ring.clone(), Word::x());
    let z = x.try_add(&NcPoly::word(ring.clone(), Word::y())).unwrap();
    let one_minus_xt = one_minus(&ring, &x);
    let one_minus_zt = one_minus(&ring, &z);
    for w in words_up_to(5) {
        let p = rat(w).lift(&ring);
        let pxt = p.try_mul(&one_minus_xt).unwrap();
        assert_eq!(
            apply_generating_map(GenMap::Sigma, &pxt).unwrap(),
            apply_generating_map(GenMap::SigmaTilde, &p).unwrap(),
            "sigma {w}"
        );
        let rhs = apply_generating_map(GenMap::RhoTilde, &p).unwrap().try_mul(&one_minus_zt).unwrap();
        assert_eq!(apply_generating_map(GenMap::Rho, &pxt).unwrap(), rhs, "rho {w}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn harmonic_index_commutative_and_associative(k in index_strategy(5), l in index_strategy(5), m in index_strategy(5)) {
        prop_assert_eq!(harmonic_index(&k, &l), harmonic_index(&l, &k));
        let left = harmonic_index(&k, &l).harmonic(&IndexCombo::single(m.clone()));
        let right = IndexCombo::single(k.clone()).harmonic(&harmonic_index(&l, &m));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn sym_harmonic_commutative_and_associative(
        k in index_strategy(5), l in index_strategy(5), m in index_strategy(5),
        pads in prop::collection::vec(0usize..3, 6),
    ) {
        let padded = |k: &Index, a: usize, b: usize| {
            rat(Word::power(Letter::X, a).concat(&k.h0_word()).concat(&Word::power(Letter::X, b)))
        };
        let (p, q, r) = (padded(&k, pads[0], pads[1]), padded(&l, pads[2], pads[3]), padded(&m, pads[4], pads[5]));
        prop_assert_eq!(sym_harmonic(&p, &q).unwrap(), sym_harmonic(&q, &p).unwrap());
        let left = sym_harmonic(&sym_harmonic(&p, &q).unwrap(), &r).unwrap();
        let right = sym_harmonic(&p, &sym_harmonic(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn shuffle_is_bilinear(u in word_strategy(4), v in word_strategy(4), t in word_strategy(3)) {
        let sum = &rat(v) + &rat(t);
        prop_assert_eq!(sh(&rat(u), &sum), &sh(&rat(u), &rat(v)) + &sh(&rat(u), &rat(t)));
    }

    #[test]
    fn tau_reverses_and_swaps(w in word_strategy(12)) {
        prop_assert_eq!(tau(&rat(w)), rat(w.reversed().swapped()));
        prop_assert_eq!(tau(&tau(&rat(w))), rat(w));
    }

    #[test]
    fn phi_involution_on_longer_words(w in word_strategy(9)) {
        prop_assert_eq!(phi(&phi(&rat(w))), rat(w));
    }
}
