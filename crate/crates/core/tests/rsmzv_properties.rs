use mzvkit::numerics::{zsh_word, BigComplex, NumContext};
use mzvkit::rsmzv::{zrs_from_symbolic, zrs_index, zrs_poly, zrs_symbolic, zrs_word, zrs_word_defn};
use mzvkit::verify::indices_up_to;
use mzvkit::word_algebra::{index_to_word, phi, sym_harmonic, words_up_to, RatPoly};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

const TOL: f64 = 1e-35;

fn ctx() -> NumContext {
    NumContext::new(60).unwrap()
}

#[test]
fn index_and_word_forms_agree() {
    let ctx = ctx();
    for k in indices_up_to(6, false) {
        let d = zrs_index(&k, &ctx).unwrap().dist(&zrs_word(&k.h0_word(), &ctx).unwrap());
        assert!(d < TOL, "{k}: {d}");
    }
}

#[test]
fn phi_duality() {
    let ctx = ctx();
    for k in indices_up_to(5, false) {
        let w = k.h0_word();
        let lhs = zrs_poly(&phi(&RatPoly::rational(w)), &ctx).unwrap();
        let rhs = -zrs_word(&w, &ctx).unwrap().conj();
        assert!(lhs.dist(&rhs) < TOL, "{k}");
    }
}

#[test]
fn symmetric_harmonic_relation() {
    let ctx = ctx();
    let ks = indices_up_to(5, false);
    for k in &ks {
        for l in ks.iter().filter(|l| k.weight() + l.weight() <= 5) {
            let (wk, wl) = (k.h0_word(), l.h0_word());
            let prod = sym_harmonic(&RatPoly::rational(wk), &RatPoly::rational(wl)).unwrap();
            let lhs = zrs_poly(&prod, &ctx).unwrap();
            let rhs = &zrs_word(&wk, &ctx).unwrap() * &zrs_word(&wl, &ctx).unwrap();
            assert!(lhs.dist(&rhs) < TOL, "{k} {l}");
        }
    }
}

#[test]
fn defining_sum_and_restricted_sum_agree() {
    let ctx = ctx();
    for w in words_up_to(6) {
        let q = zrs_symbolic(&w);
        if !w.is_empty() {
            assert!(q[0].is_zero(), "{w}: {}", q[0]);
        }
        let direct = zrs_word(&w, &ctx).unwrap();
        assert!(direct.dist(&zrs_word_defn(&w, &ctx).unwrap()) < TOL, "{w}");
        assert!(direct.dist(&zrs_from_symbolic(&q, &ctx).unwrap()) < TOL, "{w}");
    }
}

/// Real part from the symmetric sum plus the even powers of `2πi` from the runs of ones.
fn real_part_oracle(k: &mzvkit::word_algebra::Index, ctx: &NumContext) -> Float {
    let bits = ctx.prec();
    let parts = k.parts();
    let r = parts.len();
    let four_pi2 = Float::with_val(bits, ctx.pi().square_ref()) * 4u32;
    let mut acc = Float::new(bits);
    for p in 0..=r {
        let left = zsh_word(&index_to_word(&k.prefix(p)), ctx).unwrap();
        let ones = parts[p..].iter().take_while(|&&c| c == 1).count();
        for s in (0..=ones).step_by(2) {
            let tail = k.suffix_from(p + s);
            let right = zsh_word(&index_to_word(&tail.reversed()), ctx).unwrap();
            // (−2πi)^s = (−4π²)^{s/2} for even s.
            let mut c = Float::with_val(bits, &left * &right);
            c *= Float::with_val(bits, (&four_pi2).pow((s / 2) as u32));
            c *= Rational::from((1, Integer::from(Integer::factorial(s as u32 + 1))));
            if (s / 2 + tail.weight() as usize) % 2 == 1 {
                c = -c;
            }
            acc += c;
        }
    }
    acc
}

#[test]
fn real_part_two_ways() {
    let ctx = ctx();
    for k in indices_up_to(6, false) {
        let direct = zrs_index(&k, &ctx).unwrap();
        let oracle = BigComplex::from_real(real_part_oracle(&k, &ctx));
        let d = BigComplex::from_real(direct.re.clone()).dist(&oracle);
        assert!(d < TOL, "{k}: {d}");
    }
}
