use rug::{Float, Integer, Rational};

use super::symbolic::{signed_y_over_one_plus_yt, sin_identity_residual, Sign};
use super::{indices_up_to, par_cases, Case, CheckSpec, Residual, VerifyError};
use crate::numerics::{
    eval_admissible, exp_factor_series, gamma_ratio_series, zeta_index, BigComplex, ExpFactor, GammaFactor,
    MultiSeries, NumContext, NumSeries,
};
use crate::regularization::{
    harmonic_poly_numeric, ikz_rho, zeta_shift_star, zsh_poly_numeric, IkzDirection, NumTPoly,
};
use crate::rsmzv::{zrs_index, zrs_series, zrs_word, zsh_series};
use crate::word_algebra::{
    apply_generating_map, dual_index, geometric_series_word, hoffman_dual, index_to_word, phi, sym_harmonic, tau,
    weak_compositions, ExactSeries, GenMap, Index, Letter, NcPoly, RatPoly, Rationals, SeriesPoly, SeriesRing, Var,
    VarSet, Word,
};

fn numeric(a: &BigComplex, b: &BigComplex) -> Residual {
    Residual::Numeric(a.dist(b))
}

fn series_residual(a: &MultiSeries, b: &MultiSeries) -> Result<Residual, VerifyError> {
    Ok(Residual::Numeric(a.max_abs_diff(b)?))
}

fn exact_ring(vars: VarSet, maxdeg: u32) -> ExactSeries {
    SeriesRing::new(Rationals, vars, maxdeg)
}

/// `w_k = y x^{k_1−1} ⋯ y x^{k_r−1} y`.
pub(crate) fn h0(k: &Index) -> Word {
    index_to_word(k).concat(&Word::y())
}

/// `geo(l1, v1) · w · geo(l2, v2)` in `ring`.
fn sandwich(
    ring: &ExactSeries,
    left: (Letter, Var, i32),
    middle: &SeriesPoly,
    right: (Letter, Var, i32),
) -> Result<SeriesPoly, VerifyError> {
    let l = geometric_series_word(ring, left.0, left.1, left.2)?;
    let r = geometric_series_word(ring, right.0, right.1, right.2)?;
    Ok(l.try_mul(middle)?.try_mul(&r)?)
}

/// `1/(1−xA) · w · 1/(1−xB)`.
fn x_padded(ring: &ExactSeries, middle: &SeriesPoly) -> Result<SeriesPoly, VerifyError> {
    sandwich(ring, (Letter::X, Var::A, 1), middle, (Letter::X, Var::B, 1))
}

fn word_in(ring: &ExactSeries, w: Word) -> SeriesPoly {
    NcPoly::word(ring.clone(), w)
}

fn sum_complex(values: impl IntoIterator<Item = BigComplex>, prec: u32) -> BigComplex {
    values.into_iter().fold(BigComplex::zero(prec), |acc, v| &acc + &v)
}

/// `Γ(1+ℓ1)Γ(1+ℓ2)/Γ(1+ℓ1+ℓ2)`.
fn beta_ratio(ring: &NumSeries, l1: [i64; 3], l2: [i64; 3], ctx: &NumContext) -> Result<MultiSeries, VerifyError> {
    let sum = [l1[0] + l2[0], l1[1] + l2[1], l1[2] + l2[2]];
    Ok(gamma_ratio_series(
        &[
            GammaFactor::new(1, l1[0], l1[1], l1[2]),
            GammaFactor::new(1, l2[0], l2[1], l2[2]),
            GammaFactor::new(-1, sum[0], sum[1], sum[2]),
        ],
        ring,
        ctx,
    )?)
}

/// The same ratio subtracted from 2.
fn two_minus_beta(ring: &NumSeries, l1: [i64; 3], l2: [i64; 3], ctx: &NumContext) -> Result<MultiSeries, VerifyError> {
    let g = beta_ratio(ring, l1, l2, ctx)?;
    let two = MultiSeries::constant(ring, BigComplex::from_rational(ctx.prec(), &Rational::from(2)));
    Ok(two.sub(&g)?)
}

/// `Γ(1−T)Γ(1+A)/Γ(1−T+A) · Γ(1+T)Γ(1−B)/Γ(1+T−B)` (corrected), or the
/// same with each ratio `R` replaced by `2 − R` (printed).
fn main_gamma_factor(ring: &NumSeries, ctx: &NumContext, sign: Sign) -> Result<MultiSeries, VerifyError> {
    let factor = match sign {
        Sign::Corrected => beta_ratio,
        Sign::Printed => two_minus_beta,
    };
    let a = factor(ring, [0, 0, -1], [1, 0, 0], ctx)?;
    let b = factor(ring, [0, 0, 1], [0, -1, 0], ctx)?;
    Ok(a.mul(&b)?)
}

pub(crate) fn duality_sh(spec: &CheckSpec, ctx: &NumContext) -> Result<Vec<Case>, VerifyError> {
    let ks = indices_up_to(spec.max_weight, true);
    par_cases(&ks, |k| {
        let w = index_to_word(k);
        let dual = w.reversed().swapped();
        let a = eval_admissible(&w, ctx)?;
        let b = eval_admissible(&dual, ctx)?;
        Ok((format!("{k}"), Residual::Numeric(Float::with_val(ctx.prec(), &a - &b).abs())))
    })
}

fn ohno_sum(k: &Index, m: u32, ctx: &NumContext) -> Result<Float, VerifyError> {
    let mut acc = Float::new(ctx.prec());
    for e in weak_compositions(m, k.depth()) {
        acc += zeta_index(&k.shifted(&e), ctx)?;
    }
    Ok(acc)
}

pub(crate) fn ohno(spec: &CheckSpec, ctx: &NumContext) -> Result<Vec<Case>, VerifyError> {
    let cases: Vec<(Index, u32)> = indices_up_to(spec.max_weight, true)
        .into_iter()
        .filter(|k| !k.is_empty())
        .flat_map(|k| (0..=spec.max_m).map(move |m| (k.clone(), m)))
        .collect();
    par_cases(&cases, |(k, m)| {
        let dual = dual_index(k)?;
        let lhs = ohno_sum(k, *m, ctx)?;
        let rhs = ohno_sum(&dual, *m, ctx)?;
        Ok((format!("k={k} dual={dual} m={m}"), Residual::Numeric(Float::with_val(ctx.prec(), &lhs - &rhs).abs())))
    })
}

/// `(−2πi)^j / (j+1)!`.
fn euler_coefficient(j: u32, ctx: &NumContext) -> BigComplex {
    let fact = Integer::from(Integer::factorial(j + 1));
    BigComplex::pi_i_times(ctx.prec(), &Rational::from(-2)).pow(j).scale_rational(&Rational::from((Integer::from(1), fact)))
}

pub(crate) fn takeyama(spec: &CheckSpec, ctx: &NumContext) -> Result<Vec<Case>, VerifyError> {
    let bits = ctx.prec();
    let cases: Vec<(Index, u32)> = indices_up_to(spec.max_weight, false)
        .into_iter()
        .filter(|k| !k.is_empty())
        .flat_map(|k| (0..=spec.max_m).map(move |m| (k.clone(), m)))
        .collect();
    par_cases(&cases, |(k, m)| {
        let l = hoffman_dual(k)?;
        let mut lhs = Vec::new();
        for f in weak_compositions(*m, l.depth()) {
            lhs.push(zrs_index(&hoffman_dual(&l.shifted(&f))?, ctx)?);
        }
        let lhs = sum_complex(lhs, bits);
        let mut rhs = BigComplex::zero(bits);
        for j in 0..=*m {
            let mut inner = BigComplex::zero(bits);
            for e in weak_compositions(m - j, k.depth()) {
                inner = &inner + &zrs_index(&k.shifted(&e), ctx)?;
            }
            rhs = &rhs + &(&euler_coefficient(j, ctx) * &inner);
        }
        Ok((format!("k={k} m={m}"), numeric(&lhs, &rhs)))
    })
}

pub(crate) fn hms2023(spec: &CheckSpec, ctx: &NumContext) -> Result<Vec<Case>, VerifyError> {
    let ring = exact_ring(VarSet::ABT, spec.maxdeg);
    let nring = ctx.series_ring(VarSet::ABT, spec.maxdeg);
    let gamma = gamma_ratio_series(
        &[
            GammaFactor::new(1, 1, 0, 0),
            GammaFactor::new(1, 0, 1, -1),
            GammaFactor::new(-1, 0, 1, 0),
            GammaFactor::new(-1, 1, 0, -1),
        ],
        &nring,
        ctx,
    )?;
    let words: Vec<Word> = indices_up_to(spec.max_weight, true).iter().map(index_to_word).collect();
    par_cases(&words, |w| {
        let p = sandwich(&ring, (Letter::X, Var::A, 1), &word_in(&ring, *w), (Letter::Y, Var::B, 1))?;
        let lhs = zsh_series(&apply_generating_map(GenMap::Sigma, &tau(&p))?, ctx)?;
        let rhs = gamma.mul(&zsh_series(&apply_generating_map(GenMap::Sigma, &p)?, ctx)?)?;
        Ok((format!("w={}", display_word(w)), series_residual(&lhs, &rhs)?))
    })
}

fn display_word(w: &Word) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.to_string()
    }
}

pub(crate) fn main_theorem(spec: &CheckSpec, ctx: &NumContext, sign: Sign) -> Result<Vec<Case>, VerifyError> {
    let ring = exact_ring(VarSet::ABT, spec.maxdeg);
    let nring = ctx.series_ring(VarSet::ABT, spec.maxdeg);
    let factor = exp_factor_series(ExpFactor::EulerMinus, &nring, ctx)?.mul(&main_gamma_factor(&nring, ctx, sign)?)?;
    let ks: Vec<Index> = indices_up_to(spec.max_weight, false);
    par_cases(&ks, |k| {
        let p = x_padded(&ring, &word_in(&ring, h0(k)))?;
        let lhs = zrs_series(&apply_generating_map(GenMap::RhoTilde, &p)?, ctx)?;
        let rhs = factor.mul(&zrs_series(&apply_generating_map(GenMap::SigmaTilde, &p)?, ctx)?)?;
        Ok((format!("w_{k}"), series_residual(&lhs, &rhs)?))
    })
}

/// The identity with `A = B = 0`, one case per index and power of `T`.
pub fn takeyama_from_main(max_weight: u32, max_m: u32, ctx: &NumContext) -> Result<Vec<(String, Float)>, VerifyError> {
    let ring = exact_ring(VarSet::T, max_m);
    let nring = ctx.series_ring(VarSet::T, max_m);
    let factor = exp_factor_series(ExpFactor::EulerMinus, &nring, ctx)?;
    let ks: Vec<Index> = indices_up_to(max_weight, false).into_iter().filter(|k| !k.is_empty()).collect();
    let mut out = Vec::new();
    for k in ks {
        let p = word_in(&ring, h0(&k));
        let lhs = zrs_series(&apply_generating_map(GenMap::RhoTilde, &p)?, ctx)?;
        let rhs = factor.mul(&zrs_series(&apply_generating_map(GenMap::SigmaTilde, &p)?, ctx)?)?;
        for m in 0..=max_m {
            let mono = crate::word_algebra::Monomial::var(Var::T, m as u16);
            out.push((format!("k={k} m={m}"), lhs.coeff(&mono).dist(&rhs.coeff(&mono))));
        }
    }
    Ok(out)
}

pub(crate) fn phi_rs(spec: &CheckSpec, ctx: &NumContext) -> Result<Vec<Case>, VerifyError> {
    let ring = exact_ring(VarSet::AB, spec.maxdeg);
    let nring = ctx.series_ring(VarSet::AB, spec.maxdeg);
    let phase = exp_factor_series(ExpFactor::PhaseAB, &nring, ctx)?.neg();
    let ks = indices_up_to(spec.max_weight, false);
    par_cases(&ks, |k| {
        let p = x_padded(&ring, &word_in(&ring, h0(k)))?;
        let lhs = zrs_series(&phi(&p), ctx)?;
        let rhs = phase.mul(&zrs_series(&p, ctx)?.conj())?;
        Ok((format!("w_{k}"), series_residual(&lhs, &rhs)?))
    })
}

pub(crate) fn duality_rs(spec: &CheckSpec, ctx: &NumContext) -> Result<Vec<Case>, VerifyError> {
    let ks = indices_up_to(spec.max_weight, false);
    par_cases(&ks, |k| {
        let w = h0(k);
        let mut lhs = BigComplex::zero(ctx.prec());
        for (u, c) in phi(&RatPoly::rational(w)).terms() {
            lhs = &lhs + &zrs_word(u, ctx)?.scale_rational(c);
        }
        let rhs = -zrs_word(&w, ctx)?.conj();
        Ok((format!("w_{k}"), numeric(&lhs, &rhs)))
    })
}

fn index_pairs(max_weight: u32) -> Vec<(Index, Index)> {
    let all = indices_up_to(max_weight, false);
    let mut out = Vec::new();
    for k in &all {
        for l in &all {
            if k <= l && k.weight() + l.weight() <= max_weight {
                out.push((k.clone(), l.clone()));
            }
        }
    }
    out
}

pub(crate) fn harmonic_rs(spec: &CheckSpec, ctx: &NumContext) -> Result<Vec<Case>, VerifyError> {
    let pairs = index_pairs(spec.max_weight);
    par_cases(&pairs, |(k, l)| {
        let prod = sym_harmonic(&RatPoly::rational(h0(k)), &RatPoly::rational(h0(l)))?;
        let mut lhs = BigComplex::zero(ctx.prec());
        for (u, c) in prod.terms() {
            lhs = &lhs + &zrs_word(u, ctx)?.scale_rational(c);
        }
        let rhs = &zrs_word(&h0(k), ctx)? * &zrs_word(&h0(l), ctx)?;
        Ok((format!("w_{k} * w_{l}"), numeric(&lhs, &rhs)))
    })
}

pub(crate) fn harmonic_ext(spec: &CheckSpec, ctx: &NumContext) -> Result<Vec<Case>, VerifyError> {
    let ring = exact_ring(VarSet::AB, spec.maxdeg);
    let pairs = index_pairs(spec.max_weight);
    par_cases(&pairs, |(k, l)| {
        let wk = word_in(&ring, h0(k));
        let wl = word_in(&ring, h0(l));
        let lhs = zrs_series(&x_padded(&ring, &sym_harmonic(&wk, &wl)?)?, ctx)?;
        let rhs = zrs_series(&x_padded(&ring, &wk)?, ctx)?.mul(&zrs_series(&x_padded(&ring, &wl)?, ctx)?)?;
        Ok((format!("w_{k} * w_{l}"), series_residual(&lhs, &rhs)?))
    })
}

pub(crate) fn lemma_shift(spec: &CheckSpec, ctx: &NumContext) -> Result<Vec<Case>, VerifyError> {
    let bits = ctx.prec();
    let minus = BigComplex::pi_i_times(bits, &Rational::from((-1, 2)));
    let plus = BigComplex::pi_i_times(bits, &Rational::from((1, 2)));
    let cases: Vec<(Index, u32, u32)> = indices_up_to(spec.max_weight, false)
        .into_iter()
        .flat_map(|k| {
            let m = spec.max_m;
            (0..=m).flat_map(move |a| {
                let k = k.clone();
                (0..=m).map(move |b| (k.clone(), a, b))
            })
        })
        .collect();
    par_cases(&cases, |(k, a, b)| {
        let w = Word::power(Letter::X, *a as usize).concat(&h0(k)).concat(&Word::power(Letter::X, *b as usize));
        let lhs = zrs_word(&w, ctx)?;
        let r = k.depth();
        let mut rhs = BigComplex::zero(bits);
        for j in 0..=r {
            let head = k.prefix(j);
            let tail = k.suffix_from(j);
            let v = &zeta_shift_star(&head, *a, &minus, ctx)? * &zeta_shift_star(&tail.reversed(), *b, &plus, ctx)?;
            rhs = if (tail.weight() + b) % 2 == 1 { &rhs - &v } else { &rhs + &v };
        }
        Ok((format!("x^{a} w_{k} x^{b}"), numeric(&lhs, &rhs)))
    })
}

pub(crate) fn reg_theorem(spec: &CheckSpec, ctx: &NumContext) -> Result<Vec<Case>, VerifyError> {
    let ks = indices_up_to(spec.max_weight, false);
    par_cases(&ks, |k| {
        let sh = zsh_poly_numeric(&index_to_word(k), ctx)?;
        let star = harmonic_poly_numeric(k, ctx)?;
        let mapped = ikz_rho(&star, IkzDirection::Forward, ctx)?;
        Ok((format!("{k}"), Residual::Numeric(sh.max_abs_diff(&mapped, ctx.prec()))))
    })
}

fn t_power(l: usize, prec: u32) -> NumTPoly {
    let mut c = vec![BigComplex::zero(prec); l + 1];
    c[l] = BigComplex::one(prec);
    NumTPoly::new(c)
}

pub(crate) fn sum_spq(spec: &CheckSpec, ctx: &NumContext) -> Result<Vec<Case>, VerifyError> {
    let bits = ctx.prec();
    let minus = BigComplex::pi_i_times(bits, &Rational::from((-1, 2)));
    let plus = BigComplex::pi_i_times(bits, &Rational::from((1, 2)));
    let d = spec.maxdeg as usize;
    let mut at_minus = Vec::with_capacity(d + 1);
    let mut at_plus = Vec::with_capacity(d + 1);
    for l in 0..=d {
        let p = ikz_rho(&t_power(l, bits), IkzDirection::Inverse, ctx)?;
        at_minus.push(p.eval(&minus));
        at_plus.push(p.eval(&plus));
    }
    let mut cases = Vec::new();
    for s in 0..=d {
        let mut lhs = BigComplex::zero(bits);
        for l1 in 0..=s {
            let l2 = s - l1;
            let denom = Integer::from(Integer::factorial(l1 as u32)) * Integer::from(Integer::factorial(l2 as u32));
            let sign = if l2 % 2 == 1 { -1 } else { 1 };
            let w = Rational::from((Integer::from(sign), denom));
            lhs = &lhs + &(&at_minus[l1] * &at_plus[l2]).scale_rational(&w);
        }
        cases.push((format!("s={s}"), numeric(&lhs, &euler_coefficient(s as u32, ctx))));
    }
    cases.push((format!("exact product formula through u^{d}"), Residual::Exact(sin_identity_residual(d))));
    Ok(cases)
}

/// `1/(1−xA) · (±y/(1+yT)) · 1/(1−xB)`.
fn lemma34_word(ring: &ExactSeries, sign: Sign) -> Result<SeriesPoly, VerifyError> {
    x_padded(ring, &signed_y_over_one_plus_yt(ring, sign)?)
}

pub(crate) fn lemma33(spec: &CheckSpec, ctx: &NumContext, sign: Sign) -> Result<Vec<Case>, VerifyError> {
    let ring = exact_ring(VarSet::ABT, spec.maxdeg);
    let factor = zrs_series(&lemma34_word(&ring, sign)?, ctx)?.conj();
    let ks = indices_up_to(spec.max_weight, false);
    par_cases(&ks, |k| {
        let p = x_padded(&ring, &word_in(&ring, h0(k)))?;
        let lhs = zrs_series(&apply_generating_map(GenMap::RhoTilde, &p)?, ctx)?;
        let rhs = factor.mul(&zrs_series(&apply_generating_map(GenMap::SigmaTilde, &p)?, ctx)?)?;
        Ok((format!("w_{k}"), series_residual(&lhs, &rhs)?))
    })
}

pub(crate) fn gamma_formula(spec: &CheckSpec, ctx: &NumContext) -> Result<Vec<Case>, VerifyError> {
    // C ↦ A, D ↦ B.
    let ring = exact_ring(VarSet::AB, spec.maxdeg);
    let nring = ctx.series_ring(VarSet::AB, spec.maxdeg);
    let one = word_in(&ring, Word::empty());
    let p = sandwich(&ring, (Letter::Y, Var::A, 1), &one, (Letter::X, Var::B, 1))?;
    let lhs = zsh_series(&p, ctx)?;
    let rhs = two_minus_beta(&nring, [-1, 0, 0], [0, -1, 0], ctx)?;
    Ok(vec![(format!("degree {}", spec.maxdeg), series_residual(&lhs, &rhs)?)])
}

pub(crate) fn lemma_computation(spec: &CheckSpec, ctx: &NumContext, sign: Sign) -> Result<Vec<Case>, VerifyError> {
    let ring = exact_ring(VarSet::ABT, spec.maxdeg);
    let nring = ctx.series_ring(VarSet::ABT, spec.maxdeg);
    let lhs = zrs_series(&lemma34_word(&ring, sign)?, ctx)?;
    let rhs = exp_factor_series(ExpFactor::EulerPlus, &nring, ctx)?.mul(&main_gamma_factor(&nring, ctx, sign)?)?;
    Ok(vec![(format!("degree {}", spec.maxdeg), series_residual(&lhs, &rhs)?)])
}
