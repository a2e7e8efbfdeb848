use rug::{Integer, Rational};

use super::checks::h0;
use super::{indices_up_to, Case, CheckSpec, Residual, VerifyError};
use crate::word_algebra::{
    apply_generating_map, geometric_series_word, phi, sym_harmonic, words_up_to, AlgebraError, ExactSeries, GenMap,
    Letter, NcPoly, Rationals, SeriesPoly, SeriesRing, Var, VarSet, Word,
};

/// Which sign convention to use in the factorization identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    /// The opposite convention, under which the identities fail.
    Printed,
    /// The sign for which the identities hold.
    Corrected,
}

/// `+y/(1+yT)` (corrected) or `−y/(1+yT)` (printed).
pub fn signed_y_over_one_plus_yt(ring: &ExactSeries, sign: Sign) -> Result<SeriesPoly, AlgebraError> {
    let y = NcPoly::word(ring.clone(), Word::y());
    let p = y.try_mul(&geometric_series_word(ring, Letter::Y, Var::T, -1)?)?;
    Ok(if sign == Sign::Printed { -p } else { p })
}

/// `(yT/(1+yT)) z` with `z = x + y`.
fn yt_over_one_plus_yt_z(ring: &ExactSeries) -> Result<SeriesPoly, AlgebraError> {
    let one = NcPoly::one(ring.clone());
    let frac = one.try_sub(&geometric_series_word(ring, Letter::Y, Var::T, -1)?)?;
    let z = NcPoly::word(ring.clone(), Word::x()).try_add(&NcPoly::word(ring.clone(), Word::y()))?;
    frac.try_mul(&z)
}

/// `σ(w) ∓ φ((yT/(1+yT)) z ∗̃ φ(σ(w)))`: minus when corrected, plus as printed.
pub fn prop31_rhs(w: &SeriesPoly, sign: Sign) -> Result<SeriesPoly, AlgebraError> {
    let ring = w.ring();
    let s = apply_generating_map(GenMap::Sigma, w)?;
    let correction = phi(&sym_harmonic(&yt_over_one_plus_yt_z(ring)?, &phi(&s))?);
    match sign {
        Sign::Corrected => s.try_sub(&correction),
        Sign::Printed => s.try_add(&correction),
    }
}

/// `φ((±y/(1+yT)) ∗̃ φ(σ̃(w)))`.
pub fn lemma32_rhs(w: &SeriesPoly, sign: Sign) -> Result<SeriesPoly, AlgebraError> {
    let ring = w.ring();
    let s = apply_generating_map(GenMap::SigmaTilde, w)?;
    Ok(phi(&sym_harmonic(&signed_y_over_one_plus_yt(ring, sign)?, &phi(&s))?))
}

/// One element of the case space of the exact factorization checks.
#[derive(Clone, Debug)]
pub struct SymbolicCase {
    pub label: String,
    pub poly: SeriesPoly,
}

impl SymbolicCase {
    /// Words of length `≤ max_len` containing `y`, over the `T` ring, and
    /// `1/(1−xA) w_k 1/(1−xB)` for `w_k` of length `≤ max_len − 2` over the
    /// `A, B, T` ring.
    pub fn enumerate(max_len: usize, maxdeg: u32) -> Vec<SymbolicCase> {
        let t_ring = SeriesRing::new(Rationals, VarSet::T, maxdeg);
        let mut out: Vec<SymbolicCase> = words_up_to(max_len)
            .filter(|w| w.contains(Letter::Y))
            .map(|w| SymbolicCase { label: w.to_string(), poly: NcPoly::word(t_ring.clone(), w) })
            .collect();
        let abt = SeriesRing::new(Rationals, VarSet::ABT, maxdeg);
        let gx = |v| geometric_series_word(&abt, Letter::X, v, 1).expect("ring has A and B");
        for k in indices_up_to(max_len.saturating_sub(3) as u32, false) {
            let w = NcPoly::word(abt.clone(), h0(&k));
            let poly = gx(Var::A).try_mul(&w).and_then(|p| p.try_mul(&gx(Var::B))).expect("same ring");
            out.push(SymbolicCase { label: format!("1/(1-xA) w_{k} 1/(1-xB)"), poly });
        }
        out
    }
}

fn compare(lhs: &SeriesPoly, rhs: &SeriesPoly) -> Result<Residual, VerifyError> {
    let diff = lhs.try_sub(rhs)?;
    if diff.is_zero() {
        return Ok(Residual::Exact(None));
    }
    let mut text = diff.to_string();
    if text.len() > 240 {
        let cut = (0..=240).rev().find(|&i| text.is_char_boundary(i)).unwrap_or(0);
        text.truncate(cut);
        text.push_str(" ...");
    }
    Ok(Residual::Exact(Some(format!("{} differing words: {text}", diff.len()))))
}

fn run_cases(
    spec: &CheckSpec,
    f: impl Fn(&SeriesPoly) -> Result<(SeriesPoly, SeriesPoly), AlgebraError> + Sync + Send,
) -> Result<Vec<Case>, VerifyError> {
    let cases = SymbolicCase::enumerate(spec.max_weight as usize, spec.maxdeg);
    super::par_cases(&cases, |c| {
        let (lhs, rhs) = f(&c.poly)?;
        Ok((c.label.clone(), compare(&lhs, &rhs)?))
    })
}

pub(crate) fn prop31_cases(spec: &CheckSpec, sign: Sign) -> Result<Vec<Case>, VerifyError> {
    run_cases(spec, |w| Ok((apply_generating_map(GenMap::Rho, w)?, prop31_rhs(w, sign)?)))
}

pub(crate) fn lemma32_cases(spec: &CheckSpec, sign: Sign) -> Result<Vec<Case>, VerifyError> {
    run_cases(spec, |w| Ok((apply_generating_map(GenMap::RhoTilde, w)?, lemma32_rhs(w, sign)?)))
}

/// `B_0, …, B_n` with `B_1 = −1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(Rational::from(1));
            continue;
        }
        let mut acc = Rational::new();
        for (j, bj) in b.iter().enumerate() {
            acc += Rational::from(Integer::from(m + 1).binomial(j as u32)) * bj;
        }
        b.push(-acc / Rational::from(m as u32 + 1));
    }
    b
}

fn series_exp(log: &[Rational]) -> Vec<Rational> {
    let n = log.len();
    let mut e = vec![Rational::new(); n];
    if n == 0 {
        return e;
    }
    e[0] = Rational::from(1);
    for m in 1..n {
        let mut acc = Rational::new();
        for k in 1..=m {
            acc += Rational::from(&log[k] * &e[m - k]) * k as u32;
        }
        e[m] = acc / m as u32;
    }
    e
}

fn factorial(n: usize) -> Integer {
    Integer::from(Integer::factorial(n as u32))
}

/// Exact form of the product formula behind the `(−2πi)^s/(s+1)!` identity.
///
/// With `v = (πu)²` and the Bernoulli form of `ζ(2m)`,
/// `A(u)A(−u) = exp(Σ_m c_m v^m)` and its reciprocal must equal
/// `sin(πu)/(πu) = Σ (−v)^m/(2m+1)!`. With `t = πiu` the phase identity
/// `e^{−t} sinh(t)/t = (1 − e^{−2t})/(2t)` is compared as well.
/// Returns `None` when everything matches through `u^maxdeg`.
pub fn sin_identity_residual(maxdeg: usize) -> Option<String> {
    let m_max = maxdeg / 2;
    let bern = bernoulli_numbers(2 * m_max);
    let mut log = vec![Rational::new(); m_max + 1];
    for m in 1..=m_max {
        // −c_m, c_m = (−1)^{m+1} B_{2m} 2^{2m} / (2m (2m)!)
        let denom = Integer::from(2 * m) * factorial(2 * m);
        let mut c = &bern[2 * m] * Rational::from((Integer::from(1) << (2 * m as u32), denom)) ;
        if m % 2 == 1 {
            c = -c;
        }
        log[m] = c;
    }
    let lhs = series_exp(&log);
    for m in 0..=m_max {
        let mut rhs = Rational::from((Integer::from(1), factorial(2 * m + 1)));
        if m % 2 == 1 {
            rhs = -rhs;
        }
        if lhs[m] != rhs {
            return Some(format!("coefficient of (pi u)^{}: {} vs {}", 2 * m, lhs[m], rhs));
        }
    }
    // e^{−t} sinh(t)/t: coefficient of t^n is Σ_{j+2i=n} (−1)^j/j! · 1/(2i+1)!.
    for n in 0..=maxdeg {
        let mut lhs = Rational::new();
        for i in 0..=n / 2 {
            let j = n - 2 * i;
            let mut term = Rational::from((Integer::from(1), factorial(j) * factorial(2 * i + 1)));
            if j % 2 == 1 {
                term = -term;
            }
            lhs += term;
        }
        // (1 − e^{−2t})/(2t): coefficient of t^n is (−2)^n/(n+1)!
        let mut rhs = Rational::from((Integer::from(1) << (n as u32), factorial(n + 1)));
        if n % 2 == 1 {
            rhs = -rhs;
        }
        if lhs != rhs {
            return Some(format!("coefficient of (pi i u)^{n}: {lhs} vs {rhs}"));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers(8);
        let expect = [(1, 1), (-1, 2), (1, 6), (0, 1), (-1, 30), (0, 1), (1, 42), (0, 1), (-1, 30)];
        for (got, (n, d)) in b.iter().zip(expect) {
            assert_eq!(*got, Rational::from((n, d)));
        }
    }

    #[test]
    fn product_formula_exact() {
        assert_eq!(sin_identity_residual(12), None);
    }

    #[test]
    fn corrected_signs_hold_and_printed_signs_fail_on_y() {
        let ring = SeriesRing::new(Rationals, VarSet::T, 3);
        let w = NcPoly::word(ring.clone(), Word::y());
        let rho = apply_generating_map(GenMap::Rho, &w).unwrap();
        assert_eq!(prop31_rhs(&w, Sign::Corrected).unwrap(), rho);
        assert_ne!(prop31_rhs(&w, Sign::Printed).unwrap(), rho);
        let rho_t = apply_generating_map(GenMap::RhoTilde, &w).unwrap();
        assert_eq!(lemma32_rhs(&w, Sign::Corrected).unwrap(), rho_t);
        assert_ne!(lemma32_rhs(&w, Sign::Printed).unwrap(), rho_t);
    }
}
