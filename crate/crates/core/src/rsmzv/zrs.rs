use rug::{Float, Integer, Rational};

use crate::numerics::{zsh_numeric, zsh_word, BigComplex, CacheKind, NumContext, NumericsError};
use crate::word_algebra::{index_to_word, shuffle, Index, Letter, RatPoly, Rationals, Word};

/// A value of `Z_RS` together with the number of `(p, q)` terms summed.
#[derive(Clone, PartialEq, Debug)]
pub struct RsValue {
    pub value: BigComplex,
    pub terms: usize,
}

fn minus_two_pi_i(ctx: &NumContext) -> BigComplex {
    BigComplex::pi_i_times(ctx.prec(), &Rational::from(-2))
}

fn inv_factorial(n: usize) -> Rational {
    Rational::from((Integer::from(1), Integer::from(Integer::factorial(n as u32))))
}

/// `Y(y^n) = (−2πi)^n / n!`, and `Y` vanishes on words containing `x`.
pub fn y_map(w: &Word, ctx: &NumContext) -> BigComplex {
    if w.contains(Letter::X) {
        return BigComplex::zero(ctx.prec());
    }
    minus_two_pi_i(ctx).pow(w.len() as u32).scale_rational(&inv_factorial(w.len()))
}

/// Length of the run of `y`s starting at position `p`.
fn y_run(w: &Word, p: usize) -> usize {
    (p..w.len()).take_while(|&i| w.get(i) == Some(Letter::Y)).count()
}

/// `Z_RS(w) = −(1/2πi) Σ_{p<q} (−1)^{k−q} Z^ш(u_1⋯u_p) Y(u_{p+1}⋯u_q) Z^ш(u_k⋯u_{q+1})`.
///
/// The `p = q` terms of the defining sum cancel by the antipode identity
/// whenever `w` is nonempty; `Z_RS(∅) = 1/(−2πi)`.
pub fn zrs_word_value(w: &Word, ctx: &NumContext) -> Result<RsValue, NumericsError> {
    let bits = ctx.prec();
    let m2pi = minus_two_pi_i(ctx);
    let k = w.len();
    if k == 0 {
        return Ok(RsValue { value: m2pi.reciprocal(), terms: 1 });
    }
    let mut acc = BigComplex::zero(bits);
    let mut terms = 0;
    for p in 0..k {
        let run = y_run(w, p);
        if run == 0 {
            continue;
        }
        let left = zsh_word(&w.prefix(p), ctx)?;
        if left.is_zero() {
            terms += run;
            continue;
        }
        for q in p + 1..=p + run {
            terms += 1;
            let right = zsh_word(&w.suffix_from(q).reversed(), ctx)?;
            let prod = Float::with_val(bits, &left * &right);
            // −(1/2πi)·Y(y^s) = (−2πi)^{s−1}/s!
            let s = q - p;
            let mut c = m2pi.pow(s as u32 - 1).scale_rational(&inv_factorial(s)).scale_real(&prod);
            if (k - q) % 2 == 1 {
                c = -c;
            }
            acc = &acc + &c;
        }
    }
    Ok(RsValue { value: acc, terms })
}

/// `Z_RS` of a single word, memoized per context.
pub fn zrs_word(w: &Word, ctx: &NumContext) -> Result<BigComplex, NumericsError> {
    if let Some(v) = ctx.memo.zrs.read().unwrap().get(w) {
        return Ok(v.clone());
    }
    let v = zrs_word_value(w, ctx)?.value;
    ctx.memo.zrs.write().unwrap().insert(*w, v.clone());
    Ok(v)
}

/// The defining double sum over `0 ≤ p ≤ q ≤ k`, including the `p = q`
/// terms with their factor `(−2πi)^{−1}`.
pub fn zrs_word_defn(w: &Word, ctx: &NumContext) -> Result<BigComplex, NumericsError> {
    let bits = ctx.prec();
    let m2pi = minus_two_pi_i(ctx);
    let inv = m2pi.reciprocal();
    let k = w.len();
    let mut acc = BigComplex::zero(bits);
    for p in 0..=k {
        let left = zsh_word(&w.prefix(p), ctx)?;
        for q in p..=p + y_run(w, p) {
            let right = zsh_word(&w.suffix_from(q).reversed(), ctx)?;
            let prod = Float::with_val(bits, &left * &right);
            let s = q - p;
            let power = if s == 0 { inv.clone() } else { m2pi.pow(s as u32 - 1) };
            let mut c = power.scale_rational(&inv_factorial(s)).scale_real(&prod);
            if (k - q) % 2 == 1 {
                c = -c;
            }
            acc = &acc + &c;
        }
    }
    Ok(acc)
}

/// Exact inner sums `Q_s = Σ_{q−p=s} (−1)^{k−q} (u_1⋯u_p) ш (u_k⋯u_{q+1})`
/// over `y`-runs, so that `Z_RS(w) = Σ_s (−2πi)^{s−1}/s! · Z^ш(Q_s)`.
///
/// `Q_0` is the antipode sum and vanishes for nonempty `w`.
pub fn zrs_symbolic(w: &Word) -> Vec<RatPoly> {
    let k = w.len();
    let mut q_s = vec![RatPoly::zero(Rationals); k + 1];
    for p in 0..=k {
        let left = RatPoly::rational(w.prefix(p));
        for q in p..=p + y_run(w, p) {
            let right = RatPoly::rational(w.suffix_from(q).reversed());
            let mut term = shuffle(&left, &right).expect("same ring");
            if (k - q) % 2 == 1 {
                term = -term;
            }
            q_s[q - p] = &q_s[q - p] + &term;
        }
    }
    while q_s.len() > 1 && q_s.last().is_some_and(RatPoly::is_zero) {
        q_s.pop();
    }
    q_s
}

/// `Z_RS` extended linearly to rational word polynomials.
pub fn zrs_poly(p: &RatPoly, ctx: &NumContext) -> Result<BigComplex, NumericsError> {
    let mut acc = BigComplex::zero(ctx.prec());
    for (w, c) in p.terms() {
        acc = &acc + &zrs_word(w, ctx)?.scale_rational(c);
    }
    Ok(acc)
}

/// `ζ_RS(k) = Σ_{p≤q, k_{p+1}=⋯=k_q=1} (−2πi)^{q−p}/(q−p+1)! (−1)^{k_{q+1}+⋯+k_r}
/// ζ^ш(k_1,…,k_p) ζ^ш(k_r,…,k_{q+1})`.
pub fn zrs_index(k: &Index, ctx: &NumContext) -> Result<BigComplex, NumericsError> {
    if let Some(v) = ctx.cache().get(CacheKind::Zrs, k, ctx.digits(), ctx.guard(), ctx.prec()) {
        return Ok(v);
    }
    let bits = ctx.prec();
    let m2pi = minus_two_pi_i(ctx);
    let parts = k.parts();
    let r = parts.len();
    let mut acc = BigComplex::zero(bits);
    for p in 0..=r {
        let left = zsh_word(&index_to_word(&k.prefix(p)), ctx)?;
        let ones = parts[p..].iter().take_while(|&&c| c == 1).count();
        for q in p..=p + ones {
            let tail = k.suffix_from(q);
            let right = zsh_word(&index_to_word(&tail.reversed()), ctx)?;
            let prod = Float::with_val(bits, &left * &right);
            let s = q - p;
            let mut c = m2pi.pow(s as u32).scale_rational(&inv_factorial(s + 1)).scale_real(&prod);
            if tail.weight() % 2 == 1 {
                c = -c;
            }
            acc = &acc + &c;
        }
    }
    ctx.cache().put(CacheKind::Zrs, k, ctx.digits(), ctx.guard(), &acc);
    Ok(acc)
}

/// Evaluate `Σ_s (−2πi)^{s−1}/s! · Z^ш(Q_s)` from the exact inner sums.
pub fn zrs_from_symbolic(q_s: &[RatPoly], ctx: &NumContext) -> Result<BigComplex, NumericsError> {
    let bits = ctx.prec();
    let m2pi = minus_two_pi_i(ctx);
    let mut acc = BigComplex::zero(bits);
    for (s, q) in q_s.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let v = zsh_numeric(q, ctx)?;
        let power = if s == 0 { m2pi.reciprocal() } else { m2pi.pow(s as u32 - 1) };
        acc = &acc + &power.scale_rational(&inv_factorial(s)).scale_real(&v);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::single_zeta;
    use crate::word_algebra::words_up_to;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn y_map_examples() {
        let ctx = NumContext::new(30).unwrap();
        let pi = ctx.pi();
        assert!(y_map(&w("y"), &ctx).dist(&BigComplex::new(Float::new(ctx.prec()), Float::with_val(ctx.prec(), &pi * -2i32))) < 1e-35);
        assert!(y_map(&w("yxy"), &ctx).is_zero());
        let pi2 = Float::with_val(ctx.prec(), pi.square_ref()) * -2i32;
        assert!(y_map(&w("yy"), &ctx).dist(&BigComplex::from_real(pi2)) < 1e-35);
    }

    #[test]
    fn word_examples() {
        let ctx = NumContext::new(30).unwrap();
        let bits = ctx.prec();
        assert!(zrs_word(&w("x"), &ctx).unwrap().abs() < 1e-35);
        assert!(zrs_word(&w("y"), &ctx).unwrap().dist(&BigComplex::one(bits)) < 1e-35);
        let minus_pi_i = BigComplex::pi_i_times(bits, &Rational::from(-1));
        assert!(zrs_word(&w("yy"), &ctx).unwrap().dist(&minus_pi_i) < 1e-35);
    }

    #[test]
    fn index_examples() {
        let ctx = NumContext::new(30).unwrap();
        let bits = ctx.prec();
        assert_eq!(zrs_index(&Index::empty(), &ctx).unwrap(), BigComplex::one(bits));
        let minus_pi_i = BigComplex::pi_i_times(bits, &Rational::from(-1));
        assert!(zrs_index(&"(1)".parse().unwrap(), &ctx).unwrap().dist(&minus_pi_i) < 1e-35);
        let two_z2 = BigComplex::from_real(single_zeta(2, &ctx).unwrap() * 2u32);
        assert!(zrs_index(&"(2)".parse().unwrap(), &ctx).unwrap().dist(&two_z2) < 1e-35);
    }

    #[test]
    fn antipode_part_vanishes_and_forms_agree() {
        let ctx = NumContext::new(30).unwrap();
        for u in words_up_to(5) {
            let q = zrs_symbolic(&u);
            if !u.is_empty() {
                assert!(q[0].is_zero(), "{u}: {}", q[0]);
            }
            let a = zrs_word(&u, &ctx).unwrap();
            assert!(a.dist(&zrs_word_defn(&u, &ctx).unwrap()) < 1e-35, "{u}");
            assert!(a.dist(&zrs_from_symbolic(&q, &ctx).unwrap()) < 1e-35, "{u}");
        }
    }
}
