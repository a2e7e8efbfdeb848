use rug::Float;

use super::cache::CacheKind;
use super::complex::BigComplex;
use super::context::NumContext;
use super::NumericsError;
use crate::regularization::zsh_symbolic;
use crate::word_algebra::{index_to_word, word_to_index, Index, Letter, RatPoly, Word};

/// Values `Li_{w[..p]}(1/2)` for `p = 0, …, len(w)`.
///
/// The letters act left to right as `y ↦ ∫ dt/(1−t)` and `x ↦ ∫ dt/t`
/// on power series at 0, so every prefix comes for free.
pub fn li_half_prefixes(w: &Word, ctx: &NumContext) -> Result<Vec<Float>, NumericsError> {
    if w.first() == Some(Letter::X) {
        return Err(NumericsError::DivergentAtZero(*w));
    }
    let bits = ctx.prec();
    let n = ctx.li_terms(w.len());
    let mut g = vec![Float::new(bits); n + 1];
    g[0] = Float::with_val(bits, 1);
    let mut out = Vec::with_capacity(w.len() + 1);
    out.push(Float::with_val(bits, 1));
    for l in w.letters() {
        match l {
            Letter::Y => {
                let mut next = vec![Float::new(bits); n + 1];
                let mut s = Float::new(bits);
                for m in 0..n {
                    s += &g[m];
                    next[m + 1] = Float::with_val(bits, &s / (m as u32 + 1));
                }
                g = next;
            }
            Letter::X => {
                for (m, c) in g.iter_mut().enumerate().skip(1) {
                    *c /= m as u32;
                }
            }
        }
        out.push(at_half(&g));
    }
    Ok(out)
}

fn at_half(g: &[Float]) -> Float {
    let mut acc = Float::new(g[0].prec());
    for c in g.iter().rev() {
        acc /= 2u32;
        acc += c;
    }
    acc
}

/// The iterated integral of `w` from 0 to 1/2.
pub fn eval_li_half(w: &Word, ctx: &NumContext) -> Result<Float, NumericsError> {
    Ok(li_half_prefixes(w, ctx)?.pop().expect("at least the empty prefix"))
}

/// `ζ` of an admissible word, by splitting the path at 1/2:
/// `ζ(w) = Σ_{w=uv} Li_u(1/2) · Li_{τ(v)}(1/2)`.
pub fn eval_admissible(w: &Word, ctx: &NumContext) -> Result<Float, NumericsError> {
    if w.is_empty() {
        return Ok(Float::with_val(ctx.prec(), 1));
    }
    if !w.is_admissible() {
        return Err(NumericsError::NotAdmissible(*w));
    }
    if let Some(v) = ctx.memo.zeta.read().unwrap().get(w) {
        return Ok(v.clone());
    }
    let k = word_to_index(w)?;
    let v = match ctx.cache().get(CacheKind::Zeta, &k, ctx.digits(), ctx.guard(), ctx.prec()) {
        Some(c) => c.re,
        None => {
            let v = holder(w, ctx)?;
            ctx.cache().put(CacheKind::Zeta, &k, ctx.digits(), ctx.guard(), &BigComplex::from_real(v.clone()));
            v
        }
    };
    ctx.memo.zeta.write().unwrap().insert(*w, v.clone());
    Ok(v)
}

fn holder(w: &Word, ctx: &NumContext) -> Result<Float, NumericsError> {
    let k = w.len();
    let left = li_half_prefixes(w, ctx)?;
    let right = li_half_prefixes(&w.reversed().swapped(), ctx)?;
    let mut acc = Float::new(ctx.prec());
    for p in 0..=k {
        acc += Float::with_val(ctx.prec(), &left[p] * &right[k - p]);
    }
    Ok(acc)
}

/// `ζ(k)` for an admissible index.
pub fn zeta_index(k: &Index, ctx: &NumContext) -> Result<Float, NumericsError> {
    if !k.is_admissible() {
        return Err(NumericsError::Algebra(crate::word_algebra::AlgebraError::NotAdmissible(k.clone())));
    }
    eval_admissible(&index_to_word(k), ctx)
}

/// `Z^ш(w)` for a single word.
pub fn zsh_word(w: &Word, ctx: &NumContext) -> Result<Float, NumericsError> {
    if w.is_admissible() {
        return eval_admissible(w, ctx);
    }
    if let Some(v) = ctx.memo.zsh.read().unwrap().get(w) {
        return Ok(v.clone());
    }
    let mut acc = Float::new(ctx.prec());
    for (u, c) in zsh_symbolic(&RatPoly::rational(*w)).terms() {
        acc += eval_admissible(u, ctx)? * c;
    }
    ctx.memo.zsh.write().unwrap().insert(*w, acc.clone());
    Ok(acc)
}

/// `Z^ш` extended linearly to rational word polynomials.
pub fn zsh_numeric(p: &RatPoly, ctx: &NumContext) -> Result<Float, NumericsError> {
    let mut acc = Float::new(ctx.prec());
    for (w, c) in p.terms() {
        acc += zsh_word(w, ctx)? * c;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::float::Constant;
    use rug::ops::Pow;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn li_half_spot_values() {
        let ctx = NumContext::new(40).unwrap();
        let ln2 = ctx.log2();
        assert_eq!(eval_li_half(&Word::empty(), &ctx).unwrap(), 1);
        assert!(Float::with_val(ctx.prec(), eval_li_half(&w("y"), &ctx).unwrap() - &ln2).abs() < 1e-45);
        // Li_2(1/2) = π²/12 − (ln 2)²/2
        let pi = Float::with_val(ctx.prec(), Constant::Pi);
        let expected = Float::with_val(ctx.prec(), pi.square_ref()) / 12u32 - Float::with_val(ctx.prec(), ln2.square_ref()) / 2u32;
        assert!(Float::with_val(ctx.prec(), eval_li_half(&w("yx"), &ctx).unwrap() - expected).abs() < 1e-45);
        assert!(matches!(eval_li_half(&w("xy"), &ctx), Err(NumericsError::DivergentAtZero(_))));
    }

    #[test]
    fn zeta_two_and_three() {
        let ctx = NumContext::new(50).unwrap();
        let pi = Float::with_val(ctx.prec(), Constant::Pi);
        let z2 = eval_admissible(&w("yx"), &ctx).unwrap();
        let pi2_6 = Float::with_val(ctx.prec(), pi.square_ref()) / 6u32;
        assert!(Float::with_val(ctx.prec(), &z2 - &pi2_6).abs() < Float::with_val(ctx.prec(), 10).pow(-55));
        let z12 = eval_admissible(&w("yyx"), &ctx).unwrap();
        let z3 = eval_admissible(&w("yxx"), &ctx).unwrap();
        assert!(Float::with_val(ctx.prec(), &z12 - &z3).abs() < Float::with_val(ctx.prec(), 10).pow(-55));
        assert!(matches!(eval_admissible(&w("yxy"), &ctx), Err(NumericsError::NotAdmissible(_))));
    }

    #[test]
    fn zsh_examples() {
        let ctx = NumContext::new(30).unwrap();
        assert_eq!(zsh_word(&w("x"), &ctx).unwrap(), 0);
        assert_eq!(zsh_word(&w("y"), &ctx).unwrap(), 0);
        let lhs = zsh_word(&w("yxy"), &ctx).unwrap();
        let rhs = eval_admissible(&w("yyx"), &ctx).unwrap() * -2i32;
        assert!(Float::with_val(ctx.prec(), lhs - rhs).abs() < 1e-35);
    }
}
