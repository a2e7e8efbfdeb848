use std::fmt;

use rug::{Float, Integer, Rational};

use super::harmonic_reg::harmonic_decompose;
use super::shuffle_reg::zsh_poly;
use crate::numerics::{eval_admissible, single_zeta, zeta_index, BigComplex, NumContext, NumericsError};
use crate::word_algebra::{weak_compositions, Index, Word};

/// Polynomial in `T` with big-complex coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct NumTPoly {
    coeffs: Vec<BigComplex>,
}

impl NumTPoly {
    pub fn new(mut coeffs: Vec<BigComplex>) -> NumTPoly {
        while coeffs.last().is_some_and(BigComplex::is_zero) {
            coeffs.pop();
        }
        NumTPoly { coeffs }
    }

    pub fn zero() -> NumTPoly {
        NumTPoly { coeffs: Vec::new() }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigComplex] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize, prec: u32) -> BigComplex {
        self.coeffs.get(j).cloned().unwrap_or_else(|| BigComplex::zero(prec))
    }

    /// Horner evaluation at `t`.
    pub fn eval(&self, t: &BigComplex) -> BigComplex {
        let mut acc = BigComplex::zero(t.prec());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + c;
        }
        acc
    }

    pub fn max_abs_diff(&self, other: &NumTPoly, prec: u32) -> Float {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut worst = Float::new(prec);
        for j in 0..n {
            let d = self.coeff(j, prec).dist(&other.coeff(j, prec));
            if d > worst {
                worst = d;
            }
        }
        worst
    }
}

impl fmt::Display for NumTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(" + ")?;
            }
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*T")?,
                _ => write!(f, "({c})*T^{j}")?,
            }
        }
        Ok(())
    }
}

/// `ζ^ш(w; T)` evaluated coefficientwise.
pub fn zsh_poly_numeric(w: &Word, ctx: &NumContext) -> Result<NumTPoly, NumericsError> {
    let p = zsh_poly(w);
    let mut out = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        let mut acc = Float::new(ctx.prec());
        for (u, q) in c.terms() {
            acc += eval_admissible(u, ctx)? * q;
        }
        out.push(BigComplex::from_real(acc));
    }
    Ok(NumTPoly::new(out))
}

/// `ζ*(k; T)` evaluated coefficientwise.
pub fn harmonic_poly_numeric(k: &Index, ctx: &NumContext) -> Result<NumTPoly, NumericsError> {
    let p = harmonic_decompose(k);
    let mut out = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        let mut acc = Float::new(ctx.prec());
        for (idx, q) in c.terms() {
            acc += zeta_index(idx, ctx)? * q;
        }
        out.push(BigComplex::from_real(acc));
    }
    Ok(NumTPoly::new(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IkzDirection {
    /// Harmonic to shuffle regularization.
    Forward,
    /// Shuffle to harmonic regularization.
    Inverse,
}

/// Taylor coefficients of `A(u)` (forward) or `1/A(u)` (inverse) up to `u^n`.
pub fn ikz_coefficients(n: usize, dir: IkzDirection, ctx: &NumContext) -> Result<Vec<Float>, NumericsError> {
    {
        let memo = ctx.memo.ikz.read().unwrap();
        if let Some((fwd, inv)) = memo.as_ref() {
            if fwd.len() > n {
                let v = if dir == IkzDirection::Forward { fwd } else { inv };
                return Ok(v[..=n].to_vec());
            }
        }
    }
    let len = (n + 1).max(16);
    let bits = ctx.prec();
    // log A(u) = Σ_{m≥2} L_m u^m.
    let mut log = vec![Float::new(bits); len];
    for (m, l) in log.iter_mut().enumerate().skip(2) {
        let z = single_zeta(m as u32, ctx)?;
        *l = z / m as u32;
        if m % 2 == 1 {
            *l = -Float::with_val(bits, &*l);
        }
    }
    let exp = |sign: i32| {
        // n E_n = Σ_{k=1}^{n} k L_k E_{n−k}
        let mut e = vec![Float::new(bits); len];
        e[0] = Float::with_val(bits, 1);
        for m in 1..len {
            let mut acc = Float::new(bits);
            for k in 1..=m {
                acc += Float::with_val(bits, &log[k] * &e[m - k]) * k as u32;
            }
            if sign < 0 {
                acc = -acc;
            }
            e[m] = acc / m as u32;
        }
        e
    };
    let fwd = exp(1);
    let inv = exp(-1);
    let v = if dir == IkzDirection::Forward { fwd[..=n].to_vec() } else { inv[..=n].to_vec() };
    *ctx.memo.ikz.write().unwrap() = Some((fwd, inv));
    Ok(v)
}

/// The comparison map `ρ(T^n/n!) = Σ_{m+l=n} A_m T^l/l!`, or its inverse.
pub fn ikz_rho(p: &NumTPoly, dir: IkzDirection, ctx: &NumContext) -> Result<NumTPoly, NumericsError> {
    let Some(deg) = p.degree() else { return Ok(NumTPoly::zero()) };
    let a = ikz_coefficients(deg, dir, ctx)?;
    let bits = ctx.prec();
    let mut out = vec![BigComplex::zero(bits); deg + 1];
    for (n, c) in p.coeffs().iter().enumerate() {
        let nf = Integer::from(Integer::factorial(n as u32));
        for (l, slot) in out.iter_mut().enumerate().take(n + 1) {
            let lf = Integer::from(Integer::factorial(l as u32));
            let ratio = Rational::from((nf.clone(), lf));
            let s = Float::with_val(bits, &a[n - l] * &ratio);
            *slot = &*slot + &c.scale_real(&s);
        }
    }
    Ok(NumTPoly::new(out))
}

/// `ζ*(k; T0)`.
pub fn zeta_star_at(k: &Index, t0: &BigComplex, ctx: &NumContext) -> Result<BigComplex, NumericsError> {
    Ok(harmonic_poly_numeric(k, ctx)?.eval(t0))
}

/// `ζ_a^*(k; T0) = (−1)^a Σ_{a_1+⋯+a_r=a} ζ*(k + a; T0) Π binom(k_j−1+a_j, a_j)`.
pub fn zeta_shift_star(k: &Index, a: u32, t0: &BigComplex, ctx: &NumContext) -> Result<BigComplex, NumericsError> {
    let bits = ctx.prec();
    let mut acc = BigComplex::zero(bits);
    for shift in weak_compositions(a, k.depth()) {
        let mut weight = Integer::from(1);
        for (kj, aj) in k.parts().iter().zip(&shift) {
            weight *= Integer::from(kj - 1 + aj).binomial(*aj);
        }
        let v = zeta_star_at(&k.shifted(&shift), t0, ctx)?;
        acc = &acc + &v.scale_rational(&Rational::from(weight));
    }
    Ok(if a % 2 == 1 { -acc } else { acc })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> NumContext {
        NumContext::new(40).unwrap()
    }

    fn real(ctx: &NumContext, v: &Float) -> BigComplex {
        BigComplex::from_real(Float::with_val(ctx.prec(), v))
    }

    #[test]
    fn ikz_examples() {
        let ctx = ctx();
        let bits = ctx.prec();
        let one = NumTPoly::new(vec![BigComplex::one(bits)]);
        assert_eq!(ikz_rho(&one, IkzDirection::Forward, &ctx).unwrap(), one);
        let t = NumTPoly::new(vec![BigComplex::zero(bits), BigComplex::one(bits)]);
        assert!(ikz_rho(&t, IkzDirection::Forward, &ctx).unwrap().max_abs_diff(&t, bits) < 1e-45);
        let half = BigComplex::from_rational(bits, &Rational::from((1, 2)));
        let t2 = NumTPoly::new(vec![BigComplex::zero(bits), BigComplex::zero(bits), half.clone()]);
        let z2 = single_zeta(2, &ctx).unwrap();
        let expected = NumTPoly::new(vec![real(&ctx, &Float::with_val(bits, &z2 / 2u32)), BigComplex::zero(bits), half]);
        assert!(ikz_rho(&t2, IkzDirection::Forward, &ctx).unwrap().max_abs_diff(&expected, bits) < 1e-45);
    }

    #[test]
    fn forward_inverts_inverse() {
        let ctx = ctx();
        let bits = ctx.prec();
        let p = NumTPoly::new((0..7).map(|j| BigComplex::from_rational(bits, &Rational::from((j as i64 * 3 - 5, j as i64 + 1)))).collect());
        let back = ikz_rho(&ikz_rho(&p, IkzDirection::Inverse, &ctx).unwrap(), IkzDirection::Forward, &ctx).unwrap();
        assert!(back.max_abs_diff(&p, bits) < 1e-45);
    }

    #[test]
    fn shift_examples() {
        let ctx = ctx();
        let bits = ctx.prec();
        let t0 = BigComplex::pi_i_times(bits, &Rational::from((-1, 2)));
        let k2: Index = "(2)".parse().unwrap();
        let z3 = single_zeta(3, &ctx).unwrap();
        let v = zeta_shift_star(&k2, 1, &t0, &ctx).unwrap();
        assert!(v.dist(&real(&ctx, &Float::with_val(bits, &z3 * -2i32))) < 1e-45);
        let e = Index::empty();
        assert_eq!(zeta_shift_star(&e, 0, &t0, &ctx).unwrap(), BigComplex::one(bits));
        assert!(zeta_shift_star(&e, 2, &t0, &ctx).unwrap().is_zero());
        let k1: Index = "(1)".parse().unwrap();
        assert!(zeta_shift_star(&k1, 0, &t0, &ctx).unwrap().dist(&t0) < 1e-45);
    }

    #[test]
    fn regularization_example() {
        // ζ*(1,1;T) = T²/2 − ζ(2)/2 and ρ of it is T²/2 = ζ^ш(1,1;T).
        let ctx = ctx();
        let bits = ctx.prec();
        let k: Index = "(1,1)".parse().unwrap();
        let star = harmonic_poly_numeric(&k, &ctx).unwrap();
        let z2 = single_zeta(2, &ctx).unwrap();
        assert!(star.coeff(0, bits).dist(&real(&ctx, &Float::with_val(bits, &z2 / -2i32))) < 1e-45);
        let sh = zsh_poly_numeric(&"yy".parse().unwrap(), &ctx).unwrap();
        assert!(ikz_rho(&star, IkzDirection::Forward, &ctx).unwrap().max_abs_diff(&sh, bits) < 1e-45);
    }
}
