use rug::{Float, Rational};

use super::complex::BigComplex;
use super::context::NumContext;
use super::polylog::eval_admissible;
use super::series::{MultiSeries, NumSeries};
use super::NumericsError;
use crate::word_algebra::{Letter, Monomial, Var, Word};

/// `ζ(n)` for `n ≥ 2`.
pub fn single_zeta(n: u32, ctx: &NumContext) -> Result<Float, NumericsError> {
    assert!(n >= 2, "ζ(1) diverges");
    eval_admissible(&Word::y().concat(&Word::power(Letter::X, n as usize - 1)), ctx)
}

/// `Γ(1 + αA + βB + γT)^{exponent}`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaFactor {
    pub exponent: i32,
    pub form: [Rational; 3],
}

impl GammaFactor {
    pub fn new(exponent: i32, a: i64, b: i64, t: i64) -> GammaFactor {
        assert!(exponent == 1 || exponent == -1, "exponent must be ±1");
        GammaFactor { exponent, form: [Rational::from(a), Rational::from(b), Rational::from(t)] }
    }
}

/// `Π Γ(1 + ℓ_i)^{±1}` expanded through
/// `log Γ(1+z) = −γz + Σ_{n≥2} (−1)^n ζ(n) z^n / n`.
///
/// The Euler constant must cancel across the factors.
pub fn gamma_ratio_series(factors: &[GammaFactor], ring: &NumSeries, ctx: &NumContext) -> Result<MultiSeries, NumericsError> {
    let mut linear = [Rational::new(), Rational::new(), Rational::new()];
    for f in factors {
        for (acc, q) in linear.iter_mut().zip(&f.form) {
            *acc += Rational::from(q * f.exponent);
        }
    }
    if linear.iter().any(|q| *q != 0) {
        return Err(NumericsError::GammaConstantResidue(format!(
            "{}*A + {}*B + {}*T",
            linear[0], linear[1], linear[2]
        )));
    }
    let prec = ring.base().prec;
    let mut log = MultiSeries::zero(ring);
    for f in factors {
        let ell = MultiSeries::affine(ring, [&f.form[0], &f.form[1], &f.form[2]])?;
        let mut power = ell.clone();
        for n in 2..=ring.maxdeg() {
            power = power.mul(&ell)?;
            let sign = if n % 2 == 0 { 1 } else { -1 } * f.exponent;
            let c = single_zeta(n, ctx)? * Rational::from((sign, n));
            log = log.add(&power.scale(&BigComplex::from_real(Float::with_val(prec, c))))?;
        }
    }
    log.exp()
}

/// Elementary exponential factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpFactor {
    /// `(1 − e^{−2πiT}) / (2πiT) = Σ (−2πi)^j T^j / (j+1)!`.
    EulerMinus,
    /// `(e^{2πiT} − 1) / (2πiT) = Σ (2πi)^j T^j / (j+1)!`.
    EulerPlus,
    /// `e^{−πi(A+B)}`.
    PhaseAB,
}

pub fn exp_factor_series(kind: ExpFactor, ring: &NumSeries, ctx: &NumContext) -> Result<MultiSeries, NumericsError> {
    let prec = ring.base().prec;
    let need = |v: Var| {
        if ring.vars().contains(v) {
            Ok(())
        } else {
            Err(NumericsError::VariableMismatch(format!("variable {} not in {:?}", v.name(), ring.vars())))
        }
    };
    let two_pi_i = BigComplex::new(Float::new(prec), Float::with_val(prec, ctx.pi()) * 2u32);
    match kind {
        ExpFactor::EulerMinus | ExpFactor::EulerPlus => {
            need(Var::T)?;
            let base = if kind == ExpFactor::EulerMinus { -&two_pi_i } else { two_pi_i };
            let mut out = MultiSeries::zero(ring);
            let mut power = BigComplex::one(prec);
            let mut fact = Rational::from(1);
            for j in 0..=ring.maxdeg() {
                fact *= j + 1;
                let c = power.scale_rational(&Rational::from(fact.recip_ref()));
                out = out.add(&MultiSeries::term(ring, Monomial::var(Var::T, j as u16), c))?;
                power = &power * &base;
            }
            Ok(out)
        }
        ExpFactor::PhaseAB => {
            need(Var::A)?;
            need(Var::B)?;
            let minus_pi_i = BigComplex::new(Float::new(prec), -ctx.pi());
            let one = Rational::from(1);
            let zero = Rational::new();
            let a_plus_b = MultiSeries::affine(ring, [&one, &one, &zero])?;
            a_plus_b.scale(&minus_pi_i).exp()
        }
    }
}
