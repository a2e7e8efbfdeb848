use std::fmt;

use rug::{Float, Rational};

use super::complex::{BigComplex, ComplexField};
use super::NumericsError;
use crate::word_algebra::{CoeffRing, ElemDisplay, Monomial, Series, SeriesRing, Var, VarSet};

/// Truncated series with big-complex coefficients.
pub type NumSeries = SeriesRing<ComplexField>;

/// A numeric series in a subset of `{A, B, T}`, truncated at a total degree.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiSeries {
    ring: NumSeries,
    coeffs: Series<BigComplex>,
}

impl MultiSeries {
    pub fn zero(ring: &NumSeries) -> MultiSeries {
        MultiSeries { ring: ring.clone(), coeffs: Series::default() }
    }

    pub fn one(ring: &NumSeries) -> MultiSeries {
        MultiSeries::constant(ring, ring.base().one())
    }

    pub fn constant(ring: &NumSeries, c: BigComplex) -> MultiSeries {
        MultiSeries { ring: ring.clone(), coeffs: ring.constant(c) }
    }

    pub fn from_series(ring: &NumSeries, coeffs: Series<BigComplex>) -> MultiSeries {
        MultiSeries { ring: ring.clone(), coeffs: ring.truncate(&coeffs, ring.maxdeg()) }
    }

    pub fn term(ring: &NumSeries, m: Monomial, c: BigComplex) -> MultiSeries {
        MultiSeries { ring: ring.clone(), coeffs: ring.term(m, c) }
    }

    /// `α A + β B + γ T` with rational coefficients.
    pub fn affine(ring: &NumSeries, form: [&Rational; 3]) -> Result<MultiSeries, NumericsError> {
        let prec = ring.base().prec;
        let mut out = MultiSeries::zero(ring);
        for (v, q) in Var::ALL.into_iter().zip(form) {
            if *q == 0 {
                continue;
            }
            if !ring.vars().contains(v) {
                return Err(NumericsError::VariableMismatch(format!("variable {} not in {:?}", v.name(), ring.vars())));
            }
            let t = MultiSeries::term(ring, Monomial::var(v, 1), BigComplex::from_rational(prec, q));
            out = out.add(&t)?;
        }
        Ok(out)
    }

    pub fn ring(&self) -> &NumSeries {
        &self.ring
    }

    pub fn vars(&self) -> VarSet {
        self.ring.vars()
    }

    pub fn maxdeg(&self) -> u32 {
        self.ring.maxdeg()
    }

    pub fn series(&self) -> &Series<BigComplex> {
        &self.coeffs
    }

    pub fn coeff(&self, m: &Monomial) -> BigComplex {
        self.ring.coeff(&self.coeffs, m)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigComplex)> {
        self.coeffs.terms()
    }

    fn check(&self, other: &MultiSeries) -> Result<(), NumericsError> {
        if self.ring != other.ring {
            return Err(NumericsError::VariableMismatch(format!(
                "{:?} (deg {}) vs {:?} (deg {})",
                self.vars(),
                self.maxdeg(),
                other.vars(),
                other.maxdeg()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiSeries) -> Result<MultiSeries, NumericsError> {
        self.check(other)?;
        Ok(MultiSeries { ring: self.ring.clone(), coeffs: self.ring.add(&self.coeffs, &other.coeffs) })
    }

    pub fn sub(&self, other: &MultiSeries) -> Result<MultiSeries, NumericsError> {
        self.check(other)?;
        Ok(MultiSeries { ring: self.ring.clone(), coeffs: self.ring.sub(&self.coeffs, &other.coeffs) })
    }

    pub fn mul(&self, other: &MultiSeries) -> Result<MultiSeries, NumericsError> {
        self.check(other)?;
        Ok(MultiSeries { ring: self.ring.clone(), coeffs: self.ring.mul(&self.coeffs, &other.coeffs) })
    }

    pub fn scale(&self, c: &BigComplex) -> MultiSeries {
        let s = self.ring.mul(&self.ring.constant(c.clone()), &self.coeffs);
        MultiSeries { ring: self.ring.clone(), coeffs: s }
    }

    pub fn neg(&self) -> MultiSeries {
        MultiSeries { ring: self.ring.clone(), coeffs: self.ring.neg(&self.coeffs) }
    }

    /// Complex conjugate of every coefficient.
    pub fn conj(&self) -> MultiSeries {
        let ring = &self.ring;
        MultiSeries { ring: ring.clone(), coeffs: ring.map_coeffs(ring, &self.coeffs, BigComplex::conj) }
    }

    /// `exp(self)`; requires a vanishing constant term.
    pub fn exp(&self) -> Result<MultiSeries, NumericsError> {
        if !self.coeff(&Monomial::ONE).is_zero() {
            return Err(NumericsError::Domain("exp of a series with nonzero constant term".into()));
        }
        let prec = self.ring.base().prec;
        let mut out = MultiSeries::one(&self.ring);
        let mut power = MultiSeries::one(&self.ring);
        for m in 1..=self.maxdeg() {
            power = power.mul(self)?.scale(&BigComplex::from_rational(prec, &Rational::from((1, m))));
            out = out.add(&power)?;
        }
        Ok(out)
    }

    /// Largest coefficientwise `|self − other|`.
    pub fn max_abs_diff(&self, other: &MultiSeries) -> Result<Float, NumericsError> {
        let d = self.sub(other)?;
        let mut max = Float::new(self.ring.base().prec);
        for (_, c) in d.terms() {
            let a = c.abs();
            if a > max {
                max = a;
            }
        }
        Ok(max)
    }

    /// Substitute zero for the given variables (result keeps this ring).
    pub fn set_zero(&self, vars: VarSet) -> MultiSeries {
        MultiSeries { ring: self.ring.clone(), coeffs: self.ring.set_zero(&self.coeffs, vars) }
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", ElemDisplay(&self.ring, &self.coeffs))
    }
}

/// A numeric series ring at the given binary precision.
pub fn num_series_ring(prec: u32, vars: VarSet, maxdeg: u32) -> NumSeries {
    SeriesRing::new(ComplexField { prec }, vars, maxdeg)
}
