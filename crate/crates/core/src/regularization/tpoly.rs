use std::fmt;

use rug::Rational;

use crate::word_algebra::{IndexCombo, RatPoly, Rationals};

/// Coefficients a `TPoly` may carry.
pub trait TCoeff: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn scaled(&self, q: &Rational) -> Self;
}

impl TCoeff for RatPoly {
    fn zero() -> Self {
        RatPoly::zero(Rationals)
    }
    fn is_zero(&self) -> bool {
        RatPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn scaled(&self, q: &Rational) -> Self {
        self.scaled_rational(q)
    }
}

impl TCoeff for IndexCombo {
    fn zero() -> Self {
        IndexCombo::zero()
    }
    fn is_zero(&self) -> bool {
        IndexCombo::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from(1));
        out
    }
    fn scaled(&self, q: &Rational) -> Self {
        IndexCombo::scaled(self, q)
    }
}

/// Polynomial in `T` whose coefficients are combinations of convergent objects.
#[derive(Clone, PartialEq, Debug)]
pub struct TPoly<C> {
    coeffs: Vec<C>,
}

impl<C: TCoeff> TPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> TPoly<C> {
        while coeffs.last().is_some_and(TCoeff::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn zero() -> TPoly<C> {
        TPoly { coeffs: Vec::new() }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> C {
        self.coeffs.get(j).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> C {
        self.coeff(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: TCoeff> fmt::Display for TPoly<C> {
    /// `(c_0) + (c_1)*T + (c_2)*T^2`, zero coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*T")?,
                _ => write!(f, "({c})*T^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
