use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::Constant;
use rug::{Float, Rational};

use crate::word_algebra::CoeffRing;

/// Arbitrary-precision complex number as a pair of MPFR reals.
#[derive(Clone, PartialEq, Debug)]
pub struct BigComplex {
    pub re: Float,
    pub im: Float,
}

impl BigComplex {
    pub fn zero(prec: u32) -> BigComplex {
        BigComplex { re: Float::new(prec), im: Float::new(prec) }
    }

    pub fn one(prec: u32) -> BigComplex {
        BigComplex::from_real(Float::with_val(prec, 1))
    }

    pub fn i(prec: u32) -> BigComplex {
        BigComplex { re: Float::new(prec), im: Float::with_val(prec, 1) }
    }

    pub fn from_real(re: Float) -> BigComplex {
        let im = Float::new(re.prec());
        BigComplex { re, im }
    }

    pub fn new(re: Float, im: Float) -> BigComplex {
        BigComplex { re, im }
    }

    pub fn from_rational(prec: u32, q: &Rational) -> BigComplex {
        BigComplex::from_real(Float::with_val(prec, q))
    }

    /// `π i` scaled by a rational: `q π i`.
    pub fn pi_i_times(prec: u32, q: &Rational) -> BigComplex {
        let pi = Float::with_val(prec, Constant::Pi);
        BigComplex { re: Float::new(prec), im: pi * q }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> BigComplex {
        BigComplex { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn scale_real(&self, r: &Float) -> BigComplex {
        BigComplex { re: self.re.clone() * r, im: self.im.clone() * r }
    }

    pub fn scale_rational(&self, q: &Rational) -> BigComplex {
        BigComplex { re: self.re.clone() * q, im: self.im.clone() * q }
    }

    pub fn mul_i(&self) -> BigComplex {
        BigComplex { re: -self.im.clone(), im: self.re.clone() }
    }

    pub fn pow(&self, n: u32) -> BigComplex {
        let mut acc = BigComplex::one(self.prec());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn reciprocal(&self) -> BigComplex {
        let prec = self.prec();
        let norm = Float::with_val(prec, self.re.square_ref()) + Float::with_val(prec, self.im.square_ref());
        BigComplex { re: self.re.clone() / &norm, im: -(self.im.clone() / &norm) }
    }

    /// `|self − other|`.
    pub fn dist(&self, other: &BigComplex) -> Float {
        (self - other).abs()
    }

    /// Decimal text `a + b*i` with `digits` significant digits per part.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.im.is_zero() {
            return format_real(&self.re, digits);
        }
        let re = format_real(&self.re, digits);
        let im_abs = Float::with_val(self.prec(), self.im.abs_ref());
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        format!("{re} {sign} {}*i", format_real(&im_abs, digits))
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(((self.prec() as f64) * std::f64::consts::LOG10_2) as usize);
        f.write_str(&self.to_decimal(digits.max(1)))
    }
}

/// Fixed-point decimal with `digits` significant digits, scientific outside
/// a moderate exponent range.
pub fn format_real(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let digits = digits.max(1);
    let (negative, mantissa, exp) = x.to_sign_string_exp(10, Some(digits));
    let exp = exp.unwrap_or(0);
    let sign = if negative { "-" } else { "" };
    let m = mantissa.trim_end_matches('0');
    let m = if m.is_empty() { "0" } else { m };
    // value = 0.m × 10^exp
    if exp > 0 && (exp as usize) <= digits.max(m.len()) {
        let e = exp as usize;
        if m.len() <= e {
            format!("{sign}{m}{}", "0".repeat(e - m.len()))
        } else {
            format!("{sign}{}.{}", &m[..e], &m[e..])
        }
    } else if exp <= 0 && exp > -6 {
        format!("{sign}0.{}{m}", "0".repeat((-exp) as usize))
    } else {
        let rest = if m.len() > 1 { format!(".{}", &m[1..]) } else { String::new() };
        format!("{sign}{}{rest}e{}", &m[..1], exp - 1)
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: self.re.clone() + &rhs.re, im: self.im.clone() + &rhs.im }
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: self.re.clone() - &rhs.re, im: self.im.clone() - &rhs.im }
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        let prec = self.prec().max(rhs.prec());
        let ac = Float::with_val(prec, &self.re * &rhs.re);
        let bd = Float::with_val(prec, &self.im * &rhs.im);
        let ad = Float::with_val(prec, &self.re * &rhs.im);
        let bc = Float::with_val(prec, &self.im * &rhs.re);
        BigComplex { re: ac - bd, im: ad + bc }
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Add for BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: BigComplex) -> BigComplex {
        &self + &rhs
    }
}

impl Sub for BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: BigComplex) -> BigComplex {
        &self - &rhs
    }
}

impl Mul for BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: BigComplex) -> BigComplex {
        &self * &rhs
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        -&self
    }
}

/// The complex numbers at a fixed binary precision, as a coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexField {
    pub prec: u32,
}

impl CoeffRing for ComplexField {
    type Elem = BigComplex;

    fn zero(&self) -> BigComplex {
        BigComplex::zero(self.prec)
    }
    fn one(&self) -> BigComplex {
        BigComplex::one(self.prec)
    }
    fn is_zero(&self, a: &BigComplex) -> bool {
        a.is_zero()
    }
    fn add_assign(&self, a: &mut BigComplex, b: &BigComplex) {
        a.re += &b.re;
        a.im += &b.im;
    }
    fn neg(&self, a: &BigComplex) -> BigComplex {
        -a
    }
    fn mul(&self, a: &BigComplex, b: &BigComplex) -> BigComplex {
        a * b
    }
    fn from_rational(&self, q: &Rational) -> BigComplex {
        BigComplex::from_rational(self.prec, q)
    }
    fn fmt_elem(&self, a: &BigComplex, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec as f64) * std::f64::consts::LOG10_2) as usize;
        let text = a.to_decimal(digits.saturating_sub(3).max(1));
        if a.im.is_zero() && !a.re.is_sign_negative() {
            f.write_str(&text)
        } else {
            write!(f, "({text})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let prec = 128;
        let i = BigComplex::i(prec);
        assert_eq!(&i * &i, -BigComplex::one(prec));
        let z = BigComplex::new(Float::with_val(prec, 3), Float::with_val(prec, 4));
        assert_eq!(z.abs(), 5);
        let w = &z * &z.reciprocal();
        assert!(w.dist(&BigComplex::one(prec)) < 1e-35);
        assert_eq!(z.pow(3), &(&z * &z) * &z);
    }

    #[test]
    fn decimal_text() {
        let prec = 200;
        let x = Float::with_val(prec, Rational::from((1, 3)));
        assert_eq!(format_real(&x, 5), "0.33333");
        assert_eq!(format_real(&Float::with_val(prec, 120), 10), "120");
        assert_eq!(format_real(&Float::with_val(prec, -2.5), 10), "-2.5");
        assert_eq!(format_real(&Float::with_val(prec, 1e-9), 3), "1e-9");
        let z = BigComplex::new(Float::with_val(prec, 1.5), Float::with_val(prec, -2));
        assert_eq!(z.to_decimal(6), "1.5 - 2*i");
    }
}
