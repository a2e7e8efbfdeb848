use rayon::prelude::*;

use crate::numerics::{zsh_word, BigComplex, ComplexField, MultiSeries, NumContext, NumericsError};
use crate::word_algebra::{CoeffRing, NcPoly, Rationals, Series, SeriesRing, Word};

use super::zrs::zrs_word;

/// Base rings whose elements embed into the complex numbers.
pub trait ToComplex: CoeffRing {
    fn to_complex(&self, e: &Self::Elem, prec: u32) -> BigComplex;
}

impl ToComplex for Rationals {
    fn to_complex(&self, e: &Self::Elem, prec: u32) -> BigComplex {
        BigComplex::from_rational(prec, e)
    }
}

impl ToComplex for ComplexField {
    fn to_complex(&self, e: &Self::Elem, prec: u32) -> BigComplex {
        BigComplex::new(rug::Float::with_val(prec, &e.re), rug::Float::with_val(prec, &e.im))
    }
}

fn extend<R: ToComplex>(
    p: &NcPoly<SeriesRing<R>>,
    ctx: &NumContext,
    eval: impl Fn(&Word, &NumContext) -> Result<BigComplex, NumericsError> + Sync,
) -> Result<MultiSeries, NumericsError> {
    let src = p.ring();
    let ring = ctx.series_ring(src.vars(), src.maxdeg());
    let words: Vec<Word> = p.words().copied().collect();
    let values = words.par_iter().map(|w| eval(w, ctx)).collect::<Result<Vec<_>, _>>()?;
    let bits = ctx.prec();
    let mut acc: Series<BigComplex> = Series::default();
    for (w, v) in words.iter().zip(values) {
        if v.is_zero() {
            continue;
        }
        let coeff = src.map_coeffs(&ring, &p.coeff(w), |c| &src.base().to_complex(c, bits) * &v);
        ring.add_assign(&mut acc, &coeff);
    }
    Ok(MultiSeries::from_series(&ring, acc))
}

/// `Z_RS` applied coefficientwise to a series-valued word polynomial.
pub fn zrs_series<R: ToComplex>(p: &NcPoly<SeriesRing<R>>, ctx: &NumContext) -> Result<MultiSeries, NumericsError> {
    extend(p, ctx, zrs_word)
}

/// `Z^ш` applied coefficientwise to a series-valued word polynomial.
pub fn zsh_series<R: ToComplex>(p: &NcPoly<SeriesRing<R>>, ctx: &NumContext) -> Result<MultiSeries, NumericsError> {
    extend(p, ctx, |w, ctx| Ok(BigComplex::from_real(zsh_word(w, ctx)?)))
}
