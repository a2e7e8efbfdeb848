use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Rational;

use super::ring::{CoeffRing, ElemDisplay, ExactSeries, Rationals, SeriesRing};
use super::word::{Letter, Word};
use super::AlgebraError;

/// Finite linear combination of words over a coefficient ring.
///
/// Terms are kept in canonical (degree-lexicographic) word order and no zero
/// coefficient is ever stored.
#[derive(Clone, PartialEq)]
pub struct NcPoly<R: CoeffRing> {
    ring: R,
    terms: BTreeMap<Word, R::Elem>,
}

pub type RatPoly = NcPoly<Rationals>;
pub type SeriesPoly = NcPoly<ExactSeries>;

impl<R: CoeffRing> NcPoly<R> {
    pub fn zero(ring: R) -> Self {
        NcPoly { ring, terms: BTreeMap::new() }
    }

    pub fn one(ring: R) -> Self {
        Self::word(ring, Word::empty())
    }

    pub fn word(ring: R, w: Word) -> Self {
        let c = ring.one();
        Self::term(ring, w, c)
    }

    pub fn term(ring: R, w: Word, c: R::Elem) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, R::Elem)>>(ring: R, terms: I) -> Self {
        let mut p = Self::zero(ring);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Word, &R::Elem)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> R::Elem {
        self.terms.get(w).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Accumulate `c · w` in place.
    pub fn add_term(&mut self, w: Word, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                self.ring.add_assign(e.get_mut(), &c);
                if self.ring.is_zero(e.get()) {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn check_ring(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch(format!("{:?} vs {:?}", self.ring, other.ring)))
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &R::Elem) -> Result<(), AlgebraError> {
        self.check_ring(other)?;
        for (w, d) in &other.terms {
            let v = self.ring.mul(c, d);
            self.add_term(*w, v);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.negated())
    }

    pub fn negated(&self) -> Self {
        NcPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(w, c)| (*w, self.ring.neg(c))).collect(),
        }
    }

    pub fn scaled(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (w, d) in &self.terms {
            out.add_term(*w, self.ring.mul(c, d));
        }
        out
    }

    pub fn scaled_rational(&self, q: &Rational) -> Self {
        self.scaled(&self.ring.from_rational(q))
    }

    /// Concatenation product.
    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_ring(other)?;
        let mut out = Self::zero(self.ring.clone());
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), self.ring.mul(a, b));
            }
        }
        Ok(out)
    }

    /// `l · self`, letter on the left.
    pub fn left_letter(&self, l: Letter) -> Self {
        self.map_words(|w| w.prepend(l))
    }

    /// `self · l`, letter on the right.
    pub fn right_letter(&self, l: Letter) -> Self {
        self.map_words(|w| {
            let mut w = *w;
            w.push(l);
            w
        })
    }

    /// Linear extension of a map on words.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Apply `f` to every coefficient, landing in `target`.
    pub fn map_coeffs<S: CoeffRing>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> NcPoly<S> {
        let mut out = NcPoly::zero(target);
        for (w, c) in &self.terms {
            let v = f(c);
            out.add_term(*w, v);
        }
        out
    }

    /// Keep only the terms whose word satisfies `pred`.
    pub fn filter_words(&self, pred: impl Fn(&Word) -> bool) -> Self {
        NcPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(w, _)| pred(w)).map(|(w, c)| (*w, c.clone())).collect(),
        }
    }
}

impl NcPoly<Rationals> {
    pub fn rational(w: Word) -> RatPoly {
        NcPoly::word(Rationals, w)
    }

    /// View a rational polynomial as a constant series polynomial.
    pub fn lift<R: CoeffRing>(&self, ring: &SeriesRing<R>) -> NcPoly<SeriesRing<R>> {
        self.map_coeffs(ring.clone(), |q| ring.constant(ring.base().from_rational(q)))
    }

    pub fn rational_coeff(&self, w: &Word) -> Rational {
        self.coeff(w)
    }
}

impl<R: CoeffRing> fmt::Display for NcPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let text = ElemDisplay(&self.ring, c);
            if self.ring.is_compound() {
                write!(f, "({text})*{w}")?;
            } else {
                write!(f, "{text}*{w}")?;
            }
        }
        Ok(())
    }
}

impl<R: CoeffRing> fmt::Debug for NcPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly[{self}]")
    }
}

/// Rationals print bare when nonnegative and parenthesized when negative.
pub(crate) fn write_rational_coeff(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if *q < 0 {
        write!(f, "({q})")
    } else {
        write!(f, "{q}")
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<R: CoeffRing> $tr<&NcPoly<R>> for &NcPoly<R> {
            type Output = NcPoly<R>;
            fn $method(self, rhs: &NcPoly<R>) -> NcPoly<R> {
                self.$inner(rhs).expect("coefficient rings differ")
            }
        }
        impl<R: CoeffRing> $tr<NcPoly<R>> for NcPoly<R> {
            type Output = NcPoly<R>;
            fn $method(self, rhs: NcPoly<R>) -> NcPoly<R> {
                self.$inner(&rhs).expect("coefficient rings differ")
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl<R: CoeffRing> Neg for &NcPoly<R> {
    type Output = NcPoly<R>;
    fn neg(self) -> NcPoly<R> {
        self.negated()
    }
}

impl<R: CoeffRing> Neg for NcPoly<R> {
    type Output = NcPoly<R>;
    fn neg(self) -> NcPoly<R> {
        self.negated()
    }
}
