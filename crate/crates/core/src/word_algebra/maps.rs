use super::poly::{NcPoly, RatPoly, SeriesPoly};
use super::ring::{CoeffRing, ExactSeries, Monomial, Rationals, SeriesRing, Var, VarSet};
use super::word::{Letter, Word};
use super::AlgebraError;

/// The anti-automorphism `τ`: reverse each word and exchange `x` and `y`.
pub fn tau<R: CoeffRing>(p: &NcPoly<R>) -> NcPoly<R> {
    p.map_words(|w| w.reversed().swapped())
}

/// Algebra endomorphism determined by the images of `x` and `y`.
pub fn substitute<R: CoeffRing>(p: &NcPoly<R>, image_x: &NcPoly<R>, image_y: &NcPoly<R>) -> Result<NcPoly<R>, AlgebraError> {
    p.check_ring(image_x)?;
    p.check_ring(image_y)?;
    let ring = p.ring();
    let mut out = NcPoly::zero(ring.clone());
    for (w, c) in p.terms() {
        let mut acc = NcPoly::term(ring.clone(), Word::empty(), c.clone());
        for l in w.letters() {
            let img = match l {
                Letter::X => image_x,
                Letter::Y => image_y,
            };
            acc = acc.try_mul(img)?;
        }
        out = out.try_add(&acc)?;
    }
    Ok(out)
}

/// `φ(x) = x + y`, `φ(y) = −y`, an involutive automorphism.
pub fn phi<R: CoeffRing>(p: &NcPoly<R>) -> NcPoly<R> {
    let ring = p.ring();
    let mut out = NcPoly::zero(ring.clone());
    for (w, c) in p.terms() {
        let xs: Vec<usize> = (0..w.len()).filter(|&i| w.get(i) == Some(Letter::X)).collect();
        let c = if w.count(Letter::Y) % 2 == 1 { ring.neg(c) } else { c.clone() };
        for mask in 0u64..(1u64 << xs.len()) {
            let mut v = *w;
            for (bit, &pos) in xs.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    v = v.prefix(pos).concat(&Word::y()).concat(&v.suffix_from(pos + 1));
                }
            }
            out.add_term(v, c.clone());
        }
    }
    out
}

/// The four generating maps in `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenMap {
    /// `σ(x) = x`, `σ(y) = y(1 − xT)^{-1}`.
    Sigma,
    /// `ρ = τστ`: `ρ(x) = (1 − yT)^{-1}x`, `ρ(y) = y`.
    Rho,
    /// `σ̃(w) = σ(w)(1 − xT)`.
    SigmaTilde,
    /// `ρ̃(w) = ρ(w)(1 − yT)^{-1}`.
    RhoTilde,
}

impl GenMap {
    pub const ALL: [GenMap; 4] = [GenMap::Sigma, GenMap::Rho, GenMap::SigmaTilde, GenMap::RhoTilde];

    pub fn name(self) -> &'static str {
        match self {
            GenMap::Sigma => "sigma",
            GenMap::Rho => "rho",
            GenMap::SigmaTilde => "sigma_tilde",
            GenMap::RhoTilde => "rho_tilde",
        }
    }

    pub fn from_name(s: &str) -> Option<GenMap> {
        GenMap::ALL.into_iter().find(|m| m.name() == s)
    }
}

/// `Σ_{a ≤ maxdeg} sign^a l^a var^a` in the given series ring.
pub fn geometric_series_word<R: CoeffRing>(
    ring: &SeriesRing<R>,
    l: Letter,
    var: Var,
    sign: i32,
) -> Result<NcPoly<SeriesRing<R>>, AlgebraError> {
    if !ring.vars().contains(var) {
        return Err(AlgebraError::MissingVariable(var.name()));
    }
    let base = ring.base();
    let mut out = NcPoly::zero(ring.clone());
    for a in 0..=ring.maxdeg() {
        let c = if sign < 0 && a % 2 == 1 { base.neg(&base.one()) } else { base.one() };
        out.add_term(Word::power(l, a as usize), ring.term(Monomial::var(var, a as u16), c));
    }
    Ok(out)
}

/// Apply a generating map; everything beyond the ring's truncation degree is dropped.
pub fn apply_generating_map<R: CoeffRing>(
    map: GenMap,
    p: &NcPoly<SeriesRing<R>>,
) -> Result<NcPoly<SeriesRing<R>>, AlgebraError> {
    let ring = p.ring();
    let x = NcPoly::word(ring.clone(), Word::x());
    let y = NcPoly::word(ring.clone(), Word::y());
    let sigma = |q: &NcPoly<SeriesRing<R>>| -> Result<_, AlgebraError> {
        let gx = geometric_series_word(ring, Letter::X, Var::T, 1)?;
        substitute(q, &x, &y.try_mul(&gx)?)
    };
    let rho = |q: &NcPoly<SeriesRing<R>>| -> Result<_, AlgebraError> {
        let gy = geometric_series_word(ring, Letter::Y, Var::T, 1)?;
        substitute(q, &gy.try_mul(&x)?, &y)
    };
    match map {
        GenMap::Sigma => sigma(p),
        GenMap::Rho => rho(p),
        GenMap::SigmaTilde => {
            let s = sigma(p)?;
            let xt = NcPoly::term(ring.clone(), Word::x(), ring.monomial(Monomial::var(Var::T, 1)));
            s.try_sub(&s.try_mul(&xt)?)
        }
        GenMap::RhoTilde => rho(p)?.try_mul(&geometric_series_word(ring, Letter::Y, Var::T, 1)?),
    }
}

/// The `T`-only series ring over the rationals truncated at `maxdeg`.
pub fn t_ring(maxdeg: u32) -> ExactSeries {
    ExactSeries::new(Rationals, VarSet::T, maxdeg)
}

/// Convenience: apply a generating map to a rational polynomial.
pub fn apply_generating_map_rational(map: GenMap, p: &RatPoly, maxdeg: u32) -> SeriesPoly {
    apply_generating_map(map, &p.lift(&t_ring(maxdeg))).expect("the T ring always carries T")
}
