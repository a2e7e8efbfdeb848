use std::fmt;

use mzvkit::numerics::{eval_admissible, zeta_index, zsh_numeric, zsh_word, BigComplex, MultiSeries, NumContext, NumericsError};
use mzvkit::rsmzv::{zrs_index, zrs_series, zrs_word, zsh_series};
use mzvkit::word_algebra::{
    apply_generating_map_rational, dual_index, hoffman_dual, index_to_word, phi, shuffle, sym_harmonic, t_ring, tau,
    AlgebraError, CoeffRing, Index, IndexCombo, NcPoly, RatPoly, SeriesPoly,
};
use rug::Float;

use crate::dsl::Expr;

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

#[derive(Clone, Debug)]
pub enum Value {
    Index(Index),
    Combo(IndexCombo),
    Poly(RatPoly),
    Series(SeriesPoly),
    Scalar(BigComplex),
    ScalarSeries(MultiSeries),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Index(_) => "index",
            Value::Combo(_) => "index_combination",
            Value::Poly(_) => "word_polynomial",
            Value::Series(_) => "word_series",
            Value::Scalar(_) => "number",
            Value::ScalarSeries(_) => "number_series",
        }
    }

    /// Text form; numbers carry `digits` significant digits.
    pub fn render(&self, digits: usize) -> String {
        match self {
            Value::Index(k) => k.to_string(),
            Value::Combo(c) => c.to_string(),
            Value::Poly(p) => p.to_string(),
            Value::Series(p) => p.to_string(),
            Value::Scalar(z) => z.to_decimal(digits),
            Value::ScalarSeries(s) => format!("{s:.digits$}"),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(f.precision().unwrap_or(30)))
    }
}

/// Evaluates expressions; numeric work happens in `ctx`.
pub struct Evaluator<'a> {
    pub ctx: &'a NumContext,
}

fn real(x: Float) -> BigComplex {
    BigComplex::from_real(x)
}

impl Evaluator<'_> {
    pub fn eval(&self, e: &Expr) -> Result<Value, EvalError> {
        let ctx = self.ctx;
        Ok(match e {
            Expr::IndexLit(k) => Value::Index(k.clone()),
            Expr::WordLit(w) => Value::Poly(RatPoly::rational(*w)),
            Expr::Dual(a) => Value::Index(dual_index(&self.index(a)?)?),
            Expr::HDual(a) => Value::Index(hoffman_dual(&self.index(a)?)?),
            Expr::Harmonic(a, b) => Value::Combo(self.combo(a)?.harmonic(&self.combo(b)?)),
            Expr::Zeta(a) => match self.eval(a)? {
                Value::Poly(p) => {
                    let mut acc = Float::new(ctx.prec());
                    for (w, c) in p.terms() {
                        acc += eval_admissible(w, ctx)? * c;
                    }
                    Value::Scalar(real(acc))
                }
                v => Value::Scalar(self.linear(&to_combo(v), |k| Ok(real(zeta_index(k, ctx)?)))?),
            },
            Expr::ZetaSh(a) => match self.eval(a)? {
                Value::Poly(p) => Value::Scalar(real(zsh_numeric(&p, ctx)?)),
                Value::Series(p) => Value::ScalarSeries(zsh_series(&p, ctx)?),
                v => Value::Scalar(self.linear(&to_combo(v), |k| Ok(real(zsh_word(&index_to_word(k), ctx)?)))?),
            },
            Expr::ZetaRS(a) => match self.eval(a)? {
                Value::Poly(p) => {
                    let mut acc = BigComplex::zero(ctx.prec());
                    for (w, c) in p.terms() {
                        acc = &acc + &zrs_word(w, ctx)?.scale_rational(c);
                    }
                    Value::Scalar(acc)
                }
                Value::Series(p) => Value::ScalarSeries(zrs_series(&p, ctx)?),
                v => Value::Scalar(self.linear(&to_combo(v), |k| Ok(zrs_index(k, ctx)?))?),
            },
            Expr::Shuffle(a, b) => self.binary_words(a, b, shuffle, shuffle)?,
            Expr::SymHarmonic(a, b) => self.binary_words(a, b, sym_harmonic, sym_harmonic)?,
            Expr::Tau(a) => match self.eval(a)? {
                Value::Poly(p) => Value::Poly(tau(&p)),
                Value::Series(p) => Value::Series(tau(&p)),
                v => unreachable!("type-checked: {}", v.kind()),
            },
            Expr::Phi(a) => match self.eval(a)? {
                Value::Poly(p) => Value::Poly(phi(&p)),
                Value::Series(p) => Value::Series(phi(&p)),
                v => unreachable!("type-checked: {}", v.kind()),
            },
            Expr::GenMap(m, a, d) => Value::Series(apply_generating_map_rational(*m, &self.poly(a)?, *d)),
            Expr::SeriesTrunc(a, d) => match self.eval(a)? {
                Value::Series(p) => Value::Series(truncate(&p, *d)),
                v => unreachable!("type-checked: {}", v.kind()),
            },
        })
    }

    fn index(&self, e: &Expr) -> Result<Index, EvalError> {
        match self.eval(e)? {
            Value::Index(k) => Ok(k),
            v => unreachable!("type-checked: {}", v.kind()),
        }
    }

    fn combo(&self, e: &Expr) -> Result<IndexCombo, EvalError> {
        Ok(to_combo(self.eval(e)?))
    }

    fn poly(&self, e: &Expr) -> Result<RatPoly, EvalError> {
        match self.eval(e)? {
            Value::Poly(p) => Ok(p),
            v => unreachable!("type-checked: {}", v.kind()),
        }
    }

    fn linear(&self, c: &IndexCombo, f: impl Fn(&Index) -> Result<BigComplex, EvalError>) -> Result<BigComplex, EvalError> {
        let mut acc = BigComplex::zero(self.ctx.prec());
        for (k, q) in c.terms() {
            acc = &acc + &f(k)?.scale_rational(q);
        }
        Ok(acc)
    }

    fn binary_words(
        &self,
        a: &Expr,
        b: &Expr,
        rat: impl Fn(&RatPoly, &RatPoly) -> Result<RatPoly, AlgebraError>,
        ser: impl Fn(&SeriesPoly, &SeriesPoly) -> Result<SeriesPoly, AlgebraError>,
    ) -> Result<Value, EvalError> {
        Ok(match (self.eval(a)?, self.eval(b)?) {
            (Value::Poly(p), Value::Poly(q)) => Value::Poly(rat(&p, &q)?),
            (Value::Series(p), Value::Series(q)) => {
                let d = p.ring().maxdeg().min(q.ring().maxdeg());
                Value::Series(ser(&truncate(&p, d), &truncate(&q, d))?)
            }
            (Value::Series(p), Value::Poly(q)) => Value::Series(ser(&p, &q.lift(p.ring()))?),
            (Value::Poly(p), Value::Series(q)) => Value::Series(ser(&p.lift(q.ring()), &q)?),
            (x, y) => unreachable!("type-checked: {} and {}", x.kind(), y.kind()),
        })
    }
}

fn to_combo(v: Value) -> IndexCombo {
    match v {
        Value::Index(k) => IndexCombo::single(k),
        Value::Combo(c) => c,
        v => unreachable!("type-checked: {}", v.kind()),
    }
}

/// Drop the terms of total degree above `d`.
fn truncate(p: &SeriesPoly, d: u32) -> SeriesPoly {
    if d >= p.ring().maxdeg() {
        return p.clone();
    }
    let target = t_ring(d);
    NcPoly::from_terms(
        target.clone(),
        p.terms().map(|(w, s)| {
            let mut out = target.zero();
            for (m, c) in s.terms().filter(|(m, _)| m.degree() <= d) {
                target.add_assign(&mut out, &target.term(*m, c.clone()));
            }
            (*w, out)
        }),
    )
}

