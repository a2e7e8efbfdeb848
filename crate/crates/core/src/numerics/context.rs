use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use super::cache::ZetaCache;
use super::complex::{BigComplex, ComplexField};
use super::series::{num_series_ring, NumSeries};
use super::{NumericsError, DEFAULT_DIGITS, DEFAULT_GUARD, MIN_DIGITS, MIN_GUARD};
use crate::word_algebra::{VarSet, Word};

#[derive(Default)]
pub(crate) struct Memo {
    pub(crate) zeta: RwLock<HashMap<Word, Float>>,
    pub(crate) zsh: RwLock<HashMap<Word, Float>>,
    pub(crate) zrs: RwLock<HashMap<Word, BigComplex>>,
    pub(crate) ikz: RwLock<Option<(Vec<Float>, Vec<Float>)>>,
}

/// Precision and caches for numeric evaluation.
///
/// Cloning is cheap and clones share caches, so a context can be handed to
/// worker threads.
#[derive(Clone)]
pub struct NumContext {
    digits: u32,
    guard: u32,
    bits: u32,
    cache: Arc<ZetaCache>,
    pub(crate) memo: Arc<Memo>,
}

impl std::fmt::Debug for NumContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NumContext")
            .field("digits", &self.digits)
            .field("guard", &self.guard)
            .field("bits", &self.bits)
            .finish()
    }
}

impl Default for NumContext {
    fn default() -> Self {
        NumContext::new(DEFAULT_DIGITS).expect("default precision is valid")
    }
}

impl NumContext {
    pub fn new(digits: u32) -> Result<NumContext, NumericsError> {
        NumContext::with_guard(digits, DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Result<NumContext, NumericsError> {
        NumContext::with_cache(digits, guard, Arc::new(ZetaCache::in_memory()))
    }

    pub fn with_cache(digits: u32, guard: u32, cache: Arc<ZetaCache>) -> Result<NumContext, NumericsError> {
        if digits < MIN_DIGITS {
            return Err(NumericsError::Precision(format!("{digits} digits requested, at least {MIN_DIGITS} required")));
        }
        if guard < MIN_GUARD {
            return Err(NumericsError::Precision(format!("{guard} guard digits requested, at least {MIN_GUARD} required")));
        }
        let bits = ((digits + guard) as f64 * std::f64::consts::LOG2_10).ceil() as u32;
        Ok(NumContext { digits, guard, bits, cache, memo: Arc::default() })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    /// Working precision in bits.
    pub fn prec(&self) -> u32 {
        self.bits
    }

    pub fn cache(&self) -> &Arc<ZetaCache> {
        &self.cache
    }

    pub fn field(&self) -> ComplexField {
        ComplexField { prec: self.bits }
    }

    pub fn series_ring(&self, vars: VarSet, maxdeg: u32) -> NumSeries {
        num_series_ring(self.bits, vars, maxdeg)
    }

    pub fn float(&self, v: impl Into<f64>) -> Float {
        Float::with_val(self.bits, v.into())
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.bits, Constant::Pi)
    }

    pub fn log2(&self) -> Float {
        Float::with_val(self.bits, Constant::Log2)
    }

    /// `10^{-e}` at working precision.
    pub fn ten_pow_neg(&self, e: i32) -> Float {
        Float::with_val(self.bits, 10).pow(-e)
    }

    /// Default comparison tolerance `10^{-(P-20)}`.
    pub fn tolerance(&self) -> Float {
        self.ten_pow_neg(self.digits as i32 - 20)
    }

    /// Number of power-series terms at `z = 1/2` for a word with `depth` integrations.
    pub(crate) fn li_terms(&self, depth: usize) -> usize {
        let base = ((self.digits + self.guard + 5) as f64 * std::f64::consts::LOG2_10).ceil() as usize;
        let slack = depth * (usize::BITS - base.leading_zeros()) as usize;
        base + slack
    }
}
