//! Big-float evaluation of multiple zeta values, generating series and a
//! persistent value cache.

mod cache;
mod complex;
mod context;
mod gamma;
mod polylog;
mod series;

pub use cache::{CacheError, CacheKind, CacheRecord, ZetaCache, FORMAT_VERSION};
pub use complex::{format_real, BigComplex, ComplexField};
pub use context::NumContext;
pub use gamma::{exp_factor_series, gamma_ratio_series, single_zeta, ExpFactor, GammaFactor};
pub use polylog::{eval_admissible, eval_li_half, li_half_prefixes, zeta_index, zsh_numeric, zsh_word};
pub use series::{num_series_ring, MultiSeries, NumSeries};

use crate::word_algebra::{AlgebraError, Word};

pub const DEFAULT_DIGITS: u32 = 60;
pub const DEFAULT_GUARD: u32 = 10;
pub const MIN_DIGITS: u32 = 20;
pub const MIN_GUARD: u32 = 5;

#[derive(Debug, thiserror::Error)]
pub enum NumericsError {
    #[error("iterated integral of {0} diverges at 0")]
    DivergentAtZero(Word),
    #[error("word {0} is not admissible")]
    NotAdmissible(Word),
    #[error("Euler constant terms do not cancel: residual {0}")]
    GammaConstantResidue(String),
    #[error("series variables differ: {0}")]
    VariableMismatch(String),
    #[error("invalid precision: {0}")]
    Precision(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Cache(#[from] CacheError),
}
