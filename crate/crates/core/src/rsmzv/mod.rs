//! Regularized refined symmetric multiple zeta values.

mod series;
mod zrs;

pub use series::{zrs_series, zsh_series, ToComplex};
pub use zrs::{y_map, zrs_from_symbolic, zrs_index, zrs_poly, zrs_symbolic, zrs_word, zrs_word_defn, zrs_word_value, RsValue};
