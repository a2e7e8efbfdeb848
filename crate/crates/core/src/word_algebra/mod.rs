//! Noncommutative words in `x`, `y`, indices, and the exact algebra on them.

mod index;
mod maps;
mod poly;
mod products;
mod ring;
mod text;
mod word;

pub use index::{
    dual_index, h0_word_to_index, harmonic_index, hoffman_dual, index_to_word, weak_compositions, word_to_index, Index, IndexCombo,
};
pub use maps::{
    apply_generating_map, apply_generating_map_rational, geometric_series_word, phi, substitute, t_ring, tau, GenMap,
};
pub use poly::{NcPoly, RatPoly, SeriesPoly};
pub use products::{shuffle, shuffle_words, split_padded_h0, sym_harmonic};
pub use ring::{CoeffRing, ExactSeries, Monomial, Rationals, Series, SeriesRing, Var, VarSet};
pub use text::{parse_rational, parse_rat_poly, parse_series, parse_series_poly};
pub use word::{words_of_length, words_up_to, Letter, Word};

pub(crate) use ring::ElemDisplay;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("word {0} does not start with y")]
    NotIndexShaped(Word),
    #[error("index {0} is not admissible")]
    NotAdmissible(Index),
    #[error("the empty index has no Hoffman dual")]
    EmptyIndex,
    #[error("coefficient rings differ: {0}")]
    RingMismatch(String),
    #[error("word {0} is not of the form x^a w x^b with w in h^0")]
    Shape(Word),
    #[error("series ring lacks the variable {0}")]
    MissingVariable(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}
