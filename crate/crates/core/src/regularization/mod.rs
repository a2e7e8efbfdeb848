//! Shuffle and harmonic regularization, and the comparison map between them.

mod harmonic_reg;
mod ikz;
mod shuffle_reg;
mod tpoly;

pub use harmonic_reg::{harmonic_decompose, harmonic_reassemble};
pub use ikz::{
    harmonic_poly_numeric, ikz_coefficients, ikz_rho, zeta_shift_star, zeta_star_at, zsh_poly_numeric, IkzDirection,
    NumTPoly,
};
pub use shuffle_reg::{double_shuffle_decompose, zsh_poly, zsh_symbolic, ShuffleDecomposition};
pub use tpoly::{TCoeff, TPoly};
