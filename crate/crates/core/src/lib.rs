//! Exact word algebra, regularization and high-precision evaluation of
//! multiple zeta values and their refined symmetric counterparts.

pub mod numerics;
pub mod regularization;
pub mod rsmzv;
pub mod verify;
pub mod word_algebra;
