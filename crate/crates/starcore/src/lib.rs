//! Exact computation of the five classical generalized inverses (group,
//! Drazin, Moore-Penrose, (1,3), core) for matrices over the Gaussian
//! rationals, plus a seeded lab that checks additive and block-matrix
//! core-invertibility statements on generated instances.
//!
//! Everything is exact arithmetic: there is no tolerance parameter anywhere
//! in this crate, and all verdicts are decided by structural equality.

pub mod geninv;
pub mod matrix;
pub mod scalar;
pub mod theorems;

pub use matrix::{FullRankFactorization, Matrix, PierceBlocks};
pub use scalar::{GaussianRational, Rational};
