//! Dense complex linear algebra used by the estimators: structured products,
//! reshapes, the Kronecker vectorization permutation, rank-one
//! approximation, and DFT / shift-and-modulate generators.
//!
//! All matrices are column-major with 0-based indices, and `vec` stacks
//! columns. Everything here is a pure function of its inputs.

mod generators;
mod matrix;
mod permutation;
mod products;
mod rank_one;

pub use generators::{dft_matrix, unit_root, weyl_heisenberg, weyl_heisenberg_basis};
pub use matrix::{dot_conj, norm_sqr, CMatrix, CVector};
pub use permutation::{kron_vec_permutation, PermutationMap};
pub use products::{diag, khatri_rao, kron, kron_vec, unvec, vec};
pub use rank_one::{
    rank_one_approx, svd, RankOne, RankOneMethod, Svd, MAX_POWER_ITERATIONS, POWER_TOLERANCE,
};

pub type C64 = num_complex::Complex64;
