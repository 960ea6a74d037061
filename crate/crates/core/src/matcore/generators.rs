use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{CMatrix, C64};

/// `exp(-2πi · num / den)`, with `num` reduced modulo `den` first so large
/// products keep full precision.
pub fn unit_root(num: usize, den: usize) -> C64 {
    let k = num % den;
    let theta = -2.0 * PI * (k as f64) / (den as f64);
    C64::new(theta.cos(), theta.sin())
}

/// Unnormalized `n x n` DFT matrix, entry `(j, k) = exp(-2πi·jk/n)`.
/// `F^H F = n·I`.
pub fn dft_matrix(n: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |j, k| unit_root(j * k, n))
}

/// Shift-and-modulate unitary `D^k Π^p` of size `nbar`, where
/// `D = diag(1, ω, …, ω^{nbar-1})`, `ω = exp(-2πi/nbar)` and `Π` is the cyclic
/// down-shift (`Π e_j = e_{j+1 mod nbar}`).
pub fn weyl_heisenberg(nbar: usize, k: usize, p: usize) -> CMatrix {
    let mut m = CMatrix::zeros(nbar, nbar);
    for j in 0..nbar {
        let i = (j + p) % nbar;
        m[(i, j)] = unit_root(k * i, nbar);
    }
    m
}

/// All `nbar²` matrices `D^k Π^p`, ordered by `p * nbar + k`. Their
/// vectorizations are mutually orthogonal with squared norm `nbar`.
pub fn weyl_heisenberg_basis(nbar: usize) -> Vec<CMatrix> {
    (0..nbar)
        .flat_map(|p| (0..nbar).map(move |k| weyl_heisenberg(nbar, k, p)))
        .collect()
}
