use alloc::vec::Vec;

use super::SystemConfig;
use crate::error::Result;
use crate::matcore::{dft_matrix, khatri_rao, unit_root, weyl_heisenberg_basis, CMatrix};

/// Pilot matrix, BD-RIS scattering sequence and the combined pilot matrix
/// `omega = (s_bar ⋄ x)^T` they induce.
#[derive(Debug, Clone)]
pub struct TrainingDesign {
    /// `mt x t` pilot matrix.
    pub x: CMatrix,
    /// `s_seq[t][q]` is the unitary `nbar x nbar` block of group `q` at slot `t`.
    pub s_seq: Vec<Vec<CMatrix>>,
    /// `nbar²q x t`; column `t` stacks `vec(S_t^(q))` over the groups.
    pub s_bar: CMatrix,
    /// `t x mt*nbar²*q` combined pilot matrix.
    pub omega: CMatrix,
}

/// Orthogonal training of length `cfg.t`.
///
/// Slot `t` of the minimal design is indexed as
/// `t = ((m*q_count + g)*nbar + p)*nbar + k`. Its pilot is column `m` of the
/// `mt`-point DFT, and the block of group `q'` is
/// `exp(-2πi q' g / q_count) · D^k Π^p`. Longer designs repeat the minimal one.
/// The result satisfies `omega^H omega = (t/nbar) I`.
pub fn build_training(cfg: &SystemConfig) -> Result<TrainingDesign> {
    cfg.validate()?;
    let (mt, nbar, qn) = (cfg.mt, cfg.nbar, cfg.q);
    let dft = dft_matrix(mt);
    let basis = weyl_heisenberg_basis(nbar);
    let t_min = cfg.t_min();

    let mut x = CMatrix::zeros(mt, cfg.t);
    let mut s_seq = Vec::with_capacity(cfg.t);
    let mut s_bar = CMatrix::zeros(nbar * nbar * qn, cfg.t);
    for t in 0..cfg.t {
        let t0 = t % t_min;
        let k = t0 % nbar;
        let p = (t0 / nbar) % nbar;
        let g = (t0 / (nbar * nbar)) % qn;
        let m = t0 / (nbar * nbar * qn);

        x.col_mut(t).copy_from_slice(dft.col(m));
        let u = &basis[p * nbar + k];
        let blocks: Vec<CMatrix> = (0..qn).map(|qq| u.scale(unit_root(qq * g, qn))).collect();
        let col = s_bar.col_mut(t);
        for (qq, block) in blocks.iter().enumerate() {
            col[qq * nbar * nbar..(qq + 1) * nbar * nbar].copy_from_slice(block.as_slice());
        }
        s_seq.push(blocks);
    }
    let omega = khatri_rao(&s_bar, &x)?.transpose();
    Ok(TrainingDesign {
        x,
        s_seq,
        s_bar,
        omega,
    })
}

impl TrainingDesign {
    /// Relative Frobenius error of `omega^H omega` against `(t/nbar) I`.
    pub fn orthogonality_error(&self, cfg: &SystemConfig) -> f64 {
        let gram = self
            .omega
            .adjoint()
            .matmul(&self.omega)
            .expect("omega gram shape");
        let target = CMatrix::identity(gram.rows()).scale_real(cfg.t as f64 / cfg.nbar as f64);
        gram.relative_error(&target)
    }

    /// Largest `‖S^H S - I‖_F` over every scattering block.
    pub fn max_unitarity_error(&self) -> f64 {
        self.s_seq
            .iter()
            .flatten()
            .map(|s| {
                let gram = s.adjoint().matmul(s).expect("square block");
                gram.sub(&CMatrix::identity(s.rows()))
                    .unwrap()
                    .frobenius_norm()
            })
            .fold(0.0, f64::max)
    }

    /// Full block-diagonal `n x n` scattering matrix of slot `t`.
    pub fn scattering_matrix(&self, t: usize) -> CMatrix {
        let blocks = &self.s_seq[t];
        let nbar = blocks.first().map_or(0, |b| b.rows());
        let n = nbar * blocks.len();
        let mut s = CMatrix::zeros(n, n);
        for (qq, b) in blocks.iter().enumerate() {
            for j in 0..nbar {
                for i in 0..nbar {
                    s[(qq * nbar + i, qq * nbar + j)] = b[(i, j)];
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_connected_reduces_to_dft_training() {
        let cfg = SystemConfig::with_min_pilots(1, 1, 1, 4, 0.0).unwrap();
        let td = build_training(&cfg).unwrap();
        for blocks in &td.s_seq {
            for b in blocks {
                assert_eq!(b.shape(), (1, 1));
                assert!((b[(0, 0)].norm() - 1.0).abs() < 1e-15);
            }
        }
        // Scattering rows across slots form the 4-point DFT.
        let dft = dft_matrix(4);
        assert!(td.s_bar.relative_error(&dft) < 1e-14);
    }

    #[test]
    fn tiny_design_gram() {
        let cfg = SystemConfig::with_min_pilots(1, 1, 2, 1, 0.0).unwrap();
        let td = build_training(&cfg).unwrap();
        assert_eq!(td.omega.shape(), (4, 4));
        assert!(td.orthogonality_error(&cfg) < 1e-12);
    }

    #[test]
    fn repeated_design_keeps_orthogonality() {
        let cfg = SystemConfig::new(2, 1, 2, 2, 32, 0.0).unwrap();
        let td = build_training(&cfg).unwrap();
        assert_eq!(td.omega.shape(), (32, 16));
        assert!(td.orthogonality_error(&cfg) < 1e-12);
    }

    #[test]
    fn scattering_matrix_is_block_diagonal() {
        let cfg = SystemConfig::with_min_pilots(1, 1, 2, 3, 0.0).unwrap();
        let td = build_training(&cfg).unwrap();
        let s = td.scattering_matrix(5);
        assert_eq!(s.shape(), (6, 6));
        assert_eq!(s[(0, 2)], crate::C64::new(0.0, 0.0));
        let gram = s.adjoint().matmul(&s).unwrap();
        assert!(gram.relative_error(&CMatrix::identity(6)) < 1e-14);
    }
}
