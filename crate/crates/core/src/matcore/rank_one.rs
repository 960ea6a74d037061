use alloc::vec::Vec;

use super::matrix::{dot_conj, norm_sqr};
use super::{CMatrix, CVector, C64};

/// Power iterations before falling back to a full SVD.
pub const MAX_POWER_ITERATIONS: usize = 200;
/// Relative change of the singular value estimate that counts as converged.
pub const POWER_TOLERANCE: f64 = 1e-12;

const MAX_JACOBI_SWEEPS: usize = 80;
const PHASE_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankOneMethod {
    PowerIteration,
    SvdFallback,
    ZeroMatrix,
}

/// Dominant singular triplet: `sigma * u * v^H` is the best rank-one
/// approximation of the input in Frobenius norm.
#[derive(Debug, Clone, PartialEq)]
pub struct RankOne {
    pub sigma: f64,
    pub u: CVector,
    pub v: CVector,
    pub iterations: usize,
    pub method: RankOneMethod,
}

impl RankOne {
    /// `sigma * u * v^H`.
    pub fn to_matrix(&self) -> CMatrix {
        let s = self.sigma;
        CMatrix::from_fn(self.u.len(), self.v.len(), |i, j| {
            self.u[i] * self.v[j].conj() * s
        })
    }
}

/// Deterministic dominant singular triplet of `m`.
///
/// Power iteration on `m^H m`, seeded from `m^H` applied to the normalized
/// column of `m` with the largest norm. Stops once successive singular value
/// estimates agree to [`POWER_TOLERANCE`] relative; if that does not happen
/// within [`MAX_POWER_ITERATIONS`] the full Jacobi [`svd`] is used instead.
/// The phase is fixed so that the first nonzero entry of `u` is real and
/// nonnegative. An all-zero input yields `sigma = 0` with `u`, `v` set to the
/// first canonical basis vectors.
pub fn rank_one_approx(m: &CMatrix) -> RankOne {
    let (rows, cols) = m.shape();
    if rows == 0 || cols == 0 || m.norm_sqr() == 0.0 {
        return RankOne {
            sigma: 0.0,
            u: canonical(rows),
            v: canonical(cols),
            iterations: 0,
            method: RankOneMethod::ZeroMatrix,
        };
    }

    match power_iteration(m) {
        Some((sigma, u, v, iterations)) => {
            let (u, v) = fix_phase(u, v);
            RankOne {
                sigma,
                u,
                v,
                iterations,
                method: RankOneMethod::PowerIteration,
            }
        }
        None => {
            let full = svd(m);
            let (u, v) = fix_phase(CVector::from(full.u.col(0)), CVector::from(full.v.col(0)));
            RankOne {
                sigma: full.sigma[0],
                u,
                v,
                iterations: MAX_POWER_ITERATIONS,
                method: RankOneMethod::SvdFallback,
            }
        }
    }
}

fn power_iteration(m: &CMatrix) -> Option<(f64, CVector, CVector, usize)> {
    let start = (0..m.cols())
        .map(|j| norm_sqr(m.col(j)))
        .enumerate()
        .fold(
            (0, -1.0),
            |best, (j, n)| if n > best.1 { (j, n) } else { best },
        )
        .0;
    let u0 = normalized(m.col(start))?;
    let mut v = normalized(&m.adjoint_mul_vec(&u0).ok()?)?;

    let mut prev = 0.0;
    for it in 1..=MAX_POWER_ITERATIONS {
        let w = m.mul_vec(&v).ok()?;
        let u = normalized(&w)?;
        let z = m.adjoint_mul_vec(&u).ok()?;
        let estimate = z.norm();
        v = normalized(&z)?;
        if (estimate - prev).abs() <= POWER_TOLERANCE * estimate {
            let w = m.mul_vec(&v).ok()?;
            let sigma = w.norm();
            let u = normalized(&w)?;
            return Some((sigma, u, v, it));
        }
        prev = estimate;
    }
    None
}

fn normalized(x: &[C64]) -> Option<CVector> {
    let n = norm_sqr(x).sqrt();
    if n == 0.0 || !n.is_finite() {
        return None;
    }
    let inv = 1.0 / n;
    Some(x.iter().map(|z| z * inv).collect())
}

fn canonical(n: usize) -> CVector {
    let mut e = CVector::zeros(n);
    if n > 0 {
        e[0] = C64::new(1.0, 0.0);
    }
    e
}

fn fix_phase(u: CVector, v: CVector) -> (CVector, CVector) {
    match u.iter().find(|z| z.norm() > PHASE_THRESHOLD) {
        Some(&lead) => {
            let rot = (lead / lead.norm()).conj();
            (u.scale(rot), v.scale(rot))
        }
        None => (u, v),
    }
}

/// Thin singular value decomposition `m = u * diag(sigma) * v^H` with
/// singular values in descending order. `u` is `rows x k`, `v` is `cols x k`,
/// `k = min(rows, cols)`.
#[derive(Debug, Clone)]
pub struct Svd {
    pub sigma: Vec<f64>,
    pub u: CMatrix,
    pub v: CMatrix,
}

/// One-sided (Hestenes) Jacobi SVD for complex matrices.
pub fn svd(m: &CMatrix) -> Svd {
    if m.cols() > m.rows() {
        let t = svd(&m.adjoint());
        return Svd {
            sigma: t.sigma,
            u: t.v,
            v: t.u,
        };
    }
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut v = CMatrix::identity(cols);

    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut rotated = false;
        for i in 0..cols {
            for j in i + 1..cols {
                let alpha = norm_sqr(a.col(i));
                let beta = norm_sqr(a.col(j));
                let gamma = dot_conj(a.col(i), a.col(j));
                let g = gamma.norm();
                if g == 0.0 || g <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = (gamma / g).conj();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate(&mut a, i, j, c, s, phase);
                rotate(&mut v, i, j, c, s, phase);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<(usize, f64)> = (0..cols).map(|j| (j, norm_sqr(a.col(j)).sqrt())).collect();
    order.sort_by(|x, y| y.1.total_cmp(&x.1));

    let mut u_out = CMatrix::zeros(rows, cols);
    let mut v_out = CMatrix::zeros(cols, cols);
    let mut sigma = Vec::with_capacity(cols);
    for (k, &(j, s)) in order.iter().enumerate() {
        sigma.push(s);
        if s > 0.0 {
            let inv = 1.0 / s;
            for (dst, src) in u_out.col_mut(k).iter_mut().zip(a.col(j)) {
                *dst = src * inv;
            }
        } else if k < rows {
            u_out[(k, k)] = C64::new(1.0, 0.0);
        }
        v_out.col_mut(k).copy_from_slice(v.col(j));
    }
    Svd {
        sigma,
        u: u_out,
        v: v_out,
    }
}

// Column pair rotation after aligning column j with the phase of a_i^H a_j.
fn rotate(m: &mut CMatrix, i: usize, j: usize, c: f64, s: f64, phase: C64) {
    let rows = m.rows();
    let data = m.as_mut_slice();
    for k in 0..rows {
        let xi = data[i * rows + k];
        let xj = data[j * rows + k] * phase;
        data[i * rows + k] = xi * c - xj * s;
        data[j * rows + k] = xi * s + xj * c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::products::{kron_vec, unvec};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn residual(m: &CMatrix, r: &RankOne) -> f64 {
        m.sub(&r.to_matrix()).unwrap().frobenius_norm()
    }

    #[test]
    fn exact_rank_one_input() {
        let g = [c(1.0, 2.0), c(-0.5, 0.0), c(0.0, 3.0)];
        let h = [c(2.0, -1.0), c(0.25, 0.5)];
        // vec(g h^T) = h ⊗ g
        let m = unvec(&kron_vec(&h, &g), 3, 2).unwrap();
        let r = rank_one_approx(&m);
        assert_eq!(r.method, RankOneMethod::PowerIteration);
        let expected = norm_sqr(&g).sqrt() * norm_sqr(&h).sqrt();
        assert!((r.sigma - expected).abs() < 1e-12 * expected);
        assert!(residual(&m, &r) < 1e-12 * expected);
        // u ∝ g, v ∝ h*
        let ug = dot_conj(&r.u, &g).norm() / norm_sqr(&g).sqrt();
        let hc: Vec<C64> = h.iter().map(|z| z.conj()).collect();
        let vh = dot_conj(&r.v, &hc).norm() / norm_sqr(&h).sqrt();
        assert!((ug - 1.0).abs() < 1e-12 && (vh - 1.0).abs() < 1e-12);
    }

    #[test]
    fn identity_has_unit_residual() {
        let m = CMatrix::identity(2);
        let r = rank_one_approx(&m);
        assert!((r.sigma - 1.0).abs() < 1e-12);
        assert!((residual(&m, &r) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_matrix_gives_canonical_vectors() {
        let r = rank_one_approx(&CMatrix::zeros(3, 2));
        assert_eq!(r.sigma, 0.0);
        assert_eq!(r.method, RankOneMethod::ZeroMatrix);
        assert_eq!(&r.u[..], &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(&r.v[..], &[c(1.0, 0.0), c(0.0, 0.0)]);
    }

    #[test]
    fn phase_convention_and_unit_norm() {
        let m = CMatrix::from_fn(4, 3, |i, j| {
            c(
                (i * 3 + j) as f64 * 0.3 - 1.0,
                (i as f64) - (j as f64) * 0.7,
            )
        });
        let r = rank_one_approx(&m);
        assert!((r.u.norm() - 1.0).abs() < 1e-12);
        assert!((r.v.norm() - 1.0).abs() < 1e-12);
        let lead = r.u.iter().find(|z| z.norm() > PHASE_THRESHOLD).unwrap();
        assert!(lead.im.abs() < 1e-15 && lead.re > 0.0);
        assert_eq!(rank_one_approx(&m), r);
    }

    #[test]
    fn jacobi_svd_reconstructs() {
        let m = CMatrix::from_fn(3, 5, |i, j| {
            c((i + 2 * j) as f64 % 3.0 - 1.0, (i * j) as f64 * 0.25)
        });
        let s = svd(&m);
        assert_eq!(s.sigma.len(), 3);
        assert!(s.sigma.windows(2).all(|w| w[0] >= w[1]));
        let mut rebuilt = CMatrix::zeros(3, 5);
        for k in 0..3 {
            for i in 0..3 {
                for j in 0..5 {
                    rebuilt[(i, j)] += s.u[(i, k)] * s.v[(j, k)].conj() * s.sigma[k];
                }
            }
        }
        assert!(rebuilt.relative_error(&m) < 1e-12);
    }
}
