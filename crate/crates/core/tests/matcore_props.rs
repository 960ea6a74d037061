//! Algebraic identities checked against explicit index loops, and the
//! rank-one approximation checked against an independent SVD (nalgebra).

mod common;

use bdris_core::matcore::{
    dft_matrix, khatri_rao, kron, kron_vec, kron_vec_permutation, rank_one_approx, svd, unvec, vec,
    weyl_heisenberg_basis, CMatrix, C64,
};
use common::{random_matrix, random_vec, rel, rng};
use nalgebra::DMatrix;
use proptest::prelude::*;

const TOL: f64 = 1e-12;

// vec(A X B) entry (i + j*rows) = Σ_k Σ_l A(i,k) X(k,l) B(l,j)
fn brute_vec_triple(a: &CMatrix, x: &CMatrix, b: &CMatrix) -> Vec<C64> {
    let mut out = Vec::new();
    for j in 0..b.cols() {
        for i in 0..a.rows() {
            let mut s = C64::new(0.0, 0.0);
            for k in 0..a.cols() {
                for l in 0..x.cols() {
                    s += a[(i, k)] * x[(k, l)] * b[(l, j)];
                }
            }
            out.push(s);
        }
    }
    out
}

fn brute_kron_vec(a: &[C64], b: &[C64]) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); a.len() * b.len()];
    for i in 0..a.len() {
        for j in 0..b.len() {
            out[i * b.len() + j] = a[i] * b[j];
        }
    }
    out
}

fn to_nalgebra(m: &CMatrix) -> DMatrix<C64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vec_of_triple_product(r in 1usize..4, k in 1usize..4, l in 1usize..4, c in 1usize..4, seed: u64) {
        let mut g = rng(seed);
        let a = random_matrix(&mut g, r, k);
        let x = random_matrix(&mut g, k, l);
        let b = random_matrix(&mut g, l, c);
        let lhs = brute_vec_triple(&a, &x, &b);
        let rhs = kron(&b.transpose(), &a).mul_vec(&vec(&x)).unwrap();
        prop_assert!(rel(&rhs, &lhs) < TOL);
    }

    #[test]
    fn vec_of_diagonal_sandwich(r in 1usize..4, k in 1usize..5, c in 1usize..4, seed: u64) {
        let mut g = rng(seed);
        let a = random_matrix(&mut g, r, k);
        let bvec = random_vec(&mut g, k);
        let cm = random_matrix(&mut g, k, c);
        let d = bdris_core::matcore::diag(&bvec);
        let lhs = brute_vec_triple(&a, &d, &cm);
        let rhs = khatri_rao(&cm.transpose(), &a).unwrap().mul_vec(&bvec).unwrap();
        prop_assert!(rel(&rhs, &lhs) < TOL);
    }

    #[test]
    fn kron_vectorization_permutation(mt in 1usize..4, mr in 1usize..4, nbar in 1usize..4, seed: u64) {
        let mut g = rng(seed);
        let a = random_matrix(&mut g, mt, nbar);
        let b = random_matrix(&mut g, mr, nbar);
        let p = kron_vec_permutation(mt, mr, nbar);
        let permuted = p.apply(&vec(&kron(&a, &b))).unwrap();
        let expected = brute_kron_vec(a.as_slice(), b.as_slice());
        prop_assert_eq!(permuted, expected);
        let mut sorted = p.forward().to_vec();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..p.len()).collect::<Vec<_>>());
    }

    #[test]
    fn vec_of_outer_product(la in 1usize..6, lb in 1usize..6, seed: u64) {
        let mut g = rng(seed);
        let a = random_vec(&mut g, la);
        let b = random_vec(&mut g, lb);
        let outer = CMatrix::from_fn(la, lb, |i, j| a[i] * b[j]);
        prop_assert!(rel(&kron_vec(&b, &a), vec(&outer).as_ref()) < TOL);
    }

    #[test]
    fn unvec_inverts_vec(r in 1usize..6, c in 1usize..6, seed: u64) {
        let a = random_matrix(&mut rng(seed), r, c);
        prop_assert_eq!(unvec(&vec(&a), r, c).unwrap(), a);
    }

    #[test]
    fn rank_one_matches_reference_svd(r in 1usize..7, c in 1usize..7, seed: u64) {
        let m = random_matrix(&mut rng(seed), r, c);
        let reference = to_nalgebra(&m).svd(false, false).singular_values;
        let approx = rank_one_approx(&m);
        prop_assert!((approx.sigma - reference[0]).abs() <= 1e-9 * reference[0]);
    }
}

#[test]
fn rank_one_residual_is_optimal_on_random_square_matrices() {
    let mut g = rng(2024);
    for _ in 0..200 {
        let m = random_matrix(&mut g, 8, 8);
        let s = to_nalgebra(&m).svd(false, false).singular_values;
        let optimal = s.iter().skip(1).map(|x| x * x).sum::<f64>().sqrt();
        let approx = rank_one_approx(&m);
        let residual = m.sub(&approx.to_matrix()).unwrap().frobenius_norm();
        assert!(
            residual <= optimal * (1.0 + 1e-9),
            "residual {residual} vs optimal {optimal}"
        );
    }
}

#[test]
fn rank_one_plus_noise_residual_bounded_by_noise() {
    let mut g = rng(7);
    for eps in [1e-6, 1e-3, 1e-1] {
        let a = random_vec(&mut g, 6);
        let b = random_vec(&mut g, 5);
        let clean = CMatrix::from_fn(6, 5, |i, j| a[i] * b[j]);
        let noise = random_matrix(&mut g, 6, 5);
        let noise = noise.scale_real(eps / noise.frobenius_norm());
        let m = clean.add(&noise).unwrap();
        let r = rank_one_approx(&m);
        let residual = m.sub(&r.to_matrix()).unwrap().frobenius_norm();
        assert!(residual <= eps, "eps {eps}: residual {residual}");
    }
}

#[test]
fn jacobi_svd_agrees_with_reference() {
    let mut g = rng(99);
    for &(r, c) in &[(8, 8), (5, 3), (3, 7), (1, 4)] {
        let m = random_matrix(&mut g, r, c);
        let ours = svd(&m);
        let reference = to_nalgebra(&m).svd(false, false).singular_values;
        for (x, y) in ours.sigma.iter().zip(reference.iter()) {
            assert!((x - y).abs() < 1e-12 * reference[0]);
        }
    }
}

#[test]
fn rank_one_is_deterministic() {
    let m = random_matrix(&mut rng(5), 6, 4);
    assert_eq!(rank_one_approx(&m), rank_one_approx(&m.clone()));
}

#[test]
fn dft_gram_is_scaled_identity() {
    for n in 1..=16 {
        let f = dft_matrix(n);
        let gram = f.adjoint().matmul(&f).unwrap();
        let target = CMatrix::identity(n).scale_real(n as f64);
        assert!(gram.relative_error(&target) < 1e-12, "n = {n}");
    }
}

#[test]
fn weyl_heisenberg_unitary_and_complete() {
    for nbar in 1..=6 {
        let basis = weyl_heisenberg_basis(nbar);
        assert_eq!(basis.len(), nbar * nbar);
        let mut completeness = CMatrix::zeros(nbar * nbar, nbar * nbar);
        for u in &basis {
            let gram = u.adjoint().matmul(u).unwrap();
            assert!(gram.relative_error(&CMatrix::identity(nbar)) < 1e-12);
            let v = vec(u);
            for j in 0..v.len() {
                for i in 0..v.len() {
                    completeness[(i, j)] += v[i] * v[j].conj();
                }
            }
        }
        let target = CMatrix::identity(nbar * nbar).scale_real(nbar as f64);
        assert!(
            completeness.relative_error(&target) < 1e-12,
            "nbar = {nbar}"
        );
    }
}

#[test]
fn weyl_heisenberg_trace_inner_products_nbar_two() {
    let basis = weyl_heisenberg_basis(2);
    for (a, ua) in basis.iter().enumerate() {
        for (b, ub) in basis.iter().enumerate() {
            let ip: C64 = vec(ua)
                .iter()
                .zip(vec(ub).iter())
                .map(|(x, y)| x.conj() * y)
                .sum();
            let expected = if a == b { 2.0 } else { 0.0 };
            assert!((ip - C64::new(expected, 0.0)).norm() < 1e-14);
        }
    }
}
