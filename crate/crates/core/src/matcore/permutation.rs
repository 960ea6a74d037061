use alloc::vec;
use alloc::vec::Vec;

use super::C64;
use crate::error::{Error, Result};

/// A permutation stored as an index map: element `k` of the input lands at
/// position `forward[k]` of the output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationMap {
    forward: Vec<usize>,
}

impl PermutationMap {
    pub fn identity(size: usize) -> Self {
        Self {
            forward: (0..size).collect(),
        }
    }

    /// Validates that `forward` is a bijection on `0..forward.len()`.
    pub fn new(forward: Vec<usize>) -> Result<Self> {
        let n = forward.len();
        let mut seen = vec![false; n];
        for &f in &forward {
            if f >= n || seen[f] {
                return Err(Error::InvalidConfig("permutation map is not a bijection"));
            }
            seen[f] = true;
        }
        Ok(Self { forward })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.forward.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> PermutationMap {
        let mut inv = vec![0; self.forward.len()];
        for (src, &dst) in self.forward.iter().enumerate() {
            inv[dst] = src;
        }
        PermutationMap { forward: inv }
    }

    /// `out[forward[k]] = input[k]`.
    pub fn apply(&self, input: &[C64]) -> Result<Vec<C64>> {
        if input.len() != self.forward.len() {
            return Err(Error::DimensionMismatch {
                op: "permutation apply",
                expected: (self.forward.len(), 1),
                found: (input.len(), 1),
            });
        }
        let mut out = vec![C64::new(0.0, 0.0); input.len()];
        for (&dst, &x) in self.forward.iter().zip(input) {
            out[dst] = x;
        }
        Ok(out)
    }
}

/// Permutation `P` with `P · vec(A ⊗ B) = vec(A) ⊗ vec(B)` for any
/// `A` of size `mt x nbar` and `B` of size `mr x nbar`.
///
/// Source index `j * (mt*mr) + i`, where `i = ar*mr + br` and
/// `j = ac*nbar + bc`, maps to `(ac*mt + ar) * (mr*nbar) + (bc*mr + br)`.
pub fn kron_vec_permutation(mt: usize, mr: usize, nbar: usize) -> PermutationMap {
    let rows = mt * mr;
    let b_len = mr * nbar;
    let mut forward = vec![0; mt * mr * nbar * nbar];
    for ac in 0..nbar {
        for bc in 0..nbar {
            let j = ac * nbar + bc;
            for ar in 0..mt {
                for br in 0..mr {
                    let src = j * rows + ar * mr + br;
                    forward[src] = (ac * mt + ar) * b_len + bc * mr + br;
                }
            }
        }
    }
    PermutationMap { forward }
}
