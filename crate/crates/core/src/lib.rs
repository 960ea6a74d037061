//! Channel estimation kernels for MIMO links assisted by a group-connected
//! beyond-diagonal reconfigurable intelligent surface (BD-RIS).
//!
//! The crate is `no_std` (it only needs `alloc`) and is split into three layers:
//!
//! * [`matcore`]: dense column-major complex matrices, Kronecker and
//!   Khatri-Rao products, vec/unvec, the Kronecker vectorization permutation,
//!   rank-one approximation and the DFT / shift-and-modulate generators.
//! * [`model`]: system dimensions, i.i.d. Rayleigh channel draws, the
//!   orthogonal pilot/scattering training design and received-signal
//!   synthesis.
//! * [`estimators`]: the least-squares matched filter for the combined
//!   channel and the Khatri-Rao factorization (KRF) that splits it into
//!   per-group transmit and receive factors.
//!
//! Everything random is driven by a caller-supplied [`rand::Rng`], so a seed
//! and a configuration fully determine every sample.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod estimators;
pub mod matcore;
pub mod model;

pub use error::{Error, Result};
pub use estimators::{
    evaluate, krf_decouple, ls_matched_filter, nmse, reconstruct_combined, resolve_ambiguity,
    AlignedFactors, EstimateReport, KrfEstimate, LsEstimate,
};
pub use matcore::{CMatrix, CVector, PermutationMap, C64};
pub use model::{
    build_training, combined_channel, generate_channels, synthesize_rx, ChannelPair,
    CombinedChannel, SystemConfig, TrainingDesign,
};
