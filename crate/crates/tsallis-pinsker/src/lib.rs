//! Tsallis entropies, power losses, Bregman (β-) divergences, and the sharp
//! generalized Pinsker constants relating divergence to total variation.
//!
//! The crate is organized as a thin stack:
//!
//! - [`simplex`] — validated probability/orthant/tangent vector types,
//!   ℓ_β norms, total variation, and seeded samplers.
//! - [`tsallis`] — the entropy family S_α, the loss family ℓ_α, Bayes risk,
//!   and derivatives of S_α.
//! - [`divergences`] — the Bregman divergence D_α of S_α (equivalently the
//!   β-divergence family), KL, Itakura–Saito, and the Tsallis relative
//!   entropy, with series evaluation near the diagonal.
//! - [`pinsker`] — the sharp constants C_{α,K} in
//!   D_α(p‖q) ≥ (C_{α,K}/2)·‖p−q‖₁² and their supporting factors.
//! - [`extremal`] — quadratic forms, constrained minimizers, and witness
//!   families demonstrating sharpness and failure of the inequality.
//! - [`verify`] — randomized + witness-based verification suites over a
//!   grid of (α, K) cells, designed for deterministic, reproducible runs.
//!
//! All public constructors validate their inputs and return
//! [`Error`](error::Error) instead of silently renormalizing; numerical
//! tolerances are centralized and documented in [`tolerances`].

pub mod divergences;
pub mod error;
pub mod extremal;
pub mod pinsker;
pub mod simplex;
pub mod tolerances;
pub mod tsallis;
pub mod verify;

pub use error::{Error, Result};
