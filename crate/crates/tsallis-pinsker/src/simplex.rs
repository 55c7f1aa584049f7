//! Geometry of the probability simplex: point types, tangent directions,
//! norms, total variation, and deterministic samplers.
//!
//! Public invariants, enforced at construction and never silently repaired:
//!
//! - [`ProbVector`] — K ≥ 2 nonnegative coordinates summing to 1 within
//!   [`SIMPLEX_SUM_ABS`](crate::tolerances::SIMPLEX_SUM_ABS); the `relint`
//!   flag records whether every coordinate is strictly positive (a point of
//!   the relative interior).
//! - [`PositiveVector`] — strictly positive coordinates, a point of the open
//!   orthant (0,∞)^K; no sum constraint.
//! - [`TangentUnitVector`] — an element of the tangent ℓ₁-unit sphere T¹:
//!   coordinates sum to 0 within
//!   [`TANGENT_SUM_ABS`](crate::tolerances::TANGENT_SUM_ABS) and have ℓ₁
//!   norm 1 within [`TANGENT_NORM_ABS`](crate::tolerances::TANGENT_NORM_ABS).
//!   Signed zeros are normalized to +0.0 at construction so invariant checks
//!   are bit-stable.
//!
//! Anything named `new` or `validate` rejects bad input with an error;
//! no constructor renormalizes on the caller's behalf.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tolerances::{SIMPLEX_SUM_ABS, TANGENT_NORM_ABS, TANGENT_SUM_ABS};

/// A point of the probability simplex Δ^K (boundary allowed).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbVector {
    coords: Vec<f64>,
    relint: bool,
}

impl ProbVector {
    /// Validates and wraps `coords` as a simplex point.
    ///
    /// Requirements: K ≥ 2, every coordinate finite and ≥ 0, and the
    /// coordinate sum within [`SIMPLEX_SUM_ABS`] of 1. The `relint` flag is
    /// derived (all coordinates > 0), not supplied.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::Shape(format!(
                "a probability vector needs K >= 2 coordinates, got {}",
                coords.len()
            )));
        }
        for (i, &c) in coords.iter().enumerate() {
            if !c.is_finite() {
                return Err(Error::Domain(format!("coordinate {i} is not finite: {c}")));
            }
            if c < 0.0 {
                return Err(Error::Domain(format!("coordinate {i} is negative: {c}")));
            }
        }
        let sum: f64 = coords.iter().sum();
        if (sum - 1.0).abs() > SIMPLEX_SUM_ABS {
            return Err(Error::Domain(format!(
                "coordinate sum {sum:.17} differs from 1 by more than {SIMPLEX_SUM_ABS:.0e}"
            )));
        }
        let relint = coords.iter().all(|&c| c > 0.0);
        Ok(Self { coords, relint })
    }

    /// Coordinates as a slice.
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Dimension K.
    pub fn k(&self) -> usize {
        self.coords.len()
    }

    /// Whether the point lies in the relative interior (all coordinates > 0).
    pub fn is_relint(&self) -> bool {
        self.relint
    }

    /// Reinterprets a relative-interior point as an orthant point.
    ///
    /// Errors with a domain error if any coordinate is zero: boundary simplex
    /// points are not orthant points.
    pub fn to_positive(&self) -> Result<PositiveVector> {
        if !self.relint {
            return Err(Error::Domain(
                "zero coordinate: the relative interior is required to view a \
                 simplex point as an orthant point"
                    .into(),
            ));
        }
        PositiveVector::new(self.coords.clone())
    }
}

/// A point of the open positive orthant (0,∞)^K.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PositiveVector {
    coords: Vec<f64>,
}

impl PositiveVector {
    /// Validates and wraps `coords` as an orthant point: nonempty, every
    /// coordinate finite and strictly positive.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Shape(
                "an orthant point needs at least one coordinate".into(),
            ));
        }
        for (i, &c) in coords.iter().enumerate() {
            if !c.is_finite() {
                return Err(Error::Domain(format!("coordinate {i} is not finite: {c}")));
            }
            if c <= 0.0 {
                return Err(Error::Domain(format!(
                    "coordinate {i} is not strictly positive: {c}"
                )));
            }
        }
        Ok(Self { coords })
    }

    /// Coordinates as a slice.
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Dimension K.
    pub fn k(&self) -> usize {
        self.coords.len()
    }
}

/// An element of the tangent ℓ₁-unit sphere T¹ = {v : Σv_k = 0, ‖v‖₁ = 1}.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TangentUnitVector {
    coords: Vec<f64>,
}

impl TangentUnitVector {
    /// Validates and wraps `coords` as a tangent unit vector.
    ///
    /// Requirements: K ≥ 2, finite coordinates, Σv_k = 0 within
    /// [`TANGENT_SUM_ABS`], ‖v‖₁ = 1 within [`TANGENT_NORM_ABS`]. Signed
    /// zeros are normalized to +0.0 so downstream comparisons are bit-stable.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::Shape(format!(
                "a tangent vector needs K >= 2 coordinates, got {}",
                coords.len()
            )));
        }
        let mut coords = coords;
        for (i, c) in coords.iter_mut().enumerate() {
            if !c.is_finite() {
                return Err(Error::Domain(format!("coordinate {i} is not finite: {c}")));
            }
            if *c == 0.0 {
                *c = 0.0; // collapse -0.0 to +0.0
            }
        }
        let sum: f64 = coords.iter().sum();
        if sum.abs() > TANGENT_SUM_ABS {
            return Err(Error::Domain(format!(
                "tangent coordinate sum {sum:.3e} exceeds {TANGENT_SUM_ABS:.0e}"
            )));
        }
        let l1: f64 = coords.iter().map(|c| c.abs()).sum();
        if (l1 - 1.0).abs() > TANGENT_NORM_ABS {
            return Err(Error::Domain(format!(
                "tangent l1 norm {l1:.17} differs from 1 by more than {TANGENT_NORM_ABS:.0e}"
            )));
        }
        Ok(Self { coords })
    }

    /// Coordinates as a slice.
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Dimension K.
    pub fn k(&self) -> usize {
        self.coords.len()
    }
}

/// Minkowski (quasi-)norm ‖x‖_β = (Σ_k |x_k|^β)^(1/β) for β > 0.
///
/// For 0 < β < 1 this is the usual quasi-norm with the same formula.
/// Nonpositive or non-finite `beta` is a parameter error.
pub fn lp_norm(x: &[f64], beta: f64) -> Result<f64> {
    if !beta.is_finite() || beta <= 0.0 {
        return Err(Error::Parameter(format!(
            "norm exponent beta must be a positive real, got {beta}"
        )));
    }
    if beta == 1.0 {
        return Ok(x.iter().map(|c| c.abs()).sum());
    }
    if beta == 2.0 {
        return Ok(x.iter().map(|c| c * c).sum::<f64>().sqrt());
    }
    let sum: f64 = x.iter().map(|c| c.abs().powf(beta)).sum();
    Ok(sum.powf(1.0 / beta))
}

/// Total-variation distance TV(p, q) = ½‖p − q‖₁.
///
/// Computed literally as half the ℓ₁ norm of the coordinate difference — the
/// same floating computation as [`lp_norm`] with β = 1 — which equals the
/// subset supremum sup_C |Σ_{k∈C} (p_k − q_k)| (see
/// [`tv_distance_subset_oracle`] for the brute-force cross-check).
pub fn tv_distance(p: &ProbVector, q: &ProbVector) -> Result<f64> {
    if p.k() != q.k() {
        return Err(Error::Parameter(format!(
            "dimension mismatch: {} vs {}",
            p.k(),
            q.k()
        )));
    }
    let diff: Vec<f64> = p
        .coords()
        .iter()
        .zip(q.coords())
        .map(|(a, b)| a - b)
        .collect();
    Ok(0.5 * lp_norm(&diff, 1.0)?)
}

/// Brute-force subset supremum sup_C |Σ_{k∈C}(p_k − q_k)| over all 2^K
/// coordinate subsets.
///
/// Independent oracle for [`tv_distance`]; exponential in K, so K ≤ 20 is
/// enforced. Intended for tests and verification, not production use.
pub fn tv_distance_subset_oracle(p: &ProbVector, q: &ProbVector) -> Result<f64> {
    if p.k() != q.k() {
        return Err(Error::Parameter(format!(
            "dimension mismatch: {} vs {}",
            p.k(),
            q.k()
        )));
    }
    let k = p.k();
    if k > 20 {
        return Err(Error::Parameter(format!(
            "subset oracle is exponential in K; K = {k} exceeds 20"
        )));
    }
    let d: Vec<f64> = p
        .coords()
        .iter()
        .zip(q.coords())
        .map(|(a, b)| a - b)
        .collect();
    let mut sup = 0.0f64;
    for mask in 0u32..(1u32 << k) {
        let mut s = 0.0;
        for (i, &di) in d.iter().enumerate() {
            if mask & (1 << i) != 0 {
                s += di;
            }
        }
        sup = sup.max(s.abs());
    }
    Ok(sup)
}

/// Draws a point of relint(Δ^K) with every coordinate ≥ `margin`,
/// deterministically from `rng_seed`.
///
/// Distribution: symmetric Dirichlet(1) — i.e. uniform on the simplex,
/// realized by normalizing i.i.d. Exponential(1) draws — followed by the
/// affine margin shift x ↦ margin + (1 − K·margin)·x, which is uniform on
/// the margin-shrunk simplex. Requires K ≥ 2 and 0 < margin < 1/K.
pub fn sample_relint(k: usize, rng_seed: u64, margin: f64) -> Result<ProbVector> {
    let mut rng = ChaCha12Rng::seed_from_u64(rng_seed);
    sample_relint_with(&mut rng, k, margin)
}

/// [`sample_relint`] driven by an existing RNG (used by the verification
/// harness to draw many points from one per-cell stream).
pub fn sample_relint_with<R: Rng + ?Sized>(
    rng: &mut R,
    k: usize,
    margin: f64,
) -> Result<ProbVector> {
    if k < 2 {
        return Err(Error::Parameter(format!("K must be >= 2, got {k}")));
    }
    if !(margin > 0.0 && margin < 1.0 / k as f64) {
        return Err(Error::Parameter(format!(
            "margin must lie in (0, 1/K) = (0, {:.6}), got {margin}",
            1.0 / k as f64
        )));
    }
    let mut e = vec![0.0f64; k];
    let mut sum = 0.0;
    for ei in e.iter_mut() {
        // Exponential(1) via inverse CDF; reject the measure-zero u = 0.
        let mut u: f64 = rng.random();
        while u <= 0.0 {
            u = rng.random();
        }
        *ei = -u.ln();
        sum += *ei;
    }
    let scale = 1.0 - k as f64 * margin;
    let coords: Vec<f64> = e.iter().map(|&ei| margin + scale * (ei / sum)).collect();
    ProbVector::new(coords)
}

/// Draws an element of the tangent ℓ₁-unit sphere T¹, deterministically from
/// `rng_seed`.
///
/// Scheme: i.i.d. uniform coordinates are centered to sum zero (two
/// compensation passes keep the residual at ~1e-17) and scaled to unit ℓ₁
/// norm. For K = 2 the only possible outputs are ±(1/2, −1/2). Requires
/// K ≥ 2.
pub fn sample_tangent_unit(k: usize, rng_seed: u64) -> Result<TangentUnitVector> {
    let mut rng = ChaCha12Rng::seed_from_u64(rng_seed);
    sample_tangent_unit_with(&mut rng, k)
}

/// [`sample_tangent_unit`] driven by an existing RNG.
pub fn sample_tangent_unit_with<R: Rng + ?Sized>(
    rng: &mut R,
    k: usize,
) -> Result<TangentUnitVector> {
    if k < 2 {
        return Err(Error::Parameter(format!("K must be >= 2, got {k}")));
    }
    loop {
        let mut v: Vec<f64> = (0..k).map(|_| rng.random::<f64>() - 0.5).collect();
        // Center twice: the second pass removes the rounding residual of the
        // first, leaving |Σv| at the 1e-17 level.
        for _ in 0..2 {
            let mean = v.iter().sum::<f64>() / k as f64;
            for vi in v.iter_mut() {
                *vi -= mean;
            }
        }
        let l1: f64 = v.iter().map(|c| c.abs()).sum();
        if l1 < 1e-9 {
            continue; // degenerate draw; resample
        }
        for vi in v.iter_mut() {
            *vi /= l1;
            if *vi == 0.0 {
                *vi = 0.0; // collapse -0.0
            }
        }
        return TangentUnitVector::new(v);
    }
}
