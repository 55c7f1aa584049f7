//! The variational side of the sharp constants: the quadratic-form
//! reformulation C_{α,K} = inf Σ_k v_k²γ_k^{α−2} over (γ, v), the explicit
//! optimizers of its two supporting subproblems, and concrete witness
//! families —
//! curves t ↦ (p(t), q(t)) that either attain a constant in the limit
//! (sharpness) or drive the ratio to zero where no inequality holds.
//!
//! Conventions: witness ratios follow the C/2 convention 2·D_α/‖p−q‖₁²
//! everywhere except the no-Pinsker family, whose classical closed form
//! t^{α−2}·(5^{α−1}−3^{α−1})/(2(α−1)·4^{α−1}) is stated for D_α/‖p−q‖₁²;
//! that family reports the undoubled ratio to match its closed form.

use serde::Serialize;

use crate::divergences::bregman_slices;
use crate::error::{Error, Result};
use crate::pinsker::sharp_constant;
use crate::simplex::{lp_norm, PositiveVector, ProbVector, TangentUnitVector};
use crate::tolerances::WITNESS_DELTA_DEFAULT;
use crate::tsallis::{powa, AlphaParam};

/// An evaluated point of the variational quadratic form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadraticFormPoint {
    /// The relative-interior base point γ.
    pub gamma: ProbVector,
    /// The unit tangent direction v (Σv = 0, ‖v‖₁ = 1).
    pub v: TangentUnitVector,
    /// Σ_k v_k²·γ_k^{α−2}; its infimum over (γ, v) equals C_{α,K}.
    pub value: f64,
}

/// The quadratic form Σ_k v_k²·γ_k^{α−2} of the variational reformulation.
pub fn quadratic_form(
    alpha: &AlphaParam,
    gamma: &ProbVector,
    v: &TangentUnitVector,
) -> Result<QuadraticFormPoint> {
    if gamma.k() != v.k() {
        return Err(Error::Parameter(format!(
            "dimension mismatch: gamma has {} coordinates, v has {}",
            gamma.k(),
            v.k()
        )));
    }
    if !gamma.is_relint() {
        return Err(Error::Domain(
            "zero coordinate: the quadratic form needs gamma in the relative interior".into(),
        ));
    }
    let a = alpha.value();
    let value = gamma
        .coords()
        .iter()
        .zip(v.coords())
        .map(|(&g, &vk)| vk * vk * powa(g, a - 2.0))
        .sum();
    Ok(QuadraticFormPoint {
        gamma: gamma.clone(),
        v: v.clone(),
        value,
    })
}

/// The minimizer of Σ_k λ_k·γ_k^{−ν} over the simplex, with its flag.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaOptimum {
    /// γ̂_k = λ_k^{1/(ν+1)} / Σ_i λ_i^{1/(ν+1)} (zeros where λ_k = 0).
    pub gamma: ProbVector,
    /// The infimum (Σ_k λ_k^{1/(ν+1)})^{ν+1}.
    pub value: f64,
    /// True when some λ_k = 0, so the infimum is only approached at the
    /// boundary (the returned γ̂ is the boundary limit point).
    pub boundary: bool,
}

/// Minimizes F(γ) = Σ_k λ_k·γ_k^{−ν} over γ in the simplex: the infimum is
/// (Σ_k λ_k^{1/(ν+1)})^{ν+1}, attained at γ̂_k ∝ λ_k^{1/(ν+1)}. With zero
/// weights the same value is approached at the boundary (flagged).
pub fn optimal_gamma_for_weights(nu: f64, lambda: &[f64]) -> Result<GammaOptimum> {
    if !(nu.is_finite() && nu >= 0.0) {
        return Err(Error::Parameter(format!(
            "nu must be a nonnegative finite real, got {nu}"
        )));
    }
    if lambda.len() < 2 {
        return Err(Error::Shape(format!(
            "need at least 2 weights, got {}",
            lambda.len()
        )));
    }
    for (i, &l) in lambda.iter().enumerate() {
        if !l.is_finite() || l < 0.0 {
            return Err(Error::Domain(format!(
                "weight {i} must be a nonnegative finite real, got {l}"
            )));
        }
    }
    if lambda.iter().all(|&l| l == 0.0) {
        return Err(Error::Parameter("all weights are zero".into()));
    }
    let e = 1.0 / (nu + 1.0);
    let powers: Vec<f64> = lambda.iter().map(|&l| powa(l, e)).collect();
    let s: f64 = powers.iter().sum();
    let gamma = ProbVector::new(powers.iter().map(|&w| w / s).collect())?;
    let boundary = lambda.iter().any(|&l| l == 0.0);
    Ok(GammaOptimum {
        gamma,
        value: powa(s, nu + 1.0),
        boundary,
    })
}

/// Minimizes ‖v‖_β over the unit tangent sphere T¹ = {v : Σv = 0, ‖v‖₁ = 1}.
///
/// For 0 < β < 1 the minimum 2^{1/β−1} sits at the two-coordinate vector
/// (1/2, −1/2, 0, …); for β > 1 it is ½(m^{1−β} + M^{1−β})^{1/β} at the
/// balanced vector with m = ⌊K/2⌋ positive entries 1/(2m) followed by
/// M = ⌈K/2⌉ negative entries −1/(2M). At β = 1 every element of T¹ has
/// norm 1 and no unique minimizer exists (parameter error). Ties among
/// coordinate permutations are broken by putting positive entries first.
pub fn min_tangent_norm(beta: f64, k: usize) -> Result<(TangentUnitVector, f64)> {
    if k < 2 {
        return Err(Error::Parameter(format!("K must be at least 2, got {k}")));
    }
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::Parameter(format!(
            "beta must be a positive finite real, got {beta}"
        )));
    }
    if beta == 1.0 {
        return Err(Error::Parameter(
            "beta = 1: every unit tangent vector has the same norm, no unique minimizer".into(),
        ));
    }
    if beta < 1.0 {
        let mut coords = vec![0.0; k];
        coords[0] = 0.5;
        coords[1] = -0.5;
        let v = TangentUnitVector::new(coords)?;
        return Ok((v, powa(2.0, 1.0 / beta - 1.0)));
    }
    let m = k / 2;
    let big_m = k - m;
    let mut coords = Vec::with_capacity(k);
    coords.extend(std::iter::repeat(1.0 / (2 * m) as f64).take(m));
    coords.extend(std::iter::repeat(-1.0 / (2 * big_m) as f64).take(big_m));
    let v = TangentUnitVector::new(coords)?;
    let value = 0.5
        * powa(
            powa(m as f64, 1.0 - beta) + powa(big_m as f64, 1.0 - beta),
            1.0 / beta,
        );
    Ok((v, value))
}

/// The extremal direction u and center ζ(δ) used by the sharpness witness
/// for a given (α, K, δ); crate-internal so the verify module can jitter
/// around the same center the witness uses.
pub(crate) fn sharpness_center(
    alpha: &AlphaParam,
    k: usize,
    delta: f64,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let a = alpha.value();
    if a > 2.0 {
        return Err(Error::Parameter(format!(
            "sharpness witnesses exist for alpha <= 2, got {a}"
        )));
    }
    if k < 2 {
        return Err(Error::Parameter(format!("K must be at least 2, got {k}")));
    }
    if !(delta > 0.0 && delta < 0.5) {
        return Err(Error::Parameter(format!(
            "delta must lie in (0, 0.5), got {delta}"
        )));
    }
    if a <= 1.0 {
        // beta = 2/(3−α) ≤ 1: the minimizing direction is the
        // two-coordinate vector (at α = 1 any direction works; the same
        // canonical one is used).
        let mut u = vec![0.0; k];
        u[0] = 0.5;
        u[1] = -0.5;
        if k == 2 {
            // λ = (1/4, 1/4) is interior: ζ = (1/2, 1/2) exactly.
            return Ok((vec![0.5, 0.5], u));
        }
        // The infimum over γ is approached at the boundary; use the
        // margin-δ interior surrogate.
        let mut zeta = vec![delta / (k - 2) as f64; k];
        zeta[0] = 0.5 * (1.0 - delta);
        zeta[1] = 0.5 * (1.0 - delta);
        return Ok((zeta, u));
    }
    // 1 < α ≤ 2: interior optimum ζ_k = |u_k|^β / Σ|u_i|^β with the
    // balanced minimal-β-norm direction.
    let beta = 2.0 / (3.0 - a);
    let (u, _) = min_tangent_norm(beta, k)?;
    let weights: Vec<f64> = u.coords().iter().map(|&x| powa(x.abs(), beta)).collect();
    let s: f64 = weights.iter().sum();
    let zeta: Vec<f64> = weights.iter().map(|&w| w / s).collect();
    Ok((zeta, u.coords().to_vec()))
}

/// Largest t keeping ζ ± (t/2)u strictly inside the simplex.
pub(crate) fn t_max(zeta: &[f64], u: &[f64]) -> f64 {
    zeta.iter()
        .zip(u)
        .filter(|(_, &uk)| uk != 0.0)
        .map(|(&z, &uk)| 2.0 * z / uk.abs())
        .fold(f64::INFINITY, f64::min)
}

/// The sharpness family p̃(t) = ζ + (t/2)u, q̃(t) = ζ − (t/2)u whose ratio
/// 2·D_α/‖p−q‖₁² converges to C_{α,K} as t → 0 (and δ → 0 where the
/// boundary surrogate is involved); δ defaults to 1e-6.
pub fn sharpness_witness(alpha: &AlphaParam, k: usize, t: f64) -> Result<(ProbVector, ProbVector)> {
    sharpness_witness_with_delta(alpha, k, t, WITNESS_DELTA_DEFAULT)
}

/// [`sharpness_witness`] with an explicit interior-surrogate margin δ.
pub fn sharpness_witness_with_delta(
    alpha: &AlphaParam,
    k: usize,
    t: f64,
    delta: f64,
) -> Result<(ProbVector, ProbVector)> {
    let (zeta, u) = sharpness_center(alpha, k, delta)?;
    let tm = t_max(&zeta, &u);
    if !(t > 0.0 && t < tm) {
        return Err(Error::Parameter(format!(
            "t must lie in (0, {tm}) to keep the pair in the relative interior, got {t}"
        )));
    }
    let p: Vec<f64> = zeta
        .iter()
        .zip(&u)
        .map(|(&z, &uk)| z + 0.5 * t * uk)
        .collect();
    let q: Vec<f64> = zeta
        .iter()
        .zip(&u)
        .map(|(&z, &uk)| z - 0.5 * t * uk)
        .collect();
    Ok((ProbVector::new(p)?, ProbVector::new(q)?))
}

/// The no-Pinsker family for α > 2, K ≥ 3: mass 1 − (K−1)t on the first
/// coordinate, (3/4)t and (5/4)t on the next two (swapped between p and q),
/// t elsewhere. ‖p−q‖₁ = t, and the ratio D_α/‖p−q‖₁² equals
/// t^{α−2}·(5^{α−1}−3^{α−1})/(2(α−1)·4^{α−1}) → 0 as t → 0⁺, defeating any
/// uniform constant. Returns (p, q, predicted ratio); note the ratio of
/// this family is the undoubled D/‖·‖₁² of its closed form.
pub fn no_pinsker_witness(alpha: f64, k: usize, t: f64) -> Result<(ProbVector, ProbVector, f64)> {
    if !(alpha > 2.0) || k < 3 {
        return Err(Error::Parameter(format!(
            "the no-Pinsker family requires alpha > 2 and K >= 3, got alpha = {alpha}, K = {k}"
        )));
    }
    let upper = 1.0 / (k - 1) as f64;
    if !(t > 0.0 && t < upper) {
        return Err(Error::Parameter(format!(
            "t must lie in (0, 1/(K-1)) = (0, {upper}), got {t}"
        )));
    }
    let head = 1.0 - (k - 1) as f64 * t;
    let mut p = vec![t; k];
    let mut q = vec![t; k];
    p[0] = head;
    q[0] = head;
    p[1] = 0.75 * t;
    p[2] = 1.25 * t;
    q[1] = 1.25 * t;
    q[2] = 0.75 * t;
    let predicted = powa(t, alpha - 2.0) * (powa(5.0, alpha - 1.0) - powa(3.0, alpha - 1.0))
        / (2.0 * (alpha - 1.0) * powa(4.0, alpha - 1.0));
    Ok((ProbVector::new(p)?, ProbVector::new(q)?, predicted))
}

/// The orthant failure witness for α ≠ 2: q(t) = t·1 and p(t) = q(t) + ε·e₁
/// with ε = 1/t for α < 2 and ε = t for α > 2. Returns (p, q, ratio) with
/// ratio = 2·D_α/‖p−q‖₁² ≈ t^{α−2} + o(1), which → 0 along t → ∞ (α < 2)
/// or t → 0⁺ (α > 2): no uniform orthant inequality exists off α = 2.
pub fn orthant_witness(
    alpha: &AlphaParam,
    k: usize,
    t: f64,
) -> Result<(PositiveVector, PositiveVector, f64)> {
    let a = alpha.value();
    if a == 2.0 {
        return Err(Error::Parameter(
            "alpha = 2 admits the uniform orthant constant 1/K; no failure witness exists".into(),
        ));
    }
    if k < 2 {
        return Err(Error::Parameter(format!("K must be at least 2, got {k}")));
    }
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::Parameter(format!(
            "t must be a positive real, got {t}"
        )));
    }
    let eps = if a < 2.0 { 1.0 / t } else { t };
    let q = vec![t; k];
    let mut p = q.clone();
    p[0] = t + eps;
    let d = bregman_slices(alpha, &p, &q);
    let ratio = 2.0 * d / (eps * eps);
    Ok((PositiveVector::new(p)?, PositiveVector::new(q)?, ratio))
}

/// The α = 2 orthant equality witness: p uniform on [K], q = p + t·1.
/// Returns (p, q, ratio) with ratio = 2·D₂/‖p−q‖₁² = 1/K exactly — the
/// orthant constant is attained along the diagonal direction.
pub fn orthant_alpha2_witness(k: usize, t: f64) -> Result<(PositiveVector, PositiveVector, f64)> {
    if k < 2 {
        return Err(Error::Parameter(format!("K must be at least 2, got {k}")));
    }
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::Parameter(format!(
            "t must be a positive real, got {t}"
        )));
    }
    let p = vec![1.0 / k as f64; k];
    let q: Vec<f64> = p.iter().map(|&x| x + t).collect();
    let alpha2 = AlphaParam::new(2.0)?;
    let d = bregman_slices(&alpha2, &p, &q);
    let l1 = k as f64 * t;
    let ratio = 2.0 * d / (l1 * l1);
    Ok((PositiveVector::new(p)?, PositiveVector::new(q)?, ratio))
}

/// The witness families exposed to the CLI and the verification grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    /// ζ ± (t/2)u approaching the sharp constant (α ≤ 2).
    #[serde(rename = "SHARPNESS")]
    Sharpness,
    /// The α > 2, K ≥ 3 family with ratio ∝ t^{α−2} → 0.
    #[serde(rename = "NO_PINSKER_APPENDIX_D")]
    NoPinskerAppendixD,
    /// The orthant equality family q = p + t·1 at α = 2 (ratio ≡ 1/K).
    #[serde(rename = "ORTHANT_ALPHA2")]
    OrthantAlpha2,
    /// The orthant failure family q = t·1, p = q + ε·e₁ for α ≠ 2.
    #[serde(rename = "ORTHANT_GENERAL")]
    OrthantGeneral,
}

impl std::fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            WitnessKind::Sharpness => "SHARPNESS",
            WitnessKind::NoPinskerAppendixD => "NO_PINSKER_APPENDIX_D",
            WitnessKind::OrthantAlpha2 => "ORTHANT_ALPHA2",
            WitnessKind::OrthantGeneral => "ORTHANT_GENERAL",
        };
        f.write_str(s)
    }
}

/// One evaluated point of a witness family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessPoint {
    /// The curve parameter.
    pub t: f64,
    /// p(t).
    pub p: Vec<f64>,
    /// q(t).
    pub q: Vec<f64>,
    /// The numerically computed ratio (2D/‖·‖₁², except D/‖·‖₁² for the
    /// no-Pinsker family, matching its closed form).
    pub ratio: f64,
    /// The closed-form target: C_{α,K} for sharpness, the decay law for
    /// the no-Pinsker family, 1/K for the α = 2 orthant family, and the
    /// asymptotic t^{α−2} for the general orthant family.
    pub predicted: f64,
}

/// An immutable witness-family descriptor: a kind plus its parameters,
/// evaluable at any valid t.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WitnessFamily {
    /// Which family.
    pub kind: WitnessKind,
    /// The α parameter (2.0 for `OrthantAlpha2`).
    pub alpha: f64,
    /// The dimension K.
    pub k: usize,
    /// Interior-surrogate margin (sharpness only; ignored elsewhere).
    pub delta: f64,
}

impl WitnessFamily {
    /// Builds a descriptor, validating the (kind, α, K) combination.
    pub fn new(kind: WitnessKind, alpha: f64, k: usize) -> Result<Self> {
        Self::with_delta(kind, alpha, k, WITNESS_DELTA_DEFAULT)
    }

    /// [`WitnessFamily::new`] with an explicit sharpness margin δ.
    pub fn with_delta(kind: WitnessKind, alpha: f64, k: usize, delta: f64) -> Result<Self> {
        if k < 2 {
            return Err(Error::Parameter(format!("K must be at least 2, got {k}")));
        }
        match kind {
            WitnessKind::Sharpness => {
                let a = AlphaParam::new(alpha)?;
                // Validates alpha <= 2, K, delta.
                sharpness_center(&a, k, delta)?;
            }
            WitnessKind::NoPinskerAppendixD => {
                if !(alpha > 2.0) || k < 3 {
                    return Err(Error::Parameter(format!(
                        "the no-Pinsker family requires alpha > 2 and K >= 3, \
                         got alpha = {alpha}, K = {k}"
                    )));
                }
            }
            WitnessKind::OrthantAlpha2 => {
                if alpha != 2.0 {
                    return Err(Error::Parameter(format!(
                        "the orthant equality family is defined at alpha = 2, got {alpha}"
                    )));
                }
            }
            WitnessKind::OrthantGeneral => {
                if alpha == 2.0 {
                    return Err(Error::Parameter(
                        "alpha = 2 admits the uniform orthant constant 1/K; \
                         no failure witness exists"
                            .into(),
                    ));
                }
                AlphaParam::new(alpha)?;
            }
        }
        Ok(Self {
            kind,
            alpha,
            k,
            delta,
        })
    }

    /// Evaluates the family at t, returning the pair, the computed ratio,
    /// and the closed-form prediction.
    pub fn evaluate(&self, t: f64) -> Result<WitnessPoint> {
        match self.kind {
            WitnessKind::Sharpness => {
                let alpha = AlphaParam::new(self.alpha)?;
                let (p, q) = sharpness_witness_with_delta(&alpha, self.k, t, self.delta)?;
                let diff: Vec<f64> = p
                    .coords()
                    .iter()
                    .zip(q.coords())
                    .map(|(&a, &b)| a - b)
                    .collect();
                let l1 = lp_norm(&diff, 1.0)?;
                let d = bregman_slices(&alpha, p.coords(), q.coords());
                let predicted = sharp_constant(&alpha, self.k)?.value;
                Ok(WitnessPoint {
                    t,
                    p: p.coords().to_vec(),
                    q: q.coords().to_vec(),
                    ratio: 2.0 * d / (l1 * l1),
                    predicted,
                })
            }
            WitnessKind::NoPinskerAppendixD => {
                let (p, q, predicted) = no_pinsker_witness(self.alpha, self.k, t)?;
                let alpha = AlphaParam::new(self.alpha)?;
                let d = bregman_slices(&alpha, p.coords(), q.coords());
                let ratio = d / (t * t);
                Ok(WitnessPoint {
                    t,
                    p: p.coords().to_vec(),
                    q: q.coords().to_vec(),
                    ratio,
                    predicted,
                })
            }
            WitnessKind::OrthantAlpha2 => {
                let (p, q, ratio) = orthant_alpha2_witness(self.k, t)?;
                Ok(WitnessPoint {
                    t,
                    p: p.coords().to_vec(),
                    q: q.coords().to_vec(),
                    ratio,
                    predicted: 1.0 / self.k as f64,
                })
            }
            WitnessKind::OrthantGeneral => {
                let alpha = AlphaParam::new(self.alpha)?;
                let (p, q, ratio) = orthant_witness(&alpha, self.k, t)?;
                Ok(WitnessPoint {
                    t,
                    p: p.coords().to_vec(),
                    q: q.coords().to_vec(),
                    ratio,
                    predicted: powa(t, self.alpha - 2.0),
                })
            }
        }
    }
}
