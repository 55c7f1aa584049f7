//! Tsallis entropies S_α, Tsallis (power) losses ℓ_α, and the first and
//! second derivatives of S_α, for every real α including the closed-form
//! special cases α ∈ {0, 1}.
//!
//! Definitions (p on the positive orthant, q a simplex point, [K] outcomes):
//!
//! - S_α(p) = Σ_k p_k^α / (α(1−α))       for α ∉ {0, 1}
//! - S_0(p) = Σ_k ln p_k                  (Burg entropy)
//! - S_1(p) = −Σ_k p_k ln p_k             (Shannon entropy)
//! - ℓ_α(q, k) = q_k^{α−1}/(1−α) + (1/α)·Σ_i q_i^α   for α ∉ {0, 1}
//! - ℓ_0(q, k) = q_k^{−1} − K + Σ_i ln q_i
//! - ℓ_1(q, k) = −ln q_k                  (log loss)
//! - ∂_i S_α(p) = −p_i^{α−1}/(α−1), with 1/p_i at α=0 and −(1+ln p_i) at α=1
//! - ∂²_ii S_α(p) = −p_i^{α−2}; off-diagonal entries are identically zero.
//!
//! Branch selection dispatches on the *exact* anchors α ∈ {0, 1} (and uses
//! direct multiplication at the integer powers α ∈ {2, 3}); no branch is ever
//! chosen by limit evaluation. Continuity of the family in α is a property
//! probed by the verification module, not an implementation device.
//!
//! Boundary conventions of the entropy (0^α = +∞ for α < 0, ln 0 = −∞,
//! 0·ln 0 = 0) are honored by [`entropy_extended`], which reports signed
//! infinities with a finiteness flag instead of erroring.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplex::{PositiveVector, ProbVector};

/// Regime classification of the parameter α used by the sharp-constant
/// theory: α ≤ 1, 1 < α ≤ 2, α > 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// α ≤ 1.
    #[serde(rename = "LE1")]
    Le1,
    /// 1 < α ≤ 2.
    #[serde(rename = "IN_1_2")]
    In1To2,
    /// α > 2.
    #[serde(rename = "GT2")]
    Gt2,
}

/// Special values of α with dedicated closed forms or exact power shortcuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Anchor {
    /// α = 0 (Burg entropy / Itakura–Saito divergence).
    Zero,
    /// α = 1 (Shannon entropy / KL divergence).
    One,
    /// α = 2 (quadratic entropy / half squared Euclidean distance).
    Two,
    /// α = 3.
    Three,
}

/// The real parameter α with its regime classification and, when α equals
/// one of {0, 1, 2, 3} exactly, the corresponding anchor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlphaParam {
    value: f64,
    regime: Regime,
    anchor: Option<Anchor>,
}

impl AlphaParam {
    /// Classifies a finite real α.
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::Parameter(format!(
                "alpha must be finite, got {value}"
            )));
        }
        let regime = if value <= 1.0 {
            Regime::Le1
        } else if value <= 2.0 {
            Regime::In1To2
        } else {
            Regime::Gt2
        };
        let anchor = if value == 0.0 {
            Some(Anchor::Zero)
        } else if value == 1.0 {
            Some(Anchor::One)
        } else if value == 2.0 {
            Some(Anchor::Two)
        } else if value == 3.0 {
            Some(Anchor::Three)
        } else {
            None
        };
        Ok(Self {
            value,
            regime,
            anchor,
        })
    }

    /// The numeric value of α.
    pub fn value(&self) -> f64 {
        self.value
    }

    /// The regime of α (α ≤ 1, 1 < α ≤ 2, α > 2).
    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// The anchor, when α is exactly one of {0, 1, 2, 3}.
    pub fn anchor(&self) -> Option<Anchor> {
        self.anchor
    }

    /// Whether α is exactly the given anchor.
    pub fn is_anchor(&self, a: Anchor) -> bool {
        self.anchor == Some(a)
    }
}

/// x^a with exact shortcuts at the small integer exponents that appear on
/// hot paths (a ∈ {−2, −1, 0, 1, 2, 3}); otherwise `powf`, i.e. exp(a·ln x).
pub(crate) fn powa(x: f64, a: f64) -> f64 {
    if a == 0.0 {
        1.0
    } else if a == 1.0 {
        x
    } else if a == 2.0 {
        x * x
    } else if a == 3.0 {
        x * x * x
    } else if a == -1.0 {
        x.recip()
    } else if a == -2.0 {
        (x * x).recip()
    } else {
        x.powf(a)
    }
}

/// An entropy value together with a finiteness flag; `finite == false` means
/// the boundary conventions of the definition produced a signed infinity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyValue {
    /// The value (±∞ allowed when `finite` is false).
    pub value: f64,
    /// Whether the value is finite.
    pub finite: bool,
}

/// Tsallis entropy S_α(p) for a strictly positive orthant point.
///
/// Σ p_k^α/(α(1−α)) for α ∉ {0,1}; Σ ln p_k at α = 0; −Σ p_k ln p_k at
/// α = 1. Branches dispatch on exact anchors, never on limits.
pub fn entropy(alpha: &AlphaParam, p: &PositiveVector) -> f64 {
    entropy_slice(alpha, p.coords())
}

/// [`entropy`] on a raw strictly-positive slice (crate-internal hot path).
pub(crate) fn entropy_slice(alpha: &AlphaParam, p: &[f64]) -> f64 {
    match alpha.anchor() {
        Some(Anchor::Zero) => p.iter().map(|&x| x.ln()).sum(),
        Some(Anchor::One) => -p.iter().map(|&x| x * x.ln()).sum::<f64>(),
        _ => {
            let a = alpha.value();
            let s: f64 = p.iter().map(|&x| powa(x, a)).sum();
            s / (a * (1.0 - a))
        }
    }
}

/// Tsallis entropy with the boundary conventions of the definition:
/// 0^α = +∞ for α < 0, ln 0 = −∞, 0·ln 0 = 0.
///
/// Accepts any finite nonnegative vector. A zero coordinate in a diverging
/// branch yields a signed-infinity [`EntropyValue`] with `finite == false`
/// rather than an error; in the convergent branches (α > 0, or α = 1 via
/// 0·ln 0 = 0) zeros contribute nothing.
pub fn entropy_extended(alpha: &AlphaParam, coords: &[f64]) -> Result<EntropyValue> {
    if coords.is_empty() {
        return Err(Error::Shape(
            "entropy of an empty vector is undefined".into(),
        ));
    }
    for (i, &c) in coords.iter().enumerate() {
        if !c.is_finite() {
            return Err(Error::Domain(format!("coordinate {i} is not finite: {c}")));
        }
        if c < 0.0 {
            return Err(Error::Domain(format!("coordinate {i} is negative: {c}")));
        }
    }
    let has_zero = coords.iter().any(|&c| c == 0.0);
    if !has_zero {
        let value = entropy_slice(alpha, coords);
        return Ok(EntropyValue {
            value,
            finite: value.is_finite(),
        });
    }
    let value = match alpha.anchor() {
        // ln 0 = −∞ dominates the sum.
        Some(Anchor::Zero) => f64::NEG_INFINITY,
        // 0·ln 0 = 0: zeros contribute nothing.
        Some(Anchor::One) => -coords
            .iter()
            .filter(|&&x| x > 0.0)
            .map(|&x| x * x.ln())
            .sum::<f64>(),
        _ => {
            let a = alpha.value();
            if a < 0.0 {
                // 0^α = +∞ for α < 0; the prefactor 1/(α(1−α)) is negative.
                f64::NEG_INFINITY
            } else {
                // 0^α = 0 for α > 0 (α ≠ 0 here since the anchor is handled).
                let s: f64 = coords.iter().map(|&x| powa(x, a)).sum();
                s / (a * (1.0 - a))
            }
        }
    };
    Ok(EntropyValue {
        value,
        finite: value.is_finite(),
    })
}

/// Tsallis loss ℓ_α(q, k) of predicting q ∈ relint(Δ^K) when outcome k
/// occurs; `k` is 1-based (k ∈ {1, …, K}).
pub fn loss(alpha: &AlphaParam, q: &ProbVector, k: usize) -> Result<f64> {
    if !q.is_relint() {
        return Err(Error::Domain(
            "zero coordinate: losses are defined on the relative interior".into(),
        ));
    }
    if k < 1 || k > q.k() {
        return Err(Error::Parameter(format!(
            "outcome index k must lie in 1..={}, got {k}",
            q.k()
        )));
    }
    let coords = q.coords();
    let qk = coords[k - 1];
    let value = match alpha.anchor() {
        Some(Anchor::One) => -qk.ln(),
        Some(Anchor::Zero) => {
            qk.recip() - coords.len() as f64 + coords.iter().map(|&x| x.ln()).sum::<f64>()
        }
        _ => {
            let a = alpha.value();
            let sum_pow: f64 = coords.iter().map(|&x| powa(x, a)).sum();
            powa(qk, a - 1.0) / (1.0 - a) + sum_pow / a
        }
    };
    Ok(value)
}

/// Bayes risk of the Tsallis loss at the truth p: E_{Y∼p}[ℓ_α(p, Y)]
/// = Σ_k p_k·ℓ_α(p, k), which equals S_α(p).
pub fn bayes_risk(alpha: &AlphaParam, p: &ProbVector) -> Result<f64> {
    if !p.is_relint() {
        return Err(Error::Domain(
            "zero coordinate: the Bayes-risk identity is evaluated on the relative interior".into(),
        ));
    }
    let mut acc = 0.0;
    for (k, &pk) in p.coords().iter().enumerate() {
        acc += pk * loss(alpha, p, k + 1)?;
    }
    Ok(acc)
}

/// Gradient of S_α: component i is −p_i^{α−1}/(α−1), with the closed forms
/// 1/p_i at α = 0 and −(1 + ln p_i) at α = 1.
pub fn entropy_gradient(alpha: &AlphaParam, p: &PositiveVector) -> Vec<f64> {
    entropy_gradient_slice(alpha, p.coords())
}

/// [`entropy_gradient`] on a raw strictly-positive slice (crate-internal).
pub(crate) fn entropy_gradient_slice(alpha: &AlphaParam, p: &[f64]) -> Vec<f64> {
    match alpha.anchor() {
        Some(Anchor::Zero) => p.iter().map(|&x| x.recip()).collect(),
        Some(Anchor::One) => p.iter().map(|&x| -(1.0 + x.ln())).collect(),
        _ => {
            let a = alpha.value();
            p.iter().map(|&x| powa(x, a - 1.0) / (1.0 - a)).collect()
        }
    }
}

/// Diagonal of the Hessian of S_α: component i is −p_i^{α−2}. The Hessian
/// is diagonal — off-diagonal entries are identically zero — so only the
/// diagonal is returned.
pub fn entropy_hessian_diag(alpha: &AlphaParam, p: &PositiveVector) -> Vec<f64> {
    let a = alpha.value();
    p.coords().iter().map(|&x| -powa(x, a - 2.0)).collect()
}
