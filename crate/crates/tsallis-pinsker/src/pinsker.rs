//! The sharp generalized Pinsker constants C_{α,K} — the largest C such
//! that D_α(p‖q) ≥ (C/2)·‖p−q‖₁² on relint(Δ^K) — with the parity factor
//! σ_{α,K}, the strong-convexity consequence, the α = 2 orthant constant,
//! the clipped-regime constants, and the 0–1 regret comparison.
//!
//! The five-case closed form:
//!
//! | regime                  | C_{α,K}                    |
//! |-------------------------|----------------------------|
//! | α ≤ 1                   | 2^{1−α}                    |
//! | α ∈ (1,2], K even       | K^{1−α}                    |
//! | α ∈ (1,2], K odd        | K^{1−α}·σ_{α,K}            |
//! | α > 2, K = 2            | 2^{1−max{α,3}}             |
//! | α > 2, K ≥ 3            | 0 (no inequality holds)    |
//!
//! with σ_{α,K} = (((1−1/K)^e + (1+1/K)^e)/2)^{3−α}, e = (1−α)/(3−α).
//!
//! Every constant in this module is reported in the C/2 convention above —
//! one convention everywhere prevents factor-of-two bugs. In particular the
//! α = 2 orthant bound D₂ ≥ (1/(2K))·‖p−q‖₁² is stored as C = 1/K.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplex::ProbVector;
use crate::tsallis::{powa, AlphaParam};

/// The case of the sharp-constant formula a value was produced by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConstantRegime {
    /// α ≤ 1: C = 2^{1−α}, independent of K.
    #[serde(rename = "ALPHA_LE1")]
    AlphaLe1,
    /// α ∈ (1,2], K even: C = K^{1−α}.
    #[serde(rename = "ALPHA_1_2_EVEN")]
    Alpha12Even,
    /// α ∈ (1,2], K odd: C = K^{1−α}·σ_{α,K}.
    #[serde(rename = "ALPHA_1_2_ODD")]
    Alpha12Odd,
    /// α > 2, K = 2: C = 2^{1−max{α,3}}.
    #[serde(rename = "ALPHA_GT2_K2")]
    AlphaGt2K2,
    /// α > 2, K ≥ 3: C = 0; no uniform inequality holds.
    #[serde(rename = "ALPHA_GT2_KGE3")]
    AlphaGt2Kge3,
}

impl std::fmt::Display for ConstantRegime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ConstantRegime::AlphaLe1 => "ALPHA_LE1",
            ConstantRegime::Alpha12Even => "ALPHA_1_2_EVEN",
            ConstantRegime::Alpha12Odd => "ALPHA_1_2_ODD",
            ConstantRegime::AlphaGt2K2 => "ALPHA_GT2_K2",
            ConstantRegime::AlphaGt2Kge3 => "ALPHA_GT2_KGE3",
        };
        f.write_str(s)
    }
}

/// A sharp constant C_{α,K} with its regime and, in the odd-K middle
/// regime, the parity factor σ_{α,K} it contains.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PinskerConstant {
    /// The constant, in the D ≥ (C/2)·‖p−q‖₁² convention.
    pub value: f64,
    /// Which of the five cases produced it.
    pub regime: ConstantRegime,
    /// σ_{α,K}; present exactly when `regime` is `ALPHA_1_2_ODD`.
    pub sigma: Option<f64>,
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Parameter(format!("K must be at least 2, got {k}")));
    }
    Ok(())
}

/// The sharp constant C_{α,K} (five-case closed form above).
pub fn sharp_constant(alpha: &AlphaParam, k: usize) -> Result<PinskerConstant> {
    check_k(k)?;
    let a = alpha.value();
    if a <= 1.0 {
        return Ok(PinskerConstant {
            value: powa(2.0, 1.0 - a),
            regime: ConstantRegime::AlphaLe1,
            sigma: None,
        });
    }
    if a <= 2.0 {
        let base = powa(k as f64, 1.0 - a);
        if k % 2 == 0 {
            return Ok(PinskerConstant {
                value: base,
                regime: ConstantRegime::Alpha12Even,
                sigma: None,
            });
        }
        let sigma = sigma_factor(a, k)?;
        return Ok(PinskerConstant {
            value: base * sigma,
            regime: ConstantRegime::Alpha12Odd,
            sigma: Some(sigma),
        });
    }
    if k == 2 {
        return Ok(PinskerConstant {
            value: powa(2.0, 1.0 - a.max(3.0)),
            regime: ConstantRegime::AlphaGt2K2,
            sigma: None,
        });
    }
    Ok(PinskerConstant {
        value: 0.0,
        regime: ConstantRegime::AlphaGt2Kge3,
        sigma: None,
    })
}

/// The odd-K parity factor
/// σ_{α,K} = (((1−1/K)^e + (1+1/K)^e)/2)^{3−α} with e = (1−α)/(3−α),
/// for α ∈ (1,2] and odd K ≥ 3.
///
/// The powers are evaluated in the stable form exp(e·ln(1±1/K)) (`powf`);
/// at α = 2 the exponent is exactly e = −1 and the powers reduce to exact
/// reciprocals — no limiting procedure is involved anywhere.
pub fn sigma_factor(alpha: f64, k: usize) -> Result<f64> {
    if !(alpha > 1.0 && alpha <= 2.0) {
        return Err(Error::Parameter(format!(
            "sigma factor needs alpha in (1, 2], got {alpha}"
        )));
    }
    if k < 3 || k % 2 == 0 {
        return Err(Error::Parameter(format!(
            "sigma factor needs an odd K >= 3, got {k}"
        )));
    }
    let e = (1.0 - alpha) / (3.0 - alpha);
    let inv_k = 1.0 / k as f64;
    let s = 0.5 * (powa(1.0 - inv_k, e) + powa(1.0 + inv_k, e));
    Ok(powa(s, 3.0 - alpha))
}

/// Lower bound 1 + (α−1)/((3−α)K²) on σ_{α,K} (strict).
pub fn sigma_lower_bound(alpha: f64, k: usize) -> f64 {
    1.0 + (alpha - 1.0) / ((3.0 - alpha) * (k * k) as f64)
}

/// Upper bound 1 + 7(α−1)/(6(3−α)K²) on σ_{α,K}.
pub fn sigma_upper_bound(alpha: f64, k: usize) -> f64 {
    1.0 + 7.0 * (alpha - 1.0) / (6.0 * (3.0 - alpha) * (k * k) as f64)
}

/// The ℓ₁ strong-convexity modulus of −S_α on relint(Δ^K), which equals
/// the sharp constant C_{α,K}.
pub fn strong_convexity_param(alpha: &AlphaParam, k: usize) -> Result<f64> {
    Ok(sharp_constant(alpha, k)?.value)
}

/// The α = 2 constant on the positive orthant (0,∞)^K: D₂ ≥ (C/2)·‖p−q‖₁²
/// holds with C = 1/K, attained at q = p + c·1. For every α ≠ 2 the
/// orthant admits no uniform constant at all (the infimum is 0).
pub fn orthant_constant_alpha2(k: usize) -> Result<f64> {
    check_k(k)?;
    Ok(1.0 / k as f64)
}

/// Which arguments of D_α(p‖q) are constrained to the clipped simplex
/// {x ∈ Δ^K : min_k x_k ≥ ε}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClipMode {
    /// Both p and q clipped: C = C_{2,K}·ε^{α−2}.
    #[serde(rename = "BOTH")]
    Both,
    /// Only p clipped: C = C_{2,K}·(2/(α(α−1)))·ε^{α−2}.
    #[serde(rename = "P_ONLY")]
    POnly,
    /// Only q clipped: C = C_{2,K}·(2/α)·ε^{α−2}.
    #[serde(rename = "Q_ONLY")]
    QOnly,
}

/// The clipped-regime constants restoring a Pinsker inequality for α > 2,
/// K ≥ 3 once arguments are bounded away from the boundary by ε.
pub fn clipped_constant(alpha: f64, k: usize, mode: ClipMode, eps: f64) -> Result<f64> {
    if !(alpha > 2.0) {
        return Err(Error::Parameter(format!(
            "clipped constants apply to alpha > 2, got {alpha}"
        )));
    }
    if k < 3 {
        return Err(Error::Parameter(format!(
            "clipped constants apply to K >= 3, got {k}"
        )));
    }
    if !(eps > 0.0 && eps < 1.0 / k as f64) {
        return Err(Error::Parameter(format!(
            "eps must lie in (0, 1/K) = (0, {}), got {eps}",
            1.0 / k as f64
        )));
    }
    let two = AlphaParam::new(2.0)?;
    let c2k = sharp_constant(&two, k)?.value;
    let factor = match mode {
        ClipMode::Both => 1.0,
        ClipMode::POnly => 2.0 / (alpha * (alpha - 1.0)),
        ClipMode::QOnly => 2.0 / alpha,
    };
    Ok(c2k * factor * powa(eps, alpha - 2.0))
}

/// Plug-in 0–1 regret P_{Y∼p}[Y ≠ k*_q] − P_{Y∼p}[Y ≠ k*_p]
/// = p[k*_p] − p[k*_q], with argmaxes tie-broken deterministically to the
/// lowest index. Always in [0, ‖p−q‖₁].
pub fn zero_one_regret_bound(p: &ProbVector, q: &ProbVector) -> Result<f64> {
    if p.k() != q.k() {
        return Err(Error::Parameter(format!(
            "dimension mismatch: p has {} coordinates, q has {}",
            p.k(),
            q.k()
        )));
    }
    let argmax = |c: &[f64]| -> usize {
        let mut best = 0;
        for (i, &x) in c.iter().enumerate().skip(1) {
            if x > c[best] {
                best = i;
            }
        }
        best
    };
    let kp = argmax(p.coords());
    let kq = argmax(q.coords());
    Ok(p.coords()[kp] - p.coords()[kq])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn ap(a: f64) -> AlphaParam {
        AlphaParam::new(a).unwrap()
    }

    fn c(a: f64, k: usize) -> PinskerConstant {
        sharp_constant(&ap(a), k).unwrap()
    }

    #[test]
    fn constant_values_across_regimes() {
        for k in [2, 3, 4, 5, 10] {
            assert_eq!(c(1.0, k).value, 1.0);
            assert_eq!(c(0.0, k).value, 2.0);
            assert_eq!(c(-1.0, k).value, 4.0);
            assert_abs_diff_eq!(c(-0.5, k).value, 2.8284271247461901, epsilon = 1e-15);
            assert_abs_diff_eq!(c(0.5, k).value, 1.4142135623730950, epsilon = 1e-15);
        }
        // Middle regime, even K.
        assert_eq!(c(2.0, 4).value, 0.25);
        assert_eq!(c(2.0, 2).value, 0.5);
        assert_eq!(c(2.0, 10).value, 0.1);
        assert_abs_diff_eq!(c(1.5, 2).value, 0.70710678118654752, epsilon = 1e-15);
        assert_abs_diff_eq!(c(1.5, 4).value, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(c(1.25, 4).value, 0.70710678118654752, epsilon = 1e-15);
        // Middle regime, odd K (values include sigma).
        assert_eq!(c(2.0, 3).value, 0.375);
        assert_abs_diff_eq!(c(2.0, 5).value, 0.20833333333333333, epsilon = 1e-16);
        assert_abs_diff_eq!(c(1.5, 3).value, 0.60057176677701314, epsilon = 1e-15);
        assert_abs_diff_eq!(c(1.5, 5).value, 0.45334991128480944, epsilon = 1e-15);
        assert_abs_diff_eq!(c(1.25, 3).value, 0.77276043920548479, epsilon = 1e-15);
        // Above 2, K = 2.
        assert_eq!(c(2.5, 2).value, 0.25);
        assert_eq!(c(3.0, 2).value, 0.25);
        assert_eq!(c(4.0, 2).value, 0.125);
        // Above 2, K >= 3: no inequality.
        for k in [3, 4, 5] {
            for a in [2.5, 3.0, 4.0] {
                let pc = c(a, k);
                assert_eq!(pc.value, 0.0);
                assert_eq!(pc.regime, ConstantRegime::AlphaGt2Kge3);
            }
        }
        assert!(sharp_constant(&ap(1.0), 1).is_err());
    }

    #[test]
    fn regime_tags_and_sigma_presence() {
        assert_eq!(c(0.5, 3).regime, ConstantRegime::AlphaLe1);
        assert_eq!(c(1.5, 4).regime, ConstantRegime::Alpha12Even);
        assert_eq!(c(1.5, 3).regime, ConstantRegime::Alpha12Odd);
        assert_eq!(c(3.0, 2).regime, ConstantRegime::AlphaGt2K2);
        assert!(c(1.5, 3).sigma.is_some());
        assert!(c(1.5, 4).sigma.is_none());
        assert!(c(0.5, 3).sigma.is_none());
        assert_eq!(ConstantRegime::Alpha12Odd.to_string(), "ALPHA_1_2_ODD");
    }

    #[test]
    fn sigma_closed_form_and_bounds() {
        // Exact rational value at the exponent −1 point.
        assert_eq!(sigma_factor(2.0, 3).unwrap(), 1.125);
        assert_abs_diff_eq!(
            sigma_factor(2.0, 5).unwrap(),
            1.0416666666666667,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            sigma_factor(1.5, 3).unwrap(),
            1.0402208136491930,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            sigma_factor(1.5, 5).unwrap(),
            1.0137212192263329,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            sigma_factor(1.25, 3).unwrap(),
            1.0170099322760930,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            sigma_factor(1.1, 101).unwrap(),
            1.0000051597233126,
            epsilon = 1e-15
        );
        // sigma -> 1 as alpha -> 1+.
        assert!(sigma_factor(1.0 + 1e-9, 3).unwrap() - 1.0 < 1e-9);
        // Bracketing over the (alpha, odd K) grid.
        for &a in &[1.1, 1.5, 2.0] {
            let mut k = 3;
            while k <= 101 {
                let s = sigma_factor(a, k).unwrap();
                assert!(
                    s > sigma_lower_bound(a, k) && s <= sigma_upper_bound(a, k),
                    "sigma({a},{k}) = {s} outside its bracket"
                );
                k += 2;
            }
        }
        // Gates.
        assert!(sigma_factor(1.0, 3).is_err());
        assert!(sigma_factor(2.5, 3).is_err());
        assert!(sigma_factor(1.5, 4).is_err());
        assert!(sigma_factor(1.5, 1).is_err());
    }

    #[test]
    fn odd_k_exceeds_even_formula() {
        for &a in &[1.1, 1.5, 1.9, 2.0] {
            for &k in &[3usize, 5, 7, 9] {
                let odd = c(a, k).value;
                let plain = powa(k as f64, 1.0 - a);
                assert!(odd > plain, "alpha {a}, K {k}: {odd} <= {plain}");
            }
        }
    }

    #[test]
    fn continuity_and_the_single_jump() {
        // Continuous at alpha = 1 for every K.
        for k in [2, 3, 4, 5] {
            let below = c(1.0 - 1e-9, k).value;
            let above = c(1.0 + 1e-9, k).value;
            assert!((below - 1.0).abs() <= 1e-8, "K {k}: {below}");
            assert!((above - 1.0).abs() <= 1e-8, "K {k}: {above}");
        }
        // Continuous at alpha = 3 for K = 2.
        assert!((c(3.0 - 1e-9, 2).value - 0.25).abs() <= 1e-9);
        assert!((c(3.0 + 1e-9, 2).value - 0.25).abs() <= 1e-9);
        // The jump at alpha = 2 for K = 2: 1/2 from below, 1/4 above.
        assert!((c(2.0 - 1e-9, 2).value - 0.5).abs() <= 1e-8);
        assert!((c(2.0 + 1e-9, 2).value - 0.25).abs() <= 1e-9);
    }

    #[test]
    fn strong_convexity_examples() {
        assert_eq!(strong_convexity_param(&ap(1.0), 10).unwrap(), 1.0);
        assert_abs_diff_eq!(
            strong_convexity_param(&ap(1.5), 4).unwrap(),
            0.5,
            epsilon = 1e-15
        );
        assert_eq!(strong_convexity_param(&ap(2.5), 3).unwrap(), 0.0);
    }

    #[test]
    fn orthant_constant_examples() {
        assert_eq!(orthant_constant_alpha2(2).unwrap(), 0.5);
        assert_eq!(orthant_constant_alpha2(5).unwrap(), 0.2);
        assert!(orthant_constant_alpha2(1).is_err());
    }

    #[test]
    fn clipped_constant_examples() {
        let eps = 0.1;
        assert_abs_diff_eq!(
            clipped_constant(3.0, 4, ClipMode::Both, eps).unwrap(),
            0.025,
            epsilon = 1e-17
        );
        assert_abs_diff_eq!(
            clipped_constant(3.0, 4, ClipMode::POnly, eps).unwrap(),
            0.0083333333333333333,
            epsilon = 1e-17
        );
        assert_abs_diff_eq!(
            clipped_constant(3.0, 4, ClipMode::QOnly, eps).unwrap(),
            0.016666666666666667,
            epsilon = 1e-17
        );
        assert!(clipped_constant(2.0, 4, ClipMode::Both, eps).is_err());
        assert!(clipped_constant(3.0, 2, ClipMode::Both, eps).is_err());
        assert!(clipped_constant(3.0, 4, ClipMode::Both, 0.3).is_err());
        assert!(clipped_constant(3.0, 4, ClipMode::Both, 0.0).is_err());
    }

    #[test]
    fn zero_one_regret_examples() {
        let p = ProbVector::new(vec![0.6, 0.4]).unwrap();
        let q = ProbVector::new(vec![0.4, 0.6]).unwrap();
        assert_abs_diff_eq!(zero_one_regret_bound(&p, &q).unwrap(), 0.2, epsilon = 1e-15);
        assert_eq!(zero_one_regret_bound(&p, &p).unwrap(), 0.0);
        // Same argmax -> zero regret even for different vectors.
        let q2 = ProbVector::new(vec![0.9, 0.1]).unwrap();
        assert_eq!(zero_one_regret_bound(&p, &q2).unwrap(), 0.0);
        // Ties break to the lowest index.
        let tie = ProbVector::new(vec![0.5, 0.5]).unwrap();
        let r = ProbVector::new(vec![0.25, 0.75]).unwrap();
        assert_abs_diff_eq!(zero_one_regret_bound(&tie, &r).unwrap(), 0.0, epsilon = 0.0);
        // Bound by the l1 distance.
        let d: f64 = p
            .coords()
            .iter()
            .zip(q.coords())
            .map(|(a, b)| (a - b).abs())
            .sum();
        assert!(zero_one_regret_bound(&p, &q).unwrap() <= d + 1e-15);
    }
}
