//! Bregman divergences D_α of −S_α, equal to the β-divergences d_β with
//! β = α, together with the KL / Itakura–Saito / Euclidean special cases,
//! the Tsallis relative entropy, and the excess-risk identity.
//!
//! Closed forms (per coordinate, p, q > 0, r = (p−q)/q; summed over k):
//!
//! - β ∉ {0, 1}:  (p^β − q^β)/(β(β−1)) − q^{β−1}(p − q)/(β−1)
//!   (the standard display (p^β + (β−1)q^β − βpq^{β−1})/(β(β−1)) with the
//!   terms regrouped as the Bregman form of x ↦ x^β/(β(β−1))), evaluated
//!   as q^β·(expm1(β·ln1p(r))/β − r)/(β−1) — identical algebra, with the
//!   Taylor-level cancellation carried out between accurately computed
//!   small quantities, and the diagonal vanishing identically
//! - β = 2:  (p − q)²/2 (half squared Euclidean, the exact factorization)
//! - β = 3:  (p − q)²(p + 2q)/6 (exact factorization)
//! - β = 1 (generalized KL):  p·ln1p(r) − (p − q)  [= p·ln(p/q) − p + q]
//! - β = 0 (Itakura–Saito):   r − ln1p(r)          [= p/q − ln(p/q) − 1]
//!
//! There is no special-casing near the diagonal — each branch is a single
//! closed form used for every (p, q). Accuracy near the diagonal is still
//! documented as absolute (not relative) for the non-anchor branches: the
//! residual error scales with |p−q| times machine epsilon, so ratios of
//! two O(t²) quantities lose digits as t → 0 and the verification suites
//! exclude cancellation-dominated denominators (see [`crate::tolerances`]).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplex::{lp_norm, PositiveVector, ProbVector};
use crate::tsallis::{entropy_gradient_slice, entropy_slice, loss, AlphaParam, Anchor};

/// A divergence value together with a finiteness flag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DivergenceValue {
    /// The value; nonnegative up to rounding when finite.
    pub value: f64,
    /// Whether the value is finite; false only when a boundary argument (or
    /// an overflowing power) makes the branch diverge.
    pub finite: bool,
}

impl DivergenceValue {
    fn of(value: f64) -> Self {
        Self {
            value,
            finite: value.is_finite(),
        }
    }
}

/// Per-coordinate β-divergence integrand; `beta` anchors dispatch exactly.
#[inline]
fn beta_term(alpha: &AlphaParam, p: f64, q: f64) -> f64 {
    use crate::tsallis::powa;
    let d = p - q;
    match alpha.anchor() {
        Some(Anchor::One) => p * (d / q).ln_1p() - d,
        Some(Anchor::Zero) => {
            let r = d / q;
            r - r.ln_1p()
        }
        Some(Anchor::Two) => 0.5 * d * d,
        Some(Anchor::Three) => d * d * (p + 2.0 * q) / 6.0,
        _ => {
            let b = alpha.value();
            let r = d / q;
            powa(q, b) * (f64::exp_m1(b * r.ln_1p()) / b - r) / (b - 1.0)
        }
    }
}

/// Crate-internal hot path: d_α(p‖q) on raw strictly-positive slices of
/// equal length (callers guarantee the preconditions).
pub(crate) fn bregman_slices(alpha: &AlphaParam, p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(&pk, &qk)| beta_term(alpha, pk, qk))
        .sum()
}

/// Bregman divergence D_α(p‖q) of −S_α, computed via the β-divergence
/// closed forms (β = α): Itakura–Saito at α = 0, generalized KL at α = 1,
/// the power form otherwise. Nonnegative; zero exactly on the diagonal.
pub fn bregman(
    alpha: &AlphaParam,
    p: &PositiveVector,
    q: &PositiveVector,
) -> Result<DivergenceValue> {
    if p.k() != q.k() {
        return Err(Error::Parameter(format!(
            "dimension mismatch: p has {} coordinates, q has {}",
            p.k(),
            q.k()
        )));
    }
    Ok(DivergenceValue::of(bregman_slices(
        alpha,
        p.coords(),
        q.coords(),
    )))
}

/// D_α(p‖q) straight from its definition, f(p) − f(q) − ⟨∇f(q), p − q⟩ with
/// f = −S_α. Kept permanently as an independent oracle of [`bregman`]; the
/// two must agree within 1e-9 relative away from the diagonal.
pub fn bregman_from_definition(
    alpha: &AlphaParam,
    p: &PositiveVector,
    q: &PositiveVector,
) -> Result<DivergenceValue> {
    if p.k() != q.k() {
        return Err(Error::Parameter(format!(
            "dimension mismatch: p has {} coordinates, q has {}",
            p.k(),
            q.k()
        )));
    }
    let sp = entropy_slice(alpha, p.coords());
    let sq = entropy_slice(alpha, q.coords());
    let grad_q = entropy_gradient_slice(alpha, q.coords());
    let inner: f64 = grad_q
        .iter()
        .zip(p.coords().iter().zip(q.coords()))
        .map(|(&g, (&pk, &qk))| g * (pk - qk))
        .sum();
    Ok(DivergenceValue::of(-sp + sq + inner))
}

/// Kullback–Leibler divergence Σ p_k ln(p_k/q_k) − p_k + q_k (the α = 1
/// member of the family; the −p+q terms vanish on the simplex).
pub fn kl(p: &PositiveVector, q: &PositiveVector) -> Result<DivergenceValue> {
    bregman(&AlphaParam::new(1.0).expect("1 is finite"), p, q)
}

/// Reverse Kullback–Leibler divergence KL(q‖p), exposed explicitly: it is
/// the α = 0 comparison partner in the ordering chain
/// D₀(p‖q) ≥ KL(q‖p) ≥ ½‖p−q‖₁².
pub fn reverse_kl(p: &PositiveVector, q: &PositiveVector) -> Result<DivergenceValue> {
    kl(q, p)
}

/// Itakura–Saito divergence Σ p_k/q_k − ln(p_k/q_k) − 1 (the α = 0 member).
pub fn itakura_saito(p: &PositiveVector, q: &PositiveVector) -> Result<DivergenceValue> {
    bregman(&AlphaParam::new(0.0).expect("0 is finite"), p, q)
}

/// Excess risk E_{Y∼p}[ℓ_α(q, Y)] − E_{Y∼p}[ℓ_α(p, Y)]
/// = Σ_k p_k·(ℓ_α(q,k) − ℓ_α(p,k)), which equals D_α(p‖q).
pub fn excess_risk(alpha: &AlphaParam, p: &ProbVector, q: &ProbVector) -> Result<f64> {
    if p.k() != q.k() {
        return Err(Error::Parameter(format!(
            "dimension mismatch: p has {} coordinates, q has {}",
            p.k(),
            q.k()
        )));
    }
    let mut acc = 0.0;
    for (k, &pk) in p.coords().iter().enumerate() {
        acc += pk * (loss(alpha, q, k + 1)? - loss(alpha, p, k + 1)?);
    }
    Ok(acc)
}

/// Tsallis relative entropy value, flagged when evaluated outside the
/// α ∈ (0,1) ∪ (1,∞) range in which the generator family is defined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TreValue {
    /// Σ_k q_k·(x_k^α − 1)/(α(α−1)) with x_k = p_k/q_k.
    pub value: f64,
    /// True when α < 0: same formula, but an extension beyond the range in
    /// which the relative entropy's generator is convex-normalized.
    pub non_paper_extension: bool,
}

/// Tsallis relative entropy D^TRE_α(p‖q) = Σ_k q_k·f_α(p_k/q_k) with
/// f_α(x) = (x^α − 1)/(α(α−1)).
///
/// Defined for α ∉ {0, 1} (those anchors are a parameter error; reverse KL
/// plays the α = 0 role and KL the α = 1 role). α < 0 is accepted as the
/// same formula but flagged as a non-standard extension in the result.
pub fn tsallis_relative_entropy(
    alpha: &AlphaParam,
    p: &ProbVector,
    q: &ProbVector,
) -> Result<TreValue> {
    if matches!(alpha.anchor(), Some(Anchor::Zero) | Some(Anchor::One)) {
        return Err(Error::Parameter(format!(
            "tsallis relative entropy is undefined at alpha = {}",
            alpha.value()
        )));
    }
    if p.k() != q.k() {
        return Err(Error::Parameter(format!(
            "dimension mismatch: p has {} coordinates, q has {}",
            p.k(),
            q.k()
        )));
    }
    if !p.is_relint() || !q.is_relint() {
        return Err(Error::Domain(
            "zero coordinate: the relative entropy needs relative-interior arguments".into(),
        ));
    }
    let a = alpha.value();
    let denom = a * (a - 1.0);
    // x^α − 1 as expm1(α·ln x): identical closed form, exact on the diagonal.
    let value: f64 = p
        .coords()
        .iter()
        .zip(q.coords())
        .map(|(&pk, &qk)| qk * f64::exp_m1(a * (pk / qk).ln()) / denom)
        .sum();
    Ok(TreValue {
        value,
        non_paper_extension: a < 0.0,
    })
}

/// Continuity probe at the anchors α ∈ {0, 1}: returns
/// max(|D_{a+δ}(p‖q) − D_a(p‖q)|, |D_{a−δ}(p‖q) − D_a(p‖q)|),
/// which the caller asserts is O(δ). Requires 0 < δ ≤ 1e-3.
pub fn alpha_continuity_probe(
    alpha: &AlphaParam,
    p: &PositiveVector,
    q: &PositiveVector,
    delta: f64,
) -> Result<f64> {
    if !matches!(alpha.anchor(), Some(Anchor::Zero) | Some(Anchor::One)) {
        return Err(Error::Parameter(format!(
            "continuity probe is defined at the anchors 0 and 1, got alpha = {}",
            alpha.value()
        )));
    }
    if !(delta > 0.0 && delta <= 1e-3) {
        return Err(Error::Parameter(format!(
            "delta must lie in (0, 1e-3], got {delta}"
        )));
    }
    let a = alpha.value();
    let at = |a: f64| -> Result<f64> { Ok(bregman(&AlphaParam::new(a)?, p, q)?.value) };
    let center = at(a)?;
    let up = (at(a + delta)? - center).abs();
    let down = (at(a - delta)? - center).abs();
    Ok(up.max(down))
}

/// The Pinsker ratio 2·D_α(p‖q)/‖p−q‖₁², the quantity whose infimum over
/// distinct simplex pairs defines the sharp constant C_{α,K}.
pub fn pinsker_ratio(alpha: &AlphaParam, p: &ProbVector, q: &ProbVector) -> Result<f64> {
    if p.k() != q.k() {
        return Err(Error::Parameter(format!(
            "dimension mismatch: p has {} coordinates, q has {}",
            p.k(),
            q.k()
        )));
    }
    if !p.is_relint() || !q.is_relint() {
        return Err(Error::Domain(
            "zero coordinate: the ratio needs relative-interior arguments".into(),
        ));
    }
    let diff: Vec<f64> = p
        .coords()
        .iter()
        .zip(q.coords())
        .map(|(&a, &b)| a - b)
        .collect();
    let l1 = lp_norm(&diff, 1.0)?;
    if l1 == 0.0 {
        return Err(Error::Domain("p = q: the Pinsker ratio is 0/0".into()));
    }
    let d = bregman_slices(alpha, p.coords(), q.coords());
    Ok(2.0 * d / (l1 * l1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn ap(a: f64) -> AlphaParam {
        AlphaParam::new(a).unwrap()
    }

    fn pv(c: &[f64]) -> PositiveVector {
        PositiveVector::new(c.to_vec()).unwrap()
    }

    fn sv(c: &[f64]) -> ProbVector {
        ProbVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn diagonal_is_exactly_zero() {
        let p = pv(&[0.3, 0.62, 1e-6, 0.08]);
        for a in [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0] {
            let d = bregman(&ap(a), &p, &p).unwrap();
            assert_eq!(d.value, 0.0, "alpha = {a}");
            assert!(d.finite);
        }
    }

    #[test]
    fn kl_example() {
        // KL((1/2,1/2) ‖ (1/4,3/4)) = ½ ln(4/3) = 0.14384103622589046.
        let p = pv(&[0.5, 0.5]);
        let q = pv(&[0.25, 0.75]);
        let d = bregman(&ap(1.0), &p, &q).unwrap();
        assert_abs_diff_eq!(d.value, 0.14384103622589046, epsilon = 1e-16);
        assert_abs_diff_eq!(
            kl(&p, &q).unwrap().value,
            0.14384103622589046,
            epsilon = 1e-16
        );
        assert_abs_diff_eq!(
            reverse_kl(&q, &p).unwrap().value,
            0.14384103622589046,
            epsilon = 1e-16
        );
    }

    #[test]
    fn itakura_saito_example() {
        // IS((1/2,1/2) ‖ (1/4,3/4)) = 2/3 − ln(4/3) = 0.37898459421488574.
        let p = pv(&[0.5, 0.5]);
        let q = pv(&[0.25, 0.75]);
        let d = bregman(&ap(0.0), &p, &q).unwrap();
        assert_abs_diff_eq!(d.value, 0.37898459421488574, epsilon = 1e-15);
        assert_abs_diff_eq!(
            itakura_saito(&p, &q).unwrap().value,
            0.37898459421488574,
            epsilon = 1e-15
        );
    }

    #[test]
    fn euclidean_example() {
        // D₂ = ½‖p−q‖₂²: here ½·(1/16 + 1/16) = 1/16.
        let p = pv(&[0.5, 0.5]);
        let q = pv(&[0.25, 0.75]);
        assert_eq!(bregman(&ap(2.0), &p, &q).unwrap().value, 0.0625);
    }

    #[test]
    fn power_branch_examples() {
        let p = pv(&[0.3, 0.7]);
        let q = pv(&[0.6, 0.4]);
        assert_abs_diff_eq!(
            bregman(&ap(1.5), &p, &q).unwrap().value,
            0.12826944428074097,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            bregman(&ap(0.0), &p, &q).unwrap().value,
            0.38353139262452262,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            bregman(&ap(-1.0), &p, &q).unwrap().value,
            0.81845238095238095,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            bregman(&ap(2.5), &p, &q).unwrap().value,
            0.063478026312907886,
            epsilon = 1e-15
        );
    }

    #[test]
    fn definition_form_agrees_with_closed_form() {
        let p = pv(&[0.3, 0.7]);
        let q = pv(&[0.6, 0.4]);
        for a in [-1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0] {
            let alpha = ap(a);
            let lhs = bregman(&alpha, &p, &q).unwrap().value;
            let rhs = bregman_from_definition(&alpha, &p, &q).unwrap().value;
            let rel = (lhs - rhs).abs() / lhs.abs().max(rhs.abs());
            assert!(rel <= 1e-9, "alpha = {a}: {lhs} vs {rhs} (rel {rel})");
        }
    }

    #[test]
    fn dimension_mismatch_is_parameter_error() {
        let p = pv(&[0.5, 0.5]);
        let q = pv(&[0.25, 0.25, 0.5]);
        assert!(matches!(
            bregman(&ap(1.0), &p, &q),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            bregman_from_definition(&ap(1.0), &p, &q),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn excess_risk_matches_bregman() {
        let p = sv(&[0.5, 0.5]);
        let q = sv(&[0.25, 0.75]);
        assert_abs_diff_eq!(
            excess_risk(&ap(1.0), &p, &q).unwrap(),
            0.14384103622589046,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            excess_risk(&ap(0.0), &p, &q).unwrap(),
            0.37898459421488574,
            epsilon = 1e-14
        );
        let p3 = sv(&[0.2, 0.3, 0.5]);
        let q3 = sv(&[0.4, 0.4, 0.2]);
        for a in [-1.0, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0] {
            let alpha = ap(a);
            let er = excess_risk(&alpha, &p3, &q3).unwrap();
            let d = bregman_slices(&alpha, p3.coords(), q3.coords());
            let rel = (er - d).abs() / d.abs().max(1e-300);
            assert!(rel <= 1e-10, "alpha = {a}: excess {er} vs bregman {d}");
        }
        assert_eq!(excess_risk(&ap(2.0), &p, &p).unwrap(), 0.0);
    }

    #[test]
    fn tre_example_and_gating() {
        let p = sv(&[0.5, 0.5]);
        let q = sv(&[0.25, 0.75]);
        let t = tsallis_relative_entropy(&ap(2.0), &p, &q).unwrap();
        assert_abs_diff_eq!(t.value, 0.16666666666666667, epsilon = 1e-15);
        assert!(!t.non_paper_extension);
        // Ordering at alpha = 0.5: D_alpha ≥ TRE_alpha.
        let p2 = sv(&[0.3, 0.7]);
        let q2 = sv(&[0.6, 0.4]);
        let alpha = ap(0.5);
        let d = bregman_slices(&alpha, p2.coords(), q2.coords());
        let t = tsallis_relative_entropy(&alpha, &p2, &q2).unwrap();
        assert!(d >= t.value - 1e-12, "D {d} vs TRE {}", t.value);
        // Anchors are a parameter error; alpha < 0 is flagged.
        assert!(tsallis_relative_entropy(&ap(0.0), &p, &q).is_err());
        assert!(tsallis_relative_entropy(&ap(1.0), &p, &q).is_err());
        let ext = tsallis_relative_entropy(&ap(-1.0), &p, &q).unwrap();
        assert!(ext.non_paper_extension);
        assert!(ext.value >= 0.0);
        // Diagonal is exact.
        assert_eq!(
            tsallis_relative_entropy(&ap(2.0), &p, &p).unwrap().value,
            0.0
        );
    }

    #[test]
    fn continuity_probe_at_the_anchors() {
        let p = pv(&[0.5, 0.5]);
        let q = pv(&[0.25, 0.75]);
        for anchor in [0.0, 1.0] {
            let gap = alpha_continuity_probe(&ap(anchor), &p, &q, 1e-6).unwrap();
            assert!(gap <= 1e-4, "anchor {anchor}: gap {gap}");
            assert!(gap > 0.0);
        }
        let gap = alpha_continuity_probe(&ap(1.0), &p, &p, 1e-6).unwrap();
        assert!(gap.abs() <= 1e-12);
        assert!(alpha_continuity_probe(&ap(0.5), &p, &q, 1e-6).is_err());
        assert!(alpha_continuity_probe(&ap(1.0), &p, &q, 1e-2).is_err());
        assert!(alpha_continuity_probe(&ap(1.0), &p, &q, 0.0).is_err());
    }

    #[test]
    fn pinsker_ratio_basics() {
        // alpha = 2, K = 2: ratio = 2·½‖p−q‖₂²/‖p−q‖₁² = ½ for any pair,
        // since (p−q) ∝ (1,−1).
        let p = sv(&[0.3, 0.7]);
        let q = sv(&[0.6, 0.4]);
        assert_abs_diff_eq!(
            pinsker_ratio(&ap(2.0), &p, &q).unwrap(),
            0.5,
            epsilon = 1e-15
        );
        assert!(pinsker_ratio(&ap(2.0), &p, &p).is_err());
        // KL at K = 2 stays above C_{1,2} = 1.
        assert!(pinsker_ratio(&ap(1.0), &p, &q).unwrap() >= 1.0);
    }

    #[test]
    fn nonnegativity_spot_checks() {
        let pairs = [
            ([0.1, 0.9], [0.9, 0.1]),
            ([0.5, 0.5], [0.4999, 0.5001]),
            ([1e-6, 1.0 - 1e-6], [0.5, 0.5]),
        ];
        for a in [-1.0, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0] {
            for (pc, qc) in &pairs {
                let d = bregman(&ap(a), &pv(pc), &pv(qc)).unwrap();
                assert!(
                    d.value >= -1e-12,
                    "alpha {a}, {pc:?} vs {qc:?}: {}",
                    d.value
                );
            }
        }
    }
}
