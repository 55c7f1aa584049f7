//! Centralized numerical tolerances.
//!
//! Every tolerance used by the library and its test suites is a named
//! constant here, with the rationale recorded next to it. Code and tests
//! import these constants instead of scattering magic numbers, so the
//! accuracy contract of the crate is maintained in one place.
//!
//! Conventions:
//! - `*_ABS` constants bound an absolute difference `|a - b|`.
//! - `*_REL` constants bound a relative difference `|a - b| / max(|a|, |b|)`;
//!   comparisons near zero additionally allow [`CANCELLATION_FLOOR_ABS`].

// ---------------------------------------------------------------------------
// Type invariants (construction-time gates)
// ---------------------------------------------------------------------------

/// Absolute tolerance on the coordinate sum of a probability vector.
///
/// Double-precision summation of K ≤ O(100) coordinates carries at most a few
/// hundred ulps of error (≈ 1e-14); 1e-12 accepts every honestly constructed
/// vector while rejecting anything that was never normalized.
pub const SIMPLEX_SUM_ABS: f64 = 1e-12;

/// Absolute tolerance on the coordinate sum of a tangent vector (must be 0).
/// Same arithmetic argument as [`SIMPLEX_SUM_ABS`].
pub const TANGENT_SUM_ABS: f64 = 1e-12;

/// Absolute tolerance on the ℓ₁ norm of a tangent unit vector (must be 1).
pub const TANGENT_NORM_ABS: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Divergence evaluation
// ---------------------------------------------------------------------------

/// Absolute floor added to relative comparisons of two divergence values.
///
/// Near the diagonal both evaluation paths are O(‖p−q‖²) with absolute
/// rounding error around machine epsilon times the entropy scale; a relative
/// criterion alone would be unsatisfiable there. 1e-14 is ~100 ulps of the
/// O(1) entropy scale.
pub const CANCELLATION_FLOOR_ABS: f64 = 1e-14;

// ---------------------------------------------------------------------------
// Cross-identity agreement (two independent computation paths)
// ---------------------------------------------------------------------------

/// Closed-form β-divergence vs. the Bregman form assembled from entropy and
/// gradient. The Bregman form subtracts two O(1) entropies, losing ~6 digits
/// near the diagonal; away from it, 1e-9 relative is comfortable for both.
pub const CROSS_FORM_REL: f64 = 1e-9;

/// Excess risk (loss-difference expectation) vs. the divergence itself.
/// Both paths share the power evaluations, so agreement is tighter than
/// [`CROSS_FORM_REL`].
pub const EXCESS_RISK_REL: f64 = 1e-10;

/// Bayes risk (expected loss under the truth) vs. the entropy.
pub const BAYES_RISK_REL: f64 = 1e-10;

/// KL divergence computed independently vs. the α=1 Bregman divergence:
/// identical formulas up to summation order, so gap is a few ulps; 1e-12
/// absolute on O(1) values.
pub const KL_IDENTITY_ABS: f64 = 1e-12;

/// TV distance vs. the brute-force subset supremum (K ≤ 12).
pub const TV_SUBSET_ABS: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Finite differences
// ---------------------------------------------------------------------------

/// Step for fourth-order central finite differences of the entropy.
/// Balances O(h⁴) truncation against ε/h roundoff: with entropies of
/// magnitude ≲ 100 on margin-1e-2 interiors, both sit near 1e-11.
pub const FD_STEP: f64 = 1e-5;

/// Coordinate margin for the points where finite-difference checks run.
/// Large enough that the fourth-order truncation term (∝ p^(α−6) at the
/// most singular grid value α = −1) stays ≥ 4 digits inside the FD
/// tolerances, and p ± 2h stays strictly positive.
pub const FD_MARGIN: f64 = 1e-2;

/// Relative tolerance for gradient vs. finite differences of the entropy.
pub const GRAD_FD_REL: f64 = 1e-6;

/// Relative tolerance for the Hessian diagonal vs. finite differences of the
/// gradient (one more differentiation, one less digit).
pub const HESS_FD_REL: f64 = 1e-5;

/// Absolute bound on numerically estimated off-diagonal second derivatives
/// (mathematically zero; the bound is pure FD roundoff, ≤ ~2e-7 at the
/// margins used by the test suites).
pub const HESS_OFFDIAG_ABS: f64 = 1e-6;

// ---------------------------------------------------------------------------
// Verification harness
// ---------------------------------------------------------------------------

/// Absolute slack on Pinsker ratios: a sample violates the inequality only
/// if 2·D/‖p−q‖₁² < C − RATIO_SLACK_ABS. The divergence is evaluated through
/// expm1/ln_1p in r = (p−q)/q (absolute error ∝ ‖p−q‖, and exactly zero on
/// the diagonal), so with the near-diagonal exclusion below the observed
/// ratio noise stays ≤ ~1e-13, an order of magnitude inside this slack.
pub const RATIO_SLACK_ABS: f64 = 1e-12;

/// Pairs closer than this in ℓ₁ are excluded from ratio statistics: the
/// ratio of two O(t²) quantities loses half its digits as t → 0.
pub const NEAR_DIAGONAL_EXCLUSION_L1: f64 = 1e-8;

/// Coordinate margin used when sampling relative-interior points for
/// verification. Keeps every power γ^(α−2) finite and bounded for the α
/// range exercised by the grids (|α−2| ≤ 3 ⇒ magnitudes ≤ 1e18, exact in
/// double range).
pub const VERIFY_SAMPLING_MARGIN: f64 = 1e-6;

/// Interior-surrogate margin δ used by the *sampling* strategies of the
/// verification harness when the extremizer sits on the boundary. Larger
/// than the witness default so near-extremal samples keep a ratio margin
/// (≈ C·(2−α)·δ) far above [`RATIO_SLACK_ABS`].
pub const VERIFY_JITTER_DELTA: f64 = 1e-2;

/// Relative scale of the multiplicative jitter applied around extremizer
/// centers by the 20% jitter stratum (and to near-optimal (γ, v) samples of
/// the quadratic-form suite). Keeps jittered points well interior while the
/// pair separation (~0.05–0.2 in ℓ₁) stays far above the exclusion cut.
pub const VERIFY_JITTER_REL: f64 = 0.05;

/// The t at which each grid cell's report evaluates its witness family
/// (`witness_ratio_at_tmin`). Small enough that sharpness ratios sit within
/// ~1e-6 of C, large enough that the ratio carries ~11 clean digits.
pub const WITNESS_T_REPORT: f64 = 1e-4;

/// Coordinate margin for identity-suite samples whose tolerances are
/// *relative* (cross-form, excess-risk, Bayes-risk agreement): powers such
/// as q^(α−1) on the α grids stay ≤ ~0.05^(−3) ≈ 8e3, so the f64 noise of
/// the compared paths stays ≥ 4 digits inside those tolerances.
pub const IDENTITY_MARGIN: f64 = 5e-2;

/// Minimum ℓ₁ separation enforced (by resampling) for identity checks that
/// compare two cancellation-prone paths *relatively*: the target value is
/// then ≥ ~1e-4, far above the ~1e-13 absolute noise floor of either path.
pub const IDENTITY_MIN_SEPARATION_L1: f64 = 5e-2;

/// α → {0,1} continuity probes run at this δ (pinned by the acceptance
/// contract together with [`CONTINUITY_PROBE_ABS`]).
pub const CONTINUITY_DELTA: f64 = 1e-6;

/// Log-ratio scale of the multiplicatively perturbed pairs used by the
/// continuity suite: |ln(p_k/q_k)| ≤ ~0.25, keeping the |∂D_β/∂β| slope
/// ≲ 15 so the δ = 1e-6 probe lands ≲ 2e-5, inside the 1e-4 bound.
pub const CONTINUITY_PAIR_JITTER: f64 = 0.1;

/// Default boundary-surrogate margin δ for sharpness witnesses: the witness
/// ratio then sits within O(δ) = 1e-6 of the sharp constant, well inside the
/// 1e-3 acceptance band at t = 1e-5.
pub const WITNESS_DELTA_DEFAULT: f64 = 1e-6;

/// α → {0,1} continuity probes at δ = [`CONTINUITY_DELTA`] must stay below
/// this bound. On the multiplicatively perturbed pairs the suite samples
/// (see [`CONTINUITY_PAIR_JITTER`]) the α-derivative of D_α is ≲ 15, so the
/// observed gap is ≲ 2e-5.
pub const CONTINUITY_PROBE_ABS: f64 = 1e-4;

/// Relative agreement between the no-Pinsker witness ratio and its closed
/// form t^(α−2)·(5^(α−1)−3^(α−1))/(2(α−1)·4^(α−1)). The computed side
/// divides an O(t^α) divergence by t², touching ~3 digits of cancellation
/// headroom; both sides are otherwise a handful of power evaluations.
pub const NO_PINSKER_CLOSED_FORM_REL: f64 = 1e-9;

/// Absolute slack for divergence nonnegativity and for the vanishing
/// diagonal D(p‖p) (the evaluation is exactly zero on the diagonal by
/// construction; the slack covers the nonnegativity side).
pub const NONNEG_SLACK_ABS: f64 = 1e-12;

/// Two-sided evaluation gap |C_{1−δ,K} − C_{1+δ,K}| (and at α = 3, K = 2)
/// for δ = 1e-9, asserting regime continuity of the constant. The map
/// α ↦ C_{α,K} has |∂C/∂α| ≤ ~2 near those seams, so the gap is ≲ 4e-9.
pub const CONSTANT_CONTINUITY_ABS: f64 = 1e-8;

/// Slack for the 0–1 regret bound regret ≤ ‖p−q‖₁ (pure rounding;
/// both sides are sums of ≤ K coordinate differences).
pub const REGRET_SLACK_ABS: f64 = 1e-15;

/// Slack for concavity checks of the entropy along segments.
pub const CONCAVITY_SLACK_ABS: f64 = 1e-10;

/// Ordering checks (D_α vs D^TRE_α and the α = 0 chain) use this absolute
/// slack per comparison.
pub const ORDERING_SLACK_ABS: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Closed forms and extremizers
// ---------------------------------------------------------------------------

/// Relative tolerance for reproducing hand-derivable closed-form constants
/// (a handful of powf/mul roundings: a few ulps ≈ 1e-15).
pub const CLOSED_FORM_REL: f64 = 1e-14;

/// Absolute/relative tolerance for extremizer identities evaluated in closed
/// form (e.g. (min tangent β-norm)² = C, quadratic form at the interior
/// optimizer).
pub const EXTREMIZER_ABS: f64 = 1e-12;

/// Tolerance for the boundary-surrogate Richardson extrapolation of the
/// quadratic form toward its infimum (error ≈ C·(2−α)²·δ² ≲ 1e-10 at
/// δ = 1e-6, reported against 1e-9).
pub const QUADFORM_ANALYTIC_ABS: f64 = 1e-9;

/// Boundary-surrogate margin δ for the Richardson extrapolation above.
pub const QUADFORM_RICHARDSON_DELTA: f64 = 1e-6;

/// Vertex-probe margin for the α ∈ (2,3), K = 2 analytic check: the form at
/// γ = (1−δ, δ) differs from C = 1/4 by ≈ δ^(α−2)/4, which the check bounds
/// by δ^(α−2) (≤ 1e-5 over the acceptance α range at this δ).
pub const QUADFORM_VERTEX_DELTA: f64 = 1e-10;

/// Projected-gradient oracle must match the weighted-power-sum closed form
/// this tightly (relative), and must never undercut it by more than 1e-10.
pub const GAMMA_ORACLE_REL: f64 = 1e-6;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerances_are_positive_and_ordered() {
        // Construction gates are all at the same 1e-12 scale.
        assert!(SIMPLEX_SUM_ABS > 0.0 && SIMPLEX_SUM_ABS <= 1e-10);
        assert_eq!(SIMPLEX_SUM_ABS, TANGENT_SUM_ABS);
        assert_eq!(TANGENT_SUM_ABS, TANGENT_NORM_ABS);
        // Cross-identity tolerances are ordered by how much cancellation the
        // looser path suffers.
        assert!(KL_IDENTITY_ABS < EXCESS_RISK_REL);
        assert!(EXCESS_RISK_REL < CROSS_FORM_REL);
        // The near-diagonal exclusion must be far above the ratio slack.
        assert!(NEAR_DIAGONAL_EXCLUSION_L1 > RATIO_SLACK_ABS);
        // FD tolerances lose one digit per differentiation order, and the
        // stencil must stay strictly inside the FD margin.
        assert!(GRAD_FD_REL < HESS_FD_REL);
        assert!(2.0 * FD_STEP < FD_MARGIN);
        // Surrogate margins: sampling margin ≫ witness margin.
        assert!(VERIFY_JITTER_DELTA > WITNESS_DELTA_DEFAULT);
        // Identity-suite separation keeps relative comparisons well-scaled.
        assert!(IDENTITY_MIN_SEPARATION_L1 >= 100.0 * NEAR_DIAGONAL_EXCLUSION_L1);
    }
}
