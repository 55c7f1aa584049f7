//! Randomized property tests for the structural invariants of the library:
//! norms, samplers, divergences, distances, and the variational quantities.
//! Complements the deterministic unit tests and the seeded verification
//! battery with generator-driven coverage over dimensions and parameters.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use tsallis_pinsker::divergences::{bregman, excess_risk};
use tsallis_pinsker::extremal::{optimal_gamma_for_weights, quadratic_form};
use tsallis_pinsker::pinsker::{sharp_constant, zero_one_regret_bound};
use tsallis_pinsker::simplex::{
    lp_norm, sample_relint, sample_relint_with, sample_tangent_unit, sample_tangent_unit_with,
    tv_distance, tv_distance_subset_oracle, ProbVector, TangentUnitVector,
};
use tsallis_pinsker::tsallis::{bayes_risk, entropy, AlphaParam};

/// Alphas covering every regime: negative, anchors, fractional, beyond 2.
const ALPHA_GRID: [f64; 9] = [-1.5, -1.0, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0];

fn l1(xs: &[f64], ys: &[f64]) -> f64 {
    xs.iter().zip(ys).map(|(x, y)| (x - y).abs()).sum()
}

/// Strategy: a relative-interior probability vector of dimension `k`.
fn relint_vector(k: usize) -> impl Strategy<Value = ProbVector> {
    prop::collection::vec(1e-6..1.0f64, k).prop_map(|raw| {
        let s: f64 = raw.iter().sum();
        ProbVector::new(raw.iter().map(|&x| x / s).collect()).expect("normalized vector")
    })
}

/// Strategy: a unit tangent vector of dimension `k` (sum zero, l1 norm one).
fn tangent_vector(k: usize) -> impl Strategy<Value = TangentUnitVector> {
    prop::collection::vec(-1.0..1.0f64, k).prop_filter_map(
        "direction too close to the diagonal",
        |raw| {
            let mean = raw.iter().sum::<f64>() / raw.len() as f64;
            let centered: Vec<f64> = raw.iter().map(|&x| x - mean).collect();
            let norm: f64 = centered.iter().map(|x| x.abs()).sum();
            if norm < 1e-3 {
                return None;
            }
            let scaled: Vec<f64> = centered.iter().map(|&x| x / norm).collect();
            // Re-center once more so the sum constraint holds to float noise
            // even after the rescaling.
            let mean2 = scaled.iter().sum::<f64>() / scaled.len() as f64;
            TangentUnitVector::new(scaled.iter().map(|&x| x - mean2).collect()).ok()
        },
    )
}

fn alpha_strategy() -> impl Strategy<Value = f64> {
    prop::sample::select(ALPHA_GRID.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn lp_norm_is_absolutely_homogeneous(
        v in tangent_vector(4),
        c in -5.0..5.0f64,
        beta in prop::sample::select(vec![0.5, 1.0, 1.5, 2.0, 3.0]),
    ) {
        let base = lp_norm(v.coords(), beta).unwrap();
        let scaled: Vec<f64> = v.coords().iter().map(|&x| c * x).collect();
        let lhs = lp_norm(&scaled, beta).unwrap();
        let rhs = c.abs() * base;
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0),
            "|{c}|*||v||_{beta}: {lhs} vs {rhs}");
    }

    #[test]
    fn lp_norm_is_nonincreasing_in_beta(v in tangent_vector(5)) {
        let betas = [0.5, 1.0, 1.5, 2.0, 3.0];
        let norms: Vec<f64> = betas
            .iter()
            .map(|&b| lp_norm(v.coords(), b).unwrap())
            .collect();
        for w in norms.windows(2) {
            prop_assert!(w[0] >= w[1] - 1e-12, "norms not monotone: {norms:?}");
        }
    }

    #[test]
    fn bregman_is_nonnegative_and_zero_on_the_diagonal(
        p in relint_vector(4),
        q in relint_vector(4),
        a in alpha_strategy(),
    ) {
        let alpha = AlphaParam::new(a).unwrap();
        let pp = p.to_positive().unwrap();
        let qq = q.to_positive().unwrap();
        let d = bregman(&alpha, &pp, &qq).unwrap().value;
        prop_assert!(d >= -1e-12, "D_{a}(p||q) = {d} < 0");
        let diag = bregman(&alpha, &pp, &pp).unwrap().value;
        prop_assert_eq!(diag, 0.0, "diagonal not exactly zero: {}", diag);
    }

    #[test]
    fn tv_distance_matches_l1_and_subset_supremum(
        p in relint_vector(5),
        q in relint_vector(5),
    ) {
        let tv = tv_distance(&p, &q).unwrap();
        let half_l1 = 0.5 * l1(p.coords(), q.coords());
        prop_assert_eq!(tv, half_l1);
        let sup = tv_distance_subset_oracle(&p, &q).unwrap();
        prop_assert!((tv - sup).abs() <= 1e-12, "tv {tv} vs subset sup {sup}");
    }

    #[test]
    fn bayes_risk_is_entropy_and_excess_risk_is_bregman(
        p in relint_vector(3),
        q in relint_vector(3),
        a in alpha_strategy(),
    ) {
        let alpha = AlphaParam::new(a).unwrap();
        let s = entropy(&alpha, &p.to_positive().unwrap());
        let bayes = bayes_risk(&alpha, &p).unwrap();
        prop_assert!((bayes - s).abs() <= 1e-10 * s.abs().max(1.0),
            "bayes {bayes} vs entropy {s}");
        let d = bregman(&alpha, &p.to_positive().unwrap(), &q.to_positive().unwrap())
            .unwrap()
            .value;
        let ex = excess_risk(&alpha, &p, &q).unwrap();
        prop_assert!((ex - d).abs() <= 1e-10 * d.abs().max(1.0),
            "excess {ex} vs bregman {d}");
    }

    #[test]
    fn regret_stays_within_the_l1_bound(
        p in relint_vector(6),
        q in relint_vector(6),
    ) {
        let r = zero_one_regret_bound(&p, &q).unwrap();
        let bound = l1(p.coords(), q.coords());
        prop_assert!(r >= 0.0, "negative regret {r}");
        prop_assert!(r <= bound + 1e-15, "regret {r} exceeds l1 {bound}");
    }

    #[test]
    fn quadratic_form_never_undercuts_the_sharp_constant(
        gamma in relint_vector(4),
        v in tangent_vector(4),
        a in alpha_strategy(),
    ) {
        let alpha = AlphaParam::new(a).unwrap();
        let c = sharp_constant(&alpha, 4).unwrap().value;
        let point = quadratic_form(&alpha, &gamma, &v).unwrap();
        prop_assert!(point.value >= c - 1e-12,
            "form {} below constant {} at alpha {}", point.value, c, a);
    }

    #[test]
    fn gamma_optimum_is_a_true_minimum(
        lambda in prop::collection::vec(0.01..10.0f64, 4),
        gamma in relint_vector(4),
        nu in prop::sample::select(vec![0.5, 1.0, 2.0]),
    ) {
        let opt = optimal_gamma_for_weights(nu, &lambda).unwrap();
        prop_assert!(!opt.boundary);
        let objective = |g: &ProbVector| -> f64 {
            g.coords()
                .iter()
                .zip(&lambda)
                .map(|(&gk, &lk)| lk * gk.powf(-nu))
                .sum()
        };
        let at_opt = objective(&opt.gamma);
        prop_assert!((at_opt - opt.value).abs() <= 1e-10 * opt.value,
            "minimizer does not achieve the reported value: {at_opt} vs {}", opt.value);
        let elsewhere = objective(&gamma);
        prop_assert!(elsewhere >= opt.value - 1e-10 * opt.value,
            "random gamma beats the closed-form infimum: {elsewhere} < {}", opt.value);
    }
}

#[test]
fn samplers_are_deterministic_and_respect_invariants() {
    for k in [2usize, 3, 5, 8] {
        let margin = 1e-4;
        let first = sample_relint(k, 7, margin).unwrap();
        let second = sample_relint(k, 7, margin).unwrap();
        assert_eq!(first.coords(), second.coords(), "same seed, same sample");

        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for _ in 0..200 {
            let p = sample_relint_with(&mut rng, k, margin).unwrap();
            assert!(p.coords().iter().all(|&x| x >= margin));
            assert!((p.coords().iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        }

        let t1 = sample_tangent_unit(k, 13).unwrap();
        let t2 = sample_tangent_unit(k, 13).unwrap();
        assert_eq!(t1.coords(), t2.coords());
        let mut rng = ChaCha12Rng::seed_from_u64(17);
        for _ in 0..200 {
            let v = sample_tangent_unit_with(&mut rng, k).unwrap();
            assert!(v.coords().iter().sum::<f64>().abs() <= 1e-12);
            let norm: f64 = v.coords().iter().map(|x| x.abs()).sum();
            assert!((norm - 1.0).abs() <= 1e-12);
        }
    }
}
