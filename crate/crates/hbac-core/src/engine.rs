//! Cycle-by-cycle simulation of the refrigerator: full 64-dimensional
//! superoperator propagation with per-cycle heat, work, cooling power, COP,
//! effective temperature and Carnot comparison, plus stochastic trajectories
//! of the random-unitary compression.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::channels::{CompressionVariant, IDX_011, IDX_100};
use crate::closedform::WORK_FLOOR;
use crate::error::{Error, Result};
use crate::liouville::{cycle_superoperator, superoperator_of, CycleScope, Superoperator};
use crate::qmat::{partial_trace, ComplexMatrix, DensityMatrix};

/// Validated simulation parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefrigeratorConfig {
    pub gamma: f64,
    pub theta: f64,
    pub eps1_0: f64,
    pub eps2_0: f64,
    pub eps3_0: f64,
    pub cycles: usize,
    pub variant: CompressionVariant,
}

impl RefrigeratorConfig {
    pub fn new(
        gamma: f64,
        theta: f64,
        eps1_0: f64,
        eps2_0: f64,
        eps3_0: f64,
        cycles: usize,
        variant: CompressionVariant,
    ) -> Result<Self> {
        range("gamma", gamma, 0.0, 1.0)?;
        range("theta", theta, 0.0, std::f64::consts::PI)?;
        range("eps1", eps1_0, -1.0, 1.0)?;
        range("eps2", eps2_0, -1.0, 1.0)?;
        range("eps3", eps3_0, -1.0, 1.0)?;
        Ok(Self {
            gamma,
            theta,
            eps1_0,
            eps2_0,
            eps3_0,
            cycles,
            variant,
        })
    }
}

fn range(name: &'static str, value: f64, min: f64, max: f64) -> Result<()> {
    if !value.is_finite() || value < min || value > max {
        return Err(Error::OutOfRange {
            name,
            value,
            min,
            max,
        });
    }
    Ok(())
}

/// Per-cycle thermodynamic record.
///
/// `eps1` is the target polarization after cycle n (n = 0 is the initial
/// state); `eps2_tilde`/`eps3_tilde` are the reset marginals after the
/// damping + compression strokes of cycle n+1, before refresh. Q, W, J and
/// zeta follow the forward-difference definitions: Q(n) spans the transition
/// n -> n+1 and J(n) = Q(n+1) - Q(n). `t_c` is the effective target
/// temperature (+inf at eps1 = 0) and `zeta_carnot` the Carnot COP against
/// the first reset qubit's initial temperature; both ratios carry `None`
/// where undefined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleRecord {
    pub n: usize,
    pub eps1: f64,
    pub eps2_tilde: f64,
    pub eps3_tilde: f64,
    pub q: f64,
    pub w: f64,
    pub j: f64,
    pub zeta: Option<f64>,
    pub t_c: f64,
    pub zeta_carnot: Option<f64>,
}

/// Effective temperature of a diagonal qubit state (k_B = 1):
/// T = 1 / ln[(1 + eps) / (1 - eps)]. eps = 0 maps to +inf, eps = 1 to 0,
/// negative eps passes through as a negative temperature. Inputs are
/// clamped to [-1, 1]: propagated marginals can land one ulp outside and
/// the log would otherwise return NaN.
pub fn temperature_of(eps: f64) -> f64 {
    let eps = eps.clamp(-1.0, 1.0);
    if eps == 0.0 {
        return f64::INFINITY;
    }
    1.0 / ((1.0 + eps) / (1.0 - eps)).ln()
}

/// Carnot COP zeta_C = T_c / (T_h - T_c) from the cold and hot polarizations.
/// `None` when T_c >= T_h (no meaningful refrigerator comparison).
pub fn carnot_cop(eps_cold: f64, eps_hot: f64) -> Option<f64> {
    let t_c = temperature_of(eps_cold);
    let t_h = temperature_of(eps_hot);
    match t_c.partial_cmp(&t_h) {
        Some(std::cmp::Ordering::Less) => Some(t_c / (t_h - t_c)),
        _ => None,
    }
}

/// Per-cycle population bookkeeping extracted from the propagated states.
///
/// `damping_loss` is the polarization change of the target under damping and
/// `transfer` the compression population flow sin^2(theta) (p_011 - p_100) of
/// the post-damping state. On diagonal states the three marginal changes are
/// exactly (damping_loss + 2 transfer, -2 transfer, -2 transfer), which keeps
/// Q and W well conditioned when the per-cycle transfer is many orders below
/// the populations themselves (subtracting the near-equal marginals instead
/// would lose all relative precision near convergence).
struct CycleStep {
    next: ComplexMatrix,
    eps2_tilde: f64,
    eps3_tilde: f64,
    damping_loss: f64,
    transfer: f64,
}

struct CyclePipeline {
    damp: Superoperator,
    comp: Superoperator,
    refresh: Superoperator,
    mix_weight: f64, // sin^2(theta)
}

impl CyclePipeline {
    fn new(config: &RefrigeratorConfig) -> Result<Self> {
        let damp = superoperator_of(&crate::channels::extended_damping_channel(config.gamma)?);
        let comp = superoperator_of(&crate::channels::compression_channel(
            config.theta,
            config.variant,
        )?);
        let refresh = superoperator_of(&crate::channels::refresh_channel(
            config.eps2_0,
            config.eps3_0,
        )?);
        Ok(Self {
            damp,
            comp,
            refresh,
            mix_weight: config.theta.sin().powi(2),
        })
    }

    fn step(&self, rho: &ComplexMatrix, eps1: f64) -> Result<CycleStep> {
        let damped = self.damp.apply_matrix(rho)?;
        let eps1_damped = polarization_of_marginal(&damped, 1)?;
        let transfer = self.mix_weight
            * (damped.get(IDX_011, IDX_011).re - damped.get(IDX_100, IDX_100).re);
        let tilde = self.comp.apply_matrix(&damped)?;
        let eps2_tilde = polarization_of_marginal(&tilde, 2)?;
        let eps3_tilde = polarization_of_marginal(&tilde, 3)?;
        let next = self.refresh.apply_matrix(&tilde)?;
        Ok(CycleStep {
            next,
            eps2_tilde,
            eps3_tilde,
            damping_loss: eps1_damped - eps1,
            transfer,
        })
    }
}

fn polarization_of_marginal(rho8: &ComplexMatrix, qubit: usize) -> Result<f64> {
    let m = partial_trace(rho8, &[qubit])?;
    Ok((m.get(1, 1) - m.get(0, 0)).re)
}

fn reject_non_trace_preserving(variant: CompressionVariant, context: &'static str) -> Result<()> {
    if !variant.is_trace_preserving() {
        return Err(Error::UnsupportedVariant {
            variant: variant.name(),
            reason: context,
        });
    }
    Ok(())
}

/// Run `config.cycles` refrigeration cycles and report the full per-cycle
/// thermodynamic record. One extra cycle is simulated internally so that the
/// last record's J is defined.
pub fn run_cycles(config: &RefrigeratorConfig) -> Result<Vec<CycleRecord>> {
    reject_non_trace_preserving(
        config.variant,
        "cycle simulation requires a trace-preserving compression (the verbatim \
         transcription is audit-only)",
    )?;
    let pipeline = CyclePipeline::new(config)?;
    let initial = DensityMatrix::product_state(config.eps1_0, config.eps2_0, config.eps3_0)?;

    let mut rho = initial.matrix().clone();
    // Seed with the extracted marginal (not the raw input) so the damping
    // loss is the difference of two identically-computed functionals; at
    // gamma = 0 it is then exactly zero and zeta(n) = 1 holds bit-for-bit.
    let mut eps1 = vec![polarization_of_marginal(&rho, 1)?];
    let mut q = Vec::new();
    let mut w = Vec::new();
    let mut eps2_tilde = Vec::new();
    let mut eps3_tilde = Vec::new();

    // Cross-check of the full path against the target-only path (debug builds).
    #[cfg(debug_assertions)]
    let reduced = cycle_superoperator(
        config.gamma,
        config.theta,
        config.eps2_0,
        config.eps3_0,
        config.variant,
        CycleScope::TargetOnly,
    )?;
    #[cfg(debug_assertions)]
    let mut reduced_state = DensityMatrix::from_polarization(config.eps1_0)?.into_matrix();

    for cycle in 0..config.cycles + 1 {
        let step = pipeline.step(&rho, eps1[cycle])?;
        // Validate the propagated states (Hermitian, unit trace, PSD).
        let next = DensityMatrix::new(step.next)?;
        q.push(-(step.damping_loss + 2.0 * step.transfer));
        w.push(-(step.damping_loss - 2.0 * step.transfer));
        eps2_tilde.push(step.eps2_tilde);
        eps3_tilde.push(step.eps3_tilde);
        let next_eps1 = polarization_of_marginal(next.matrix(), 1)?;

        #[cfg(debug_assertions)]
        {
            reduced_state = reduced.apply_matrix(&reduced_state)?;
            let reduced_eps1 = (reduced_state.get(1, 1) - reduced_state.get(0, 0)).re;
            debug_assert!(
                (reduced_eps1 - next_eps1).abs() <= 1e-10,
                "full-space and target-only paths diverged at cycle {}: {} vs {}",
                cycle + 1,
                next_eps1,
                reduced_eps1
            );
        }

        eps1.push(next_eps1);
        rho = next.into_matrix();
    }

    let records = (0..config.cycles)
        .map(|n| {
            let zeta = if w[n].abs() < WORK_FLOOR {
                None
            } else {
                Some(-q[n] / w[n])
            };
            CycleRecord {
                n,
                eps1: eps1[n],
                eps2_tilde: eps2_tilde[n],
                eps3_tilde: eps3_tilde[n],
                q: q[n],
                w: w[n],
                j: q[n + 1] - q[n],
                zeta,
                t_c: temperature_of(eps1[n]),
                zeta_carnot: carnot_cop(eps1[n], config.eps2_0),
            }
        })
        .collect();
    Ok(records)
}

/// Target polarization after each cycle through the reduced (target-only)
/// 4-dimensional path: damping then reduced compression. Returns
/// eps1(0..=cycles). Independent of the full-space path above; used for
/// cross-checks and optimal-angle sweeps.
pub fn reduced_path_polarizations(
    gamma: f64,
    theta: f64,
    eps1_0: f64,
    eps2_0: f64,
    eps3_0: f64,
    variant: CompressionVariant,
    cycles: usize,
) -> Result<Vec<f64>> {
    let phi = cycle_superoperator(gamma, theta, eps2_0, eps3_0, variant, CycleScope::TargetOnly)?;
    let mut rho = DensityMatrix::from_polarization(eps1_0)?.into_matrix();
    let mut out = Vec::with_capacity(cycles + 1);
    out.push((rho.get(1, 1) - rho.get(0, 0)).re);
    for _ in 0..cycles {
        rho = phi.apply_matrix(&rho)?;
        out.push((rho.get(1, 1) - rho.get(0, 0)).re);
    }
    Ok(out)
}

/// One stochastic trajectory of the random-unitary compression: at each cycle
/// the ideal swap fires with probability sin^2(theta), otherwise nothing
/// happens; damping and refresh act as usual. Deterministic for a given seed.
pub fn sample_trajectory(config: &RefrigeratorConfig, seed: u64) -> Result<Vec<CycleRecord>> {
    if config.variant != CompressionVariant::RandomUnitary {
        return Err(Error::UnsupportedVariant {
            variant: config.variant.name(),
            reason: "trajectory sampling is defined for the random-unitary mixture",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let swap_probability = config.theta.sin().powi(2);

    let damp = superoperator_of(&crate::channels::extended_damping_channel(config.gamma)?);
    let swap = superoperator_of(&crate::channels::compression_channel(
        std::f64::consts::FRAC_PI_2,
        CompressionVariant::RandomUnitary,
    )?);
    let refresh = superoperator_of(&crate::channels::refresh_channel(
        config.eps2_0,
        config.eps3_0,
    )?);

    let mut rho = DensityMatrix::product_state(config.eps1_0, config.eps2_0, config.eps3_0)?
        .into_matrix();
    let mut eps1 = vec![polarization_of_marginal(&rho, 1)?];
    let mut q = Vec::new();
    let mut w = Vec::new();
    let mut eps2_tilde = Vec::new();
    let mut eps3_tilde = Vec::new();

    for cycle in 0..config.cycles + 1 {
        let damped = damp.apply_matrix(&rho)?;
        let eps1_damped = polarization_of_marginal(&damped, 1)?;
        let damping_loss = eps1_damped - eps1[cycle];
        let fired = rng.random::<f64>() < swap_probability;
        let (tilde, transfer) = if fired {
            let transfer =
                damped.get(IDX_011, IDX_011).re - damped.get(IDX_100, IDX_100).re;
            (swap.apply_matrix(&damped)?, transfer)
        } else {
            (damped.clone(), 0.0)
        };
        eps2_tilde.push(polarization_of_marginal(&tilde, 2)?);
        eps3_tilde.push(polarization_of_marginal(&tilde, 3)?);
        let next = DensityMatrix::new(refresh.apply_matrix(&tilde)?)?;
        q.push(-(damping_loss + 2.0 * transfer));
        w.push(-(damping_loss - 2.0 * transfer));
        eps1.push(polarization_of_marginal(next.matrix(), 1)?);
        rho = next.into_matrix();
    }

    let records = (0..config.cycles)
        .map(|n| {
            let zeta = if w[n].abs() < WORK_FLOOR {
                None
            } else {
                Some(-q[n] / w[n])
            };
            CycleRecord {
                n,
                eps1: eps1[n],
                eps2_tilde: eps2_tilde[n],
                eps3_tilde: eps3_tilde[n],
                q: q[n],
                w: w[n],
                j: q[n + 1] - q[n],
                zeta,
                t_c: temperature_of(eps1[n]),
                zeta_carnot: carnot_cop(eps1[n], config.eps2_0),
            }
        })
        .collect();
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::{self, ClosedFormParams};
    use std::f64::consts::{FRAC_PI_2, PI};

    const TOL: f64 = 1e-12;

    fn config(
        gamma: f64,
        theta: f64,
        e1: f64,
        e2: f64,
        e3: f64,
        cycles: usize,
    ) -> RefrigeratorConfig {
        RefrigeratorConfig::new(
            gamma,
            theta,
            e1,
            e2,
            e3,
            cycles,
            CompressionVariant::RandomUnitary,
        )
        .unwrap()
    }

    #[test]
    fn first_cycle_ideal_swap_bookkeeping() {
        // Oracle: direct 8-state probability propagation. The first ideal
        // swap moves p_011 = 0.32 <-> p_100 = 0.02, so eps1: 0 -> 0.6,
        // Q(0) = -0.6, W(0) = 0.6, zeta(0) = 1, J(0) = 0.408.
        let records = run_cycles(&config(0.0, FRAC_PI_2, 0.0, 0.6, 0.6, 3)).unwrap();
        let r0 = &records[0];
        assert_eq!(r0.n, 0);
        assert!(r0.eps1.abs() <= TOL);
        assert!((r0.q + 0.6).abs() <= TOL);
        assert!((r0.w - 0.6).abs() <= TOL);
        assert_eq!(r0.zeta, Some(1.0));
        assert!((r0.j - 0.408).abs() <= TOL);
        assert!((records[1].eps1 - 0.6).abs() <= TOL);
        // Reset marginals after the first compression are fully depleted.
        assert!(r0.eps2_tilde.abs() <= TOL);
        assert!(r0.eps3_tilde.abs() <= TOL);
    }

    #[test]
    fn reversible_cop_is_exactly_one() {
        for theta in [PI / 6.0, PI / 4.0, PI / 3.0, FRAC_PI_2] {
            for variant in [
                CompressionVariant::RandomUnitary,
                CompressionVariant::CorrectedKraus,
            ] {
                let cfg = RefrigeratorConfig::new(0.0, theta, 0.0, 0.6, 0.6, 25, variant)
                    .unwrap();
                for r in run_cycles(&cfg).unwrap() {
                    assert_eq!(r.zeta, Some(1.0), "theta={theta} n={}", r.n);
                }
            }
        }
    }

    #[test]
    fn heat_ratio_constant_and_matches_contraction() {
        let cfg = config(0.01, PI / 3.0, 0.0, 0.6, 0.6, 12);
        let records = run_cycles(&cfg).unwrap();
        let p = ClosedFormParams::new(0.01, PI / 3.0, 0.0, 0.6, 0.6).unwrap();
        let a = closedform::contraction_factor(&p);
        for pair in records.windows(2) {
            assert!((pair[1].q / pair[0].q - a).abs() <= 1e-9);
        }
    }

    #[test]
    fn damping_only_follows_exponential_law() {
        let cfg = config(0.05, 0.0, 0.3, 0.6, 0.6, 20);
        let records = run_cycles(&cfg).unwrap();
        for r in &records {
            let expect = -1.0 + 1.3 * 0.95f64.powi(r.n as i32);
            assert!((r.eps1 - expect).abs() <= 1e-12);
        }
    }

    #[test]
    fn exchange_symmetry_of_reset_polarizations() {
        let a = run_cycles(&config(0.02, PI / 3.0, 0.1, 0.58, 0.41, 10)).unwrap();
        let b = run_cycles(&config(0.02, PI / 3.0, 0.1, 0.41, 0.58, 10)).unwrap();
        for (ra, rb) in a.iter().zip(&b) {
            assert!((ra.eps1 - rb.eps1).abs() <= TOL);
            assert!((ra.q - rb.q).abs() <= TOL);
            assert!((ra.w - rb.w).abs() <= TOL);
        }
    }

    #[test]
    fn reset_marginal_after_first_compression() {
        // Closed marginal of the ideal swap at gamma = 0, eps1(0) = 0:
        // eps2~ = [eps1 (1 + e2 e3) + e2 - e3] / 2.
        let records = run_cycles(&config(0.0, FRAC_PI_2, 0.0, 0.58, 0.41, 2)).unwrap();
        let expect = (0.58 - 0.41) / 2.0;
        assert!((records[0].eps2_tilde - expect).abs() <= TOL);
        // Both resets shift by the same transfer amount.
        let shift2 = 0.58 - records[0].eps2_tilde;
        let shift3 = 0.41 - records[0].eps3_tilde;
        assert!((shift2 - shift3).abs() <= TOL);
    }

    #[test]
    fn engine_matches_closed_forms_on_experimental_point() {
        let (gamma, theta, e2, e3) = (1e-4, PI / 3.4, 0.58, 0.41);
        let cfg = config(gamma, theta, 0.0, e2, e3, 8);
        let records = run_cycles(&cfg).unwrap();
        let p = ClosedFormParams::new(gamma, theta, 0.0, e2, e3).unwrap();
        for r in &records {
            assert!((r.eps1 - closedform::target_polarization(&p, r.n)).abs() <= 1e-12);
            assert!((r.q - closedform::heat_per_cycle(&p, r.n)).abs() <= 1e-12);
            assert!((r.w - closedform::work_per_cycle(&p, r.n)).abs() <= 1e-12);
            assert!((r.j - closedform::cooling_power(&p, r.n)).abs() <= 1e-12);
        }
    }

    #[test]
    fn theta_zero_reports_undefined_cop() {
        let records = run_cycles(&config(0.0, 0.0, 0.0, 0.6, 0.6, 4)).unwrap();
        for r in &records {
            assert_eq!(r.zeta, None);
            assert!(r.q.abs() <= TOL && r.w.abs() <= TOL);
        }
    }

    #[test]
    fn verbatim_variant_rejected() {
        let cfg = RefrigeratorConfig::new(
            0.0,
            FRAC_PI_2,
            0.0,
            0.6,
            0.6,
            3,
            CompressionVariant::VerbatimKraus,
        )
        .unwrap();
        assert!(matches!(
            run_cycles(&cfg),
            Err(Error::UnsupportedVariant { .. })
        ));
        assert!(sample_trajectory(&cfg, 1).is_err());
    }

    #[test]
    fn temperature_examples() {
        assert!((temperature_of(0.6) - 1.0 / 4.0f64.ln()).abs() <= TOL);
        assert!((temperature_of(0.6) - 0.721_347_520_444_481_7).abs() <= 1e-12);
        assert_eq!(temperature_of(0.0), f64::INFINITY);
        assert_eq!(temperature_of(1.0), 0.0);
        assert!((temperature_of(1.2 / 1.36) - 1.0 / 16.0f64.ln()).abs() <= 1e-9);
        assert!(temperature_of(-0.5) < 0.0);
        // One-ulp overshoots from marginal extraction clamp instead of NaN.
        assert!(!temperature_of(-1.0 - 2e-16).is_nan());
        assert!(!temperature_of(1.0 + 2e-16).is_nan());
    }

    #[test]
    fn carnot_examples() {
        // eps_c = 2*0.6/1.36 gives T_h = 2 T_c exactly, hence zeta_C = 1.
        let z = carnot_cop(1.2 / 1.36, 0.6).unwrap();
        assert!((z - 1.0).abs() <= 1e-9);
        assert_eq!(carnot_cop(0.6, 0.6), None);
        // T_c -> 0 limit: zeta_C decreases to 0 as eps_cold -> 1 (the
        // approach is logarithmic in 1 - eps).
        let mut prev = f64::INFINITY;
        for eps in [0.9, 0.999, 0.999_999_9] {
            let z = carnot_cop(eps, 0.6).unwrap();
            assert!(z < prev && z > 0.0);
            prev = z;
        }
        assert_eq!(carnot_cop(1.0, 0.6), Some(0.0));
        // Cold side hotter than the bath: undefined.
        assert_eq!(carnot_cop(0.3, 0.6), None);
    }

    #[test]
    fn trajectory_limits() {
        // theta = pi/2: the swap branch fires every cycle, identical to the
        // deterministic run.
        let cfg = config(0.0, FRAC_PI_2, 0.0, 0.6, 0.6, 6);
        let det = run_cycles(&cfg).unwrap();
        let traj = sample_trajectory(&cfg, 42).unwrap();
        for (a, b) in det.iter().zip(&traj) {
            assert!((a.eps1 - b.eps1).abs() <= TOL);
            assert!((a.q - b.q).abs() <= TOL);
        }

        // theta = 0 with gamma = 0: nothing ever happens.
        let cfg = config(0.0, 0.0, 0.25, 0.6, 0.6, 6);
        for r in sample_trajectory(&cfg, 7).unwrap() {
            assert!((r.eps1 - 0.25).abs() <= TOL);
        }

        // Determinism per seed.
        let cfg = config(0.0, PI / 3.0, 0.0, 0.6, 0.6, 6);
        let a = sample_trajectory(&cfg, 123).unwrap();
        let b = sample_trajectory(&cfg, 123).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn trajectory_mean_tracks_deterministic_map() {
        // Light version of the Monte-Carlo consistency check (the acceptance
        // suite runs 10^4 trajectories): fixed seeds, 4-sigma band.
        let cycles = 6;
        let cfg = config(0.0, PI / 3.0, 0.0, 0.6, 0.6, cycles);
        let det = run_cycles(&cfg).unwrap();
        let n_traj = 800;
        let mut sums = vec![0.0; cycles];
        let mut sq = vec![0.0; cycles];
        for seed in 0..n_traj {
            let t = sample_trajectory(&cfg, seed as u64).unwrap();
            for k in 0..cycles {
                sums[k] += t[k].eps1;
                sq[k] += t[k].eps1 * t[k].eps1;
            }
        }
        for k in 1..cycles {
            let mean = sums[k] / n_traj as f64;
            let var = (sq[k] / n_traj as f64 - mean * mean).max(0.0);
            let se = (var / n_traj as f64).sqrt();
            assert!(
                (mean - det[k].eps1).abs() <= 4.0 * se + 1e-12,
                "cycle {k}: mean {mean} vs {}",
                det[k].eps1
            );
        }
    }

    #[test]
    fn reduced_path_matches_full_path() {
        let cfg = config(0.01, PI / 3.4, 0.1, 0.58, 0.41, 15);
        let records = run_cycles(&cfg).unwrap();
        let series = reduced_path_polarizations(
            cfg.gamma, cfg.theta, cfg.eps1_0, cfg.eps2_0, cfg.eps3_0, cfg.variant, 15,
        )
        .unwrap();
        for r in &records {
            assert!((r.eps1 - series[r.n]).abs() <= 1e-11);
        }
    }

    #[test]
    fn config_validation() {
        assert!(RefrigeratorConfig::new(
            2.0,
            FRAC_PI_2,
            0.0,
            0.6,
            0.6,
            5,
            CompressionVariant::RandomUnitary
        )
        .is_err());
        assert!(RefrigeratorConfig::new(
            0.0,
            -0.5,
            0.0,
            0.6,
            0.6,
            5,
            CompressionVariant::RandomUnitary
        )
        .is_err());
        assert!(RefrigeratorConfig::new(
            0.0,
            FRAC_PI_2,
            0.0,
            1.4,
            0.6,
            5,
            CompressionVariant::RandomUnitary
        )
        .is_err());
    }
}
