//! Closed-form expressions for the cooling cycle: target polarization after n
//! cycles, heat, work, cooling power and COP per cycle, the optimal
//! compression angle, and the alternate printed transcriptions kept for the
//! audit (which literal evaluation shows to disagree with brute force).
//!
//! The trusted set reproduces brute-force channel propagation to machine
//! precision; the `alternate_*` functions make no such promise and exist so
//! the audit can quantify their deviation.

use crate::error::{Error, Result};

/// Parameters of the closed-form expressions; same ranges as the engine
/// configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormParams {
    pub gamma: f64,
    pub theta: f64,
    pub eps1_0: f64,
    pub eps2_0: f64,
    pub eps3_0: f64,
}

impl ClosedFormParams {
    pub fn new(gamma: f64, theta: f64, eps1_0: f64, eps2_0: f64, eps3_0: f64) -> Result<Self> {
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

/// The pair (F, G): F = 3 + (1 + eps2 eps3) cos(2 theta) - eps2 eps3 and
/// G = ln(4 / ((1 - gamma) F)), so that e^{-G} = (1 - gamma) F / 4 is the
/// per-cycle contraction of the target polarization toward its fixed point.
/// F reduces to the equal-polarization form when eps2 = eps3; G is +inf at
/// gamma = 1.
pub fn decay_constants(p: &ClosedFormParams) -> (f64, f64) {
    let m = 1.0 + p.eps2_0 * p.eps3_0;
    let f = 3.0 + m * (2.0 * p.theta).cos() - p.eps2_0 * p.eps3_0;
    let g = (4.0 / ((1.0 - p.gamma) * f)).ln();
    (f, g)
}

/// Per-cycle contraction factor e^{-G} = (1 - gamma) F / 4.
pub fn contraction_factor(p: &ClosedFormParams) -> f64 {
    let (f, _) = decay_constants(p);
    (1.0 - p.gamma) * f / 4.0
}

/// 4 (1 - e^{-G}) = (gamma - 1) F + 4, computed through the exact identity
/// 4 - F = 2 (1 + eps2 eps3) sin^2(theta). The printed form cancels
/// catastrophically at gamma = 0, theta = 0; this one is exactly zero there
/// and nonnegative everywhere.
fn gap_denominator(p: &ClosedFormParams) -> f64 {
    let m = 1.0 + p.eps2_0 * p.eps3_0;
    let s2 = p.theta.sin().powi(2);
    let (f, _) = decay_constants(p);
    2.0 * m * s2 + p.gamma * f
}

/// Numerator of the heat expression at n = 0 (four times Q(0)):
/// 2 ((1 + eps2 eps3) eps1(0) - eps2 - eps3) sin^2(theta) + gamma (1 + eps1(0)) F.
fn heat_seed(p: &ClosedFormParams) -> f64 {
    let m = 1.0 + p.eps2_0 * p.eps3_0;
    let s2 = p.theta.sin().powi(2);
    let (f, _) = decay_constants(p);
    2.0 * s2 * (m * p.eps1_0 - p.eps2_0 - p.eps3_0) + p.gamma * (1.0 + p.eps1_0) * f
}

/// Target polarization after n cycles:
///
/// eps1(n) = [2 (eps2 + eps3) sin^2(theta) - gamma F
///            + (2 sin^2(theta)((1 + eps2 eps3) eps1(0) - eps2 - eps3)
///               + gamma (1 + eps1(0)) F) e^{-nG}] / ((gamma - 1) F + 4).
///
/// When the denominator vanishes (gamma = 0 and sin(theta) = 0) the cycle is
/// the identity and eps1(n) = eps1(0).
pub fn target_polarization(p: &ClosedFormParams, n: usize) -> f64 {
    let den = gap_denominator(p);
    if den == 0.0 {
        return p.eps1_0;
    }
    let s2 = p.theta.sin().powi(2);
    let (f, _) = decay_constants(p);
    let a = contraction_factor(p);
    let num_fixed = 2.0 * (p.eps2_0 + p.eps3_0) * s2 - p.gamma * f;
    (num_fixed + heat_seed(p) * a.powi(n as i32)) / den
}

/// Heat extracted during cycle n: Q(n) = heat_seed * e^{-nG} / 4, identically
/// equal to -(eps1(n+1) - eps1(n)).
pub fn heat_per_cycle(p: &ClosedFormParams, n: usize) -> f64 {
    heat_seed(p) * contraction_factor(p).powi(n as i32) / 4.0
}

/// Cooling power J(n) = Q(n+1) - Q(n) = [(1 - gamma) F / 4 - 1] Q(n).
pub fn cooling_power(p: &ClosedFormParams, n: usize) -> f64 {
    -gap_denominator(p) / 4.0 * heat_per_cycle(p, n)
}

/// Work supplied during cycle n:
///
/// W(n) = sin^2(theta) [gamma (eps2 eps3 + 1) + (gamma - 1)(eps2 eps3 + 1) eps1(n)
///        + eps2 + eps3] + eps1(n) - eps1(n+1).
///
/// Evaluated through the algebraically identical regrouping
///
/// W(n) = sin^2 gamma m (1 + eps1(n))
///      + sin^2 [gamma F (eps2 + eps3 + m) - m heat_seed e^{-nG}] / den
///      + heat_seed e^{-nG} / 4,
///
/// which avoids the eps2 + eps3 - m eps1(n) cancellation near convergence:
/// at gamma = 0 the expression collapses to -Q(n) as a pure product, keeping
/// the reversible COP pinned at exactly 1 in floating point.
pub fn work_per_cycle(p: &ClosedFormParams, n: usize) -> f64 {
    let den = gap_denominator(p);
    if den == 0.0 {
        return 0.0;
    }
    let m = 1.0 + p.eps2_0 * p.eps3_0;
    let s2 = p.theta.sin().powi(2);
    let (f, _) = decay_constants(p);
    let transient = heat_seed(p) * contraction_factor(p).powi(n as i32);
    let e_n = target_polarization(p, n);
    s2 * p.gamma * m * (1.0 + e_n)
        + s2 * (p.gamma * f * (p.eps2_0 + p.eps3_0 + m) - m * transient) / den
        + transient / 4.0
}

/// Work magnitude below which the COP is reported as undefined.
pub const WORK_FLOOR: f64 = 1e-14;

/// Coefficient of performance zeta(n) = -Q(n) / W(n); `None` when the work is
/// numerically zero (e.g. theta = 0). Equal to 1 for every n and theta when
/// gamma = 0.
pub fn cop(p: &ClosedFormParams, n: usize) -> Option<f64> {
    let w = work_per_cycle(p, n);
    if w.abs() < WORK_FLOOR {
        return None;
    }
    Some(-heat_per_cycle(p, n) / w)
}

/// COP from the standalone closed ratio for the special case eps1(0) = 0,
/// eps2(0) = eps3(0) = eps (the form the audit cross-checks against -Q/W):
///
/// zeta(n) = -[2 gamma (1 + cos^2) - 2 eps (2 + gamma eps) sin^2] [(gamma-1) f + 4] e^{-ng}
///           / {[(gamma-1)(f + 4 (eps^2+1) sin^2) + 4] [gamma f + 2 eps (cos 2theta - 1)] e^{-ng}
///              + 16 (1+eps)^2 gamma sin^2}.
pub fn cop_equal_resets_form(gamma: f64, theta: f64, eps: f64, n: usize) -> Option<f64> {
    let p = ClosedFormParams::new(gamma, theta, 0.0, eps, eps).ok()?;
    let (f, _) = decay_constants(&p);
    let s2 = theta.sin().powi(2);
    let c2 = theta.cos().powi(2);
    let decay = contraction_factor(&p).powi(n as i32);
    let num = -(2.0 * gamma * (1.0 + c2) - 2.0 * eps * (2.0 + gamma * eps) * s2)
        * ((gamma - 1.0) * f + 4.0)
        * decay;
    let den = ((gamma - 1.0) * (f + 4.0 * (eps * eps + 1.0) * s2) + 4.0)
        * (gamma * f + 2.0 * eps * ((2.0 * theta).cos() - 1.0))
        * decay
        + 16.0 * (1.0 + eps) * (1.0 + eps) * gamma * s2;
    if den.abs() < WORK_FLOOR {
        return None;
    }
    Some(num / den)
}

/// Cooling power from the standalone closed ratio for eps1(0) = 0,
/// eps2 = eps3 = eps: J(n) = (1/16)[(gamma-1) f + 4][4 eps sin^2 - gamma f] e^{-ng}.
pub fn cooling_power_equal_resets_form(gamma: f64, theta: f64, eps: f64, n: usize) -> Option<f64> {
    let p = ClosedFormParams::new(gamma, theta, 0.0, eps, eps).ok()?;
    let (f, _) = decay_constants(&p);
    let s2 = theta.sin().powi(2);
    let decay = contraction_factor(&p).powi(n as i32);
    Some(((gamma - 1.0) * f + 4.0) * (4.0 * eps * s2 - gamma * f) * decay / 16.0)
}

/// Membership in the region where the n = 1 optimal angle stays pi/2:
/// 0 <= eps1 < 1/sqrt(3), eps2 < 1/(3 eps1), eps3 < 1/(3 eps2)
/// (divisions by zero give +inf, so zero polarizations always pass).
fn in_boundary_region(eps1: f64, eps2: f64, eps3: f64) -> bool {
    eps1 >= 0.0
        && eps1 < 1.0 / 3.0f64.sqrt()
        && eps2 >= 0.0
        && eps2 < 1.0 / (3.0 * eps1)
        && eps3 >= 0.0
        && eps3 < 1.0 / (3.0 * eps2)
}

/// The compression angle maximizing the cooling power J(n) at zero damping:
///
/// theta_opt = arccos[(2 e2 e3 + n e2 e3 + n - 6) / ((2 + n)(1 + e2 e3))] / 2,
///
/// with the arccos argument clamped to [-1, 1] (clamping at -1 yields pi/2).
/// Returns pi/2 for n = 0; for n = 1 returns pi/2 inside the boundary region
/// above, theta_opt otherwise; theta_opt for n >= 2. Requires the ordering
/// eps2, eps3 >= eps1 >= 0.
pub fn optimal_compression_angle(n: usize, eps1: f64, eps2: f64, eps3: f64) -> Result<f64> {
    range("eps1", eps1, 0.0, 1.0)?;
    range("eps2", eps2, 0.0, 1.0)?;
    range("eps3", eps3, 0.0, 1.0)?;
    if eps1 > eps2 || eps1 > eps3 {
        return Err(Error::OrderingViolated { eps1, eps2, eps3 });
    }
    let interior = || {
        let prod = eps2 * eps3;
        let arg = (2.0 * prod + (n as f64) * prod + (n as f64) - 6.0)
            / ((2.0 + n as f64) * (1.0 + prod));
        (arg.clamp(-1.0, 1.0)).acos() / 2.0
    };
    Ok(match n {
        0 => std::f64::consts::FRAC_PI_2,
        1 if in_boundary_region(eps1, eps2, eps3) => std::f64::consts::FRAC_PI_2,
        _ => interior(),
    })
}

/// Literal evaluations of the alternate printed forms for the reset
/// polarizations before refresh, the cumulative work, and the COP. No
/// correctness guarantee: these feed the audit comparison only.
#[derive(Debug, Clone, Copy)]
pub struct AlternatePrintedForms {
    pub eps2_tilde: f64,
    pub eps3_tilde: f64,
    pub work: f64,
    pub cop: f64,
}

/// Alternate reset-qubit polarization before refresh (literal transcription):
///
/// eps_i(n) = [2 I_i sin^2 + 4 gamma (1 - eps_i(0) cos^2)] / (2 [(gamma-1) F + 4])
///          + [sin^2 (1 + e2 e3) / F] * heat_seed / [(gamma-1) F + 4] * e^{-nG},
/// I_i = ((gamma-1) eps_i^2 + eps_i + gamma) eps_j - eps_i + 1.
fn alternate_reset_polarization(p: &ClosedFormParams, reset_index: usize, n: usize) -> f64 {
    let (f, _) = decay_constants(p);
    let s2 = p.theta.sin().powi(2);
    let c2 = p.theta.cos().powi(2);
    let m = 1.0 + p.eps2_0 * p.eps3_0;
    let (ei, ej) = match reset_index {
        2 => (p.eps2_0, p.eps3_0),
        3 => (p.eps3_0, p.eps2_0),
        _ => panic!("reset index must be 2 or 3"),
    };
    let den = (p.gamma - 1.0) * f + 4.0;
    let coupling = ((p.gamma - 1.0) * ei * ei + ei + p.gamma) * ej - ei + 1.0;
    let steady = (2.0 * coupling * s2 + 4.0 * p.gamma * (1.0 - ei * c2)) / (2.0 * den);
    let transient =
        (s2 * m / f) * heat_seed(p) / den * contraction_factor(p).powi(n as i32);
    steady + transient
}

/// Alternate cumulative work (literal transcription):
///
/// W(n) = 4 sin^2 (1+e2)(1+e3) / [(gamma-1)F + 4]
///      + (1 + 4 gamma sin^2 (1 + e2 e3)(gamma - 1) / [(gamma-1)F + 4])
///        * heat_seed * e^{-nG} / 4.
fn alternate_work(p: &ClosedFormParams, n: usize) -> f64 {
    let (f, _) = decay_constants(p);
    let s2 = p.theta.sin().powi(2);
    let m = 1.0 + p.eps2_0 * p.eps3_0;
    let den = (p.gamma - 1.0) * f + 4.0;
    4.0 * s2 * (1.0 + p.eps2_0) * (1.0 + p.eps3_0) / den
        + (1.0 + 4.0 * p.gamma * s2 * m * (p.gamma - 1.0) / den)
            * heat_seed(p)
            * contraction_factor(p).powi(n as i32)
            / 4.0
}

/// Alternate COP (literal transcription):
///
/// zeta(n) = -[(gamma-1)F + 4] R e^{-nG}
///         / {[(gamma-1)F + 4 - 4 (1 + e2 e3)(1 - gamma) sin^2] R e^{-nG}
///            + 16 sin^2 (1 + e2)(1 + e3)},
/// R = heat_seed.
fn alternate_cop(p: &ClosedFormParams, n: usize) -> f64 {
    let (f, _) = decay_constants(p);
    let s2 = p.theta.sin().powi(2);
    let m = 1.0 + p.eps2_0 * p.eps3_0;
    let den_f = (p.gamma - 1.0) * f + 4.0;
    let r = heat_seed(p);
    let decay = contraction_factor(p).powi(n as i32);
    let num = -den_f * r * decay;
    let den = (den_f - 4.0 * m * (1.0 - p.gamma) * s2) * r * decay
        + 16.0 * s2 * (1.0 + p.eps2_0) * (1.0 + p.eps3_0);
    num / den
}

/// All alternate printed forms at cycle n.
pub fn alternate_printed_forms(p: &ClosedFormParams, n: usize) -> AlternatePrintedForms {
    AlternatePrintedForms {
        eps2_tilde: alternate_reset_polarization(p, 2, n),
        eps3_tilde: alternate_reset_polarization(p, 3, n),
        work: alternate_work(p, n),
        cop: alternate_cop(p, n),
    }
}

/// Low-damping limit probe for the cooling power at the optimal angle,
/// including the printed first-order-in-gamma correction. Audit-only.
pub fn cooling_power_low_damping_probe(
    gamma: f64,
    eps1_0: f64,
    eps2: f64,
    eps3: f64,
    n: usize,
) -> Result<f64> {
    let theta_n = optimal_compression_angle(n, eps1_0, eps2, eps3)?;
    let zero_damping = ClosedFormParams::new(0.0, theta_n, eps1_0, eps2, eps3)?;
    let (_, g0) = decay_constants(&zero_damping);
    let m = 1.0 + eps2 * eps3;
    let decay = (-(n as f64) * g0).exp();
    let shared = decay / (2.0 - 2.0 * eps2 * eps3);
    let zeroth = m * (eps2 + eps3 - eps1_0 * m) * shared;
    let nf = n as f64;
    let first = gamma
        * (2.0 * eps2 + 2.0 * eps3 + eps2 * eps2 * eps3 * eps3 - 1.0
            - m * (eps1_0 * (nf - 3.0 + (1.0 + nf) * eps2 * eps3) - nf * (eps2 + eps3)))
        * shared;
    Ok(zeroth + first)
}

/// Low-damping limit probe for the COP at theta = pi/2, including the printed
/// first-order-in-gamma correction. Audit-only; useful for n G << |ln gamma|.
pub fn cop_low_damping_probe(gamma: f64, eps1_0: f64, eps2: f64, eps3: f64, n: usize) -> f64 {
    let p = ClosedFormParams::new(0.0, std::f64::consts::FRAC_PI_2, eps1_0, eps2, eps3)
        .expect("validated ranges");
    let (_, g0) = decay_constants(&p);
    let m = 1.0 + eps2 * eps3;
    1.0 + (4.0 * gamma / m)
        * (1.0
            + (1.0 + eps2) * (1.0 + eps3) / (eps1_0 - eps2 - eps3 + eps1_0 * eps2 * eps3)
                * ((n as f64) * g0).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    const TOL: f64 = 1e-12;

    fn params(gamma: f64, theta: f64, e1: f64, e2: f64, e3: f64) -> ClosedFormParams {
        ClosedFormParams::new(gamma, theta, e1, e2, e3).unwrap()
    }

    #[test]
    fn decay_constants_examples() {
        let (f, g) = decay_constants(&params(0.0, FRAC_PI_2, 0.0, 0.6, 0.6));
        assert!((f - 1.28).abs() <= TOL);
        assert!((g - 3.125f64.ln()).abs() <= TOL);
        assert!((g - 1.139_434_283_188_365).abs() <= 1e-12);

        // theta = 0: F = 4 and G = -ln(1 - gamma).
        for gamma in [0.0, 0.3, 0.9] {
            let (f, g) = decay_constants(&params(gamma, 0.0, 0.0, 0.2, 0.9));
            assert!((f - 4.0).abs() <= TOL);
            assert!((g + (1.0 - gamma).ln()).abs() <= TOL);
        }

        // Zero reset polarization: F = 2, G = ln 2 at gamma = 0, theta = pi/2.
        let (f, g) = decay_constants(&params(0.0, FRAC_PI_2, 0.0, 0.0, 0.0));
        assert!((f - 2.0).abs() <= TOL);
        assert!((g - 2.0f64.ln()).abs() <= TOL);

        // gamma = 1: G = +inf.
        let (_, g) = decay_constants(&params(1.0, FRAC_PI_2, 0.0, 0.6, 0.6));
        assert!(g.is_infinite() && g > 0.0);
    }

    #[test]
    fn target_polarization_examples() {
        let p = params(0.0, FRAC_PI_2, 0.0, 0.6, 0.6);
        assert!((target_polarization(&p, 0)).abs() <= TOL);
        assert!((target_polarization(&p, 1) - 0.6).abs() <= TOL);
        // n -> infinity: 2 eps / (1 + eps^2) = 1.2 / 1.36.
        assert!((target_polarization(&p, 2000) - 1.2 / 1.36).abs() <= TOL);

        // Damping-only limit: eps1(n) = -1 + (1 + eps1(0)) (1 - gamma)^n.
        for (gamma, e1) in [(0.05, 0.3), (0.2, 0.0)] {
            let p = params(gamma, 0.0, e1, 0.6, 0.41);
            for n in [0usize, 1, 5, 20] {
                let expect = -1.0 + (1.0 + e1) * (1.0 - gamma).powi(n as i32);
                assert!((target_polarization(&p, n) - expect).abs() <= 1e-12);
            }
        }

        // gamma = 0, theta = 0: identity dynamics.
        let p = params(0.0, 0.0, 0.1, 0.6, 0.6);
        assert!((target_polarization(&p, 17) - 0.1).abs() == 0.0);
    }

    #[test]
    fn heat_examples_and_identity() {
        let p = params(0.0, FRAC_PI_2, 0.0, 0.6, 0.6);
        assert!((heat_per_cycle(&p, 0) + 0.6).abs() <= TOL);
        assert!((heat_per_cycle(&p, 1) + 0.192).abs() <= TOL);

        // theta = 0, gamma = 0: no heat.
        let p0 = params(0.0, 0.0, 0.3, 0.6, 0.6);
        for n in 0..5 {
            assert!(heat_per_cycle(&p0, n).abs() <= TOL);
        }

        // Q(n) = -(eps1(n+1) - eps1(n)) over a parameter grid.
        for gamma in [0.0, 0.01, 0.1] {
            for theta in [0.0, PI / 6.0, PI / 3.4, FRAC_PI_2] {
                for (e2, e3) in [(0.6, 0.6), (0.58, 0.41)] {
                    for e1 in [0.0, 0.1] {
                        let p = params(gamma, theta, e1, e2, e3);
                        for n in [0usize, 1, 3, 9] {
                            let q = heat_per_cycle(&p, n);
                            let delta =
                                target_polarization(&p, n + 1) - target_polarization(&p, n);
                            assert!((q + delta).abs() <= 1e-12);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cooling_power_examples_and_identity() {
        let p = params(0.0, FRAC_PI_2, 0.0, 0.6, 0.6);
        assert!((cooling_power(&p, 0) - 0.408).abs() <= TOL);

        let p0 = params(0.0, 0.0, 0.0, 0.6, 0.6);
        assert!(cooling_power(&p0, 3).abs() <= TOL);

        // J(n) = Q(n+1) - Q(n); J(n)/Q(n) independent of n.
        let p = params(0.05, PI / 3.0, 0.1, 0.58, 0.41);
        for n in 0..8 {
            let j = cooling_power(&p, n);
            assert!((j - (heat_per_cycle(&p, n + 1) - heat_per_cycle(&p, n))).abs() <= 1e-12);
            let ratio = j / heat_per_cycle(&p, n);
            let ratio0 = cooling_power(&p, 0) / heat_per_cycle(&p, 0);
            assert!((ratio - ratio0).abs() <= 1e-9);
        }
    }

    #[test]
    fn work_examples() {
        let p = params(0.0, FRAC_PI_2, 0.0, 0.6, 0.6);
        assert!((work_per_cycle(&p, 0) - 0.6).abs() <= TOL);
        // Steady state: the swap does nothing at the fixed point.
        assert!(work_per_cycle(&p, 4000).abs() <= TOL);

        let p0 = params(0.0, 0.0, 0.0, 0.6, 0.6);
        for n in 0..5 {
            assert!(work_per_cycle(&p0, n).abs() <= TOL);
        }
    }

    #[test]
    fn cop_reversible_and_undefined() {
        // gamma = 0: zeta = 1 for every theta in (0, pi) and n.
        for theta in [PI / 6.0, PI / 4.0, PI / 3.0, FRAC_PI_2, 3.0 * PI / 4.0] {
            let p = params(0.0, theta, 0.0, 0.6, 0.6);
            for n in 0..8 {
                let z = cop(&p, n).unwrap();
                assert!((z - 1.0).abs() <= 1e-12, "theta={theta} n={n}");
            }
        }
        // theta = 0: undefined.
        assert!(cop(&params(0.0, 0.0, 0.0, 0.6, 0.6), 0).is_none());
    }

    #[test]
    fn cop_equal_resets_form_matches_ratio() {
        // The standalone ratio must agree with -Q/W for eps1(0)=0, eps2=eps3.
        let expected_first = 0.401f64 / 0.601;
        let z = cop_equal_resets_form(0.1, PI / 3.0, 0.6, 0).unwrap();
        assert!((z - expected_first).abs() <= 1e-12);
        for gamma in [0.0, 1e-4, 0.01, 0.1] {
            for theta in [PI / 6.0, PI / 3.4, FRAC_PI_2] {
                for eps in [0.2, 0.6] {
                    let p = params(gamma, theta, 0.0, eps, eps);
                    for n in 0..6 {
                        let lhs = cop_equal_resets_form(gamma, theta, eps, n).unwrap();
                        let rhs = cop(&p, n).unwrap();
                        assert!(
                            (lhs - rhs).abs() <= 1e-9,
                            "gamma={gamma} theta={theta} eps={eps} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cooling_power_equal_resets_form_matches() {
        for gamma in [0.0, 0.01, 0.1] {
            for theta in [PI / 6.0, FRAC_PI_2] {
                for n in 0..6 {
                    let lhs = cooling_power_equal_resets_form(gamma, theta, 0.6, n).unwrap();
                    let rhs = cooling_power(&params(gamma, theta, 0.0, 0.6, 0.6), n);
                    assert!((lhs - rhs).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn optimal_angle_examples() {
        // n = 0 always pi/2.
        assert!((optimal_compression_angle(0, 0.0, 0.6, 0.6).unwrap() - FRAC_PI_2).abs() <= TOL);
        assert!((optimal_compression_angle(0, 0.2, 0.9, 0.9).unwrap() - FRAC_PI_2).abs() <= TOL);

        // n = 2, eps = 0.6: arccos(-2.56 / 5.44) / 2.
        let t = optimal_compression_angle(2, 0.0, 0.6, 0.6).unwrap();
        assert!((t - (-2.56f64 / 5.44).acos() / 2.0).abs() <= TOL);
        assert!((t - 1.0304).abs() <= 1e-4);

        // n = 1 boundary behavior: small product stays at pi/2, large leaves it.
        assert!(
            (optimal_compression_angle(1, 0.0, 0.2, 0.2).unwrap() - FRAC_PI_2).abs() <= TOL
        );
        let t = optimal_compression_angle(1, 0.0, 0.6, 0.6).unwrap();
        assert!(t < FRAC_PI_2);
        assert!((t - 0.5 * ((3.0 * 0.36f64 - 5.0) / (3.0 * 1.36)).acos()).abs() <= TOL);

        // Ordering violations rejected.
        assert!(optimal_compression_angle(2, 0.7, 0.6, 0.6).is_err());
        assert!(optimal_compression_angle(2, -0.1, 0.6, 0.6).is_err());
    }

    #[test]
    fn optimal_angle_beats_local_neighbors() {
        // J(n) at theta_opt must not be smaller than at nearby angles.
        for n in [0usize, 1, 2, 4, 6] {
            for eps in [0.2, 0.6] {
                let t = optimal_compression_angle(n, 0.0, eps, eps).unwrap();
                let j = |theta: f64| cooling_power(&params(0.0, theta, 0.0, eps, eps), n);
                let j_opt = j(t);
                for dt in [-1e-3, 1e-3] {
                    let probe = (t + dt).clamp(0.0, PI);
                    assert!(j_opt >= j(probe) - 1e-15, "n={n} eps={eps}");
                }
            }
        }
    }

    #[test]
    fn alternate_forms_reproduce_known_deviations() {
        let p = params(0.0, FRAC_PI_2, 0.0, 0.6, 0.6);

        // Alternate reset polarization at n = 1 evaluates to -0.1 even though
        // the brute-force reset marginal after the first ideal compression is 0.
        let alt = alternate_printed_forms(&p, 1);
        assert!((alt.eps2_tilde + 0.1).abs() <= TOL);
        assert!((alt.eps3_tilde + 0.1).abs() <= TOL);

        // Alternate COP at gamma = 0 is 6.528 e^{-nG} / (6.528 e^{-nG} + 40.96), not 1.
        for n in 0..4 {
            let alt = alternate_printed_forms(&p, n);
            let decay = 0.32f64.powi(n as i32);
            let expect = 6.528 * decay / (6.528 * decay + 40.96);
            assert!((alt.cop - expect).abs() <= 1e-12);
            assert!((alt.cop - 1.0).abs() > 0.5);
        }

        // Alternate work at n -> infinity tends to 4 sin^2 (1+e2)(1+e3)/((gamma-1)F+4)
        // = 10.24 / 2.72, while the energy bookkeeping gives 0.
        let alt = alternate_printed_forms(&p, 4000);
        assert!((alt.work - 10.24 / 2.72).abs() <= 1e-12);
        assert!((alt.work - 3.7647).abs() <= 1e-4);
        assert!(work_per_cycle(&p, 4000).abs() <= TOL);
    }

    #[test]
    fn low_damping_cop_probe_tracks_gamma_squared() {
        // The zeroth order of the COP probe is exact (zeta = 1 at gamma = 0),
        // so its error against the trusted ratio shrinks ~ gamma^2 for small n.
        let mut prev = f64::INFINITY;
        for gamma in [1e-2, 1e-3, 1e-4] {
            let mut worst: f64 = 0.0;
            for n in 0..=2 {
                let p = params(gamma, FRAC_PI_2, 0.0, 0.6, 0.6);
                let probe = cop_low_damping_probe(gamma, 0.0, 0.6, 0.6, n);
                let trusted = cop(&p, n).unwrap();
                worst = worst.max((probe - trusted).abs());
            }
            assert!(worst < prev, "probe error must shrink with gamma");
            prev = worst;
        }
    }
}
