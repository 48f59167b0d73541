//! Analysis of measured target-polarization series: per-cycle heat, work,
//! cooling power and COP with first-order (linear) error propagation.
//!
//! Input format: UTF-8 comma-separated text with `#` comments, a preamble of
//! `key=value` sidecar lines (gamma, theta, eps2_0, eps3_0 and optional
//! sigma_eps2_0 / sigma_eps3_0) followed by the header `n,eps1,sigma_eps1`
//! and one row per cycle.

use crate::closedform::WORK_FLOOR;
use crate::error::{Error, Result};

/// A measured value with its standard deviation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measurement {
    pub value: f64,
    pub sigma: f64,
}

impl Measurement {
    pub fn new(value: f64, sigma: f64) -> Self {
        Self { value, sigma }
    }
}

/// A measured polarization series with the fixed protocol parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementSeries {
    /// Target polarizations indexed by cycle, starting at `first_n`.
    pub eps1: Vec<Measurement>,
    pub first_n: usize,
    pub eps2_0: Measurement,
    pub eps3_0: Measurement,
    pub gamma: f64,
    pub theta: f64,
}

impl MeasurementSeries {
    pub fn new(
        eps1: Vec<Measurement>,
        first_n: usize,
        eps2_0: Measurement,
        eps3_0: Measurement,
        gamma: f64,
        theta: f64,
    ) -> Result<Self> {
        if eps1.len() < 2 {
            return Err(Error::SeriesTooShort {
                need: 2,
                got: eps1.len(),
            });
        }
        for m in eps1.iter().chain([&eps2_0, &eps3_0]) {
            check("eps", m.value, -1.0, 1.0)?;
            if m.sigma.is_nan() || m.sigma < 0.0 || !m.sigma.is_finite() {
                return Err(Error::OutOfRange {
                    name: "sigma",
                    value: m.sigma,
                    min: 0.0,
                    max: f64::INFINITY,
                });
            }
        }
        check("gamma", gamma, 0.0, 1.0)?;
        check("theta", theta, 0.0, std::f64::consts::PI)?;
        Ok(Self {
            eps1,
            first_n,
            eps2_0,
            eps3_0,
            gamma,
            theta,
        })
    }
}

fn check(name: &'static str, value: f64, min: f64, max: f64) -> Result<()> {
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

/// Per-cycle experimental figures of merit with propagated uncertainties.
///
/// `j` is `None` on the last analyzable cycle (the finite difference needs
/// one more sample). `zeta` is `None` when |W| falls within one sigma_W of
/// zero; values outside [0, 1.5] are retained with `zeta_outlier` set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentalRecord {
    pub n: usize,
    pub q: Measurement,
    pub w: Measurement,
    pub j: Option<Measurement>,
    pub zeta: Option<Measurement>,
    pub zeta_outlier: bool,
}

/// Parse a delimited-text polarization series.
pub fn parse_series(input: &str) -> Result<MeasurementSeries> {
    const HEADER: &str = "n,eps1,sigma_eps1";
    let mut sidecar: Vec<(String, f64, usize)> = Vec::new();
    let mut rows: Vec<(usize, f64, f64, usize)> = Vec::new();
    let mut seen_header = false;

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !seen_header {
            if line == HEADER {
                seen_header = true;
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected `key=value` sidecar line or header `{HEADER}`"),
                });
            };
            let key = key.trim().to_string();
            let value: f64 = value.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("invalid number for sidecar key `{key}`"),
            })?;
            sidecar.push((key, value, line_no));
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected 3 comma-separated fields, got {}", fields.len()),
            });
        }
        let n: usize = fields[0].parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: "invalid cycle index".into(),
        })?;
        let value: f64 = fields[1].parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: "invalid eps1 value".into(),
        })?;
        let sigma: f64 = fields[2].parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: "invalid sigma_eps1 value".into(),
        })?;
        if !(-1.0..=1.0).contains(&value) || !value.is_finite() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("eps1 ={value} outside [-1, 1]"),
            });
        }
        if sigma.is_nan() || sigma < 0.0 || !sigma.is_finite() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("sigma_eps1 = {sigma} must be finite and >= 0"),
            });
        }
        rows.push((n, value, sigma, line_no));
    }

    if !seen_header {
        return Err(Error::Parse {
            line: input.lines().count(),
            msg: format!("missing header `{HEADER}`"),
        });
    }

    let mut gamma = None;
    let mut theta = None;
    let mut eps2 = None;
    let mut eps3 = None;
    let mut sigma2 = 0.0;
    let mut sigma3 = 0.0;
    for (key, value, line_no) in sidecar {
        match key.as_str() {
            "gamma" => gamma = Some(value),
            "theta" => theta = Some(value),
            "eps2_0" => eps2 = Some(value),
            "eps3_0" => eps3 = Some(value),
            "sigma_eps2_0" => sigma2 = value,
            "sigma_eps3_0" => sigma3 = value,
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unknown sidecar key `{key}`"),
                })
            }
        }
    }
    let missing = |name: &str| Error::Parse {
        line: 0,
        msg: format!("missing sidecar key `{name}`"),
    };
    let gamma = gamma.ok_or_else(|| missing("gamma"))?;
    let theta = theta.ok_or_else(|| missing("theta"))?;
    let eps2 = eps2.ok_or_else(|| missing("eps2_0"))?;
    let eps3 = eps3.ok_or_else(|| missing("eps3_0"))?;

    rows.sort_by_key(|r| r.0);
    for pair in rows.windows(2) {
        if pair[1].0 == pair[0].0 {
            return Err(Error::Parse {
                line: pair[1].3,
                msg: format!("duplicate cycle index n = {}", pair[1].0),
            });
        }
        if pair[1].0 != pair[0].0 + 1 {
            return Err(Error::Parse {
                line: pair[1].3,
                msg: format!(
                    "cycle indices must be consecutive (gap between n = {} and n = {})",
                    pair[0].0, pair[1].0
                ),
            });
        }
    }
    if rows.len() < 2 {
        return Err(Error::SeriesTooShort {
            need: 2,
            got: rows.len(),
        });
    }
    let first_n = rows[0].0;
    let eps1 = rows
        .into_iter()
        .map(|(_, v, s, _)| Measurement::new(v, s))
        .collect();
    MeasurementSeries::new(
        eps1,
        first_n,
        Measurement::new(eps2, sigma2),
        Measurement::new(eps3, sigma3),
        gamma,
        theta,
    )
}

/// Point values of Q, W (and their gradients) at one cycle. Shared by the
/// analysis and by Monte-Carlo validation in the tests.
pub fn point_heat(eps1_n: f64, eps1_next: f64) -> f64 {
    -(eps1_next - eps1_n)
}

pub fn point_work(eps1_n: f64, eps1_next: f64, eps2: f64, eps3: f64, gamma: f64, theta: f64) -> f64 {
    let m = eps2 * eps3 + 1.0;
    let s2 = theta.sin().powi(2);
    s2 * (gamma * m + (gamma - 1.0) * m * eps1_n + eps2 + eps3) + eps1_n - eps1_next
}

/// Analyze a measurement series into per-cycle records with linear error
/// propagation (partial derivatives in quadrature, correlations neglected;
/// gamma and theta enter as exact constants).
pub fn analyze(series: &MeasurementSeries) -> Result<Vec<ExperimentalRecord>> {
    let eps1 = &series.eps1;
    if eps1.len() < 2 {
        return Err(Error::SeriesTooShort {
            need: 2,
            got: eps1.len(),
        });
    }
    let (gamma, theta) = (series.gamma, series.theta);
    let (e2, e3) = (series.eps2_0.value, series.eps3_0.value);
    let (s2v, s3v) = (series.eps2_0.sigma, series.eps3_0.sigma);
    let s2 = theta.sin().powi(2);
    let m = e2 * e3 + 1.0;

    let mut out = Vec::with_capacity(eps1.len() - 1);
    for k in 0..eps1.len() - 1 {
        let e_n = eps1[k];
        let e_next = eps1[k + 1];

        let q = point_heat(e_n.value, e_next.value);
        let sigma_q = (e_n.sigma.powi(2) + e_next.sigma.powi(2)).sqrt();

        let w = point_work(e_n.value, e_next.value, e2, e3, gamma, theta);
        let dw_den = s2 * (gamma - 1.0) * m + 1.0;
        let dw_dnext = -1.0;
        let dw_de2 = s2 * (gamma * e3 + (gamma - 1.0) * e3 * e_n.value + 1.0);
        let dw_de3 = s2 * (gamma * e2 + (gamma - 1.0) * e2 * e_n.value + 1.0);
        let sigma_w = ((dw_den * e_n.sigma).powi(2)
            + (dw_dnext * e_next.sigma).powi(2)
            + (dw_de2 * s2v).powi(2)
            + (dw_de3 * s3v).powi(2))
        .sqrt();

        let j = (k + 2 < eps1.len()).then(|| {
            let e_nn = eps1[k + 2];
            let value = point_heat(e_next.value, e_nn.value) - q;
            let sigma = (e_n.sigma.powi(2) + 4.0 * e_next.sigma.powi(2) + e_nn.sigma.powi(2))
                .sqrt();
            Measurement::new(value, sigma)
        });

        // zeta = -Q/W, undefined when W is within one sigma_W of zero.
        let (zeta, outlier) = if w.abs() < sigma_w || w.abs() < WORK_FLOOR {
            (None, false)
        } else {
            let z = -q / w;
            // d zeta / dx = (-dQ/dx - zeta dW/dx) / W for each measured input.
            let dq_den = 1.0;
            let dq_dnext = -1.0;
            let grad = |dq: f64, dw: f64| (-dq - z * dw) / w;
            let sigma_z = ((grad(dq_den, dw_den) * e_n.sigma).powi(2)
                + (grad(dq_dnext, dw_dnext) * e_next.sigma).powi(2)
                + (grad(0.0, dw_de2) * s2v).powi(2)
                + (grad(0.0, dw_de3) * s3v).powi(2))
            .sqrt();
            (Some(Measurement::new(z, sigma_z)), !(0.0..=1.5).contains(&z))
        };

        out.push(ExperimentalRecord {
            n: series.first_n + k,
            q: Measurement::new(q, sigma_q),
            w: Measurement::new(w, sigma_w),
            j,
            zeta,
            zeta_outlier: outlier,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    const TOL: f64 = 1e-12;

    #[test]
    fn parse_minimal_series() {
        let text = "\
# two-point series
gamma=0
theta=1.5707963267948966
eps2_0=0.6
eps3_0=0.6
n,eps1,sigma_eps1
0,0.0,0
1,0.6,0
";
        let s = parse_series(text).unwrap();
        assert_eq!(s.eps1.len(), 2);
        assert_eq!(s.first_n, 0);
        assert!((s.eps1[1].value - 0.6).abs() <= TOL);
        assert!((s.theta - FRAC_PI_2).abs() <= TOL);
    }

    #[test]
    fn parse_experimental_sidecar() {
        let text = "\
gamma=1e-4
theta=0.9239978392076379
eps2_0=0.58
sigma_eps2_0=0.03
eps3_0=0.41
sigma_eps3_0=0.01
n,eps1,sigma_eps1
0,0.0,0.03
1,0.31,0.03
2,0.50,0.03
";
        let s = parse_series(text).unwrap();
        assert!((s.gamma - 1e-4).abs() <= 1e-18);
        assert!((s.eps2_0.value - 0.58).abs() <= TOL);
        assert!((s.eps3_0.sigma - 0.01).abs() <= TOL);
    }

    #[test]
    fn parse_rejects_bad_inputs() {
        // Out-of-range polarization.
        let text = "gamma=0\ntheta=1\neps2_0=0.6\neps3_0=0.6\nn,eps1,sigma_eps1\n0,1.5,0\n1,0,0\n";
        assert!(matches!(parse_series(text), Err(Error::Parse { .. })));

        // Duplicate cycle index.
        let text = "gamma=0\ntheta=1\neps2_0=0.6\neps3_0=0.6\nn,eps1,sigma_eps1\n0,0,0\n0,0.1,0\n";
        assert!(matches!(parse_series(text), Err(Error::Parse { .. })));

        // Gap in cycle indices.
        let text = "gamma=0\ntheta=1\neps2_0=0.6\neps3_0=0.6\nn,eps1,sigma_eps1\n0,0,0\n2,0.1,0\n";
        assert!(matches!(parse_series(text), Err(Error::Parse { .. })));

        // Missing sidecar key.
        let text = "gamma=0\ntheta=1\neps2_0=0.6\nn,eps1,sigma_eps1\n0,0,0\n1,0.1,0\n";
        let err = parse_series(text).unwrap_err();
        assert!(err.to_string().contains("eps3_0"), "{err}");

        // Unknown sidecar key.
        let text =
            "gamma=0\ntheta=1\neps2_0=0.6\neps3_0=0.6\nfoo=1\nn,eps1,sigma_eps1\n0,0,0\n1,0.1,0\n";
        assert!(matches!(parse_series(text), Err(Error::Parse { .. })));

        // Too short.
        let text = "gamma=0\ntheta=1\neps2_0=0.6\neps3_0=0.6\nn,eps1,sigma_eps1\n0,0,0\n";
        assert!(matches!(parse_series(text), Err(Error::SeriesTooShort { .. })));
    }

    #[test]
    fn analyze_ideal_first_cycle() {
        let s = MeasurementSeries::new(
            vec![Measurement::new(0.0, 0.0), Measurement::new(0.6, 0.0)],
            0,
            Measurement::new(0.6, 0.0),
            Measurement::new(0.6, 0.0),
            0.0,
            FRAC_PI_2,
        )
        .unwrap();
        let records = analyze(&s).unwrap();
        assert_eq!(records.len(), 1);
        let r = &records[0];
        assert!((r.q.value + 0.6).abs() <= TOL);
        assert!((r.w.value - 0.6).abs() <= TOL);
        let z = r.zeta.unwrap();
        assert!((z.value - 1.0).abs() <= TOL);
        assert!(!r.zeta_outlier);
        assert!(r.j.is_none());
    }

    #[test]
    fn heat_sigma_is_sqrt_two_times_input_sigma() {
        let s = 0.03;
        let series = MeasurementSeries::new(
            vec![
                Measurement::new(0.0, s),
                Measurement::new(0.3, s),
                Measurement::new(0.5, s),
            ],
            0,
            Measurement::new(0.6, 0.0),
            Measurement::new(0.6, 0.0),
            0.0,
            FRAC_PI_2,
        )
        .unwrap();
        let records = analyze(&series).unwrap();
        assert!((records[0].q.sigma - s * 2.0f64.sqrt()).abs() <= TOL);
        // J(0) uses three samples: sigma_J^2 = (1 + 4 + 1) s^2.
        let j = records[0].j.unwrap();
        assert!((j.sigma - s * 6.0f64.sqrt()).abs() <= TOL);
    }

    #[test]
    fn zeta_undefined_exactly_when_w_within_one_sigma() {
        // Craft a series whose second cycle has tiny W but sizable sigma.
        let series = MeasurementSeries::new(
            vec![
                Measurement::new(0.0, 0.02),
                Measurement::new(0.88, 0.02),
                Measurement::new(0.8815, 0.02),
            ],
            0,
            Measurement::new(0.6, 0.0),
            Measurement::new(0.6, 0.0),
            0.0,
            FRAC_PI_2,
        )
        .unwrap();
        let records = analyze(&series).unwrap();
        for r in &records {
            let should_be_defined = r.w.value.abs() >= r.w.sigma;
            assert_eq!(r.zeta.is_some(), should_be_defined, "n={}", r.n);
        }
        // The near-converged cycle must indeed be flagged undefined.
        assert!(records[1].zeta.is_none());
    }

    #[test]
    fn outlier_flagging() {
        // Exaggerated jump producing zeta outside [0, 1.5] with tiny sigmas.
        let series = MeasurementSeries::new(
            vec![Measurement::new(0.3, 1e-6), Measurement::new(0.1, 1e-6)],
            0,
            Measurement::new(0.6, 0.0),
            Measurement::new(0.6, 0.0),
            0.0,
            FRAC_PI_2,
        )
        .unwrap();
        let records = analyze(&series).unwrap();
        let r = &records[0];
        assert!(r.zeta.is_some());
        assert!(r.zeta_outlier, "zeta = {:?}", r.zeta);
    }

    #[test]
    fn relative_heat_error_tracks_readout_error() {
        // With ~3% relative readout error on the target polarization, the
        // relative error of Q in the early cycles stays at the same few-
        // percent scale (the n = 0 cycle starts from eps1 = 0, so sigma_Q /
        // |Q| is exactly the 3% readout figure there).
        let theta = 0.9239978392076379;
        let gamma = 1e-4;
        let eps1 = [0.0, 0.315, 0.506, 0.622];
        let series = MeasurementSeries::new(
            eps1.iter()
                .map(|&v| Measurement::new(v, 0.03 * v))
                .collect(),
            0,
            Measurement::new(0.58, 0.03 * 0.58),
            Measurement::new(0.41, 0.01 * 0.41),
            gamma,
            theta,
        )
        .unwrap();
        let records = analyze(&series).unwrap();
        let rel0 = records[0].q.sigma / records[0].q.value.abs();
        assert!((rel0 - 0.03).abs() <= 1e-12);
        let rel1 = records[1].q.sigma / records[1].q.value.abs();
        assert!(rel1 > 0.02 && rel1 < 0.15, "rel sigma_Q(1) = {rel1}");
    }

    #[test]
    fn propagated_sigmas_match_monte_carlo() {
        // Light version of the acceptance check: perturb the inputs and
        // compare sample standard deviations against the propagated ones at
        // a comfortably resolved cycle.
        use rand::Rng;
        use rand::SeedableRng;

        let sigma = 0.02;
        let base = [0.0, 0.31, 0.50];
        let series = MeasurementSeries::new(
            base.iter().map(|&v| Measurement::new(v, sigma)).collect(),
            0,
            Measurement::new(0.58, 0.03),
            Measurement::new(0.41, 0.01),
            1e-4,
            0.9239978392076379,
        )
        .unwrap();
        let records = analyze(&series).unwrap();

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let normal = move |rng: &mut rand_chacha::ChaCha8Rng| -> f64 {
            // Box-Muller from two uniforms.
            let u1: f64 = rng.random::<f64>().max(1e-12);
            let u2: f64 = rng.random();
            (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
        };
        let n_samples = 40_000;
        let mut q_samples = Vec::with_capacity(n_samples);
        let mut w_samples = Vec::with_capacity(n_samples);
        for _ in 0..n_samples {
            let e: Vec<f64> = base
                .iter()
                .map(|&v| v + sigma * normal(&mut rng))
                .collect();
            let e2 = 0.58 + 0.03 * normal(&mut rng);
            let e3 = 0.41 + 0.01 * normal(&mut rng);
            q_samples.push(point_heat(e[0], e[1]));
            w_samples.push(point_work(e[0], e[1], e2, e3, 1e-4, 0.9239978392076379));
        }
        let std = |xs: &[f64]| {
            let mean = xs.iter().sum::<f64>() / xs.len() as f64;
            (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (xs.len() - 1) as f64).sqrt()
        };
        let rel = |a: f64, b: f64| (a - b).abs() / b;
        assert!(rel(std(&q_samples), records[0].q.sigma) < 0.1);
        assert!(rel(std(&w_samples), records[0].w.sigma) < 0.1);
    }
}
