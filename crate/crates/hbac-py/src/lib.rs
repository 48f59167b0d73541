//! Python bindings for the cooling-refrigerator toolkit.
//!
//! Exposes the cycle simulator as a `Refrigerator` class plus the closed-form
//! expressions, optimal compression angle, temperature helpers and the
//! measured-series analysis as module-level functions. Build the cdylib with
//! `cargo build -p hbac-py --release`; the smoke test under `python/` shows
//! how to load and exercise it.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use hbac_core::channels::{completeness_defect, compression_channel, damping_channel};
use hbac_core::closedform::{self, ClosedFormParams};
use hbac_core::engine::{self, CycleRecord, RefrigeratorConfig};
use hbac_core::expdata::{self, Measurement, MeasurementSeries};
use hbac_core::CompressionVariant;

fn err(e: hbac_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_variant(name: &str) -> PyResult<CompressionVariant> {
    name.parse().map_err(err)
}

fn record_dict<'py>(py: Python<'py>, r: &CycleRecord) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("eps1", r.eps1)?;
    d.set_item("eps2_tilde", r.eps2_tilde)?;
    d.set_item("eps3_tilde", r.eps3_tilde)?;
    d.set_item("Q", r.q)?;
    d.set_item("W", r.w)?;
    d.set_item("J", r.j)?;
    d.set_item("zeta", r.zeta)?;
    d.set_item("T_c", r.t_c)?;
    d.set_item("zeta_C", r.zeta_carnot)?;
    Ok(d)
}

fn records_list<'py>(py: Python<'py>, records: &[CycleRecord]) -> PyResult<Bound<'py, PyList>> {
    let items = records
        .iter()
        .map(|r| record_dict(py, r))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// A configured three-qubit cooling refrigerator.
///
/// Propagates damping / compression / refresh cycles on the full three-qubit
/// state and reports per-cycle heat, work, cooling power, COP, effective
/// temperature and the Carnot comparison.
#[pyclass]
struct Refrigerator {
    config: RefrigeratorConfig,
}

#[pymethods]
impl Refrigerator {
    #[new]
    #[pyo3(signature = (gamma=0.0, theta=std::f64::consts::FRAC_PI_2, eps1=0.0, eps2=0.6,
                        eps3=0.6, cycles=20, variant="random-unitary"))]
    fn new(
        gamma: f64,
        theta: f64,
        eps1: f64,
        eps2: f64,
        eps3: f64,
        cycles: usize,
        variant: &str,
    ) -> PyResult<Self> {
        let config =
            RefrigeratorConfig::new(gamma, theta, eps1, eps2, eps3, cycles, parse_variant(variant)?)
                .map_err(err)?;
        Ok(Self { config })
    }

    /// Run the configured number of cycles; returns one dict per cycle.
    fn run<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let records = engine::run_cycles(&self.config).map_err(err)?;
        records_list(py, &records)
    }

    /// One stochastic trajectory of the random-unitary compression,
    /// deterministic for a given seed.
    fn trajectory<'py>(&self, py: Python<'py>, seed: u64) -> PyResult<Bound<'py, PyList>> {
        let records = engine::sample_trajectory(&self.config, seed).map_err(err)?;
        records_list(py, &records)
    }

    #[getter]
    fn gamma(&self) -> f64 {
        self.config.gamma
    }

    #[getter]
    fn theta(&self) -> f64 {
        self.config.theta
    }

    #[getter]
    fn cycles(&self) -> usize {
        self.config.cycles
    }

    #[getter]
    fn variant(&self) -> &'static str {
        self.config.variant.name()
    }

    fn __repr__(&self) -> String {
        format!(
            "Refrigerator(gamma={}, theta={}, eps1={}, eps2={}, eps3={}, cycles={}, variant='{}')",
            self.config.gamma,
            self.config.theta,
            self.config.eps1_0,
            self.config.eps2_0,
            self.config.eps3_0,
            self.config.cycles,
            self.config.variant.name(),
        )
    }
}

fn params(gamma: f64, theta: f64, eps1: f64, eps2: f64, eps3: f64) -> PyResult<ClosedFormParams> {
    ClosedFormParams::new(gamma, theta, eps1, eps2, eps3).map_err(err)
}

/// Closed-form target polarization after n cycles.
#[pyfunction]
fn target_polarization(
    gamma: f64,
    theta: f64,
    eps1: f64,
    eps2: f64,
    eps3: f64,
    n: usize,
) -> PyResult<f64> {
    Ok(closedform::target_polarization(&params(gamma, theta, eps1, eps2, eps3)?, n))
}

/// Closed-form heat extracted during cycle n.
#[pyfunction]
fn heat_per_cycle(
    gamma: f64,
    theta: f64,
    eps1: f64,
    eps2: f64,
    eps3: f64,
    n: usize,
) -> PyResult<f64> {
    Ok(closedform::heat_per_cycle(&params(gamma, theta, eps1, eps2, eps3)?, n))
}

/// Closed-form work supplied during cycle n.
#[pyfunction]
fn work_per_cycle(
    gamma: f64,
    theta: f64,
    eps1: f64,
    eps2: f64,
    eps3: f64,
    n: usize,
) -> PyResult<f64> {
    Ok(closedform::work_per_cycle(&params(gamma, theta, eps1, eps2, eps3)?, n))
}

/// Closed-form cooling power J(n) = Q(n+1) - Q(n).
#[pyfunction]
fn cooling_power(
    gamma: f64,
    theta: f64,
    eps1: f64,
    eps2: f64,
    eps3: f64,
    n: usize,
) -> PyResult<f64> {
    Ok(closedform::cooling_power(&params(gamma, theta, eps1, eps2, eps3)?, n))
}

/// Closed-form COP; None where the work vanishes.
#[pyfunction]
fn cop(
    gamma: f64,
    theta: f64,
    eps1: f64,
    eps2: f64,
    eps3: f64,
    n: usize,
) -> PyResult<Option<f64>> {
    Ok(closedform::cop(&params(gamma, theta, eps1, eps2, eps3)?, n))
}

/// The decay pair (F, G): F is the compression factor and
/// e^{-G} = (1 - gamma) F / 4 the per-cycle contraction.
#[pyfunction]
fn decay_constants(gamma: f64, theta: f64, eps2: f64, eps3: f64) -> PyResult<(f64, f64)> {
    Ok(closedform::decay_constants(&params(gamma, theta, 0.0, eps2, eps3)?))
}

/// Compression angle maximizing the cooling power J(n) at zero damping.
#[pyfunction]
fn optimal_compression_angle(n: usize, eps1: f64, eps2: f64, eps3: f64) -> PyResult<f64> {
    closedform::optimal_compression_angle(n, eps1, eps2, eps3).map_err(err)
}

/// Effective qubit temperature 1 / ln[(1+eps)/(1-eps)] (k_B = 1).
#[pyfunction]
fn temperature_of(eps: f64) -> f64 {
    engine::temperature_of(eps)
}

/// Carnot COP T_c / (T_h - T_c); None when T_c >= T_h.
#[pyfunction]
fn carnot_cop(eps_cold: f64, eps_hot: f64) -> Option<f64> {
    engine::carnot_cop(eps_cold, eps_hot)
}

/// Frobenius defect of sum K^dag K - I for the compression channel.
#[pyfunction]
fn compression_defect(theta: f64, variant: &str) -> PyResult<f64> {
    let ch = compression_channel(theta, parse_variant(variant)?).map_err(err)?;
    Ok(completeness_defect(&ch))
}

/// Frobenius defect of sum K^dag K - I for the damping channel.
#[pyfunction]
fn damping_defect(gamma: f64) -> PyResult<f64> {
    Ok(completeness_defect(&damping_channel(gamma).map_err(err)?))
}

/// Analyze a measured polarization series.
///
/// `eps1` and `sigma_eps1` are per-cycle lists starting at cycle 0; the
/// reset polarizations carry optional uncertainties. Returns one dict per
/// analyzable cycle with Q, W, J, zeta and their propagated sigmas.
#[pyfunction]
#[pyo3(signature = (eps1, sigma_eps1, gamma, theta, eps2, eps3,
                    sigma_eps2=0.0, sigma_eps3=0.0))]
#[allow(clippy::too_many_arguments)]
fn analyze_series<'py>(
    py: Python<'py>,
    eps1: Vec<f64>,
    sigma_eps1: Vec<f64>,
    gamma: f64,
    theta: f64,
    eps2: f64,
    eps3: f64,
    sigma_eps2: f64,
    sigma_eps3: f64,
) -> PyResult<Bound<'py, PyList>> {
    if eps1.len() != sigma_eps1.len() {
        return Err(PyValueError::new_err(format!(
            "eps1 and sigma_eps1 lengths differ ({} vs {})",
            eps1.len(),
            sigma_eps1.len()
        )));
    }
    let series = MeasurementSeries::new(
        eps1.iter()
            .zip(&sigma_eps1)
            .map(|(&v, &s)| Measurement::new(v, s))
            .collect(),
        0,
        Measurement::new(eps2, sigma_eps2),
        Measurement::new(eps3, sigma_eps3),
        gamma,
        theta,
    )
    .map_err(err)?;
    let records = expdata::analyze(&series).map_err(err)?;
    let items = records
        .iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("n", r.n)?;
            d.set_item("Q", r.q.value)?;
            d.set_item("sigma_Q", r.q.sigma)?;
            d.set_item("W", r.w.value)?;
            d.set_item("sigma_W", r.w.sigma)?;
            d.set_item("J", r.j.map(|m| m.value))?;
            d.set_item("sigma_J", r.j.map(|m| m.sigma))?;
            d.set_item("zeta", r.zeta.map(|m| m.value))?;
            d.set_item("sigma_zeta", r.zeta.map(|m| m.sigma))?;
            d.set_item("zeta_outlier", r.zeta_outlier)?;
            Ok(d)
        })
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

#[pymodule]
fn hbac_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Refrigerator>()?;
    m.add_function(wrap_pyfunction!(target_polarization, m)?)?;
    m.add_function(wrap_pyfunction!(heat_per_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(work_per_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(cooling_power, m)?)?;
    m.add_function(wrap_pyfunction!(cop, m)?)?;
    m.add_function(wrap_pyfunction!(decay_constants, m)?)?;
    m.add_function(wrap_pyfunction!(optimal_compression_angle, m)?)?;
    m.add_function(wrap_pyfunction!(temperature_of, m)?)?;
    m.add_function(wrap_pyfunction!(carnot_cop, m)?)?;
    m.add_function(wrap_pyfunction!(compression_defect, m)?)?;
    m.add_function(wrap_pyfunction!(damping_defect, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_series, m)?)?;
    Ok(())
}
