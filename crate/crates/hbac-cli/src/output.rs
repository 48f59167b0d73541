//! Deterministic CSV/JSON/plot-script emission.
//!
//! Floats are printed with 12 significant digits in lowercase scientific
//! notation, enough to verify 1e-10 tolerances from the files alone.
//! Undefined ratios are empty CSV fields and JSON nulls; infinite
//! temperatures print as `inf` in CSV and null in JSON.

use hbac_core::audit::AuditRow;
use hbac_core::engine::CycleRecord;
use hbac_core::expdata::ExperimentalRecord;
use serde_json::{json, Value};

/// Fixed 12-significant-digit lowercase scientific formatting.
pub fn fmt12(x: f64) -> String {
    if x.is_nan() {
        return String::new();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let x = if x == 0.0 { 0.0 } else { x }; // normalize -0.0
    format!("{x:.11e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt12).unwrap_or_default()
}

/// JSON value for a float: null when non-finite (serde_json rejects inf/nan).
fn jnum(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

fn jopt(x: Option<f64>) -> Value {
    x.map(jnum).unwrap_or(Value::Null)
}

pub const RECORD_HEADER: &str = "n,eps1,eps2_tilde,eps3_tilde,Q,W,J,zeta,T_c,zeta_C";

pub fn record_csv_row(r: &CycleRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        r.n,
        fmt12(r.eps1),
        fmt12(r.eps2_tilde),
        fmt12(r.eps3_tilde),
        fmt12(r.q),
        fmt12(r.w),
        fmt12(r.j),
        fmt_opt(r.zeta),
        fmt12(r.t_c),
        fmt_opt(r.zeta_carnot),
    )
}

pub fn records_csv(records: &[CycleRecord]) -> String {
    let mut out = String::from(RECORD_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&record_csv_row(r));
        out.push('\n');
    }
    out
}

pub fn record_json(r: &CycleRecord) -> Value {
    json!({
        "n": r.n,
        "eps1": jnum(r.eps1),
        "eps2_tilde": jnum(r.eps2_tilde),
        "eps3_tilde": jnum(r.eps3_tilde),
        "Q": jnum(r.q),
        "W": jnum(r.w),
        "J": jnum(r.j),
        "zeta": jopt(r.zeta),
        "T_c": jnum(r.t_c),
        "zeta_C": jopt(r.zeta_carnot),
    })
}

/// Sweep CSV: the shared header, then one `# gamma=... theta=...` comment
/// line per grid point followed by its record block.
pub fn sweep_csv(blocks: &[((f64, f64), Vec<CycleRecord>)]) -> String {
    let mut out = String::from(RECORD_HEADER);
    out.push('\n');
    for ((gamma, theta), records) in blocks {
        out.push_str(&format!("# gamma={} theta={}\n", fmt12(*gamma), fmt12(*theta)));
        for r in records {
            out.push_str(&record_csv_row(r));
            out.push('\n');
        }
    }
    out
}

pub fn sweep_json(blocks: &[((f64, f64), Vec<CycleRecord>)]) -> Value {
    json!({
        "grid": blocks
            .iter()
            .map(|((gamma, theta), records)| {
                json!({
                    "gamma": jnum(*gamma),
                    "theta": jnum(*theta),
                    "records": records.iter().map(record_json).collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub const OPTIMIZE_HEADER: &str = "n,theta_opt,J_opt,theta_sweep,J_sweep";

/// One optimal-angle table row: the analytic angle, the numeric cooling
/// power there, and the argmax of the fine theta sweep for confirmation.
pub struct OptimizeRow {
    pub n: usize,
    pub theta_opt: f64,
    pub j_opt: f64,
    pub theta_sweep: f64,
    pub j_sweep: f64,
}

pub fn optimize_csv(rows: &[OptimizeRow]) -> String {
    let mut out = String::from(OPTIMIZE_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            fmt12(r.theta_opt),
            fmt12(r.j_opt),
            fmt12(r.theta_sweep),
            fmt12(r.j_sweep),
        ));
    }
    out
}

pub fn optimize_json(rows: &[OptimizeRow]) -> Value {
    json!(rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "theta_opt": jnum(r.theta_opt),
                "J_opt": jnum(r.j_opt),
                "theta_sweep": jnum(r.theta_sweep),
                "J_sweep": jnum(r.j_sweep),
            })
        })
        .collect::<Vec<_>>())
}

pub const AUDIT_HEADER: &str =
    "formula,trusted,gamma,theta,eps1_0,eps2_0,eps3_0,n,closed_form,numeric,abs_delta";

pub fn audit_csv(rows: &[AuditRow]) -> String {
    let mut out = String::from(AUDIT_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.formula,
            u8::from(r.trusted),
            fmt12(r.gamma),
            fmt12(r.theta),
            fmt12(r.eps1_0),
            fmt12(r.eps2_0),
            fmt12(r.eps3_0),
            r.n,
            fmt12(r.closed_form),
            fmt12(r.numeric),
            fmt12(r.abs_delta),
        ));
    }
    out
}

pub fn audit_json(rows: &[AuditRow]) -> Value {
    json!(rows
        .iter()
        .map(|r| {
            json!({
                "formula": r.formula,
                "trusted": r.trusted,
                "gamma": jnum(r.gamma),
                "theta": jnum(r.theta),
                "eps1_0": jnum(r.eps1_0),
                "eps2_0": jnum(r.eps2_0),
                "eps3_0": jnum(r.eps3_0),
                "n": r.n,
                "closed_form": jnum(r.closed_form),
                "numeric": jnum(r.numeric),
                "abs_delta": jnum(r.abs_delta),
            })
        })
        .collect::<Vec<_>>())
}

pub const ANALYZE_HEADER: &str =
    "n,Q,sigma_Q,W,sigma_W,J,sigma_J,zeta,sigma_zeta,zeta_outlier";

pub fn analyze_csv(records: &[ExperimentalRecord]) -> String {
    let mut out = String::from(ANALYZE_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.n,
            fmt12(r.q.value),
            fmt12(r.q.sigma),
            fmt12(r.w.value),
            fmt12(r.w.sigma),
            fmt_opt(r.j.map(|m| m.value)),
            fmt_opt(r.j.map(|m| m.sigma)),
            fmt_opt(r.zeta.map(|m| m.value)),
            fmt_opt(r.zeta.map(|m| m.sigma)),
            u8::from(r.zeta_outlier),
        ));
    }
    out
}

pub fn analyze_json(records: &[ExperimentalRecord]) -> Value {
    json!(records
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "Q": jnum(r.q.value),
                "sigma_Q": jnum(r.q.sigma),
                "W": jnum(r.w.value),
                "sigma_W": jnum(r.w.sigma),
                "J": jopt(r.j.map(|m| m.value)),
                "sigma_J": jopt(r.j.map(|m| m.sigma)),
                "zeta": jopt(r.zeta.map(|m| m.value)),
                "sigma_zeta": jopt(r.zeta.map(|m| m.sigma)),
                "zeta_outlier": r.zeta_outlier,
            })
        })
        .collect::<Vec<_>>())
}

/// gnuplot script with zeta(n), J(n), eps1(n) panels for a simulate CSV.
pub fn simulate_plot_script(csv_name: &str) -> String {
    format!(
        r#"# gnuplot script: per-cycle COP, cooling power and target polarization
set datafile separator ","
set terminal pngcairo size 1500,450
set output "{csv_name}.png"
set multiplot layout 1,3
set xlabel "cycle n"
set key top right
set ylabel "zeta(n)"
plot "{csv_name}" skip 1 using 1:8 with linespoints pt 7 title "COP"
set ylabel "J(n)"
plot "{csv_name}" skip 1 using 1:7 with linespoints pt 7 title "cooling power"
set ylabel "eps1(n)"
plot "{csv_name}" skip 1 using 1:2 with linespoints pt 7 title "target polarization"
unset multiplot
"#
    )
}

/// gnuplot script for a sweep CSV: one curve per grid point in each panel.
/// Record blocks are contiguous runs of `cycles` rows after the header.
pub fn sweep_plot_script(csv_name: &str, points: &[(f64, f64)], cycles: usize) -> String {
    let curves_for = |column: usize| -> String {
        points
            .iter()
            .enumerate()
            .map(|(k, (gamma, theta))| {
                format!(
                    "\"{csv_name}\" skip 1 every ::{}::{} using 1:{column} \
                     with linespoints title \"gamma={gamma} theta={theta}\"",
                    k * cycles,
                    k * cycles + cycles - 1,
                )
            })
            .collect::<Vec<_>>()
            .join(", \\\n     ")
    };
    format!(
        r#"# gnuplot script: sweep panels, one curve per (gamma, theta) grid point
set datafile separator ","
set terminal pngcairo size 1500,450
set output "{csv_name}.png"
set multiplot layout 1,3
set xlabel "cycle n"
set ylabel "zeta(n)"
plot {zeta}
set ylabel "J(n)"
plot {power}
set ylabel "eps1(n)"
plot {eps}
unset multiplot
"#,
        zeta = curves_for(8),
        power = curves_for(7),
        eps = curves_for(2),
    )
}

/// gnuplot script with Q(n), J(n), zeta(n) error-bar panels for analyze CSV.
pub fn analyze_plot_script(csv_name: &str) -> String {
    format!(
        r#"# gnuplot script: measured heat, cooling power and COP with error bars
set datafile separator ","
set terminal pngcairo size 1500,450
set output "{csv_name}.png"
set multiplot layout 1,3
set xlabel "cycle n"
set ylabel "Q(n)"
plot "{csv_name}" skip 1 using 1:2:3 with yerrorlines pt 7 title "heat"
set ylabel "J(n)"
plot "{csv_name}" skip 1 using 1:6:7 with yerrorlines pt 7 title "cooling power"
set ylabel "zeta(n)"
plot "{csv_name}" skip 1 using 1:8:9 with yerrorlines pt 7 title "COP"
unset multiplot
"#
    )
}
