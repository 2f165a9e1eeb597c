//! γ-sweep rate reports and log-log slope fitting.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Defect values over a γ sweep with the fitted decay rate
/// `defect ≈ C γ^slope`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RateReport {
    pub gammas: Vec<f64>,
    pub defects: Vec<f64>,
    pub fitted_slope: f64,
    /// RMS residual of the least-squares fit in log10 coordinates.
    pub fit_residual: f64,
    pub dropped_endpoints: usize,
    /// Fitted prefactor `C` in `defect ≈ C γ^slope`.
    pub constant: f64,
    #[serde(default)]
    pub metadata: serde_json::Value,
}

impl RateReport {
    /// Builds the report from sweep data, dropping `drop` of the largest-γ
    /// points before fitting (pre-asymptotic guard).
    pub fn from_sweep(gammas: Vec<f64>, defects: Vec<f64>, drop: usize) -> Result<Self> {
        let (slope, residual, constant) = fit_slope_full(&gammas, &defects, drop)?;
        Ok(Self {
            gammas,
            defects,
            fitted_slope: slope,
            fit_residual: residual,
            dropped_endpoints: drop,
            constant,
            metadata: serde_json::Value::Null,
        })
    }

    /// CSV body: `gamma,defect` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("gamma,defect\n");
        for (g, d) in self.gammas.iter().zip(&self.defects) {
            out.push_str(&format!("{g:.17e},{d:.17e}\n"));
        }
        out
    }
}

/// Ordinary least squares in log-log coordinates: returns `(slope, residual)`.
///
/// `gammas` must be strictly decreasing and `values` strictly positive; the
/// first `drop` sweep points (the largest γ) are excluded from the fit.
pub fn fit_slope(gammas: &[f64], values: &[f64], drop: usize) -> Result<(f64, f64)> {
    let (s, r, _) = fit_slope_full(gammas, values, drop)?;
    Ok((s, r))
}

fn fit_slope_full(gammas: &[f64], values: &[f64], drop: usize) -> Result<(f64, f64, f64)> {
    if gammas.len() != values.len() {
        return Err(Error::Precondition("gamma and value lists differ in length".into()));
    }
    for w in gammas.windows(2) {
        if w[1] >= w[0] {
            return Err(Error::Precondition("gamma sweep must be strictly decreasing".into()));
        }
    }
    if values.iter().any(|v| !(*v > 0.0)) {
        return Err(Error::Domain("defect values must be positive (they are norms)".into()));
    }
    let n = gammas.len().saturating_sub(drop);
    if n < 3 {
        return Err(Error::Precondition(format!(
            "need at least 3 points after dropping {drop}, have {}",
            gammas.len()
        )));
    }
    let xs: Vec<f64> = gammas[drop..].iter().map(|g| g.log10()).collect();
    let ys: Vec<f64> = values[drop..].iter().map(|v| v.log10()).collect();
    let nf = n as f64;
    let mx = xs.iter().sum::<f64>() / nf;
    let my = ys.iter().sum::<f64>() / nf;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let p = intercept + slope * x;
            (y - p) * (y - p)
        })
        .sum();
    Ok((slope, (ss_res / nf).sqrt(), 10f64.powf(intercept)))
}
