//! Least-squares slope of log(count) against log(n), the desk-scale check
//! that a construction family grows with the advertised exponent.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FitError {
    #[error("need at least 3 points, got {got}")]
    TooFewPoints { got: usize },
    #[error("point {index} is degenerate: n and count must both be positive")]
    NonPositivePoint { index: usize },
    #[error("all n values coincide; the slope is undefined")]
    DegenerateSeries,
}

/// A fitted log-log line: `log(count) ≈ slope · log(n) + intercept`.
#[derive(Debug, Clone, Serialize)]
pub struct ExponentFit {
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square residual of log(count) around the fitted line.
    pub residual: f64,
}

/// Fits the growth exponent of a `(n, count)` series.
pub fn fit_exponent(series: &[(u64, u64)]) -> Result<ExponentFit, FitError> {
    if series.len() < 3 {
        return Err(FitError::TooFewPoints { got: series.len() });
    }
    let mut xs = Vec::with_capacity(series.len());
    let mut ys = Vec::with_capacity(series.len());
    for (index, &(n, count)) in series.iter().enumerate() {
        if n == 0 || count == 0 {
            return Err(FitError::NonPositivePoint { index });
        }
        xs.push((n as f64).ln());
        ys.push((count as f64).ln());
    }
    let k = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / k;
    let mean_y = ys.iter().sum::<f64>() / k;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if sxx == 0.0 {
        return Err(FitError::DegenerateSeries);
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let mut ss_res = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        let r = y - (slope * x + intercept);
        ss_res += r * r;
    }
    Ok(ExponentFit {
        slope,
        intercept,
        residual: (ss_res / k).sqrt(),
    })
}
