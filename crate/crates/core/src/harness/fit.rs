use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{io_err, HarnessError, TrialRecord};

/// Which record column is the independent variable. `M` reads the `k`
/// column, which holds the edge-cell count for `gnm` sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XField {
    N,
    K,
    M,
}

impl std::str::FromStr for XField {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "n" => Ok(XField::N),
            "k" => Ok(XField::K),
            "m" => Ok(XField::M),
            other => Err(HarnessError::Invalid(format!("unknown x field {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square residual in natural-log space.
    pub residual: f64,
    pub n_points: usize,
}

fn median(v: &mut [f64]) -> f64 {
    v.sort_by(f64::total_cmp);
    let h = v.len() / 2;
    if v.len() % 2 == 1 {
        v[h]
    } else {
        (v[h - 1] + v[h]) / 2.0
    }
}

/// Least squares of `ln y` on `ln x`.
pub fn fit_points(points: &[(f64, f64)]) -> Result<FitResult, HarnessError> {
    let mut xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    if xs.len() < 3 || points.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(HarnessError::InsufficientPoints(xs.len()));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = logs.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    Ok(FitResult { slope, intercept, residual: (sse / k).sqrt(), n_points: logs.len() })
}

/// Fit of median queries per distinct `x`.
pub fn fit_exponent(records: &[TrialRecord], x: XField) -> Result<FitResult, HarnessError> {
    let mut groups: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for r in records {
        let key = match x {
            XField::N => r.n,
            XField::K | XField::M => r.k,
        };
        groups.entry(key).or_default().push(r.queries as f64);
    }
    let points: Vec<(f64, f64)> =
        groups.into_iter().map(|(x, mut ys)| (x as f64, median(&mut ys))).collect();
    fit_points(&points)
}

pub fn emit_report(fit: &FitResult, path: &Path) -> Result<(), HarnessError> {
    let text = serde_json::to_string_pretty(fit)?;
    std::fs::write(path, text + "\n").map_err(io_err(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planted_exponent() {
        let pts: Vec<(f64, f64)> = [4.0, 16.0, 64.0, 256.0].iter().map(|&x: &f64| (x, x.powf(1.5))).collect();
        let f = fit_points(&pts).unwrap();
        assert!((f.slope - 1.5).abs() < 1e-9);
        assert!(f.intercept.abs() < 1e-9);
        assert!(f.residual < 1e-9);
    }

    #[test]
    fn constant_has_zero_slope() {
        let f = fit_points(&[(2.0, 7.0), (3.0, 7.0), (10.0, 7.0)]).unwrap();
        assert!(f.slope.abs() < 1e-12);
    }

    #[test]
    fn too_few_points() {
        assert!(matches!(
            fit_points(&[(2.0, 1.0), (2.0, 3.0), (4.0, 5.0)]),
            Err(HarnessError::InsufficientPoints(2))
        ));
        assert!(fit_points(&[(0.0, 1.0), (2.0, 3.0), (4.0, 5.0)]).is_err());
    }

    #[test]
    fn medians_per_x() {
        let rec = |n: usize, q: u64| TrialRecord {
            algorithm: "a".into(),
            model: "matrix".into(),
            family: "f".into(),
            n,
            k: 0,
            trial: 0,
            seed: 0,
            queries: q,
            answer: true,
            truth: true,
            correct: true,
            ms: 0.0,
        };
        // medians 4, 16, 64 despite the outliers
        let recs = vec![
            rec(2, 4), rec(2, 1000), rec(2, 3),
            rec(4, 16), rec(4, 15), rec(4, 17),
            rec(8, 64), rec(8, 64), rec(8, 1),
        ];
        let f = fit_exponent(&recs, XField::N).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-9);
        assert!(fit_exponent(&recs, XField::K).is_err());
    }

    #[test]
    fn report_json() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fit.json");
        let fit = FitResult { slope: 1.5, intercept: 0.25, residual: 0.01, n_points: 5 };
        emit_report(&fit, &path).unwrap();
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        for key in ["slope", "intercept", "residual", "n_points"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }
}
