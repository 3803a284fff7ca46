//! Small least-squares helpers: log-log slope fits and power-basis
//! regressions with complex-valued data over a real design.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Ordinary least-squares slope of y against x.
pub fn ols_slope(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (xi, yi) in x.iter().zip(y) {
        sxx += (xi - mx) * (xi - mx);
        sxy += (xi - mx) * (yi - my);
    }
    sxy / sxx
}

/// Least-squares slope of log(err) against log(scale), skipping points at the
/// rounding floor. Returns `Conditioning` if fewer than two usable points remain.
pub fn log_log_slope(scales: &[f64], errs: &[f64], floor: f64) -> Result<f64> {
    let pts: Vec<(f64, f64)> = scales
        .iter()
        .zip(errs)
        .filter(|(_, e)| **e > floor)
        .map(|(s, e)| (s.ln(), e.ln()))
        .collect();
    if pts.len() < 2 {
        return Err(Error::Conditioning(format!(
            "only {} error values above floor {floor:.1e}; slope undetermined",
            pts.len()
        )));
    }
    let xs: Vec<f64> = pts.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = pts.iter().map(|p| p.1).collect();
    Ok(ols_slope(&xs, &ys))
}

/// Least-squares fit of complex data against the real power basis
/// { s^m : m in powers } evaluated at the given s values.
///
/// Columns are normalized before the SVD solve so widely scaled powers do not
/// degrade the conditioning. Returns one complex coefficient per power.
pub fn fit_power_series(s: &[f64], data: &[Complex64], powers: &[i32]) -> Result<Vec<Complex64>> {
    let (n, m) = (s.len(), powers.len());
    if n < m {
        return Err(Error::Conditioning(format!(
            "{n} samples cannot determine {m} coefficients"
        )));
    }
    let mut design = DMatrix::<f64>::zeros(n, m);
    let mut scale = vec![0.0; m];
    for (col, &p) in powers.iter().enumerate() {
        for row in 0..n {
            design[(row, col)] = s[row].powi(p);
        }
        let nrm = design.column(col).norm();
        if nrm == 0.0 || !nrm.is_finite() {
            return Err(Error::Conditioning(format!("degenerate design column for power {p}")));
        }
        scale[col] = nrm;
        for row in 0..n {
            design[(row, col)] /= nrm;
        }
    }
    let svd = design.svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    if !(smin > 0.0) || smax / smin > 1e12 {
        return Err(Error::Conditioning(format!(
            "fit design is numerically rank-deficient (condition {:.3e}); \
             spread the sample energies",
            if smin > 0.0 { smax / smin } else { f64::INFINITY }
        )));
    }
    let re = DVector::from_iterator(n, data.iter().map(|z| z.re));
    let im = DVector::from_iterator(n, data.iter().map(|z| z.im));
    let cr = svd.solve(&re, 0.0).map_err(|e| Error::Conditioning(e.to_string()))?;
    let ci = svd.solve(&im, 0.0).map_err(|e| Error::Conditioning(e.to_string()))?;
    Ok((0..m)
        .map(|col| Complex64::new(cr[col], ci[col]) / scale[col])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn slope_of_exact_power_law() {
        let x: Vec<f64> = (1..=6).map(|k| (10f64).powi(k)).collect();
        let y: Vec<f64> = x.iter().map(|v| 3.0 * v.powf(-2.0)).collect();
        let s = log_log_slope(&x, &y, 0.0).unwrap();
        assert_relative_eq!(s, -2.0, epsilon = 1e-12);
    }

    #[test]
    fn floor_points_are_skipped() {
        let x = [10.0, 100.0, 1000.0];
        let y = [1e-3, 1e-5, 1e-18];
        let s = log_log_slope(&x, &y, 1e-15).unwrap();
        assert_relative_eq!(s, -2.0, epsilon = 1e-12);
        assert!(log_log_slope(&x, &[0.0, 0.0, 0.0], 1e-15).is_err());
    }

    #[test]
    fn power_fit_recovers_exact_model() {
        // noiseless model a1 s + a2 s^2 with complex coefficients
        let s: Vec<f64> = (1..=8).map(|k| 1.0 / (6.0 + 2.0 * k as f64)).collect();
        let a1 = Complex64::new(-0.3, 0.7);
        let a2 = Complex64::new(2.0, -1.0);
        let data: Vec<Complex64> = s.iter().map(|&si| a1 * si + a2 * si * si).collect();
        let got = fit_power_series(&s, &data, &[1, 2]).unwrap();
        assert_relative_eq!(got[0].re, a1.re, epsilon = 1e-12);
        assert_relative_eq!(got[0].im, a1.im, epsilon = 1e-12);
        assert_relative_eq!(got[1].re, a2.re, epsilon = 1e-11);
        assert_relative_eq!(got[1].im, a2.im, epsilon = 1e-11);
    }

    #[test]
    fn underdetermined_fit_is_rejected() {
        assert!(fit_power_series(&[0.1], &[Complex64::ZERO], &[1, 2]).is_err());
    }
}
