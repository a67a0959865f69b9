//! Ordinary least squares on log-log data.

/// Slope and intercept of the least-squares line through `(x, y)`.
/// Returns `None` for fewer than two points or constant `x`.
pub(crate) fn least_squares(xs: &[f64], ys: &[f64]) -> Option<(f64, f64)> {
    let n = xs.len();
    if n < 2 || n != ys.len() {
        return None;
    }
    let nf = n as f64;
    let mx = xs.iter().sum::<f64>() / nf;
    let my = ys.iter().sum::<f64>() / nf;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    Some((slope, my - slope * mx))
}

/// Fit `log|v| = slope·log(x) + intercept`, dropping pairs with `x <= 0` or
/// `|v| < floor`.
pub(crate) fn log_log_fit(xs: &[f64], vs: &[f64], floor: f64) -> Option<(f64, f64)> {
    let (lx, ly): (Vec<f64>, Vec<f64>) = xs
        .iter()
        .zip(vs)
        .filter(|(x, v)| **x > 0.0 && v.abs() >= floor)
        .map(|(x, v)| (x.ln(), v.abs().ln()))
        .unzip();
    least_squares(&lx, &ly)
}
