use super::{LimitStats, ProbabilityVector};
use crate::error::{Error, Result};

const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Standard normal density.
pub fn normal_pdf(x: f64) -> f64 {
    INV_SQRT_2PI * (-0.5 * x * x).exp()
}

/// Standard normal distribution function via `erfc`, accurate in both tails.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

fn checked_sigma(stats: &LimitStats) -> Result<f64> {
    if stats.sigma2 > 0.0 && stats.sigma2.is_finite() {
        Ok(stats.sigma())
    } else {
        Err(Error::DegenerateVariance)
    }
}

/// Kolmogorov distance between the coefficient distribution and the normal
/// law with the given mean and variance.
///
/// The discrete CDF only jumps at integers, so the supremum over the real
/// line is the larger of the gaps just before and just after each jump.
pub fn clt_distance(p: &ProbabilityVector, stats: &LimitStats) -> Result<f64> {
    let sigma = checked_sigma(stats)?;
    let mut below = 0.0;
    let mut worst: f64 = 0.0;
    for (k, pk) in p.as_slice().iter().enumerate() {
        let phi = normal_cdf((k as f64 - stats.mu) / sigma);
        let at = below + pk;
        worst = worst.max((at - phi).abs()).max((below - phi).abs());
        below = at;
    }
    Ok(worst.min(1.0))
}

/// `sup_x |σ p(⌊μ + xσ⌋) − φ(x)|`.
///
/// The rescaled mass is constant on each cell `[x_k, x_{k+1})` with
/// `x_k = (k − μ)/σ`, and φ is monotone on any cell that avoids 0. The
/// supremum is therefore reached at a cell boundary (from either side) or
/// at `x = 0`, and those are the only points evaluated. Outside the
/// support the mass is zero and only the tails of φ contribute.
pub fn llt_distance(p: &ProbabilityVector, stats: &LimitStats) -> Result<f64> {
    let sigma = checked_sigma(stats)?;
    let probs = p.as_slice();
    let x = |k: usize| (k as f64 - stats.mu) / sigma;
    let peak = normal_pdf(0.0);

    let first = x(0);
    let last = x(probs.len());
    let mut worst = if first > 0.0 { peak } else { normal_pdf(first) };
    worst = worst.max(if last < 0.0 { peak } else { normal_pdf(last) });

    for (k, pk) in probs.iter().enumerate() {
        let (lo, hi) = (x(k), x(k + 1));
        let mass = sigma * pk;
        let (a, b) = (normal_pdf(lo), normal_pdf(hi));
        let top = if lo <= 0.0 && 0.0 <= hi { peak } else { a.max(b) };
        let bottom = a.min(b);
        worst = worst.max((mass - top).abs()).max((mass - bottom).abs());
    }
    Ok(worst)
}

/// Shifted Poisson law `r(k) = e^{−mean} mean^{k−shift} / (k−shift)!` for
/// `k ≥ shift`, zero below, truncated to `len` entries.
pub fn poisson_reference(mean: f64, shift: usize, len: usize) -> ProbabilityVector {
    let log_mean = mean.ln();
    ProbabilityVector::new(
        (0..len)
            .map(|k| {
                if k < shift {
                    0.0
                } else {
                    let j = (k - shift) as f64;
                    (-mean + j * log_mean - libm::lgamma(j + 1.0)).exp()
                }
            })
            .collect(),
    )
}

/// `max_k |p(k) − r(k)|` against the shifted Poisson reference.
pub fn poisson_distance(p: &ProbabilityVector, mean: f64, shift: usize) -> f64 {
    let r = poisson_reference(mean, shift, p.len());
    p.as_slice()
        .iter()
        .zip(r.as_slice())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}
