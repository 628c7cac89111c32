//! Variance lower bounds and per-vertex limit constants for named families.

use num_bigint::BigInt;
use serde::Serialize;

use crate::charpoly::{exact_moments, poly::ln_abs_bigint, Coefficients};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};

/// `2|E| / (1 + 2Δ)²`: every eigenvalue is at most `2Δ`, and the trace of
/// the Laplacian is `2|E|`.
pub fn variance_lower_bound(g: &Graph) -> f64 {
    let d = 1.0 + 2.0 * g.max_degree() as f64;
    2.0 * g.edge_count() as f64 / (d * d)
}

/// `(N − 1)(1 + 2d) / (2 + 2d)²` for the cone over a `d`-regular graph on `N` vertices.
pub fn cone_variance_lower_bound(vertices: usize, degree: usize) -> f64 {
    let d = degree as f64;
    (vertices as f64 - 1.0) * (1.0 + 2.0 * d) / ((2.0 + 2.0 * d) * (2.0 + 2.0 * d))
}

/// `2n(2^n − 1) / (1 + 2n)²` for the hypercube `Q_n`.
pub fn hypercube_variance_lower_bound(n: usize) -> f64 {
    let nf = n as f64;
    2.0 * nf * (2f64.powi(n as i32) - 1.0) / ((1.0 + 2.0 * nf) * (1.0 + 2.0 * nf))
}

/// Limits of `μ_n / n` and `σ_n² / n`.
///
/// Both are square roots of rationals; the squares are kept exactly so
/// errors can be measured far below double precision.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LimitConstants {
    pub mu_per_vertex: f64,
    pub sigma2_per_vertex: f64,
    #[serde(skip)]
    mu_squared: (u64, u64),
    #[serde(skip)]
    sigma2_squared: (u64, u64),
}

pub fn family_limit_constants(family: Family) -> Result<LimitConstants> {
    let sqrt5 = 5f64.sqrt();
    match family {
        // Path angles jπ/(2n) fill (0, π/2), cycle angles jπ/n fill (0, π);
        // both averages of 1/(1 + 4 sin²θ) over a quarter period are 1/√5,
        // so path and cycle share 1/√5 and 2/(5√5). Halving these (integrating
        // over (0, π/2) with weight 1/π) disagrees with μ_n/n already at n = 100.
        Family::Path | Family::Cycle => Ok(LimitConstants {
            mu_per_vertex: 1.0 / sqrt5,
            sigma2_per_vertex: 2.0 / (5.0 * sqrt5),
            mu_squared: (1, 5),
            sigma2_squared: (4, 125),
        }),
        other => Err(Error::Unsupported(format!("no limit constants for {other}"))),
    }
}

/// Errors `|μ_n/n − μ*|` and `|σ_n²/n − σ²*|` computed from exact
/// coefficients, reported as base-10 logarithms so that errors below the
/// double-precision range remain comparable.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LimitErrors {
    pub mu_error_log10: f64,
    pub sigma2_error_log10: f64,
}

impl LimitErrors {
    pub fn mu_error(&self) -> f64 {
        10f64.powf(self.mu_error_log10)
    }

    pub fn sigma2_error(&self) -> f64 {
        10f64.powf(self.sigma2_error_log10)
    }
}

pub fn exact_limit_errors(c: &Coefficients, constants: &LimitConstants) -> LimitErrors {
    let n = BigInt::from(c.degree());
    let moments = exact_moments(c);
    let (mu_num, mu_den) = moments.mean();
    let (var_num, var_den) = moments.variance();
    LimitErrors {
        mu_error_log10: log10_distance_to_sqrt(
            &mu_num,
            &(mu_den * &n),
            constants.mu_squared,
            constants.mu_per_vertex,
        ),
        sigma2_error_log10: log10_distance_to_sqrt(
            &var_num,
            &(var_den * &n),
            constants.sigma2_squared,
            constants.sigma2_per_vertex,
        ),
    }
}

/// `log10 |a/b − √(c/d)|` for positive `a/b`, using
/// `|q − √t| = |q² − t| / (q + √t)` with the numerator `a²d − b²c` exact.
fn log10_distance_to_sqrt(a: &BigInt, b: &BigInt, (c, d): (u64, u64), root: f64) -> f64 {
    let num = a * a * BigInt::from(d) - b * b * BigInt::from(c);
    if num.bits() == 0 {
        return f64::NEG_INFINITY;
    }
    let ln_den = 2.0 * ln_abs_bigint(b) + (d as f64).ln();
    let q = (ln_abs_bigint(a) - ln_abs_bigint(b)).exp();
    (ln_abs_bigint(&num) - ln_den - (q + root).ln()) / std::f64::consts::LN_10
}
