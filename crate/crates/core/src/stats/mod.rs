//! Mean/variance statistics of Laplacian coefficient distributions and the
//! distances used to judge their normal or Poisson limits.

mod distances;
mod limits;

use serde::Serialize;

use crate::charpoly::{poly::ln_biguint, Coefficients};
use crate::error::{Error, Result};
use crate::spectra::Spectrum;

pub use distances::{
    clt_distance, llt_distance, normal_cdf, normal_pdf, poisson_distance, poisson_reference,
};
pub use limits::{
    cone_variance_lower_bound, exact_limit_errors, family_limit_constants,
    hypercube_variance_lower_bound, variance_lower_bound, LimitConstants, LimitErrors,
};

/// Mean `μ = Σ 1/(1+λ_i)` and variance `σ² = Σ λ_i/(1+λ_i)²` of the
/// coefficient distribution of `∏(x + λ_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LimitStats {
    pub mu: f64,
    pub sigma2: f64,
    /// Polynomial degree, i.e. the vertex count.
    pub n: usize,
}

impl LimitStats {
    pub fn sigma(&self) -> f64 {
        self.sigma2.sqrt()
    }
}

/// Harper statistics of a spectrum. Terms are sorted before compensated
/// summation, so the result does not depend on eigenvalue order.
pub fn mean_variance(s: &Spectrum) -> Result<LimitStats> {
    if let Some(&neg) = s.values().iter().find(|&&l| l < 0.0) {
        return Err(Error::NegativeEigenvalue(neg));
    }
    let mut means: Vec<f64> = s.values().iter().map(|&l| 1.0 / (1.0 + l)).collect();
    let mut vars: Vec<f64> = s
        .values()
        .iter()
        .map(|&l| l / ((1.0 + l) * (1.0 + l)))
        .collect();
    means.sort_by(f64::total_cmp);
    vars.sort_by(f64::total_cmp);
    Ok(LimitStats {
        mu: neumaier_sum(means),
        sigma2: neumaier_sum(vars),
        n: s.len(),
    })
}

/// Kahan–Babuška–Neumaier compensated sum.
pub fn neumaier_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Normalized probabilities `p(k) = c_k / Σ_j c_j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    pub fn new(probs: Vec<f64>) -> Self {
        ProbabilityVector(probs)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ k p(k)`.
    pub fn mean(&self) -> f64 {
        neumaier_sum(self.0.iter().enumerate().map(|(k, p)| k as f64 * p))
    }

    /// `Σ (k − mean)² p(k)`.
    pub fn variance(&self) -> f64 {
        let mu = self.mean();
        neumaier_sum(self.0.iter().enumerate().map(|(k, p)| {
            let d = k as f64 - mu;
            d * d * p
        }))
    }
}

/// Probabilities computed through logarithms: `p(k) = exp(ln c_k − ln Σ c_j)`.
/// Zero coefficients map to exactly zero.
pub fn normalized_probabilities(c: &Coefficients) -> Result<ProbabilityVector> {
    let logs: Vec<Option<f64>> = c
        .as_slice()
        .iter()
        .map(|ck| (ck.bits() > 0).then(|| ln_biguint(ck)))
        .collect();
    let top = logs
        .iter()
        .flatten()
        .copied()
        .reduce(f64::max)
        .ok_or(Error::ZeroDistribution)?;
    let log_total = top + neumaier_sum(logs.iter().flatten().map(|l| (l - top).exp())).ln();
    Ok(ProbabilityVector(
        logs.into_iter()
            .map(|l| l.map_or(0.0, |l| (l - log_total).exp()))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::closed_form_coefficients;
    use crate::graph::{Family, FamilySpec};
    use num_bigint::BigUint;

    fn coeffs(v: &[u64]) -> Coefficients {
        Coefficients::new(v.iter().map(|&x| BigUint::from(x)).collect())
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn k2_statistics() {
        let s = mean_variance(&Spectrum::new(vec![2.0, 0.0], true)).unwrap();
        assert!((s.mu - 4.0 / 3.0).abs() < 1e-15);
        assert!((s.sigma2 - 2.0 / 9.0).abs() < 1e-15);
        assert_eq!(s.n, 2);
    }

    #[test]
    fn star_statistics() {
        for n in [3usize, 10, 57] {
            let spec = FamilySpec::new(Family::Star, n);
            let s = mean_variance(&crate::spectra::closed_form_spectrum(&spec).unwrap()).unwrap();
            let nf = n as f64;
            let mu = (nf * nf + nf + 2.0) / (2.0 * (nf + 1.0));
            let var = (nf - 1.0) * (nf * nf + nf + 2.0) / (4.0 * (nf + 1.0) * (nf + 1.0));
            assert!(rel(s.mu, mu) < 1e-14);
            assert!(rel(s.sigma2, var) < 1e-14);
        }
    }

    #[test]
    fn complete_statistics_approach_poisson() {
        for n in [5usize, 50, 500] {
            let spec = FamilySpec::new(Family::Complete, n);
            let s = mean_variance(&crate::spectra::closed_form_spectrum(&spec).unwrap()).unwrap();
            let nf = n as f64;
            assert!(rel(s.mu, 1.0 + (nf - 1.0) / (nf + 1.0)) < 1e-14);
            assert!(rel(s.sigma2, nf * (nf - 1.0) / ((nf + 1.0) * (nf + 1.0))) < 1e-14);
        }
    }

    #[test]
    fn rejects_negative_eigenvalues() {
        let s = Spectrum::new(vec![1.0, -0.5], false);
        assert_eq!(mean_variance(&s), Err(Error::NegativeEigenvalue(-0.5)));
    }

    #[test]
    fn probabilities() {
        assert_eq!(normalized_probabilities(&coeffs(&[0, 1, 1])).unwrap().as_slice(), &[0.0, 0.5, 0.5]);
        let p = normalized_probabilities(&coeffs(&[0, 3, 4, 1])).unwrap();
        for (got, want) in p.as_slice().iter().zip([0.0, 0.375, 0.5, 0.125]) {
            assert!((got - want).abs() < 1e-15);
        }
        assert_eq!(normalized_probabilities(&coeffs(&[0, 0])), Err(Error::ZeroDistribution));
    }

    #[test]
    fn complete_graph_probabilities() {
        // p(k) = n^{n−k} C(n−1, k−1) / (n+1)^{n−1}
        let n = 6u64;
        let c = closed_form_coefficients(&FamilySpec::new(Family::Complete, n as usize)).unwrap();
        let p = normalized_probabilities(&c).unwrap();
        let binom = |a: u64, b: u64| (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1));
        for k in 1..=n {
            let want = (n.pow((n - k) as u32) * binom(n - 1, k - 1)) as f64 / ((n + 1).pow((n - 1) as u32)) as f64;
            assert!(rel(p.as_slice()[k as usize], want) < 1e-13);
        }
    }

    #[test]
    fn huge_coefficients_do_not_overflow() {
        let c = closed_form_coefficients(&FamilySpec::new(Family::Cycle, 1600)).unwrap();
        let p = normalized_probabilities(&c).unwrap();
        assert!((neumaier_sum(p.as_slice().iter().copied()) - 1.0).abs() < 1e-12);
        assert!(p.as_slice().iter().all(|x| x.is_finite() && (0.0..=1.0).contains(x)));
    }

    #[test]
    fn compensated_sum() {
        assert_eq!(neumaier_sum([1.0, 1e100, 1.0, -1e100]), 2.0);
    }
}
