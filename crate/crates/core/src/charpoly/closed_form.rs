//! Closed-form Laplacian coefficients for named families, and exact
//! moments of the normalized coefficient distribution.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use super::poly::{self, binomial_row, cone_coefficients, exact_div};
use super::Coefficients;
use crate::error::{Error, Result};
use crate::graph::{Family, FamilySpec};

/// Coefficients from family formulas, without touching a matrix.
///
/// Supported: complete, star, path, cycle, matching union, complete
/// bipartite, hypercube (integer spectrum expansion) and wheel (cone over
/// the cycle formula).
pub fn closed_form_coefficients(spec: &FamilySpec) -> Result<Coefficients> {
    spec.validate()?;
    let n = spec.n;
    let c = match spec.family {
        Family::Complete => complete(n),
        Family::Star => star(n),
        Family::Path => path(n)?,
        Family::Cycle => cycle(n)?,
        Family::MatchingUnion => matching_union(n),
        Family::CompleteBipartite => {
            let m = spec.second();
            // x (x + m + n) (x + m)^{n−1} (x + n)^{m−1}
            poly::from_roots([
                (BigUint::zero(), 1),
                (BigUint::from(m + n), 1),
                (BigUint::from(m), n - 1),
                (BigUint::from(n), m - 1),
            ])
        }
        Family::Hypercube => {
            let row = binomial_row(n);
            poly::from_roots(row.iter().enumerate().map(|(k, mult)| {
                (BigUint::from(2 * k), mult.to_usize().expect("small multiplicity"))
            }))
        }
        Family::Wheel => return cone_coefficients(&Coefficients::new(cycle(n)?)),
        other => {
            return Err(Error::Unsupported(format!(
                "no closed-form coefficients for {other}"
            )))
        }
    };
    Ok(Coefficients::new(c))
}

/// `c(k) = n^{n−k} C(n−1, k−1)`.
fn complete(n: usize) -> Vec<BigUint> {
    let row = binomial_row(n - 1);
    let base = BigUint::from(n);
    let mut c = vec![BigUint::zero(); n + 1];
    let mut power = BigUint::one();
    for k in (1..=n).rev() {
        c[k] = &power * &row[k - 1];
        power *= &base;
    }
    c
}

/// `c(k) = C(n−2, k−2) + n C(n−2, k−1)` for the star on `n` vertices.
fn star(n: usize) -> Vec<BigUint> {
    let row = binomial_row(n - 2);
    let at = |j: isize| -> BigUint {
        if j < 0 || j as usize >= row.len() {
            BigUint::zero()
        } else {
            row[j as usize].clone()
        }
    };
    (0..=n as isize)
        .map(|k| at(k - 2) + BigUint::from(n) * at(k - 1))
        .collect()
}

/// `c(k) = C(n−1+k, 2k−1)`, built by the ratio
/// `c(k+1) / c(k) = (n+k)(n−k) / (2k (2k+1))`.
fn path(n: usize) -> Result<Vec<BigUint>> {
    let mut c = vec![BigUint::zero(); n + 1];
    c[1] = BigUint::from(n);
    for k in 1..n {
        let num = &c[k] * BigUint::from((n + k) * (n - k));
        c[k + 1] = exact_div(num, (2 * k * (2 * k + 1)) as u64, "path coefficient")?;
    }
    Ok(c)
}

/// `c(k) = 2n / (n+k) · C(n+k, 2k)` for `k ≥ 1`.
fn cycle(n: usize) -> Result<Vec<BigUint>> {
    let mut c = vec![BigUint::zero(); n + 1];
    let mut binom = BigUint::one(); // C(n+k, 2k) at k = 0
    for k in 0..=n {
        if k > 0 {
            let scaled = &binom * BigUint::from(2 * n);
            c[k] = exact_div(scaled, (n + k) as u64, "cycle coefficient")?;
        }
        if k < n {
            let num = binom * BigUint::from((n + k + 1) * (n - k));
            binom = exact_div(num, ((2 * k + 1) * (2 * k + 2)) as u64, "cycle binomial")?;
        }
    }
    Ok(c)
}

/// `x^n (x + 2)^n` on `2n` vertices: `c(k) = C(n, k−n) 2^{2n−k}`.
fn matching_union(n: usize) -> Vec<BigUint> {
    let row = binomial_row(n);
    let mut c = vec![BigUint::zero(); 2 * n + 1];
    for j in 0..=n {
        c[n + j] = &row[j] << (n - j);
    }
    c
}

/// Exact moments of the normalized coefficient distribution:
/// `total = Σ c_k`, `first = Σ k c_k`, `second = Σ k(k−1) c_k`.
///
/// These are `P(1)`, `P'(1)` and `P''(1)` for `P(x) = Σ c_k x^k`, so the
/// mean is `first / total` and the variance `second / total + mean − mean²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMoments {
    pub total: BigUint,
    pub first: BigUint,
    pub second: BigUint,
}

pub fn exact_moments(c: &Coefficients) -> ExactMoments {
    let mut m = ExactMoments {
        total: BigUint::zero(),
        first: BigUint::zero(),
        second: BigUint::zero(),
    };
    for (k, ck) in c.as_slice().iter().enumerate() {
        m.total += ck;
        m.first += ck * BigUint::from(k);
        if k >= 2 {
            m.second += ck * BigUint::from(k * (k - 1));
        }
    }
    m
}

impl ExactMoments {
    /// Mean as an exact fraction `(numerator, denominator)`.
    pub fn mean(&self) -> (BigInt, BigInt) {
        (self.first.clone().into(), self.total.clone().into())
    }

    /// Variance as an exact fraction `(numerator, denominator)`:
    /// `(second·total + first·total − first²) / total²`.
    pub fn variance(&self) -> (BigInt, BigInt) {
        let t: BigInt = self.total.clone().into();
        let f: BigInt = self.first.clone().into();
        let s: BigInt = self.second.clone().into();
        (&s * &t + &f * &t - &f * &f, &t * &t)
    }

    pub fn mean_f64(&self) -> f64 {
        ratio_f64(&self.mean())
    }

    pub fn variance_f64(&self) -> f64 {
        ratio_f64(&self.variance())
    }
}

/// A big fraction evaluated in floating point through logarithms, so huge
/// numerators and denominators do not overflow.
pub(crate) fn ratio_f64((num, den): &(BigInt, BigInt)) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let sign = if (num.sign() == num_bigint::Sign::Minus) != (den.sign() == num_bigint::Sign::Minus) {
        -1.0
    } else {
        1.0
    };
    sign * (poly::ln_abs_bigint(num) - poly::ln_abs_bigint(den)).exp()
}
