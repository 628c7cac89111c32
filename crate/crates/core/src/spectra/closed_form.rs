use std::f64::consts::PI;

use super::{cone_spectrum, Spectrum};
use crate::charpoly::poly::binomial_row;
use crate::error::{Error, Result};
use crate::graph::{Family, FamilySpec};
use num_traits::ToPrimitive;

/// Closed-form Laplacian spectrum of a named family.
///
/// Integral families (star, complete, complete bipartite, hypercube,
/// matching union) are flagged exact; path, cycle and wheel use
/// `4 sin²` values in double precision.
pub fn closed_form_spectrum(spec: &FamilySpec) -> Result<Spectrum> {
    spec.validate()?;
    let n = spec.n;
    let nf = n as f64;
    let s = match spec.family {
        Family::Path => Spectrum::new(
            (0..n).map(|j| four_sin_squared(j as f64 * PI / (2.0 * nf))).collect(),
            false,
        ),
        Family::Cycle => cycle(n),
        Family::Wheel => cone_spectrum(&cycle(n))?,
        Family::Star => Spectrum::from_multiplicities([(nf, 1), (1.0, n - 2), (0.0, 1)]),
        Family::Complete => Spectrum::from_multiplicities([(nf, n - 1), (0.0, 1)]),
        Family::CompleteBipartite => {
            let m = spec.second();
            Spectrum::from_multiplicities([
                ((m + n) as f64, 1),
                (m as f64, n - 1),
                (nf, m - 1),
                (0.0, 1),
            ])
        }
        Family::Hypercube => Spectrum::from_multiplicities(
            binomial_row(n)
                .iter()
                .enumerate()
                .map(|(k, mult)| (2.0 * k as f64, mult.to_usize().unwrap())),
        ),
        Family::MatchingUnion => Spectrum::from_multiplicities([(2.0, n), (0.0, n)]),
        other => return Err(Error::Unsupported(format!("no closed-form spectrum for {other}"))),
    };
    Ok(s)
}

fn cycle(n: usize) -> Spectrum {
    Spectrum::new(
        (0..n).map(|j| four_sin_squared(j as f64 * PI / n as f64)).collect(),
        false,
    )
}

fn four_sin_squared(theta: f64) -> f64 {
    let s = theta.sin();
    4.0 * s * s
}
