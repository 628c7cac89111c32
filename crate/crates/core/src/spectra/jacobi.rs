//! Cyclic Jacobi rotations for dense symmetric matrices.

use super::Spectrum;
use crate::charpoly::IntMatrix;
use crate::error::{Error, Result};

/// Off-diagonal Frobenius threshold, relative to `max(1, ‖M‖_F)`.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric integer matrix, sorted descending.
///
/// Sweeps over all `(p, q)` pairs until the off-diagonal Frobenius norm
/// drops below `tol · max(1, ‖M‖_F)`. Values in `(−10·tol·scale, 0)` are
/// snapped to zero, since Laplacians are positive semi-definite.
pub fn numeric_spectrum(m: &IntMatrix, tol: f64) -> Result<Spectrum> {
    if let Some((i, j)) = m.first_asymmetry() {
        return Err(Error::NotSymmetric(i, j));
    }
    let n = m.order();
    let mut a = m.to_f64();
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let threshold = tol * scale;

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        s.sqrt()
    };

    let mut converged = off_norm(&a) < threshold;
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        converged = off_norm(&a) < threshold;
    }

    let snap = 10.0 * threshold;
    let values = (0..n)
        .map(|i| {
            let v = a[i * n + i];
            if v < 0.0 && v > -snap {
                0.0
            } else {
                v
            }
        })
        .collect();
    Ok(Spectrum::new(values, false))
}

/// Annihilates `a[p][q]` with a plane rotation.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = c * arp - s * arq;
        let new_rq = s * arp + c * arq;
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
}
