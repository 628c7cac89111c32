use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::IntMatrix;
use crate::error::{Error, Result};

/// Coefficients of `det(xI − M)`, index `k` holding the coefficient of `x^k`.
///
/// Faddeev–LeVerrier over the integers: with `N_1 = I`,
/// `a_{n−k} = −tr(M N_k) / k` and `N_{k+1} = M N_k + a_{n−k} I`. Every `N_k`
/// is an integer matrix and every division is exact; a nonzero remainder is
/// reported as an invariant violation rather than rounded away.
pub fn charpoly_monic(m: &IntMatrix) -> Result<Vec<BigInt>> {
    let n = m.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = 1.into();
    if n == 0 {
        return Ok(coeffs);
    }

    // Row-wise nonzero pattern of M; Laplacians are mostly zeros.
    let sparse: Vec<Vec<(usize, &BigInt)>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect()
        })
        .collect();

    let mut acc = IntMatrix::identity(n);
    let mut product = IntMatrix::zeros(n);
    for k in 1..=n {
        for (i, row) in sparse.iter().enumerate() {
            for j in 0..n {
                let mut s = BigInt::zero();
                for &(l, a) in row {
                    let b = &acc[(l, j)];
                    if !b.is_zero() {
                        s += a * b;
                    }
                }
                product[(i, j)] = s;
            }
        }
        let trace: BigInt = (0..n).map(|i| &product[(i, i)]).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::Invariant(format!(
                "Faddeev–LeVerrier step {k}: trace {trace} not divisible by {k}"
            )));
        }
        let a = -q;
        if k < n {
            std::mem::swap(&mut acc, &mut product);
            for i in 0..n {
                acc[(i, i)] += &a;
            }
        }
        coeffs[n - k] = a;
    }
    Ok(coeffs)
}
