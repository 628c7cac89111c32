//! Dense polynomials with nonnegative big-integer coefficients, lowest degree first.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::Coefficients;
use crate::error::{Error, Result};

pub fn mul(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Multiplies `p` in place by `(x + root)`.
pub fn mul_linear(p: &mut Vec<BigUint>, root: &BigUint) {
    p.push(BigUint::zero());
    for k in (0..p.len()).rev() {
        let scaled = std::mem::take(&mut p[k]) * root;
        p[k] = if k > 0 { &p[k - 1] + scaled } else { scaled };
    }
}

/// Expands `∏ (x + root)^multiplicity`.
pub fn from_roots<I>(roots: I) -> Vec<BigUint>
where
    I: IntoIterator<Item = (BigUint, usize)>,
{
    let mut p = vec![BigUint::from(1u8)];
    for (root, mult) in roots {
        for _ in 0..mult {
            mul_linear(&mut p, &root);
        }
    }
    p
}

/// `p(x + a)` by repeated synthetic division, O(deg²) additions.
pub fn shift(p: &[BigUint], a: &BigUint) -> Vec<BigUint> {
    let mut q = p.to_vec();
    let n = q.len();
    if a.is_zero() {
        return q;
    }
    for i in 0..n {
        for k in (i..n.saturating_sub(1)).rev() {
            let carry = &q[k + 1] * a;
            q[k] += carry;
        }
    }
    q
}

/// Exact quotient `p / x`; fails if the constant term is nonzero.
pub fn div_x(p: &[BigUint]) -> Result<Vec<BigUint>> {
    match p.split_first() {
        Some((c0, rest)) if c0.is_zero() => Ok(rest.to_vec()),
        _ => Err(Error::NoZeroEigenvalue),
    }
}

/// Coefficients of the join: `x (x + n1 + n2) R1(x + n2) R2(x + n1)` with
/// `R_i(y) = P_i(y) / y`. This is the exact form of shifting each nonzero
/// Laplacian eigenvalue of one side by the order of the other.
pub fn join_coefficients(c1: &Coefficients, c2: &Coefficients) -> Result<Coefficients> {
    let (n1, n2) = (c1.degree(), c2.degree());
    if n1 == 0 {
        return Ok(c2.clone());
    }
    if n2 == 0 {
        return Ok(c1.clone());
    }
    let r1 = shift(&div_x(c1.as_slice())?, &BigUint::from(n2));
    let r2 = shift(&div_x(c2.as_slice())?, &BigUint::from(n1));
    let mut p = mul(&r1, &r2);
    mul_linear(&mut p, &BigUint::from(n1 + n2));
    mul_linear(&mut p, &BigUint::zero());
    Ok(Coefficients::new(p))
}

/// Coefficients of the cone `G ∇ K_1`: `x (x + n + 1) R(x + 1)`.
pub fn cone_coefficients(c: &Coefficients) -> Result<Coefficients> {
    join_coefficients(c, &Coefficients::new(vec![BigUint::zero(), BigUint::from(1u8)]))
}

/// Natural logarithm of a positive big integer, good to about 1e−16 relative.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().unwrap() as f64).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap() as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln |x|` for a nonzero signed big integer.
pub fn ln_abs_bigint(x: &BigInt) -> f64 {
    ln_biguint(x.magnitude())
}

/// Exact division helper for recurrences that are known to divide evenly.
pub(crate) fn exact_div(num: BigUint, den: u64, context: &str) -> Result<BigUint> {
    let (q, r) = num.div_rem(&BigUint::from(den));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Invariant(format!("{context}: inexact division by {den}")))
    }
}

/// Row `C(n, 0..=n)`.
pub fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigUint::from(1u8);
    row.push(c.clone());
    for j in 0..n {
        c = c * BigUint::from(n - j) / BigUint::from(j + 1);
        row.push(c.clone());
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn expansion_and_shift() {
        // x (x + 2)^2 (x + 4)
        let p = from_roots([(0u8.into(), 1), (2u8.into(), 2), (4u8.into(), 1)]);
        assert_eq!(p, u(&[0, 16, 20, 8, 1]));
        // (x + 1)^2 shifted by 2 is (x + 3)^2
        assert_eq!(shift(&u(&[1, 2, 1]), &2u8.into()), u(&[9, 6, 1]));
        assert_eq!(mul(&u(&[1, 1]), &u(&[2, 1])), u(&[2, 3, 1]));
        assert_eq!(binomial_row(4), u(&[1, 4, 6, 4, 1]));
    }

    #[test]
    fn cone_of_triangle_is_k4() {
        // K_3: x (x + 3)^2, K_4: x (x + 4)^3
        let k3 = Coefficients::new(u(&[0, 9, 6, 1]));
        let k4 = cone_coefficients(&k3).unwrap();
        assert_eq!(k4.as_slice(), u(&[0, 64, 48, 12, 1]));
        let k1 = Coefficients::new(u(&[0, 1]));
        assert_eq!(join_coefficients(&k1, &k1).unwrap().as_slice(), u(&[0, 2, 1]));
        assert!(join_coefficients(&Coefficients::new(u(&[1, 1])), &k1).is_err());
    }

    #[test]
    fn big_logarithms() {
        assert!((ln_biguint(&1000u32.into()) - 1000f64.ln()).abs() < 1e-15);
        let big = BigUint::from(3u8).pow(500);
        let expected = 500.0 * 3f64.ln();
        assert!(((ln_biguint(&big) - expected) / expected).abs() < 1e-15);
    }
}
