//! Exact integer characteristic polynomials of Laplacian and signless
//! Laplacian matrices, with combinatorial cross-checks.

mod closed_form;
mod faddeev;
mod oracles;
pub mod poly;

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use closed_form::{closed_form_coefficients, exact_moments, ExactMoments};
pub use faddeev::charpoly_monic;
pub use oracles::{
    forest_sum_oracle, matching_counts, spanning_tree_count, wiener_index, FOREST_EDGE_GUARD,
    MATCHING_EDGE_GUARD,
};

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m[(i, i)] = 1.into();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::NotSquare);
        }
        Ok(IntMatrix {
            order,
            entries: rows.iter().flatten().cloned().map(Into::into).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.order)
            .flat_map(|i| (i + 1..self.order).map(move |j| (i, j)))
            .find(|&(i, j)| self[(i, j)] != self[(j, i)])
    }

    /// Entries as doubles; exact for the small integers found in Laplacians.
    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.entries
            .iter()
            .map(|x| x.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.order + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.order + j]
    }
}

/// L(G) = D(G) − A(G).
pub fn laplacian_matrix(g: &Graph) -> IntMatrix {
    degree_plus_adjacency(g, -1)
}

/// Q(G) = D(G) + A(G).
pub fn signless_laplacian_matrix(g: &Graph) -> IntMatrix {
    degree_plus_adjacency(g, 1)
}

fn degree_plus_adjacency(g: &Graph, off_diagonal: i32) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.order());
    for (i, d) in g.degrees().into_iter().enumerate() {
        m[(i, i)] = d.into();
    }
    for (u, v) in g.edges() {
        m[(u, v)] = off_diagonal.into();
        m[(v, u)] = off_diagonal.into();
    }
    m
}

/// Unsigned coefficients `c_0..=c_n` of `∏(x + λ_i)`.
///
/// Entry `k` is `(−1)^{n−k}` times the coefficient of `x^k` in the monic
/// characteristic polynomial; for a positive semi-definite matrix every
/// entry is nonnegative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coefficients(Vec<BigUint>);

impl Coefficients {
    /// Wraps a raw vector. Callers guarantee the vector is nonempty.
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        assert!(!coeffs.is_empty(), "a coefficient vector has at least c_0");
        Coefficients(coeffs)
    }

    /// Converts a monic signed characteristic polynomial to unsigned form,
    /// rejecting any sign that would make an entry negative.
    pub fn from_charpoly(signed: &[BigInt]) -> Result<Self> {
        let n = signed.len() - 1;
        signed
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let c = if (n - k).is_multiple_of(2) { a.clone() } else { -a };
                if c.is_negative() {
                    Err(Error::Invariant(format!(
                        "coefficient c_{k} = {c} is negative"
                    )))
                } else {
                    Ok(c.magnitude().clone())
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Coefficients)
    }

    /// Polynomial degree `n` (the vertex count for a graph).
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<BigUint> {
        self.0
    }

    pub fn get(&self, k: usize) -> Option<&BigUint> {
        self.0.get(k)
    }

    /// Smallest index with a nonzero coefficient.
    pub fn lowest_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    /// Signed monic form, coefficient of `x^k` at index `k`.
    pub fn to_charpoly(&self) -> Vec<BigInt> {
        let n = self.degree();
        self.0
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let sign = if (n - k).is_multiple_of(2) { Sign::Plus } else { Sign::Minus };
                BigInt::from_biguint(sign, c.clone())
            })
            .collect()
    }

    /// Decimal strings, index `k` at position `k`.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.0.iter().map(|c| c.to_str_radix(10)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("string arrays always serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,c_k\n");
        for (k, c) in self.0.iter().enumerate() {
            out.push_str(&format!("{k},{c}\n"));
        }
        out
    }
}

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|c| c.to_str_radix(10)))
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Upper limit on the vertex count of the general exact routine.
pub const GENERAL_ORDER_GUARD: usize = 200;

/// Laplacian coefficients `c(G, k)` by Faddeev–LeVerrier.
pub fn laplacian_coefficients(g: &Graph) -> Result<Coefficients> {
    coefficients_of(&laplacian_matrix(g))
}

/// Signless Laplacian coefficients `q(G, k)` by Faddeev–LeVerrier.
pub fn signless_coefficients(g: &Graph) -> Result<Coefficients> {
    coefficients_of(&signless_laplacian_matrix(g))
}

fn coefficients_of(m: &IntMatrix) -> Result<Coefficients> {
    if m.order() > GENERAL_ORDER_GUARD {
        return Err(Error::GuardExceeded {
            what: "exact characteristic polynomial order",
            limit: GENERAL_ORDER_GUARD,
            actual: m.order(),
        });
    }
    Coefficients::from_charpoly(&charpoly_monic(m)?)
}
