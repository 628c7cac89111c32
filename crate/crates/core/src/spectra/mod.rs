//! Laplacian spectra: numeric, closed-form, and transformed.

mod closed_form;
mod jacobi;

use serde::Serialize;

use crate::charpoly::laplacian_matrix;
use crate::error::{Error, Result};
use crate::graph::{FamilySpec, Graph};

pub use closed_form::closed_form_spectrum;
pub use jacobi::{numeric_spectrum, DEFAULT_TOLERANCE, MAX_SWEEPS};

/// Eigenvalues below this magnitude count as zero when a transform needs
/// to consume the zero eigenvalue of a Laplacian.
pub const ZERO_TOLERANCE: f64 = 1e-8;

/// Eigenvalues `λ_1 ≥ … ≥ λ_n`, descending.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    exact: bool,
}

impl Spectrum {
    /// Sorts `values` descending. `exact` marks values that are exact
    /// integers rather than floating-point approximations.
    pub fn new(mut values: Vec<f64>, exact: bool) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values, exact }
    }

    /// Spectrum from integer eigenvalues with multiplicities.
    pub fn from_multiplicities<I: IntoIterator<Item = (f64, usize)>>(pairs: I) -> Self {
        let values = pairs
            .into_iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v, m))
            .collect();
        Spectrum::new(values, true)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Largest eigenvalue; 0 for the null graph.
    pub fn max(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn sum(&self) -> f64 {
        crate::stats::neumaier_sum(self.values.iter().copied())
    }

    /// Eigenvalues with exactly one zero (the smallest value) removed.
    fn drop_one_zero(&self) -> Result<&[f64]> {
        match self.values.split_last() {
            Some((&last, rest)) if last.abs() <= ZERO_TOLERANCE * self.max().max(1.0) => Ok(rest),
            _ => Err(Error::NoZeroEigenvalue),
        }
    }

    /// Largest absolute difference to `other`, both sorted descending.
    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// JSON object `{values, exact, trace_residual}`.
    pub fn to_json(&self, g: &Graph) -> String {
        #[derive(Serialize)]
        struct Record<'a> {
            values: &'a [f64],
            exact: bool,
            trace_residual: f64,
        }
        serde_json::to_string(&Record {
            values: &self.values,
            exact: self.exact,
            trace_residual: trace_check(self, g),
        })
        .expect("finite floats serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,lambda\n");
        for (i, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{},{}\n", i + 1, v));
        }
        out
    }
}

/// Numeric Laplacian spectrum of `g` at the default tolerance.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    numeric_spectrum(&laplacian_matrix(g), DEFAULT_TOLERANCE)
}

/// Closed-form spectrum when the family has one, numeric otherwise.
pub fn family_spectrum(spec: &FamilySpec) -> Result<Spectrum> {
    match closed_form_spectrum(spec) {
        Err(Error::Unsupported(_)) => laplacian_spectrum(&spec.build()?),
        other => other,
    }
}

/// Spectrum of the join `G1 ∇ G2` from the spectra of the two sides:
/// `{0, n1 + n2} ∪ {n2 + λ : λ ∈ S1'} ∪ {n1 + λ : λ ∈ S2'}`, where `S'`
/// drops one zero eigenvalue.
pub fn join_spectrum(s1: &Spectrum, s2: &Spectrum) -> Result<Spectrum> {
    let (n1, n2) = (s1.len() as f64, s2.len() as f64);
    let rest1 = s1.drop_one_zero()?;
    let rest2 = s2.drop_one_zero()?;
    let mut values = Vec::with_capacity(s1.len() + s2.len());
    values.push(0.0);
    values.push(n1 + n2);
    values.extend(rest1.iter().map(|l| l + n2));
    values.extend(rest2.iter().map(|l| l + n1));
    Ok(Spectrum::new(values, s1.exact && s2.exact))
}

/// Spectrum of the cone `G ∇ K_1`: `{0, n + 1} ∪ {1 + λ : λ ∈ S'}`.
pub fn cone_spectrum(s: &Spectrum) -> Result<Spectrum> {
    join_spectrum(s, &Spectrum::new(vec![0.0], true))
}

/// Gershgorin bound `2Δ(G)` on every Laplacian eigenvalue.
pub fn gershgorin_bound(g: &Graph) -> f64 {
    2.0 * g.max_degree() as f64
}

/// Anderson–Morley bound `max{deg(u) + deg(v) : uv ∈ E}` on `λ_1`.
pub fn anderson_morley_bound(g: &Graph) -> Result<f64> {
    let deg = g.degrees();
    g.edges()
        .map(|(u, v)| (deg[u] + deg[v]) as f64)
        .reduce(f64::max)
        .ok_or(Error::Edgeless)
}

/// `|Σ λ_i − 2|E||`; trace(L) is the degree sum.
pub fn trace_check(s: &Spectrum, g: &Graph) -> f64 {
    (s.sum() - 2.0 * g.edge_count() as f64).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cone, Family};

    fn family(f: Family, n: usize) -> Graph {
        FamilySpec::new(f, n).build().unwrap()
    }

    #[test]
    fn cone_of_triangle() {
        let s = cone_spectrum(&Spectrum::new(vec![3.0, 3.0, 0.0], true)).unwrap();
        assert_eq!(s.values(), &[4.0, 4.0, 4.0, 0.0]);
        let direct = laplacian_spectrum(&family(Family::Complete, 4)).unwrap();
        assert!(s.max_abs_diff(&direct) < 1e-10);
    }

    #[test]
    fn join_of_two_points() {
        let k1 = Spectrum::new(vec![0.0], true);
        assert_eq!(join_spectrum(&k1, &k1).unwrap().values(), &[2.0, 0.0]);
    }

    #[test]
    fn join_matches_direct_computation() {
        let g1 = family(Family::Path, 4);
        let g2 = family(Family::Cycle, 5);
        let via = join_spectrum(&laplacian_spectrum(&g1).unwrap(), &laplacian_spectrum(&g2).unwrap()).unwrap();
        let direct = laplacian_spectrum(&crate::graph::join(&g1, &g2)).unwrap();
        assert!(via.max_abs_diff(&direct) < 1e-9);
    }

    #[test]
    fn cone_over_disconnected_consumes_one_zero() {
        let g = family(Family::MatchingUnion, 3);
        let via = cone_spectrum(&laplacian_spectrum(&g).unwrap()).unwrap();
        let direct = laplacian_spectrum(&cone(&g)).unwrap();
        assert!(via.max_abs_diff(&direct) < 1e-9);
    }

    #[test]
    fn transforms_need_a_zero() {
        let s = Spectrum::new(vec![2.0, 1.0], false);
        assert_eq!(cone_spectrum(&s), Err(Error::NoZeroEigenvalue));
    }

    #[test]
    fn bounds() {
        let star = family(Family::Star, 7);
        assert_eq!(anderson_morley_bound(&star).unwrap(), 7.0);
        let top = laplacian_spectrum(&star).unwrap().max();
        assert!((top - 7.0).abs() < 1e-10);
        let c = family(Family::Cycle, 9);
        assert_eq!(anderson_morley_bound(&c).unwrap(), 4.0);
        assert_eq!(gershgorin_bound(&c), 4.0);
        let p4 = family(Family::Path, 4);
        assert_eq!((gershgorin_bound(&p4), anderson_morley_bound(&p4).unwrap()), (4.0, 4.0));
        assert_eq!(anderson_morley_bound(&Graph::empty(3)), Err(Error::Edgeless));
    }

    #[test]
    fn trace_residuals() {
        let q3 = family(Family::Hypercube, 3);
        assert_eq!(trace_check(&closed_form_spectrum(&FamilySpec::new(Family::Hypercube, 3)).unwrap(), &q3), 0.0);
        let g = Graph::empty(5);
        assert_eq!(trace_check(&laplacian_spectrum(&g).unwrap(), &g), 0.0);
    }

    #[test]
    fn serialization() {
        let g = family(Family::Path, 2);
        let s = laplacian_spectrum(&g).unwrap();
        assert_eq!(s.to_json(&g), r#"{"values":[2.0,0.0],"exact":false,"trace_residual":0.0}"#);
        assert_eq!(s.to_csv(), "i,lambda\n1,2\n2,0\n");
    }
}
