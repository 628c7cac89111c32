//! Diagnostics rows, size-ladder sweeps and the verification corpus.

mod verify;

use serde::{Deserialize, Serialize};

use crate::charpoly::{closed_form_coefficients, laplacian_coefficients, Coefficients};
use crate::error::{Error, Result};
use crate::graph::{Family, FamilySpec, Graph};
use crate::spectra::{family_spectrum, laplacian_spectrum, Spectrum};
use crate::stats::{
    clt_distance, cone_variance_lower_bound, exact_limit_errors, family_limit_constants,
    hypercube_variance_lower_bound, llt_distance, mean_variance, normalized_probabilities,
    poisson_distance, variance_lower_bound,
};

pub use verify::{
    run_verification, verification_corpus, CheckOutcome, CorpusGraph, VerificationReport,
};

/// Whether independent work items may run on the rayon pool.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

pub(crate) fn map_ordered<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

pub const VERDICT_NORMAL: &str = "normal-regime";
pub const VERDICT_POISSON: &str = "poisson-regime";
pub const TREND_GROWING: &str = "sigma2-growing";
pub const TREND_BOUNDED: &str = "sigma2-bounded";

/// One row of diagnostics for a graph.
///
/// Sweep-only columns are `None` for single diagnoses.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticsReport {
    pub family: String,
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub mu: f64,
    pub sigma2: f64,
    pub sigma2_lower_bound: f64,
    pub clt_distance: f64,
    pub llt_distance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poisson_distance: Option<f64>,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_per_vertex_error: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma2_per_vertex_error: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_error_log10: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma2_error_log10: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma2_trend: Option<String>,
}

pub const CSV_HEADER: &str = "family,n,vertices,edges,max_degree,mu,sigma2,sigma2_lower_bound,clt_distance,llt_distance,poisson_distance,verdict,mu_per_vertex_error,sigma2_per_vertex_error,mu_error_log10,sigma2_error_log10,sigma2_trend";

impl DiagnosticsReport {
    pub fn csv_row(&self) -> String {
        fn opt(v: Option<f64>) -> String {
            v.map(|x| x.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.n,
            self.vertices,
            self.edges,
            self.max_degree,
            self.mu,
            self.sigma2,
            self.sigma2_lower_bound,
            self.clt_distance,
            self.llt_distance,
            opt(self.poisson_distance),
            self.verdict,
            opt(self.mu_per_vertex_error),
            opt(self.sigma2_per_vertex_error),
            opt(self.mu_error_log10),
            opt(self.sigma2_error_log10),
            self.sigma2_trend.clone().unwrap_or_default(),
        )
    }
}

pub fn reports_to_csv(rows: &[DiagnosticsReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

pub fn reports_to_json(rows: &[DiagnosticsReport]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows hold finite floats");
    out.push('\n');
    out
}

/// Shifted Poisson law expected for the family, as `(mean, shift)`.
pub fn poisson_limit(spec: &FamilySpec) -> Option<(f64, usize)> {
    match spec.family {
        Family::Complete => Some((1.0, 1)),
        Family::CompleteBipartite if spec.second() == spec.n => Some((2.0, 1)),
        _ => None,
    }
}

/// Exact coefficients of a family graph: closed forms where available,
/// Faddeev–LeVerrier otherwise.
pub fn family_coefficients(spec: &FamilySpec) -> Result<Coefficients> {
    match closed_form_coefficients(spec) {
        Err(Error::Unsupported(_)) => laplacian_coefficients(&spec.build()?),
        other => other,
    }
}

struct Inputs<'a> {
    label: String,
    n: usize,
    graph: &'a Graph,
    coeffs: Coefficients,
    spectrum: Spectrum,
    extra_bound: f64,
    poisson: Option<(f64, usize)>,
}

fn assemble(inputs: Inputs<'_>) -> Result<DiagnosticsReport> {
    let g = inputs.graph;
    let stats = mean_variance(&inputs.spectrum)?;
    let p = normalized_probabilities(&inputs.coeffs)?;
    let clt = clt_distance(&p, &stats)?;
    let llt = llt_distance(&p, &stats)?;
    let poisson = inputs.poisson.map(|(mean, shift)| poisson_distance(&p, mean, shift));
    let verdict = match poisson {
        Some(d) if d < clt => VERDICT_POISSON,
        _ => VERDICT_NORMAL,
    };
    Ok(DiagnosticsReport {
        family: inputs.label,
        n: inputs.n,
        vertices: g.order(),
        edges: g.edge_count(),
        max_degree: g.max_degree(),
        mu: stats.mu,
        sigma2: stats.sigma2,
        sigma2_lower_bound: variance_lower_bound(g).max(inputs.extra_bound),
        clt_distance: clt,
        llt_distance: llt,
        poisson_distance: poisson,
        verdict: verdict.to_string(),
        mu_per_vertex_error: None,
        sigma2_per_vertex_error: None,
        mu_error_log10: None,
        sigma2_error_log10: None,
        sigma2_trend: None,
    })
}

/// Diagnostics for one family member. Coefficients and spectrum come from
/// closed forms when the family has them.
pub fn diagnose_family(spec: &FamilySpec) -> Result<DiagnosticsReport> {
    let graph = spec.build()?;
    let coeffs = family_coefficients(spec)?;
    let spectrum = family_spectrum(spec)?;
    let extra_bound = match spec.family {
        Family::Wheel => cone_variance_lower_bound(spec.n, 2),
        Family::Hypercube => hypercube_variance_lower_bound(spec.n),
        _ => 0.0,
    };
    let mut row = assemble(Inputs {
        label: spec.family.name().to_string(),
        n: spec.n,
        graph: &graph,
        coeffs,
        spectrum,
        extra_bound,
        poisson: poisson_limit(spec),
    })?;
    if let Ok(constants) = family_limit_constants(spec.family) {
        let nf = graph.order() as f64;
        row.mu_per_vertex_error = Some((row.mu / nf - constants.mu_per_vertex).abs());
        row.sigma2_per_vertex_error = Some((row.sigma2 / nf - constants.sigma2_per_vertex).abs());
    }
    Ok(row)
}

/// Diagnostics for an arbitrary graph (exact coefficients, numeric spectrum).
pub fn diagnose_graph(label: &str, g: &Graph) -> Result<DiagnosticsReport> {
    assemble(Inputs {
        label: label.to_string(),
        n: g.order(),
        graph: g,
        coeffs: laplacian_coefficients(g)?,
        spectrum: laplacian_spectrum(g)?,
        extra_bound: 0.0,
        poisson: None,
    })
}

/// Diagnoses the family at every ladder size, in ladder order.
///
/// Families with known per-vertex limits also get exact convergence
/// errors, and every row carries the variance trend of the whole ladder:
/// growing when σ² increases strictly and its overall growth is at least
/// the square root of the vertex-count growth, bounded otherwise.
pub fn sweep(spec: &FamilySpec, ladder: &[usize], exec: Execution) -> Result<Vec<DiagnosticsReport>> {
    if ladder.is_empty() {
        return Err(Error::InvalidFamily("sweep ladder is empty".into()));
    }
    let constants = family_limit_constants(spec.family).ok();
    let rows = map_ordered(ladder, exec, |&n| -> Result<DiagnosticsReport> {
        let at = spec.at_size(n);
        let mut row = diagnose_family(&at)?;
        if let Some(constants) = &constants {
            let errs = exact_limit_errors(&family_coefficients(&at)?, constants);
            row.mu_error_log10 = Some(errs.mu_error_log10).filter(|x| x.is_finite());
            row.sigma2_error_log10 = Some(errs.sigma2_error_log10).filter(|x| x.is_finite());
        }
        Ok(row)
    });
    let mut rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    if let Some(trend) = sigma2_trend(&rows) {
        for row in &mut rows {
            row.sigma2_trend = Some(trend.to_string());
        }
    }
    Ok(rows)
}

/// Variance trend along a ladder; `None` with fewer than two rows.
pub fn sigma2_trend(rows: &[DiagnosticsReport]) -> Option<&'static str> {
    let (first, last) = (rows.first()?, rows.last()?);
    if rows.len() < 2 {
        return None;
    }
    let increasing = rows.windows(2).all(|w| w[1].sigma2 > w[0].sigma2);
    let size_growth = last.vertices as f64 / first.vertices as f64;
    let growing = increasing && last.sigma2 / first.sigma2 >= size_growth.sqrt();
    Some(if growing { TREND_GROWING } else { TREND_BOUNDED })
}
