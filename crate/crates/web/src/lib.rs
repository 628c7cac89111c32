//! wasm-bindgen wrappers behind `www/index.html`.
//!
//! Every export returns a JSON string. The `*_json` functions are plain Rust
//! so they can be tested without a browser.

use lapcoef::report::{self, Execution};
use lapcoef::spectra::family_spectrum;
use lapcoef::stats::{mean_variance, normal_pdf, normalized_probabilities};
use lapcoef::{Family, FamilySpec};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Keeps the page responsive; larger sizes belong on the command line.
pub const MAX_VERTICES: usize = 400;

#[derive(Serialize)]
struct Distribution {
    family: String,
    vertices: usize,
    probabilities: Vec<f64>,
    /// Normal density at k, scaled to unit cell width.
    gaussian: Vec<f64>,
    mu: f64,
    sigma2: f64,
    clt_distance: f64,
    llt_distance: f64,
    poisson_distance: Option<f64>,
}

#[derive(Serialize)]
struct SpectrumView {
    family: String,
    values: Vec<f64>,
    exact: bool,
}

fn spec_from(family: &str, n: u32, m: u32, seed: u32) -> Result<FamilySpec, String> {
    let family: Family = family.parse().map_err(|e| format!("{e}"))?;
    let mut spec = FamilySpec::new(family, n as usize);
    if m > 0 {
        spec = spec.with_m(m as usize);
    }
    if family.is_random() {
        spec = spec.with_seed(u64::from(seed));
    }
    spec.validate().map_err(|e| e.to_string())?;
    let vertices = spec.vertex_count();
    if vertices > MAX_VERTICES {
        return Err(format!("{vertices} vertices; the demo stops at {MAX_VERTICES}"));
    }
    Ok(spec)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("finite values serialize")
}

fn error_json(msg: &str) -> String {
    to_json(&serde_json::json!({ "error": msg }))
}

pub fn distribution_json(family: &str, n: u32, m: u32, seed: u32) -> Result<String, String> {
    let spec = spec_from(family, n, m, seed)?;
    let coeffs = report::family_coefficients(&spec).map_err(|e| e.to_string())?;
    let probs = normalized_probabilities(&coeffs).map_err(|e| e.to_string())?;
    let spectrum = family_spectrum(&spec).map_err(|e| e.to_string())?;
    let stats = mean_variance(&spectrum).map_err(|e| e.to_string())?;
    let row = report::diagnose_family(&spec).map_err(|e| e.to_string())?;
    let sigma = stats.sigma();
    let gaussian = (0..probs.len())
        .map(|k| normal_pdf((k as f64 - stats.mu) / sigma) / sigma)
        .collect();
    Ok(to_json(&Distribution {
        family: spec.to_string(),
        vertices: stats.n,
        probabilities: probs.as_slice().to_vec(),
        gaussian,
        mu: stats.mu,
        sigma2: stats.sigma2,
        clt_distance: row.clt_distance,
        llt_distance: row.llt_distance,
        poisson_distance: row.poisson_distance,
    }))
}

pub fn spectrum_json(family: &str, n: u32, m: u32, seed: u32) -> Result<String, String> {
    let spec = spec_from(family, n, m, seed)?;
    let s = family_spectrum(&spec).map_err(|e| e.to_string())?;
    Ok(to_json(&SpectrumView {
        family: spec.to_string(),
        values: s.values().to_vec(),
        exact: s.is_exact(),
    }))
}

/// `ladder` is comma-separated, e.g. "25,100,400".
pub fn sweep_json(family: &str, ladder: &str, m: u32, seed: u32) -> Result<String, String> {
    let sizes = ladder
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|_| format!("bad ladder entry {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    let Some(&first) = sizes.first() else {
        return Err("empty ladder".into());
    };
    let spec = spec_from(family, first, m, seed)?;
    for &n in &sizes {
        spec_from(family, n, m, seed)?;
    }
    let sizes: Vec<usize> = sizes.into_iter().map(|n| n as usize).collect();
    let rows = report::sweep(&spec, &sizes, Execution::Serial).map_err(|e| e.to_string())?;
    Ok(report::reports_to_json(&rows))
}

fn flatten(r: Result<String, String>) -> String {
    r.unwrap_or_else(|e| error_json(&e))
}

/// Normalized coefficient distribution with its Gaussian overlay.
#[wasm_bindgen]
pub fn distribution(family: &str, n: u32, m: u32, seed: u32) -> String {
    flatten(distribution_json(family, n, m, seed))
}

/// Laplacian spectrum, descending.
#[wasm_bindgen]
pub fn spectrum(family: &str, n: u32, m: u32, seed: u32) -> String {
    flatten(spectrum_json(family, n, m, seed))
}

/// Diagnostics rows along a size ladder.
#[wasm_bindgen]
pub fn sweep(family: &str, ladder: &str, m: u32, seed: u32) -> String {
    flatten(sweep_json(family, ladder, m, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn distribution_sums_to_one() {
        let v = parse(&distribution("path", 30, 0, 0));
        let p: Vec<f64> = serde_json::from_value(v["probabilities"].clone()).unwrap();
        assert_eq!(p.len(), 31);
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(v["poisson_distance"].is_null());
    }

    #[test]
    fn complete_graph_has_poisson_column() {
        let v = parse(&distribution("complete", 20, 0, 0));
        assert!(v["poisson_distance"].as_f64().unwrap() < 0.05);
    }

    #[test]
    fn spectrum_of_star() {
        let v = parse(&spectrum("star", 5, 0, 0));
        let vals: Vec<f64> = serde_json::from_value(v["values"].clone()).unwrap();
        assert_eq!(vals, vec![5.0, 1.0, 1.0, 1.0, 0.0]);
        assert_eq!(v["exact"], Value::Bool(true));
    }

    #[test]
    fn random_family_uses_seed() {
        assert_eq!(spectrum("random_tree", 12, 0, 7), spectrum("random_tree", 12, 0, 7));
        assert_ne!(spectrum("random_tree", 12, 0, 7), spectrum("random_tree", 12, 0, 8));
    }

    #[test]
    fn sweep_rows_follow_ladder() {
        let v = parse(&sweep("cycle", "10, 20,40", 0, 0));
        let ns: Vec<u64> = v.as_array().unwrap().iter().map(|r| r["n"].as_u64().unwrap()).collect();
        assert_eq!(ns, vec![10, 20, 40]);
    }

    #[test]
    fn errors_come_back_as_json() {
        assert!(parse(&distribution("nope", 5, 0, 0))["error"].is_string());
        assert!(parse(&spectrum("complete", 5000, 0, 0))["error"].is_string());
        assert!(parse(&sweep("path", "10,x", 0, 0))["error"].is_string());
        assert!(parse(&sweep("path", "", 0, 0))["error"].is_string());
    }
}
