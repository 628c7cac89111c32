//! The pinned verification corpus and the cross-module invariants run on it.

use std::fmt::Write;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{map_ordered, Execution};
use crate::charpoly::{
    closed_form_coefficients, forest_sum_oracle, laplacian_coefficients, matching_counts,
    signless_coefficients, spanning_tree_count, wiener_index, Coefficients,
};
use crate::error::{Error, Result};
use crate::graph::{cone, disjoint_union, subdivision, Family, FamilySpec, Graph};
use crate::spectra::{
    anderson_morley_bound, closed_form_spectrum, cone_spectrum, gershgorin_bound, laplacian_spectrum,
    trace_check, Spectrum,
};
use crate::stats::{
    cone_variance_lower_bound, mean_variance, normalized_probabilities, variance_lower_bound,
};

pub const RANDOM_TREES_PER_SIZE: u64 = 20;
pub const RANDOM_TREE_SIZES: std::ops::RangeInclusive<usize> = 4..=12;
pub const ZHOU_GUTMAN_MAX_ORDER: usize = 9;
pub const FOREST_ORACLE_MAX_ORDER: usize = 7;
pub const REGULAR_SEEDS: u64 = 10;
pub const REGULAR_SHAPES: [(usize, usize); 3] = [(8, 3), (10, 3), (10, 4)];
pub const SUBDIVISION_MAX_SIZE: usize = 40;
pub const CONE_MAX_ORDER: usize = 40;
pub const CLOSED_SPECTRUM_MAX_ORDER: usize = 64;

pub const TRACE_TOLERANCE: f64 = 1e-8;
pub const MOMENT_TOLERANCE: f64 = 1e-8;
pub const RECONSTRUCTION_TOLERANCE: f64 = 1e-6;
pub const SPECTRUM_TOLERANCE: f64 = 1e-8;
const BOUND_SLACK: f64 = 1e-9;

/// A corpus member with a stable label.
#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub label: String,
    pub graph: Graph,
    pub family: Option<FamilySpec>,
}

impl CorpusGraph {
    fn family(spec: FamilySpec) -> Self {
        CorpusGraph {
            label: spec.to_string(),
            graph: spec.build().expect("corpus specs are valid"),
            family: Some(spec),
        }
    }

    fn plain(label: String, graph: Graph) -> Self {
        CorpusGraph {
            label,
            graph,
            family: None,
        }
    }
}

/// Every named family at small sizes, seeded random trees and regular
/// graphs, subdivisions, and a few disconnected graphs.
pub fn verification_corpus() -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    let mut add_family = |f: Family, sizes: std::ops::RangeInclusive<usize>| {
        for n in sizes {
            out.push(CorpusGraph::family(FamilySpec::new(f, n)));
        }
    };
    add_family(Family::Path, 1..=12);
    add_family(Family::Cycle, 3..=12);
    add_family(Family::Star, 2..=12);
    add_family(Family::Complete, 1..=12);
    add_family(Family::Hypercube, 0..=4);
    add_family(Family::MatchingUnion, 1..=6);
    add_family(Family::Wheel, 3..=12);
    add_family(Family::CompleteBinaryTree, 0..=3);
    for n in 1..=11 {
        for m in n..=12 - n {
            out.push(CorpusGraph::family(
                FamilySpec::new(Family::CompleteBipartite, n).with_m(m),
            ));
        }
    }
    for n in 1..=5 {
        out.push(CorpusGraph::plain(format!("empty({n})"), Graph::empty(n)));
    }
    let p3 = FamilySpec::new(Family::Path, 3).build().unwrap();
    let c4 = FamilySpec::new(Family::Cycle, 4).build().unwrap();
    let k3 = FamilySpec::new(Family::Complete, 3).build().unwrap();
    out.push(CorpusGraph::plain("path(3)+cycle(4)".into(), disjoint_union(&p3, &c4)));
    out.push(CorpusGraph::plain("complete(3)+empty(2)".into(), disjoint_union(&k3, &Graph::empty(2))));
    out.push(CorpusGraph::plain(
        "cone(path(3)+cycle(4))".into(),
        cone(&disjoint_union(&p3, &c4)),
    ));

    for (n, d) in REGULAR_SHAPES {
        for seed in 0..REGULAR_SEEDS {
            out.push(CorpusGraph::family(
                FamilySpec::new(Family::RandomRegular, n).with_m(d).with_seed(seed),
            ));
        }
    }

    let subdivided: Vec<CorpusGraph> = out
        .iter()
        .filter(|c| c.graph.order() + c.graph.edge_count() <= SUBDIVISION_MAX_SIZE)
        .filter(|c| c.graph.edge_count() > 0)
        .map(|c| CorpusGraph::plain(format!("subdivision({})", c.label), subdivision(&c.graph)))
        .collect();
    out.extend(subdivided);

    for n in RANDOM_TREE_SIZES {
        for i in 0..RANDOM_TREES_PER_SIZE {
            let seed = (n as u64) << 32 | i;
            out.push(CorpusGraph::family(
                FamilySpec::new(Family::RandomTree, n).with_seed(seed),
            ));
        }
    }
    out
}

/// Result of one invariant over the corpus.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub scope: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    pub fn summary_line(&self) -> String {
        if self.passed() {
            format!("{}: PASS ({}, {} checked)", self.name, self.scope, self.checked)
        } else if self.checked == 0 {
            format!("{}: FAIL (nothing checked)", self.name)
        } else {
            format!(
                "{}: FAIL ({} of {} failed; first: {})",
                self.name,
                self.failures.len(),
                self.checked,
                self.failures[0]
            )
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub graphs: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            writeln!(out, "{}", c.summary_line()).unwrap();
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        writeln!(
            out,
            "{passed}/{} invariants passed on {} corpus graphs",
            self.checks.len(),
            self.graphs
        )
        .unwrap();
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Check {
    Handshake,
    ExactIdentities,
    ForestOracle,
    ZhouGutman,
    Wiener,
    Sandwich,
    BipartiteSignless,
    ClosedForm,
    Bounds,
    Trace,
    VarianceBound,
    Moments,
    Reconstruction,
    ConeTransform,
}

const CHECKS: [(Check, &str, &str); 14] = [
    (Check::Handshake, "handshake", "all corpus graphs"),
    (Check::ExactIdentities, "exact coefficient identities", "all corpus graphs"),
    (Check::ForestOracle, "forest-oracle equality", "all graphs ≤ 7 vertices"),
    (Check::ZhouGutman, "Zhou–Gutman tree identity", "trees ≤ 9"),
    (Check::Wiener, "Wiener index identity", "all trees"),
    (Check::Sandwich, "star/path sandwich", "random trees ≤ 12"),
    (Check::BipartiteSignless, "bipartite signless equality", "all bipartite graphs"),
    (Check::ClosedForm, "closed-form coefficients", "closed-form families n ≤ 12"),
    (Check::Bounds, "eigenvalue bounds", "all graphs with edges"),
    (Check::Trace, "trace residual", "all corpus graphs"),
    (Check::VarianceBound, "variance lower bound", "all corpus graphs"),
    (Check::Moments, "moment consistency", "all corpus graphs"),
    (Check::Reconstruction, "spectrum reconstruction", "all corpus graphs"),
    (Check::ConeTransform, "cone spectrum transform", "all graphs ≤ 40 vertices"),
];

type Verdict = Option<std::result::Result<(), String>>;

fn check_graph(entry: &CorpusGraph) -> Result<Vec<(Check, Verdict)>> {
    let g = &entry.graph;
    let n = g.order();
    let coeffs = laplacian_coefficients(g)?;
    let spectrum = laplacian_spectrum(g)?;
    let c = coeffs.as_slice();
    let fail = |msg: String| Some(Err(format!("{}: {msg}", entry.label)));
    let ok = Some(Ok(()));
    let mut out = Vec::with_capacity(CHECKS.len());

    let degree_sum: usize = g.degrees().iter().sum();
    out.push((
        Check::Handshake,
        if degree_sum == 2 * g.edge_count() { ok.clone() } else { fail(format!("degree sum {degree_sum}")) },
    ));

    out.push((Check::ExactIdentities, exact_identities(g, &coeffs).map_or(ok.clone(), fail)));

    out.push((
        Check::ForestOracle,
        if n <= FOREST_ORACLE_MAX_ORDER {
            let oracle = forest_sum_oracle(g)?;
            if oracle == coeffs { ok.clone() } else { fail(format!("oracle {oracle} vs {coeffs}")) }
        } else {
            None
        },
    ));

    let is_tree = g.is_tree();
    out.push((
        Check::ZhouGutman,
        if is_tree && n <= ZHOU_GUTMAN_MAX_ORDER {
            let m = matching_counts(&subdivision(g))?;
            let agrees = (0..=n).all(|k| c[k] == m.get(n - k).cloned().unwrap_or_default());
            if agrees { ok.clone() } else { fail(format!("matchings {m:?}")) }
        } else {
            None
        },
    ));

    out.push((
        Check::Wiener,
        if is_tree && n >= 2 {
            let w = wiener_index(g)?;
            if c[2] == BigUint::from(w) { ok.clone() } else { fail(format!("W = {w}, c_2 = {}", c[2])) }
        } else {
            None
        },
    ));

    let random_tree = entry.family.is_some_and(|f| f.family == Family::RandomTree);
    out.push((
        Check::Sandwich,
        if random_tree && n >= 2 {
            let star = closed_form_coefficients(&FamilySpec::new(Family::Star, n))?;
            let path = closed_form_coefficients(&FamilySpec::new(Family::Path, n))?;
            let within = (0..=n).all(|k| star.as_slice()[k] <= c[k] && c[k] <= path.as_slice()[k]);
            if within { ok.clone() } else { fail("outside star/path envelope".into()) }
        } else {
            None
        },
    ));

    out.push((
        Check::BipartiteSignless,
        if g.is_bipartite() && g.edge_count() > 0 {
            let q = signless_coefficients(g)?;
            if q == coeffs { ok.clone() } else { fail(format!("signless {q}")) }
        } else {
            None
        },
    ));

    out.push((
        Check::ClosedForm,
        match entry.family {
            Some(spec) => match closed_form_coefficients(&spec) {
                Ok(closed) if closed == coeffs => ok.clone(),
                Ok(closed) => fail(format!("closed form {closed}")),
                Err(Error::Unsupported(_)) => None,
                Err(e) => return Err(e),
            },
            None => None,
        },
    ));

    out.push((
        Check::Bounds,
        match anderson_morley_bound(g) {
            Ok(am) => {
                let top = spectrum.max();
                let gb = gershgorin_bound(g);
                if top <= am + BOUND_SLACK && am <= gb {
                    ok.clone()
                } else {
                    fail(format!("λ1 {top}, AM {am}, 2Δ {gb}"))
                }
            }
            Err(_) => None,
        },
    ));

    let residual = trace_check(&spectrum, g);
    out.push((
        Check::Trace,
        if residual <= TRACE_TOLERANCE { ok.clone() } else { fail(format!("residual {residual}")) },
    ));

    let stats = mean_variance(&spectrum)?;
    let mut bound = variance_lower_bound(g);
    if entry.family.is_some_and(|f| f.family == Family::Wheel) {
        bound = bound.max(cone_variance_lower_bound(n - 1, 2));
    }
    out.push((
        Check::VarianceBound,
        if stats.sigma2 + BOUND_SLACK >= bound { ok.clone() } else { fail(format!("σ² {} < {bound}", stats.sigma2)) },
    ));

    let p = normalized_probabilities(&coeffs)?;
    let (mean, var) = (p.mean(), p.variance());
    out.push((
        Check::Moments,
        if (mean - stats.mu).abs() <= MOMENT_TOLERANCE && (var - stats.sigma2).abs() <= MOMENT_TOLERANCE {
            ok.clone()
        } else {
            fail(format!("coefficients ({mean}, {var}) vs spectrum ({}, {})", stats.mu, stats.sigma2))
        },
    ));

    out.push((Check::Reconstruction, reconstruction_error(&spectrum, &coeffs).map_or(ok.clone(), fail)));

    out.push((
        Check::ConeTransform,
        if n <= CONE_MAX_ORDER {
            let via = cone_spectrum(&spectrum)?;
            let direct = laplacian_spectrum(&cone(g))?;
            let diff = via.max_abs_diff(&direct);
            if diff <= SPECTRUM_TOLERANCE { ok } else { fail(format!("max diff {diff}")) }
        } else {
            None
        },
    ));
    Ok(out)
}

/// `c_n = 1`, `c_{n−1} = 2|E|`, `c_0 = 0`, `c_1 = n τ(G)`, and
/// `c_k = 0 ⇔ k < components`.
fn exact_identities(g: &Graph, coeffs: &Coefficients) -> Option<String> {
    let n = g.order();
    let c = coeffs.as_slice();
    if c[n] != BigUint::from(1u8) {
        return Some(format!("c_n = {}", c[n]));
    }
    if n == 0 {
        return None;
    }
    if c[n - 1] != BigUint::from(2 * g.edge_count()) {
        return Some(format!("c_(n-1) = {}", c[n - 1]));
    }
    if !c[0].is_zero() {
        return Some(format!("c_0 = {}", c[0]));
    }
    let tau = spanning_tree_count(g);
    if c[1] != BigUint::from(n) * &tau {
        return Some(format!("c_1 = {} but n·τ = {}", c[1], BigUint::from(n) * tau));
    }
    let r = g.component_count();
    if let Some(k) = (0..=n).find(|&k| c[k].is_zero() != (k < r)) {
        return Some(format!("zero pattern broken at k = {k} with {r} components"));
    }
    None
}

/// Expands `∏(x + λ_i)` in floating point and compares with the exact
/// coefficients; zero entries are compared against the lowest nonzero one.
fn reconstruction_error(s: &Spectrum, coeffs: &Coefficients) -> Option<String> {
    let mut approx = vec![1.0f64];
    for &l in s.values() {
        approx.push(0.0);
        for k in (0..approx.len()).rev() {
            let lower = if k > 0 { approx[k - 1] } else { 0.0 };
            approx[k] = lower + l * approx[k];
        }
    }
    let exact: Vec<f64> = coeffs.as_slice().iter().map(|c| c.to_f64().unwrap()).collect();
    let floor = coeffs
        .lowest_nonzero()
        .map_or(1.0, |k| exact[k]);
    for (k, (&a, &e)) in approx.iter().zip(&exact).enumerate() {
        let err = if e > 0.0 { (a - e).abs() / e } else { a.abs() / floor };
        if err > RECONSTRUCTION_TOLERANCE {
            return Some(format!("k = {k}: {a} vs {e}"));
        }
    }
    None
}

fn numeric_vs_closed_spectra(exec: Execution) -> Result<CheckOutcome> {
    let mut specs = Vec::new();
    for f in [Family::Path, Family::Cycle, Family::Star, Family::Complete] {
        for n in f.min_size().max(2)..=CLOSED_SPECTRUM_MAX_ORDER {
            specs.push(FamilySpec::new(f, n));
        }
    }
    for d in 0..=6 {
        specs.push(FamilySpec::new(Family::Hypercube, d));
    }
    let results = map_ordered(&specs, exec, |spec| -> Result<Option<String>> {
        let closed = closed_form_spectrum(spec)?;
        let numeric = laplacian_spectrum(&spec.build()?)?;
        let diff = closed.max_abs_diff(&numeric);
        Ok((diff > SPECTRUM_TOLERANCE).then(|| format!("{spec}: max diff {diff}")))
    });
    let failures = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(CheckOutcome {
        name: "numeric vs closed-form spectra",
        scope: "path, cycle, star, complete n ≤ 64; hypercube d ≤ 6",
        checked: specs.len(),
        failures: failures.into_iter().flatten().collect(),
    })
}

/// Runs every invariant on the corpus. Output does not depend on `exec`.
pub fn run_verification(exec: Execution) -> Result<VerificationReport> {
    let corpus = verification_corpus();
    let per_graph = map_ordered(&corpus, exec, check_graph)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let mut checks: Vec<CheckOutcome> = CHECKS
        .iter()
        .map(|&(_, name, scope)| CheckOutcome {
            name,
            scope,
            checked: 0,
            failures: Vec::new(),
        })
        .collect();
    for verdicts in per_graph {
        for (check, verdict) in verdicts {
            let slot = CHECKS.iter().position(|(c, _, _)| *c == check).unwrap();
            match verdict {
                Some(Ok(())) => checks[slot].checked += 1,
                Some(Err(msg)) => {
                    checks[slot].checked += 1;
                    checks[slot].failures.push(msg);
                }
                None => {}
            }
        }
    }
    checks.push(numeric_vs_closed_spectra(exec)?);
    Ok(VerificationReport {
        graphs: corpus.len(),
        checks,
    })
}
