//! Acceptance suite: one line per criterion, non-zero exit if any criterion
//! fails other than the ones listed in `UNATTAINABLE`.
//!
//! Run with `cargo test -p lapcoef --test acceptance`.

use std::time::{Duration, Instant};

use lapcoef::charpoly::{
    closed_form_coefficients, forest_sum_oracle, laplacian_coefficients, matching_counts, poly,
    signless_coefficients, spanning_tree_count, wiener_index,
};
use lapcoef::graph::subdivision;
use lapcoef::report::{
    self, diagnose_family, run_verification, verification_corpus, Execution, TREND_BOUNDED,
    TREND_GROWING, VERDICT_NORMAL, VERDICT_POISSON,
};
use lapcoef::spectra::{
    anderson_morley_bound, closed_form_spectrum, cone_spectrum, gershgorin_bound,
    laplacian_spectrum, trace_check,
};
use lapcoef::stats::{
    clt_distance, exact_limit_errors, family_limit_constants, llt_distance, mean_variance,
    normalized_probabilities,
};
use lapcoef::{Coefficients, Family, FamilySpec, Spectrum};
use num_bigint::BigUint;

const CORPUS_TIME_LIMIT: Duration = Duration::from_secs(60);
const FOREST_MAX_ORDER: usize = 7;
const STAR_REL_TOL: f64 = 1e-12;
const LIMIT_N: usize = 2000;
const LIMIT_BASELINE_N: usize = 200;
const LIMIT_TOL: f64 = 5e-4;
const TREND_LADDER: [usize; 4] = [25, 100, 400, 1600];
const TREND_TIME_LIMIT: Duration = Duration::from_secs(30);
const K50_POISSON_TOL: f64 = 0.02;
const K50_MAX_K: usize = 10;
const KNN_POISSON_TOL: f64 = 0.05;
const TREES_PER_SIZE: u64 = 20;
const ZHOU_GUTMAN_SIZES: std::ops::RangeInclusive<usize> = 4..=9;
const SANDWICH_SIZES: std::ops::RangeInclusive<usize> = 4..=12;
const CONE_SIZES: std::ops::RangeInclusive<usize> = 3..=40;
const CONE_TOL: f64 = 1e-8;
const TRACE_TOL: f64 = 1e-8;
/// Floating slack on the eigenvalue and variance inequalities only.
const INEQUALITY_SLACK: f64 = 1e-9;
const MOMENT_TOL: f64 = 1e-8;

/// Published path constants 1/(2√5) and 1/(5√5). The Riemann sum
/// (1/n) Σ f(jπ/(2n)) tends to (2/π)∫₀^{π/2} f, not (1/π)∫₀^{π/2} f, so
/// μ_n/n and σ_n²/n for paths converge to 1/√5 and 2/(5√5) instead and
/// criterion 4 cannot hold for paths as stated. The suite still evaluates
/// it, reports FAIL, and checks the corrected constants separately.
const UNATTAINABLE: [usize; 1] = [4];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

fn tree_spec(n: usize, i: u64) -> FamilySpec {
    FamilySpec::new(Family::RandomTree, n).with_seed(((n as u64) << 32) | i)
}

fn coeffs(spec: &FamilySpec) -> Coefficients {
    closed_form_coefficients(spec).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let corpus = verification_corpus();
    let mut bad = Vec::new();
    for entry in &corpus {
        let g = &entry.graph;
        let n = g.order();
        let c = laplacian_coefficients(g).unwrap();
        let c = c.as_slice();
        let one = BigUint::from(1u8);
        let mut ok = c[n] == one;
        if n > 0 {
            ok &= c[n - 1] == BigUint::from(2 * g.edge_count());
            ok &= c[0] == BigUint::ZERO;
            ok &= c[1] == BigUint::from(n) * spanning_tree_count(g);
            let r = g.component_count();
            ok &= (0..=n).all(|k| (c[k] == BigUint::ZERO) == (k < r));
        }
        if !ok {
            bad.push(entry.label.clone());
        }
    }
    let elapsed = start.elapsed();
    Outcome::new(
        bad.is_empty() && elapsed < CORPUS_TIME_LIMIT,
        format!("{} graphs, {} failures {bad:?}, {:.2?}", corpus.len(), bad.len(), elapsed),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut bad = Vec::new();
    for entry in verification_corpus().iter().filter(|e| e.graph.order() <= FOREST_MAX_ORDER) {
        checked += 1;
        let fl = laplacian_coefficients(&entry.graph).unwrap();
        if forest_sum_oracle(&entry.graph).unwrap() != fl {
            bad.push(entry.label.clone());
        }
    }
    let elapsed = start.elapsed();
    Outcome::new(
        bad.is_empty() && checked > 0 && elapsed < CORPUS_TIME_LIMIT,
        format!("{checked} graphs, failures {bad:?}, {elapsed:.2?}"),
    )
}

fn criterion_3() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 3..=200usize {
        let s = mean_variance(&closed_form_spectrum(&FamilySpec::new(Family::Star, n)).unwrap()).unwrap();
        let nf = n as f64;
        let mu = (nf * nf + nf + 2.0) / (2.0 * (nf + 1.0));
        let var = (nf - 1.0) * (nf * nf + nf + 2.0) / (4.0 * (nf + 1.0) * (nf + 1.0));
        worst = worst.max(((s.mu - mu) / mu).abs()).max(((s.sigma2 - var) / var).abs());
    }
    Outcome::new(worst <= STAR_REL_TOL, format!("worst relative error {worst:.3e}"))
}

/// Floating errors `(|μ/n − a|, |σ²/n − b|)` at size `n`.
fn float_errors(family: Family, n: usize, a: f64, b: f64) -> (f64, f64) {
    let s = mean_variance(&closed_form_spectrum(&FamilySpec::new(family, n)).unwrap()).unwrap();
    let nf = n as f64;
    ((s.mu / nf - a).abs(), (s.sigma2 / nf - b).abs())
}

fn criterion_4() -> Outcome {
    let sqrt5 = 5f64.sqrt();
    let published = [
        (Family::Path, 1.0 / (2.0 * sqrt5), 1.0 / (5.0 * sqrt5)),
        (Family::Cycle, 1.0 / sqrt5, 2.0 / (5.0 * sqrt5)),
    ];
    let mut pass = true;
    let mut detail = Vec::new();
    for (family, a, b) in published {
        let (e_mu, e_var) = float_errors(family, LIMIT_N, a, b);
        let (b_mu, b_var) = float_errors(family, LIMIT_BASELINE_N, a, b);
        let within = e_mu <= LIMIT_TOL && e_var <= LIMIT_TOL;
        // decrease is measured on exact rationals where the constants are
        // exactly representable; floating errors for cycles sit at roundoff
        let decreasing = match family_limit_constants(family) {
            Ok(c) if (c.mu_per_vertex - a).abs() < 1e-15 && (c.sigma2_per_vertex - b).abs() < 1e-15 => {
                let at = |n| exact_limit_errors(&coeffs(&FamilySpec::new(family, n)), &c);
                let (hi, lo) = (at(LIMIT_N), at(LIMIT_BASELINE_N));
                hi.mu_error_log10 < lo.mu_error_log10 && hi.sigma2_error_log10 < lo.sigma2_error_log10
            }
            _ => e_mu < b_mu && e_var < b_var,
        };
        pass &= within && decreasing;
        detail.push(format!(
            "{family} published constants: errors at {LIMIT_N} ({e_mu:.3e}, {e_var:.3e}), within {within}, decreasing {decreasing}"
        ));
    }
    Outcome::new(pass, detail.join("; "))
}

/// Criterion 4 with the corrected path constants; must pass.
fn criterion_4_corrected() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for family in [Family::Path, Family::Cycle] {
        let c = family_limit_constants(family).unwrap();
        let (e_mu, e_var) = float_errors(family, LIMIT_N, c.mu_per_vertex, c.sigma2_per_vertex);
        let at = |n| exact_limit_errors(&coeffs(&FamilySpec::new(family, n)), &c);
        let (hi, lo) = (at(LIMIT_N), at(LIMIT_BASELINE_N));
        let decreasing = hi.mu_error_log10 < lo.mu_error_log10 && hi.sigma2_error_log10 < lo.sigma2_error_log10;
        pass &= e_mu <= LIMIT_TOL && e_var <= LIMIT_TOL && decreasing;
        detail.push(format!(
            "{family}: ({e_mu:.3e}, {e_var:.3e}), log10 errors {:.1}/{:.1} at {LIMIT_BASELINE_N}, {:.1}/{:.1} at {LIMIT_N}",
            lo.mu_error_log10, lo.sigma2_error_log10, hi.mu_error_log10, hi.sigma2_error_log10
        ));
    }
    Outcome::new(pass, detail.join("; "))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for family in [Family::Path, Family::Cycle] {
        let mut clt = Vec::new();
        let mut llt = Vec::new();
        for n in TREND_LADDER {
            let spec = FamilySpec::new(family, n);
            let p = normalized_probabilities(&coeffs(&spec)).unwrap();
            let s = mean_variance(&closed_form_spectrum(&spec).unwrap()).unwrap();
            clt.push(clt_distance(&p, &s).unwrap());
            llt.push(llt_distance(&p, &s).unwrap());
        }
        let dec = |v: &[f64]| v.windows(2).all(|w| w[1] < w[0]);
        pass &= dec(&clt) && dec(&llt);
        detail.push(format!("{family} clt {clt:.4?} llt {llt:.4?}"));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < TREND_TIME_LIMIT;
    Outcome::new(pass, format!("{}; {elapsed:.2?}", detail.join("; ")))
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

fn criterion_6() -> Outcome {
    let p = normalized_probabilities(&coeffs(&FamilySpec::new(Family::Complete, 50))).unwrap();
    let k50 = (1..=K50_MAX_K)
        .map(|k| (p.as_slice()[k] - (-1f64).exp() / factorial(k - 1)).abs())
        .fold(0.0, f64::max);

    let knn = FamilySpec::new(Family::CompleteBipartite, 25).with_m(25);
    let q = normalized_probabilities(&coeffs(&knn)).unwrap();
    let knn_dist = q
        .as_slice()
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let r = if k == 0 { 0.0 } else { (-2f64).exp() * 2f64.powi(k as i32 - 1) / factorial(k - 1) };
            (x - r).abs()
        })
        .fold(0.0, f64::max);

    let verdict = |spec: &FamilySpec| diagnose_family(spec).unwrap().verdict;
    let verdicts_ok = verdict(&FamilySpec::new(Family::Complete, 50)) == VERDICT_POISSON
        && verdict(&knn) == VERDICT_POISSON
        && verdict(&FamilySpec::new(Family::Path, 100)) == VERDICT_NORMAL
        && verdict(&FamilySpec::new(Family::Cycle, 100)) == VERDICT_NORMAL
        && verdict(&FamilySpec::new(Family::Hypercube, 6)) == VERDICT_NORMAL;

    let trend = |f: Family, ladder: &[usize]| {
        let rows = report::sweep(&FamilySpec::new(f, ladder[0]), ladder, Execution::Serial).unwrap();
        rows[0].sigma2_trend.clone().unwrap()
    };
    let trends = [
        trend(Family::Complete, &[10, 20, 40, 80]),
        trend(Family::Path, &[25, 100, 400]),
        trend(Family::Cycle, &[25, 100, 400]),
        trend(Family::Hypercube, &[3, 5, 7]),
    ];
    let trends_ok = trends[0] == TREND_BOUNDED && trends[1..].iter().all(|t| t == TREND_GROWING);

    Outcome::new(
        k50 <= K50_POISSON_TOL && knn_dist <= KNN_POISSON_TOL && verdicts_ok && trends_ok,
        format!("K_50 {k50:.5}, K_25,25 {knn_dist:.5}, verdicts {verdicts_ok}, trends {trends:?}"),
    )
}

fn criterion_7() -> Outcome {
    let (mut zg, mut sandwich, mut wiener) = (0, 0, 0);
    let mut bad = Vec::new();
    for n in SANDWICH_SIZES {
        let star = coeffs(&FamilySpec::new(Family::Star, n));
        let path = coeffs(&FamilySpec::new(Family::Path, n));
        for i in 0..TREES_PER_SIZE {
            let spec = tree_spec(n, i);
            let t = spec.build().unwrap();
            let c = laplacian_coefficients(&t).unwrap();
            let c = c.as_slice();
            if ZHOU_GUTMAN_SIZES.contains(&n) {
                zg += 1;
                let m = matching_counts(&subdivision(&t)).unwrap();
                if !(0..=n).all(|k| c[k] == m.get(n - k).cloned().unwrap_or_default()) {
                    bad.push(format!("zhou-gutman {spec}"));
                }
            }
            sandwich += 1;
            if !(0..=n).all(|k| star.as_slice()[k] <= c[k] && c[k] <= path.as_slice()[k]) {
                bad.push(format!("sandwich {spec}"));
            }
            wiener += 1;
            if c[2] != BigUint::from(wiener_index(&t).unwrap()) {
                bad.push(format!("wiener {spec}"));
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("{zg} Zhou–Gutman, {sandwich} sandwich, {wiener} Wiener trees; failures {bad:?}"),
    )
}

fn criterion_8() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in CONE_SIZES {
        let via = cone_spectrum(&closed_form_spectrum(&FamilySpec::new(Family::Cycle, n)).unwrap()).unwrap();
        let direct = laplacian_spectrum(&FamilySpec::new(Family::Wheel, n).build().unwrap()).unwrap();
        worst = worst.max(via.max_abs_diff(&direct));
    }
    let mut cube_ok = true;
    for d in [3usize, 4] {
        let binom: Vec<usize> = (0..=d).map(|k| (0..k).fold(1, |b, i| b * (d - i) / (i + 1))).collect();
        let roots = (0..=d).map(|k| (BigUint::from(2 * k), binom[k]));
        let expanded = Coefficients::new(poly::from_roots(roots));
        let spec = FamilySpec::new(Family::Hypercube, d);
        let fl = laplacian_coefficients(&spec.build().unwrap()).unwrap();
        let mult = Spectrum::from_multiplicities((0..=d).map(|k| (2.0 * k as f64, binom[k])));
        cube_ok &= expanded == fl && coeffs(&spec) == fl && mult == closed_form_spectrum(&spec).unwrap();
    }
    Outcome::new(
        worst <= CONE_TOL && cube_ok,
        format!("cone vs wheel max diff {worst:.3e}; Q_3, Q_4 exact {cube_ok}"),
    )
}

fn criterion_9() -> Outcome {
    let corpus = verification_corpus();
    let mut bad = Vec::new();
    let mut worst_trace: f64 = 0.0;
    for entry in &corpus {
        let g = &entry.graph;
        let s = laplacian_spectrum(g).unwrap();
        let residual = trace_check(&s, g);
        worst_trace = worst_trace.max(residual);
        let mut ok = residual <= TRACE_TOL;
        if let Ok(am) = anderson_morley_bound(g) {
            ok &= s.max() <= am + INEQUALITY_SLACK && am <= gershgorin_bound(g);
        }
        let sigma2 = mean_variance(&s).unwrap().sigma2;
        let delta = g.max_degree() as f64;
        ok &= sigma2 + INEQUALITY_SLACK >= 2.0 * g.edge_count() as f64 / (1.0 + 2.0 * delta).powi(2);
        if let Some(spec) = entry.family.filter(|f| f.family == Family::Wheel) {
            let (big_n, d) = (spec.n as f64, 2.0);
            ok &= sigma2 + INEQUALITY_SLACK >= (big_n - 1.0) * (1.0 + 2.0 * d) / (2.0 + 2.0 * d).powi(2);
        }
        if !ok {
            bad.push(entry.label.clone());
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("{} graphs, worst trace residual {worst_trace:.2e}, failures {bad:?}", corpus.len()),
    )
}

fn criterion_10() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for entry in verification_corpus().iter().filter(|e| e.graph.is_bipartite()) {
        checked += 1;
        if signless_coefficients(&entry.graph).unwrap() != laplacian_coefficients(&entry.graph).unwrap() {
            bad.push(entry.label.clone());
        }
    }
    Outcome::new(bad.is_empty(), format!("{checked} bipartite graphs, failures {bad:?}"))
}

fn criterion_11() -> Outcome {
    let corpus = verification_corpus();
    let mut worst: f64 = 0.0;
    for entry in &corpus {
        let p = normalized_probabilities(&laplacian_coefficients(&entry.graph).unwrap()).unwrap();
        let s = mean_variance(&laplacian_spectrum(&entry.graph).unwrap()).unwrap();
        worst = worst.max((p.mean() - s.mu).abs()).max((p.variance() - s.sigma2).abs());
    }
    Outcome::new(worst <= MOMENT_TOL, format!("{} graphs, worst deviation {worst:.2e}", corpus.len()))
}

fn criterion_12() -> Outcome {
    let verify = |exec| {
        let r = run_verification(exec).unwrap();
        (r.to_text(), r.to_json())
    };
    let serial = verify(Execution::Serial);
    let verify_ok = serial == verify(Execution::Parallel) && serial == verify(Execution::Serial);

    let mut sweep_ok = true;
    for (family, ladder) in [
        (Family::Path, vec![25, 100, 400]),
        (Family::Complete, vec![10, 20, 40]),
        (Family::RandomRegular, vec![20, 40, 80]),
    ] {
        let mut spec = FamilySpec::new(family, ladder[0]);
        if family.is_random() {
            spec = spec.with_seed(11);
        }
        let run = |exec| {
            let rows = report::sweep(&spec, &ladder, exec).unwrap();
            (report::reports_to_csv(&rows), report::reports_to_json(&rows))
        };
        let first = run(Execution::Serial);
        sweep_ok &= first == run(Execution::Parallel) && first == run(Execution::Serial);
    }
    Outcome::new(verify_ok && sweep_ok, format!("verify identical {verify_ok}, sweep identical {sweep_ok}"))
}

fn main() {
    let criteria: [(usize, fn() -> Outcome); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let mut unexpected = Vec::new();
    for (id, run) in criteria {
        let outcome = run();
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {id}: {status} ({})", outcome.detail);
        if outcome.pass == UNATTAINABLE.contains(&id) {
            unexpected.push(id);
        }
        if id == 4 {
            let fixed = criterion_4_corrected();
            let status = if fixed.pass { "PASS" } else { "FAIL" };
            println!("criterion 4, corrected path constants 1/√5 and 2/(5√5): {status} ({})", fixed.detail);
            if !fixed.pass {
                unexpected.push(id);
            }
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria as expected (unattainable as stated: {UNATTAINABLE:?})");
    } else {
        println!("acceptance: unexpected results for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
