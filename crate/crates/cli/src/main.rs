//! `lapcoef`: exact Laplacian coefficients, spectra and limit diagnostics.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lapcoef::charpoly::{closed_form_coefficients, laplacian_coefficients, signless_coefficients};
use lapcoef::graph::parse_edge_list;
use lapcoef::report::{self, Execution};
use lapcoef::spectra::{self, anderson_morley_bound, gershgorin_bound};
use lapcoef::stats::{mean_variance, variance_lower_bound};
use lapcoef::{Error, Family, FamilySpec, Graph};
use serde::Serialize;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(name = "lapcoef", version, about = "Laplacian coefficients of graphs and their limit laws")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact coefficients c(G, k), k = 0..n
    Coeffs(CommonArgs),
    /// Laplacian spectrum, descending
    Spectrum(CommonArgs),
    /// Mean, variance and eigenvalue bounds
    Stats(CommonArgs),
    /// CLT/LLT/Poisson diagnostics for one graph
    Diagnose(CommonArgs),
    /// Diagnostics along a ladder of family sizes
    Sweep(CommonArgs),
    /// Run the invariant corpus; exit 1 if any invariant fails
    Verify(CommonArgs),
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Named family (path, cycle, star, complete, complete_bipartite,
    /// hypercube, matching_union, wheel, complete_binary_tree,
    /// random_regular, random_tree)
    #[arg(long, conflicts_with = "edge_list")]
    family: Option<String>,
    /// Primary family size
    #[arg(long)]
    n: Option<usize>,
    /// Second size: other part of complete_bipartite, degree of random_regular
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated sizes for `sweep`
    #[arg(long, value_delimiter = ',')]
    ladder: Vec<usize>,
    /// Edge-list file (`n m` header, then `u v` lines)
    #[arg(long)]
    edge_list: Option<PathBuf>,
    /// Seed for random families
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write output here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Use the signless Laplacian D + A
    #[arg(long)]
    signless: bool,
    /// Use family closed forms instead of matrix computations
    #[arg(long)]
    closed_form: bool,
    /// Run sweep/verify work items sequentially
    #[arg(long)]
    serial: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Failures mapped to exit codes.
enum Failure {
    Usage(String),
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<u8, Failure>;

enum Input {
    Family(FamilySpec),
    Graph(String, Graph),
}

impl CommonArgs {
    fn format(&self) -> Format {
        self.format.unwrap_or(Format::Csv)
    }

    fn execution(&self) -> Execution {
        if self.serial {
            Execution::Serial
        } else {
            Execution::Parallel
        }
    }

    /// Family spec without a size check; `n` falls back to `default_n`.
    fn family_spec(&self, default_n: Option<usize>) -> Result<Option<FamilySpec>, Failure> {
        let Some(name) = &self.family else {
            return Ok(None);
        };
        let family: Family = name.parse()?;
        let n = self
            .n
            .or(default_n)
            .ok_or_else(|| Failure::Usage("--family needs --n".into()))?;
        let mut spec = FamilySpec::new(family, n);
        if let Some(m) = self.m {
            spec = spec.with_m(m);
        }
        if let Some(seed) = self.seed {
            spec = spec.with_seed(seed);
        }
        Ok(Some(spec))
    }

    fn input(&self) -> Result<Input, Failure> {
        if let Some(spec) = self.family_spec(None)? {
            spec.validate()?;
            return Ok(Input::Family(spec));
        }
        let Some(path) = &self.edge_list else {
            return Err(Failure::Usage("give either --family or --edge-list".into()));
        };
        let text = fs::read_to_string(path)?;
        let label = path
            .file_stem()
            .map_or_else(|| "graph".to_string(), |s| s.to_string_lossy().into_owned());
        Ok(Input::Graph(label, parse_edge_list(&text)?))
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => fs::write(path, text)?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

impl Input {
    fn graph(&self) -> Result<Graph, Error> {
        match self {
            Input::Family(spec) => spec.build(),
            Input::Graph(_, g) => Ok(g.clone()),
        }
    }
}

fn cmd_coeffs(args: &CommonArgs) -> CmdResult {
    let input = args.input()?;
    let coeffs = match (&input, args.closed_form, args.signless) {
        (_, true, true) => {
            return Err(Failure::Usage("--closed-form and --signless are exclusive".into()))
        }
        (Input::Family(spec), true, false) => closed_form_coefficients(spec)?,
        (Input::Graph(..), true, false) => {
            return Err(Failure::Usage("--closed-form needs --family".into()))
        }
        (_, false, true) => signless_coefficients(&input.graph()?)?,
        (_, false, false) => laplacian_coefficients(&input.graph()?)?,
    };
    let text = match args.format() {
        Format::Json => coeffs.to_json() + "\n",
        Format::Csv => coeffs.to_csv(),
    };
    args.emit(&text)?;
    Ok(0)
}

fn spectrum_for(args: &CommonArgs, input: &Input) -> Result<spectra::Spectrum, Failure> {
    if args.signless {
        return Err(Failure::Usage("spectra are Laplacian only".into()));
    }
    Ok(match (input, args.closed_form) {
        (Input::Family(spec), true) => spectra::closed_form_spectrum(spec)?,
        (Input::Graph(..), true) => return Err(Failure::Usage("--closed-form needs --family".into())),
        (_, false) => spectra::laplacian_spectrum(&input.graph()?)?,
    })
}

fn cmd_spectrum(args: &CommonArgs) -> CmdResult {
    let input = args.input()?;
    let s = spectrum_for(args, &input)?;
    let text = match args.format() {
        Format::Json => s.to_json(&input.graph()?) + "\n",
        Format::Csv => s.to_csv(),
    };
    args.emit(&text)?;
    Ok(0)
}

#[derive(Serialize)]
struct StatsRow {
    n: usize,
    edges: usize,
    mu: f64,
    sigma2: f64,
    sigma2_lower_bound: f64,
    lambda_max: f64,
    anderson_morley_bound: Option<f64>,
    gershgorin_bound: f64,
    trace_residual: f64,
}

fn cmd_stats(args: &CommonArgs) -> CmdResult {
    let input = args.input()?;
    let g = input.graph()?;
    let s = spectrum_for(args, &input)?;
    let st = mean_variance(&s)?;
    let row = StatsRow {
        n: st.n,
        edges: g.edge_count(),
        mu: st.mu,
        sigma2: st.sigma2,
        sigma2_lower_bound: variance_lower_bound(&g),
        lambda_max: s.max(),
        anderson_morley_bound: anderson_morley_bound(&g).ok(),
        gershgorin_bound: gershgorin_bound(&g),
        trace_residual: spectra::trace_check(&s, &g),
    };
    let text = match args.format() {
        Format::Json => serde_json::to_string_pretty(&row).expect("finite floats") + "\n",
        Format::Csv => format!(
            "n,edges,mu,sigma2,sigma2_lower_bound,lambda_max,anderson_morley_bound,gershgorin_bound,trace_residual\n{},{},{},{},{},{},{},{},{}\n",
            row.n,
            row.edges,
            row.mu,
            row.sigma2,
            row.sigma2_lower_bound,
            row.lambda_max,
            row.anderson_morley_bound.map(|b| b.to_string()).unwrap_or_default(),
            row.gershgorin_bound,
            row.trace_residual
        ),
    };
    args.emit(&text)?;
    Ok(0)
}

fn emit_reports(args: &CommonArgs, rows: &[report::DiagnosticsReport]) -> Result<(), Failure> {
    let text = match args.format() {
        Format::Json => report::reports_to_json(rows),
        Format::Csv => report::reports_to_csv(rows),
    };
    args.emit(&text)
}

fn cmd_diagnose(args: &CommonArgs) -> CmdResult {
    let row = match args.input()? {
        Input::Family(spec) => report::diagnose_family(&spec)?,
        Input::Graph(label, g) => report::diagnose_graph(&label, &g)?,
    };
    emit_reports(args, &[row])?;
    Ok(0)
}

fn cmd_sweep(args: &CommonArgs) -> CmdResult {
    if args.ladder.is_empty() {
        return Err(Failure::Usage("sweep needs --ladder".into()));
    }
    let spec = args
        .family_spec(Some(args.ladder[0]))?
        .ok_or_else(|| Failure::Usage("sweep needs --family".into()))?;
    for &n in &args.ladder {
        spec.at_size(n).validate()?;
    }
    let rows = report::sweep(&spec, &args.ladder, args.execution())?;
    emit_reports(args, &rows)?;
    Ok(0)
}

fn cmd_verify(args: &CommonArgs) -> CmdResult {
    let result = report::run_verification(args.execution())?;
    let text = match args.format {
        Some(Format::Json) => result.to_json(),
        _ => result.to_text(),
    };
    args.emit(&text)?;
    Ok(if result.all_passed() { 0 } else { EXIT_VERIFY_FAILED })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Coeffs(a) => cmd_coeffs(a),
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Stats(a) => cmd_stats(a),
        Command::Diagnose(a) => cmd_diagnose(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource_guard() { EXIT_GUARD } else { EXIT_USAGE })
        }
    }
}
