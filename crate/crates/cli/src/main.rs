use clap::{Args, Parser, Subcommand};
use jordan_double::algebra::hopf::hopf_axiom_suite;
use jordan_double::algebra::verify_presentation;
use jordan_double::expr;
use jordan_double::homcalc::{
    composition_factors, ext1, hom_space, is_indecomposable, socle, socle_layers, HomcalcError,
};
use jordan_double::linalg::rational;
use jordan_double::quiver::{gabriel_quiver, representation_type_report};
use jordan_double::repcat::{
    build_s, build_simple, build_t, build_verma2_trunc, build_verma_trunc, dual, hw_data,
    hw_series, tensor, verify_module, weight_decomposition, FdModule, ModuleError,
};
use serde_json::json;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const AFTER_HELP: &str = "\
Generator names: x, y, g, gi (= g^-1), xi (= ξ), u, v.
Module arguments are JSON files or shorthands: L<n>, T<n>,<m>, S<n>,<gamma>.
Exit codes: 0 success, 1 check failed, 2 usage or parse error, 3 I/O or schema error.
JDOUBLE_WORKERS caps the number of worker threads.";

#[derive(Parser)]
#[command(name = "jdouble", version, about = "Exact computations in the double of the Jordan plane", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// PBW normal form of an expression such as "v*x" or "1/2*x^2 + gi*y"
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check the defining relations and the Hopf axioms on random monomials
    HopfCheck {
        /// Maximal word length of the sampled monomials
        #[arg(long, default_value_t = 5)]
        degree: u32,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Build or verify module JSON files
    #[command(subcommand)]
    Module(ModuleCommand),
    /// Generalized ξ-eigenspace dimensions
    Weights { module: String },
    /// Highest weight and its multiplicity
    Hw { module: String },
    /// Subquotients of the highest-weight series
    HwSeries { module: String },
    /// dim Hom(M, N)
    Hom { source: String, target: String },
    /// dim Ext¹(QUOT, SUB), extensions with SUB as submodule
    Ext { quot: String, sub: String },
    /// Socle and socle filtration
    Socle { module: String },
    /// Composition factors n of L(n)
    Factors { module: String },
    /// Indecomposability: true, false or undetermined
    Indec { module: String },
    /// Ext quiver on L(0)..L(max)
    Quiver {
        #[arg(long)]
        max: usize,
        /// Write the quiver in DOT format
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Use the printed quiver, which has a loop at vertex 0
        #[arg(long)]
        paper_variant: bool,
    },
    /// Representation-type report from the separated quiver
    Wildness {
        #[arg(long)]
        max: usize,
        #[arg(long)]
        paper_variant: bool,
        /// Comma-separated vertex subset, e.g. 2,4,6
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
    },
}

#[derive(Subcommand)]
enum ModuleCommand {
    /// Build a module and print (or write) its JSON
    Build(BuildArgs),
    /// Check relations, invertibility and nilpotency
    Verify { file: String },
}

#[derive(Args)]
struct BuildArgs {
    /// Output file (written atomically); stdout if omitted
    #[arg(short, long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    kind: BuildKind,
}

#[derive(Subcommand)]
enum BuildKind {
    /// Simple module L(n)
    #[command(name = "L", alias = "l")]
    L { n: usize },
    /// Indecomposable T(n, m)
    #[command(name = "T", alias = "t")]
    T { n: usize, m: usize },
    /// S_γ(n)
    #[command(name = "S", alias = "s")]
    S { n: usize, gamma: String },
    /// Rank-one Verma module M(n) truncated at level DEPTH
    #[command(allow_negative_numbers = true)]
    Verma { n: i64, depth: usize },
    /// Rank-two Verma module truncated at level DEPTH
    #[command(allow_negative_numbers = true)]
    Verma2 { n: i64, lambda: String, mu: String, depth: usize },
    /// Dual module
    Dual { file: String },
    /// Tensor product
    Tensor { left: String, right: String },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
    Schema(String),
    /// Reported, with exit code 1.
    Check,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Check => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) | CliError::Schema(_) => 3,
        }
    }
}

impl From<ModuleError> for CliError {
    fn from(e: ModuleError) -> Self {
        match e {
            ModuleError::Schema { .. } | ModuleError::Json(_) => CliError::Schema(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<HomcalcError> for CliError {
    fn from(e: HomcalcError) -> Self {
        match e {
            HomcalcError::Module(m) => m.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn parse_rational(s: &str) -> Result<jordan_double::linalg::Rational, CliError> {
    rational::parse(s).ok_or_else(|| CliError::Usage(format!("not a rational number: {s}")))
}

fn parse_usize(s: &str, what: &str) -> Result<usize, CliError> {
    s.trim().parse().map_err(|_| CliError::Usage(format!("bad {what} in module shorthand: {s}")))
}

/// `L2`, `T2,1`, `S3,1/2`, otherwise a path to a JSON file.
fn load_module(arg: &str) -> Result<FdModule, CliError> {
    let path = Path::new(arg);
    if !path.exists() {
        let (head, rest) = arg.split_at(arg.chars().next().map_or(0, char::len_utf8));
        let parts: Vec<&str> = rest.split(',').collect();
        match (head, parts.as_slice()) {
            ("L", [n]) => return Ok(build_simple(parse_usize(n, "n")?)),
            ("T", [n, m]) => return Ok(build_t(parse_usize(n, "n")?, parse_usize(m, "m")?)),
            ("S", [n, g]) => return Ok(build_s(parse_usize(n, "n")?, &parse_rational(g)?)),
            _ => {}
        }
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{arg}: {e}")))?;
    FdModule::from_json_str(&text).map_err(|e| CliError::Schema(format!("{arg}: {e}")))
}

/// Writes through a temporary file in the target directory and renames it.
fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// Prints a line; a closed pipe (e.g. `| head`) ends the process quietly.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{text}").and_then(|_| out.flush()).is_err() {
        std::process::exit(0);
    }
}

fn print_json(v: &serde_json::Value) {
    emit(&serde_json::to_string_pretty(v).expect("serializable"));
}

fn module_summary(m: &FdModule) -> Result<serde_json::Value, CliError> {
    let wd = weight_decomposition(m)?;
    let (hw, rank) = hw_data(m)?;
    Ok(json!({ "dim": m.dim(), "hw": hw, "hw_rank": rank, "weights": wd.profile() }))
}

fn build(args: BuildArgs) -> Result<(), CliError> {
    let m = match args.kind {
        BuildKind::L { n } => build_simple(n),
        BuildKind::T { n, m } => build_t(n, m),
        BuildKind::S { n, gamma } => build_s(n, &parse_rational(&gamma)?),
        BuildKind::Verma { n, depth } => build_verma_trunc(n, depth).module,
        BuildKind::Verma2 { n, lambda, mu, depth } => {
            build_verma2_trunc(n, &parse_rational(&lambda)?, &parse_rational(&mu)?, depth).module
        }
        BuildKind::Dual { file } => dual(&load_module(&file)?)?,
        BuildKind::Tensor { left, right } => tensor(&load_module(&left)?, &load_module(&right)?)?,
    };
    let text = m.to_json_string();
    match args.out {
        Some(path) => write_atomic(&path, &text),
        None => {
            emit(&text.to_string());
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Nf { expr } => {
            let e = expr::evaluate(&expr).map_err(|e| CliError::Usage(e.to_string()))?;
            emit(&format!("{e}"));
        }
        Command::HopfCheck { degree, samples, seed } => {
            let pres = verify_presentation();
            let hopf = hopf_axiom_suite(samples, degree, seed);
            let failures: Vec<_> = hopf.failures().collect();
            print_json(&json!({
                "relations": pres.checks.len(),
                "relations_pass": pres.all_pass(),
                "axiom_checks": hopf.checks.len(),
                "axioms_pass": hopf.all_pass(),
                "failures": failures,
            }));
            if !(pres.all_pass() && hopf.all_pass()) {
                return Err(CliError::Check);
            }
        }
        Command::Module(ModuleCommand::Build(args)) => build(args)?,
        Command::Module(ModuleCommand::Verify { file }) => {
            let report = verify_module(&load_module(&file)?);
            print_json(&json!({ "pass": report.all_pass(), "dim": report.dim, "checks": report.checks }));
            if !report.all_pass() {
                return Err(CliError::Check);
            }
        }
        Command::Weights { module } => {
            let wd = weight_decomposition(&load_module(&module)?)?;
            print_json(&json!({ "weights": wd.profile(), "symmetric": wd.is_symmetric() }));
        }
        Command::Hw { module } => {
            let (hw, rank) = hw_data(&load_module(&module)?)?;
            print_json(&json!({ "hw": hw, "hw_rank": rank }));
        }
        Command::HwSeries { module } => {
            let series = hw_series(&load_module(&module)?)?;
            let parts = series.iter().map(module_summary).collect::<Result<Vec<_>, _>>()?;
            print_json(&serde_json::Value::Array(parts));
        }
        Command::Hom { source, target } => {
            emit(&format!("{}", hom_space(&load_module(&source)?, &load_module(&target)?)?.dim()));
        }
        Command::Ext { quot, sub } => {
            emit(&format!("{}", ext1(&load_module(&quot)?, &load_module(&sub)?)?.dimension));
        }
        Command::Socle { module } => {
            let m = load_module(&module)?;
            let soc = socle(&m)?;
            print_json(&json!({
                "dim": soc.module.dim(),
                "layers": socle_layers(&m)?,
            }));
        }
        Command::Factors { module } => {
            emit(&json!(composition_factors(&load_module(&module)?)?).to_string());
        }
        Command::Indec { module } => {
            emit(&format!("{}", is_indecomposable(&load_module(&module)?)?));
        }
        Command::Quiver { max, dot, paper_variant } => {
            let computed = gabriel_quiver(max)?;
            let q = if paper_variant { computed.paper_variant() } else { computed };
            if let Some(path) = dot {
                write_atomic(&path, &q.to_dot())?;
            }
            print_json(&json!({
                "max": max,
                "variant": if paper_variant { "paper" } else { "computed" },
                "ext": q.table_json(),
                "symmetric": q.is_symmetric(),
            }));
        }
        Command::Wildness { max, paper_variant, subset } => {
            let report = representation_type_report(max, paper_variant, subset.as_deref())?;
            print_json(&serde_json::to_value(&report).expect("serializable"));
        }
    }
    Ok(())
}

fn configure_workers() {
    if let Some(n) = std::env::var("JDOUBLE_WORKERS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            // only fails if a pool already exists, which cannot happen here
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_workers();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(m) | CliError::Io(m) | CliError::Schema(m) => eprintln!("error: {m}"),
                CliError::Check => eprintln!("check failed"),
            }
            ExitCode::from(e.code())
        }
    }
}
