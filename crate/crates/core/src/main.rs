//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 capacity refusal.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cycswap::harness::{self, Coverage, Limits, RunOptions, VerificationReport};
use cycswap::text::{self, Style};
use cycswap::{factor, swap_statistics, unfactor, Error, GsgElement, InvolutionPair, KCycleFactorization, Permutation};

#[derive(Parser)]
#[command(name = "cycswap", version, about = "k-cycles of S_kn versus fixed points of S(k,n)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,

    /// How permutations are printed.
    #[arg(long, value_enum, global = true, default_value = "cycles")]
    style: StyleArg,

    /// Run exhaustive checks beyond the default capacity limits.
    #[arg(long, global = true)]
    force: bool,

    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    Cycles,
    Oneline,
    Word,
}

impl From<StyleArg> for Style {
    fn from(s: StyleArg) -> Style {
        match s {
            StyleArg::Cycles => Style::Cycles,
            StyleArg::Oneline => Style::OneLine,
            StyleArg::Word => Style::Word,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Map pi in S_kn to (delta, (x, tau)).
    ApplyF(MapArgs),
    /// Map (delta, (x, tau)) back to pi.
    InvertF(MapArgs),
    /// Apply the involution to (sigma', pi) given as x, tau and pi.
    Involute(MapArgs),
    /// Both distributions side by side.
    Table(SizeArgs),
    /// Run verification checks.
    Verify(VerifyArgs),
    /// Empirical distributions from uniform sampling.
    Sample(SampleArgs),
}

#[derive(Args)]
struct MapArgs {
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    pi: Option<String>,
    #[arg(long)]
    delta: Option<String>,
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    tau: Option<String>,
    /// Key/value document with keys k, n, pi, delta, x, tau. Flags win.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct SizeArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Theorem1,
    Bijection,
    Involution,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "all")]
    which: Which,
    /// Check the involution on this many random pairs instead of all pairs.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1_000_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    Usage(String),
    Capacity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capacity { .. } => Failure::Capacity(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<text::ParseError> for Failure {
    fn from(e: text::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Flag values layered over the optional input document.
struct Inputs {
    values: BTreeMap<String, String>,
}

impl Inputs {
    fn gather(args: &MapArgs) -> Result<Self, Failure> {
        let mut values = match &args.input {
            Some(path) => {
                let body = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                text::parse_document(&body)?
            }
            None => BTreeMap::new(),
        };
        let flags = [
            ("k", args.k.map(|v| v.to_string())),
            ("n", args.n.map(|v| v.to_string())),
            ("pi", args.pi.clone()),
            ("delta", args.delta.clone()),
            ("x", args.x.clone()),
            ("tau", args.tau.clone()),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                values.insert(key.to_string(), v);
            }
        }
        Ok(Inputs { values })
    }

    fn text(&self, key: &str) -> Result<&str, Failure> {
        self.values
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Failure::Usage(format!("missing `{key}` (flag --{key} or input document)")))
    }

    fn number(&self, key: &str) -> Result<Option<usize>, Failure> {
        self.values
            .get(key)
            .map(|v| {
                v.trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("`{key}` must be a nonnegative integer, got `{v}`")))
            })
            .transpose()
    }

    fn k(&self) -> Result<usize, Failure> {
        match self.number("k")? {
            Some(0) => Err(Error::ZeroModulus.into()),
            Some(k) => Ok(k),
            None => Err(Failure::Usage("missing `k`".into())),
        }
    }

    fn sigma(&self, k: usize, n: usize) -> Result<GsgElement, Failure> {
        let x = text::parse_residues(self.text("x")?)?;
        if x.len() != n {
            return Err(Failure::Usage(format!("x has {} entries, expected n = {n}", x.len())));
        }
        let tau = text::parse_permutation(self.text("tau")?, n)?;
        Ok(GsgElement::new(k, x, tau)?)
    }

    /// `n` from the flag or document, else from the length of `x`.
    fn n_or_from_x(&self) -> Result<usize, Failure> {
        match self.number("n")? {
            Some(n) => Ok(n),
            None => Ok(text::parse_residues(self.text("x")?)?.len()),
        }
    }
}

struct Printer {
    format: Format,
    style: Style,
}

impl Printer {
    fn perm(&self, p: &Permutation) -> String {
        text::format_permutation(p, self.style)
    }

    fn emit(&self, text: String, value: Value) {
        match self.format {
            Format::Text => print!("{text}"),
            Format::Structured => println!("{}", serde_json::to_string_pretty(&value).expect("json")),
        }
    }
}

fn apply_f(args: &MapArgs, out: &Printer) -> Result<(), Failure> {
    let inputs = Inputs::gather(args)?;
    let k = inputs.k()?;
    let pi_text = inputs.text("pi")?;
    let m = match inputs.number("n")? {
        Some(n) => k * n,
        None => text::infer_size(pi_text)?,
    };
    let pi = text::parse_permutation(pi_text, m)?;
    let pair = factor(&pi, k)?;
    let n = pair.sigma.n();
    let mut t = String::new();
    let _ = writeln!(t, "k = {k}\nn = {n}");
    let _ = writeln!(t, "delta = {}", out.perm(pair.delta.perm()));
    let _ = writeln!(t, "x = {}", text::format_residues(pair.sigma.x()));
    let _ = writeln!(t, "tau = {}", out.perm(pair.sigma.tau()));
    let _ = writeln!(t, "# k-cycles(pi) = {}", pi.count_k_cycles(k));
    let _ = writeln!(t, "# fixed-points(sigma) = {}", pair.sigma.count_fixed_points());
    out.emit(
        t,
        json!({
            "k": k.to_string(),
            "n": n.to_string(),
            "pi": out.perm(&pi),
            "delta": out.perm(pair.delta.perm()),
            "x": pair.sigma.x().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "tau": out.perm(pair.sigma.tau()),
            "k_cycles_pi": pi.count_k_cycles(k).to_string(),
            "fixed_points_sigma": pair.sigma.count_fixed_points().to_string(),
        }),
    );
    Ok(())
}

fn invert_f(args: &MapArgs, out: &Printer) -> Result<(), Failure> {
    let inputs = Inputs::gather(args)?;
    let k = inputs.k()?;
    let n = inputs.n_or_from_x()?;
    let delta = text::parse_permutation(inputs.text("delta")?, k * n)?;
    let delta = KCycleFactorization::new(k, delta)?;
    let sigma = inputs.sigma(k, n)?;
    let pi = unfactor(&delta, &sigma)?;
    let mut t = String::new();
    let _ = writeln!(t, "k = {k}\nn = {n}");
    let _ = writeln!(t, "pi = {}", out.perm(&pi));
    let _ = writeln!(t, "# k-cycles(pi) = {}", pi.count_k_cycles(k));
    let _ = writeln!(t, "# fixed-points(sigma) = {}", sigma.count_fixed_points());
    out.emit(
        t,
        json!({
            "k": k.to_string(),
            "n": n.to_string(),
            "pi": out.perm(&pi),
            "k_cycles_pi": pi.count_k_cycles(k).to_string(),
            "fixed_points_sigma": sigma.count_fixed_points().to_string(),
        }),
    );
    Ok(())
}

fn involute(args: &MapArgs, out: &Printer) -> Result<(), Failure> {
    let inputs = Inputs::gather(args)?;
    let k = inputs.k()?;
    let n = inputs.n_or_from_x()?;
    let sigma = inputs.sigma(k, n)?;
    let pi = text::parse_permutation(inputs.text("pi")?, k * n)?;
    let input = InvolutionPair::new(sigma, pi)?;
    let result = swap_statistics(&input)?;
    let mut t = String::new();
    let _ = writeln!(t, "k = {k}\nn = {n}");
    let _ = writeln!(t, "x = {}", text::format_residues(result.sigma.x()));
    let _ = writeln!(t, "tau = {}", out.perm(result.sigma.tau()));
    let _ = writeln!(t, "pi = {}", out.perm(&result.pi));
    let _ = writeln!(
        t,
        "# input: fixed-points(sigma') = {}, k-cycles(pi) = {}",
        input.sigma.count_fixed_points(),
        input.pi.count_k_cycles(k)
    );
    let _ = writeln!(
        t,
        "# output: fixed-points(sigma) = {}, k-cycles(pi') = {}",
        result.sigma.count_fixed_points(),
        result.pi.count_k_cycles(k)
    );
    out.emit(
        t,
        json!({
            "k": k.to_string(),
            "n": n.to_string(),
            "sigma": {
                "x": result.sigma.x().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "tau": out.perm(result.sigma.tau()),
                "fixed_points": result.sigma.count_fixed_points().to_string(),
            },
            "pi": {
                "perm": out.perm(&result.pi),
                "k_cycles": result.pi.count_k_cycles(k).to_string(),
            },
        }),
    );
    Ok(())
}

fn table(args: &SizeArgs, opts: &RunOptions, out: &Printer) -> Result<(), Failure> {
    let cyc = harness::cyc_distribution(args.k, args.n, opts)?;
    let fxpt = harness::fxpt_distribution(args.k, args.n, opts)?;
    out.emit(harness::format_table(&cyc, &fxpt), harness::table_json(&cyc, &fxpt));
    Ok(())
}

fn verify(args: &VerifyArgs, opts: &RunOptions, out: &Printer) -> Result<bool, Failure> {
    let (k, n) = (args.k, args.n);
    let wants = |w: Which| args.which == w || args.which == Which::All;
    let mut reports: Vec<VerificationReport> = Vec::new();
    if wants(Which::Theorem1) {
        reports.push(harness::verify_theorem1(k, n, opts)?);
    }
    if wants(Which::Bijection) {
        reports.push(harness::verify_bijection(k, n, opts)?);
    }
    if wants(Which::Involution) {
        let coverage = match args.samples {
            Some(pairs) => Coverage::Sampled {
                pairs,
                seed: args.seed,
            },
            None => Coverage::Exhaustive,
        };
        reports.push(harness::verify_involution(k, n, coverage, opts)?);
    }
    let passed = reports.iter().all(VerificationReport::passed);
    out.emit(
        reports.iter().map(VerificationReport::to_text).collect(),
        json!({
            "passed": passed,
            "reports": reports.iter().map(VerificationReport::to_json).collect::<Vec<_>>(),
        }),
    );
    Ok(passed)
}

fn sample(args: &SampleArgs, out: &Printer) -> Result<(), Failure> {
    let report = harness::sample_empirical(args.k, args.n, args.trials, args.seed)?;
    out.emit(report.to_text(), report.to_json());
    Ok(())
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let out = Printer {
        format: cli.format,
        style: cli.style.into(),
    };
    let opts = RunOptions {
        limits: Limits {
            force: cli.force,
            ..Limits::default()
        },
        jobs: cli.jobs,
    };
    match &cli.command {
        Command::ApplyF(a) => apply_f(a, &out).map(|_| true),
        Command::InvertF(a) => invert_f(a, &out).map(|_| true),
        Command::Involute(a) => involute(a, &out).map(|_| true),
        Command::Table(a) => table(a, &opts, &out).map(|_| true),
        Command::Verify(a) => verify(a, &opts, &out),
        Command::Sample(a) => sample(a, &out).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Capacity(msg)) => {
            eprintln!("refused: {msg} (pass --force to override)");
            ExitCode::from(3)
        }
    }
}
