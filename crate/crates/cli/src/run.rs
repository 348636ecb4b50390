//! Command-line surface: argument parsing, planning and execution.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use heiscat::bimodcat::{
    admissible, crossing_coefficient_check, example_decomposition, h10_projection_decomposition, run_suite,
    verify_linearity, BimodContext, BimodFaults, Relation,
};
use heiscat::fock_oracle::{verify_brackets, verify_engine_agreement, verify_low_levels, verify_presentation};
use heiscat::heisenberg::confluence_probe;
use heiscat::scalars::series_quotient_power;
use heiscat::wreath::{dimension, graded_dimension, verify_psi_suite, DualOrientation};
use heiscat::{Record, Report};

use crate::config::{ConfigFile, Format, Overrides, RunConfig};
use crate::error::CliError;
use crate::parse::{multiply, parse_element, ParseOptions};

#[derive(Debug, Parser)]
#[command(name = "heiscat", version, about = "Exact checks for twisted Heisenberg categorification")]
pub struct Cli {
    /// TOML file with gamma, nmax, seed, format, truncation, [cartan] and [caps].
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Omit elapsed times so that output is byte-deterministic.
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// Cartan type, e.g. A2.
    #[arg(long, global = true)]
    pub cartan: Option<String>,
    /// Order l of the cyclic group.
    #[arg(long, global = true)]
    pub gamma: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce a wreath expression or a Heisenberg word to normal form.
    NormalForm {
        expr: String,
        /// Rank of the wreath algebra; inferred when omitted.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Multiply two expressions of the same kind.
    Multiply {
        left: String,
        right: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run verification suites.
    Verify {
        /// all, relations, h1..h20, iso1..iso6, h10-split, example, crossing, psi, linearity, confluence, fock.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Inject a convention fault as a negative control.
        #[arg(long, value_enum)]
        fault: Option<Fault>,
    },
    /// Dimension and graded dimension of the wreath algebra.
    Dims {
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of ((1 - t)/(1 + t))^a up to t^order.
    Series {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long)]
        order: usize,
    },
    /// Compare the rewriting engine with the Fock-space representation.
    FockCheck {
        #[arg(long)]
        truncation: Option<u32>,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        max_level: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Left-normalized dual basis in the unit of P Q.
    Orientation,
    /// Unsigned dot x -> xb.
    Dot,
    /// Unsigned Clifford dot.
    Clifford,
    /// Unsigned whiskering.
    Whisker,
    /// Unsigned permutation action on tensors.
    Action,
    /// Unsigned slotwise tensor product.
    Tensor,
}

impl Fault {
    fn faults(self) -> BimodFaults {
        let mut f = BimodFaults::default();
        match self {
            Fault::Orientation => f.orientation = DualOrientation::Left,
            Fault::Dot => f.drop_dot_koszul = true,
            Fault::Clifford => f.drop_clifford_dot_sign = true,
            Fault::Whisker => f.drop_whisker_koszul = true,
            Fault::Action => f.algebra.drop_action_koszul = true,
            Fault::Tensor => f.algebra.drop_tensor_koszul = true,
        }
        f
    }
}

const CROSSING_BOUND: usize = 6;
const PSI_MAX: usize = 5;
const CONFLUENCE_TRIALS: usize = 200;
const CONFLUENCE_LEN: usize = 6;
const MAX_SERIES_ORDER: usize = 4096;
const FOCK_MAX_LEN: usize = 6;
const FOCK_MAX_LEVEL: u32 = 4;
const FOCK_KMAX: u32 = 4;
const FOCK_LEN: usize = 4;
const FOCK_LEVEL: u32 = 3;

/// One unit of verification work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Task {
    Relation(Relation, usize),
    H10Split(usize),
    Example(usize),
    Crossing,
    Psi(usize),
    Linearity(usize),
    Confluence,
    Fock,
}

impl Task {
    fn key(&self) -> (u8, u8, usize) {
        match *self {
            Task::Relation(Relation::H(k), n) => (0, k, n),
            Task::Relation(Relation::Isotopy(k), n) => (1, k, n),
            Task::H10Split(n) => (2, 0, n),
            Task::Example(n) => (3, 0, n),
            Task::Crossing => (4, 0, 0),
            Task::Psi(n) => (5, 0, n),
            Task::Linearity(n) => (6, 0, n),
            Task::Confluence => (7, 0, 0),
            Task::Fock => (8, 0, 0),
        }
    }
}

fn plan(names: &[String], cfg: &RunConfig, nmax: usize) -> Result<Vec<Task>, CliError> {
    let ell = cfg.gamma;
    let relation_tasks = |rel: Relation| -> Vec<Task> {
        (0..=nmax).filter(|&n| admissible(rel, n, ell)).map(|n| Task::Relation(rel, n)).collect()
    };
    let mut tasks = Vec::new();
    for name in names {
        let lower = name.trim().to_ascii_lowercase();
        let before = tasks.len();
        match lower.as_str() {
            "all" => {
                for rel in Relation::all() {
                    tasks.extend(relation_tasks(rel));
                }
                tasks.extend((1..=nmax).map(Task::H10Split));
            }
            "relations" => {
                for rel in Relation::all() {
                    tasks.extend(relation_tasks(rel));
                }
            }
            "h10-split" => tasks.extend((1..=nmax).map(Task::H10Split)),
            "example" => tasks.extend((1..=nmax.min(1)).map(Task::Example)),
            "crossing" => tasks.push(Task::Crossing),
            "psi" => tasks.extend((1..=PSI_MAX).map(Task::Psi)),
            "linearity" => tasks.extend((0..=nmax.min(1)).map(Task::Linearity)),
            "confluence" => tasks.push(Task::Confluence),
            "fock" => tasks.push(Task::Fock),
            other => {
                let rel: Relation = other.parse().map_err(|_| CliError::Config(format!("unknown suite '{name}'")))?;
                tasks.extend(relation_tasks(rel));
            }
        }
        if tasks.len() == before {
            return Err(CliError::Config(format!(
                "suite '{name}' has no admissible rank up to nmax={nmax} at gamma={ell}"
            )));
        }
    }
    tasks.sort_by_key(Task::key);
    tasks.dedup();
    Ok(tasks)
}

fn execute(task: Task, cfg: &RunConfig, ctx: &BimodContext) -> Result<Report, CliError> {
    let rep = match task {
        Task::Relation(rel, n) => Report::single(run_suite(ctx, rel, n)?),
        Task::H10Split(n) => h10_projection_decomposition(ctx, n)?,
        Task::Example(n) => example_decomposition(ctx, n)?,
        Task::Crossing => crossing_coefficient_check(CROSSING_BOUND, CROSSING_BOUND)?,
        Task::Psi(n) => verify_psi_suite(n),
        Task::Linearity(n) => verify_linearity(ctx, n)?,
        Task::Confluence => confluence_probe(CONFLUENCE_TRIALS, CONFLUENCE_LEN, &cfg.cartan, cfg.seed),
        Task::Fock => fock_suite(cfg, FOCK_KMAX, FOCK_LEN, FOCK_LEVEL)?,
    };
    Ok(rep)
}

fn fock_suite(cfg: &RunConfig, kmax: u32, max_len: usize, max_level: u32) -> Result<Report, CliError> {
    let mut rep = verify_brackets(&cfg.cartan, cfg.truncation)?;
    rep.extend(verify_presentation(kmax, &cfg.cartan, cfg.truncation)?);
    rep.extend(verify_low_levels(&cfg.cartan, cfg.truncation)?);
    rep.extend(verify_engine_agreement(&cfg.cartan, cfg.truncation, max_len, max_level)?);
    Ok(rep)
}

/// A finished command: the report plus its plain-text rendering.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub text: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.report.holds() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.report).expect("reports serialize"),
        }
    }
}

fn computed(suite: &str, result: String, start: Instant) -> Outcome {
    let rec = Record::new(suite).with_param("result", &result).timed(start);
    Outcome { report: Report::single(rec), text: result }
}

fn parse_opts(cfg: &RunConfig, n: Option<usize>) -> ParseOptions {
    ParseOptions { n, ell: cfg.gamma, max_rank: cfg.caps.max_rank, cartan: cfg.cartan.clone() }
}

/// Validates everything first, then runs the command.
pub fn run_command(cmd: &Command, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let mut out = match cmd {
        Command::NormalForm { expr, n } => {
            let x = parse_element(expr, &parse_opts(cfg, *n))?;
            computed("normal-form", x.render(), start)
        }
        Command::Multiply { left, right, n } => {
            let opts = parse_opts(cfg, *n);
            let (x, y) = (parse_element(left, &opts)?, parse_element(right, &opts)?);
            computed("multiply", multiply(&x, &y, &cfg.cartan)?.render(), start)
        }
        Command::Dims { n } => {
            if *n > cfg.caps.max_rank {
                return Err(CliError::Config(format!("n must be at most {}, got {n}", cfg.caps.max_rank)));
            }
            let dim = dimension(*n, cfg.gamma);
            let graded = graded_dimension(*n, cfg.gamma);
            let mut rec = Record::new("dims").with_n(*n).with_ell(cfg.gamma);
            rec.check(graded.total() == dim.into(), || format!("basis count {} differs from {dim}", graded.total()));
            rec.checked_dimension = dim;
            let rec = rec.with_param("result", dim).with_param("graded", &graded).timed(start);
            Outcome { report: Report::single(rec), text: format!("{dim}\ngraded: {graded}") }
        }
        Command::Series { a, order } => {
            if *order > MAX_SERIES_ORDER {
                return Err(CliError::Config(format!("order must be at most {MAX_SERIES_ORDER}")));
            }
            let s = series_quotient_power(*a, *order)?;
            let text = s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
            let out = computed("series", text, start);
            let mut report = out.report;
            report.records[0].params.extra.insert("a".into(), a.to_string());
            report.records[0].params.extra.insert("order".into(), order.to_string());
            Outcome { report, text: out.text }
        }
        Command::FockCheck { truncation, kmax, max_len, max_level } => {
            let mut cfg = cfg.clone();
            if let Some(t) = truncation {
                if *t == 0 || *t > cfg.caps.max_truncation {
                    return Err(CliError::Config(format!("truncation must be in 1..={}", cfg.caps.max_truncation)));
                }
                cfg.truncation = *t;
            }
            if *max_len > FOCK_MAX_LEN || *max_level > FOCK_MAX_LEVEL {
                return Err(CliError::Config(format!(
                    "max-len is capped at {FOCK_MAX_LEN} and max-level at {FOCK_MAX_LEVEL}"
                )));
            }
            if 2 * kmax > cfg.truncation {
                return Err(CliError::Config(format!("kmax={kmax} needs truncation at least {}", 2 * kmax)));
            }
            let report = fock_suite(&cfg, *kmax, *max_len, *max_level)?;
            Outcome { text: report.to_string(), report }
        }
        Command::Verify { suite, nmax, fault } => {
            let nmax = nmax.unwrap_or(cfg.nmax);
            if nmax > cfg.caps.max_rank {
                return Err(CliError::Config(format!("nmax must be at most {}, got {nmax}", cfg.caps.max_rank)));
            }
            let tasks = plan(suite, cfg, nmax)?;
            let faults = fault.map(Fault::faults).unwrap_or_default();
            let ctx = BimodContext::with_faults(cfg.gamma, faults)?;
            let mut report = Report::new();
            for task in tasks {
                report.extend(execute(task, cfg, &ctx)?);
            }
            report.sort();
            report.config.insert("suites".into(), suite.join(","));
            report.config.insert("nmax".into(), nmax.to_string());
            if let Some(f) = fault {
                report.config.insert("fault".into(), format!("{f:?}").to_ascii_lowercase());
            }
            Outcome { text: String::new(), report }
        }
    };
    let mut config = cfg.echo();
    config.append(&mut out.report.config);
    out.report.config = config;
    if !cfg.timing {
        out.report.strip_timing();
    }
    if let Command::Verify { .. } | Command::FockCheck { .. } = cmd {
        out.text = out.report.to_string();
    }
    Ok(out)
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exit {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments, loads configuration and runs; never panics on bad input.
pub fn run_args<I, T>(args: I) -> Exit
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Exit { code, stdout: text, stderr: String::new() }
            } else {
                Exit { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let fail = |e: CliError| Exit { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") };
    let file = match &cli.config {
        Some(path) => match ConfigFile::load(path) {
            Ok(f) => f,
            Err(e) => return fail(e),
        },
        None => ConfigFile::default(),
    };
    let nmax = match &cli.command {
        Command::Verify { nmax, .. } => *nmax,
        _ => None,
    };
    let flags = Overrides {
        gamma: cli.gamma,
        nmax,
        seed: cli.seed,
        format: cli.format,
        truncation: None,
        no_timing: cli.no_timing,
        cartan: cli.cartan.clone(),
    };
    let cfg = match RunConfig::resolve(file, flags) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    match run_command(&cli.command, &cfg) {
        Ok(out) => {
            let mut stdout = out.render(cfg.format);
            stdout.push('\n');
            Exit { code: out.exit_code(), stdout, stderr: String::new() }
        }
        Err(e) => fail(e),
    }
}
