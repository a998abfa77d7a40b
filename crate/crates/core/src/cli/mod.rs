//! Command-line front end. All file and terminal I/O of the crate lives here.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse, validation or I/O error,
//! 3 an asserted claim was refuted during `verify`.

mod output;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bonding::vertex_bond;
use crate::harness::{run_suite, survey_open_problem, ClaimId, CorpusSpec, RunOptions};
use crate::independence::analyze;

pub use output::{
    export_dot, measurements_to_json, parse_tree_file, report_to_json, reports_to_json,
    verdicts_to_json,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_REFUTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "stablecore", version, about = "Maximum stable sets, core and pendant vertices of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze one tree given as an edge list.
    Analyze {
        file: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Generate random or exhaustive labeled trees.
    Gen(GenArgs),
    /// Check registry claims over a corpus.
    Verify(VerifyArgs),
    /// Bond two trees at one vertex each.
    Bond {
        file1: PathBuf,
        v1: usize,
        file2: PathBuf,
        v2: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert an edge list to DOT.
    Convert {
        file: PathBuf,
        #[arg(long)]
        dot: PathBuf,
    },
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, conflicts_with = "exhaustive", requires_all = ["count", "seed"])]
    random: bool,
    #[arg(long)]
    exhaustive: bool,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    dedup_iso: bool,
    /// Directory for one file per tree, or `-` for stdout.
    #[arg(long, default_value = "-")]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// `all` or a comma-separated list such as `C1,C10,C12`.
    #[arg(long, default_value = "all")]
    claims: String,
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    /// Trees per order in random mode.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads, 0 for one per core. Output does not depend on it.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long)]
    dedup_iso: bool,
    #[arg(long)]
    out: PathBuf,
    /// Also write per-tree measurements for the open problem (E1).
    #[arg(long)]
    measurements: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let outcome = match cli.command {
        Command::Analyze { file, json, dot } => cmd_analyze(&file, json.as_deref(), dot.as_deref(), stdout),
        Command::Gen(args) => cmd_gen(args, stdout),
        Command::Verify(args) => cmd_verify(args, stdout),
        Command::Bond { file1, v1, file2, v2, out } => cmd_bond(&file1, v1, &file2, v2, out.as_deref(), stdout),
        Command::Convert { file, dot } => cmd_convert(&file, &dot, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_USAGE
        }
        Err(Failure::Input(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_INPUT
        }
    }
}

fn emit(path: &Path, text: &str, stdout: &mut dyn Write) -> std::result::Result<(), Failure> {
    if path == Path::new("-") {
        stdout.write_all(text.as_bytes())?;
    } else {
        fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn cmd_analyze(file: &Path, json: Option<&Path>, dot: Option<&Path>, stdout: &mut dyn Write) -> Outcome {
    let tree = parse_tree_file(file).map_err(Failure::Input)?;
    let report = analyze(&tree);
    let text = report_to_json(&report) + "\n";
    emit(json.unwrap_or(Path::new("-")), &text, stdout)?;
    if let Some(dot) = dot {
        emit(dot, &export_dot(&tree, &report), stdout)?;
    }
    Ok(EXIT_OK)
}

fn cmd_gen(args: GenArgs, stdout: &mut dyn Write) -> Outcome {
    let spec = match (args.random, args.exhaustive) {
        (true, false) => CorpusSpec::random(args.n, args.n, args.count.unwrap_or(0), args.seed.unwrap_or(0)),
        (false, true) => CorpusSpec::exhaustive(args.n, args.n),
        _ => return Err(Failure::Usage("choose exactly one of --random and --exhaustive".into())),
    }
    .with_dedup(args.dedup_iso);
    let corpus = spec.materialize()?;
    let to_stdout = args.out == Path::new("-");
    if !to_stdout {
        fs::create_dir_all(&args.out).map_err(|e| format!("{}: {e}", args.out.display()))?;
    }
    for (index, tree) in corpus.trees().enumerate() {
        if to_stdout {
            write!(stdout, "# tree {index}\n{}", tree.to_edge_list())?;
        } else {
            let path = args.out.join(format!("tree_{}_{index:06}.txt", args.n));
            fs::write(&path, tree.to_edge_list()).map_err(|e| format!("{}: {e}", path.display()))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs, stdout: &mut dyn Write) -> Outcome {
    let claims = ClaimId::parse_list(&args.claims).map_err(|e| Failure::Usage(e.to_string()))?;
    let spec = match args.mode {
        Mode::Exhaustive => CorpusSpec::exhaustive(args.n_min, args.n_max),
        Mode::Random => {
            let sample = args.sample.ok_or_else(|| Failure::Usage("--mode random needs --sample".into()))?;
            CorpusSpec::random(args.n_min, args.n_max, sample, args.seed)
        }
    }
    .with_dedup(args.dedup_iso);
    spec.validate()?;
    let options = RunOptions { jobs: args.jobs, ..RunOptions::default() };
    let verdicts = run_suite(&claims, &spec, options)?;
    emit(&args.out, &(verdicts_to_json(&verdicts) + "\n"), stdout)?;
    if let Some(path) = &args.measurements {
        let records = survey_open_problem(&spec, true, options)?;
        emit(path, &(measurements_to_json(&records) + "\n"), stdout)?;
    }
    let mut refuted = false;
    for v in &verdicts {
        let label = if v.claim.is_asserted() { "" } else { " (report only)" };
        writeln!(
            stdout,
            "{:<4} checked={} held={} refuted={} skipped={}{label}",
            v.claim, v.checked, v.held, v.refuted, v.skipped
        )?;
        refuted |= v.claim.is_asserted() && v.refuted > 0;
    }
    Ok(if refuted { EXIT_REFUTED } else { EXIT_OK })
}

fn cmd_bond(file1: &Path, v1: usize, file2: &Path, v2: usize, out: Option<&Path>, stdout: &mut dyn Write) -> Outcome {
    let t1 = parse_tree_file(file1).map_err(Failure::Input)?;
    let t2 = parse_tree_file(file2).map_err(Failure::Input)?;
    let bonded = vertex_bond(&t1, v1, &t2, v2)?;
    let text = format!("# bond vertex {}\n{}", bonded.bond_vertex, bonded.tree.to_edge_list());
    emit(out.unwrap_or(Path::new("-")), &text, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_convert(file: &Path, dot: &Path, stdout: &mut dyn Write) -> Outcome {
    let tree = parse_tree_file(file).map_err(Failure::Input)?;
    emit(dot, &export_dot(&tree, &analyze(&tree)), stdout)?;
    Ok(EXIT_OK)
}
