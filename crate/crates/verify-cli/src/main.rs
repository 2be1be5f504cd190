use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use verify_cli::report::{FieldChoice, Report, RunConfig};

/// Exact verification of homological-algebra scenarios over graded quotient
/// rings.
#[derive(Parser)]
#[command(name = "verify", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Coefficient field: gf32003 or qq.
    #[arg(long, global = true, default_value = "gf32003")]
    field: String,

    /// Degree bound for Hilbert-function windows (default: max twist + 10
    /// per computation).
    #[arg(long, global = true)]
    max_degree: Option<i64>,

    /// Resolution length bound.
    #[arg(long, global = true, default_value_t = 8)]
    max_res: usize,

    /// Report format: text or json.
    #[arg(long, global = true, default_value = "text")]
    report: String,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a scenario file.
    Run { file: PathBuf },
    /// Run a bundled example scenario.
    Paper {
        /// One of: 2.4, 2.5, vasconcelos, thm-2.3-generic.
        #[arg(long)]
        example: String,
    },
    /// Run a randomized property suite.
    Property {
        /// One of: depth-formula, obs-2.6, tor-symmetry, gb-oracle,
        /// ab-four-term.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 50)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn emit(report: &Report, format: &str, out: &Option<PathBuf>) -> std::io::Result<()> {
    let text = match format {
        "json" => report.to_json(),
        _ => report.render_text(),
    };
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let field = match FieldChoice::parse(&cli.field) {
        Some(f) => f,
        None => {
            eprintln!("error: unknown field `{}` (use gf32003 or qq)", cli.field);
            return ExitCode::from(2);
        }
    };
    let mut cfg = RunConfig {
        field,
        max_degree: cli.max_degree,
        max_res: cli.max_res,
        seed: 0,
    };
    let result = match &cli.cmd {
        Cmd::Run { file } => std::fs::read_to_string(file)
            .map_err(|e| homalg::EngineError::Internal(format!("cannot read {:?}: {}", file, e)))
            .and_then(|src| {
                let name = file
                    .file_stem()
                    .map(|s| s.to_string_lossy().to_string())
                    .unwrap_or_else(|| "scenario".into());
                verify_cli::run_scenario_source(&name, &src, &cfg)
            }),
        Cmd::Paper { example } => verify_cli::run_paper_example(example, &cfg),
        Cmd::Property { suite, trials, seed } => {
            cfg.seed = *seed;
            verify_cli::run_property_suite(suite, *trials, &cfg)
        }
    };
    match result {
        Ok(report) => {
            if let Err(e) = emit(&report, &cli.report, &cli.out) {
                eprintln!("error: cannot write report: {}", e);
                return ExitCode::from(2);
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
