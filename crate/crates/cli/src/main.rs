use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rcdual::laws::{reduced_nonminimal_extensions, verify_range};
use rcdual::{
    antidiagonal_family, enumerate_rp, schubert_polynomial, transversal_dual, Permutation,
    PipeDream, SetFamily,
};

#[derive(Parser)]
#[command(
    name = "rcdual",
    version,
    about = "Reduced pipe dreams, antidiagonals and transversal duals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced pipe dreams RP_w
    Rp {
        perm: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Minimal antidiagonal family A_w
    Ad {
        perm: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Transversal dual of a SetFamily JSON file, or of A_w for a permutation
    Dual {
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Schubert polynomial as a sum over RP_w
    Schubert {
        perm: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Check the duality and its supporting statements on all of S_n
    Verify {
        #[arg(long)]
        n: usize,
        /// Wall-clock budget in seconds
        #[arg(long, default_value_t = 600)]
        budget: u64,
        /// Worker threads (0 = one per core)
        #[arg(long, env = "PD_JOBS", default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

enum Failure {
    /// Bad argument or unusable input: exit 2.
    Input(String),
    /// Malformed SetFamily JSON: exit 3.
    Json(String),
}

type Outcome = Result<(String, ExitCode), Failure>;

fn parse_perm(text: &str) -> Result<Permutation, Failure> {
    text.parse()
        .map_err(|e| Failure::Input(format!("cannot parse permutation `{text}`: {e}")))
}

fn lib_err(e: rcdual::Error) -> Failure {
    Failure::Input(e.to_string())
}

fn render_family(family: &SetFamily, format: OutputFormat) -> Result<String, Failure> {
    match format {
        OutputFormat::Text => Ok(family.to_string()),
        OutputFormat::Json => Ok(family.to_json() + "\n"),
        OutputFormat::Ascii => {
            let mut out = String::new();
            for (i, m) in family.iter().enumerate() {
                let d = PipeDream::new(family.n(), *m)
                    .map_err(|e| Failure::Input(format!("ascii output needs pipe dreams: {e}")))?;
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&d.render_ascii());
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn only_pipe_dreams(format: OutputFormat) -> Result<(), Failure> {
    if format == OutputFormat::Ascii {
        return Err(Failure::Input(
            "ascii format is only available for pipe-dream output".into(),
        ));
    }
    Ok(())
}

fn read_dual_input(input: &str) -> Result<SetFamily, Failure> {
    let path = Path::new(input);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{input}: {e}")))?;
        return SetFamily::from_json(&text).map_err(|e| Failure::Json(format!("{input}: {e}")));
    }
    let w = parse_perm(input)?;
    antidiagonal_family(&w).map_err(lib_err)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Rp { perm, format } => {
            let w = parse_perm(&perm)?;
            let rp = enumerate_rp(&w).map_err(lib_err)?;
            Ok((render_family(&rp, format)?, ExitCode::SUCCESS))
        }
        Command::Ad { perm, format } => {
            only_pipe_dreams(format)?;
            let w = parse_perm(&perm)?;
            let a = antidiagonal_family(&w).map_err(lib_err)?;
            Ok((render_family(&a, format)?, ExitCode::SUCCESS))
        }
        Command::Dual { input, format } => {
            let family = read_dual_input(&input)?;
            Ok((
                render_family(&transversal_dual(&family), format)?,
                ExitCode::SUCCESS,
            ))
        }
        Command::Schubert { perm, format } => {
            only_pipe_dreams(format)?;
            let w = parse_perm(&perm)?;
            let poly = schubert_polynomial(&w).map_err(lib_err)?;
            let out = match format {
                OutputFormat::Json => poly.to_json() + "\n",
                _ => format!("{poly}\n"),
            };
            Ok((out, ExitCode::SUCCESS))
        }
        Command::Verify {
            n,
            budget,
            jobs,
            format,
        } => {
            only_pipe_dreams(format)?;
            if n == 0 {
                return Err(Failure::Input("--n must be at least 1".into()));
            }
            let outcome = verify_range(n, Duration::from_secs(budget), jobs).map_err(lib_err)?;
            let tally = format!("{}/{} permutations pass", outcome.passed(), outcome.total);
            let mut out = String::new();
            if format == OutputFormat::Json {
                out = serde_json::to_string(&outcome.reports).expect("report serialization") + "\n";
                eprintln!("{tally}");
            } else {
                for r in &outcome.reports {
                    let failures: Vec<&str> = r.failures().collect();
                    if failures.is_empty() {
                        writeln!(out, "{} pass", r.permutation()).unwrap();
                    } else {
                        writeln!(out, "{} FAIL {}", r.permutation(), failures.join(" ")).unwrap();
                    }
                }
                writeln!(out, "{tally}").unwrap();
            }
            let extensions: usize = outcome
                .reports
                .iter()
                .map(|r| reduced_nonminimal_extensions(r.permutation()).unwrap_or(0))
                .sum();
            eprintln!(
                "reduced non-minimal one-box extensions across checked permutations: {extensions}"
            );
            let code = if outcome.passed() < outcome.reports.len() {
                ExitCode::from(1)
            } else if outcome.budget_exhausted {
                eprintln!(
                    "budget exhausted: checked {} of {} permutations",
                    outcome.reports.len(),
                    outcome.total
                );
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            };
            Ok((out, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            code
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Json(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
