//! Thin command-line front end over the library's batch runners.

use clap::{Parser, Subcommand, ValueEnum};
use clawham::engine::Mode;
use clawham::report::{
    run_audit, run_check, run_gen, run_ham, run_verify, split_records, GenFamily, InputFormat,
    RunOptions, EXIT_USAGE,
};
use std::io::Read;

#[derive(Parser)]
#[command(
    name = "clawham",
    version,
    about = "Hamiltonicity toolkit for claw-heavy and almost distance-hereditary graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    ClawHeavy,
    OneHeavy,
    Generic,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::ClawHeavy => Mode::ClawHeavy,
            CliMode::OneHeavy => Mode::OneHeavy,
            CliMode::Generic => Mode::Generic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CliFormat {
    G6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(clap::Args)]
struct StreamArgs {
    /// Input file; "-" reads standard input.
    #[arg(default_value = "-")]
    input: String,
    /// Input format: graph6 lines or a single edge list.
    #[arg(long, value_enum, default_value_t = CliFormat::G6)]
    format: CliFormat,
    /// Worker threads (0 = automatic).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Process at most this many records.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Class profile, distance-hereditary verdicts, and connectivity.
    Check {
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Hamilton cycle search with certificates.
    Ham {
        #[command(flatten)]
        stream: StreamArgs,
        #[arg(long, value_enum, default_value_t = CliMode::Generic)]
        mode: CliMode,
    },
    /// Exhaustive verification: hypothesis-satisfying graphs must be
    /// Hamiltonian per both the engine and the oracle.
    Verify {
        #[command(flatten)]
        stream: StreamArgs,
        #[arg(long, value_enum, default_value_t = CliMode::ClawHeavy)]
        mode: CliMode,
        /// Brute-force cross-check of every applicable graph.
        #[arg(long, value_enum, default_value_t = Toggle::On)]
        oracle: Toggle,
    },
    /// Structural audit of longest cycles of non-Hamiltonian graphs.
    Audit {
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Emit generator families as graph6 streams.
    Gen {
        #[command(subcommand)]
        family: GenCmd,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Join of two cliques plus a three-vertex gadget (even n >= 10).
    Cliquejoin {
        #[arg(long)]
        n: usize,
    },
    /// Seeded random graphs.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// All labeled graphs on n <= 7 vertices.
    Labeled {
        #[arg(long)]
        n: usize,
    },
    /// One representative per isomorphism class, n <= 10.
    Iso {
        #[arg(long)]
        n: usize,
    },
    /// Complete graph.
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// The Petersen graph.
    Petersen,
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
    }
}

fn load(stream: &StreamArgs) -> (Vec<String>, RunOptions) {
    let text = match read_input(&stream.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", stream.input);
            std::process::exit(EXIT_USAGE);
        }
    };
    let format = match stream.format {
        CliFormat::G6 => InputFormat::Graph6,
        CliFormat::Edges => InputFormat::EdgeList,
    };
    let records = split_records(&text, format, stream.limit);
    let opts = RunOptions {
        format,
        jobs: stream.jobs,
        limit: stream.limit,
        oracle: true,
    };
    (records, opts)
}

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let code = match cli.cmd {
        Cmd::Check { stream } => {
            let (records, opts) = load(&stream);
            let report = run_check(&records, &opts);
            report.write_to(stdout.lock()).expect("write stdout");
            report.exit_code
        }
        Cmd::Ham { stream, mode } => {
            let (records, opts) = load(&stream);
            let report = run_ham(&records, mode.into(), &opts);
            report.write_to(stdout.lock()).expect("write stdout");
            report.exit_code
        }
        Cmd::Verify {
            stream,
            mode,
            oracle,
        } => {
            let (records, mut opts) = load(&stream);
            opts.oracle = matches!(oracle, Toggle::On);
            let report = run_verify(&records, mode.into(), &opts);
            report.write_to(stdout.lock()).expect("write stdout");
            report.exit_code
        }
        Cmd::Audit { stream } => {
            let (records, opts) = load(&stream);
            let report = run_audit(&records, &opts);
            report.write_to(stdout.lock()).expect("write stdout");
            report.exit_code
        }
        Cmd::Gen { family } => {
            let family = match family {
                GenCmd::Cliquejoin { n } => GenFamily::CliqueJoin { n },
                GenCmd::Random { n, p, seed, count } => GenFamily::Random { n, p, seed, count },
                GenCmd::Labeled { n } => GenFamily::Labeled { n },
                GenCmd::Iso { n } => GenFamily::Iso { n },
                GenCmd::Complete { n } => GenFamily::Complete { n },
                GenCmd::Petersen => GenFamily::Petersen,
            };
            match run_gen(&family) {
                Ok(lines) => {
                    use std::io::Write;
                    let mut out = stdout.lock();
                    for line in lines {
                        writeln!(out, "{line}").expect("write stdout");
                    }
                    0
                }
                Err(e) => {
                    eprintln!("{e}");
                    EXIT_USAGE
                }
            }
        }
    };
    std::process::exit(code);
}
