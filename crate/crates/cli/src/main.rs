use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod report;

use report::{Report, Status};

/// Recognize graphs admitting a closed labeling and emit checkable
/// certificates.
#[derive(Parser, Debug)]
#[command(name = "closedgraph", version, about)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Edge-list file; stdin when omitted or `-`.
    path: Option<PathBuf>,
}

impl Input {
    fn read(&self) -> io::Result<String> {
        match &self.path {
            Some(p) if p.as_os_str() != "-" => fs::read_to_string(p),
            _ => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                Ok(s)
            }
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the graph has a closed labeling.
    Recognize {
        #[command(flatten)]
        input: Input,
        /// Re-check the certificate with independent methods.
        #[arg(long)]
        verify: bool,
    },
    /// Emit an exact proper interval model.
    Intervals {
        #[command(flatten)]
        input: Input,
        /// Treat the input labels as the closed labeling.
        #[arg(long)]
        assume_closed: bool,
        /// Rebuild the graph from the intervals and compare.
        #[arg(long)]
        check: bool,
    },
    /// List the facets of the clique complex.
    Facets {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        assume_closed: bool,
    },
    /// Check the consecutive-ones property of the facet incidence matrix.
    C1p {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        assume_closed: bool,
    },
    /// Exhaustive search over all labelings.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Largest vertex count to search.
        #[arg(long, default_value_t = closedgraph::closedness::DEFAULT_BRUTE_FORCE_LIMIT)]
        limit: u32,
    },
    /// Test whether the edge binomials form a quadratic Gröbner basis
    /// under the given labels.
    Gb {
        #[command(flatten)]
        input: Input,
    },
    /// Print a generated graph as an edge list.
    Gen {
        kind: Kind,
        #[arg(long, default_value_t = 10)]
        n: u32,
        /// Edge count for `random-gnm`.
        #[arg(long, default_value_t = 10)]
        m: u64,
        /// Leaf count for `star`.
        #[arg(long, default_value_t = 3)]
        leaves: u32,
        /// Interval length for `random-unit-interval`.
        #[arg(long, default_value_t = 3.0)]
        length: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time generation and recognition; prints CSV.
    Bench {
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', default_values_t = [10_000u32, 100_000])]
        sizes: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10.0)]
        length: f64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Path,
    Cycle,
    Complete,
    Claw,
    Star,
    RandomUnitInterval,
    RandomGnm,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen {
            kind,
            n,
            m,
            leaves,
            length,
            seed,
        } => {
            let kind = match kind {
                Kind::Path => closedgraph::GraphKind::Path { n },
                Kind::Cycle => closedgraph::GraphKind::Cycle { n },
                Kind::Complete => closedgraph::GraphKind::Complete { n },
                Kind::Claw => closedgraph::GraphKind::Claw,
                Kind::Star => closedgraph::GraphKind::Star { leaves },
                Kind::RandomUnitInterval => {
                    closedgraph::GraphKind::RandomUnitInterval { n, length }
                }
                Kind::RandomGnm => closedgraph::GraphKind::RandomGnm { n, m },
            };
            match closedgraph::generate(kind, seed) {
                Ok(g) => {
                    print!("{}", g.to_edge_list());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Bench {
            sizes,
            seed,
            length,
        } => match commands::bench(&sizes, seed, length) {
            Ok(csv) => {
                print!("{csv}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        cmd => {
            let report = run_graph_command(cmd);
            if report.status == Status::Error && !cli.json {
                if let Some(msg) = &report.message {
                    eprintln!("error: {msg}");
                }
            }
            print!("{}", report.render(cli.json));
            ExitCode::from(report.status.exit_code() as u8)
        }
    }
}

fn run_graph_command(cmd: Command) -> Report {
    let (name, input) = match &cmd {
        Command::Recognize { input, .. } => ("recognize", input),
        Command::Intervals { input, .. } => ("intervals", input),
        Command::Facets { input, .. } => ("facets", input),
        Command::C1p { input, .. } => ("c1p", input),
        Command::Oracle { input, .. } => ("oracle", input),
        Command::Gb { input } => ("gb", input),
        Command::Gen { .. } | Command::Bench { .. } => unreachable!("handled in main"),
    };
    let mut report = Report::new(name);
    let text = match input.read() {
        Ok(t) => t,
        Err(e) => return report.fail(format!("cannot read input: {e}")),
    };
    let graph = match report.timed("parse", || closedgraph::parse_edge_list(&text)) {
        Ok(g) => g,
        Err(e) => return report.fail(e.to_string()),
    };
    let outcome = match cmd {
        Command::Recognize { verify, .. } => commands::recognize(&mut report, &graph, verify),
        Command::Intervals {
            assume_closed,
            check,
            ..
        } => commands::intervals(&mut report, graph, assume_closed, check),
        Command::Facets { assume_closed, .. } => {
            commands::facets(&mut report, graph, assume_closed)
        }
        Command::C1p { assume_closed, .. } => commands::c1p(&mut report, graph, assume_closed),
        Command::Oracle { limit, .. } => commands::oracle(&mut report, &graph, limit),
        Command::Gb { .. } => commands::gb(&mut report, &graph),
        Command::Gen { .. } | Command::Bench { .. } => unreachable!("handled in main"),
    };
    match outcome {
        Ok(()) => report,
        Err(msg) => report.fail(msg),
    }
}
