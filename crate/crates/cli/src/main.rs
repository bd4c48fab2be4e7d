use std::path::PathBuf;
use std::process;

use clap::{Args, Parser, Subcommand};
use timegraph::commands::{cmd_analyze, cmd_annihilators, cmd_basis, cmd_oracle, cmd_verify, Outcome, RunConfig};
use timegraph::report::Format;


/// Bases and dimensions of spans of Hamiltonian time paths.
#[derive(Parser)]
#[command(name = "timegraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for every pseudo-random choice.
    #[arg(long, default_value_t = timegraph_core::basis::DEFAULT_SEED, global = true)]
    seed: u64,
    /// Largest order enumerated exhaustively.
    #[arg(long, default_value_t = timegraph_core::oracle::DEFAULT_CAP, global = true)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build and certify an upper-triangular basis, n >= 5.
    Basis {
        #[arg(long)]
        n: usize,
        /// Write the basis here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Re-certify a basis file.
    Verify {
        path: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension of the span of all n! htps by enumeration.
    Oracle {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension and Hamiltonicity of a time graph file.
    Analyze {
        path: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Check the annihilator family and its duality identities, n >= 5.
    Annihilators {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn config(command: &'static str, common: &Common) -> RunConfig {
    let mut cfg = RunConfig::new(command);
    cfg.format = common.format;
    cfg.seed = common.seed;
    cfg.cap = common.cap;
    cfg
}

fn main() {
    let cli = Cli::parse();
    let (cfg, run): (RunConfig, fn(&RunConfig) -> _) = match cli.command {
        Command::Basis { n, out, common } => {
            let mut cfg = config("basis", &common);
            cfg.n = Some(n);
            cfg.output = out;
            (cfg, cmd_basis)
        }
        Command::Verify { path, common } => {
            let mut cfg = config("verify", &common);
            cfg.input = Some(path);
            (cfg, cmd_verify)
        }
        Command::Oracle { n, common } => {
            let mut cfg = config("oracle", &common);
            cfg.n = Some(n);
            (cfg, cmd_oracle)
        }
        Command::Analyze { path, common } => {
            let mut cfg = config("analyze", &common);
            cfg.input = Some(path);
            (cfg, cmd_analyze)
        }
        Command::Annihilators { n, common } => {
            let mut cfg = config("annihilators", &common);
            cfg.n = Some(n);
            (cfg, cmd_annihilators)
        }
    };
    let code = match run(&cfg) {
        Ok(Outcome { report, exit, payload }) => {
            let rendered = report.render(cfg.format);
            match payload {
                Some(payload) => {
                    print!("{payload}");
                    eprint!("{rendered}");
                }
                None => print!("{rendered}"),
            }
            exit
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    process::exit(code as i32);
}

