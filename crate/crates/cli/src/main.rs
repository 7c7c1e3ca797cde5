//! `xi`: rings, ξ-invariants, approximations and censuses from the shell.
//!
//! Exit codes: 0 ok, 1 verification failed, 2 parse error, 3 invalid ring
//! or module, 4 budget exceeded, 5 module not in the required class.

mod census;
mod commands;
mod workspace;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use workspace::Workspace;
use xi_core::Error;

#[derive(Parser)]
#[command(name = "xi", version, about = "Exact ξ-invariants and approximations over artinian local algebras")]
struct Cli {
    /// Characteristic for built-in rings.
    #[arg(long, global = true, default_value_t = 101)]
    p: u32,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the JSON result to this path (`-` for standard output).
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum RingAction {
    Check,
    Info,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ApproxKind {
    Ab,
    Origin,
    Hull,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a ring or print its invariants.
    Ring {
        action: RingAction,
        #[arg(long)]
        ring: String,
    },
    /// ξ(n, M), or the sequence ξ(0..=max, M) with its limit.
    Xi {
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        module: String,
        #[arg(long, conflicts_with = "seq")]
        n: Option<usize>,
        #[arg(long, requires = "max")]
        seq: bool,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Build an approximation sequence and verify it.
    Approx {
        kind: ApproxKind,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        minimize: bool,
    },
    /// Re-verify a sequence file.
    Verify {
        #[arg(long)]
        sequence: PathBuf,
    },
    /// ξ-profiles and class membership of random modules.
    Census {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 12)]
        dim_max: usize,
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// The index of a ring.
    Index {
        #[arg(long)]
        ring: String,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::InvalidRing(_) | Error::InvalidModule(_) | Error::InvalidMorphism(_) => 3,
        Error::Budget { .. } => 4,
        Error::NotInCategory(_) => 5,
        Error::Precondition(_) | Error::Internal(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ws = Workspace { p: cli.p, seed: cli.seed };
    let out = commands::Output::new(cli.json.clone());
    let result = match cli.cmd {
        Cmd::Ring { action, ring } => commands::ring(&ws, &out, action, &ring),
        Cmd::Xi { ring, module, n, seq: _, max } => commands::xi(&ws, &out, ring.as_deref(), &module, n, max),
        Cmd::Approx { kind, ring, module, n, minimize } => {
            commands::approx(&ws, &out, kind, ring.as_deref(), &module, n, minimize)
        }
        Cmd::Verify { sequence } => commands::verify(&ws, &out, &sequence),
        Cmd::Census { ring, count, dim_max, max } => census::run(&ws, &out, &ring, count, dim_max, max),
        Cmd::Index { ring } => commands::index(&ws, &out, &ring),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
