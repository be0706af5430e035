//! `ovalcodes`: build, analyze and verify oval-polynomial codes.

mod code;
mod opoly;
mod theorem;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use ovalcodes::{Budget, FieldCtx};

/// Process exit status: 0 success, 1 a check failed, 2 bad input or unmet
/// precondition, 3 enumeration budget exceeded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Parser)]
#[command(
    name = "ovalcodes",
    version,
    about = "Oval polynomials, hyperovals and near-MDS codes over GF(2^m)"
)]
struct Cli {
    /// Largest number of codewords an enumeration may visit.
    #[arg(long, global = true, env = "OVALCODES_BUDGET", default_value_t = Budget::DEFAULT.0)]
    max_budget: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Oval polynomial catalog and checks.
    Opoly {
        #[command(subcommand)]
        command: opoly::OpolyCommand,
    },
    /// Build and analyze generator matrices.
    Code {
        #[command(subcommand)]
        command: code::CodeCommand,
    },
    /// Verify the NMDS claims end to end.
    Verify {
        #[command(subcommand)]
        command: theorem::VerifyCommand,
    },
}

/// Field selection shared by several commands.
#[derive(Args, Clone, Debug)]
pub struct FieldArgs {
    /// Extension degree, 2..=16.
    #[arg(long)]
    m: u32,
    /// Modulus polynomial as an integer bitmask (default: smallest irreducible).
    #[arg(long, value_parser = parse_int)]
    modulus: Option<u32>,
    /// Primitive element encoding (default: smallest primitive >= 2).
    #[arg(long, value_parser = parse_int)]
    alpha: Option<u32>,
}

impl FieldArgs {
    pub fn ctx(&self) -> ovalcodes::Result<Arc<FieldCtx>> {
        FieldCtx::with_params(self.m, self.modulus, self.alpha).map(Arc::new)
    }
}

/// Accepts decimal, `0x` hex and `0b` binary.
fn parse_int(s: &str) -> Result<u32, String> {
    let (digits, radix) = match s.get(..2) {
        Some("0x" | "0X") => (&s[2..], 16),
        Some("0b" | "0B") => (&s[2..], 2),
        _ => (s, 10),
    };
    u32::from_str_radix(digits, radix).map_err(|e| format!("{s:?}: {e}"))
}

pub fn write_file(path: &PathBuf, contents: &str) -> anyhow::Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<ovalcodes::Error>() {
        Some(e) if e.is_budget() => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget(cli.max_budget);
    let result = match cli.command {
        Command::Opoly { command } => opoly::run(command),
        Command::Code { command } => code::run(command, budget),
        Command::Verify { command } => theorem::run(command, budget),
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
