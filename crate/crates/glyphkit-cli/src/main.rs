//! `glyphkit`: hyphenation, ligature rewriting, and pen digitization from
//! the command line.
//!
//! Exit codes: 0 success; 1 domain negative (a rewrite loop was found, or a
//! reproduction assertion failed); 2 usage or parse errors; 3 step limit
//! exceeded.

mod commands;
mod util;

use clap::{Parser, Subcommand};

use util::Failure;

#[derive(Parser)]
#[command(
    name = "glyphkit",
    version,
    about = "Pattern hyphenation, pair-rewrite ligature programs, and pen-swept digitization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hyphenate words using a pattern file
    Hyphenate(commands::hyphenate::HyphenateArgs),
    /// Inspect and run pair-rewrite ligature programs
    Lig {
        #[command(subcommand)]
        cmd: commands::lig::LigCmd,
    },
    /// Digitize pen-swept strokes onto a pixel grid
    Raster {
        #[command(subcommand)]
        cmd: commands::raster::RasterCmd,
    },
    /// Re-run a bundled demonstration recipe and check its expected outcome
    Reproduce(commands::reproduce::ReproduceArgs),
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Hyphenate(args) => commands::hyphenate::run(args),
        Command::Lig { cmd } => commands::lig::run(cmd),
        Command::Raster { cmd } => commands::raster::run(cmd),
        Command::Reproduce(args) => commands::reproduce::run(args),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(Failure { code, message }) => {
            eprintln!("glyphkit: {message}");
            std::process::exit(code);
        }
    }
}
