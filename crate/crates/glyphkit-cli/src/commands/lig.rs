//! `glyphkit lig check|apply|table`

use std::path::{Path, PathBuf};

use clap::Subcommand;
use glyphkit::letter::{letters_of, render_letters};
use glyphkit::ligature::{
    check_loops, default_step_limit, f_table, parse_program, simulate, FValue, LigProgram,
};

use crate::util::{green, read_file, red, Failure};

#[derive(Subcommand)]
pub enum LigCmd {
    /// Decide whether the rule set can rewrite forever (exit 1 if it can)
    Check {
        /// Rule file: `<alpha> <omega> <opcode> <letter>` per line
        rules: PathBuf,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Rewrite a word and print the result
    Apply {
        rules: PathBuf,
        word: String,
        /// Rewrite budget; a generous default is derived from the input
        #[arg(long, value_name = "N")]
        step_limit: Option<u64>,
        /// Print the full step trace to the error stream
        #[arg(long)]
        trace: bool,
    },
    /// Print the pair function over every pair the loop check touches
    Table {
        rules: PathBuf,
        /// Emit the table as JSON
        #[arg(long)]
        json: bool,
    },
}

fn load(path: &Path) -> Result<LigProgram, Failure> {
    let text = read_file(path)?;
    parse_program(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub fn run(cmd: LigCmd) -> Result<i32, Failure> {
    match cmd {
        LigCmd::Check { rules, json } => {
            let program = load(&rules)?;
            let report = check_loops(&program);
            if json {
                println!("{}", report.to_json());
            } else if report.is_ok() {
                println!("{}", green("OK"));
            } else {
                for cycle in &report.cycles {
                    let pairs: Vec<String> = cycle
                        .pairs
                        .iter()
                        .map(|(a, w)| format!("({a}, {w})"))
                        .collect();
                    println!("{}: {}", red("CYCLE"), pairs.join(" "));
                }
            }
            Ok(if report.is_ok() { 0 } else { 1 })
        }
        LigCmd::Apply {
            rules,
            word,
            step_limit,
            trace,
        } => {
            let program = load(&rules)?;
            let letters = letters_of(&word);
            let limit = step_limit.unwrap_or_else(|| default_step_limit(&letters, &program));
            match simulate(&letters, &program, limit) {
                Ok(sim) => {
                    if trace {
                        for step in &sim.trace {
                            eprintln!(
                                "({}, {}) {} -> {}",
                                step.pair.0,
                                step.pair.1,
                                step.op.opcode(),
                                render_letters(&step.buffer),
                            );
                        }
                    }
                    println!("{}", render_letters(&sim.word));
                    Ok(0)
                }
                Err(e) => Err(Failure {
                    code: 3,
                    message: format!("{e} (a rule loop, or raise --step-limit)"),
                }),
            }
        }
        LigCmd::Table { rules, json } => {
            let program = load(&rules)?;
            let table = f_table(&program);
            if json {
                println!("{}", table.to_json());
            } else {
                for ((a, w), value) in table.iter() {
                    let shown = match value {
                        FValue::Defined(l) => l.display_token(),
                        FValue::Undefined(_) => red("UNDEF"),
                    };
                    println!("({a}, {w}) -> {shown}");
                }
            }
            Ok(0)
        }
    }
}
