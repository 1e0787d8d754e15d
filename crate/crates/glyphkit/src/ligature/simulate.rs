//! Cursor-based rewriting of a word under a pair-rewrite program.

use crate::letter::Letter;
use crate::ligature::program::{LigOp, LigProgram};

/// One executed step: the pair that was under focus, the rule applied (with
/// the letter it introduced, if any), and the buffer and focus right after.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub pair: (Letter, Letter),
    pub op: LigOp,
    pub letter: Option<Letter>,
    pub buffer: Vec<Letter>,
    pub focus: usize,
}

/// A finished rewrite: the final buffer, the number of steps taken, and the
/// full step trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simulation {
    pub word: Vec<Letter>,
    pub steps: u64,
    pub trace: Vec<TraceStep>,
}

/// The step budget ran out; the rewrite was looping or close to it.
/// Carries the pair that was under focus when the budget hit.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("step limit {limit} exceeded at pair ({}, {})", pair.0, pair.1)]
pub struct StepLimitExceeded {
    pub pair: (Letter, Letter),
    pub limit: u64,
}

/// A generous default budget, scaled as
/// `4 * (word length + rule count) * alphabet size` where the alphabet is
/// every letter in the rules or the word. Only genuine loops should hit it.
pub fn default_step_limit(word: &[Letter], program: &LigProgram) -> u64 {
    let mut alphabet = program.alphabet();
    alphabet.extend(word.iter().copied());
    (4 * (word.len() + program.len()) * alphabet.len().max(1)).max(16) as u64
}

/// Rewrites `word`, recording a full trace.
pub fn simulate(
    word: &[Letter],
    program: &LigProgram,
    step_limit: u64,
) -> Result<Simulation, StepLimitExceeded> {
    let mut trace = Vec::new();
    let (word, steps) = run(word, program, step_limit, Some(&mut trace))?;
    Ok(Simulation { word, steps, trace })
}

/// Rewrites `word` without keeping a trace.
pub fn rewrite(
    word: &[Letter],
    program: &LigProgram,
    step_limit: u64,
) -> Result<(Vec<Letter>, u64), StepLimitExceeded> {
    run(word, program, step_limit, None)
}

fn run(
    word: &[Letter],
    program: &LigProgram,
    step_limit: u64,
    mut trace: Option<&mut Vec<TraceStep>>,
) -> Result<(Vec<Letter>, u64), StepLimitExceeded> {
    let mut buffer: Vec<Letter> = word.to_vec();
    // The focus sits on the gap between buffer[focus - 1] and buffer[focus],
    // starting after the first letter. Once it passes the last letter there
    // is no pair left to examine.
    let mut focus = 1usize;
    let mut steps = 0u64;
    while focus < buffer.len() {
        let alpha = buffer[focus - 1];
        let omega = buffer[focus];
        if steps == step_limit {
            return Err(StepLimitExceeded {
                pair: (alpha, omega),
                limit: step_limit,
            });
        }
        let (op, letter) = match program.rule(alpha, omega) {
            Some(r) => (r.op, Some(r.letter)),
            None => (LigOp::None, None),
        };
        match op {
            LigOp::None => {
                focus += 1;
            }
            LigOp::Merge => {
                let z = letter.unwrap();
                buffer.splice(focus - 1..=focus, [z]);
                // z is at focus - 1; the pair (z, next) keeps the same gap.
            }
            LigOp::KeepRight | LigOp::KeepRightAdv => {
                let z = letter.unwrap();
                buffer[focus - 1] = z;
                if op == LigOp::KeepRightAdv {
                    focus += 1;
                }
            }
            LigOp::KeepLeft | LigOp::KeepLeftAdv => {
                let z = letter.unwrap();
                buffer[focus] = z;
                if op == LigOp::KeepLeftAdv {
                    focus += 1;
                }
            }
            LigOp::KeepBoth | LigOp::KeepBothAdv1 | LigOp::KeepBothAdv2 => {
                let z = letter.unwrap();
                buffer.insert(focus, z);
                match op {
                    LigOp::KeepBoth => {}
                    LigOp::KeepBothAdv1 => focus += 1,
                    _ => focus += 2,
                }
            }
        }
        steps += 1;
        if let Some(t) = trace.as_deref_mut() {
            t.push(TraceStep {
                pair: (alpha, omega),
                op,
                letter,
                buffer: buffer.clone(),
                focus,
            });
        }
    }
    Ok((buffer, steps))
}
