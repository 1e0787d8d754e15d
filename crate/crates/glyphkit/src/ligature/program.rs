//! Pair-rewrite programs: a deterministic map from letter pairs to one of
//! nine operations plus the letter the operation introduces.

use std::collections::{BTreeMap, BTreeSet};

use crate::letter::Letter;

/// The nine pair-rewrite operation kinds.
///
/// With the focus on a pair `(a, w)` and `z` the rule's new letter, the
/// buffer effect and next focus pair are:
///
/// | kind          | opcode    | buffer        | next pair    |
/// |---------------|-----------|---------------|--------------|
/// | `None`        | (default) | unchanged     | `(w, next)`  |
/// | `Merge`       | `=:`      | `a w -> z`    | `(z, next)`  |
/// | `KeepRight`   | `=:\|`    | `a w -> z w`  | `(z, w)`     |
/// | `KeepRightAdv`| `=:\|>`   | `a w -> z w`  | `(w, next)`  |
/// | `KeepLeft`    | `\|=:`    | `a w -> a z`  | `(a, z)`     |
/// | `KeepLeftAdv` | `\|=:>`   | `a w -> a z`  | `(z, next)`  |
/// | `KeepBoth`    | `\|=:\|`  | `a w -> a z w`| `(a, z)`     |
/// | `KeepBothAdv1`| `\|=:\|>` | `a w -> a z w`| `(z, w)`     |
/// | `KeepBothAdv2`| `\|=:\|>>`| `a w -> a z w`| `(w, next)`  |
///
/// `None` is the implicit default for pairs without a rule and never appears
/// in a stored program.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum LigOp {
    None,
    Merge,
    KeepRight,
    KeepRightAdv,
    KeepLeft,
    KeepLeftAdv,
    KeepBoth,
    KeepBothAdv1,
    KeepBothAdv2,
}

impl LigOp {
    /// The rule-file spelling of this operation. `None` has no spelling.
    pub fn opcode(self) -> &'static str {
        match self {
            LigOp::None => "(none)",
            LigOp::Merge => "=:",
            LigOp::KeepRight => "=:|",
            LigOp::KeepRightAdv => "=:|>",
            LigOp::KeepLeft => "|=:",
            LigOp::KeepLeftAdv => "|=:>",
            LigOp::KeepBoth => "|=:|",
            LigOp::KeepBothAdv1 => "|=:|>",
            LigOp::KeepBothAdv2 => "|=:|>>",
        }
    }

    /// Parses an opcode token. `None` is not spellable.
    pub fn from_opcode(s: &str) -> Option<LigOp> {
        Some(match s {
            "=:" => LigOp::Merge,
            "=:|" => LigOp::KeepRight,
            "=:|>" => LigOp::KeepRightAdv,
            "|=:" => LigOp::KeepLeft,
            "|=:>" => LigOp::KeepLeftAdv,
            "|=:|" => LigOp::KeepBoth,
            "|=:|>" => LigOp::KeepBothAdv1,
            "|=:|>>" => LigOp::KeepBothAdv2,
            _ => return None,
        })
    }
}

/// One rule: the operation and the letter it introduces.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct LigRule {
    pub op: LigOp,
    pub letter: Letter,
}

/// A deterministic pair-rewrite program: at most one rule per ordered pair.
///
/// Immutable once built; the evaluators keep their own scratch state, so a
/// shared program can serve concurrent queries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LigProgram {
    rules: BTreeMap<(Letter, Letter), LigRule>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProgramError {
    #[error("rule for pair ({0}, {1}) given twice")]
    DuplicatePair(Letter, Letter),
    #[error("the default operation cannot be stored as a rule")]
    ExplicitNone,
}

impl LigProgram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a rule; rejects duplicates and explicit `None`.
    pub fn add_rule(
        &mut self,
        alpha: Letter,
        omega: Letter,
        op: LigOp,
        letter: Letter,
    ) -> Result<(), ProgramError> {
        if op == LigOp::None {
            return Err(ProgramError::ExplicitNone);
        }
        if self.rules.contains_key(&(alpha, omega)) {
            return Err(ProgramError::DuplicatePair(alpha, omega));
        }
        self.rules.insert((alpha, omega), LigRule { op, letter });
        Ok(())
    }

    /// The rule for a pair, if one is stored.
    pub fn rule(&self, alpha: Letter, omega: Letter) -> Option<LigRule> {
        self.rules.get(&(alpha, omega)).copied()
    }

    /// Left-hand pairs of all stored rules, in sorted order.
    pub fn pairs(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        self.rules.keys().copied()
    }

    /// Every letter mentioned by any rule.
    pub fn alphabet(&self) -> BTreeSet<Letter> {
        let mut set = BTreeSet::new();
        for (&(a, w), r) in &self.rules {
            set.insert(a);
            set.insert(w);
            set.insert(r.letter);
        }
        set
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LigParseErrorKind {
    #[error("expected `<alpha> <omega> <opcode> <letter>`, found {0} fields")]
    FieldCount(usize),
    #[error("unknown opcode {0:?}")]
    UnknownOpcode(String),
    #[error("kern entries are not supported; only the eight rewrite opcodes")]
    KernUnsupported,
    #[error("malformed letter {0:?} (expected a single character or #<decimal>)")]
    MalformedLetter(String),
    #[error("rule for pair ({0}, {1}) given twice")]
    DuplicatePair(Letter, Letter),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct LigParseError {
    pub line: usize,
    pub kind: LigParseErrorKind,
}

fn parse_letter(token: &str) -> Option<Letter> {
    if let Some(num) = token.strip_prefix('#') {
        let code: u32 = num.parse().ok()?;
        return Some(Letter(code));
    }
    let mut chars = token.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Some(Letter::from(c)),
        _ => None,
    }
}

/// Parses a rule file: one rule per line, `<alpha> <omega> <opcode> <letter>`
/// with whitespace-separated fields, letters as single characters or
/// `#<decimal>`, and `%` comments to end of line.
pub fn parse_program(text: &str) -> Result<LigProgram, LigParseError> {
    let mut program = LigProgram::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('%') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let err = |kind| LigParseError {
            line: lineno + 1,
            kind,
        };
        if fields.len() != 4 {
            if fields.get(2).map(|s| s.eq_ignore_ascii_case("kern")) == Some(true) {
                return Err(err(LigParseErrorKind::KernUnsupported));
            }
            return Err(err(LigParseErrorKind::FieldCount(fields.len())));
        }
        let letter = |tok: &str| {
            parse_letter(tok).ok_or_else(|| err(LigParseErrorKind::MalformedLetter(tok.into())))
        };
        let alpha = letter(fields[0])?;
        let omega = letter(fields[1])?;
        let op = match LigOp::from_opcode(fields[2]) {
            Some(op) => op,
            None if fields[2].eq_ignore_ascii_case("kern") => {
                return Err(err(LigParseErrorKind::KernUnsupported))
            }
            None => return Err(err(LigParseErrorKind::UnknownOpcode(fields[2].into()))),
        };
        let lambda = letter(fields[3])?;
        program
            .add_rule(alpha, omega, op, lambda)
            .map_err(|e| match e {
                ProgramError::DuplicatePair(a, w) => err(LigParseErrorKind::DuplicatePair(a, w)),
                ProgramError::ExplicitNone => unreachable!("no opcode spells the default"),
            })?;
    }
    Ok(program)
}
