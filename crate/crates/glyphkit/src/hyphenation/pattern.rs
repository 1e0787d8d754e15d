//! Pattern tokens: letters interleaved with digit votes.

use crate::letter::{FoldTable, Letter};

/// One hyphenation pattern: a letter string with a digit value at every gap,
/// including the gaps before the first and after the last letter.
///
/// `values.len() == letters.len() + 1`; `values[i]` sits immediately before
/// `letters[i]` and the final value sits after the last letter. The anchor
/// flags come from a leading or trailing `.` in the source token and restrict
/// matches to the start or end of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub letters: Vec<Letter>,
    pub values: Vec<u8>,
    pub anchored_start: bool,
    pub anchored_end: bool,
}

impl Pattern {
    /// Builds a pattern, checking the length and digit-range invariants.
    /// All-zero value vectors are allowed; such patterns are inert.
    pub fn new(
        letters: Vec<Letter>,
        values: Vec<u8>,
        anchored_start: bool,
        anchored_end: bool,
    ) -> Result<Pattern, PatternError> {
        if letters.is_empty() {
            return Err(PatternError::empty());
        }
        if values.len() != letters.len() + 1 {
            return Err(PatternError {
                line: 0,
                token: String::new(),
                kind: PatternErrorKind::ValueLength {
                    letters: letters.len(),
                    values: values.len(),
                },
            });
        }
        if let Some(&v) = values.iter().find(|&&v| v > 9) {
            return Err(PatternError {
                line: 0,
                token: String::new(),
                kind: PatternErrorKind::ValueRange(v),
            });
        }
        Ok(Pattern {
            letters,
            values,
            anchored_start,
            anchored_end,
        })
    }

    /// Canonical token form, e.g. `.ach4` or `hy3ph`.
    pub fn to_token(&self) -> String {
        let mut s = String::new();
        if self.anchored_start {
            s.push('.');
        }
        for (i, l) in self.letters.iter().enumerate() {
            if self.values[i] != 0 {
                s.push((b'0' + self.values[i]) as char);
            }
            s.push_str(&l.display_token());
        }
        if self.values[self.letters.len()] != 0 {
            s.push((b'0' + self.values[self.letters.len()]) as char);
        }
        if self.anchored_end {
            s.push('.');
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PatternErrorKind {
    #[error("empty pattern after stripping anchor dots")]
    Empty,
    #[error("two adjacent digits")]
    AdjacentDigits,
    #[error("digit placed outside the anchor dot")]
    DigitInAnchor,
    #[error("'.' is only allowed at the ends of a token")]
    InteriorDot,
    #[error("value vector has wrong length ({values} values for {letters} letters)")]
    ValueLength { letters: usize, values: usize },
    #[error("value {0} out of range 0-9")]
    ValueRange(u8),
}

/// A parse failure, naming the 1-based source line and the offending token.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: token {token:?}: {kind}")]
pub struct PatternError {
    pub line: usize,
    pub token: String,
    pub kind: PatternErrorKind,
}

impl PatternError {
    fn empty() -> Self {
        PatternError {
            line: 0,
            token: String::new(),
            kind: PatternErrorKind::Empty,
        }
    }

    fn at(line: usize, token: &str, kind: PatternErrorKind) -> Self {
        PatternError {
            line,
            token: token.to_string(),
            kind,
        }
    }
}

/// Parses a whole pattern file: whitespace-separated tokens, `%` comments to
/// end of line. Pattern letters are folded through `fold` so that they live
/// in the same space as folded query words.
pub fn parse_patterns(text: &str, fold: &FoldTable) -> Result<Vec<Pattern>, PatternError> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('%') {
            Some(i) => &raw[..i],
            None => raw,
        };
        for token in line.split_whitespace() {
            out.push(parse_token(token, lineno + 1, fold)?);
        }
    }
    Ok(out)
}

fn parse_token(token: &str, line: usize, fold: &FoldTable) -> Result<Pattern, PatternError> {
    let chars: Vec<char> = token.chars().collect();

    // A digit on the far side of an anchor dot would vote on a gap outside
    // the word, which has no meaning.
    if let Some(dot) = chars.iter().position(|&c| c == '.') {
        if dot > 0 && chars[..dot].iter().all(|c| c.is_ascii_digit()) {
            return Err(PatternError::at(
                line,
                token,
                PatternErrorKind::DigitInAnchor,
            ));
        }
    }
    if let Some(dot) = chars.iter().rposition(|&c| c == '.') {
        if dot + 1 < chars.len() && chars[dot + 1..].iter().all(|c| c.is_ascii_digit()) {
            return Err(PatternError::at(
                line,
                token,
                PatternErrorKind::DigitInAnchor,
            ));
        }
    }

    let anchored_start = chars.first() == Some(&'.');
    let anchored_end = chars.len() > 1 && chars.last() == Some(&'.');
    let inner = &chars[anchored_start as usize..chars.len() - anchored_end as usize];
    if inner.is_empty() {
        return Err(PatternError::at(line, token, PatternErrorKind::Empty));
    }

    let mut letters = Vec::new();
    let mut values = Vec::new();
    let mut pending: Option<u8> = None;
    for &c in inner {
        if let Some(d) = c.to_digit(10) {
            if pending.is_some() {
                return Err(PatternError::at(
                    line,
                    token,
                    PatternErrorKind::AdjacentDigits,
                ));
            }
            pending = Some(d as u8);
        } else if c == '.' {
            return Err(PatternError::at(line, token, PatternErrorKind::InteriorDot));
        } else {
            values.push(pending.take().unwrap_or(0));
            letters.push(fold.fold(Letter::from(c)));
        }
    }
    values.push(pending.take().unwrap_or(0));

    if letters.is_empty() {
        return Err(PatternError::at(line, token, PatternErrorKind::Empty));
    }
    Ok(Pattern {
        letters,
        values,
        anchored_start,
        anchored_end,
    })
}
