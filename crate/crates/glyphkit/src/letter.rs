//! Symbol identifiers and case folding.
//!
//! All three engines operate on [`Letter`] values rather than on `char` or
//! bytes, so any alphabet that can be numbered works: 8-bit codepages,
//! Unicode scalars, or private glyph ids from a font.

use std::fmt;

/// A symbol identifier.
///
/// The code space is `u32`, which comfortably exceeds the 65,536 distinct
/// values the engines are required to support. A `Letter` carries no script
/// or casing semantics of its own; see [`FoldTable`] for folding.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    /// Numeric code of this letter.
    pub fn code(self) -> u32 {
        self.0
    }

    /// The `char` this letter denotes, when its code is a Unicode scalar.
    pub fn to_char(self) -> Option<char> {
        char::from_u32(self.0)
    }

    /// Canonical textual form: the character itself when printable, else
    /// `#<decimal>`. This is the syntax rule files use for letters, and the
    /// form reports serialize.
    pub fn display_token(self) -> String {
        match self.to_char() {
            Some(c) if !c.is_whitespace() && !c.is_control() && c != '#' && c != '%' => {
                c.to_string()
            }
            _ => format!("#{}", self.0),
        }
    }
}

impl From<char> for Letter {
    fn from(c: char) -> Self {
        Letter(c as u32)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Letter({})", self.display_token())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_token())
    }
}

/// Convert a string to letters, one per `char`.
pub fn letters_of(text: &str) -> Vec<Letter> {
    text.chars().map(Letter::from).collect()
}

/// Render letters back to text using [`Letter::display_token`].
pub fn render_letters(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.display_token()).collect()
}

/// A per-letter case folding table.
///
/// Words are matched in folded form, so the fold applied to pattern files and
/// the fold applied to query words must be the same table. The default folds
/// ASCII `A`–`Z` to lowercase and leaves every other code untouched; pattern
/// sets for other scripts can supply their own pairs.
#[derive(Clone, Debug)]
pub struct FoldTable {
    overrides: std::collections::HashMap<Letter, Letter>,
    fold_ascii: bool,
}

impl Default for FoldTable {
    fn default() -> Self {
        FoldTable::ascii()
    }
}

impl FoldTable {
    /// ASCII lowercase folding for codes below 128, identity above.
    pub fn ascii() -> Self {
        FoldTable {
            overrides: Default::default(),
            fold_ascii: true,
        }
    }

    /// No folding at all.
    pub fn identity() -> Self {
        FoldTable {
            overrides: Default::default(),
            fold_ascii: false,
        }
    }

    /// Extends the table with explicit `(from, to)` pairs. Pairs win over the
    /// ASCII rule.
    pub fn with_pairs(mut self, pairs: impl IntoIterator<Item = (Letter, Letter)>) -> Self {
        self.overrides.extend(pairs);
        self
    }

    /// Folds one letter.
    pub fn fold(&self, l: Letter) -> Letter {
        if let Some(&to) = self.overrides.get(&l) {
            return to;
        }
        if self.fold_ascii && (b'A' as u32..=b'Z' as u32).contains(&l.0) {
            return Letter(l.0 + 32);
        }
        l
    }

    /// Folds a whole word.
    pub fn fold_word(&self, word: &[Letter]) -> Vec<Letter> {
        word.iter().map(|&l| self.fold(l)).collect()
    }
}
