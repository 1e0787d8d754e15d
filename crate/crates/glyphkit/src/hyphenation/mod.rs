//! Pattern hyphenation.
//!
//! Break opportunities are found by sliding a set of patterns across the
//! word (extended with boundary markers), taking the maximum digit each
//! pattern contributes to each inter-letter gap, and permitting a break
//! exactly where the resulting value is odd and the margin minima hold.
//!
//! The engine is alphabet-agnostic: it sees only [`Letter`] identifiers, so
//! pattern sets for any language plug in unchanged.

mod packed;
mod pattern;
mod trie;

pub use packed::{pack_trie, PackedTrie};
pub use pattern::{Pattern, PatternError, PatternErrorKind};
pub use trie::{build_trie, PatternMatcher, PatternTrie, TrieKey, TrieStats};

use std::collections::{BTreeSet, HashMap};

use crate::letter::{FoldTable, Letter};

/// Conventional typesetting defaults for the margin minima.
pub const DEFAULT_LEFT_MIN: usize = 2;
pub const DEFAULT_RIGHT_MIN: usize = 3;

/// Parses a pattern file (re-export of the token grammar parser).
pub fn parse_patterns(text: &str, fold: &FoldTable) -> Result<Vec<Pattern>, PatternError> {
    pattern::parse_patterns(text, fold)
}

/// The inter-letter values of `word` under a pattern set.
///
/// Returns `word.len() - 1` values; entry `i` is the maximum digit any
/// matching pattern aligns with the gap between letters `i` and `i + 1`.
/// Values that land before the first or after the last letter are computed
/// by the same rule but have no interior gap to land in and are dropped.
/// The word must already be folded.
pub fn interletter_values(word: &[Letter], matcher: &impl PatternMatcher) -> Vec<u8> {
    let n = word.len();
    let mut gaps = vec![0u8; n.saturating_sub(1)];
    if n == 0 {
        return gaps;
    }
    let ext = trie::extended_word(word);
    for start in 0..ext.len() {
        matcher.for_each_match(&ext, start, &mut |base, values| {
            for (k, &v) in values.iter().enumerate() {
                // values[k] sits just before extended position base + k;
                // interior gap i sits just before extended position i + 2.
                if let Some(i) = (base + k).checked_sub(2) {
                    if i < n - 1 && v > gaps[i] {
                        gaps[i] = v;
                    }
                }
            }
        });
    }
    gaps
}

/// A hyphenation answer: the word as queried, its gap values, and the gaps
/// where a break is permitted.
///
/// Breaks are 0-based gap indices: break `i` falls between letters `i` and
/// `i + 1`. For words answered from the exception dictionary the pattern
/// machinery is bypassed entirely, so `gap_values` stays all zero and
/// `breaks` is the stored set verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyphenationResult {
    pub word: Vec<Letter>,
    pub gap_values: Vec<u8>,
    pub breaks: BTreeSet<usize>,
}

impl HyphenationResult {
    /// Renders the word with `marker` inserted at each permitted break.
    pub fn render(&self, marker: char) -> String {
        render_breaks(&self.word, &self.breaks, marker)
    }
}

/// Inserts `marker` after letter `i` for each break `i`.
pub fn render_breaks(word: &[Letter], breaks: &BTreeSet<usize>, marker: char) -> String {
    let mut out = String::new();
    for (i, l) in word.iter().enumerate() {
        out.push_str(&l.display_token());
        if breaks.contains(&i) {
            out.push(marker);
        }
    }
    out
}

/// Explicit per-word break sets that bypass pattern matching.
#[derive(Clone, Debug, Default)]
pub struct ExceptionDict {
    entries: HashMap<Vec<Letter>, BTreeSet<usize>>,
}

impl ExceptionDict {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stores a break set for a folded word, replacing any previous entry.
    pub fn insert(&mut self, word: Vec<Letter>, breaks: BTreeSet<usize>) {
        self.entries.insert(word, breaks);
    }

    pub fn get(&self, word: &[Letter]) -> Option<&BTreeSet<usize>> {
        self.entries.get(word)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExceptionErrorKind {
    #[error("leading hyphen")]
    LeadingHyphen,
    #[error("trailing hyphen")]
    TrailingHyphen,
    #[error("double hyphen")]
    DoubleHyphen,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: word {word:?}: {kind}")]
pub struct ExceptionError {
    pub line: usize,
    pub word: String,
    pub kind: ExceptionErrorKind,
}

/// Parses an exception file: whitespace-separated words with `-` at each
/// permitted break, `%` comments. Words are folded and the hyphens stripped;
/// a hyphen after `k` letters becomes break index `k - 1`.
pub fn parse_exceptions(text: &str, fold: &FoldTable) -> Result<ExceptionDict, ExceptionError> {
    let mut dict = ExceptionDict::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('%') {
            Some(i) => &raw[..i],
            None => raw,
        };
        for token in line.split_whitespace() {
            let err = |kind| ExceptionError {
                line: lineno + 1,
                word: token.to_string(),
                kind,
            };
            let mut word = Vec::new();
            let mut breaks = BTreeSet::new();
            let mut last_was_hyphen = true; // token start counts: leading '-' is an error
            for c in token.chars() {
                if c == '-' {
                    if last_was_hyphen {
                        return Err(err(if word.is_empty() {
                            ExceptionErrorKind::LeadingHyphen
                        } else {
                            ExceptionErrorKind::DoubleHyphen
                        }));
                    }
                    breaks.insert(word.len() - 1);
                    last_was_hyphen = true;
                } else {
                    word.push(fold.fold(Letter::from(c)));
                    last_was_hyphen = false;
                }
            }
            if last_was_hyphen {
                return Err(err(ExceptionErrorKind::TrailingHyphen));
            }
            dict.insert(word, breaks);
        }
    }
    Ok(dict)
}

/// Hyphenates one (already folded) word.
///
/// Exception entries win outright. Otherwise a break is permitted at gap `i`
/// when `gap_values[i]` is odd, at least `left_min` letters precede it and at
/// least `right_min` follow it. Margins below 1 are treated as 1. The word
/// itself is never altered.
pub fn hyphenate(
    word: &[Letter],
    matcher: &impl PatternMatcher,
    left_min: usize,
    right_min: usize,
    exceptions: &ExceptionDict,
) -> HyphenationResult {
    let n = word.len();
    if n == 0 {
        return HyphenationResult {
            word: Vec::new(),
            gap_values: Vec::new(),
            breaks: BTreeSet::new(),
        };
    }
    if let Some(stored) = exceptions.get(word) {
        return HyphenationResult {
            word: word.to_vec(),
            gap_values: vec![0; n - 1],
            breaks: stored.clone(),
        };
    }
    let left_min = left_min.max(1);
    let right_min = right_min.max(1);
    let gap_values = interletter_values(word, matcher);
    let breaks = gap_values
        .iter()
        .enumerate()
        .filter(|&(i, v)| v % 2 == 1 && i + 1 >= left_min && n - i > right_min)
        .map(|(i, _)| i)
        .collect();
    HyphenationResult {
        word: word.to_vec(),
        gap_values,
        breaks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::letters_of;

    fn demo_trie() -> PatternTrie {
        let pats = parse_patterns(
            "hy3ph he2n hena4 hen5at 1na n2at 1tio 2io o2n",
            &FoldTable::ascii(),
        )
        .unwrap();
        build_trie(&pats).0
    }

    #[test]
    fn demo_gap_values() {
        let trie = demo_trie();
        let gaps = interletter_values(&letters_of("hyphenation"), &trie);
        assert_eq!(gaps, vec![0, 3, 0, 0, 2, 5, 4, 2, 0, 2]);
    }

    #[test]
    fn demo_breaks_and_rendering() {
        let trie = demo_trie();
        let r = hyphenate(
            &letters_of("hyphenation"),
            &trie,
            2,
            3,
            &ExceptionDict::new(),
        );
        assert_eq!(r.breaks, BTreeSet::from([1, 5]));
        assert_eq!(r.render('-'), "hy-phen-ation");
        assert_eq!(r.word, letters_of("hyphenation"));
    }

    #[test]
    fn empty_trie_means_all_zero_and_no_breaks() {
        let (trie, _) = build_trie(&[]);
        let gaps = interletter_values(&letters_of("anything"), &trie);
        assert_eq!(gaps, vec![0; 7]);
        let r = hyphenate(&letters_of("foo"), &trie, 2, 3, &ExceptionDict::new());
        assert!(r.breaks.is_empty());
    }

    #[test]
    fn empty_word_is_empty_result() {
        let (trie, _) = build_trie(&[]);
        let r = hyphenate(&[], &trie, 2, 3, &ExceptionDict::new());
        assert!(r.word.is_empty() && r.gap_values.is_empty() && r.breaks.is_empty());
    }

    #[test]
    fn boundary_value_has_no_interior_gap() {
        let pats = parse_patterns("1na", &FoldTable::ascii()).unwrap();
        let (trie, _) = build_trie(&pats);
        // The 1 lands before the 'n', which for the word "na" is the word
        // boundary, not an interior gap.
        assert_eq!(interletter_values(&letters_of("na"), &trie), vec![0]);
    }

    #[test]
    fn short_words_get_no_breaks() {
        let pats = parse_patterns("a1b a1 1b", &FoldTable::ascii()).unwrap();
        let (trie, _) = build_trie(&pats);
        for word in ["ab", "abab", "a"] {
            let w = letters_of(word);
            if w.len() < 2 + 3 {
                let r = hyphenate(&w, &trie, 2, 3, &ExceptionDict::new());
                assert!(r.breaks.is_empty(), "{word}");
            }
        }
    }

    #[test]
    fn margins_trim_the_break_set() {
        let pats = parse_patterns("a1b 1ba b1a", &FoldTable::ascii()).unwrap();
        let (trie, _) = build_trie(&pats);
        let w = letters_of("ababab");
        let loose = hyphenate(&w, &trie, 1, 1, &ExceptionDict::new());
        let tight = hyphenate(&w, &trie, 2, 3, &ExceptionDict::new());
        assert!(tight.breaks.is_subset(&loose.breaks));
        for &i in &loose.breaks {
            assert_eq!(w.len().min(6), 6);
            assert!(loose.gap_values[i] % 2 == 1);
        }
    }

    #[test]
    fn duplicate_pattern_last_wins_with_warning() {
        let pats = parse_patterns("a1 a2", &FoldTable::ascii()).unwrap();
        let (trie, warnings) = build_trie(&pats);
        assert_eq!(warnings.len(), 1);
        assert_eq!(trie.lookup(&pats[1]), Some(&[0u8, 2][..]));
        assert_eq!(trie.pattern_count(), 1);
    }

    #[test]
    fn lookup_returns_each_inserted_vector() {
        let pats = parse_patterns("hy3ph .hy4 h2o. .h1o.", &FoldTable::ascii()).unwrap();
        let (trie, _) = build_trie(&pats);
        for p in &pats {
            assert_eq!(trie.lookup(p), Some(&p.values[..]), "{}", p.to_token());
        }
    }

    #[test]
    fn anchor_pairs_store_separately() {
        let pats = parse_patterns("ab1 .ab2 ab3. .ab4.", &FoldTable::ascii()).unwrap();
        let (trie, warnings) = build_trie(&pats);
        assert!(warnings.is_empty());
        assert_eq!(trie.pattern_count(), 4);
        assert_eq!(trie.lookup(&pats[0]), Some(&[0u8, 0, 1][..]));
        assert_eq!(trie.lookup(&pats[3]), Some(&[0u8, 0, 4][..]));
    }

    #[test]
    fn anchored_matches_only_at_their_end() {
        let pats = parse_patterns(".a1b c1d. e1f", &FoldTable::ascii()).unwrap();
        let (trie, _) = build_trie(&pats);
        assert_eq!(
            interletter_values(&letters_of("abcd"), &trie),
            vec![1, 0, 1]
        );
        // Same substrings away from their anchors: no contribution.
        assert_eq!(interletter_values(&letters_of("xabcdx"), &trie), vec![0; 5]);
        // Unanchored matches anywhere.
        assert_eq!(
            interletter_values(&letters_of("xefx"), &trie),
            vec![0, 1, 0]
        );
    }

    #[test]
    fn exceptions_bypass_patterns() {
        let (trie, _) = build_trie(&[]);
        let mut exceptions = ExceptionDict::new();
        exceptions.insert(letters_of("table"), BTreeSet::from([1]));
        let r = hyphenate(&letters_of("table"), &trie, 2, 3, &exceptions);
        assert_eq!(r.breaks, BTreeSet::from([1]));
        assert_eq!(r.render('-'), "ta-ble");
        // A stored set is returned verbatim even where patterns would say no.
        exceptions.insert(letters_of("xy"), BTreeSet::from([0]));
        let r = hyphenate(&letters_of("xy"), &trie, 2, 3, &exceptions);
        assert_eq!(r.breaks, BTreeSet::from([0]));
    }

    #[test]
    fn exception_parsing() {
        let fold = FoldTable::ascii();
        let dict = parse_exceptions("ta-ble a-b c-d % comment\n", &fold).unwrap();
        assert_eq!(dict.len(), 3);
        assert_eq!(dict.get(&letters_of("table")), Some(&BTreeSet::from([1])));
        assert_eq!(dict.get(&letters_of("ab")), Some(&BTreeSet::from([0])));
        assert_eq!(dict.get(&letters_of("cd")), Some(&BTreeSet::from([0])));
        assert!(parse_exceptions("", &fold).unwrap().is_empty());
    }

    #[test]
    fn exception_roundtrips_through_rendering() {
        let fold = FoldTable::ascii();
        let dict = parse_exceptions("par-tic-u-lar", &fold).unwrap();
        let word = letters_of("particular");
        let breaks = dict.get(&word).unwrap();
        assert_eq!(render_breaks(&word, breaks, '-'), "par-tic-u-lar");
    }

    #[test]
    fn exception_parse_errors() {
        let fold = FoldTable::ascii();
        for (text, kind) in [
            ("-ab", ExceptionErrorKind::LeadingHyphen),
            ("ab-", ExceptionErrorKind::TrailingHyphen),
            ("a--b", ExceptionErrorKind::DoubleHyphen),
            ("-", ExceptionErrorKind::LeadingHyphen),
        ] {
            let err = parse_exceptions(text, &fold).unwrap_err();
            assert_eq!(err.kind, kind, "{text}");
        }
    }

    #[test]
    fn exception_words_are_folded() {
        let fold = FoldTable::ascii();
        let dict = parse_exceptions("Ta-Ble", &fold).unwrap();
        assert!(dict.get(&letters_of("table")).is_some());
    }
}
