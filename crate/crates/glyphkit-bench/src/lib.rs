//! Deterministic input builders shared by the benchmark targets.

use glyphkit::hyphenation::{build_trie, parse_patterns, PatternTrie};
use glyphkit::letter::{letters_of, FoldTable, Letter};
use glyphkit::ligature::{LigOp, LigProgram};

pub const PATTERN_FILE: &str = include_str!("../../../data/patterns/en-basic.pat");

/// The bundled pattern set, compiled.
pub fn english_trie() -> PatternTrie {
    let fold = FoldTable::ascii();
    let patterns = parse_patterns(PATTERN_FILE, &fold).expect("bundled patterns parse");
    build_trie(&patterns).0
}

/// A paragraph's worth of query words.
pub fn word_list() -> Vec<Vec<Letter>> {
    "hyphenation international understanding algorithm determination typesetting \
     resolution uniformity management wonderful extensive probability paragraph \
     considerable representation demonstration configuration approximately"
        .split_whitespace()
        .map(letters_of)
        .collect()
}

/// A loop-free rewrite program with deep keep-both nesting, the worst case
/// the memoized checker is built for.
pub fn nested_program(depth: usize) -> LigProgram {
    let mut program = LigProgram::new();
    let letter = |i: usize| Letter('a' as u32 + i as u32);
    for i in 0..depth {
        program
            .add_rule(letter(0), letter(i), LigOp::KeepBoth, letter(i + 1))
            .expect("distinct pairs");
    }
    program
}
