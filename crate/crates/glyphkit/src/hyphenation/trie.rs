//! The linked pattern trie.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::hyphenation::pattern::Pattern;
use crate::letter::Letter;

/// One step along a trie path: either a word-boundary marker or a letter.
///
/// Anchored patterns are stored with explicit `Boundary` keys, so a pattern
/// `.ach4` and a pattern `ach4` occupy different paths and keep separate
/// value vectors.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TrieKey {
    Boundary,
    Letter(Letter),
}

/// The key sequence a pattern occupies in a trie.
pub(crate) fn pattern_keys(p: &Pattern) -> Vec<TrieKey> {
    let mut keys = Vec::with_capacity(p.letters.len() + 2);
    if p.anchored_start {
        keys.push(TrieKey::Boundary);
    }
    keys.extend(p.letters.iter().map(|&l| TrieKey::Letter(l)));
    if p.anchored_end {
        keys.push(TrieKey::Boundary);
    }
    keys
}

/// The word extended with boundary markers on both sides, which is the text
/// patterns actually slide across.
pub(crate) fn extended_word(word: &[Letter]) -> Vec<TrieKey> {
    let mut ext = Vec::with_capacity(word.len() + 2);
    ext.push(TrieKey::Boundary);
    ext.extend(word.iter().map(|&l| TrieKey::Letter(l)));
    ext.push(TrieKey::Boundary);
    ext
}

/// Anything that can report pattern matches against an extended word.
///
/// `for_each_match(ext, start, f)` must call `f(base, values)` once per
/// stored pattern that matches `ext` beginning at index `start`, where `base`
/// is the extended-word index of the pattern's first *letter* (one past
/// `start` when the match begins on the boundary marker). Both trie forms
/// implement this with identical results; that equivalence is what the packed
/// form is tested against.
pub trait PatternMatcher {
    fn for_each_match(&self, ext: &[TrieKey], start: usize, f: &mut dyn FnMut(usize, &[u8]));
}

#[derive(Clone, Debug, Default)]
struct Node {
    children: BTreeMap<TrieKey, u32>,
    values: Option<Box<[u8]>>,
}

/// A linked trie over pattern key sequences.
///
/// Construction is single-threaded; a finished trie is immutable from the
/// query side and safe to share across threads.
#[derive(Clone, Debug)]
pub struct PatternTrie {
    nodes: Vec<Node>,
    pattern_count: usize,
    max_depth: usize,
}

/// Size figures for the stats output.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrieStats {
    pub patterns: usize,
    pub nodes: usize,
    pub max_depth: usize,
}

impl Default for PatternTrie {
    fn default() -> Self {
        Self::new()
    }
}

impl PatternTrie {
    pub fn new() -> Self {
        PatternTrie {
            nodes: vec![Node::default()],
            pattern_count: 0,
            max_depth: 0,
        }
    }

    /// Inserts one pattern. Returns the value vector it displaced when the
    /// same letter string with the same anchors was already present.
    pub fn insert(&mut self, p: &Pattern) -> Option<Box<[u8]>> {
        let keys = pattern_keys(p);
        self.max_depth = self.max_depth.max(keys.len());
        let mut at = 0usize;
        for key in keys {
            let next = match self.nodes[at].children.get(&key) {
                Some(&n) => n as usize,
                None => {
                    let n = self.nodes.len();
                    self.nodes.push(Node::default());
                    self.nodes[at].children.insert(key, n as u32);
                    n
                }
            };
            at = next;
        }
        let old = self.nodes[at]
            .values
            .replace(p.values.clone().into_boxed_slice());
        if old.is_none() {
            self.pattern_count += 1;
        }
        old
    }

    /// The value vector stored for exactly this letter string and anchor
    /// pair, if any.
    pub fn lookup(&self, p: &Pattern) -> Option<&[u8]> {
        let mut at = 0usize;
        for key in pattern_keys(p) {
            at = *self.nodes[at].children.get(&key)? as usize;
        }
        self.nodes[at].values.as_deref()
    }

    pub fn stats(&self) -> TrieStats {
        TrieStats {
            patterns: self.pattern_count,
            nodes: self.nodes.len(),
            max_depth: self.max_depth,
        }
    }

    pub fn pattern_count(&self) -> usize {
        self.pattern_count
    }

    /// Children and stored values of one node, for the packer.
    pub(crate) fn node(&self, idx: usize) -> (&BTreeMap<TrieKey, u32>, Option<&[u8]>) {
        let n = &self.nodes[idx];
        (&n.children, n.values.as_deref())
    }
}

impl PatternMatcher for PatternTrie {
    fn for_each_match(&self, ext: &[TrieKey], start: usize, f: &mut dyn FnMut(usize, &[u8])) {
        let base = start + usize::from(matches!(ext[start], TrieKey::Boundary));
        let mut at = 0usize;
        for key in &ext[start..] {
            match self.nodes[at].children.get(key) {
                Some(&n) => at = n as usize,
                None => return,
            }
            if let Some(values) = self.nodes[at].values.as_deref() {
                f(base, values);
            }
        }
    }
}

/// Builds a trie from parsed patterns. Duplicate (letter string, anchors)
/// entries are resolved last-wins; each displaced pattern produces one
/// warning string so callers can surface them.
pub fn build_trie(patterns: &[Pattern]) -> (PatternTrie, Vec<String>) {
    let mut trie = PatternTrie::new();
    let mut warnings = Vec::new();
    for p in patterns {
        if let Some(old) = trie.insert(p) {
            warnings.push(format!(
                "duplicate pattern {:?}: replacing values {:?} with {:?}",
                p.to_token(),
                &old[..],
                &p.values[..],
            ));
        }
    }
    (trie, warnings)
}
