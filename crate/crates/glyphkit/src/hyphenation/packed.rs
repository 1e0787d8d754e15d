//! The packed trie: every node's child array interleaved into one flat cell
//! array, with per-cell letter tags to verify transitions.
//!
//! Keys are first mapped onto a dense internal alphabet so the child arrays
//! stay small for sparse letter codes (full Unicode, private glyph ids).
//! Placement is first-fit: each child set is slid along the array to the
//! lowest base where all of its slots are free. Any correct placement is
//! acceptable; queries must agree with the linked trie on every input, and
//! the tests enforce exactly that.

use std::collections::HashMap;

use crate::hyphenation::trie::{PatternMatcher, PatternTrie, TrieKey, TrieStats};

const FREE: u32 = 0; // tag of an unoccupied cell; dense codes start at 1
const NONE: u32 = u32::MAX; // "no child array" / "no values" sentinel

#[derive(Copy, Clone, Debug)]
struct Cell {
    tag: u32,
    values: u32,
    child_base: u32,
}

const EMPTY_CELL: Cell = Cell {
    tag: FREE,
    values: NONE,
    child_base: NONE,
};

/// Flat-array realization of a [`PatternTrie`].
#[derive(Clone, Debug)]
pub struct PackedTrie {
    cells: Vec<Cell>,
    value_store: Vec<Box<[u8]>>,
    dense: HashMap<TrieKey, u32>,
    root_base: u32,
    stats: TrieStats,
}

impl PackedTrie {
    /// Number of cells in the flat array.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Stats of the source trie; the packed array length is [`Self::len`].
    pub fn stats(&self) -> TrieStats {
        self.stats
    }
}

/// Packs a finalized linked trie. The result answers every query the linked
/// trie answers, identically.
pub fn pack_trie(trie: &PatternTrie) -> PackedTrie {
    // Dense alphabet: all keys that occur anywhere in the trie, in order.
    let mut keys = std::collections::BTreeSet::new();
    let mut stack = vec![0usize];
    while let Some(at) = stack.pop() {
        let (children, _) = trie.node(at);
        for (&k, &n) in children {
            keys.insert(k);
            stack.push(n as usize);
        }
    }
    let dense: HashMap<TrieKey, u32> = keys
        .iter()
        .enumerate()
        .map(|(i, &k)| (k, i as u32 + 1))
        .collect();

    let mut cells: Vec<Cell> = Vec::new();
    let mut occupied: Vec<bool> = Vec::new(); // free-slot bookkeeping, packing only
                                              // A base may serve only one node. Two nodes sharing a base would accept
                                              // each other's transitions whenever their tags coincide.
    let mut taken: Vec<bool> = Vec::new();
    let mut value_store: Vec<Box<[u8]>> = Vec::new();

    // Breadth-first placement: parents first, so each node's cell exists by
    // the time its child array is placed and its child_base gets patched.
    let mut queue = std::collections::VecDeque::new();
    queue.push_back((0usize, NONE)); // (trie node, cell slot of that node)
    let mut root_base = NONE;
    while let Some((node, slot)) = queue.pop_front() {
        let (children, _) = trie.node(node);
        if children.is_empty() {
            continue;
        }
        let codes: Vec<u32> = children.keys().map(|k| dense[k]).collect();
        let base = first_fit(&occupied, &taken, &codes);
        if base as usize >= taken.len() {
            taken.resize(base as usize + 1, false);
        }
        taken[base as usize] = true;
        let needed = base as usize + *codes.last().unwrap() as usize + 1;
        if needed > cells.len() {
            cells.resize(needed, EMPTY_CELL);
            occupied.resize(needed, false);
        }
        for (&key, &child) in children {
            let code = dense[&key];
            let at = base as usize + code as usize;
            debug_assert!(!occupied[at]);
            occupied[at] = true;
            let (_, child_values) = trie.node(child as usize);
            let values = match child_values {
                Some(v) => {
                    value_store.push(v.into());
                    value_store.len() as u32 - 1
                }
                None => NONE,
            };
            cells[at] = Cell {
                tag: code,
                values,
                child_base: NONE,
            };
            queue.push_back((child as usize, at as u32));
        }
        if slot == NONE {
            root_base = base;
        } else {
            cells[slot as usize].child_base = base;
        }
    }

    PackedTrie {
        cells,
        value_store,
        dense,
        root_base,
        stats: trie.stats(),
    }
}

fn first_fit(occupied: &[bool], taken: &[bool], codes: &[u32]) -> u32 {
    'base: for base in 0..=occupied.len() {
        if matches!(taken.get(base), Some(true)) {
            continue;
        }
        for &c in codes {
            if matches!(occupied.get(base + c as usize), Some(true)) {
                continue 'base;
            }
        }
        return base as u32;
    }
    unreachable!("base = occupied.len() conflicts with nothing")
}

impl PatternMatcher for PackedTrie {
    fn for_each_match(&self, ext: &[TrieKey], start: usize, f: &mut dyn FnMut(usize, &[u8])) {
        let base = start + usize::from(matches!(ext[start], TrieKey::Boundary));
        let mut at = self.root_base;
        for key in &ext[start..] {
            if at == NONE {
                return;
            }
            let Some(&code) = self.dense.get(key) else {
                return;
            };
            let Some(cell) = self.cells.get(at as usize + code as usize) else {
                return;
            };
            if cell.tag != code {
                return;
            }
            if cell.values != NONE {
                f(base, &self.value_store[cell.values as usize]);
            }
            at = cell.child_base;
        }
    }
}
