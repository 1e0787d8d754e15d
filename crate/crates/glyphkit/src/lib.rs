//! glyphkit: three small text-and-raster engines that grew out of digital
//! typesetting practice.
//!
//! - [`hyphenation`]: Liang-style pattern hyphenation over a linked or packed
//!   trie, with exception dictionaries and margin minima.
//! - [`ligature`]: deterministic pair-rewrite programs (nine operation
//!   kinds), a cursor simulator, the recursive pair function they induce, and
//!   a linear-time loop checker built on depth-first search.
//! - [`raster`]: digitization of pen-swept segments and circles onto a pixel
//!   grid, with the uniformity metrics that separate good pens from bad ones.
//!
//! All engines are pure: given the same inputs they produce the same outputs,
//! byte for byte. Finished artifacts (tries, programs, grids) are immutable
//! and can be shared across threads freely.

pub mod hyphenation;
pub mod letter;
pub mod ligature;
pub mod raster;

pub use letter::{letters_of, render_letters, FoldTable, Letter};
