//! Pen-swept digitization.
//!
//! A stroke is the region a convex pen covers while traveling along a path.
//! [`digitize`] darkens every pixel whose center lies in that region under a
//! deterministic tie-break, and the metrics in this module measure how
//! uniform the result is — the property that separates the diamond nib from
//! the naive round one.

mod digitize;
mod emit;
mod geom;
mod grid;
mod metrics;
mod path;
mod pen;
mod sweep;

pub use digitize::{auto_bounds, digitize, RasterError, TieBreak};
pub use emit::{emit, parse_pbm_ascii, EmitFormat, PbmParseError};
pub use geom::{Bounds, Point};
pub use grid::{GridBounds, PixelGrid};
pub use metrics::{column_profile, octant_profile, UniformityReport};
pub use path::{PathError, StrokePath};
pub use pen::{parse_pen_file, ConvexPolygon, PenError, PenShape};
pub use sweep::member;
