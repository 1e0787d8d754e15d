//! Digitization: pixel-center membership in the swept region.

use crate::raster::geom::Point;
use crate::raster::grid::{GridBounds, PixelGrid};
use crate::raster::path::StrokePath;
use crate::raster::pen::PenShape;
use crate::raster::sweep::SweptRegion;

/// Upper bound on grid size, to catch runaway geometry before it allocates.
const MAX_PIXELS: u64 = 1 << 26;

/// The deterministic boundary tie-break.
///
/// Membership is evaluated at `center + (epsilon, epsilon^2)` instead of the
/// center itself, a lower-left half-open convention: a center exactly on the
/// region boundary is counted on exactly one side, the same side every run.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct TieBreak {
    pub epsilon: f64,
}

impl TieBreak {
    /// Shift small enough never to cross a second boundary for sane inputs.
    pub const DEFAULT_EPSILON: f64 = 1.0 / (1 << 20) as f64;

    pub fn offset(&self) -> Point {
        Point::new(self.epsilon, self.epsilon * self.epsilon)
    }

    /// No perturbation; exact closed membership of the centers.
    pub fn exact() -> TieBreak {
        TieBreak { epsilon: 0.0 }
    }
}

impl Default for TieBreak {
    fn default() -> Self {
        TieBreak {
            epsilon: Self::DEFAULT_EPSILON,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RasterError {
    #[error("degenerate grid bounds ({width} x {height})")]
    DegenerateBounds { width: u32, height: u32 },
    #[error("grid of {0} pixels exceeds the {MAX_PIXELS}-pixel cap")]
    GridTooLarge(u64),
}

/// The sweep's bounding box (path box expanded by the pen box), padded by one
/// pixel on every side so boundary pixels are never clipped.
pub fn auto_bounds(path: &StrokePath, pen: &PenShape) -> GridBounds {
    let b = path.bounds().expand_by(pen.bounds());
    let x0 = b.min.x.floor() as i64 - 1;
    let y0 = b.min.y.floor() as i64 - 1;
    let x1 = b.max.x.ceil() as i64 + 1;
    let y1 = b.max.y.ceil() as i64 + 1;
    GridBounds {
        x0,
        y0,
        width: (x1 - x0).max(1) as u32,
        height: (y1 - y0).max(1) as u32,
    }
}

/// Digitizes the stroke: a pixel is dark iff its (tie-broken) center lies in
/// the region the pen sweeps along the path.
///
/// When `bounds` is omitted, [`auto_bounds`] is used. Internally the path is
/// shifted by an integer anchor derived from its own bounding box before any
/// arithmetic, so translating path and bounds by the same integer vector
/// translates the output bitmap exactly, bit for bit.
pub fn digitize(
    path: &StrokePath,
    pen: &PenShape,
    bounds: Option<GridBounds>,
    tie: TieBreak,
) -> Result<PixelGrid, RasterError> {
    let bounds = bounds.unwrap_or_else(|| auto_bounds(path, pen));
    if bounds.width == 0 || bounds.height == 0 {
        return Err(RasterError::DegenerateBounds {
            width: bounds.width,
            height: bounds.height,
        });
    }
    let pixels = bounds.width as u64 * bounds.height as u64;
    if pixels > MAX_PIXELS {
        return Err(RasterError::GridTooLarge(pixels));
    }

    let path_box = path.bounds();
    let anchor = Point::new(path_box.min.x.floor(), path_box.min.y.floor());
    let local = path.translate(-anchor);
    let region = SweptRegion::new(&local, pen);
    let off = tie.offset();

    let mut grid = PixelGrid::new(bounds);
    for j in 0..bounds.height as i64 {
        for i in 0..bounds.width as i64 {
            let gi = bounds.x0 + i;
            let gj = bounds.y0 + j;
            let center = Point::new(
                (gi as f64 - anchor.x) + 0.5 + off.x,
                (gj as f64 - anchor.y) + 0.5 + off.y,
            );
            if region.contains(center) {
                grid.set(gi, gj, true);
            }
        }
    }
    Ok(grid)
}
