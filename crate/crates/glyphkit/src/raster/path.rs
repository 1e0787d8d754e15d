//! Stroke paths: the 1-dimensional tracks a pen sweeps along.

use crate::raster::geom::{Bounds, Point};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PathError {
    #[error("path coordinates must be finite")]
    NonFinite,
    #[error("circle radius must be positive and finite, got {0}")]
    BadRadius(f64),
}

/// A segment or a full circle. A zero-length segment is accepted and stamps
/// the pen at a single point.
#[derive(Copy, Clone, Debug, PartialEq)]
pub enum StrokePath {
    Segment { start: Point, end: Point },
    Circle { center: Point, radius: f64 },
}

impl StrokePath {
    pub fn segment(start: Point, end: Point) -> Result<StrokePath, PathError> {
        if !start.is_finite() || !end.is_finite() {
            return Err(PathError::NonFinite);
        }
        Ok(StrokePath::Segment { start, end })
    }

    pub fn circle(center: Point, radius: f64) -> Result<StrokePath, PathError> {
        if !center.is_finite() {
            return Err(PathError::NonFinite);
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(PathError::BadRadius(radius));
        }
        Ok(StrokePath::Circle { center, radius })
    }

    pub fn bounds(&self) -> Bounds {
        match *self {
            StrokePath::Segment { start, end } => {
                Bounds::of_points([start, end]).expect("two points")
            }
            StrokePath::Circle { center, radius } => Bounds {
                min: Point::new(center.x - radius, center.y - radius),
                max: Point::new(center.x + radius, center.y + radius),
            },
        }
    }

    pub fn translate(&self, v: Point) -> StrokePath {
        match *self {
            StrokePath::Segment { start, end } => StrokePath::Segment {
                start: start + v,
                end: end + v,
            },
            StrokePath::Circle { center, radius } => StrokePath::Circle {
                center: center + v,
                radius,
            },
        }
    }
}
