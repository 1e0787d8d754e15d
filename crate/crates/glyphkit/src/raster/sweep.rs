//! Membership in the region a pen sweeps along a path.
//!
//! Each path/pen combination reduces to a closed-form test:
//!
//! - segment + disk: distance to the segment at most the radius (a capsule);
//! - segment + polygon: the convex hull of the two translated polygons,
//!   since the Minkowski sum of a segment and a convex set is exactly that;
//! - circle + disk: an annulus;
//! - circle + polygon: the circle meets the reflected pen translated to the
//!   point, decided by comparing the path radius against the minimum and
//!   maximum distance from the circle's center to that polygon.

use crate::raster::geom::{dist_sq_point_segment, Point};
use crate::raster::path::StrokePath;
use crate::raster::pen::{ConvexPolygon, PenShape};

/// A prepared sweep: build once per digitization, query per pixel.
#[derive(Clone, Debug)]
pub(crate) enum SweptRegion {
    Capsule {
        a: Point,
        b: Point,
        radius_sq: f64,
    },
    Hull {
        vertices: Vec<Point>,
    },
    Annulus {
        center: Point,
        inner_sq: f64,
        outer_sq: f64,
    },
    CirclePolygon {
        center: Point,
        radius_sq: f64,
        reflected: ConvexPolygon,
    },
}

impl SweptRegion {
    pub(crate) fn new(path: &StrokePath, pen: &PenShape) -> SweptRegion {
        match (path, pen) {
            (&StrokePath::Segment { start, end }, &PenShape::Disk { radius }) => {
                SweptRegion::Capsule {
                    a: start,
                    b: end,
                    radius_sq: radius * radius,
                }
            }
            (&StrokePath::Segment { start, end }, PenShape::Polygon(poly)) => {
                let mut points: Vec<Point> = Vec::with_capacity(poly.vertices().len() * 2);
                points.extend(poly.vertices().iter().map(|&v| v + start));
                points.extend(poly.vertices().iter().map(|&v| v + end));
                SweptRegion::Hull {
                    vertices: convex_hull(points),
                }
            }
            (&StrokePath::Circle { center, radius }, &PenShape::Disk { radius: r }) => {
                let inner = (radius - r).max(0.0);
                SweptRegion::Annulus {
                    center,
                    inner_sq: inner * inner,
                    outer_sq: (radius + r) * (radius + r),
                }
            }
            (&StrokePath::Circle { center, radius }, PenShape::Polygon(poly)) => {
                SweptRegion::CirclePolygon {
                    center,
                    radius_sq: radius * radius,
                    reflected: poly.reflected(),
                }
            }
        }
    }

    /// Closed containment of `p` in the swept region.
    pub(crate) fn contains(&self, p: Point) -> bool {
        match self {
            &SweptRegion::Capsule { a, b, radius_sq } => {
                dist_sq_point_segment(p, a, b) <= radius_sq
            }
            SweptRegion::Hull { vertices } => {
                let n = vertices.len();
                (0..n).all(|i| {
                    let a = vertices[i];
                    let b = vertices[(i + 1) % n];
                    (b - a).cross(p - a) >= 0.0
                })
            }
            &SweptRegion::Annulus {
                center,
                inner_sq,
                outer_sq,
            } => {
                let d = (p - center).norm_sq();
                inner_sq <= d && d <= outer_sq
            }
            SweptRegion::CirclePolygon {
                center,
                radius_sq,
                reflected,
            } => {
                // Distances from the path center to the reflected pen
                // translated to p; the circle meets the pen iff the path
                // radius separates them.
                let c = *center - p; // work in pen-local coordinates
                let max_sq = reflected
                    .vertices()
                    .iter()
                    .map(|&v| (c - v).norm_sq())
                    .fold(0.0, f64::max);
                if max_sq < *radius_sq {
                    return false;
                }
                let min_sq = if reflected.contains(c) {
                    0.0
                } else {
                    let vs = reflected.vertices();
                    let n = vs.len();
                    (0..n)
                        .map(|i| dist_sq_point_segment(c, vs[i], vs[(i + 1) % n]))
                        .fold(f64::INFINITY, f64::min)
                };
                min_sq <= *radius_sq
            }
        }
    }
}

/// True iff some point of the path, with the pen placed on it, covers
/// `point` (boundary included).
pub fn member(point: Point, path: &StrokePath, pen: &PenShape) -> bool {
    SweptRegion::new(path, pen).contains(point)
}

/// Monotone-chain convex hull, counter-clockwise, collinear points dropped.
fn convex_hull(mut points: Vec<Point>) -> Vec<Point> {
    points.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    points.dedup();
    let n = points.len();
    if n < 3 {
        return points;
    }
    let mut hull: Vec<Point> = Vec::with_capacity(n + 1);
    for pass in 0..2 {
        let start = hull.len() + 1;
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
            Box::new(points.iter())
        } else {
            Box::new(points.iter().rev())
        };
        for &p in iter {
            while hull.len() > start {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if (b - a).cross(p - b) > 0.0 {
                    break;
                }
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}
