//! Pen shapes: disks and strictly convex polygons around the origin.

use crate::raster::geom::{Bounds, Point};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PenError {
    #[error("a polygon pen needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {0} is not finite")]
    NonFiniteVertex(usize),
    #[error("vertices are ordered clockwise; list them counter-clockwise")]
    Clockwise,
    #[error("polygon is not strictly convex at vertex {0}")]
    NotConvex(usize),
    #[error("the origin must lie strictly inside the pen")]
    OriginOutside,
    #[error("disk radius must be positive and finite, got {0}")]
    BadRadius(f64),
    #[error("unknown pen name {0:?} (expected diamond, disk or octagon)")]
    UnknownName(String),
    #[error("pen file line {line}: {message}")]
    File { line: usize, message: String },
}

/// A strictly convex polygon, counter-clockwise, origin strictly inside.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Validates and adopts the vertex list. Clockwise input is rejected, not
    /// silently reversed, so that a mistyped pen file is noticed.
    pub fn new(vertices: Vec<Point>) -> Result<ConvexPolygon, PenError> {
        if vertices.len() < 3 {
            return Err(PenError::TooFewVertices(vertices.len()));
        }
        if let Some(i) = vertices.iter().position(|v| !v.is_finite()) {
            return Err(PenError::NonFiniteVertex(i));
        }
        let n = vertices.len();
        let mut signed_area = 0.0;
        for i in 0..n {
            signed_area += vertices[i].cross(vertices[(i + 1) % n]);
        }
        if signed_area < 0.0 {
            return Err(PenError::Clockwise);
        }
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            // Strict convexity also rules out collinear triples.
            if (b - a).cross(c - b) <= 0.0 {
                return Err(PenError::NotConvex((i + 1) % n));
            }
        }
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            if (b - a).cross(Point::ORIGIN - a) <= 0.0 {
                return Err(PenError::OriginOutside);
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Closed containment: boundary points count as inside.
    pub fn contains(&self, p: Point) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            (b - a).cross(p - a) >= 0.0
        })
    }

    /// The polygon reflected through the origin (a 180-degree rotation, so
    /// orientation is preserved).
    pub fn reflected(&self) -> ConvexPolygon {
        let n = self.vertices.len();
        // Negate and re-walk from the same relative order; rotation by pi
        // keeps counter-clockwise winding.
        let vertices = (0..n).map(|i| -self.vertices[i]).collect();
        ConvexPolygon { vertices }
    }

    pub fn bounds(&self) -> Bounds {
        Bounds::of_points(self.vertices.iter().copied()).expect("at least 3 vertices")
    }
}

/// A pen nib: the shape swept along a stroke path.
#[derive(Clone, Debug, PartialEq)]
pub enum PenShape {
    Disk { radius: f64 },
    Polygon(ConvexPolygon),
}

impl PenShape {
    /// The one-pixel-tall diamond. Strokes of slope at most 1 drawn with it
    /// digitize to exactly one dark pixel per column.
    pub fn diamond() -> PenShape {
        PenShape::Polygon(
            ConvexPolygon::new(vec![
                Point::new(0.5, 0.0),
                Point::new(0.0, 0.5),
                Point::new(-0.5, 0.0),
                Point::new(0.0, -0.5),
            ])
            .expect("diamond is valid"),
        )
    }

    /// The diameter-1 disk, i.e. the naive round nib the diamond replaces.
    pub fn unit_disk() -> PenShape {
        PenShape::Disk { radius: 0.5 }
    }

    /// A disk pen of arbitrary radius.
    pub fn disk(radius: f64) -> Result<PenShape, PenError> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(PenError::BadRadius(radius));
        }
        Ok(PenShape::Disk { radius })
    }

    /// The bundled example octagon, 3 pixels wide, suited to strokes a bit
    /// under 3 pixels thick. No optimality is claimed for it.
    pub fn octagon() -> PenShape {
        PenShape::Polygon(
            ConvexPolygon::new(vec![
                Point::new(1.5, 0.5),
                Point::new(0.5, 1.5),
                Point::new(-0.5, 1.5),
                Point::new(-1.5, 0.5),
                Point::new(-1.5, -0.5),
                Point::new(-0.5, -1.5),
                Point::new(0.5, -1.5),
                Point::new(1.5, -0.5),
            ])
            .expect("octagon is valid"),
        )
    }

    pub fn polygon(vertices: Vec<Point>) -> Result<PenShape, PenError> {
        Ok(PenShape::Polygon(ConvexPolygon::new(vertices)?))
    }

    /// Looks up one of the built-in pens by name.
    pub fn named(name: &str) -> Result<PenShape, PenError> {
        match name {
            "diamond" => Ok(PenShape::diamond()),
            "disk" => Ok(PenShape::unit_disk()),
            "octagon" => Ok(PenShape::octagon()),
            other => Err(PenError::UnknownName(other.to_string())),
        }
    }

    pub fn bounds(&self) -> Bounds {
        match self {
            PenShape::Disk { radius } => Bounds {
                min: Point::new(-radius, -radius),
                max: Point::new(*radius, *radius),
            },
            PenShape::Polygon(poly) => poly.bounds(),
        }
    }

    /// Closed containment of a point in the pen placed at the origin.
    pub fn contains(&self, p: Point) -> bool {
        match self {
            PenShape::Disk { radius } => p.norm_sq() <= radius * radius,
            PenShape::Polygon(poly) => poly.contains(p),
        }
    }
}

/// Parses a pen vertex file: one `x y` pair per line, `%` comments. The
/// vertices must satisfy the polygon invariants.
pub fn parse_pen_file(text: &str) -> Result<PenShape, PenError> {
    let mut vertices = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('%') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let err = |message: String| PenError::File {
            line: lineno + 1,
            message,
        };
        if fields.len() != 2 {
            return Err(err(format!(
                "expected `x y`, found {} fields",
                fields.len()
            )));
        }
        let x: f64 = fields[0]
            .parse()
            .map_err(|_| err(format!("bad number {:?}", fields[0])))?;
        let y: f64 = fields[1]
            .parse()
            .map_err(|_| err(format!("bad number {:?}", fields[1])))?;
        vertices.push(Point::new(x, y));
    }
    PenShape::polygon(vertices)
}
