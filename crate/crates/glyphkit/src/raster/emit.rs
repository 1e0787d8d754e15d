//! Byte-exact image and metrics emitters.
//!
//! Rows are written top-down: the first output row is the grid's highest `y`
//! row. Dark pixels are `1` in PBM and `#` in text output.

use crate::raster::geom::Point;
use crate::raster::grid::{GridBounds, PixelGrid};
use crate::raster::metrics::UniformityReport;

/// Output encodings for a digitized grid.
#[derive(Clone, Debug, PartialEq)]
pub enum EmitFormat {
    /// Portable bitmap, `P1` text encoding.
    PbmAscii,
    /// Portable bitmap, `P4` packed binary encoding.
    PbmBinary,
    /// ASCII art: `#` dark, `.` light, one line per row, no trailing newline.
    Txt,
    /// One unit `<rect>` per dark pixel.
    Svg,
    /// The [`UniformityReport`] computed about `center`, as one JSON line.
    JsonMetrics { center: Point },
}

impl EmitFormat {
    /// Names accepted on the command line, `json-metrics` needing a center.
    pub fn parse(name: &str, metrics_center: Point) -> Option<EmitFormat> {
        Some(match name {
            "pbm-ascii" => EmitFormat::PbmAscii,
            "pbm-binary" => EmitFormat::PbmBinary,
            "txt" => EmitFormat::Txt,
            "svg" => EmitFormat::Svg,
            "json-metrics" => EmitFormat::JsonMetrics {
                center: metrics_center,
            },
            _ => return None,
        })
    }

    pub fn is_binary(&self) -> bool {
        matches!(self, EmitFormat::PbmBinary)
    }
}

/// Renders the grid in the requested format. Identical inputs produce
/// identical bytes.
pub fn emit(grid: &PixelGrid, format: &EmitFormat) -> Vec<u8> {
    match format {
        EmitFormat::PbmAscii => pbm_ascii(grid),
        EmitFormat::PbmBinary => pbm_binary(grid),
        EmitFormat::Txt => txt(grid),
        EmitFormat::Svg => svg(grid),
        EmitFormat::JsonMetrics { center } => {
            let mut bytes = UniformityReport::compute(grid, *center)
                .to_json()
                .into_bytes();
            bytes.push(b'\n');
            bytes
        }
    }
}

fn rows_top_down(grid: &PixelGrid) -> impl Iterator<Item = i64> + '_ {
    (0..grid.height() as i64).map(move |r| grid.y0() + grid.height() as i64 - 1 - r)
}

fn pbm_ascii(grid: &PixelGrid) -> Vec<u8> {
    let mut out = format!("P1\n{} {}\n", grid.width(), grid.height());
    for j in rows_top_down(grid) {
        for i in 0..grid.width() as i64 {
            if i > 0 {
                out.push(' ');
            }
            out.push(if grid.get(grid.x0() + i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out.into_bytes()
}

fn pbm_binary(grid: &PixelGrid) -> Vec<u8> {
    let mut out = format!("P4\n{} {}\n", grid.width(), grid.height()).into_bytes();
    for j in rows_top_down(grid) {
        let mut byte = 0u8;
        let mut filled = 0;
        for i in 0..grid.width() as i64 {
            byte <<= 1;
            byte |= u8::from(grid.get(grid.x0() + i, j));
            filled += 1;
            if filled == 8 {
                out.push(byte);
                byte = 0;
                filled = 0;
            }
        }
        if filled > 0 {
            out.push(byte << (8 - filled));
        }
    }
    out
}

fn txt(grid: &PixelGrid) -> Vec<u8> {
    let mut out = String::new();
    let mut first = true;
    for j in rows_top_down(grid) {
        if !first {
            out.push('\n');
        }
        first = false;
        for i in 0..grid.width() as i64 {
            out.push(if grid.get(grid.x0() + i, j) { '#' } else { '.' });
        }
    }
    out.into_bytes()
}

fn svg(grid: &PixelGrid) -> Vec<u8> {
    let (w, h) = (grid.width(), grid.height());
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" \
         viewBox=\"0 0 {w} {h}\" shape-rendering=\"crispEdges\">\n"
    );
    for j in rows_top_down(grid) {
        let row = grid.y0() + grid.height() as i64 - 1 - j; // top-down row index
        for i in 0..grid.width() as i64 {
            if grid.get(grid.x0() + i, j) {
                out.push_str(&format!(
                    "<rect x=\"{i}\" y=\"{row}\" width=\"1\" height=\"1\"/>\n"
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    out.into_bytes()
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PbmParseError {
    #[error("missing or unsupported magic number (expected P1)")]
    BadMagic,
    #[error("missing or malformed dimension")]
    BadDimensions,
    #[error("expected {expected} cells, found {found}")]
    CellCount { expected: usize, found: usize },
    #[error("invalid cell token {0:?}")]
    BadCell(String),
}

/// Parses a `P1` bitmap back into a grid with origin `(0, 0)`. `#` comment
/// lines are tolerated; the emitter never writes them.
pub fn parse_pbm_ascii(bytes: &[u8]) -> Result<PixelGrid, PbmParseError> {
    let text = String::from_utf8_lossy(bytes);
    let mut tokens = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace);
    if tokens.next() != Some("P1") {
        return Err(PbmParseError::BadMagic);
    }
    let mut dim = || -> Result<u32, PbmParseError> {
        tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(PbmParseError::BadDimensions)
    };
    let width = dim()?;
    let height = dim()?;
    let cells: Vec<bool> = tokens
        .map(|t| match t {
            "0" => Ok(false),
            "1" => Ok(true),
            other => Err(PbmParseError::BadCell(other.to_string())),
        })
        .collect::<Result<_, _>>()?;
    let expected = width as usize * height as usize;
    if cells.len() != expected {
        return Err(PbmParseError::CellCount {
            expected,
            found: cells.len(),
        });
    }
    let mut grid = PixelGrid::new(GridBounds {
        x0: 0,
        y0: 0,
        width,
        height,
    });
    for (at, &dark) in cells.iter().enumerate() {
        let i = (at % width as usize) as i64;
        let row = (at / width as usize) as i64;
        let j = height as i64 - 1 - row;
        if dark {
            grid.set(i, j, true);
        }
    }
    Ok(grid)
}
