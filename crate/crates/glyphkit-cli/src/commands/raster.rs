//! `glyphkit raster line|circle`

use std::path::PathBuf;

use clap::Args;
use clap::Subcommand;
use glyphkit::raster::{
    auto_bounds, digitize, emit, parse_pen_file, EmitFormat, GridBounds, PenShape, Point,
    StrokePath, TieBreak, UniformityReport,
};

use crate::util::{guard_binary_stdout, parse_point, read_file, write_output, Failure};

#[derive(Args)]
pub struct PenAndOutput {
    /// Built-in pen: diamond, disk or octagon
    #[arg(long, value_name = "NAME", conflicts_with = "pen_file")]
    pen: Option<String>,

    /// Pen vertex file (`x y` per line, counter-clockwise, origin inside)
    #[arg(long, value_name = "FILE")]
    pen_file: Option<PathBuf>,

    /// Output format: pbm-ascii, pbm-binary, txt, svg or json-metrics
    #[arg(long, value_name = "FMT", default_value = "txt")]
    format: String,

    /// Write the image here instead of standard output
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Also print the uniformity metrics as one JSON line
    #[arg(long)]
    metrics: bool,

    /// Allow binary output on a terminal
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
pub enum RasterCmd {
    /// Digitize a pen-swept line segment
    Line {
        /// Segment start as X,Y (with --to)
        #[arg(long, value_name = "X,Y", requires = "to", conflicts_with_all = ["slope", "offset", "cols"])]
        from: Option<String>,
        /// Segment end as X,Y
        #[arg(long, value_name = "X,Y")]
        to: Option<String>,
        /// Slope of a columns-based line from (0, OFFSET) to (COLS, OFFSET + S*COLS)
        #[arg(long, value_name = "S", requires = "cols")]
        slope: Option<f64>,
        /// Vertical offset of the columns-based line
        #[arg(long, value_name = "B", default_value_t = 0.0)]
        offset: f64,
        /// Grid width in pixels for the columns-based line
        #[arg(long, value_name = "N")]
        cols: Option<u32>,
        #[command(flatten)]
        common: PenAndOutput,
    },
    /// Digitize a pen-swept circle
    Circle {
        /// Circle center as X,Y
        #[arg(long, value_name = "X,Y")]
        center: String,
        /// Circle radius
        #[arg(long, value_name = "R")]
        radius: f64,
        #[command(flatten)]
        common: PenAndOutput,
    },
}

fn resolve_pen(common: &PenAndOutput) -> Result<PenShape, Failure> {
    match (&common.pen, &common.pen_file) {
        (Some(name), None) => PenShape::named(name).map_err(|e| Failure::usage(e.to_string())),
        (None, Some(path)) => {
            let text = read_file(path)?;
            parse_pen_file(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
        }
        (None, None) => Err(Failure::usage("one of --pen or --pen-file is required")),
        (Some(_), Some(_)) => unreachable!("clap forbids the combination"),
    }
}

pub fn run(cmd: RasterCmd) -> Result<i32, Failure> {
    let (path, bounds, center, common, pen) = match cmd {
        RasterCmd::Line {
            from,
            to,
            slope,
            offset,
            cols,
            common,
        } => {
            let pen = resolve_pen(&common)?;
            let (path, bounds) = match (from, to, slope, cols) {
                (Some(from), Some(to), None, None) => {
                    let a = parse_point(&from)?;
                    let b = parse_point(&to)?;
                    let path =
                        StrokePath::segment(a, b).map_err(|e| Failure::usage(e.to_string()))?;
                    (path, None)
                }
                (None, None, Some(slope), Some(cols)) => {
                    let end = Point::new(cols as f64, offset + slope * cols as f64);
                    let path = StrokePath::segment(Point::new(0.0, offset), end)
                        .map_err(|e| Failure::usage(e.to_string()))?;
                    let auto = auto_bounds(&path, &pen);
                    (
                        path,
                        Some(GridBounds {
                            x0: 0,
                            width: cols,
                            ..auto
                        }),
                    )
                }
                _ => {
                    return Err(Failure::usage(
                        "give either --from and --to, or --slope and --cols",
                    ))
                }
            };
            let center = match path {
                StrokePath::Segment { start, end } => (start + end) * 0.5,
                StrokePath::Circle { center, .. } => center,
            };
            (path, bounds, center, common, pen)
        }
        RasterCmd::Circle {
            center,
            radius,
            common,
        } => {
            let pen = resolve_pen(&common)?;
            let c = parse_point(&center)?;
            let path = StrokePath::circle(c, radius).map_err(|e| Failure::usage(e.to_string()))?;
            (path, None, c, common, pen)
        }
    };
    let format = EmitFormat::parse(&common.format, center)
        .ok_or_else(|| Failure::usage(format!("unknown format {:?}", common.format)))?;
    if format.is_binary() && common.out.is_none() {
        guard_binary_stdout(common.force)?;
    }

    let grid = digitize(&path, &pen, bounds, TieBreak::default())
        .map_err(|e| Failure::usage(e.to_string()))?;
    write_output(&emit(&grid, &format), common.out.as_deref())?;

    if common.metrics && !matches!(format, EmitFormat::JsonMetrics { .. }) {
        println!("{}", UniformityReport::compute(&grid, center).to_json());
    }
    Ok(0)
}
