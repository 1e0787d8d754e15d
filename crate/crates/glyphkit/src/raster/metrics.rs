//! Uniformity metrics: column counts and octant counts.

use serde::Serialize;

use crate::raster::geom::Point;
use crate::raster::grid::PixelGrid;

/// Dark-pixel count of every grid column, left to right.
pub fn column_profile(grid: &PixelGrid) -> Vec<u32> {
    let mut counts = vec![0u32; grid.width() as usize];
    for (i, _) in grid.iter_dark() {
        counts[(i - grid.x0()) as usize] += 1;
    }
    counts
}

/// Dark-pixel count per 45-degree sector about `center`.
///
/// Sector `k` is centered on the direction `k * 45°` (sector 0 looks along
/// +x, sector 1 along the NE diagonal, and so on counter-clockwise), spanning
/// 22.5 degrees to either side, half-open at the clockwise edge. Even sectors
/// face the axes, odd sectors the diagonals. A dark pixel exactly at `center`
/// counts in sector 0.
pub fn octant_profile(grid: &PixelGrid, center: Point) -> [u32; 8] {
    let mut counts = [0u32; 8];
    for (i, j) in grid.iter_dark() {
        let d = PixelGrid::center(i, j) - center;
        let sector = if d.x == 0.0 && d.y == 0.0 {
            0
        } else {
            let angle = d.y.atan2(d.x); // (-pi, pi]
            let eighth =
                (angle + std::f64::consts::FRAC_PI_8).div_euclid(std::f64::consts::FRAC_PI_4);
            (eighth as i64).rem_euclid(8) as usize
        };
        counts[sector] += 1;
    }
    counts
}

/// The metrics bundle the CLI exposes as JSON.
///
/// `min`, `max` and `mean` summarize the column counts.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UniformityReport {
    pub columns: Vec<u32>,
    pub octants: [u32; 8],
    pub min: u32,
    pub max: u32,
    pub mean: f64,
}

impl UniformityReport {
    pub fn compute(grid: &PixelGrid, center: Point) -> UniformityReport {
        let columns = column_profile(grid);
        let octants = octant_profile(grid, center);
        let min = columns.iter().copied().min().unwrap_or(0);
        let max = columns.iter().copied().max().unwrap_or(0);
        let mean = if columns.is_empty() {
            0.0
        } else {
            columns.iter().map(|&c| c as f64).sum::<f64>() / columns.len() as f64
        };
        UniformityReport {
            columns,
            octants,
            min,
            max,
            mean,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
