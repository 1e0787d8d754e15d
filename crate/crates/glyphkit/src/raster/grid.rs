//! The binary pixel grid.

use crate::raster::geom::Point;

/// Integer pixel bounds: pixel `(i, j)` is inside iff
/// `x0 <= i < x0 + width` and `y0 <= j < y0 + height`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GridBounds {
    pub x0: i64,
    pub y0: i64,
    pub width: u32,
    pub height: u32,
}

impl GridBounds {
    pub fn contains(&self, i: i64, j: i64) -> bool {
        i >= self.x0
            && j >= self.y0
            && i < self.x0 + self.width as i64
            && j < self.y0 + self.height as i64
    }

    pub fn translate(&self, dx: i64, dy: i64) -> GridBounds {
        GridBounds {
            x0: self.x0 + dx,
            y0: self.y0 + dy,
            ..*self
        }
    }
}

/// A bitmap over a [`GridBounds`]. Pixel `(i, j)` covers the unit square
/// `[i, i+1] x [j, j+1]`; its center is `(i + 1/2, j + 1/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PixelGrid {
    bounds: GridBounds,
    bits: Vec<bool>,
}

impl PixelGrid {
    pub fn new(bounds: GridBounds) -> PixelGrid {
        let len = bounds.width as usize * bounds.height as usize;
        PixelGrid {
            bounds,
            bits: vec![false; len],
        }
    }

    pub fn bounds(&self) -> GridBounds {
        self.bounds
    }

    pub fn width(&self) -> u32 {
        self.bounds.width
    }

    pub fn height(&self) -> u32 {
        self.bounds.height
    }

    pub fn x0(&self) -> i64 {
        self.bounds.x0
    }

    pub fn y0(&self) -> i64 {
        self.bounds.y0
    }

    fn index(&self, i: i64, j: i64) -> Option<usize> {
        if !self.bounds.contains(i, j) {
            return None;
        }
        let col = (i - self.bounds.x0) as usize;
        let row = (j - self.bounds.y0) as usize;
        Some(row * self.bounds.width as usize + col)
    }

    /// Darkness of pixel `(i, j)` in global coordinates; pixels outside the
    /// bounds are light.
    pub fn get(&self, i: i64, j: i64) -> bool {
        self.index(i, j).map(|at| self.bits[at]).unwrap_or(false)
    }

    pub fn set(&mut self, i: i64, j: i64, dark: bool) {
        let at = self.index(i, j).expect("pixel out of grid bounds");
        self.bits[at] = dark;
    }

    /// Center of pixel `(i, j)`.
    pub fn center(i: i64, j: i64) -> Point {
        Point::new(i as f64 + 0.5, j as f64 + 0.5)
    }

    pub fn dark_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Dark pixels in row-major order, bottom row first.
    pub fn iter_dark(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        let b = self.bounds;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &bit)| bit)
            .map(move |(at, _)| {
                let row = at / b.width as usize;
                let col = at % b.width as usize;
                (b.x0 + col as i64, b.y0 + row as i64)
            })
    }

    /// The same bitmap shifted by an integer vector.
    pub fn translate(&self, dx: i64, dy: i64) -> PixelGrid {
        PixelGrid {
            bounds: self.bounds.translate(dx, dy),
            bits: self.bits.clone(),
        }
    }
}
