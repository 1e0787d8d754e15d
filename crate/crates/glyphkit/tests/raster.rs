//! Raster invariants: oracle agreement, covariance, symmetry, monotonicity,
//! and emitter round-trips.

mod common;

use common::*;
use glyphkit::raster::{
    auto_bounds, column_profile, digitize, emit, member, octant_profile, parse_pbm_ascii,
    EmitFormat, GridBounds, PenShape, PixelGrid, Point, StrokePath, TieBreak,
};

fn figure_paths_and_pens() -> Vec<(StrokePath, PenShape, usize)> {
    let line = |offset: f64| {
        StrokePath::segment(Point::new(0.0, offset), Point::new(20.0, 10.0 + offset)).unwrap()
    };
    let circle = StrokePath::circle(Point::new(0.5, 0.5), 7.52).unwrap();
    vec![
        (line(0.0), PenShape::unit_disk(), 20_000),
        (line(0.25), PenShape::unit_disk(), 20_000),
        (line(0.0), PenShape::diamond(), 20_000),
        (line(0.25), PenShape::diamond(), 20_000),
        (circle, PenShape::unit_disk(), 60_000),
        (circle, PenShape::diamond(), 60_000),
    ]
}

/// Digitization must agree with the dense path-sampling oracle everywhere
/// except pixels the region boundary actually passes through.
#[test]
fn digitize_agrees_with_sampling_oracle() {
    for (path, pen, samples) in figure_paths_and_pens() {
        let grid = digitize(&path, &pen, None, TieBreak::default()).unwrap();
        let points = sample_path(&path, samples);
        let off = TieBreak::default().offset();
        let mut disagreements = 0;
        for j in 0..grid.height() as i64 {
            for i in 0..grid.width() as i64 {
                let (gi, gj) = (grid.x0() + i, grid.y0() + j);
                let center = PixelGrid::center(gi, gj) + off;
                let sampled = member_sampled(center, &pen, &points);
                if sampled != grid.get(gi, gj) {
                    disagreements += 1;
                    assert!(
                        pixel_is_mixed(gi, gj, &pen, &points),
                        "clean pixel ({gi}, {gj}) disagrees with the oracle"
                    );
                }
            }
        }
        // The oracle may only waver on boundary pixels (the diamond lines
        // have one exact tangency per second column), never wholesale.
        assert!(
            disagreements <= grid.width() as usize,
            "{disagreements} boundary disagreements"
        );
    }
}

/// Shared-primitive check: the bitmap equals per-pixel `member` evaluation.
#[test]
fn digitize_equals_per_pixel_membership() {
    for (path, pen, _) in figure_paths_and_pens() {
        let grid = digitize(&path, &pen, None, TieBreak::exact()).unwrap();
        for j in 0..grid.height() as i64 {
            for i in 0..grid.width() as i64 {
                let (gi, gj) = (grid.x0() + i, grid.y0() + j);
                assert_eq!(
                    grid.get(gi, gj),
                    member(PixelGrid::center(gi, gj), &path, &pen),
                    "pixel ({gi}, {gj})"
                );
            }
        }
    }
}

fn dyadic(rng: &mut Rng, span: i64) -> f64 {
    (rng.below((span * 16) as u64) as f64) / 16.0 - span as f64 / 2.0
}

/// Translating a configuration by integers translates the bitmap exactly.
#[test]
fn integer_translation_covariance() {
    let mut rng = Rng::new(31);
    let pens = [
        PenShape::unit_disk(),
        PenShape::diamond(),
        PenShape::octagon(),
    ];
    for round in 0..200 {
        let pen = &pens[rng.usize_below(3)];
        let path = if rng.chance(50) {
            StrokePath::segment(
                Point::new(dyadic(&mut rng, 8), dyadic(&mut rng, 8)),
                Point::new(dyadic(&mut rng, 8), dyadic(&mut rng, 8)),
            )
            .unwrap()
        } else {
            StrokePath::circle(
                Point::new(dyadic(&mut rng, 8), dyadic(&mut rng, 8)),
                0.25 + rng.below(128) as f64 / 16.0,
            )
            .unwrap()
        };
        let (dx, dy) = (rng.below(17) as i64 - 8, rng.below(17) as i64 - 8);
        let moved = path.translate(Point::new(dx as f64, dy as f64));

        let base = digitize(&path, pen, None, TieBreak::default()).unwrap();
        let shifted = digitize(&moved, pen, None, TieBreak::default()).unwrap();
        assert_eq!(base.translate(dx, dy), shifted, "round {round}");
    }
}

/// The figures are symmetric under quarter turns about the circle center
/// (the radius avoids all center ties).
#[test]
fn circle_figures_are_rotation_symmetric() {
    for pen in [
        PenShape::unit_disk(),
        PenShape::diamond(),
        PenShape::octagon(),
    ] {
        let path = StrokePath::circle(Point::new(0.5, 0.5), 7.52).unwrap();
        let grid = digitize(&path, &pen, None, TieBreak::default()).unwrap();
        assert!(grid.dark_count() > 0);
        for j in 0..grid.height() as i64 {
            for i in 0..grid.width() as i64 {
                let (gi, gj) = (grid.x0() + i, grid.y0() + j);
                // Quarter turn about (0.5, 0.5): pixel (i, j) -> (-j, i).
                assert_eq!(grid.get(gi, gj), grid.get(-gj, gi), "({gi}, {gj})");
            }
        }
    }
}

/// A larger disk pen never loses pixels.
#[test]
fn disk_radius_monotonicity() {
    let mut rng = Rng::new(32);
    for _ in 0..100 {
        let path = if rng.chance(50) {
            StrokePath::segment(
                Point::new(dyadic(&mut rng, 6), dyadic(&mut rng, 6)),
                Point::new(dyadic(&mut rng, 6), dyadic(&mut rng, 6)),
            )
            .unwrap()
        } else {
            StrokePath::circle(
                Point::new(dyadic(&mut rng, 6), dyadic(&mut rng, 6)),
                0.5 + rng.below(64) as f64 / 16.0,
            )
            .unwrap()
        };
        let small = 0.25 + rng.below(32) as f64 / 16.0;
        let large = small + 0.0625 + rng.below(16) as f64 / 16.0;
        let pen_small = PenShape::disk(small).unwrap();
        let pen_large = PenShape::disk(large).unwrap();
        let bounds = auto_bounds(&path, &pen_large);
        let a = digitize(&path, &pen_small, Some(bounds), TieBreak::default()).unwrap();
        let b = digitize(&path, &pen_large, Some(bounds), TieBreak::default()).unwrap();
        for (i, j) in a.iter_dark() {
            assert!(b.get(i, j), "pixel ({i}, {j}) vanished when the pen grew");
        }
    }
}

/// Auto bounds leave a clean one-pixel border.
#[test]
fn auto_bounds_border_is_light() {
    let mut rng = Rng::new(33);
    for _ in 0..100 {
        let pen = match rng.below(3) {
            0 => PenShape::unit_disk(),
            1 => PenShape::diamond(),
            _ => PenShape::octagon(),
        };
        let path = StrokePath::segment(
            Point::new(dyadic(&mut rng, 10), dyadic(&mut rng, 10)),
            Point::new(dyadic(&mut rng, 10), dyadic(&mut rng, 10)),
        )
        .unwrap();
        let grid = digitize(&path, &pen, None, TieBreak::default()).unwrap();
        let (x0, y0) = (grid.x0(), grid.y0());
        let (x1, y1) = (x0 + grid.width() as i64 - 1, y0 + grid.height() as i64 - 1);
        for i in x0..=x1 {
            assert!(!grid.get(i, y0) && !grid.get(i, y1));
        }
        for j in y0..=y1 {
            assert!(!grid.get(x0, j) && !grid.get(x1, j));
        }
    }
}

/// Column and octant profiles both partition the dark set.
#[test]
fn profiles_partition_the_dark_pixels() {
    let mut rng = Rng::new(34);
    for _ in 0..50 {
        let pen = PenShape::octagon();
        let path = StrokePath::segment(
            Point::new(dyadic(&mut rng, 8), dyadic(&mut rng, 8)),
            Point::new(dyadic(&mut rng, 8), dyadic(&mut rng, 8)),
        )
        .unwrap();
        let grid = digitize(&path, &pen, None, TieBreak::default()).unwrap();
        let dark = grid.dark_count() as u32;
        assert_eq!(column_profile(&grid).iter().sum::<u32>(), dark);
        let center = Point::new(dyadic(&mut rng, 4), dyadic(&mut rng, 4));
        assert_eq!(octant_profile(&grid, center).iter().sum::<u32>(), dark);
    }
}

/// emit -> parse -> emit is byte-identical for the text bitmap format.
#[test]
fn pbm_ascii_roundtrip_on_random_grids() {
    let mut rng = Rng::new(35);
    for _ in 0..100 {
        let bounds = GridBounds {
            x0: rng.below(9) as i64 - 4,
            y0: rng.below(9) as i64 - 4,
            width: 1 + rng.below(12) as u32,
            height: 1 + rng.below(12) as u32,
        };
        let mut grid = PixelGrid::new(bounds);
        for j in 0..bounds.height as i64 {
            for i in 0..bounds.width as i64 {
                if rng.chance(30) {
                    grid.set(bounds.x0 + i, bounds.y0 + j, true);
                }
            }
        }
        let once = emit(&grid, &EmitFormat::PbmAscii);
        let parsed = parse_pbm_ascii(&once).unwrap();
        assert_eq!(emit(&parsed, &EmitFormat::PbmAscii), once);
        assert_eq!(parsed.dark_count(), grid.dark_count());
    }
}

/// All emitters are deterministic across repeated calls.
#[test]
fn emitters_are_deterministic() {
    let path = StrokePath::segment(Point::new(0.0, 0.25), Point::new(20.0, 10.25)).unwrap();
    let grid = digitize(&path, &PenShape::unit_disk(), None, TieBreak::default()).unwrap();
    for format in [
        EmitFormat::PbmAscii,
        EmitFormat::PbmBinary,
        EmitFormat::Txt,
        EmitFormat::Svg,
        EmitFormat::JsonMetrics {
            center: Point::new(10.0, 5.25),
        },
    ] {
        assert_eq!(emit(&grid, &format), emit(&grid, &format), "{format:?}");
    }
}

/// The member examples that define the swept region, straight from the
/// geometry: a point path with the diamond, and the annulus of a circle
/// swept by the unit disk.
#[test]
fn membership_basics() {
    let stamp = StrokePath::segment(Point::ORIGIN, Point::ORIGIN).unwrap();
    let diamond = PenShape::diamond();
    assert!(member(Point::new(0.4, 0.0), &stamp, &diamond));
    assert!(!member(Point::new(0.6, 0.0), &stamp, &diamond));

    let ring = StrokePath::circle(Point::ORIGIN, 7.52).unwrap();
    let disk = PenShape::unit_disk();
    // Exact closed-boundary checks on an exact direction.
    assert!(member(Point::new(7.02, 0.0), &ring, &disk));
    assert!(member(Point::new(8.02, 0.0), &ring, &disk));
    // Rotated directions carry rounding, so probe with a little slack.
    for angle in [0.3f64, 1.1, 2.7, 4.0, 5.9] {
        let dir = Point::new(angle.cos(), angle.sin());
        assert!(member(dir * 7.03, &ring, &disk), "{angle}");
        assert!(member(dir * 8.01, &ring, &disk), "{angle}");
        assert!(!member(dir * 7.0, &ring, &disk), "{angle}");
        assert!(!member(dir * 8.04, &ring, &disk), "{angle}");
    }
}
