//! `glyphkit reproduce`: pinned demonstration recipes with checked outcomes.
//!
//! Each figure id runs one bundled scenario, writes its artifacts into the
//! output directory, and prints one PASS/FAIL line per assertion. The
//! process exits 0 only when every assertion holds.

use std::path::{Path, PathBuf};

use clap::Args;
use glyphkit::hyphenation::{
    build_trie, hyphenate, interletter_values, parse_patterns, ExceptionDict,
};
use glyphkit::letter::{letters_of, FoldTable};
use glyphkit::ligature::{check_loops, parse_program, rewrite};
use glyphkit::raster::{
    auto_bounds, column_profile, digitize, emit, octant_profile, EmitFormat, GridBounds, PenShape,
    Point, StrokePath, TieBreak, UniformityReport,
};

use crate::util::{green, red, Failure};

const DEMO_PATTERNS: &str = include_str!("../../../../data/patterns/demo.pat");
const LOOP_RULES: &str = include_str!("../../../../data/ligatures/loop.lig");

#[derive(Args)]
pub struct ReproduceArgs {
    /// Figure id: slide16, slide17, slide20 or slide25
    figure: String,

    /// Directory the artifacts are written into
    #[arg(long, value_name = "DIR", default_value = ".")]
    out_dir: PathBuf,
}

struct Checks {
    failures: usize,
}

impl Checks {
    fn new() -> Checks {
        Checks { failures: 0 }
    }

    fn claim(&mut self, name: &str, ok: bool) {
        if ok {
            println!("{} {name}", green("PASS"));
        } else {
            println!("{} {name}", red("FAIL"));
            self.failures += 1;
        }
    }

    fn exit_code(self) -> i32 {
        if self.failures == 0 {
            0
        } else {
            1
        }
    }
}

pub fn run(args: ReproduceArgs) -> Result<i32, Failure> {
    std::fs::create_dir_all(&args.out_dir)
        .map_err(|e| Failure::usage(format!("cannot create {}: {e}", args.out_dir.display())))?;
    match args.figure.as_str() {
        "slide16" => slide16(&args.out_dir),
        "slide17" => slide17(&args.out_dir),
        "slide20" => slide20(&args.out_dir),
        "slide25" => slide25(&args.out_dir),
        other => Err(Failure::usage(format!(
            "unknown figure {other:?} (expected slide16, slide17, slide20 or slide25)"
        ))),
    }
}

fn save(dir: &Path, name: &str, bytes: &[u8]) -> Result<(), Failure> {
    let path = dir.join(name);
    std::fs::write(&path, bytes)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

/// The pattern demo: gap values and breaks of "hyphenation".
fn slide16(dir: &Path) -> Result<i32, Failure> {
    let fold = FoldTable::ascii();
    let patterns = parse_patterns(DEMO_PATTERNS, &fold).expect("bundled patterns parse");
    let (trie, _) = build_trie(&patterns);
    let word = letters_of("hyphenation");
    let gaps = interletter_values(&word, &trie);
    let result = hyphenate(&word, &trie, 2, 3, &ExceptionDict::new());
    let rendered = result.render('-');

    let report = format!(
        "word: hyphenation\ngap values: {gaps:?}\nbreaks: {:?}\nrendered: {rendered}\n",
        result.breaks
    );
    save(dir, "slide16-hyphenation.txt", report.as_bytes())?;

    let mut checks = Checks::new();
    checks.claim(
        "slide16: gap values are [0,3,0,0,2,5,4,2,0,2]",
        gaps == vec![0, 3, 0, 0, 2, 5, 4, 2, 0, 2],
    );
    checks.claim(
        "slide16: word renders as hy-phen-ation",
        rendered == "hy-phen-ation",
    );
    Ok(checks.exit_code())
}

/// The two slope-1/2 lines: the round nib's ink depends on raster placement,
/// the diamond nib's does not.
fn slide17(dir: &Path) -> Result<i32, Failure> {
    let mut checks = Checks::new();
    let mut means = std::collections::BTreeMap::new();
    for (pen_name, pen) in [
        ("disk", PenShape::unit_disk()),
        ("diamond", PenShape::diamond()),
    ] {
        for (tag, offset) in [("offset0", 0.0), ("offset025", 0.25)] {
            let path =
                StrokePath::segment(Point::new(0.0, offset), Point::new(20.0, 10.0 + offset))
                    .expect("segment");
            let auto = auto_bounds(&path, &pen);
            let bounds = GridBounds {
                x0: 0,
                width: 20,
                ..auto
            };
            let grid = digitize(&path, &pen, Some(bounds), TieBreak::default()).expect("grid");
            save(
                dir,
                &format!("slide17-{pen_name}-{tag}.txt"),
                &emit(&grid, &EmitFormat::Txt),
            )?;
            let center = Point::new(10.0, 5.0 + offset);
            save(
                dir,
                &format!("slide17-{pen_name}-{tag}.json"),
                &emit(&grid, &EmitFormat::JsonMetrics { center }),
            )?;
            let columns = column_profile(&grid);
            let mean = columns.iter().map(|&c| c as f64).sum::<f64>() / columns.len() as f64;
            means.insert((pen_name, tag), mean);
        }
    }
    checks.claim(
        "slide17: disk line at offset 0 has mean 1.0",
        means[&("disk", "offset0")] == 1.0,
    );
    checks.claim(
        "slide17: disk line at offset 0.25 has mean 1.5 (50% darker)",
        means[&("disk", "offset025")] == 1.5,
    );
    checks.claim(
        "slide17: darker/lighter ratio is exactly 1.5",
        means[&("disk", "offset025")] / means[&("disk", "offset0")] == 1.5,
    );
    checks.claim(
        "slide17: diamond line has mean 1.0 at both offsets",
        means[&("diamond", "offset0")] == 1.0 && means[&("diamond", "offset025")] == 1.0,
    );
    Ok(checks.exit_code())
}

/// The radius-7.52 circle: octant weights of the round and diamond nibs.
fn slide20(dir: &Path) -> Result<i32, Failure> {
    let center = Point::new(0.5, 0.5);
    let path = StrokePath::circle(center, 7.52).expect("circle");
    let mut octants = std::collections::BTreeMap::new();
    for (pen_name, pen) in [
        ("disk", PenShape::unit_disk()),
        ("diamond", PenShape::diamond()),
    ] {
        let grid = digitize(&path, &pen, None, TieBreak::default()).expect("grid");
        save(
            dir,
            &format!("slide20-{pen_name}.pbm"),
            &emit(&grid, &EmitFormat::PbmAscii),
        )?;
        save(
            dir,
            &format!("slide20-{pen_name}.txt"),
            &emit(&grid, &EmitFormat::Txt),
        )?;
        let report = UniformityReport::compute(&grid, center);
        save(
            dir,
            &format!("slide20-{pen_name}.json"),
            format!("{}\n", report.to_json()).as_bytes(),
        )?;
        octants.insert(pen_name, octant_profile(&grid, center));
    }
    let disk = octants["disk"];
    let diamond = octants["diamond"];
    let spread = |o: [u32; 8]| o.iter().max().unwrap() - o.iter().min().unwrap();
    let diag_min = [disk[1], disk[3], disk[5], disk[7]]
        .into_iter()
        .min()
        .unwrap();
    let axis_max = [disk[0], disk[2], disk[4], disk[6]]
        .into_iter()
        .max()
        .unwrap();

    let mut checks = Checks::new();
    checks.claim(
        "slide20: disk track is heavier in every diagonal octant than near any axis",
        diag_min > axis_max,
    );
    checks.claim(
        "slide20: diamond octant spread is strictly smaller than the disk's",
        spread(diamond) < spread(disk),
    );
    Ok(checks.exit_code())
}

/// The rewrite loop: the checker finds the cycle and the simulator would run
/// forever without its budget.
fn slide25(dir: &Path) -> Result<i32, Failure> {
    let program = parse_program(LOOP_RULES).expect("bundled rules parse");
    let report = check_loops(&program);
    save(
        dir,
        "slide25-loop-report.json",
        format!("{}\n", report.to_json()).as_bytes(),
    )?;

    let simulation = rewrite(&letters_of("az"), &program, 10_000);

    let mut checks = Checks::new();
    checks.claim("slide25: the loop checker reports a cycle", !report.is_ok());
    checks.claim(
        "slide25: the cycle involves the pairs (a, z) and (a, b)",
        report.cycles.iter().any(|c| c.pairs.len() == 2),
    );
    checks.claim(
        "slide25: simulating \"az\" exhausts any step budget",
        simulation.is_err(),
    );
    Ok(checks.exit_code())
}
