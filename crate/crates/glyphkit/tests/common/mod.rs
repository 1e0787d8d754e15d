//! Shared helpers for the integration and acceptance suites: a tiny seeded
//! RNG, random input generators, and the independent oracles the engines are
//! checked against. The oracles deliberately re-derive everything from the
//! definitions instead of calling into the code paths they validate.

#![allow(dead_code)]

use std::collections::BTreeSet;

use glyphkit::hyphenation::Pattern;
use glyphkit::letter::Letter;
use glyphkit::ligature::{LigOp, LigProgram};
use glyphkit::raster::{PenShape, Point, StrokePath};

/// SplitMix64: tiny, seedable, and stable across platforms and releases.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn usize_below(&mut self, n: usize) -> usize {
        self.below(n as u64) as usize
    }

    pub fn chance(&mut self, percent: u64) -> bool {
        self.below(100) < percent
    }
}

// ---------------------------------------------------------------------------
// Hyphenation: generators and the slide-every-pattern oracle.
// ---------------------------------------------------------------------------

/// Letters `a`, `b`, ... of a small test alphabet.
pub fn small_alphabet(size: usize) -> Vec<Letter> {
    (0..size as u32).map(|i| Letter('a' as u32 + i)).collect()
}

pub fn random_word(rng: &mut Rng, alphabet: &[Letter], max_len: usize) -> Vec<Letter> {
    let len = rng.usize_below(max_len + 1);
    (0..len)
        .map(|_| alphabet[rng.usize_below(alphabet.len())])
        .collect()
}

pub fn random_patterns(rng: &mut Rng, alphabet: &[Letter], max_patterns: usize) -> Vec<Pattern> {
    let count = rng.usize_below(max_patterns + 1);
    (0..count)
        .map(|_| {
            let len = 1 + rng.usize_below(4);
            let letters: Vec<Letter> = (0..len)
                .map(|_| alphabet[rng.usize_below(alphabet.len())])
                .collect();
            let values: Vec<u8> = (0..=len)
                .map(|_| {
                    if rng.chance(60) {
                        0
                    } else {
                        rng.below(10) as u8
                    }
                })
                .collect();
            Pattern::new(letters, values, rng.chance(15), rng.chance(15)).expect("valid pattern")
        })
        .collect()
}

/// Interletter values computed the slow way: every pattern slid across every
/// start position of the boundary-extended word, taking maxima. No tries.
pub fn brute_force_gaps(word: &[Letter], patterns: &[Pattern]) -> Vec<u8> {
    let n = word.len();
    let mut gaps = vec![0u8; n.saturating_sub(1)];
    // None marks the word boundary.
    let mut ext: Vec<Option<Letter>> = Vec::with_capacity(n + 2);
    ext.push(None);
    ext.extend(word.iter().map(|&l| Some(l)));
    ext.push(None);

    // Last-wins duplicate handling, mirroring the build rule.
    let mut effective: Vec<&Pattern> = Vec::new();
    for p in patterns {
        effective.retain(|q| {
            !(q.letters == p.letters
                && q.anchored_start == p.anchored_start
                && q.anchored_end == p.anchored_end)
        });
        effective.push(p);
    }

    for p in effective {
        let mut keys: Vec<Option<Letter>> = Vec::new();
        if p.anchored_start {
            keys.push(None);
        }
        keys.extend(p.letters.iter().map(|&l| Some(l)));
        if p.anchored_end {
            keys.push(None);
        }
        for start in 0..ext.len().saturating_sub(keys.len() - 1) {
            if ext[start..start + keys.len()] == keys[..] {
                let base = start + usize::from(p.anchored_start);
                for (k, &v) in p.values.iter().enumerate() {
                    if let Some(i) = (base + k).checked_sub(2) {
                        if i < gaps.len() && v > gaps[i] {
                            gaps[i] = v.max(gaps[i]);
                        }
                    }
                }
            }
        }
    }
    gaps
}

// ---------------------------------------------------------------------------
// Ligature: generators and the cursor-watching oracle for the pair function.
// ---------------------------------------------------------------------------

const LIG_OPS: [LigOp; 8] = [
    LigOp::Merge,
    LigOp::KeepRight,
    LigOp::KeepRightAdv,
    LigOp::KeepLeft,
    LigOp::KeepLeftAdv,
    LigOp::KeepBoth,
    LigOp::KeepBothAdv1,
    LigOp::KeepBothAdv2,
];

pub fn random_program(rng: &mut Rng, alphabet: &[Letter], max_rules: usize) -> LigProgram {
    let mut program = LigProgram::new();
    let rules = rng.usize_below(max_rules + 1);
    for _ in 0..rules {
        let a = alphabet[rng.usize_below(alphabet.len())];
        let w = alphabet[rng.usize_below(alphabet.len())];
        let z = alphabet[rng.usize_below(alphabet.len())];
        let op = LIG_OPS[rng.usize_below(LIG_OPS.len())];
        let _ = program.add_rule(a, w, op, z); // ignore duplicate pairs
    }
    program
}

/// The pair function read straight off a cursor walk, per its definition:
/// simulate `alpha omega <sentinel>` and report the letter immediately left
/// of the cursor the first time it moves right of the material derived from
/// the original `omega`. Returns `None` when `step_limit` runs out, i.e.
/// when the walk loops.
///
/// This is a from-scratch transcription of the operation table, sharing no
/// code with the library's simulator or evaluator.
pub fn oracle_f(
    alpha: Letter,
    omega: Letter,
    program: &LigProgram,
    step_limit: u64,
) -> Option<Letter> {
    let sentinel = Letter(u32::MAX);
    assert!(!program.alphabet().contains(&sentinel));
    let mut buffer = vec![alpha, omega, sentinel];
    let mut omega_at = 1usize; // index of the rightmost letter derived from omega
    let mut focus = 1usize;
    let mut steps = 0u64;
    loop {
        if focus > omega_at {
            return Some(buffer[omega_at]);
        }
        if steps >= step_limit {
            return None;
        }
        steps += 1;
        let a = buffer[focus - 1];
        let w = buffer[focus];
        let Some(rule) = program.rule(a, w) else {
            focus += 1;
            continue;
        };
        let z = rule.letter;
        match rule.op {
            LigOp::None => unreachable!(),
            LigOp::Merge => {
                buffer.splice(focus - 1..=focus, [z]);
                if focus <= omega_at {
                    omega_at -= 1;
                }
            }
            LigOp::KeepRight => buffer[focus - 1] = z,
            LigOp::KeepRightAdv => {
                buffer[focus - 1] = z;
                focus += 1;
            }
            LigOp::KeepLeft => buffer[focus] = z,
            LigOp::KeepLeftAdv => {
                buffer[focus] = z;
                focus += 1;
            }
            LigOp::KeepBoth | LigOp::KeepBothAdv1 | LigOp::KeepBothAdv2 => {
                buffer.insert(focus, z);
                if focus <= omega_at {
                    omega_at += 1;
                }
                match rule.op {
                    LigOp::KeepBothAdv1 => focus += 1,
                    LigOp::KeepBothAdv2 => focus += 2,
                    _ => {}
                }
            }
        }
    }
}

/// All ordered pairs over a program's alphabet.
pub fn alphabet_pairs(program: &LigProgram) -> Vec<(Letter, Letter)> {
    let letters: Vec<Letter> = program.alphabet().into_iter().collect();
    let mut pairs = Vec::with_capacity(letters.len() * letters.len());
    for &a in &letters {
        for &w in &letters {
            pairs.push((a, w));
        }
    }
    pairs
}

// ---------------------------------------------------------------------------
// Raster: a path-sampling membership oracle.
// ---------------------------------------------------------------------------

/// Dense sample points along a path.
pub fn sample_path(path: &StrokePath, samples: usize) -> Vec<Point> {
    match *path {
        StrokePath::Segment { start, end } => (0..=samples)
            .map(|i| start + (end - start) * (i as f64 / samples as f64))
            .collect(),
        StrokePath::Circle { center, radius } => (0..samples)
            .map(|i| {
                let theta = 2.0 * std::f64::consts::PI * i as f64 / samples as f64;
                center + Point::new(radius * theta.cos(), radius * theta.sin())
            })
            .collect(),
    }
}

/// Whether the pen placed at `q` covers `p`. Containment is re-derived here
/// (half-plane tests / squared radius), independent of the library's region
/// constructions.
pub fn covered_by_pen(p: Point, q: Point, pen: &PenShape) -> bool {
    let d = p - q;
    match pen {
        PenShape::Disk { radius } => d.x * d.x + d.y * d.y <= radius * radius,
        PenShape::Polygon(poly) => {
            let vs = poly.vertices();
            let n = vs.len();
            (0..n).all(|i| {
                let a = vs[i];
                let b = vs[(i + 1) % n];
                (b.x - a.x) * (d.y - a.y) - (b.y - a.y) * (d.x - a.x) >= 0.0
            })
        }
    }
}

/// Membership decided by dense path sampling: the point is in the sweep iff
/// the pen at some sampled path point covers it.
pub fn member_sampled(p: Point, pen: &PenShape, samples: &[Point]) -> bool {
    samples.iter().any(|&q| covered_by_pen(p, q, pen))
}

/// Whether the region boundary passes through the pixel: a 32x32 subsample
/// of the pixel square finds both covered and uncovered points.
pub fn pixel_is_mixed(i: i64, j: i64, pen: &PenShape, samples: &[Point]) -> bool {
    let mut any_in = false;
    let mut any_out = false;
    for sy in 0..32 {
        for sx in 0..32 {
            let p = Point::new(
                i as f64 + (sx as f64 + 0.5) / 32.0,
                j as f64 + (sy as f64 + 0.5) / 32.0,
            );
            if member_sampled(p, pen, samples) {
                any_in = true;
            } else {
                any_out = true;
            }
            if any_in && any_out {
                return true;
            }
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Fixtures shared by several suites.
// ---------------------------------------------------------------------------

/// The nine-pattern demonstration set.
pub const DEMO_PATTERNS: &str = "hy3ph he2n hena4 hen5at 1na n2at 1tio 2io o2n";

/// The minimal two-rule rewrite loop.
pub const LOOP_RULES: &str = "a z |=: b\na b |=: z\n";

pub fn breaks_of(items: &[usize]) -> BTreeSet<usize> {
    items.iter().copied().collect()
}
