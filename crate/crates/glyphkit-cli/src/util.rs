//! Small shared plumbing: failures, file reading, output, and color.

use std::io::{IsTerminal, Write};
use std::path::Path;

/// A failure that terminates the process with `code` after printing
/// `message` to the error stream. Parse and usage problems use code 2.
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

pub fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

/// Writes bytes to `out` or standard output. Text sent to the terminal gets
/// a final newline when it lacks one; files receive the exact bytes.
pub fn write_output(bytes: &[u8], out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(bytes)
                .and_then(|_| {
                    if bytes.last() != Some(&b'\n') {
                        lock.write_all(b"\n")
                    } else {
                        Ok(())
                    }
                })
                .map_err(|e| Failure::usage(format!("cannot write to stdout: {e}")))
        }
    }
}

/// Binary formats refuse to write into a terminal unless forced.
pub fn guard_binary_stdout(force: bool) -> Result<(), Failure> {
    if !force && std::io::stdout().is_terminal() {
        return Err(Failure::usage(
            "refusing to write binary data to a terminal (use --force or --out FILE)",
        ));
    }
    Ok(())
}

/// ANSI styling, active only on a terminal and without GLYPHKIT_NO_COLOR.
pub fn styled(text: &str, color_code: &str) -> String {
    let enabled =
        std::env::var_os("GLYPHKIT_NO_COLOR").is_none() && std::io::stdout().is_terminal();
    if enabled {
        format!("\x1b[{color_code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

pub fn green(text: &str) -> String {
    styled(text, "32")
}

pub fn red(text: &str) -> String {
    styled(text, "31")
}

/// Parses an `X,Y` coordinate pair.
pub fn parse_point(s: &str) -> Result<glyphkit::raster::Point, Failure> {
    let err = || Failure::usage(format!("expected X,Y coordinates, got {s:?}"));
    let (x, y) = s.split_once(',').ok_or_else(err)?;
    Ok(glyphkit::raster::Point::new(
        x.trim().parse().map_err(|_| err())?,
        y.trim().parse().map_err(|_| err())?,
    ))
}
