//! `glyphkit hyphenate`

use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use glyphkit::hyphenation::{
    build_trie, hyphenate, pack_trie, parse_exceptions, parse_patterns, render_breaks,
    ExceptionDict, PatternMatcher,
};
use glyphkit::letter::{letters_of, FoldTable};

use crate::util::{read_file, Failure};

#[derive(Args)]
pub struct HyphenateArgs {
    /// Pattern file (whitespace-separated tokens, `%` comments)
    #[arg(long, value_name = "FILE")]
    patterns: PathBuf,

    /// Exception file (words with `-` at permitted breaks)
    #[arg(long, value_name = "FILE")]
    exceptions: Option<PathBuf>,

    /// Minimum letters before the first break
    #[arg(long, value_name = "N", default_value_t = 2)]
    left_min: usize,

    /// Minimum letters after the last break
    #[arg(long, value_name = "N", default_value_t = 3)]
    right_min: usize,

    /// Character inserted at each permitted break
    #[arg(long, value_name = "CHAR", default_value_t = '-')]
    marker: char,

    /// Query through the packed trie instead of the linked one
    #[arg(long)]
    packed: bool,

    /// Print pattern/trie statistics as JSON and exit
    #[arg(long)]
    stats: bool,

    /// Words to hyphenate; standard input is read when none are given
    words: Vec<String>,
}

pub fn run(args: HyphenateArgs) -> Result<i32, Failure> {
    let fold = FoldTable::ascii();
    let text = read_file(&args.patterns)?;
    let patterns = parse_patterns(&text, &fold)
        .map_err(|e| Failure::usage(format!("{}: {e}", args.patterns.display())))?;
    let (trie, warnings) = build_trie(&patterns);
    for w in &warnings {
        eprintln!("glyphkit: warning: {w}");
    }

    if args.stats {
        let stats = trie.stats();
        let packed = pack_trie(&trie);
        println!(
            "{{\"patterns\":{},\"nodes\":{},\"packed_len\":{},\"max_depth\":{}}}",
            stats.patterns,
            stats.nodes,
            packed.len(),
            stats.max_depth
        );
        return Ok(0);
    }

    let exceptions = match &args.exceptions {
        Some(path) => {
            let text = read_file(path)?;
            parse_exceptions(&text, &fold)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
        None => ExceptionDict::new(),
    };

    let words: Vec<String> = if args.words.is_empty() {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
        buf.split_whitespace().map(str::to_string).collect()
    } else {
        args.words.clone()
    };

    if args.packed {
        let packed = pack_trie(&trie);
        emit_words(&words, &packed, &fold, &args, &exceptions);
    } else {
        emit_words(&words, &trie, &fold, &args, &exceptions);
    }
    Ok(0)
}

fn emit_words(
    words: &[String],
    matcher: &impl PatternMatcher,
    fold: &FoldTable,
    args: &HyphenateArgs,
    exceptions: &ExceptionDict,
) {
    for word in words {
        let original = letters_of(word);
        let folded = fold.fold_word(&original);
        let result = hyphenate(&folded, matcher, args.left_min, args.right_min, exceptions);
        // Breaks are computed on the folded word but shown on the original.
        println!("{}", render_breaks(&original, &result.breaks, args.marker));
    }
}
