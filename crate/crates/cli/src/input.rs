//! Streaming tree reader for `compute`.
//!
//! The format is decided by the first content line: if it contains
//! whitespace the input is a sequence of edge-list blocks separated by blank
//! lines, otherwise every content line is one graph6 string. Lines starting
//! with `#` are skipped in both forms.

use std::io::BufRead;

use zagreb_core::graph_core::{parse_edgelist, parse_graph6, GraphError};
use zagreb_core::Tree;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Graph6,
    EdgeList,
}

/// An edge-list block under construction: the raw lines and where each one
/// sits in the input.
#[derive(Default)]
struct Block {
    text: String,
    lines: Vec<usize>,
}

impl Block {
    fn push(&mut self, line: usize, raw: &str) {
        self.text.push_str(raw);
        self.text.push('\n');
        self.lines.push(line);
    }

    fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Parses the block, translating block-relative line numbers in errors
    /// back to input line numbers.
    fn finish(&mut self) -> Result<(usize, Tree), CliError> {
        let text = std::mem::take(&mut self.text);
        let lines = std::mem::take(&mut self.lines);
        let global = |local: usize| {
            lines
                .get(local.wrapping_sub(1))
                .copied()
                .unwrap_or(lines[0])
        };
        match parse_edgelist(&text) {
            Ok(t) => Ok((lines[0], t)),
            Err(GraphError::Syntax { line, message }) => Err(CliError::Parse {
                line: global(line),
                message,
            }),
            Err(GraphError::BadEdge { line, source }) => Err(CliError::Parse {
                line: global(line),
                message: source.to_string(),
            }),
            Err(e) => Err(CliError::Parse {
                line: lines[0],
                message: e.to_string(),
            }),
        }
    }
}

/// Calls `visit` with `(first input line, tree)` for every tree in `input`,
/// in order, stopping at the first parse error.
pub fn for_each_tree<R, F>(input: R, mut visit: F) -> Result<usize, CliError>
where
    R: BufRead,
    F: FnMut(usize, Tree) -> Result<(), CliError>,
{
    let mut mode = None;
    let mut block = Block::default();
    let mut seen = 0;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let raw = raw.map_err(|e| CliError::Parse {
            line,
            message: e.to_string(),
        })?;
        let body = raw.trim();
        if body.starts_with('#') {
            continue;
        }
        if body.is_empty() {
            if !block.is_empty() {
                let (at, t) = block.finish()?;
                visit(at, t)?;
                seen += 1;
            }
            continue;
        }
        let mode = *mode.get_or_insert(if body.contains(char::is_whitespace) {
            Mode::EdgeList
        } else {
            Mode::Graph6
        });
        match mode {
            Mode::Graph6 => {
                let t = parse_graph6(body).map_err(|e| CliError::Parse {
                    line,
                    message: e.to_string(),
                })?;
                visit(line, t)?;
                seen += 1;
            }
            Mode::EdgeList => block.push(line, &raw),
        }
    }
    if !block.is_empty() {
        let (at, t) = block.finish()?;
        visit(at, t)?;
        seen += 1;
    }
    Ok(seen)
}
