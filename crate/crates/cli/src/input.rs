//! Reading list and tree inputs, with the size limits the CLI enforces.

use std::fs;
use std::path::PathBuf;

use segsum::shapes::parse_term;
use segsum::{ShapeKind, Term};

use crate::CliError;

/// Longest list accepted.
pub const MAX_LIST_LEN: usize = 1_000_000;
/// Largest tree accepted, in nodes.
pub const MAX_TREE_NODES: usize = 100_000;

/// Where the input text comes from.
#[derive(clap::Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Input given inline.
    #[arg(long, allow_hyphen_values = true)]
    pub input: Option<String>,
    /// Input read from a file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

impl Source {
    pub fn text(&self) -> Result<String, CliError> {
        match (&self.input, &self.file) {
            (Some(s), _) => Ok(s.clone()),
            (None, Some(p)) => {
                fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))
            }
            (None, None) => Err(CliError::Usage("one of --input or --file is required".into())),
        }
    }
}

/// Integers separated by commas and/or whitespace. An empty input is the
/// empty list.
pub fn parse_list(text: &str) -> Result<Vec<i64>, CliError> {
    let mut out = Vec::new();
    for tok in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        if out.len() == MAX_LIST_LEN {
            return Err(CliError::Usage(format!("list longer than {MAX_LIST_LEN} elements")));
        }
        let n = tok
            .parse()
            .map_err(|_| CliError::Parse(format!("`{tok}` is not a 64-bit integer")))?;
        out.push(n);
    }
    Ok(out)
}

pub fn parse_tree(text: &str, shape: ShapeKind) -> Result<Term, CliError> {
    // Every node contributes at least one token, so this bounds the work
    // before the parser builds anything.
    let tokens = text.matches('(').count() + text.matches("nil").count();
    if tokens > 2 * MAX_TREE_NODES {
        return Err(CliError::Usage(format!("tree larger than {MAX_TREE_NODES} nodes")));
    }
    let t = parse_term(text, shape).map_err(|e| CliError::Parse(e.to_string()))?;
    if t.size() > MAX_TREE_NODES {
        return Err(CliError::Usage(format!(
            "tree of {} nodes exceeds the limit of {MAX_TREE_NODES}",
            t.size()
        )));
    }
    Ok(t)
}
