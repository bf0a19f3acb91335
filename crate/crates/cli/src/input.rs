use crate::CliError;
use alphafactor::graph::{parse_graph6, read_graph6_lines, CorpusLine};
use alphafactor::{Alpha, Graph};
use clap::Args;
use std::path::PathBuf;

/// A single graph6 string or a graph6 file.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Graph in graph6 format
    #[arg(long, value_name = "STRING")]
    pub graph6: Option<String>,
    /// File with one graph6 record per line (optional >>graph6<< header)
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
}

impl GraphSource {
    /// Every graph with its id (the graph6 text). Any malformed record is an
    /// input error.
    pub fn load(&self) -> Result<Vec<(String, Graph)>, CliError> {
        if let Some(text) = &self.graph6 {
            let g = parse_graph6(text.as_bytes()).map_err(|e| CliError::input(format!("--graph6: {e}")))?;
            return Ok(vec![(text.clone(), g)]);
        }
        let path = self.input.as_ref().expect("clap enforces one source");
        let mut out = Vec::new();
        for line in read_corpus(path)? {
            match line.graph {
                Ok(g) => out.push((line.text, g)),
                Err(e) => return Err(CliError::input(format!("{}:{}: {e}", path.display(), line.line))),
            }
        }
        Ok(out)
    }
}

pub fn read_corpus(path: &PathBuf) -> Result<Vec<CorpusLine>, CliError> {
    let data = std::fs::read(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    Ok(read_graph6_lines(&data))
}

/// Accepts decimals and fractions such as `2/3`.
pub fn parse_alpha(text: &str) -> Result<Alpha, String> {
    let q = alphafactor::theorem::parse_rational(text).map_err(|e| e.to_string())?;
    Alpha::new(alphafactor::theorem::to_f64(&q)).map_err(|e| e.to_string())
}

/// As [`parse_alpha`], restricted to `[0, 1)`.
pub fn parse_alpha_below_one(text: &str) -> Result<Alpha, String> {
    let a = parse_alpha(text)?;
    Alpha::below_one(a.value()).map_err(|e| e.to_string())
}
