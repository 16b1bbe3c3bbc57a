//! Plain edge-list files, with DIMACS input accepted as well.
//!
//! Edge list (0-based): `#` starts a comment line, the first data line is
//! `n m`, followed by exactly `m` lines `u v`.
//!
//! DIMACS (1-based, converted on read): header `p edge n m`, edge lines
//! `e u v`, comment lines starting with `c` or `#`.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

use maxbisect_core::{Graph, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    EdgeList,
    Dimacs,
}

impl InputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            InputFormat::EdgeList => "edge_list",
            InputFormat::Dimacs => "dimacs",
        }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] maxbisect_core::Error),
}

#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub format: InputFormat,
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn number(line: usize, tok: Option<&str>, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("{what} `{tok}` is not a non-negative integer")))
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut toks = header.split_whitespace();
    let format = if header.starts_with('p') || header.starts_with('c') {
        InputFormat::Dimacs
    } else {
        InputFormat::EdgeList
    };

    let (n, m) = match format {
        InputFormat::EdgeList => {
            let n = number(hline, toks.next(), "vertex count")?;
            let m = number(hline, toks.next(), "edge count")?;
            if toks.next().is_some() {
                return Err(syntax(hline, "trailing tokens after `n m`"));
            }
            (n, m)
        }
        InputFormat::Dimacs => {
            // skip DIMACS comments until the problem line
            let (pline, problem) = std::iter::once((hline, header))
                .chain(lines.by_ref())
                .find(|(_, l)| !l.starts_with('c'))
                .ok_or(ParseError::MissingHeader)?;
            let mut toks = problem.split_whitespace();
            if toks.next() != Some("p") {
                return Err(syntax(pline, "expected `p edge n m`"));
            }
            match toks.next() {
                Some("edge") | Some("col") => {}
                _ => return Err(syntax(pline, "expected `p edge n m`")),
            }
            let n = number(pline, toks.next(), "vertex count")?;
            let m = number(pline, toks.next(), "edge count")?;
            (n, m)
        }
    };

    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        let (u, v) = match format {
            InputFormat::EdgeList => (
                number(line, toks.next(), "endpoint")?,
                number(line, toks.next(), "endpoint")?,
            ),
            InputFormat::Dimacs => match toks.next() {
                Some("c") => continue,
                Some("e") => {
                    let u = number(line, toks.next(), "endpoint")?;
                    let v = number(line, toks.next(), "endpoint")?;
                    if u == 0 || v == 0 {
                        return Err(syntax(line, "DIMACS vertices are 1-based"));
                    }
                    (u - 1, v - 1)
                }
                _ => return Err(syntax(line, "expected `e u v`")),
            },
        };
        if toks.next().is_some() {
            return Err(syntax(line, "trailing tokens after edge"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(ParsedGraph {
        graph: Graph::new(n, edges)?,
        format,
    })
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<ParsedGraph, ParseError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text)
}

/// 0-based edge list, edges in canonical order.
pub fn edge_list_string(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.edge_count() + 1));
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_edge_list<W: Write>(g: &Graph, mut w: W) -> io::Result<()> {
    w.write_all(edge_list_string(g).as_bytes())
}
