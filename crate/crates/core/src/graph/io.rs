//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! p <n> <m>
//! <u> <v>      (m lines, 0-based vertices)
//! ```

use std::io::Write;
use std::path::Path;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 3 || fields[0] != "p" {
                    return Err(err(format!("expected header \"p <n> <m>\", found {line:?}")));
                }
                let n = parse_number(fields[1]).map_err(err)?;
                let m = parse_number(fields[2]).map_err(err)?;
                pairs.reserve(m);
                header = Some((n, m));
            }
            Some((_, m)) => {
                if fields.len() != 2 {
                    return Err(err(format!("expected \"<u> <v>\", found {line:?}")));
                }
                if pairs.len() == m {
                    return Err(err(format!("more than the {m} declared edges")));
                }
                let u = parse_number(fields[0]).map_err(err)?;
                let v = parse_number(fields[1]).map_err(err)?;
                pairs.push((u, v));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, message: "missing header line".into() })?;
    if pairs.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("header declares {m} edges, found {}", pairs.len()),
        });
    }
    Graph::build(n, &pairs)
}

fn parse_number(s: &str) -> std::result::Result<usize, String> {
    s.parse().map_err(|_| format!("not a non-negative integer: {s:?}"))
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text)
}

/// Writes the present edges in id order. A subgraph written this way reads
/// back with its surviving edges renumbered densely.
pub fn write_edge_list(g: &Graph, mut out: impl Write) -> Result<()> {
    writeln!(out, "p {} {}", g.n(), g.m())?;
    for (_, u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

impl Graph {
    pub fn to_edge_list(&self) -> String {
        let mut buf = Vec::new();
        write_edge_list(self, &mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("edge list is ASCII")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# c4\np 4 4\n0 1\n1 2\n\n# more\n2 3\n3 0\n").unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(g.regular_degree(), Some(2));
        assert_eq!(g.endpoints(crate::graph::EdgeId(3)), (0, 3));
    }

    #[test]
    fn round_trip() {
        let g = Graph::build(5, &[(3, 1), (0, 4), (2, 3)]).unwrap();
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_edge_list("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("p 3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("p 3 1\n0 1\n1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("p 3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_edge_list("p 3 1\n0 3\n"), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { line: 0, .. })));
    }
}
