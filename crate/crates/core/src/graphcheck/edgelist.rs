use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::{Graph, GraphError};

/// Parses `u v` lines (0-indexed); `#` starts a comment. The vertex count
/// is one more than the largest index seen.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| GraphError::Parse {
            line: lineno + 1,
            message,
        };
        let mut fields = line.split_whitespace();
        let mut next = || -> Result<usize, GraphError> {
            let tok = fields.next().ok_or_else(|| err("expected two vertex indices".into()))?;
            tok.parse()
                .map_err(|_| err(format!("{tok:?} is not a vertex index")))
        };
        let u = next()?;
        let v = next()?;
        if fields.next().is_some() {
            return Err(err("trailing fields".into()));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    if n == 0 {
        return Err(GraphError::Empty);
    }
    Graph::from_edges(n, edges)
}

/// One `u v` line per edge with `u < v`, in lexicographic order.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcheck::generators::petersen;

    #[test]
    fn round_trip() {
        let g = petersen();
        assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn comments_and_errors() {
        let g = parse_edge_list("# triangle\n0 1\n\n1 2 # side\n2 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(matches!(parse_edge_list("0 x"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 1\n1"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1 2"), Err(GraphError::Parse { .. })));
        assert_eq!(parse_edge_list("# nothing\n"), Err(GraphError::Empty));
        assert_eq!(parse_edge_list("3 3"), Err(GraphError::SelfLoop(3)));
    }
}
