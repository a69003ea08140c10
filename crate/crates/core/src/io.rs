//! The edge-list text format.
//!
//! Lines starting with `#` are comments; a `# family: <spec>` comment
//! carries generator provenance and survives round trips. The first data
//! line is `n m`, followed by exactly `m` lines `u v` with
//! `0 <= u < v < n`, whitespace-separated ASCII decimal. Emission is
//! canonical (sorted edges), so emit-parse-emit is byte-identical.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub family: Option<String>,
    pub graph: Graph,
}

impl GraphDocument {
    pub fn new(graph: Graph) -> Self {
        GraphDocument {
            family: None,
            graph,
        }
    }

    pub fn with_family(graph: Graph, family: String) -> Self {
        GraphDocument {
            family: Some(family),
            graph,
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_decimal(token: &str, line: usize) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(
            line,
            format!("expected a decimal number, got {token:?}"),
        ));
    }
    token
        .parse()
        .map_err(|_| parse_err(line, format!("number out of range: {token}")))
}

pub fn parse_graph_document(text: &str) -> Result<GraphDocument> {
    let mut family = None;
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if family.is_none() {
                if let Some(spec) = comment.trim().strip_prefix("family:") {
                    family = Some(spec.trim().to_string());
                }
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(parse_err(line_no, "header must be `n m`"));
                }
                let n = parse_decimal(tokens[0], line_no)?;
                let m = parse_decimal(tokens[1], line_no)?;
                header = Some((n, m));
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(parse_err(
                        line_no,
                        format!("more than the declared {m} edges"),
                    ));
                }
                if tokens.len() != 2 {
                    return Err(parse_err(line_no, "edge line must be `u v`"));
                }
                let u = parse_decimal(tokens[0], line_no)?;
                let v = parse_decimal(tokens[1], line_no)?;
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
                }
                if u > v {
                    return Err(parse_err(
                        line_no,
                        format!("edge ({u}, {v}) must be written u < v"),
                    ));
                }
                if v >= n {
                    return Err(parse_err(
                        line_no,
                        format!("vertex {v} out of range for n = {n}"),
                    ));
                }
                if !seen.insert((u, v)) {
                    return Err(parse_err(line_no, format!("duplicate edge ({u}, {v})")));
                }
                edges.push((u, v));
            }
        }
    }

    let last_line = text.lines().count().max(1);
    let (n, m) = header.ok_or_else(|| parse_err(last_line, "missing `n m` header"))?;
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    let graph = Graph::from_edges(n, &edges).map_err(|e| match e {
        Error::InvalidArgument(msg) => parse_err(last_line, msg),
        other => other,
    })?;
    Ok(GraphDocument { family, graph })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_graph_document(text).map(|doc| doc.graph)
}

/// Canonical emission: optional provenance comment, `n m` header, sorted
/// edges.
pub fn emit_graph_document(doc: &GraphDocument) -> String {
    let mut out = String::new();
    if let Some(family) = &doc.family {
        out.push_str("# family: ");
        out.push_str(family);
        out.push('\n');
    }
    let g = &doc.graph;
    out.push_str(&format!("{} {}\n", g.n(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn emit_graph(g: &Graph) -> String {
    emit_graph_document(&GraphDocument::new(g.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn parses_triangle() {
        let g = parse_graph("3 3\n0 1\n0 2\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        g.validate().unwrap();
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let g = generators::gen_dc(6).unwrap();
        let doc = GraphDocument::with_family(g, "dc n=6".to_string());
        let text = emit_graph_document(&doc);
        let parsed = parse_graph_document(&text).unwrap();
        assert_eq!(parsed.family.as_deref(), Some("dc n=6"));
        assert_eq!(emit_graph_document(&parsed), text);
    }

    #[test]
    fn rejects_self_loop() {
        let err = parse_graph("3 1\n0 0\n").unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("self-loop"));
            }
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn rejects_malformed_inputs() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("3\n").is_err());
        assert!(parse_graph("3 2\n0 1\n").is_err()); // fewer edges than declared
        assert!(parse_graph("3 1\n0 1\n1 2\n").is_err()); // more edges than declared
        assert!(parse_graph("3 1\n1 0\n").is_err()); // u > v
        assert!(parse_graph("3 1\n0 5\n").is_err()); // out of range
        assert!(parse_graph("3 2\n0 1\n0 1\n").is_err()); // duplicate
        assert!(parse_graph("3 1\n0 -1\n").is_err()); // not decimal
        assert!(parse_graph("x 1\n0 1\n").is_err());
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# a comment\n\n2 1\n# another\n0 1\n# trailing\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn empty_graph_document() {
        let g = parse_graph("0 0\n").unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(emit_graph(&g), "0 0\n");
    }
}
