use super::Graph;
use crate::error::{Error, ParseError};

/// Parses the edge-list text format.
///
/// Each non-blank line not starting with `#` is either an edge `u v` or,
/// before any edge, a header `n <k>` fixing the vertex count. Without a
/// header the vertex count is the largest id seen. Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<u32> = None;
    let mut edges = Vec::new();
    let mut max_id = 0u32;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::Arity {
                line,
                found: tokens.len(),
            });
        }
        if tokens[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(ParseError::Header { line });
            }
            let k = parse_id(tokens[1], line)?;
            if k == 0 {
                return Err(ParseError::Empty);
            }
            declared = Some(k);
            continue;
        }
        let u = parse_id(tokens[0], line)?;
        let v = parse_id(tokens[1], line)?;
        for w in [u, v] {
            if w == 0 {
                return Err(ParseError::OutOfRange {
                    line,
                    vertex: 0,
                    n: declared.unwrap_or(u32::MAX),
                });
            }
            if let Some(n) = declared {
                if w > n {
                    return Err(ParseError::OutOfRange { line, vertex: w, n });
                }
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        max_id = max_id.max(u).max(v);
        edges.push((u, v));
    }
    let n = declared.unwrap_or(max_id);
    match Graph::from_edges(n, edges) {
        Ok(g) => Ok(g),
        Err(Error::EmptyGraph) => Err(ParseError::Empty),
        Err(e) => unreachable!("edges were validated while parsing: {e}"),
    }
}

fn parse_id(token: &str, line: usize) -> Result<u32, ParseError> {
    token.parse::<u32>().map_err(|_| ParseError::Malformed {
        line,
        token: token.to_string(),
    })
}
