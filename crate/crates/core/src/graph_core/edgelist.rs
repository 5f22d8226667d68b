//! Plain-text edge lists: one `u v` pair of 0-based vertex indices per line.
//! Blank lines and `#` comments are ignored.

use super::{GraphError, Tree, TreeError};

/// Parses an edge list. The vertex count is one more than the largest index
/// mentioned. Loops and duplicate edges are reported with their line number.
pub fn parse_edgelist(text: &str) -> Result<Tree, GraphError> {
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(GraphError::Syntax {
                line,
                message: format!("expected two vertex indices, found {:?}", body),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| GraphError::Syntax {
                line,
                message: format!("{s:?} is not a non-negative integer"),
            })
        };
        edges.push((parse(fields[0])?, parse(fields[1])?, line));
    }
    if edges.is_empty() {
        return Err(GraphError::Syntax {
            line: 1,
            message: "no edges".into(),
        });
    }

    let n = edges.iter().map(|&(u, v, _)| u.max(v)).max().unwrap_or(0) + 1;
    let mut adj = vec![Vec::new(); n];
    for &(u, v, line) in &edges {
        if u == v {
            return Err(GraphError::BadEdge {
                line,
                source: TreeError::SelfLoop(u),
            });
        }
        if adj[u].contains(&v) {
            return Err(GraphError::BadEdge {
                line,
                source: TreeError::DuplicateEdge(u.min(v), u.max(v)),
            });
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    Ok(Tree::from_adjacency(adj)?)
}

/// One `u v` line per edge, `u < v`, lexicographic order.
pub fn emit_edgelist(t: &Tree) -> String {
    let mut out = String::new();
    for (u, v) in t.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
