//! graph6, undirected simple graphs.
//!
//! `N(n)` followed by the upper triangle of the adjacency matrix read column
//! by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per
//! byte, most significant bit first, each byte offset by 63.

use super::{build_adjacency, GraphError, Tree};

const HEADER: &str = ">>graph6<<";
const OFFSET: u8 = 63;
const MAX_N: usize = 258_047;

fn encode_size(n: usize, out: &mut String) {
    if n < 63 {
        out.push((n as u8 + OFFSET) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + OFFSET) as char);
        }
    }
}

/// Encodes `t` as a graph6 string, without header or trailing newline.
pub fn emit_graph6(t: &Tree) -> String {
    let n = t.n();
    assert!(n <= MAX_N, "graph6 supports at most {MAX_N} vertices");
    let mut out = String::new();
    encode_size(n, &mut out);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | t.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + OFFSET) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + OFFSET) as char);
    }
    out
}

/// Decodes a graph6 string into raw adjacency lists without any tree check.
pub fn parse_graph6_adjacency(text: &str) -> Result<Vec<Vec<usize>>, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::MalformedGraph6("empty string".into()));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(GraphError::MalformedGraph6(format!(
            "byte {:#04x} at position {pos} outside the printable range 63..=126",
            bytes[pos]
        )));
    }
    let (n, data) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            return Err(GraphError::MalformedGraph6(
                "8-byte size form is not supported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(GraphError::MalformedGraph6("truncated size field".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(GraphError::VertexCountMismatch {
            expected,
            found: data.len(),
        });
    }

    let bit = |k: usize| ((data[k / 6] - OFFSET) >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..expected * 6).any(bit) {
        return Err(GraphError::MalformedGraph6("non-zero padding bits".into()));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    // a bit matrix cannot hold loops or parallel edges
    Ok(build_adjacency(n, edges).expect("graph6 edges are simple"))
}

/// Decodes a graph6 string and checks that the graph is a tree.
pub fn parse_graph6(text: &str) -> Result<Tree, GraphError> {
    let adj = parse_graph6_adjacency(text)?;
    Ok(Tree::from_adjacency(adj)?)
}
