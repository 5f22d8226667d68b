use std::fmt;

use serde::{Deserialize, Serialize};

use super::GraphError;

/// A non-increasing list of vertex degrees.
///
/// Entries are positive, except for the single-vertex tree whose sequence
/// is `(0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    /// Sorts `degrees` non-increasing. Zero entries are rejected.
    pub fn new(mut degrees: Vec<u32>) -> Result<Self, GraphError> {
        if degrees.is_empty() {
            return Err(GraphError::EmptySequence);
        }
        if let Some(&d) = degrees.iter().find(|&&d| d == 0) {
            if degrees.len() > 1 {
                return Err(GraphError::NonPositiveDegree(d));
            }
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(degrees))
    }

    /// Builds a sequence from blocks of `(degree, multiplicity)`.
    pub fn from_blocks(blocks: &[(u32, usize)]) -> Result<Self, GraphError> {
        let degrees = blocks
            .iter()
            .flat_map(|&(d, m)| std::iter::repeat_n(d, m))
            .collect();
        Self::new(degrees)
    }

    pub(crate) fn from_tree_degrees(mut degrees: Vec<u32>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&d| d as u64).sum()
    }

    pub fn max_degree(&self) -> u32 {
        self.0[0]
    }

    /// Number of entries equal to the maximum.
    pub fn max_count(&self) -> usize {
        let max = self.0[0];
        self.0.iter().take_while(|&&d| d == max).count()
    }

    /// `counts[i]` is the number of vertices of degree `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_degree() as usize + 1];
        for &d in &self.0 {
            counts[d as usize] += 1;
        }
        counts
    }

    /// `(degree, count)` pairs in decreasing degree order, zero counts
    /// omitted.
    pub fn blocks(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &d in &self.0 {
            match out.last_mut() {
                Some((last, c)) if *last == d => *c += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    /// True iff the degrees sum to `2(n - 1)`.
    pub fn is_tree_sequence(&self) -> bool {
        self.sum() == 2 * (self.len() as u64 - 1)
    }

    /// Run-length form such as `5,5,2,1^8`.
    pub fn compact(&self) -> String {
        self.blocks()
            .into_iter()
            .map(|(d, c)| match c {
                1 => d.to_string(),
                2 => format!("{d},{d}"),
                _ => format!("{d}^{c}"),
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Whether `degrees` (in any order) is the degree sequence of some tree,
/// i.e. sums to `2(n - 1)`. Entries below 1 are a domain error.
pub fn is_tree_sequence(degrees: &[u32]) -> Result<bool, GraphError> {
    if degrees.is_empty() {
        return Err(GraphError::EmptySequence);
    }
    if let Some(&d) = degrees.iter().find(|&&d| d < 1) {
        return Err(GraphError::NonPositiveDegree(d));
    }
    let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
    Ok(sum == 2 * (degrees.len() as u64 - 1))
}
