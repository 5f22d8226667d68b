//! Tree representation, degree sequences and the two interchange formats
//! (graph6 and plain edge lists).
//!
//! A [`Tree`] is validated once, at construction. Every other routine in the
//! crate takes `&Tree` and may assume the structural invariants hold: `n - 1`
//! edges, connected, simple, symmetric adjacency.

mod edgelist;
mod graph6;
mod sequence;

pub use edgelist::{emit_edgelist, parse_edgelist};
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_adjacency};
pub use sequence::{is_tree_sequence, DegreeSequence};

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Structural reasons an edge set is not a tree.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected: traversal from vertex 0 reached {reached} of {n} vertices")]
    Disconnected { reached: usize, n: usize },
    #[error("wrong edge count: a tree on {n} vertices has {expected} edges, found {found}")]
    WrongEdgeCount {
        n: usize,
        expected: usize,
        found: usize,
    },
}

/// Errors from the text formats and from degree-sequence validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph6 vertex count mismatch: header implies {expected} data bytes, found {found}")]
    VertexCountMismatch { expected: usize, found: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    BadEdge { line: usize, source: TreeError },
    #[error("not a tree: {0}")]
    NotATree(#[from] TreeError),
    #[error("degree {0} is not a positive integer")]
    NonPositiveDegree(u32),
    #[error("empty degree sequence")]
    EmptySequence,
}

/// An undirected labelled tree on vertices `0..n`.
///
/// Neighbour lists are kept sorted, so two trees with the same edge set
/// compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from an explicit edge list on `n` vertices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        let adj = build_adjacency(n, edges.iter().copied())?;
        Self::from_adjacency(adj)
    }

    /// Validates an adjacency structure. Lists are re-sorted; symmetry,
    /// simplicity, connectivity and the edge count are all checked.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self, TreeError> {
        let n = adj.len();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut half_edges = 0usize;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            for w in list.windows(2) {
                if w[0] == w[1] {
                    return Err(TreeError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
                }
            }
            for &v in list.iter() {
                if v >= n {
                    return Err(TreeError::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(TreeError::SelfLoop(u));
                }
            }
            half_edges += list.len();
        }
        for (u, list) in adj.iter().enumerate() {
            for &v in list {
                if adj[v].binary_search(&u).is_err() {
                    // one-sided entry: treat as malformed edge
                    return Err(TreeError::WrongEdgeCount {
                        n,
                        expected: n - 1,
                        found: half_edges / 2,
                    });
                }
            }
        }
        let tree = Tree { adj };
        let reached = tree.bfs_order(0).len();
        if reached != n {
            return Err(TreeError::Disconnected { reached, n });
        }
        let edges = half_edges / 2;
        if edges != n - 1 {
            return Err(TreeError::WrongEdgeCount {
                n,
                expected: n - 1,
                found: edges,
            });
        }
        Ok(tree)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "path needs at least one vertex");
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("path is a tree")
    }

    /// The star with centre 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1, "star needs at least one vertex");
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Self::from_edges(n, &edges).expect("star is a tree")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len() - 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(Vec::len)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// Vertices in breadth-first order from `root`.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut order = Vec::with_capacity(self.n());
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        order
    }

    /// Parent pointers of the tree rooted at `root` (`parent[root] == root`).
    pub fn parents(&self, root: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.n()];
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        parent
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n());
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::from_edges(self.n(), &edges).expect("relabelling must be a permutation")
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Adjacency lists from raw edges, rejecting loops, duplicates and
/// out-of-range endpoints. Connectivity is left to [`Tree::from_adjacency`].
pub(crate) fn build_adjacency(
    n: usize,
    edges: impl IntoIterator<Item = (usize, usize)>,
) -> Result<Vec<Vec<usize>>, TreeError> {
    if n == 0 {
        return Err(TreeError::Empty);
    }
    let mut adj = vec![Vec::new(); n];
    for (u, v) in edges {
        for w in [u, v] {
            if w >= n {
                return Err(TreeError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(TreeError::SelfLoop(u));
        }
        if adj[u].contains(&v) {
            return Err(TreeError::DuplicateEdge(u.min(v), u.max(v)));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    Ok(adj)
}

/// Degrees of `t`, sorted non-increasing.
pub fn degree_sequence_of(t: &Tree) -> DegreeSequence {
    DegreeSequence::from_tree_degrees(t.degrees().map(|d| d as u32).collect())
}

/// Maximum degree and the number of vertices attaining it.
pub fn max_degree_count(t: &Tree) -> (usize, usize) {
    let max = t.max_degree();
    (max, t.degrees().filter(|&d| d == max).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double_star_6() -> Tree {
        // centres 0 and 1, each with two leaves
        Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
    }

    #[test]
    fn path_and_star_sequences() {
        assert_eq!(degree_sequence_of(&Tree::path(4)).as_slice(), &[2, 2, 1, 1]);
        assert_eq!(
            degree_sequence_of(&Tree::star(5)).as_slice(),
            &[4, 1, 1, 1, 1]
        );
    }

    #[test]
    fn figure_one_shape_has_a_single_degree_four() {
        // u = 0 with neighbours v_{i-1}=1, v_{i+1}=2, u1=3, u2=4; z1 hangs off u1
        let t = Tree::from_edges(
            9,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
                (4, 8),
            ],
        )
        .unwrap();
        let d = degree_sequence_of(&t);
        assert_eq!(d.as_slice().iter().filter(|&&x| x == 4).count(), 1);
        assert_eq!(d.as_slice(), &[4, 2, 2, 2, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn max_degree_counts() {
        assert_eq!(max_degree_count(&Tree::path(6)), (2, 4));
        assert_eq!(max_degree_count(&Tree::star(6)), (5, 1));
        assert_eq!(max_degree_count(&double_star_6()), (3, 2));
    }

    #[test]
    fn construction_rejects_non_trees() {
        assert_eq!(Tree::from_edges(0, &[]), Err(TreeError::Empty));
        assert_eq!(
            Tree::from_edges(3, &[(0, 1), (1, 1)]),
            Err(TreeError::SelfLoop(1))
        );
        assert_eq!(
            Tree::from_edges(3, &[(0, 1), (1, 0)]),
            Err(TreeError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Tree::from_edges(4, &[(0, 1), (2, 3)]),
            Err(TreeError::Disconnected { reached: 2, n: 4 })
        );
        assert_eq!(
            Tree::from_edges(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(TreeError::WrongEdgeCount {
                n: 3,
                expected: 2,
                found: 3
            })
        );
        assert!(matches!(
            Tree::from_edges(2, &[(0, 5)]),
            Err(TreeError::VertexOutOfRange { vertex: 5, n: 2 })
        ));
    }

    #[test]
    fn one_sided_adjacency_is_rejected() {
        assert!(Tree::from_adjacency(vec![vec![1], vec![]]).is_err());
    }

    #[test]
    fn single_vertex() {
        let t = Tree::path(1);
        assert_eq!(t.n(), 1);
        assert_eq!(t.edge_count(), 0);
        assert_eq!(max_degree_count(&t), (0, 1));
        assert_eq!(degree_sequence_of(&t).as_slice(), &[0]);
    }

    #[test]
    fn relabelling_keeps_sequence() {
        let t = double_star_6();
        let r = t.relabel(&[5, 3, 0, 1, 2, 4]);
        assert_ne!(t, r);
        assert_eq!(degree_sequence_of(&t), degree_sequence_of(&r));
    }
}
