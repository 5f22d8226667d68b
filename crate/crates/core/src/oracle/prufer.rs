//! Labelled trees through Prüfer codes.
//!
//! This is the independent route used to check the free-tree generator: all
//! `n^(n-2)` labelled trees, reduced to isomorphism classes by
//! [`canonical_form`]. It is also the source of uniformly random labelled
//! trees.

use std::collections::HashSet;

use rand::Rng;
use rayon::prelude::*;

use super::canon::canonical_form;
use crate::graph_core::Tree;

/// Decodes a Prüfer code of length `n - 2` over `0..n`.
pub fn decode_prufer(code: &[usize]) -> Tree {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n];
    for &c in code {
        assert!(c < n, "Prüfer symbol {c} out of range for {n} vertices");
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // smallest current leaf, advanced monotonically
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &c in code {
        edges.push((leaf, c));
        degree[c] -= 1;
        if c < ptr && degree[c] == 1 {
            leaf = c;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Tree::from_edges(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Every Prüfer code on `n` vertices in lexicographic order.
#[derive(Debug, Clone)]
pub struct PruferCodes {
    n: usize,
    code: Vec<usize>,
    done: bool,
}

impl PruferCodes {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "Prüfer codes need n >= 2");
        PruferCodes {
            n,
            code: vec![0; n - 2],
            done: false,
        }
    }

    fn with_prefix(n: usize, first: usize) -> Self {
        let mut codes = PruferCodes::new(n);
        codes.code[0] = first;
        codes
    }
}

impl Iterator for PruferCodes {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.code.clone();
        let mut i = self.code.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.code[i] += 1;
            if self.code[i] < self.n {
                break;
            }
            self.code[i] = 0;
        }
        Some(out)
    }
}

/// Number of isomorphism classes of trees on `n` vertices, counted by
/// decoding every Prüfer code and deduplicating canonical forms.
pub fn labelled_free_tree_count(n: usize) -> usize {
    distinct_forms(n).len()
}

/// Canonical forms of all trees on `n` vertices via Prüfer codes.
pub fn distinct_forms(n: usize) -> HashSet<Vec<u8>> {
    match n {
        0 => HashSet::new(),
        1 => HashSet::from([canonical_form(&Tree::path(1))]),
        2 => HashSet::from([canonical_form(&Tree::path(2))]),
        _ => (0..n)
            .into_par_iter()
            .map(|first| {
                PruferCodes::with_prefix(n, first)
                    .take_while(|code| code[0] == first)
                    .map(|code| canonical_form(&decode_prufer(&code)))
                    .collect::<HashSet<_>>()
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            }),
    }
}

/// A uniformly random labelled tree on `n ≥ 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 1);
    if n == 1 {
        return Tree::path(1);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    decode_prufer(&code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn decode_known_codes() {
        // classic example: code (3,3,3,4) on 6 vertices
        let t = decode_prufer(&[3, 3, 3, 4]);
        let edges: Vec<_> = t.edges().collect();
        assert_eq!(edges, vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(decode_prufer(&[]), Tree::path(2));
        assert_eq!(decode_prufer(&[0, 0, 0]), Tree::star(5));
    }

    #[test]
    fn code_counts() {
        assert_eq!(PruferCodes::new(4).count(), 16);
        assert_eq!(PruferCodes::new(2).count(), 1);
        let all: HashSet<Tree> = PruferCodes::new(5).map(|c| decode_prufer(&c)).collect();
        assert_eq!(all.len(), 125);
    }

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (1..=7).map(labelled_free_tree_count).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11]);
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..40 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.n(), n);
            assert_eq!(t.bfs_order(0).len(), n);
        }
    }
}
