//! Free trees by successor over level sequences.
//!
//! A rooted tree is written as its preorder list of vertex depths. Rooted
//! trees are stepped through in decreasing canonical order (Beyer and
//! Hedetniemi); a free tree is emitted only when the sequence is its
//! canonical centre-rooted form, and runs of non-canonical sequences are
//! skipped with a single jump (Wright, Richmond, Odlyzko and McKay).

use crate::graph_core::Tree;

/// Iterator over the canonical level sequences of all free trees on `n ≥ 2`
/// vertices.
#[derive(Debug, Clone)]
pub struct LevelSequences {
    next: Option<Vec<usize>>,
}

impl LevelSequences {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "level-sequence generation needs n >= 2");
        // the path rooted at its centre
        let start: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
        LevelSequences { next: Some(start) }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let mut candidate = self.next.take()?;
        loop {
            match jump_if_not_canonical(&candidate) {
                None => break,
                Some(next) => candidate = next?,
            }
        }
        self.next = next_rooted(&candidate, None);
        Some(candidate)
    }
}

/// One step of the rooted-tree successor. With `p = None` the position is
/// the last vertex deeper than level 1.
fn next_rooted(levels: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = levels.len() - 1;
            while levels[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while levels[q] != levels[p] - 1 {
        q -= 1;
    }
    let mut out = levels.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits at the second depth-1 vertex: the first root subtree (depths
/// shifted up by one) and the remainder with the root kept.
fn split(levels: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = levels
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &d)| d == 1)
        .map_or(levels.len(), |(i, _)| i);
    let left = levels[1..m].iter().map(|&d| d - 1).collect();
    let rest = std::iter::once(0)
        .chain(levels[m..].iter().copied())
        .collect();
    (left, rest)
}

/// `None` when `levels` is the canonical free-tree form, otherwise
/// `Some(next candidate)` (itself `None` when the sequence is exhausted).
fn jump_if_not_canonical(levels: &[usize]) -> Option<Option<Vec<usize>>> {
    let (left, rest) = split(levels);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let canonical = rest_height > left_height
        || (rest_height == left_height
            && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if canonical {
        return None;
    }
    let p = left.len();
    let Some(mut next) = next_rooted(levels, Some(p)) else {
        return Some(None);
    };
    if levels[p] > 2 {
        let (new_left, _) = split(&next);
        let height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (slot, depth) in next[len - height - 1..].iter_mut().zip(1..) {
            *slot = depth;
        }
    }
    Some(Some(next))
}

/// The tree whose preorder depth list is `levels`: each vertex hangs off the
/// nearest earlier vertex one level up.
pub fn tree_from_levels(levels: &[usize]) -> Tree {
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (v, &depth) in levels.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if levels[top] >= depth {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&parent) = stack.last() {
            edges.push((parent, v));
        }
        stack.push(v);
    }
    Tree::from_edges(levels.len(), &edges).expect("level sequence encodes a tree")
}

/// Streams one tree per isomorphism class on `n` vertices.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    inner: Option<LevelSequences>,
    single_pending: bool,
}

impl FreeTrees {
    pub(crate) fn new(n: usize) -> Self {
        if n == 1 {
            FreeTrees {
                inner: None,
                single_pending: true,
            }
        } else {
            FreeTrees {
                inner: Some(LevelSequences::new(n)),
                single_pending: false,
            }
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.single_pending {
            self.single_pending = false;
            return Some(Tree::path(1));
        }
        self.inner.as_mut()?.next().map(|l| tree_from_levels(&l))
    }
}
