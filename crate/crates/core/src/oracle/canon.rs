//! Canonical forms for free trees: AHU parenthesis strings rooted at the
//! centre. A bicentral tree takes the smaller of its two rooted strings.

use crate::graph_core::Tree;

/// The one or two centres of `t`, found by stripping leaves layer by layer.
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = t.degrees().collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// AHU string of `t` rooted at `root`: `(` children-sorted `)` per vertex.
pub fn rooted_form(t: &Tree, root: usize) -> Vec<u8> {
    let parent = t.parents(root);
    let order = t.bfs_order(root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); t.n()];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent[v])
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}

/// Byte string equal for two trees iff they are isomorphic.
pub fn canonical_form(t: &Tree) -> Vec<u8> {
    centers(t)
        .into_iter()
        .map(|c| rooted_form(t, c))
        .min()
        .expect("a tree has a centre")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centres() {
        assert_eq!(centers(&Tree::path(5)), vec![2]);
        assert_eq!(centers(&Tree::path(6)), vec![2, 3]);
        assert_eq!(centers(&Tree::star(6)), vec![0]);
        assert_eq!(centers(&Tree::path(1)), vec![0]);
        assert_eq!(centers(&Tree::path(2)), vec![0, 1]);
    }

    #[test]
    fn relabelled_trees_share_a_form() {
        let t = Tree::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let r = t.relabel(&[4, 2, 0, 3, 1]);
        assert_eq!(canonical_form(&t), canonical_form(&r));
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(
            canonical_form(&Tree::path(5)),
            canonical_form(&Tree::star(5))
        );
        assert_eq!(rooted_form(&Tree::star(3), 0), b"(()())".to_vec());
    }

    #[test]
    fn bicentral_min_is_label_independent() {
        // path 0..5 with a pendant on 2: centres 2 and 3, unequal halves
        let t = Tree::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).unwrap();
        assert_eq!(centers(&t).len(), 2);
        let r = t.relabel(&[6, 5, 3, 2, 1, 0, 4]);
        assert_eq!(canonical_form(&t), canonical_form(&r));
    }
}
