//! Exhaustive catalog of non-isomorphic trees with a bounded edge count.
//! Small sizes are generated from all Prüfer sequences and deduplicated by
//! a canonical form; larger sizes grow level by level through leaf
//! attachment, which visits every isomorphism class without iterating the
//! full labeled-tree space.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Labeled tree on `seq.len() + 2` vertices decoded from a Prüfer
/// sequence.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    debug_assert!(seq.iter().all(|&a| a < n));
    let mut degree = vec![1u32; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &a in seq {
        let leaf = (0..n).find(|&v| !used[v] && degree[v] == 1).unwrap();
        edges.push((leaf.min(a), leaf.max(a)));
        used[leaf] = true;
        degree[a] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !used[v]).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

fn centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 1 {
        return vec![0];
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v).unwrap()).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for u in g.neighbors(v).unwrap() {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn rooted_code(g: &Graph, u: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> = g
        .neighbors(u)
        .unwrap()
        .into_iter()
        .filter(|&v| Some(v) != parent)
        .map(|v| rooted_code(g, v, Some(u)))
        .collect();
    children.sort();
    let mut code = String::from("(");
    for c in children {
        code.push_str(&c);
    }
    code.push(')');
    code
}

/// Isomorphism-invariant canonical code: the smaller of the rooted codes
/// taken at the tree's one or two centers.
pub fn canonical_code(g: &Graph) -> String {
    centers(g).into_iter().map(|c| rooted_code(g, c, None)).min().unwrap()
}

/// Rebuilds the canonical representative from a code: vertices are
/// numbered in preorder, so every edge follows an edge it shares a vertex
/// with.
fn decode(code: &str) -> Graph {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0usize;
    for ch in code.chars() {
        match ch {
            '(' => {
                if let Some(&parent) = stack.last() {
                    edges.push((parent, next));
                }
                stack.push(next);
                next += 1;
            }
            ')' => {
                stack.pop();
            }
            _ => unreachable!("canonical codes contain only parentheses"),
        }
    }
    Graph::new(next, edges).unwrap()
}

fn prufer_codes(edge_count: usize) -> BTreeSet<String> {
    let n = edge_count + 1;
    let mut codes = BTreeSet::new();
    if n < 2 {
        return codes;
    }
    if n == 2 {
        codes.insert(canonical_code(&tree_from_prufer(&[])));
        return codes;
    }
    let mut seq = vec![0usize; n - 2];
    loop {
        codes.insert(canonical_code(&tree_from_prufer(&seq)));
        // odometer over [0, n)^(n-2)
        let mut pos = seq.len();
        loop {
            if pos == 0 {
                return codes;
            }
            pos -= 1;
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
        }
    }
}

fn extend_codes(prev: &BTreeSet<String>) -> BTreeSet<String> {
    let mut codes = BTreeSet::new();
    for code in prev {
        let g = decode(code);
        for v in 0..g.n() {
            let mut edges = g.edges().to_vec();
            edges.push((v, g.n()));
            let bigger = Graph::new(g.n() + 1, edges).unwrap();
            codes.insert(canonical_code(&bigger));
        }
    }
    codes
}

/// All non-isomorphic trees with exactly `edge_count >= 1` edges,
/// Prüfer-enumerated and deduplicated by canonical form.
pub fn prufer_trees(edge_count: usize) -> Vec<Graph> {
    prufer_codes(edge_count).iter().map(|c| decode(c)).collect()
}

/// All non-isomorphic trees with 1 to `max_edges` edges, in order of edge
/// count then canonical code. Full Prüfer enumeration up to 8 edges,
/// leaf-extension growth beyond.
pub fn tree_catalog(max_edges: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut level: BTreeSet<String> = BTreeSet::new();
    for m in 1..=max_edges {
        level = if m <= 8 { prufer_codes(m) } else { extend_codes(&level) };
        out.extend(level.iter().map(|c| decode(c)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    // OEIS A000055: trees on n vertices
    const CLASS_COUNTS: [usize; 9] = [1, 1, 2, 3, 6, 11, 23, 47, 106];

    #[test]
    fn class_counts_small() {
        for m in 1..=6 {
            assert_eq!(prufer_trees(m).len(), CLASS_COUNTS[m - 1], "edges={}", m);
        }
    }

    #[test]
    fn catalog_is_cumulative_and_valid() {
        let cat = tree_catalog(5);
        assert_eq!(cat.len(), CLASS_COUNTS[..5].iter().sum::<usize>());
        let mut seen = BTreeSet::new();
        for g in &cat {
            assert!(g.is_tree());
            assert!(seen.insert(canonical_code(g)));
        }
    }

    #[test]
    fn extension_matches_prufer() {
        for m in 2..=7 {
            let prufer = prufer_codes(m);
            let grown = extend_codes(&prufer_codes(m - 1));
            assert_eq!(prufer, grown, "edges={}", m);
        }
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        // same shape, different labelings
        let a = fixtures::path(5);
        let b = Graph::new(5, vec![(3, 0), (0, 4), (4, 1), (1, 2)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(canonical_code(&a), canonical_code(&fixtures::star(4)));
    }

    #[test]
    fn prufer_decode_known() {
        // sequence (3, 3) gives the star on vertex 3
        let g = tree_from_prufer(&[3, 3]);
        assert_eq!(canonical_code(&g), canonical_code(&fixtures::star(3)));
    }
}
