//! Small named graphs used by tests, benchmarks, and the shipped fixture
//! files.

use crate::graph::Graph;

/// Path on `n` vertices, edges (0,1), (1,2), ...
pub fn path(n: usize) -> Graph {
    assert!(n >= 1);
    Graph::new(n, (1..n).map(|v| (v - 1, v)).collect()).unwrap()
}

/// Star with center 0 and `k` leaves.
pub fn star(k: usize) -> Graph {
    assert!(k >= 1);
    Graph::new(k + 1, (1..=k).map(|v| (0, v)).collect()).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, edges).unwrap()
}

/// Spider: center 0 with one leg per entry of `legs`, each a path of the
/// given length.
pub fn spider(legs: &[usize]) -> Graph {
    assert!(!legs.is_empty());
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        assert!(len >= 1);
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(next, edges).unwrap()
}

/// The degree-3 spider with three legs of length 2 (6 edges).
pub fn spider_3x2() -> Graph {
    spider(&[2, 2, 2])
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    assert!(a >= 1 && b >= 1);
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::new(a + b, edges).unwrap()
}
