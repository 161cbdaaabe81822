//! Graph representation, tree recognition, distances, and simple-path
//! machinery (vertex/edge sets of a path, internal vertices, the closed
//! neighborhood of a path, and the union of internal stars).

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex set is empty")]
    EmptyVertexSet,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// A simple, connected, undirected graph. Vertices are `0..n`; edge
/// identity is the index into the load-order edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // adjacency (neighbor, edge id), sorted by (neighbor, edge id)
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let g = Graph { n, edges, adj };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Parses edge-list text, one `u v` pair per line; n = max index + 1.
    pub fn from_edge_list_text(text: &str) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        let mut max_v = 0usize;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, GraphError> {
                tok.ok_or_else(|| GraphError::Parse(format!("line {}: expected two vertices", lineno + 1)))?
                    .parse::<usize>()
                    .map_err(|e| GraphError::Parse(format!("line {}: {}", lineno + 1, e)))
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(GraphError::Parse(format!("line {}: trailing tokens", lineno + 1)));
            }
            max_v = max_v.max(u).max(v);
            edges.push((u, v));
        }
        if edges.is_empty() {
            return Err(GraphError::Parse("no edges in edge-list input".into()));
        }
        Graph::new(max_v + 1, edges)
    }

    pub fn to_edge_list_text(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }

    /// Parses graph JSON `{"n": <int>, "edges": [[u,v], ...]}`.
    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let raw: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
        Graph::new(raw.n, raw.edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson { n: self.n, edges: self.edges.clone() }).unwrap()
    }

    /// Parses either format: JSON when the text starts with `{`, edge list
    /// otherwise.
    pub fn from_text(text: &str) -> Result<Self, GraphError> {
        if text.trim_start().starts_with('{') {
            Graph::from_json(text)
        } else {
            Graph::from_edge_list_text(text)
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Option<(usize, usize)> {
        self.edges.get(id).copied()
    }

    fn check_vertex(&self, x: usize) -> Result<(), GraphError> {
        if x < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: x, n: self.n })
        }
    }

    /// Edge ids incident with `x`.
    pub fn incident_edges(&self, x: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(x)?;
        Ok(self.adj[x].iter().map(|&(_, id)| id).collect())
    }

    /// Vertices adjacent to `x`.
    pub fn neighbors(&self, x: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(x)?;
        Ok(self.adj[x].iter().map(|&(v, _)| v).collect())
    }

    pub fn degree(&self, x: usize) -> Result<usize, GraphError> {
        self.check_vertex(x)?;
        Ok(self.adj[x].len())
    }

    /// Adjacency as (neighbor, edge id), sorted.
    pub(crate) fn adjacency(&self, x: usize) -> &[(usize, usize)] {
        &self.adj[x]
    }

    /// Connected with |E| = n - 1.
    pub fn is_tree(&self) -> bool {
        self.edges.len() == self.n - 1
    }

    /// BFS distances from `x` to every vertex.
    fn bfs(&self, x: usize) -> (Vec<usize>, Vec<Option<(usize, usize)>>) {
        let mut dist = vec![usize::MAX; self.n];
        // parent as (vertex, edge id)
        let mut parent = vec![None; self.n];
        let mut queue = VecDeque::from([x]);
        dist[x] = 0;
        while let Some(u) = queue.pop_front() {
            for &(v, id) in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = Some((u, id));
                    queue.push_back(v);
                }
            }
        }
        (dist, parent)
    }

    /// Shortest-path edge count between `x` and `y`.
    pub fn distance(&self, x: usize, y: usize) -> Result<usize, GraphError> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        Ok(self.bfs(x).0[y])
    }

    /// Minimum distance from `x` to any vertex of `s`.
    pub fn distance_to_set(&self, x: usize, s: &BTreeSet<usize>) -> Result<usize, GraphError> {
        self.check_vertex(x)?;
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        for &v in s {
            self.check_vertex(v)?;
        }
        let dist = self.bfs(x).0;
        Ok(s.iter().map(|&v| dist[v]).min().unwrap())
    }

    /// The unique simple path between two vertices of a tree, with all
    /// derived sets populated.
    pub fn tree_path(&self, b_i: usize, b_j: usize) -> Result<PathData, GraphError> {
        if !self.is_tree() {
            return Err(GraphError::NotATree);
        }
        self.check_vertex(b_i)?;
        self.check_vertex(b_j)?;
        let (_, parent) = self.bfs(b_i);
        let mut vertices = vec![b_j];
        let mut cur = b_j;
        while cur != b_i {
            let (p, _) = parent[cur].expect("connected tree");
            vertices.push(p);
            cur = p;
        }
        vertices.reverse();
        Ok(PathData::from_walk(self, vertices).expect("BFS path is a valid walk"))
    }
}

/// A simple path together with the derived sets used by the path
/// invariant: internal vertices, the path's closed neighborhood, and the
/// union of the internal vertices' edge stars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathData {
    pub endpoints: (usize, usize),
    /// Ordered vertex sequence of the path.
    pub vertices: Vec<usize>,
    /// Ordered edge-id sequence along the path.
    pub edges: Vec<usize>,
    /// Internal vertices (all but the two endpoints), in path order.
    pub internal: Vec<usize>,
    /// Path vertices plus every neighbor of an internal vertex.
    pub tilde_vertices: BTreeSet<usize>,
    /// Union of incident-edge sets over internal vertices; just the path
    /// edges when there are no internal vertices.
    pub tp: BTreeSet<usize>,
}

impl PathData {
    /// Builds the derived sets for a vertex sequence that must be a simple
    /// path in `g`.
    pub fn from_walk(g: &Graph, vertices: Vec<usize>) -> Result<PathData, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if v >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if !seen.insert(v) {
                return Err(GraphError::Parse("repeated vertex in path".into()));
            }
        }
        let mut edges = Vec::with_capacity(vertices.len().saturating_sub(1));
        for w in vertices.windows(2) {
            let id = g
                .adjacency(w[0])
                .iter()
                .find(|&&(v, _)| v == w[1])
                .map(|&(_, id)| id)
                .ok_or_else(|| GraphError::Parse(format!("no edge ({}, {})", w[0], w[1])))?;
            edges.push(id);
        }
        let endpoints = (vertices[0], *vertices.last().unwrap());
        let internal: Vec<usize> =
            if vertices.len() >= 2 { vertices[1..vertices.len() - 1].to_vec() } else { Vec::new() };
        let mut tilde_vertices: BTreeSet<usize> = vertices.iter().copied().collect();
        let mut tp: BTreeSet<usize> = BTreeSet::new();
        for &x in &internal {
            for &(v, id) in g.adjacency(x) {
                tilde_vertices.insert(v);
                tp.insert(id);
            }
        }
        if internal.is_empty() {
            tp = edges.iter().copied().collect();
        }
        Ok(PathData { endpoints, vertices, edges, internal, tilde_vertices, tp })
    }

    pub fn edge_len(&self) -> usize {
        self.edges.len()
    }
}
