//! Ground truth by exhaustive search: enumerate every proper edge
//! t-coloring of a small graph, classify it, compute exact spectra, and
//! check the structural path lemmas coloring by coloring.

use serde::Serialize;
use thiserror::Error;

use crate::cyclic::{intcyc_open_1, intcyc_open_2, AlgebraError, ColorSet};
use crate::graph::{Graph, GraphError, PathData};
use crate::invariants::{big_m, max_degree, Provenance, SpectrumReport, SpectrumSet};
use crate::verify::{colors_of, is_cyclic_coloring, Coloring, ColoringError};

pub const DEFAULT_LIMIT_EDGES: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {edges} edges, above the enumeration limit of {limit}")]
    SizeLimit { edges: usize, limit: usize },
    #[error("palette size {t} exceeds the edge count {edges}")]
    PaletteExceedsEdges { t: u32, edges: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which colorings to keep when enumerating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    Proper,
    Interval,
    Cyclic,
}

struct Enumerator<'a> {
    g: &'a Graph,
    t: u32,
    // earlier edge ids sharing a vertex with each edge
    earlier_adjacent: Vec<Vec<usize>>,
    colors: Vec<u32>,
    used: Vec<u32>,
    unused_colors: u32,
}

impl<'a> Enumerator<'a> {
    fn new(g: &'a Graph, t: u32) -> Enumerator<'a> {
        let m = g.edge_count();
        let mut earlier_adjacent = vec![Vec::new(); m];
        for (id, slot) in earlier_adjacent.iter_mut().enumerate() {
            let (u, v) = g.edge(id).unwrap();
            for prev in 0..id {
                let (a, b) = g.edge(prev).unwrap();
                if a == u || a == v || b == u || b == v {
                    slot.push(prev);
                }
            }
        }
        Enumerator {
            g,
            t,
            earlier_adjacent,
            colors: vec![0; m],
            used: vec![0; t as usize + 1],
            unused_colors: t,
        }
    }

    fn star_sets(&self) -> Vec<ColorSet> {
        (0..self.g.n())
            .map(|x| {
                let mut bits = 0u64;
                for &(_, id) in self.g.adjacency(x) {
                    bits |= 1u64 << (self.colors[id] - 1);
                }
                ColorSet::from_bits(self.t, bits)
            })
            .collect()
    }

    fn matches(&self, pred: Predicate) -> bool {
        // properness and surjectivity are guaranteed by the search
        match pred {
            Predicate::Proper => true,
            Predicate::Interval => self.star_sets().iter().all(|s| s.is_interval()),
            Predicate::Cyclic => self.star_sets().iter().all(|s| s.is_cyclic_interval()),
        }
    }

    fn run(&mut self, pos: usize, pred: Predicate, f: &mut dyn FnMut(&Coloring)) -> u64 {
        if pos == self.colors.len() {
            if self.unused_colors == 0 && self.matches(pred) {
                f(&Coloring::new(self.t, self.colors.clone()));
                return 1;
            }
            return 0;
        }
        if self.unused_colors > (self.colors.len() - pos) as u32 {
            return 0;
        }
        let mut count = 0;
        'next_color: for c in 1..=self.t {
            for &prev in &self.earlier_adjacent[pos] {
                if self.colors[prev] == c {
                    continue 'next_color;
                }
            }
            self.colors[pos] = c;
            self.used[c as usize] += 1;
            if self.used[c as usize] == 1 {
                self.unused_colors -= 1;
            }
            count += self.run(pos + 1, pred, f);
            self.used[c as usize] -= 1;
            if self.used[c as usize] == 0 {
                self.unused_colors += 1;
            }
        }
        self.colors[pos] = 0;
        count
    }
}

fn coloring_star_sets(g: &Graph, c: &Coloring) -> Vec<ColorSet> {
    (0..g.n())
        .map(|x| {
            let mut bits = 0u64;
            for &(_, id) in g.adjacency(x) {
                bits |= 1u64 << (c.colors[id] - 1);
            }
            ColorSet::from_bits(c.t, bits)
        })
        .collect()
}

fn check_limits(g: &Graph, t: u32, limit_edges: usize) -> Result<(), OracleError> {
    if g.edge_count() > limit_edges {
        return Err(OracleError::SizeLimit { edges: g.edge_count(), limit: limit_edges });
    }
    if t as usize > g.edge_count() {
        return Err(OracleError::PaletteExceedsEdges { t, edges: g.edge_count() });
    }
    Ok(())
}

/// Visits every proper (surjective) t-coloring satisfying the predicate,
/// in lexicographic order of the edge-id color vector, and returns the
/// count.
pub fn for_each_coloring(
    g: &Graph,
    t: u32,
    pred: Predicate,
    limit_edges: usize,
    f: &mut dyn FnMut(&Coloring),
) -> Result<u64, OracleError> {
    check_limits(g, t, limit_edges)?;
    if t == 0 {
        return Ok(0);
    }
    Ok(Enumerator::new(g, t).run(0, pred, f))
}

/// Collects the colorings of [`for_each_coloring`].
pub fn enumerate_colorings(
    g: &Graph,
    t: u32,
    pred: Predicate,
    limit_edges: usize,
) -> Result<Vec<Coloring>, OracleError> {
    let mut out = Vec::new();
    for_each_coloring(g, t, pred, limit_edges, &mut |c| out.push(c.clone()))?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TCounts {
    pub t: u32,
    pub proper: u64,
    pub interval: u64,
    pub cyclic: u64,
}

/// Exact per-t classification counts and the resulting spectra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    /// Compact edge-list identity of the graph.
    pub graph: String,
    pub per_t: Vec<TCounts>,
    pub theta_exact: Vec<u32>,
    pub theta_cyc_exact: Vec<u32>,
}

pub fn graph_id(g: &Graph) -> String {
    let parts: Vec<String> =
        g.edges().iter().map(|&(u, v)| format!("{}-{}", u, v)).collect();
    format!("n{}:{}", g.n(), parts.join(","))
}

/// Exact spectra by full enumeration for every t in `[1, min(t_max, |E|)]`.
/// With the default `t_max = |E|` the result is complete, since a proper
/// t-coloring uses at most `|E|` colors.
pub fn exact_spectrum(
    g: &Graph,
    t_max: Option<u32>,
    limit_edges: usize,
) -> Result<OracleResult, OracleError> {
    let edges = g.edge_count();
    if edges > limit_edges {
        return Err(OracleError::SizeLimit { edges, limit: limit_edges });
    }
    let t_hi = t_max.unwrap_or(edges as u32).min(edges as u32);
    let mut per_t = Vec::new();
    let mut theta_exact = Vec::new();
    let mut theta_cyc_exact = Vec::new();
    for t in 1..=t_hi {
        let mut proper = 0u64;
        let mut interval = 0u64;
        let mut cyclic = 0u64;
        // single pass over the proper colorings, classifying each leaf
        for_each_coloring(g, t, Predicate::Proper, limit_edges, &mut |c| {
            proper += 1;
            let stars = coloring_star_sets(g, c);
            if stars.iter().all(|s| s.is_interval()) {
                interval += 1;
            }
            if stars.iter().all(|s| s.is_cyclic_interval()) {
                cyclic += 1;
            }
        })?;
        if interval > 0 {
            theta_exact.push(t);
        }
        if cyclic > 0 {
            theta_cyc_exact.push(t);
        }
        per_t.push(TCounts { t, proper, interval, cyclic });
    }
    Ok(OracleResult { graph: graph_id(g), per_t, theta_exact, theta_cyc_exact })
}

/// Oracle-based spectrum report for any small graph; tree-only fields are
/// filled only when they apply.
pub fn oracle_report(
    g: &Graph,
    t_max: Option<u32>,
    limit_edges: usize,
) -> Result<SpectrumReport, OracleError> {
    let result = exact_spectrum(g, t_max, limit_edges)?;
    let chi_prime = result.per_t.iter().find(|c| c.proper > 0).map(|c| c.t);
    let theta = SpectrumSet::from_sorted(&result.theta_exact);
    let theta_cyc = SpectrumSet::from_sorted(&result.theta_cyc_exact);
    Ok(SpectrumReport {
        delta: max_degree(g) as u32,
        chi_prime,
        m_of_h: if g.is_tree() { Some(big_m(g)?.value as u32) } else { None },
        w_int: theta.min(),
        big_w_int: theta.max(),
        w_cyc: theta_cyc.min(),
        big_w_cyc: theta_cyc.max(),
        theta: Some(theta),
        theta_cyc: Some(theta_cyc),
        provenance: Provenance::Oracle,
    })
}

fn union_of_internal_stars(
    g: &Graph,
    c: &Coloring,
    path: &PathData,
) -> Result<ColorSet, OracleError> {
    let mut acc = ColorSet::empty(c.t)?;
    for &x in &path.internal {
        let star = colors_of(g, c, g.incident_edges(x)?)?;
        acc = acc.union(&star)?;
    }
    Ok(acc)
}

fn require_cyclic_and_long(g: &Graph, c: &Coloring, path: &PathData) -> Result<(), OracleError> {
    if path.edge_len() < 2 {
        return Err(OracleError::Precondition("path must have at least 2 edges".into()));
    }
    if !is_cyclic_coloring(g, c) {
        return Err(OracleError::Precondition(
            "coloring is not a cyclically-interval coloring".into(),
        ));
    }
    Ok(())
}

/// The union of star color sets over the internal vertices of a path is a
/// t-cyclic interval.
pub fn check_lemma2(g: &Graph, c: &Coloring, path: &PathData) -> Result<bool, OracleError> {
    require_cyclic_and_long(g, c, path)?;
    Ok(union_of_internal_stars(g, c, path)?.is_cyclic_interval())
}

/// One of the two open cyclic intervals between the first and last edge
/// colors is contained in the union of internal stars.
pub fn check_lemma3(g: &Graph, c: &Coloring, path: &PathData) -> Result<bool, OracleError> {
    require_cyclic_and_long(g, c, path)?;
    let union = union_of_internal_stars(g, c, path)?;
    let c1 = c.colors[path.edges[0]];
    let ck = c.colors[*path.edges.last().unwrap()];
    let o1 = intcyc_open_1(c1, ck, c.t)?;
    let o2 = intcyc_open_2(c1, ck, c.t)?;
    Ok(o1.is_subset(&union) || o2.is_subset(&union))
}

/// Some vertex pair of the tree realizes all t colors on the union of its
/// internal-path stars.
pub fn check_lemma4(h: &Graph, c: &Coloring) -> Result<bool, OracleError> {
    if !h.is_tree() {
        return Err(OracleError::Precondition("graph must be a tree".into()));
    }
    if !is_cyclic_coloring(h, c) {
        return Err(OracleError::Precondition(
            "coloring is not a cyclically-interval coloring".into(),
        ));
    }
    let full = ColorSet::full(c.t)?;
    for i in 0..h.n() {
        for j in (i + 1)..h.n() {
            let path = h.tree_path(i, j)?;
            if colors_of(h, c, path.tp.iter().copied())? == full {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Some vertex pair has an internal-star union of size at least t; the
/// executable form of the bound that caps the cyclic spectrum by the path
/// invariant.
pub fn check_corollary_bound(h: &Graph, c: &Coloring) -> Result<bool, OracleError> {
    if !h.is_tree() {
        return Err(OracleError::Precondition("graph must be a tree".into()));
    }
    if !is_cyclic_coloring(h, c) {
        return Err(OracleError::Precondition(
            "coloring is not a cyclically-interval coloring".into(),
        ));
    }
    for i in 0..h.n() {
        for j in (i + 1)..h.n() {
            if h.tree_path(i, j)?.tp.len() as u32 >= c.t {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Every simple path of `g` with at least `min_edges` edges, one
/// representative per direction (smaller endpoint first).
pub fn simple_paths(g: &Graph, min_edges: usize) -> Vec<PathData> {
    fn extend(
        g: &Graph,
        walk: &mut Vec<usize>,
        on_walk: &mut Vec<bool>,
        min_edges: usize,
        out: &mut Vec<PathData>,
    ) {
        let last = *walk.last().unwrap();
        if walk.len() > min_edges && walk[0] < last {
            out.push(PathData::from_walk(g, walk.clone()).unwrap());
        }
        for &(v, _) in g.adjacency(last) {
            if !on_walk[v] {
                walk.push(v);
                on_walk[v] = true;
                extend(g, walk, on_walk, min_edges, out);
                on_walk[v] = false;
                walk.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut on_walk = vec![false; g.n()];
        on_walk[s] = true;
        extend(g, &mut vec![s], &mut on_walk, min_edges, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn single_edge_counts() {
        let g = fixtures::path(2);
        assert_eq!(
            enumerate_colorings(&g, 1, Predicate::Proper, DEFAULT_LIMIT_EDGES).unwrap().len(),
            1
        );
    }

    #[test]
    fn path3_interval_colorings() {
        let g = fixtures::path(3);
        let all = enumerate_colorings(&g, 2, Predicate::Interval, DEFAULT_LIMIT_EDGES).unwrap();
        assert_eq!(all.len(), 2);
        // lexicographic order in edge-id color vectors
        assert_eq!(all[0].colors, vec![1, 2]);
        assert_eq!(all[1].colors, vec![2, 1]);
    }

    #[test]
    fn c4_has_cyclic_4_coloring() {
        let g = fixtures::cycle(4);
        let n = enumerate_colorings(&g, 4, Predicate::Cyclic, DEFAULT_LIMIT_EDGES)
            .unwrap()
            .len();
        assert!(n > 0);
    }

    #[test]
    fn size_limit_is_hard() {
        let g = fixtures::path(13);
        assert_eq!(
            for_each_coloring(&g, 2, Predicate::Proper, 10, &mut |_| {}),
            Err(OracleError::SizeLimit { edges: 12, limit: 10 })
        );
        assert!(matches!(
            for_each_coloring(&fixtures::path(3), 3, Predicate::Proper, 10, &mut |_| {}),
            Err(OracleError::PaletteExceedsEdges { .. })
        ));
    }

    #[test]
    fn c4_exact_spectrum() {
        let r = exact_spectrum(&fixtures::cycle(4), None, DEFAULT_LIMIT_EDGES).unwrap();
        assert_eq!(r.theta_exact, vec![2, 3]);
        assert_eq!(r.theta_cyc_exact, vec![2, 3, 4]);
        for tc in &r.per_t {
            assert!(tc.interval <= tc.cyclic && tc.cyclic <= tc.proper);
        }
    }

    #[test]
    fn c6_theta() {
        let r = exact_spectrum(&fixtures::cycle(6), None, DEFAULT_LIMIT_EDGES).unwrap();
        assert_eq!(r.theta_exact, vec![2, 3, 4]);
    }

    #[test]
    fn k32_minima() {
        let r = exact_spectrum(&fixtures::complete_bipartite(3, 2), None, DEFAULT_LIMIT_EDGES)
            .unwrap();
        assert_eq!(r.theta_exact.first(), Some(&4));
        assert_eq!(r.theta_cyc_exact.first(), Some(&3));
    }

    #[test]
    fn lemma2_on_interval_path_coloring() {
        let g = fixtures::path(4);
        let c = Coloring::new(3, vec![1, 2, 3]);
        let path = g.tree_path(0, 3).unwrap();
        assert!(check_lemma2(&g, &c, &path).unwrap());
        assert!(check_lemma3(&g, &c, &path).unwrap());
    }

    #[test]
    fn lemma3_vacuous_two_edges() {
        let g = fixtures::path(3);
        let c = Coloring::new(2, vec![1, 2]);
        let path = g.tree_path(0, 2).unwrap();
        assert!(check_lemma3(&g, &c, &path).unwrap());
    }

    #[test]
    fn lemma4_examples() {
        let s = fixtures::star(3);
        assert!(check_lemma4(&s, &Coloring::new(3, vec![1, 2, 3])).unwrap());
        let p = fixtures::path(4);
        assert!(check_lemma4(&p, &Coloring::new(3, vec![1, 2, 3])).unwrap());
        assert!(check_corollary_bound(&p, &Coloring::new(3, vec![1, 2, 3])).unwrap());
    }

    #[test]
    fn lemma_preconditions() {
        let g = fixtures::path(3);
        let c = Coloring::new(2, vec![1, 2]);
        let short = g.tree_path(0, 1).unwrap();
        assert!(matches!(check_lemma2(&g, &c, &short), Err(OracleError::Precondition(_))));
        let improper = Coloring::new(2, vec![1, 1]);
        let path = g.tree_path(0, 2).unwrap();
        assert!(matches!(check_lemma2(&g, &improper, &path), Err(OracleError::Precondition(_))));
    }

    #[test]
    fn simple_paths_in_cycle() {
        // C_4: unordered pairs each joined by two arcs, minus 1-edge paths
        let g = fixtures::cycle(4);
        let paths = simple_paths(&g, 2);
        assert_eq!(paths.len(), 8);
        for p in &paths {
            assert!(p.edge_len() >= 2);
            assert!(p.vertices[0] < *p.vertices.last().unwrap());
        }
    }
}
