//! Constructs an interval t-coloring of a tree for every feasible palette
//! size. Two tiers: a greedy fast path seeded along the widest path, and a
//! complete backtracking fallback with interval-consistency propagation.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::invariants::{big_m, max_degree};
use crate::verify::{is_interval_coloring, Coloring};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("backtracking search exhausted for t={0} inside the feasible range")]
    SearchExhausted(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Interval,
    Cyclic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfeasibleReason {
    /// t is smaller than the maximum degree: some star cannot be properly
    /// colored.
    StarPigeonhole,
    /// t exceeds the maximum feasible palette size.
    ExceedsMaximum,
}

/// Certificate that no coloring exists for the requested t, with the
/// feasible range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Infeasibility {
    pub t: u32,
    pub feasible_min: u32,
    pub feasible_max: u32,
    pub reason: InfeasibleReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructOutcome {
    Colored(Coloring),
    Infeasible(Infeasibility),
}

/// Request for one coloring of a tree.
#[derive(Debug, Clone)]
pub struct ConstructionRequest<'a> {
    pub tree: &'a Graph,
    pub t: u32,
    pub mode: Mode,
}

/// Edges of a tree in DFS preorder from `root`, smallest neighbor first.
fn dfs_edge_order(h: &Graph, root: usize) -> Vec<usize> {
    fn go(h: &Graph, u: usize, visited: &mut [bool], order: &mut Vec<usize>) {
        visited[u] = true;
        for &(v, id) in h.adjacency(u) {
            if !visited[v] {
                order.push(id);
                go(h, v, visited, order);
            }
        }
    }
    let mut order = Vec::with_capacity(h.edge_count());
    let mut visited = vec![false; h.n()];
    go(h, root, &mut visited, &mut order);
    order
}

struct Search<'a> {
    h: &'a Graph,
    t: u32,
    order: Vec<usize>,
    colors: Vec<u32>,
    // per-vertex bitset of colors used at its star so far
    star: Vec<u128>,
    // usage count per color, for the surjectivity bound
    used: Vec<u32>,
    unused_colors: u32,
}

impl<'a> Search<'a> {
    fn new(h: &'a Graph, t: u32, order: Vec<usize>) -> Search<'a> {
        Search {
            h,
            t,
            order,
            colors: vec![0; h.edge_count()],
            star: vec![0; h.n()],
            used: vec![0; t as usize + 1],
            unused_colors: t,
        }
    }

    // The partial star at x, plus color c, must still extend to a
    // contiguous block of size degree(x) inside [1, t].
    fn star_extendable(&self, x: usize, c: u32) -> bool {
        let bits = self.star[x] | (1u128 << c);
        let d = self.h.adjacency(x).len() as u32;
        let mn = bits.trailing_zeros();
        let mx = 127 - bits.leading_zeros();
        mx - mn < d
    }

    fn assign(&mut self, edge: usize, c: u32) {
        let (u, v) = self.h.edge(edge).unwrap();
        self.colors[edge] = c;
        self.star[u] |= 1u128 << c;
        self.star[v] |= 1u128 << c;
        self.used[c as usize] += 1;
        if self.used[c as usize] == 1 {
            self.unused_colors -= 1;
        }
    }

    fn unassign(&mut self, edge: usize, c: u32) {
        let (u, v) = self.h.edge(edge).unwrap();
        self.colors[edge] = 0;
        self.star[u] &= !(1u128 << c);
        self.star[v] &= !(1u128 << c);
        self.used[c as usize] -= 1;
        if self.used[c as usize] == 0 {
            self.unused_colors += 1;
        }
    }

    fn solve(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return self.unused_colors == 0;
        }
        let remaining = (self.order.len() - pos) as u32;
        if self.unused_colors > remaining {
            return false;
        }
        let edge = self.order[pos];
        let (u, v) = self.h.edge(edge).unwrap();
        for c in 1..=self.t {
            let bit = 1u128 << c;
            if self.star[u] & bit != 0 || self.star[v] & bit != 0 {
                continue;
            }
            if !self.star_extendable(u, c) || !self.star_extendable(v, c) {
                continue;
            }
            self.assign(edge, c);
            if self.solve(pos + 1) {
                return true;
            }
            self.unassign(edge, c);
        }
        false
    }
}

/// Tier 2: complete backtracking over edges in DFS order. Interval
/// consistency at every vertex plus a surjectivity bound; a completed
/// assignment is an interval t-coloring by construction.
fn backtrack(h: &Graph, t: u32) -> Option<Coloring> {
    let order = dfs_edge_order(h, 0);
    let mut search = Search::new(h, t, order);
    if search.solve(0) {
        Some(Coloring::new(t, search.colors))
    } else {
        None
    }
}

/// Tier 1: seed the widest path with colors spread across the palette,
/// then extend greedily outward, giving each vertex a contiguous block
/// around its already-colored edges. Failures fall through to tier 2.
fn greedy(h: &Graph, t: u32, witness: (usize, usize)) -> Option<Coloring> {
    let m = h.edge_count();
    let path = h.tree_path(witness.0, witness.1).ok()?;
    let k = path.edges.len() as u32;
    if k == 0 || t < k {
        return None;
    }
    let mut colors = vec![0u32; m];
    let mut star = vec![0u128; h.n()];
    let assign = |colors: &mut Vec<u32>, star: &mut Vec<u128>, e: usize, c: u32| -> bool {
        let (u, v) = h.edge(e).unwrap();
        let bit = 1u128 << c;
        if star[u] & bit != 0 || star[v] & bit != 0 {
            return false;
        }
        colors[e] = c;
        star[u] |= bit;
        star[v] |= bit;
        true
    };
    // spread k strictly increasing colors over [1, t]
    for (i, &e) in path.edges.iter().enumerate() {
        let c = if k == 1 { 1 } else { 1 + (i as u32) * (t - 1) / (k - 1) };
        if !assign(&mut colors, &mut star, e, c) {
            return None;
        }
    }
    // extend outward in BFS order from the path
    let mut queue: Vec<usize> = path.vertices.clone();
    let mut enqueued = vec![false; h.n()];
    for &v in &queue {
        enqueued[v] = true;
    }
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let d = h.adjacency(x).len() as u32;
        let bits = star[x];
        if bits != 0 {
            let mn = bits.trailing_zeros();
            let mx = 127 - bits.leading_zeros();
            if mx - mn >= d {
                return None;
            }
            // tightest block admissible under the existing colors
            let lo_min = (mx + 1).saturating_sub(d).max(1);
            let lo_max = mn.min(t - d + 1);
            if lo_min > lo_max {
                return None;
            }
            let lo = lo_max;
            let mut next = lo;
            for &(v, id) in h.adjacency(x) {
                if colors[id] != 0 {
                    continue;
                }
                while next < lo + d && star[x] & (1u128 << next) != 0 {
                    next += 1;
                }
                if next >= lo + d || !assign(&mut colors, &mut star, id, next) {
                    return None;
                }
                if !enqueued[v] {
                    enqueued[v] = true;
                    queue.push(v);
                }
            }
        }
        for &(v, _) in h.adjacency(x) {
            if !enqueued[v] {
                enqueued[v] = true;
                queue.push(v);
            }
        }
    }
    if colors.contains(&0) {
        return None;
    }
    let c = Coloring::new(t, colors);
    if t <= 64 && is_interval_coloring(h, &c) {
        Some(c)
    } else {
        None
    }
}

/// Produces an interval t-coloring when t lies in the feasible range
/// `[Delta, M]`, and an infeasibility certificate otherwise. For trees the
/// cyclic mode coincides with the interval mode.
pub fn construct(req: &ConstructionRequest) -> Result<ConstructOutcome, ConstructError> {
    let h = req.tree;
    if !h.is_tree() {
        return Err(GraphError::NotATree.into());
    }
    if h.edge_count() == 0 {
        return Err(GraphError::NoEdges.into());
    }
    let bm = big_m(h)?;
    let delta = max_degree(h) as u32;
    let m = bm.value as u32;
    // feasibility is decided by formula, not search
    if req.t < delta {
        return Ok(ConstructOutcome::Infeasible(Infeasibility {
            t: req.t,
            feasible_min: delta,
            feasible_max: m,
            reason: InfeasibleReason::StarPigeonhole,
        }));
    }
    if req.t > m {
        return Ok(ConstructOutcome::Infeasible(Infeasibility {
            t: req.t,
            feasible_min: delta,
            feasible_max: m,
            reason: InfeasibleReason::ExceedsMaximum,
        }));
    }
    let coloring = match greedy(h, req.t, bm.witness) {
        Some(c) => c,
        None => backtrack(h, req.t).ok_or(ConstructError::SearchExhausted(req.t))?,
    };
    if req.t <= 64 {
        debug_assert!(is_interval_coloring(h, &coloring));
    }
    Ok(ConstructOutcome::Colored(coloring))
}

/// One verified coloring per feasible t in `[Delta, M]`.
pub fn construct_all_t(tree: &Graph) -> Result<BTreeMap<u32, Coloring>, ConstructError> {
    if !tree.is_tree() {
        return Err(GraphError::NotATree.into());
    }
    if tree.edge_count() == 0 {
        return Err(GraphError::NoEdges.into());
    }
    let delta = max_degree(tree) as u32;
    let m = big_m(tree)?.value as u32;
    let mut out = BTreeMap::new();
    for t in delta..=m {
        match construct(&ConstructionRequest { tree, t, mode: Mode::Interval })? {
            ConstructOutcome::Colored(c) => {
                out.insert(t, c);
            }
            ConstructOutcome::Infeasible(_) => {
                return Err(ConstructError::SearchExhausted(t));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn colored(outcome: ConstructOutcome) -> Coloring {
        match outcome {
            ConstructOutcome::Colored(c) => c,
            ConstructOutcome::Infeasible(i) => panic!("unexpected infeasible: {:?}", i),
        }
    }

    #[test]
    fn star_forced_coloring() {
        let s = fixtures::star(4);
        let c = colored(
            construct(&ConstructionRequest { tree: &s, t: 4, mode: Mode::Interval }).unwrap(),
        );
        let mut sorted = c.colors.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3, 4]);
    }

    #[test]
    fn path4_t3() {
        let p = fixtures::path(4);
        let c = colored(
            construct(&ConstructionRequest { tree: &p, t: 3, mode: Mode::Interval }).unwrap(),
        );
        assert!(is_interval_coloring(&p, &c));
        assert_eq!(c.colors, vec![1, 2, 3]);
    }

    #[test]
    fn path4_t4_infeasible() {
        let p = fixtures::path(4);
        match construct(&ConstructionRequest { tree: &p, t: 4, mode: Mode::Interval }).unwrap() {
            ConstructOutcome::Infeasible(i) => {
                assert_eq!((i.feasible_min, i.feasible_max), (2, 3));
                assert_eq!(i.reason, InfeasibleReason::ExceedsMaximum);
            }
            ConstructOutcome::Colored(_) => panic!("expected infeasible"),
        }
    }

    #[test]
    fn below_delta_infeasible() {
        let s = fixtures::star(3);
        match construct(&ConstructionRequest { tree: &s, t: 2, mode: Mode::Cyclic }).unwrap() {
            ConstructOutcome::Infeasible(i) => {
                assert_eq!(i.reason, InfeasibleReason::StarPigeonhole)
            }
            ConstructOutcome::Colored(_) => panic!("expected infeasible"),
        }
    }

    #[test]
    fn all_t_spider() {
        let g = fixtures::spider_3x2();
        let all = construct_all_t(&g).unwrap();
        assert_eq!(all.keys().copied().collect::<Vec<_>>(), vec![3, 4, 5]);
        for (t, c) in &all {
            assert_eq!(c.t, *t);
            assert!(is_interval_coloring(&g, c));
        }
    }

    #[test]
    fn all_t_star_and_edge() {
        let all = construct_all_t(&fixtures::star(3)).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all.contains_key(&3));
        let all = construct_all_t(&fixtures::path(2)).unwrap();
        assert_eq!(all.keys().copied().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn deterministic() {
        let g = fixtures::spider(&[3, 2, 1]);
        let a = construct(&ConstructionRequest { tree: &g, t: 4, mode: Mode::Interval }).unwrap();
        let b = construct(&ConstructionRequest { tree: &g, t: 4, mode: Mode::Interval }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mode_equivalence() {
        let g = fixtures::spider_3x2();
        for t in 1..=6 {
            let a = construct(&ConstructionRequest { tree: &g, t, mode: Mode::Interval }).unwrap();
            let b = construct(&ConstructionRequest { tree: &g, t, mode: Mode::Cyclic }).unwrap();
            assert_eq!(
                matches!(a, ConstructOutcome::Colored(_)),
                matches!(b, ConstructOutcome::Colored(_))
            );
        }
    }

    #[test]
    fn rejects_non_tree() {
        let c4 = fixtures::cycle(4);
        assert!(construct(&ConstructionRequest { tree: &c4, t: 2, mode: Mode::Interval }).is_err());
    }
}
