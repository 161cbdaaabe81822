//! Graph parameters: maximum degree, chromatic index of trees, the path
//! invariant `M(H)`, and the formula-based spectrum report for trees.

use serde::Serialize;

use crate::graph::{Graph, GraphError};

/// Maximum vertex degree.
pub fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|x| g.degree(x).unwrap()).max().unwrap()
}

/// Chromatic index of a tree, which equals its maximum degree.
pub fn chromatic_index_tree(h: &Graph) -> Result<u32, GraphError> {
    if !h.is_tree() {
        return Err(GraphError::NotATree);
    }
    Ok(max_degree(h) as u32)
}

/// `M(H)` with one witnessing vertex pair, lexicographically smallest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BigM {
    pub value: usize,
    pub witness: (usize, usize),
}

/// Maximum over all vertex pairs of the size of the union of internal-path
/// stars. All-pairs scan; adequate at desk scale.
pub fn big_m(h: &Graph) -> Result<BigM, GraphError> {
    if !h.is_tree() {
        return Err(GraphError::NotATree);
    }
    if h.edge_count() == 0 {
        return Err(GraphError::NoEdges);
    }
    let mut best = BigM { value: 0, witness: (0, 0) };
    for i in 0..h.n() {
        for j in (i + 1)..h.n() {
            let tp = h.tree_path(i, j)?.tp.len();
            if tp > best.value {
                best = BigM { value: tp, witness: (i, j) };
            }
        }
    }
    Ok(best)
}

/// A set of feasible palette sizes: an integer interval when contiguous,
/// an explicit sorted set otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSet {
    Interval { min: u32, max: u32 },
    Set(Vec<u32>),
}

impl SpectrumSet {
    /// Builds from a sorted set of values, collapsing to an interval when
    /// contiguous.
    pub fn from_sorted(values: &[u32]) -> SpectrumSet {
        if !values.is_empty()
            && values.windows(2).all(|w| w[1] == w[0] + 1)
        {
            SpectrumSet::Interval { min: values[0], max: *values.last().unwrap() }
        } else {
            SpectrumSet::Set(values.to_vec())
        }
    }

    pub fn members(&self) -> Vec<u32> {
        match self {
            SpectrumSet::Interval { min, max } => (*min..=*max).collect(),
            SpectrumSet::Set(v) => v.clone(),
        }
    }

    pub fn min(&self) -> Option<u32> {
        self.members().first().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.members().last().copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Formula,
    Oracle,
}

/// The parameters of a graph relevant to interval and cyclically-interval
/// colorability. Fields that do not apply are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub delta: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_prime: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_of_h: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<SpectrumSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_cyc: Option<SpectrumSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_int: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_cyc: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub big_w_int: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub big_w_cyc: Option<u32>,
    pub provenance: Provenance,
}

impl SpectrumReport {
    /// Delta <= chi' <= w_cyc <= w_int <= W_int <= W_cyc <= |E|, over the
    /// fields that are present.
    pub fn chain_holds(&self, edge_count: usize) -> bool {
        let chain = [
            Some(self.delta),
            self.chi_prime,
            self.w_cyc,
            self.w_int,
            self.big_w_int,
            self.big_w_cyc,
            Some(edge_count as u32),
        ];
        let present: Vec<u32> = chain.into_iter().flatten().collect();
        present.windows(2).all(|w| w[0] <= w[1])
    }
}

/// Formula-based spectrum of a tree: both spectra equal `[Delta, M]`.
pub fn spectrum_tree(h: &Graph) -> Result<SpectrumReport, GraphError> {
    if !h.is_tree() {
        return Err(GraphError::NotATree);
    }
    if h.edge_count() == 0 {
        return Err(GraphError::NoEdges);
    }
    let delta = max_degree(h) as u32;
    let m = big_m(h)?.value as u32;
    let range = SpectrumSet::Interval { min: delta, max: m };
    Ok(SpectrumReport {
        delta,
        chi_prime: Some(delta),
        m_of_h: Some(m),
        theta: Some(range.clone()),
        theta_cyc: Some(range),
        w_int: Some(delta),
        w_cyc: Some(delta),
        big_w_int: Some(m),
        big_w_cyc: Some(m),
        provenance: Provenance::Formula,
    })
}
