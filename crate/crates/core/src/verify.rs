//! Verification of edge colorings: proper (surjective), interval, and
//! cyclically-interval. Checks report the first violation as a witness.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclic::{AlgebraError, ColorSet};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("coloring covers {found} edges but the graph has {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("edge {edge} has color {color} outside [1, {t}]")]
    ColorOutOfRange { edge: usize, color: u32, t: u32 },
    #[error("unknown edge id {0}")]
    UnknownEdge(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A total assignment of colors in `[1, t]` to edges, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub t: u32,
    pub colors: Vec<u32>,
}

impl Coloring {
    pub fn new(t: u32, colors: Vec<u32>) -> Coloring {
        Coloring { t, colors }
    }

    pub fn from_json(text: &str) -> Result<Coloring, ColoringError> {
        serde_json::from_str(text).map_err(|e| ColoringError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap()
    }

    /// Total on E(g) with every color in range.
    pub fn validate(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.edge_count() {
            return Err(ColoringError::WrongLength {
                expected: g.edge_count(),
                found: self.colors.len(),
            });
        }
        for (edge, &color) in self.colors.iter().enumerate() {
            if color < 1 || color > self.t {
                return Err(ColoringError::ColorOutOfRange { edge, color, t: self.t });
            }
        }
        Ok(())
    }
}

/// First violation found by a verifier, usable as a diagnostic witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// Two edges at `vertex` share a color.
    AdjacentClash { vertex: usize, edge_a: usize, edge_b: usize, color: u32 },
    /// Some palette color is never used.
    MissingColor { color: u32 },
    /// The star of `vertex` is not an interval.
    StarNotInterval { vertex: usize, star: Vec<u32> },
    /// The star of `vertex` is not a t-cyclic interval.
    StarNotCyclic { vertex: usize, star: Vec<u32> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AdjacentClash { vertex, edge_a, edge_b, color } => write!(
                f,
                "edges {} and {} at vertex {} share color {}",
                edge_a, edge_b, vertex, color
            ),
            Violation::MissingColor { color } => write!(f, "color {} is unused", color),
            Violation::StarNotInterval { vertex, star } => {
                write!(f, "star {:?} at vertex {} is not an interval", star, vertex)
            }
            Violation::StarNotCyclic { vertex, star } => {
                write!(f, "star {:?} at vertex {} is not a cyclic interval", star, vertex)
            }
        }
    }
}

/// Image of an edge set under the coloring.
pub fn colors_of(
    g: &Graph,
    c: &Coloring,
    edge_set: impl IntoIterator<Item = usize>,
) -> Result<ColorSet, ColoringError> {
    c.validate(g)?;
    let mut s = ColorSet::empty(c.t)?;
    for id in edge_set {
        let color = *c.colors.get(id).ok_or(ColoringError::UnknownEdge(id))?;
        s.insert(color)?;
    }
    Ok(s)
}

/// Star color set of a vertex, `colors_of(J(x))`.
pub fn star_colors(g: &Graph, c: &Coloring, x: usize) -> Result<ColorSet, ColoringError> {
    let star = g.incident_edges(x)?;
    colors_of(g, c, star)
}

/// Adjacent edges colored differently and each of the `t` colors used.
pub fn check_proper(g: &Graph, c: &Coloring) -> Result<Result<(), Violation>, ColoringError> {
    c.validate(g)?;
    for x in 0..g.n() {
        let star = g.incident_edges(x)?;
        for (i, &ea) in star.iter().enumerate() {
            for &eb in &star[i + 1..] {
                if c.colors[ea] == c.colors[eb] {
                    return Ok(Err(Violation::AdjacentClash {
                        vertex: x,
                        edge_a: ea,
                        edge_b: eb,
                        color: c.colors[ea],
                    }));
                }
            }
        }
    }
    let image = colors_of(g, c, 0..g.edge_count())?;
    for color in 1..=c.t {
        if !image.contains(color) {
            return Ok(Err(Violation::MissingColor { color }));
        }
    }
    Ok(Ok(()))
}

/// Proper, and every vertex star is an interval of size equal to the
/// degree.
pub fn check_interval(g: &Graph, c: &Coloring) -> Result<Result<(), Violation>, ColoringError> {
    if let Err(v) = check_proper(g, c)? {
        return Ok(Err(v));
    }
    for x in 0..g.n() {
        let star = star_colors(g, c, x)?;
        // properness already forces |star| = degree; assert anyway
        if !star.is_interval() || star.len() as usize != g.degree(x)? {
            return Ok(Err(Violation::StarNotInterval { vertex: x, star: star.members() }));
        }
    }
    Ok(Ok(()))
}

/// Proper, and every vertex star is a t-cyclic interval.
pub fn check_cyclic(g: &Graph, c: &Coloring) -> Result<Result<(), Violation>, ColoringError> {
    if let Err(v) = check_proper(g, c)? {
        return Ok(Err(v));
    }
    for x in 0..g.n() {
        let star = star_colors(g, c, x)?;
        if !star.is_cyclic_interval() {
            return Ok(Err(Violation::StarNotCyclic { vertex: x, star: star.members() }));
        }
    }
    Ok(Ok(()))
}

pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    matches!(check_proper(g, c), Ok(Ok(())))
}

pub fn is_interval_coloring(g: &Graph, c: &Coloring) -> bool {
    matches!(check_interval(g, c), Ok(Ok(())))
}

pub fn is_cyclic_coloring(g: &Graph, c: &Coloring) -> bool {
    matches!(check_cyclic(g, c), Ok(Ok(())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn colors_of_cases() {
        let p = fixtures::path(3);
        let c = Coloring::new(2, vec![1, 2]);
        assert!(colors_of(&p, &c, []).unwrap().is_empty());
        let star = p.incident_edges(1).unwrap();
        assert_eq!(colors_of(&p, &c, star).unwrap().members(), vec![1, 2]);
        let c2 = Coloring::new(2, vec![2, 2]);
        assert_eq!(colors_of(&p, &c2, 0..2).unwrap().members(), vec![2]);
        assert!(matches!(colors_of(&p, &c, [9]), Err(ColoringError::UnknownEdge(9))));
    }

    #[test]
    fn proper_cases() {
        let c3 = fixtures::cycle(3);
        assert!(is_proper(&c3, &Coloring::new(3, vec![1, 2, 3])));
        let p = fixtures::path(3);
        assert!(!is_proper(&p, &Coloring::new(1, vec![1, 1])));
        // surjectivity is part of the definition
        let single = fixtures::path(2);
        assert!(!is_proper(&single, &Coloring::new(2, vec![1])));
        assert!(is_proper(&single, &Coloring::new(1, vec![1])));
    }

    #[test]
    fn interval_cases() {
        let p = fixtures::path(3);
        assert!(is_interval_coloring(&p, &Coloring::new(2, vec![1, 2])));
        let c3 = fixtures::cycle(3);
        let c = Coloring::new(3, vec![1, 2, 3]);
        assert!(!is_interval_coloring(&c3, &c));
        assert!(matches!(
            check_interval(&c3, &c).unwrap(),
            Err(Violation::StarNotInterval { .. })
        ));
        let star = fixtures::star(3);
        assert!(is_interval_coloring(&star, &Coloring::new(3, vec![1, 2, 3])));
    }

    #[test]
    fn cyclic_cases() {
        let c3 = fixtures::cycle(3);
        assert!(is_cyclic_coloring(&c3, &Coloring::new(3, vec![1, 2, 3])));
        // edges of C_5 are (0,1),(1,2),(2,3),(3,4),(4,0)
        let c5 = fixtures::cycle(5);
        assert!(is_cyclic_coloring(&c5, &Coloring::new(3, vec![1, 2, 1, 2, 3])));
    }

    #[test]
    fn truncated_coloring_rejected() {
        let p = fixtures::path(4);
        let c = Coloring::new(2, vec![1, 2]);
        assert!(matches!(
            check_proper(&p, &c),
            Err(ColoringError::WrongLength { expected: 3, found: 2 })
        ));
    }
}
