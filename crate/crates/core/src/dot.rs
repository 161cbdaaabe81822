//! DOT export with optional edge labels carrying colors. Output is
//! byte-stable for a fixed input.

use crate::graph::Graph;
use crate::verify::{Coloring, ColoringError};

pub fn export_dot(g: &Graph, coloring: Option<&Coloring>) -> Result<String, ColoringError> {
    if let Some(c) = coloring {
        c.validate(g)?;
    }
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {};\n", v));
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        match coloring {
            Some(c) => out.push_str(&format!("  {} -- {} [label=\"{}\"];\n", u, v, c.colors[id])),
            None => out.push_str(&format!("  {} -- {};\n", u, v)),
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn labeled_export() {
        let g = fixtures::path(4);
        let c = Coloring::new(3, vec![1, 2, 3]);
        let dot = export_dot(&g, Some(&c)).unwrap();
        assert_eq!(
            dot,
            "graph g {\n  0;\n  1;\n  2;\n  3;\n  0 -- 1 [label=\"1\"];\n  1 -- 2 [label=\"2\"];\n  2 -- 3 [label=\"3\"];\n}\n"
        );
    }

    #[test]
    fn unlabeled_export() {
        let g = fixtures::path(2);
        assert_eq!(export_dot(&g, None).unwrap(), "graph g {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }

    #[test]
    fn mismatched_coloring_rejected() {
        let g = fixtures::path(4);
        let c = Coloring::new(2, vec![1, 2]);
        assert!(export_dot(&g, Some(&c)).is_err());
    }
}
