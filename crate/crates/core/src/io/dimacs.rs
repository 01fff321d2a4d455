use std::fmt::Write;

use crate::graph::Graph;

/// DIMACS edge format: `p edge n m` then `e u v` per edge, 1-based,
/// lexicographic.
pub fn export_col(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).expect("write to String");
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("write to String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let text = export_col(&Graph::complete(3).unwrap());
        assert_eq!(text, "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn edgeless() {
        assert_eq!(export_col(&Graph::empty(2).unwrap()), "p edge 2 0\n");
    }
}
