use std::fmt::Write as _;

use crate::constructions::PrimeLabeling;
use crate::graph::Graph;

/// Undirected DOT text. With a labeling, each node is named by its prime.
pub fn render_dot(g: &Graph, labeling: Option<&PrimeLabeling>) -> String {
    let name = |v: usize| -> String {
        match labeling.and_then(|l| l.prime(v)) {
            Some(p) => p.to_string(),
            None => format!("v{v}"),
        }
    };
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  \"{}\";", name(v));
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", name(a), name(b));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let dot = render_dot(&Graph::complete(3).unwrap(), None);
        assert!(dot.starts_with("graph G {"));
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(
            dot.lines()
                .filter(|l| l.ends_with("\";") && !l.contains("--"))
                .count(),
            3
        );
    }
}
