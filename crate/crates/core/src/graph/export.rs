use std::fmt::Write;

use super::FiniteGraph;

/// Edge-list text: a `# dim=<d> root=<coords>` header, then one
/// `a -- b` line per edge with `a` listed before `b` in vertex order.
pub fn write_edge_list(g: &FiniteGraph) -> String {
    let mut out = String::new();
    let root = g
        .root_vertex()
        .map_or_else(|| "none".to_string(), ToString::to_string);
    writeln!(out, "# dim={} root={}", g.dim(), root).unwrap();
    for (i, j) in g.edges() {
        writeln!(out, "{} -- {}", g.vertex(i), g.vertex(j)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path_graph;

    #[test]
    fn path_export() {
        let g = path_graph(3).unwrap();
        assert_eq!(write_edge_list(&g), "# dim=1 root=0\n0 -- 1\n1 -- 2\n");
    }
}
