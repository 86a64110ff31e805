use crate::SignedGraph;

/// Renders the graph in Graphviz DOT, 1-based. Negative edges are dashed and
/// labeled `-`, positive edges labeled `+`. Output is deterministic: vertices
/// first (so isolated vertices appear), then edges in stored order.
pub fn emit_dot(g: &SignedGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {};\n", v + 1));
    }
    for e in g.edges() {
        if e.sign.is_negative() {
            out.push_str(&format!(
                "  {} -- {} [style=dashed, label=\"-\"];\n",
                e.u + 1,
                e.v + 1
            ));
        } else {
            out.push_str(&format!("  {} -- {} [label=\"+\"];\n", e.u + 1, e.v + 1));
        }
    }
    out.push_str("}\n");
    out
}
