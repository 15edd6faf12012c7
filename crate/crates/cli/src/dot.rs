//! DOT export with labels, vertices and edges in index order.

use std::fmt::Write;

use gengraph::graph::Graph;

pub fn graph_to_dot(graph: &Graph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {name} {{");
    for v in 0..graph.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(&graph.label(v)));
    }
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}
