//! Rendering of trees and solutions as text, JSON and DOT. All output is
//! deterministic: vertex lists follow internal (declaration) order and JSON
//! maps are sorted by key.

use modmotif::graph::{ColorUniverse, VertexColoredGraph};
use modmotif::mdtree::MdTree;
use modmotif::solver::MotifSolution;
use serde::Serialize;

#[derive(Serialize)]
struct NodeJson {
    id: usize,
    kind: &'static str,
    vertices: Vec<String>,
    children: Vec<usize>,
}

#[derive(Serialize)]
struct TreeJson {
    n: usize,
    root: usize,
    nodes: Vec<NodeJson>,
}

pub fn tree_to_json(g: &VertexColoredGraph, tree: &MdTree) -> String {
    let nodes = tree
        .nodes
        .iter()
        .enumerate()
        .map(|(id, node)| NodeJson {
            id,
            kind: node.kind.as_str(),
            vertices: g.vertex_names(&node.vertices),
            children: node.children.clone(),
        })
        .collect();
    let doc = TreeJson {
        n: g.n(),
        root: tree.root(),
        nodes,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

pub fn tree_to_text(g: &VertexColoredGraph, tree: &MdTree) -> String {
    let mut out = String::new();
    fn rec(g: &VertexColoredGraph, tree: &MdTree, idx: usize, depth: usize, out: &mut String) {
        let node = &tree.nodes[idx];
        out.push_str(&"  ".repeat(depth));
        out.push_str(&format!(
            "- {}: {}\n",
            node.kind.as_str(),
            g.vertex_names(&node.vertices).join(" ")
        ));
        for &c in &node.children {
            rec(g, tree, c, depth + 1, out);
        }
    }
    rec(g, tree, tree.root(), 0, &mut out);
    out
}

pub fn tree_to_dot(g: &VertexColoredGraph, tree: &MdTree) -> String {
    let mut out = String::from("graph mdtree {\n  node [shape=box];\n");
    for (id, node) in tree.nodes.iter().enumerate() {
        let label = if node.children.is_empty() {
            g.vertex_names(&node.vertices).join(",")
        } else {
            format!(
                "{} {{{}}}",
                node.kind.as_str(),
                g.vertex_names(&node.vertices).join(",")
            )
        };
        out.push_str(&format!("  n{id} [label=\"{label}\"];\n"));
    }
    for (id, node) in tree.nodes.iter().enumerate() {
        for &c in &node.children {
            out.push_str(&format!("  n{id} -- n{c};\n"));
        }
    }
    out.push_str("}\n");
    out
}

pub fn vertices_line(g: &VertexColoredGraph, sol: &MotifSolution) -> String {
    g.vertex_names(&sol.vertices).join(" ")
}

pub fn assignment_line(
    g: &VertexColoredGraph,
    u: &ColorUniverse,
    assignment: &[(usize, usize)],
) -> String {
    assignment
        .iter()
        .map(|&(v, c)| format!("{}={}", g.vertex_name(v), u.name(c)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn solution_json(
    g: &VertexColoredGraph,
    u: &ColorUniverse,
    sol: &MotifSolution,
) -> serde_json::Value {
    let mut doc = serde_json::Map::new();
    doc.insert("found".into(), true.into());
    doc.insert(
        "vertices".into(),
        g.vertex_names(&sol.vertices).into(),
    );
    if let Some(assignment) = &sol.assignment {
        let mut map = serde_json::Map::new();
        for &(v, c) in assignment {
            map.insert(g.vertex_name(v).to_string(), u.name(c).into());
        }
        doc.insert("assignment".into(), map.into());
    }
    doc.insert("tree_node_kind".into(), sol.node_kind.as_str().into());
    doc.into()
}

pub fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}
