//! Modular decomposition: module test, tree construction, classification.
//!
//! A module is a vertex set whose members are not separated by any outside
//! vertex: every `x` outside is adjacent to all of the set or to none of it.
//! Strong modules (overlapped by no other module) form a laminar family whose
//! inclusion order is the decomposition tree. The tree is built top-down:
//! a disconnected graph splits into its components (parallel), a graph with
//! disconnected complement splits into its co-components (series), and
//! otherwise the vertex set splits into its maximal proper modules, which in
//! that case are pairwise disjoint (prime). The builder is a quadratic-ish
//! partition refinement, cubic worst case; ample for the instance sizes this
//! crate targets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexColoredGraph;
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Leaf,
    Series,
    Parallel,
    Prime,
}

impl NodeKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            NodeKind::Leaf => "leaf",
            NodeKind::Series => "series",
            NodeKind::Parallel => "parallel",
            NodeKind::Prime => "prime",
        }
    }
}

#[derive(Debug, Clone)]
pub struct MdNode {
    pub vertices: VertexSet,
    pub kind: NodeKind,
    /// Child node indices, ordered by smallest contained vertex.
    pub children: Vec<usize>,
}

/// The modular decomposition tree. Node 0 is the root; node indices follow a
/// pre-order walk with children ordered by smallest contained vertex, so the
/// `nodes` array itself is the deterministic traversal order.
#[derive(Debug, Clone)]
pub struct MdTree {
    pub nodes: Vec<MdNode>,
}

impl MdTree {
    pub fn root(&self) -> usize {
        0
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Vertex sets of all strong modules, root first, in traversal order.
    pub fn strong_modules(&self) -> Vec<VertexSet> {
        self.nodes.iter().map(|n| n.vertices.clone()).collect()
    }
}

/// True iff no vertex outside `set` is adjacent to some but not all of `set`.
/// The empty set is not considered a module.
pub fn is_module(g: &VertexColoredGraph, set: &VertexSet) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut outside = g.full_vertex_set();
    outside.subtract(set);
    let size = set.len();
    for x in outside.iter() {
        let hits = g.neighbors(x).intersection(set).len();
        if hits != 0 && hits != size {
            return false;
        }
    }
    true
}

/// Classify a module by the connectivity trichotomy: parallel if the induced
/// subgraph is disconnected, series if the induced complement is
/// disconnected, prime if both are connected, leaf for singletons.
pub fn classify(g: &VertexColoredGraph, set: &VertexSet) -> NodeKind {
    debug_assert!(is_module(g, set), "classify requires a module");
    if set.len() == 1 {
        return NodeKind::Leaf;
    }
    if g.components(set).len() > 1 {
        return NodeKind::Parallel;
    }
    if g.co_components(set).len() > 1 {
        return NodeKind::Series;
    }
    NodeKind::Prime
}

/// Build the modular decomposition tree of a nonempty graph.
pub fn decompose(g: &VertexColoredGraph) -> Result<MdTree> {
    if g.n() == 0 {
        return Err(Error::input("cannot decompose an empty graph"));
    }
    let mut tree = MdTree { nodes: Vec::new() };
    build(g, g.full_vertex_set(), &mut tree);
    Ok(tree)
}

fn build(g: &VertexColoredGraph, set: VertexSet, tree: &mut MdTree) -> usize {
    let idx = tree.nodes.len();
    tree.nodes.push(MdNode {
        vertices: set.clone(),
        kind: NodeKind::Leaf,
        children: Vec::new(),
    });
    if set.len() == 1 {
        return idx;
    }

    let comps = g.components(&set);
    let (kind, parts) = if comps.len() > 1 {
        (NodeKind::Parallel, comps)
    } else {
        let cocomps = g.co_components(&set);
        if cocomps.len() > 1 {
            (NodeKind::Series, cocomps)
        } else {
            (NodeKind::Prime, maximal_proper_modules(g, &set))
        }
    };

    // components_by and maximal_proper_modules both emit parts ordered by
    // smallest member, which fixes the child order contract.
    let mut parts = parts;
    parts.sort_by_key(|p| p.min());
    tree.nodes[idx].kind = kind;
    let children: Vec<usize> = parts.into_iter().map(|p| build(g, p, tree)).collect();
    tree.nodes[idx].children = children;
    idx
}

/// The partition of a connected, co-connected graph into its maximal proper
/// modules. Computed as: the maximal modules avoiding the smallest vertex w,
/// plus the maximal proper module containing w, which absorbs any avoiding
/// parts it contains.
fn maximal_proper_modules(g: &VertexColoredGraph, set: &VertexSet) -> Vec<VertexSet> {
    let w = set.min().expect("nonempty");
    let avoiding = maximal_avoiding_modules(g, set, w);

    // Grow the module around w: the maximal module containing w and avoiding
    // z is monotone under replacing z by a vertex outside the current
    // candidate, and equals the target once every outside vertex has been
    // tried.
    let mut around_w = VertexSet::empty(g.n());
    around_w.insert(w);
    for z in set.iter() {
        if z == w || around_w.contains(z) {
            continue;
        }
        around_w = max_module_containing_avoiding(g, set, w, z);
    }

    let mut parts = vec![around_w.clone()];
    for p in avoiding {
        if p.is_disjoint_from(&around_w) {
            parts.push(p);
        }
    }
    parts
}

/// Coarsest partition of `set \ {z}` into modules of G[set] avoiding z, i.e.
/// the maximal z-avoiding modules. Worklist partition refinement seeded by
/// the split into neighbors and non-neighbors of z.
fn maximal_avoiding_modules(g: &VertexColoredGraph, set: &VertexSet, z: usize) -> Vec<VertexSet> {
    let n = g.n();
    let mut inside_nbrs = g.neighbors(z).intersection(set);
    inside_nbrs.remove(z);
    let mut inside_non = set.clone();
    inside_non.subtract(g.neighbors(z));
    inside_non.remove(z);

    let mut parts: Vec<VertexSet> = [inside_nbrs, inside_non]
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect();

    let mut queue: Vec<usize> = set.iter().filter(|&v| v != z).collect();
    let mut queued = VertexSet::from_iter(n, queue.iter().copied());
    let mut head = 0;
    while head < queue.len() {
        let y = queue[head];
        head += 1;
        queued.remove(y);
        let mut i = 0;
        while i < parts.len() {
            if parts[i].contains(y) {
                i += 1;
                continue;
            }
            let hit = parts[i].intersection(g.neighbors(y));
            if !hit.is_empty() && hit.len() != parts[i].len() {
                let mut miss = parts[i].clone();
                miss.subtract(&hit);
                // Members of the split part become pivots for each other.
                for v in parts[i].iter() {
                    if !queued.contains(v) {
                        queued.insert(v);
                        queue.push(v);
                    }
                }
                parts[i] = hit;
                parts.push(miss);
            }
            i += 1;
        }
    }
    parts
}

/// The unique maximal module of G[set] containing w and avoiding z: shrink
/// the seed side containing w by every outside splitter.
fn max_module_containing_avoiding(
    g: &VertexColoredGraph,
    set: &VertexSet,
    w: usize,
    z: usize,
) -> VertexSet {
    let mut part = if g.neighbors(z).contains(w) {
        g.neighbors(z).intersection(set)
    } else {
        let mut p = set.clone();
        p.subtract(g.neighbors(z));
        p
    };
    part.remove(z);

    let mut outside = set.clone();
    outside.subtract(&part);
    outside.remove(z);
    let mut queue: Vec<usize> = outside.iter().collect();
    let mut head = 0;
    while head < queue.len() {
        let y = queue[head];
        head += 1;
        let hit = part.intersection(g.neighbors(y));
        if hit.is_empty() || hit.len() == part.len() {
            continue;
        }
        let keep_hit = hit.contains(w);
        let mut evicted = part.clone();
        if keep_hit {
            evicted.subtract(&hit);
            part = hit;
        } else {
            part.subtract(&hit);
            evicted = hit;
        }
        queue.extend(evicted.iter());
    }
    part
}

/// Check every structural invariant of a decomposition tree against its
/// graph. Returns human-readable violations; empty means the tree is valid.
pub fn validate_tree(g: &VertexColoredGraph, tree: &MdTree) -> Vec<String> {
    let mut errs = Vec::new();
    let n = g.n();
    if tree.nodes.is_empty() {
        return vec!["tree has no nodes".into()];
    }
    if tree.nodes[0].vertices != g.full_vertex_set() {
        errs.push("root vertex set is not V".into());
    }
    if tree.node_count() >= 2 * n {
        errs.push(format!(
            "node count {} is not below 2n = {}",
            tree.node_count(),
            2 * n
        ));
    }
    let leaves: Vec<_> = tree.nodes.iter().filter(|x| x.children.is_empty()).collect();
    if leaves.len() != n {
        errs.push(format!("expected {n} leaves, found {}", leaves.len()));
    }
    for (i, node) in tree.nodes.iter().enumerate() {
        if node.children.is_empty() {
            if node.vertices.len() != 1 {
                errs.push(format!("node {i} has no children but is not a singleton"));
            }
            if node.kind != NodeKind::Leaf {
                errs.push(format!("singleton node {i} is not labeled leaf"));
            }
            continue;
        }
        if node.children.len() == 1 {
            errs.push(format!("node {i} has exactly one child"));
        }
        let mut union = VertexSet::empty(n);
        let mut total = 0;
        let mut last_min = None;
        for &c in &node.children {
            let cv = &tree.nodes[c].vertices;
            total += cv.len();
            union.union_with(cv);
            if last_min >= cv.min() {
                errs.push(format!("children of node {i} not ordered by min vertex"));
            }
            last_min = cv.min();
        }
        if union != node.vertices || total != node.vertices.len() {
            errs.push(format!("children of node {i} do not partition it"));
        }
        if !is_module(g, &node.vertices) {
            errs.push(format!("node {i} is not a module"));
        } else {
            let expect = classify(g, &node.vertices);
            if node.kind != expect {
                errs.push(format!(
                    "node {i} labeled {} but classifies as {}",
                    node.kind.as_str(),
                    expect.as_str()
                ));
            }
        }
    }
    errs
}

/// All modules predicted by the tree structure: the tree nodes themselves
/// plus every union of two or more children of a series or parallel node.
/// Intended for small graphs; the result is sorted and deduplicated.
pub fn modules_from_tree(tree: &MdTree, n: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = tree.strong_modules();
    for node in &tree.nodes {
        if !matches!(node.kind, NodeKind::Series | NodeKind::Parallel) {
            continue;
        }
        let t = node.children.len();
        assert!(t <= 24, "fan-out too large for exhaustive union enumeration");
        for mask in 1u32..(1 << t) {
            if mask.count_ones() < 2 {
                continue;
            }
            let mut union = VertexSet::empty(n);
            for (j, &c) in node.children.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    union.union_with(&tree.nodes[c].vertices);
                }
            }
            out.push(union);
        }
    }
    let mut keyed: Vec<(Vec<usize>, VertexSet)> =
        out.into_iter().map(|s| (s.to_vec(), s)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, s)| s).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, ColorUniverse};

    /// The 11-vertex worked example: vertices v1..v11, 29 edges.
    pub(crate) fn example11() -> VertexColoredGraph {
        let edges = [
            (1, 2),
            (2, 4),
            (1, 4),
            (1, 3),
            (3, 4),
            (2, 5),
            (4, 5),
            (4, 7),
            (5, 7),
            (3, 5),
            (2, 6),
            (5, 6),
            (2, 7),
            (3, 7),
            (3, 6),
            (4, 6),
            (6, 8),
            (8, 9),
            (9, 11),
            (6, 11),
            (6, 9),
            (9, 10),
            (6, 10),
            (7, 9),
            (7, 10),
            (8, 10),
            (7, 8),
            (7, 11),
            (8, 11),
        ];
        let names: Vec<String> = (1..=11).map(|i| format!("v{i}")).collect();
        let edges0: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        VertexColoredGraph::from_parts(
            names,
            edges0,
            crate::graph::Coloring::Simple(vec![0; 11]),
        )
        .unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, vs.iter().map(|&v| v - 1))
    }

    #[test]
    fn trivial_modules() {
        let g = example11();
        assert!(is_module(&g, &g.full_vertex_set()));
        for v in 0..11 {
            assert!(is_module(&g, &VertexSet::from_iter(11, [v])));
        }
        assert!(!is_module(&g, &VertexSet::empty(11)));
    }

    #[test]
    fn example11_module_queries() {
        let g = example11();
        assert!(is_module(&g, &set(11, &[2, 3, 4])));
        assert!(!is_module(&g, &set(11, &[1, 2])));
        assert!(is_module(&g, &set(11, &[6, 7])));
        assert!(is_module(&g, &set(11, &[8, 9, 10, 11])));
        assert!(is_module(&g, &set(11, &[10, 11])));
        assert!(!is_module(&g, &set(11, &[5, 6, 7])));
    }

    #[test]
    fn classify_examples() {
        let g = example11();
        assert_eq!(classify(&g, &set(11, &[5])), NodeKind::Leaf);
        assert_eq!(classify(&g, &set(11, &[6, 7])), NodeKind::Parallel);
        assert_eq!(classify(&g, &set(11, &[8, 9, 10, 11])), NodeKind::Series);
        assert_eq!(classify(&g, &g.full_vertex_set()), NodeKind::Prime);
    }

    #[test]
    fn single_vertex_tree() {
        let g = VertexColoredGraph::simple(1, &[], vec![0]).unwrap();
        let t = decompose(&g).unwrap();
        assert_eq!(t.node_count(), 1);
        assert_eq!(t.nodes[0].kind, NodeKind::Leaf);
        assert_eq!(t.strong_modules().len(), 1);
    }

    #[test]
    fn example11_tree_shape() {
        let g = example11();
        let t = decompose(&g).unwrap();
        assert_eq!(validate_tree(&g, &t), Vec::<String>::new());
        // 11 leaves plus 6 internal nodes.
        assert_eq!(t.node_count(), 17);
        let root = &t.nodes[0];
        assert_eq!(root.kind, NodeKind::Prime);
        let child_sets: Vec<Vec<usize>> = root
            .children
            .iter()
            .map(|&c| t.nodes[c].vertices.iter().map(|v| v + 1).collect())
            .collect();
        assert_eq!(
            child_sets,
            vec![
                vec![1],
                vec![2, 3, 4],
                vec![5],
                vec![6, 7],
                vec![8, 9, 10, 11]
            ]
        );
        let find = |vs: &[usize]| {
            let s = set(11, vs);
            t.nodes.iter().position(|x| x.vertices == s).unwrap()
        };
        assert_eq!(t.nodes[find(&[2, 3, 4])].kind, NodeKind::Series);
        assert_eq!(t.nodes[find(&[2, 3])].kind, NodeKind::Parallel);
        assert_eq!(t.nodes[find(&[6, 7])].kind, NodeKind::Parallel);
        assert_eq!(t.nodes[find(&[8, 9, 10, 11])].kind, NodeKind::Series);
        assert_eq!(t.nodes[find(&[10, 11])].kind, NodeKind::Parallel);
        let s234 = &t.nodes[find(&[2, 3, 4])];
        let c: Vec<Vec<usize>> = s234
            .children
            .iter()
            .map(|&i| t.nodes[i].vertices.iter().map(|v| v + 1).collect())
            .collect();
        assert_eq!(c, vec![vec![2, 3], vec![4]]);
    }

    #[test]
    fn p3_tree_is_series_over_parallel_ends() {
        let g = VertexColoredGraph::simple(3, &[(0, 1), (1, 2)], vec![0, 1, 0]).unwrap();
        let t = decompose(&g).unwrap();
        assert_eq!(t.nodes[0].kind, NodeKind::Series);
        let ends = VertexSet::from_iter(3, [0, 2]);
        assert!(t.nodes.iter().any(|x| x.vertices == ends && x.kind == NodeKind::Parallel));
        assert_eq!(t.strong_modules().len(), 5);
    }

    #[test]
    fn two_vertex_graphs() {
        let k2 = VertexColoredGraph::simple(2, &[(0, 1)], vec![0, 1]).unwrap();
        assert_eq!(decompose(&k2).unwrap().nodes[0].kind, NodeKind::Series);
        let e2 = VertexColoredGraph::simple(2, &[], vec![0, 1]).unwrap();
        assert_eq!(decompose(&e2).unwrap().nodes[0].kind, NodeKind::Parallel);
    }

    #[test]
    fn p4_is_prime_with_singleton_children() {
        let g = VertexColoredGraph::simple(4, &[(0, 1), (1, 2), (2, 3)], vec![0; 4]).unwrap();
        let t = decompose(&g).unwrap();
        assert_eq!(t.nodes[0].kind, NodeKind::Prime);
        assert_eq!(t.nodes[0].children.len(), 4);
        assert_eq!(validate_tree(&g, &t), Vec::<String>::new());
    }

    #[test]
    fn disconnected_graph_has_parallel_root() {
        let mut u = ColorUniverse::new();
        let g = parse_graph(
            "v a x\nv b x\nv c x\nv d x\ne a b\ne c d\n",
            &mut u,
        )
        .unwrap();
        let t = decompose(&g).unwrap();
        assert_eq!(t.nodes[0].kind, NodeKind::Parallel);
        assert_eq!(t.nodes[0].children.len(), 2);
    }
}
