//! Vertex-colored graphs, color multisets and their text formats.
//!
//! The `.gm` format is line oriented UTF-8. `#` starts a comment that runs to
//! the end of the line, blank lines are skipped. A vertex line is
//! `v <id> <color>` (simple mode) or `v <id> <c1>|<c2>|...` (list-colored
//! mode); an edge line is `e <u> <v>`. Vertex ids and color names are
//! arbitrary whitespace-free tokens; they are interned to dense indices in
//! order of first appearance. A motif file holds one `<color> <count>` line
//! per color.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// Dense color index into a [`ColorUniverse`].
pub type ColorId = usize;

/// A per-vertex color choice, as (vertex id, color id) pairs.
pub type ColorAssignment = Vec<(usize, ColorId)>;

/// Interns color names to dense ids. Shared by a graph and the motifs
/// searched in it; motifs may introduce colors the graph never uses.
#[derive(Debug, Clone, Default)]
pub struct ColorUniverse {
    names: Vec<String>,
    index: HashMap<String, ColorId>,
}

impl ColorUniverse {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn intern(&mut self, name: &str) -> ColorId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    pub fn lookup(&self, name: &str) -> Option<ColorId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: ColorId) -> &str {
        &self.names[id]
    }
}

/// A multiset of colors as an occurrence vector. Trailing zeros are
/// insignificant: vectors of different lengths compare as if padded, so
/// multisets built before and after the universe grew stay compatible.
#[derive(Debug, Clone, Default)]
pub struct ColorMultiset {
    occ: Vec<u32>,
}

impl ColorMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts<I: IntoIterator<Item = (ColorId, u32)>>(counts: I) -> Self {
        let mut m = Self::new();
        for (c, n) in counts {
            m.add(c, n);
        }
        m
    }

    pub fn singleton(color: ColorId) -> Self {
        Self::from_counts([(color, 1)])
    }

    pub fn add(&mut self, color: ColorId, count: u32) {
        if color >= self.occ.len() {
            self.occ.resize(color + 1, 0);
        }
        self.occ[color] += count;
    }

    pub fn sub(&mut self, color: ColorId, count: u32) {
        debug_assert!(self.occ(color) >= count);
        self.occ[color] -= count;
    }

    pub fn occ(&self, color: ColorId) -> u32 {
        self.occ.get(color).copied().unwrap_or(0)
    }

    /// Total size k = sum of occurrences.
    pub fn k(&self) -> usize {
        self.occ.iter().map(|&n| n as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.occ.iter().all(|&n| n == 0)
    }

    /// True iff every color occurs at most once.
    pub fn is_colorful(&self) -> bool {
        self.occ.iter().all(|&n| n <= 1)
    }

    /// Colors with nonzero occurrence, ascending.
    pub fn support(&self) -> Vec<ColorId> {
        (0..self.occ.len()).filter(|&c| self.occ[c] > 0).collect()
    }

    /// Occurrence-wise `self <= other`.
    pub fn is_subset_of(&self, other: &ColorMultiset) -> bool {
        (0..self.occ.len().max(other.occ.len())).all(|c| self.occ(c) <= other.occ(c))
    }

    pub fn add_assign(&mut self, other: &ColorMultiset) {
        if other.occ.len() > self.occ.len() {
            self.occ.resize(other.occ.len(), 0);
        }
        for (c, &n) in other.occ.iter().enumerate() {
            self.occ[c] += n;
        }
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a ColorMultiset>>(parts: I) -> ColorMultiset {
        let mut m = ColorMultiset::new();
        for p in parts {
            m.add_assign(p);
        }
        m
    }

    /// Number of sub-multisets, i.e. the product of (occ+1) over all colors.
    pub fn sub_multiset_count(&self) -> u128 {
        self.occ
            .iter()
            .map(|&n| n as u128 + 1)
            .product()
    }
}

impl PartialEq for ColorMultiset {
    fn eq(&self, other: &Self) -> bool {
        (0..self.occ.len().max(other.occ.len())).all(|c| self.occ(c) == other.occ(c))
    }
}

impl Eq for ColorMultiset {}

/// Occurrence-wise `a <= b` (the sub-multiset partial order).
pub fn multiset_subset(a: &ColorMultiset, b: &ColorMultiset) -> bool {
    a.is_subset_of(b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coloring {
    /// One color per vertex.
    Simple(Vec<ColorId>),
    /// A nonempty, sorted set of colors per vertex.
    List(Vec<Vec<ColorId>>),
}

/// An immutable undirected simple graph with colored vertices.
///
/// Vertex ids are dense `0..n`; the original string ids from the input file
/// are retained for output. Color names live in a separate [`ColorUniverse`]
/// so that motifs parsed later can extend the palette.
#[derive(Debug, Clone)]
pub struct VertexColoredGraph {
    names: Vec<String>,
    name_index: HashMap<String, usize>,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    coloring: Coloring,
}

impl VertexColoredGraph {
    /// Build a graph from parts, validating the simple-graph invariants.
    pub fn from_parts(
        names: Vec<String>,
        edges: Vec<(usize, usize)>,
        coloring: Coloring,
    ) -> Result<Self> {
        let n = names.len();
        match &coloring {
            Coloring::Simple(c) if c.len() != n => {
                return Err(Error::input("coloring length does not match vertex count"))
            }
            Coloring::List(c) => {
                if c.len() != n {
                    return Err(Error::input("coloring length does not match vertex count"));
                }
                if c.iter().any(|s| s.is_empty()) {
                    return Err(Error::input("list-colored vertex with empty color set"));
                }
            }
            _ => {}
        }
        let mut name_index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name_index.insert(name.clone(), i).is_some() {
                return Err(Error::input(format!("duplicate vertex id `{name}`")));
            }
        }
        let mut adj = vec![VertexSet::empty(n); n];
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::input("edge endpoint out of range"));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at `{}`", names[u])));
            }
            if adj[u].contains(v) {
                return Err(Error::input(format!(
                    "duplicate edge {} {}",
                    names[u], names[v]
                )));
            }
            adj[u].insert(v);
            adj[v].insert(u);
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        Ok(VertexColoredGraph {
            names,
            name_index,
            adj,
            edges: norm,
            coloring,
        })
    }

    /// Convenience constructor for simple-mode graphs with default names `v0..`.
    pub fn simple(n: usize, edges: &[(usize, usize)], colors: Vec<ColorId>) -> Result<Self> {
        let names = (0..n).map(|i| format!("v{i}")).collect();
        Self::from_parts(names, edges.to_vec(), Coloring::Simple(colors))
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.name_index.get(name).copied()
    }

    pub fn vertex_names(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.names[v].to_string()).collect()
    }

    pub fn is_list_colored(&self) -> bool {
        matches!(self.coloring, Coloring::List(_))
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    /// Per-vertex colors in simple mode; error in list-colored mode, where
    /// single-color semantics do not apply.
    pub fn simple_colors(&self) -> Result<&[ColorId]> {
        match &self.coloring {
            Coloring::Simple(c) => Ok(c),
            Coloring::List(_) => Err(Error::input(
                "operation requires a simple coloring but the graph is list-colored",
            )),
        }
    }

    /// The color set of a vertex; a singleton in simple mode.
    pub fn color_set(&self, v: usize) -> &[ColorId] {
        match &self.coloring {
            Coloring::Simple(c) => std::slice::from_ref(&c[v]),
            Coloring::List(c) => &c[v],
        }
    }

    /// The multiset of colors over a vertex set (simple mode only).
    pub fn color_multiset_of(&self, set: &VertexSet) -> Result<ColorMultiset> {
        let colors = self.simple_colors()?;
        let mut m = ColorMultiset::new();
        for v in set.iter() {
            m.add(colors[v], 1);
        }
        Ok(m)
    }

    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Connected components of the subgraph induced by `within`, each sorted
    /// and listed in order of smallest member.
    pub fn components(&self, within: &VertexSet) -> Vec<VertexSet> {
        self.components_by(within, |v| self.adj[v].clone())
    }

    /// Components of the complement graph induced by `within`.
    pub fn co_components(&self, within: &VertexSet) -> Vec<VertexSet> {
        self.components_by(within, |v| {
            let mut non = within.clone();
            non.subtract(&self.adj[v]);
            non.remove(v);
            non
        })
    }

    fn components_by<F: Fn(usize) -> VertexSet>(
        &self,
        within: &VertexSet,
        neighbors: F,
    ) -> Vec<VertexSet> {
        let mut remaining = within.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.min() {
            let mut comp = VertexSet::empty(self.n());
            let mut stack = vec![start];
            comp.insert(start);
            remaining.remove(start);
            while let Some(v) = stack.pop() {
                let mut nbrs = neighbors(v);
                nbrs.intersect_with(&remaining);
                for u in nbrs.iter() {
                    comp.insert(u);
                    remaining.remove(u);
                    stack.push(u);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected_within(&self, set: &VertexSet) -> bool {
        if set.is_empty() {
            return false;
        }
        self.components(set).len() == 1
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parse a `.gm` graph. Mode is inferred: any `|`-separated color list makes
/// the whole graph list-colored.
pub fn parse_graph(text: &str, universe: &mut ColorUniverse) -> Result<VertexColoredGraph> {
    let mut names: Vec<String> = Vec::new();
    let mut name_index: HashMap<String, usize> = HashMap::new();
    let mut color_sets: Vec<Vec<ColorId>> = Vec::new();
    let mut saw_list = false;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_seen: HashMap<(usize, usize), ()> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "v" => {
                if tokens.len() != 3 {
                    return Err(Error::parse(lineno, "expected `v <id> <color>`"));
                }
                let name = tokens[1];
                if name_index.contains_key(name) {
                    return Err(Error::parse(lineno, format!("duplicate vertex id `{name}`")));
                }
                let spec = tokens[2];
                let mut set: Vec<ColorId> = Vec::new();
                if spec.contains('|') {
                    saw_list = true;
                    for part in spec.split('|') {
                        if part.is_empty() {
                            return Err(Error::parse(lineno, "empty color name in list"));
                        }
                        set.push(universe.intern(part));
                    }
                    set.sort_unstable();
                    set.dedup();
                } else {
                    set.push(universe.intern(spec));
                }
                name_index.insert(name.to_string(), names.len());
                names.push(name.to_string());
                color_sets.push(set);
            }
            "e" => {
                if tokens.len() != 3 {
                    return Err(Error::parse(lineno, "expected `e <u> <v>`"));
                }
                let u = *name_index.get(tokens[1]).ok_or_else(|| {
                    Error::parse(lineno, format!("edge endpoint `{}` undeclared", tokens[1]))
                })?;
                let v = *name_index.get(tokens[2]).ok_or_else(|| {
                    Error::parse(lineno, format!("edge endpoint `{}` undeclared", tokens[2]))
                })?;
                if u == v {
                    return Err(Error::parse(lineno, format!("self-loop at `{}`", tokens[1])));
                }
                let key = (u.min(v), u.max(v));
                if edge_seen.insert(key, ()).is_some() {
                    return Err(Error::parse(
                        lineno,
                        format!("duplicate edge {} {}", tokens[1], tokens[2]),
                    ));
                }
                edges.push(key);
            }
            other => {
                return Err(Error::parse(lineno, format!("unknown directive `{other}`")));
            }
        }
    }

    let coloring = if saw_list {
        Coloring::List(color_sets)
    } else {
        Coloring::Simple(color_sets.into_iter().map(|s| s[0]).collect())
    };
    VertexColoredGraph::from_parts(names, edges, coloring)
}

/// Serialize a graph back to the `.gm` format. `parse_graph` of the output
/// reproduces the graph and interns colors in the same order.
pub fn serialize_graph(g: &VertexColoredGraph, universe: &ColorUniverse) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        let mut names: Vec<&str> = g.color_set(v).iter().map(|&c| universe.name(c)).collect();
        names.sort_unstable(); // canonical order independent of interning history
        out.push_str(&format!("v {} {}\n", g.vertex_name(v), names.join("|")));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", g.vertex_name(u), g.vertex_name(v)));
    }
    out
}

/// Parse a motif file of `<color> <count>` lines. Colors missing from the
/// graph are legal and are interned into the shared universe.
pub fn parse_motif(text: &str, universe: &mut ColorUniverse) -> Result<ColorMultiset> {
    let mut m = ColorMultiset::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::parse(lineno, "expected `<color> <count>`"));
        }
        if let Some(prev) = seen.insert(tokens[0].to_string(), lineno) {
            return Err(Error::parse(
                lineno,
                format!("duplicate color `{}` (first at line {prev})", tokens[0]),
            ));
        }
        let count: i64 = tokens[1]
            .parse()
            .map_err(|_| Error::parse(lineno, format!("invalid count `{}`", tokens[1])))?;
        if count < 1 {
            return Err(Error::parse(
                lineno,
                format!("count must be at least 1, got {count}"),
            ));
        }
        m.add(universe.intern(tokens[0]), count as u32);
    }
    Ok(m)
}

pub fn serialize_motif(m: &ColorMultiset, universe: &ColorUniverse) -> String {
    let mut out = String::new();
    for c in m.support() {
        out.push_str(&format!("{} {}\n", universe.name(c), m.occ(c)));
    }
    out
}
