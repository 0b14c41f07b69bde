//! Instance generators for three gadget reductions, each paired with the
//! forward and backward solution mappings that make the reduction checkable
//! on concrete instances:
//!
//! * independent set -> maximum graph motif (a tree of per-vertex paths
//!   hanging off a shared root, edge colors duplicated across endpoints);
//! * set cover -> minimum-substitution graph motif (a depth-2 tree with
//!   subset colors excluded from the motif and |S|+1 copies per element);
//! * exact cover by 3-sets -> module graph motif (one 3-path per triple,
//!   colored by the covered elements).
//!
//! A generated instance carries a certificate: the source instance, the role
//! of every generated vertex, and the edge order used for adjacency lists.
//! Certificates are serializable; `regenerate` rebuilds and cross-checks an
//! instance from its certificate alone.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ColorMultiset, ColorUniverse, Coloring, VertexColoredGraph};
use crate::oracle::count_substitutions;
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    MisToMaxMotif,
    SetCoverToMinSubstitute,
    X3cToModuleMotif,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SourceInstance {
    Graph {
        names: Vec<String>,
        edges: Vec<(usize, usize)>,
    },
    SetSystem {
        universe: usize,
        sets: Vec<Vec<usize>>,
    },
}

/// What a generated vertex stands for. Total over the generated vertex set
/// and unique per vertex, so the map is invertible on roles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "role")]
pub enum Role {
    /// The shared root `r`.
    Root,
    /// Path vertex of source vertex `v` for source edge `{a, b}`.
    EdgeVertex { v: usize, a: usize, b: usize },
    /// The `j`-th private path vertex of source vertex `v` (1-based).
    PrivateVertex { v: usize, j: usize },
    /// The child representing subset `s`.
    SubsetVertex { s: usize },
    /// Copy `copy` (1-based) of the `pos`-th element (0-based, ascending) of
    /// subset `s`.
    CopyVertex { s: usize, pos: usize, copy: usize },
    /// The vertex of triple `t` carrying element `x`.
    ElementVertex { t: usize, x: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub reduction: ReductionKind,
    pub source: SourceInstance,
    pub vertex_roles: Vec<Role>,
    /// Global edge order used for adjacency lists (first reduction only).
    pub edge_order: Vec<(usize, usize)>,
    /// Motif as (color name, count) pairs in color order.
    pub motif: Vec<(String, u32)>,
}

/// A generated instance together with its certificate.
pub struct GeneratedInstance {
    pub graph: VertexColoredGraph,
    pub universe: ColorUniverse,
    pub motif: ColorMultiset,
    pub certificate: Certificate,
}

/// Vertex names and edges of a certificate's source graph.
pub type SourceGraphParts = (Vec<String>, Vec<(usize, usize)>);

impl GeneratedInstance {
    pub fn source_graph(&self) -> Result<SourceGraphParts> {
        match &self.certificate.source {
            SourceInstance::Graph { names, edges } => Ok((names.clone(), edges.clone())),
            _ => Err(Error::input("certificate source is not a graph")),
        }
    }

    pub fn source_set_system(&self) -> Result<(usize, Vec<Vec<usize>>)> {
        match &self.certificate.source {
            SourceInstance::SetSystem { universe, sets } => Ok((*universe, sets.clone())),
            _ => Err(Error::input("certificate source is not a set system")),
        }
    }
}

fn motif_pairs(m: &ColorMultiset, u: &ColorUniverse) -> Vec<(String, u32)> {
    m.support()
        .into_iter()
        .map(|c| (u.name(c).to_string(), m.occ(c)))
        .collect()
}

// ---------------------------------------------------------------------------
// Independent set -> maximum motif
// ---------------------------------------------------------------------------

/// Expand a source graph into the max-motif tree: a root plus one path per
/// source vertex holding its incident-edge vertices followed by `n^2`
/// privately colored vertices. Edge colors are shared by both endpoints'
/// paths; the motif is the whole (colorful) palette. The generated vertex
/// count is exactly `1 + 2|E| + n^3`.
pub fn mis_to_max_motif(source: &VertexColoredGraph) -> Result<GeneratedInstance> {
    let n = source.n();
    if n == 0 {
        return Err(Error::input("source graph is empty"));
    }
    // Fixed total edge order: lexicographic on (min endpoint, max endpoint).
    let edge_order: Vec<(usize, usize)> = source.edges().to_vec();

    let mut universe = ColorUniverse::new();
    let mut names: Vec<String> = Vec::new();
    let mut roles: Vec<Role> = Vec::new();
    let mut colors: Vec<usize> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    names.push("r".into());
    roles.push(Role::Root);
    colors.push(universe.intern("cr"));

    let nsq = n * n;
    for v in 0..n {
        let mut prev = 0usize; // the root
        for &(a, b) in edge_order.iter().filter(|&&(a, b)| a == v || b == v) {
            let idx = names.len();
            names.push(format!("v{}_e{}_{}", v + 1, a + 1, b + 1));
            roles.push(Role::EdgeVertex { v, a, b });
            colors.push(universe.intern(&format!("ce{}_{}", a + 1, b + 1)));
            edges.push((prev, idx));
            prev = idx;
        }
        for j in 1..=nsq {
            let idx = names.len();
            names.push(format!("v{}_p{}", v + 1, j));
            roles.push(Role::PrivateVertex { v, j });
            colors.push(universe.intern(&format!("c{}_{}", v + 1, j)));
            edges.push((prev, idx));
            prev = idx;
        }
    }

    let graph = VertexColoredGraph::from_parts(names, edges, Coloring::Simple(colors))?;
    assert_eq!(
        graph.n(),
        1 + 2 * source.edge_count() + n * n * n,
        "generated vertex count does not satisfy the size formula"
    );
    let motif = ColorMultiset::from_counts((0..universe.len()).map(|c| (c, 1)));
    assert!(motif.is_colorful());

    let certificate = Certificate {
        reduction: ReductionKind::MisToMaxMotif,
        source: SourceInstance::Graph {
            names: (0..n).map(|v| source.vertex_name(v).to_string()).collect(),
            edges: edge_order.clone(),
        },
        vertex_roles: roles,
        edge_order,
        motif: motif_pairs(&motif, &universe),
    };
    Ok(GeneratedInstance {
        graph,
        universe,
        motif,
        certificate,
    })
}

/// All generated vertices belonging to source vertex `v`'s path.
fn path_vertices(inst: &GeneratedInstance, v: usize) -> Vec<usize> {
    inst.certificate
        .vertex_roles
        .iter()
        .enumerate()
        .filter(|(_, r)| {
            matches!(r, Role::EdgeVertex { v: pv, .. } | Role::PrivateVertex { v: pv, .. } if *pv == v)
        })
        .map(|(i, _)| i)
        .collect()
}

/// Check that a vertex set is a valid max-motif solution on the generated
/// instance: nonempty, connected, colors within the motif and all distinct.
pub fn verify_max_motif_solution(inst: &GeneratedInstance, set: &VertexSet) -> Result<()> {
    if set.is_empty() {
        return Err(Error::InvalidSolution("solution is empty".into()));
    }
    if !inst.graph.is_connected_within(set) {
        return Err(Error::InvalidSolution(
            "solution does not induce a connected subgraph".into(),
        ));
    }
    let cm = inst.graph.color_multiset_of(set)?;
    if !cm.is_subset_of(&inst.motif) {
        return Err(Error::InvalidSolution(
            "solution uses a color outside the motif".into(),
        ));
    }
    if !cm.is_colorful() {
        return Err(Error::InvalidSolution(
            "solution repeats a color; the motif is colorful".into(),
        ));
    }
    Ok(())
}

/// Forward mapping: an independent set of the source becomes the root plus
/// the full paths of the chosen vertices. The result is verified (connected,
/// colorful) and must have at least `|is| * n^2` vertices.
pub fn map_independent_set_forward(
    inst: &GeneratedInstance,
    independent: &[usize],
) -> Result<VertexSet> {
    let (names, edges) = inst.source_graph()?;
    let n = names.len();
    for &v in independent {
        if v >= n {
            return Err(Error::input(format!("source vertex index {v} out of range")));
        }
    }
    for (i, &u) in independent.iter().enumerate() {
        for &v in &independent[i + 1..] {
            if edges.contains(&(u.min(v), u.max(v))) {
                return Err(Error::InvalidSolution(format!(
                    "vertices {} and {} are adjacent in the source",
                    names[u], names[v]
                )));
            }
        }
    }
    let mut set = VertexSet::empty(inst.graph.n());
    set.insert(0);
    for &v in independent {
        for g in path_vertices(inst, v) {
            set.insert(g);
        }
    }
    verify_max_motif_solution(inst, &set)?;
    let bound = independent.len() * n * n;
    if set.len() < bound {
        return Err(Error::InvalidSolution(format!(
            "mapped solution has {} vertices, below the bound {bound}",
            set.len()
        )));
    }
    Ok(set)
}

/// Backward mapping: a source vertex is selected iff its entire path lies in
/// the solution. The solution is verified first; the result is checked to be
/// independent and to satisfy `|selected| >= ceil((|V'| - 2|E| - 1) / n^2)`.
pub fn map_motif_solution_back(inst: &GeneratedInstance, set: &VertexSet) -> Result<Vec<usize>> {
    verify_max_motif_solution(inst, set)?;
    let (names, edges) = inst.source_graph()?;
    let n = names.len();
    let selected: Vec<usize> = (0..n)
        .filter(|&v| path_vertices(inst, v).iter().all(|&g| set.contains(g)))
        .collect();
    for (i, &u) in selected.iter().enumerate() {
        for &v in &selected[i + 1..] {
            if edges.contains(&(u.min(v), u.max(v))) {
                return Err(Error::InvalidSolution(format!(
                    "mapped set is not independent: {} and {} are adjacent",
                    names[u], names[v]
                )));
            }
        }
    }
    let bound = lemma2_bound(set.len(), edges.len(), n);
    if (selected.len() as i64) < bound {
        return Err(Error::InvalidSolution(format!(
            "mapped independent set has {} vertices, below the bound {bound}",
            selected.len()
        )));
    }
    Ok(selected)
}

/// `ceil((size - 2|E| - 1) / n^2)`, which may be nonpositive.
pub fn lemma2_bound(solution_size: usize, source_edges: usize, source_n: usize) -> i64 {
    let num = solution_size as i64 - 2 * source_edges as i64 - 1;
    let den = (source_n * source_n) as i64;
    (num + den - 1).div_euclid(den)
}

// ---------------------------------------------------------------------------
// Set cover -> minimum substitutions
// ---------------------------------------------------------------------------

fn validate_set_system(x_size: usize, sets: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let mut sorted = Vec::with_capacity(sets.len());
    for (i, s) in sets.iter().enumerate() {
        let mut s2 = s.clone();
        s2.sort_unstable();
        if s2.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input(format!("set {} has a repeated element", i + 1)));
        }
        if s2.iter().any(|&x| x >= x_size) {
            return Err(Error::input(format!(
                "set {} mentions an element outside the universe of size {x_size}",
                i + 1
            )));
        }
        sorted.push(s2);
    }
    Ok(sorted)
}

/// Expand a set system into the min-substitute tree: a root, one child per
/// subset (with a color outside the motif), and `|S|+1` copies of each
/// element under every subset containing it. The motif asks for the root
/// color plus every element-copy color, so it has size `1 + |X|(|S|+1)`.
pub fn set_cover_to_min_substitute(
    x_size: usize,
    sets: &[Vec<usize>],
) -> Result<GeneratedInstance> {
    if sets.is_empty() {
        return Err(Error::input("set system has no sets"));
    }
    let sets = validate_set_system(x_size, sets)?;
    let s_count = sets.len();
    let copies = s_count + 1;

    let mut universe = ColorUniverse::new();
    let mut names: Vec<String> = Vec::new();
    let mut roles: Vec<Role> = Vec::new();
    let mut colors: Vec<usize> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    names.push("r".into());
    roles.push(Role::Root);
    colors.push(universe.intern("cr"));

    for (i, set) in sets.iter().enumerate() {
        let subset_idx = names.len();
        names.push(format!("v{}", i + 1));
        roles.push(Role::SubsetVertex { s: i });
        colors.push(universe.intern(&format!("cs{}", i + 1)));
        edges.push((0, subset_idx));
        for (pos, &x) in set.iter().enumerate() {
            for t in 1..=copies {
                let idx = names.len();
                names.push(format!("v{}_{}_{}", i + 1, pos + 1, t));
                roles.push(Role::CopyVertex { s: i, pos, copy: t });
                colors.push(universe.intern(&format!("c{}_{}", x + 1, t)));
                edges.push((subset_idx, idx));
            }
        }
    }

    let graph = VertexColoredGraph::from_parts(names, edges, Coloring::Simple(colors))?;
    let leaf_count: usize = sets.iter().map(|s| copies * s.len()).sum();
    assert_eq!(graph.n(), 1 + s_count + leaf_count);

    // The motif covers every element of X, including elements no set holds.
    let mut motif = ColorMultiset::new();
    motif.add(universe.lookup("cr").unwrap(), 1);
    for x in 0..x_size {
        for t in 1..=copies {
            motif.add(universe.intern(&format!("c{}_{}", x + 1, t)), 1);
        }
    }
    assert_eq!(motif.k(), 1 + x_size * copies);
    assert!(motif.is_colorful());

    let certificate = Certificate {
        reduction: ReductionKind::SetCoverToMinSubstitute,
        source: SourceInstance::SetSystem {
            universe: x_size,
            sets: sets.clone(),
        },
        vertex_roles: roles,
        edge_order: Vec::new(),
        motif: motif_pairs(&motif, &universe),
    };
    Ok(GeneratedInstance {
        graph,
        universe,
        motif,
        certificate,
    })
}

/// Forward mapping of a cover: the root, the chosen subset vertices, and all
/// copies of each element under the first chosen subset containing it --
/// except that the first-covered position of each chosen subset drops copy 1.
/// Verified to have exactly `|M|` vertices, be connected, and need exactly
/// `|cover|` substitutions. Every chosen subset must be the first cover of
/// some element, which holds for all inclusion-minimal covers.
pub fn map_cover_forward(inst: &GeneratedInstance, cover: &[usize]) -> Result<VertexSet> {
    let (x_size, sets) = inst.source_set_system()?;
    let s_count = sets.len();
    let copies = s_count + 1;
    let mut chosen = cover.to_vec();
    chosen.sort_unstable();
    chosen.dedup();
    if chosen.iter().any(|&i| i >= s_count) {
        return Err(Error::input("cover mentions a set index out of range"));
    }

    // First chosen subset covering each element.
    let mut first_cover: Vec<Option<usize>> = vec![None; x_size];
    for &i in &chosen {
        for &x in &sets[i] {
            if first_cover[x].is_none() {
                first_cover[x] = Some(i);
            }
        }
    }
    if let Some(x) = first_cover.iter().position(|c| c.is_none()) {
        return Err(Error::InvalidSolution(format!(
            "not a cover: element {} is uncovered",
            x + 1
        )));
    }

    // Position where each chosen subset first acts as the minimal cover.
    let mut drop_pos: Vec<Option<usize>> = vec![None; s_count];
    for &i in &chosen {
        drop_pos[i] = sets[i]
            .iter()
            .position(|&x| first_cover[x] == Some(i));
        if drop_pos[i].is_none() {
            return Err(Error::InvalidSolution(format!(
                "set {} is redundant in the cover (covers no element first); \
                 the mapping requires an inclusion-minimal cover",
                i + 1
            )));
        }
    }

    let mut set = VertexSet::empty(inst.graph.n());
    set.insert(0);
    for (g, role) in inst.certificate.vertex_roles.iter().enumerate() {
        match *role {
            Role::SubsetVertex { s } if chosen.contains(&s) => set.insert(g),
            Role::CopyVertex { s, pos, copy } if chosen.contains(&s) => {
                let x = sets[s][pos];
                if first_cover[x] == Some(s) && (copy != 1 || drop_pos[s] != Some(pos)) {
                    set.insert(g);
                }
            }
            _ => {}
        }
    }

    if set.len() != inst.motif.k() {
        return Err(Error::InvalidSolution(format!(
            "mapped solution has {} vertices but the motif has size {}",
            set.len(),
            inst.motif.k()
        )));
    }
    let subs = count_substitutions(&inst.graph, &inst.motif, &set)?;
    if subs != chosen.len() {
        return Err(Error::InvalidSolution(format!(
            "mapped solution needs {subs} substitutions, expected {}",
            chosen.len()
        )));
    }
    let _ = copies;
    Ok(set)
}

/// Backward mapping: the chosen subsets are the subset vertices present in
/// the solution. Requires fewer than `|S|+1` substitutions (otherwise the
/// full collection is already a cover of admissible size); verified to cover
/// the universe with at most `s` sets.
pub fn map_substitute_back(inst: &GeneratedInstance, set: &VertexSet) -> Result<Vec<usize>> {
    let (x_size, sets) = inst.source_set_system()?;
    let s_count = sets.len();
    let subs = count_substitutions(&inst.graph, &inst.motif, set)?;
    if subs > s_count {
        return Err(Error::InvalidSolution(format!(
            "{subs} substitutions reach |S|+1 = {}; the mapping degenerates to taking all sets",
            s_count + 1
        )));
    }
    let mut cover = Vec::new();
    for (g, role) in inst.certificate.vertex_roles.iter().enumerate() {
        if let Role::SubsetVertex { s } = *role {
            if set.contains(g) {
                cover.push(s);
            }
        }
    }
    let mut covered = vec![false; x_size];
    for &i in &cover {
        for &x in &sets[i] {
            covered[x] = true;
        }
    }
    if let Some(x) = covered.iter().position(|&c| !c) {
        return Err(Error::InvalidSolution(format!(
            "mapped sets leave element {} uncovered",
            x + 1
        )));
    }
    if cover.len() > subs {
        return Err(Error::InvalidSolution(format!(
            "mapped cover has {} sets, above the substitution count {subs}",
            cover.len()
        )));
    }
    Ok(cover)
}

// ---------------------------------------------------------------------------
// Exact cover by 3-sets -> module motif
// ---------------------------------------------------------------------------

/// Expand an exact-cover instance into a disjoint union of 3-vertex paths,
/// one per triple, each path laid out in ascending element order and colored
/// by the elements it covers. The motif is one of each element color.
pub fn x3c_to_module_motif(x_size: usize, triples: &[Vec<usize>]) -> Result<GeneratedInstance> {
    if x_size == 0 || !x_size.is_multiple_of(3) {
        return Err(Error::input(format!(
            "universe size {x_size} is not a positive multiple of 3"
        )));
    }
    if triples.is_empty() {
        return Err(Error::input("no triples given"));
    }
    let triples = validate_set_system(x_size, triples)?;
    if let Some(i) = triples.iter().position(|t| t.len() != 3) {
        return Err(Error::input(format!("set {} is not a 3-element set", i + 1)));
    }

    let mut universe = ColorUniverse::new();
    // Intern element colors up front so color ids equal element indices.
    for x in 0..x_size {
        universe.intern(&format!("c{}", x + 1));
    }
    let mut names: Vec<String> = Vec::new();
    let mut roles: Vec<Role> = Vec::new();
    let mut colors: Vec<usize> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (t, triple) in triples.iter().enumerate() {
        let base = names.len();
        for (j, &x) in triple.iter().enumerate() {
            names.push(format!("v{}_{}", t + 1, x + 1));
            roles.push(Role::ElementVertex { t, x });
            colors.push(x);
            if j > 0 {
                edges.push((base + j - 1, base + j));
            }
        }
    }
    let graph = VertexColoredGraph::from_parts(names, edges, Coloring::Simple(colors))?;
    assert_eq!(graph.n(), 3 * triples.len());

    let motif = ColorMultiset::from_counts((0..x_size).map(|c| (c, 1)));
    let certificate = Certificate {
        reduction: ReductionKind::X3cToModuleMotif,
        source: SourceInstance::SetSystem {
            universe: x_size,
            sets: triples.clone(),
        },
        vertex_roles: roles,
        edge_order: Vec::new(),
        motif: motif_pairs(&motif, &universe),
    };
    Ok(GeneratedInstance {
        graph,
        universe,
        motif,
        certificate,
    })
}

/// Rebuild a generated instance from its certificate and cross-check that
/// the certificate matches what the generator produces for its source.
pub fn regenerate(cert: &Certificate) -> Result<GeneratedInstance> {
    let inst = match (&cert.reduction, &cert.source) {
        (ReductionKind::MisToMaxMotif, SourceInstance::Graph { names, edges }) => {
            let coloring = Coloring::Simple(vec![0; names.len()]);
            let mut u = ColorUniverse::new();
            u.intern("x");
            let source = VertexColoredGraph::from_parts(names.clone(), edges.clone(), coloring)?;
            mis_to_max_motif(&source)?
        }
        (ReductionKind::SetCoverToMinSubstitute, SourceInstance::SetSystem { universe, sets }) => {
            set_cover_to_min_substitute(*universe, sets)?
        }
        (ReductionKind::X3cToModuleMotif, SourceInstance::SetSystem { universe, sets }) => {
            x3c_to_module_motif(*universe, sets)?
        }
        _ => {
            return Err(Error::input(
                "certificate reduction kind does not match its source instance",
            ))
        }
    };
    if inst.certificate != *cert {
        return Err(Error::input(
            "certificate does not match the instance regenerated from its source",
        ));
    }
    Ok(inst)
}
