//! Seeded random instance generation for the test suites, the benchmark
//! harness and the `gen corpus` command. Everything is driven by a ChaCha
//! stream cipher RNG, so a fixed seed reproduces instances byte for byte.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{
    serialize_graph, serialize_motif, ColorMultiset, ColorUniverse, Coloring, VertexColoredGraph,
};
use crate::mdtree::{decompose, NodeKind};
use crate::solver::node_color_multisets;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn palette(universe: &mut ColorUniverse, colors: usize) -> Vec<usize> {
    (0..colors.max(1))
        .map(|c| universe.intern(&format!("c{c}")))
        .collect()
}

fn assemble(
    n: usize,
    edges: Vec<(usize, usize)>,
    colors: Vec<usize>,
) -> VertexColoredGraph {
    let names = (0..n).map(|i| format!("v{i}")).collect();
    VertexColoredGraph::from_parts(names, edges, Coloring::Simple(colors))
        .expect("generated graphs are well formed")
}

/// Erdos-Renyi graph with uniformly random vertex colors.
pub fn random_graph(
    rng: &mut ChaCha8Rng,
    n: usize,
    p: f64,
    colors: usize,
    universe: &mut ColorUniverse,
) -> VertexColoredGraph {
    let pal = palette(universe, colors);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let coloring = (0..n).map(|_| pal[rng.gen_range(0..pal.len())]).collect();
    assemble(n, edges, coloring)
}

/// Random cograph: repeatedly split the vertex range and either join or
/// disjoint-union the parts. Produces deep series/parallel trees.
pub fn random_cograph(
    rng: &mut ChaCha8Rng,
    n: usize,
    colors: usize,
    universe: &mut ColorUniverse,
) -> VertexColoredGraph {
    let pal = palette(universe, colors);
    let mut edges = Vec::new();
    let ids: Vec<usize> = (0..n).collect();
    let join = rng.gen_bool(0.5);
    cograph_rec(rng, &ids, join, &mut edges);
    let coloring = (0..n).map(|_| pal[rng.gen_range(0..pal.len())]).collect();
    assemble(n, edges, coloring)
}

fn cograph_rec(rng: &mut ChaCha8Rng, ids: &[usize], join: bool, edges: &mut Vec<(usize, usize)>) {
    if ids.len() <= 1 {
        return;
    }
    let groups = rng.gen_range(2..=ids.len().min(4));
    let mut cut_points: Vec<usize> = (1..ids.len()).collect();
    // Choose groups-1 distinct cut points.
    for i in 0..groups - 1 {
        let j = rng.gen_range(i..cut_points.len());
        cut_points.swap(i, j);
    }
    let mut cuts: Vec<usize> = cut_points[..groups - 1].to_vec();
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(ids.len());
    let parts: Vec<&[usize]> = cuts.windows(2).map(|w| &ids[w[0]..w[1]]).collect();
    if join {
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                for &u in *a {
                    for &v in *b {
                        edges.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
    }
    for part in parts {
        cograph_rec(rng, part, !join, edges);
    }
}

/// Random graph with planted module structure: a small random base graph
/// whose vertices are blown up into random graphs, base edges becoming
/// complete bipartite connections between the groups.
pub fn random_modular(
    rng: &mut ChaCha8Rng,
    n: usize,
    colors: usize,
    universe: &mut ColorUniverse,
) -> VertexColoredGraph {
    let pal = palette(universe, colors);
    let base_n = (n / 3).clamp(1, 8).min(n);
    // Distribute n vertices over base_n groups, each nonempty.
    let mut group_of = vec![0usize; n];
    for (v, g) in group_of.iter_mut().enumerate() {
        *g = if v < base_n {
            v
        } else {
            rng.gen_range(0..base_n)
        };
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let connected = if group_of[u] == group_of[v] {
                rng.gen_bool(0.5)
            } else {
                // decided per base pair below
                false
            };
            if connected {
                edges.push((u, v));
            }
        }
    }
    for a in 0..base_n {
        for b in a + 1..base_n {
            if rng.gen_bool(0.4) {
                for u in 0..n {
                    for v in 0..n {
                        if group_of[u] == a && group_of[v] == b {
                            edges.push((u.min(v), u.max(v)));
                        }
                    }
                }
            }
        }
    }
    let coloring = (0..n).map(|_| pal[rng.gen_range(0..pal.len())]).collect();
    assemble(n, edges, coloring)
}

/// Mixture generator exercising prime, series/parallel and planted-module
/// trees in roughly equal measure.
pub fn random_mixed(
    rng: &mut ChaCha8Rng,
    n: usize,
    colors: usize,
    universe: &mut ColorUniverse,
) -> VertexColoredGraph {
    match rng.gen_range(0..4) {
        0 => {
            let p = [0.05, 0.1, 0.3, 0.5, 0.7, 0.9][rng.gen_range(0..6)];
            random_graph(rng, n, p, colors, universe)
        }
        1 => random_cograph(rng, n, colors, universe),
        2 => random_modular(rng, n, colors, universe),
        _ => random_graph(rng, n, 0.5, colors, universe),
    }
}

/// A motif guaranteed to occur: the color multiset of a random tree node or
/// of a random union of children of a series/parallel node.
pub fn planted_motif(rng: &mut ChaCha8Rng, g: &VertexColoredGraph) -> ColorMultiset {
    let tree = decompose(g).expect("nonempty graph");
    let node_colors = node_color_multisets(g, &tree).expect("simple mode");
    let idx = rng.gen_range(0..tree.node_count());
    let node = &tree.nodes[idx];
    if matches!(node.kind, NodeKind::Series | NodeKind::Parallel) && rng.gen_bool(0.5) {
        let t = node.children.len();
        loop {
            let mask: u32 = rng.gen_range(0..(1u32 << t));
            if mask.count_ones() >= 2 {
                return ColorMultiset::sum(
                    node.children
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| mask >> j & 1 == 1)
                        .map(|(_, &c)| &node_colors[c]),
                );
            }
        }
    }
    node_colors[idx].clone()
}

/// A random motif over the palette, occurrences capped, not necessarily
/// realizable. Occasionally includes a color absent from the graph.
pub fn random_motif(
    rng: &mut ChaCha8Rng,
    k_max: usize,
    colors: usize,
    max_occ: u32,
    universe: &mut ColorUniverse,
) -> ColorMultiset {
    let pal = palette(universe, colors);
    let k = rng.gen_range(1..=k_max.max(1));
    let mut m = ColorMultiset::new();
    let mut total = 0;
    while total < k {
        let c = pal[rng.gen_range(0..pal.len())];
        if m.occ(c) < max_occ {
            m.add(c, 1);
            total += 1;
        } else if m.k() >= pal.len() * max_occ as usize {
            break;
        }
    }
    if rng.gen_bool(0.1) {
        m.add(universe.intern("absent"), 1);
    }
    m
}

/// Random list-colored graph: every vertex gets a nonempty random subset of
/// the palette.
pub fn random_list_colored(
    rng: &mut ChaCha8Rng,
    n: usize,
    p: f64,
    colors: usize,
    universe: &mut ColorUniverse,
) -> VertexColoredGraph {
    let pal = palette(universe, colors);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let sets: Vec<Vec<usize>> = (0..n)
        .map(|_| {
            let size = rng.gen_range(1..=pal.len());
            let mut s: Vec<usize> = pal.clone();
            for i in 0..size {
                let j = rng.gen_range(i..s.len());
                s.swap(i, j);
            }
            let mut s: Vec<usize> = s[..size].to_vec();
            s.sort_unstable();
            s
        })
        .collect();
    let names = (0..n).map(|i| format!("v{i}")).collect();
    VertexColoredGraph::from_parts(names, edges, Coloring::List(sets))
        .expect("generated graphs are well formed")
}

/// Random set system over `0..x_size` whose union covers the universe.
pub fn random_coverable_system(
    rng: &mut ChaCha8Rng,
    x_size: usize,
    n_sets: usize,
) -> Vec<Vec<usize>> {
    let mut sets: Vec<Vec<usize>> = (0..n_sets)
        .map(|_| {
            let mut s: Vec<usize> = (0..x_size).filter(|_| rng.gen_bool(0.4)).collect();
            if s.is_empty() && x_size > 0 {
                s.push(rng.gen_range(0..x_size));
            }
            s
        })
        .collect();
    // Patch any uncovered element into a random set.
    for x in 0..x_size {
        if !sets.iter().any(|s| s.contains(&x)) {
            let i = rng.gen_range(0..n_sets);
            sets[i].push(x);
            sets[i].sort_unstable();
        }
    }
    sets
}

/// Random collection of distinct 3-element subsets of `0..3q`.
pub fn random_triples(rng: &mut ChaCha8Rng, q: usize, n_sets: usize) -> Vec<Vec<usize>> {
    let x = 3 * q;
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut guard = 0;
    while out.len() < n_sets && guard < 1000 {
        guard += 1;
        let mut t = Vec::new();
        while t.len() < 3 {
            let e = rng.gen_range(0..x);
            if !t.contains(&e) {
                t.push(e);
            }
        }
        t.sort_unstable();
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// Stress instance for the colorful-motif solver: `filler` single-vertex
/// components over the first k-1 motif colors keep the root DP busy without
/// ever completing the motif, junk singletons pad the graph to `n` vertices,
/// and a (k+1)-clique colored with all k motif colors plus a duplicate
/// carries the only solution.
pub fn planted_colorful_instance(
    n: usize,
    k: usize,
    filler: usize,
) -> (VertexColoredGraph, ColorMultiset, ColorUniverse) {
    assert!(k >= 2 && n > filler + k);
    let mut universe = ColorUniverse::new();
    let motif_colors: Vec<usize> = (0..k)
        .map(|c| universe.intern(&format!("c{c}")))
        .collect();
    let junk = universe.intern("junk");

    let mut colors = Vec::new();
    let mut edges = Vec::new();
    for i in 0..filler {
        colors.push(motif_colors[i % (k - 1)]);
    }
    let base = colors.len();
    // The clique: one vertex per motif color plus a duplicate of color 0,
    // so its own multiset does not fit inside the motif.
    for c in 0..=k {
        colors.push(motif_colors[c % k]);
        for prev in 0..c {
            edges.push((base + prev, base + c));
        }
    }
    while colors.len() < n {
        colors.push(junk);
    }
    let motif = ColorMultiset::from_counts(motif_colors.iter().map(|&c| (c, 1)));
    (assemble(n, edges, colors), motif, universe)
}

/// Stress instance for the bounded-palette corollary: three colors, motif
/// occurrence `per_color` each, fillers one short of completing the motif at
/// the root, padding components whose multisets exceed the motif, and a
/// large clique carrying the solution.
pub fn planted_bounded_color_instance(
    n: usize,
    per_color: u32,
) -> (VertexColoredGraph, ColorMultiset, ColorUniverse) {
    let k = 3 * per_color as usize;
    let filler = 3 * (per_color as usize - 1);
    assert!(n >= filler + k + 1 + 21);
    let mut universe = ColorUniverse::new();
    let pal: Vec<usize> = (0..3).map(|c| universe.intern(&format!("c{c}"))).collect();

    let mut colors = Vec::new();
    let mut edges = Vec::new();
    for i in 0..filler {
        colors.push(pal[i % 3]);
    }
    // Solution clique: per_color of each color plus one extra of color 0.
    let base = colors.len();
    for i in 0..=k {
        colors.push(pal[i % 3]);
        for prev in 0..i {
            edges.push((base + prev, base + i));
        }
    }
    // Padding: cliques of 21 same-colored vertices; their multisets exceed
    // the motif so the root DP prunes them.
    while colors.len() + 21 <= n {
        let base = colors.len();
        for i in 0..21 {
            colors.push(pal[0]);
            for prev in 0..i {
                edges.push((base + prev, base + i));
            }
        }
    }
    while colors.len() < n {
        let base = colors.len();
        colors.push(pal[0]);
        if base > filler + k + 1 {
            edges.push((base - 1, base)); // extend the last padding clique arm
        }
    }
    let motif = ColorMultiset::from_counts(pal.iter().map(|&c| (c, per_color)));
    (assemble(colors.len(), edges, colors), motif, universe)
}

/// Write `count` (graph, motif) instance pairs under `dir`, half planted and
/// half unconstrained. Returns the file stems written, in order.
pub fn write_corpus(
    dir: &Path,
    seed: u64,
    count: usize,
    min_n: usize,
    max_n: usize,
    colors: usize,
) -> Result<Vec<String>> {
    std::fs::create_dir_all(dir)?;
    let mut rng = rng_from_seed(seed);
    let mut stems = Vec::new();
    for i in 0..count {
        let mut universe = ColorUniverse::new();
        let n = rng.gen_range(min_n..=max_n);
        let g = random_mixed(&mut rng, n, colors, &mut universe);
        let motif = if rng.gen_bool(0.5) {
            planted_motif(&mut rng, &g)
        } else {
            random_motif(&mut rng, n.min(8), colors, 3, &mut universe)
        };
        let stem = format!("{i:04}");
        std::fs::write(dir.join(format!("{stem}.gm")), serialize_graph(&g, &universe))?;
        std::fs::write(
            dir.join(format!("{stem}.motif")),
            serialize_motif(&motif, &universe),
        )?;
        stems.push(stem);
    }
    Ok(stems)
}
