//! List-colored motif search: each vertex carries a set of admissible
//! colors and a solution is a module of size k together with a bijection
//! onto the motif that respects every vertex's list.
//!
//! Tree nodes of size exactly k are tested directly. A series or parallel
//! node larger than k is searched over unions of its children: children are
//! deduplicated by profile (the multiset of per-vertex admissible color
//! sets, restricted to the motif's support), identical profiles are capped
//! at k copies, and a DFS over profile counts generates candidate unions of
//! size exactly k. Feasibility of a candidate is decided by maximum
//! bipartite matching rather than by enumerating assignments.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{ColorId, ColorMultiset, VertexColoredGraph};
use crate::mdtree::{MdTree, NodeKind};
use crate::solver::MotifSolution;
use crate::vset::VertexSet;

/// A bijection from positions to colors such that each position receives a
/// color from its set and each color `c` is used exactly `occ_m(c)` times,
/// or `None` if no such bijection exists. Decided exactly by augmenting-path
/// matching with per-color capacities.
pub fn bijection_feasible(color_sets: &[Vec<ColorId>], m: &ColorMultiset) -> Option<Vec<ColorId>> {
    assert_eq!(
        color_sets.len(),
        m.k(),
        "vertex count must equal the motif size"
    );
    let support = m.support();
    let index_of: HashMap<ColorId, usize> = support
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();
    let cap: Vec<u32> = support.iter().map(|&c| m.occ(c)).collect();
    let adj: Vec<Vec<usize>> = color_sets
        .iter()
        .map(|set| set.iter().filter_map(|c| index_of.get(c).copied()).collect())
        .collect();

    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); support.len()];
    let mut assigned: Vec<Option<usize>> = vec![None; color_sets.len()];
    for v in 0..color_sets.len() {
        let mut visited = vec![false; support.len()];
        if !augment(v, &adj, &cap, &mut holders, &mut assigned, &mut visited) {
            return None;
        }
    }
    Some(assigned.into_iter().map(|a| support[a.unwrap()]).collect())
}

fn augment(
    v: usize,
    adj: &[Vec<usize>],
    cap: &[u32],
    holders: &mut Vec<Vec<usize>>,
    assigned: &mut Vec<Option<usize>>,
    visited: &mut [bool],
) -> bool {
    for &c in &adj[v] {
        if visited[c] {
            continue;
        }
        visited[c] = true;
        if (holders[c].len() as u32) < cap[c] {
            holders[c].push(v);
            assigned[v] = Some(c);
            return true;
        }
        for slot in 0..holders[c].len() {
            let occupant = holders[c][slot];
            if augment(occupant, adj, cap, holders, assigned, visited) {
                holders[c][slot] = v;
                assigned[v] = Some(c);
                return true;
            }
        }
    }
    false
}

/// Solve List-Colored Module Graph Motif: a module of size `k` with a
/// feasible bijection onto `m`, or `None`. `k` must equal `m.k()`. Simple
/// graphs are accepted too, with each color read as a singleton list.
pub fn solve_list_colored(
    g: &VertexColoredGraph,
    tree: &MdTree,
    m: &ColorMultiset,
    k: usize,
) -> Result<Option<MotifSolution>> {
    if m.k() == 0 {
        return Err(Error::input("motif is empty"));
    }
    if k != m.k() {
        return Err(Error::input(format!(
            "requested size {k} does not match the motif size {}",
            m.k()
        )));
    }
    let support_mask: HashMap<ColorId, ()> = m.support().into_iter().map(|c| (c, ())).collect();
    let effective = |v: usize| -> Vec<ColorId> {
        g.color_set(v)
            .iter()
            .copied()
            .filter(|c| support_mask.contains_key(c))
            .collect()
    };

    for idx in 0..tree.node_count() {
        let node = &tree.nodes[idx];
        let size = node.vertices.len();
        if size == k {
            let members = node.vertices.to_vec();
            let sets: Vec<Vec<ColorId>> = members.iter().map(|&v| effective(v)).collect();
            if sets.iter().all(|s| !s.is_empty()) {
                if let Some(colors) = bijection_feasible(&sets, m) {
                    return Ok(Some(MotifSolution {
                        vertices: node.vertices.clone(),
                        assignment: Some(members.into_iter().zip(colors).collect()),
                        node: idx,
                        node_kind: node.kind,
                    }));
                }
            }
        }
        if size <= k || !matches!(node.kind, NodeKind::Series | NodeKind::Parallel) {
            continue;
        }
        if let Some(sol) = search_child_unions(g, tree, m, k, idx, &effective)? {
            return Ok(Some(sol));
        }
    }
    Ok(None)
}

fn search_child_unions(
    g: &VertexColoredGraph,
    tree: &MdTree,
    m: &ColorMultiset,
    k: usize,
    node_idx: usize,
    effective: &impl Fn(usize) -> Vec<ColorId>,
) -> Result<Option<MotifSolution>> {
    let node = &tree.nodes[node_idx];

    // A child is usable only if it fits in the motif size and every one of
    // its vertices still has an admissible motif color.
    struct Group {
        profile: Vec<Vec<ColorId>>,
        members: Vec<usize>, // child node indices, traversal order
    }
    let mut groups: Vec<Group> = Vec::new();
    for &child in &node.children {
        let verts = &tree.nodes[child].vertices;
        if verts.len() > k {
            continue;
        }
        let mut profile: Vec<Vec<ColorId>> = verts.iter().map(effective).collect();
        if profile.iter().any(|s| s.is_empty()) {
            continue;
        }
        profile.sort();
        match groups.iter_mut().find(|gr| gr.profile == profile) {
            Some(gr) => gr.members.push(child),
            None => groups.push(Group {
                profile,
                members: vec![child],
            }),
        }
    }

    let sizes: Vec<usize> = groups.iter().map(|gr| gr.profile.len()).collect();
    let caps: Vec<usize> = groups
        .iter()
        .map(|gr| gr.members.len().min(k))
        .collect();
    let mut suffix_max = vec![0usize; groups.len() + 1];
    for i in (0..groups.len()).rev() {
        suffix_max[i] = suffix_max[i + 1] + caps[i] * sizes[i];
    }

    // DFS over per-profile counts, preferring more copies of earlier
    // children; candidate unions have size exactly k.
    let mut counts = vec![0usize; groups.len()];
    fn dfs(
        gi: usize,
        need: usize,
        counts: &mut Vec<usize>,
        caps: &[usize],
        sizes: &[usize],
        suffix_max: &[usize],
        check: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if need == 0 {
            for c in counts[gi..].iter_mut() {
                *c = 0;
            }
            return check(counts);
        }
        if gi == counts.len() || suffix_max[gi] < need {
            return false;
        }
        let top = caps[gi].min(need / sizes[gi]);
        for c in (0..=top).rev() {
            counts[gi] = c;
            if dfs(gi + 1, need - c * sizes[gi], counts, caps, sizes, suffix_max, check) {
                return true;
            }
        }
        counts[gi] = 0;
        false
    }

    let mut found: Option<MotifSolution> = None;
    let mut check = |counts: &[usize]| -> bool {
        let mut vertices = VertexSet::empty(g.n());
        for (gr, &c) in groups.iter().zip(counts) {
            for &child in gr.members.iter().take(c) {
                vertices.union_with(&tree.nodes[child].vertices);
            }
        }
        let members = vertices.to_vec();
        let sets: Vec<Vec<ColorId>> = members.iter().map(|&v| effective(v)).collect();
        if let Some(colors) = bijection_feasible(&sets, m) {
            found = Some(MotifSolution {
                vertices,
                assignment: Some(members.into_iter().zip(colors).collect()),
                node: node_idx,
                node_kind: node.kind,
            });
            true
        } else {
            false
        }
    };
    dfs(0, k, &mut counts, &caps, &sizes, &suffix_max, &mut check);
    Ok(found)
}
