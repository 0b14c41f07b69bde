//! Motif search over the decomposition tree.
//!
//! Any module is either a tree node or a union of children of one series or
//! parallel node, so the search visits nodes in traversal order, first
//! testing the node's own color multiset and then, at series/parallel nodes,
//! running a subset-sum style dynamic program over the children whose color
//! multisets fit inside the motif. Table keys are occurrence vectors
//! restricted to the motif's support and stored sparsely, so the table size
//! is bounded both by 2^k and by the product of (occ+1) over the motif's
//! colors — whichever is smaller.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{ColorAssignment, ColorId, ColorMultiset, VertexColoredGraph};
use crate::mdtree::{MdTree, NodeKind};
use crate::vset::VertexSet;

/// A found occurrence of the motif.
#[derive(Debug, Clone)]
pub struct MotifSolution {
    pub vertices: VertexSet,
    /// List-colored solutions carry the vertex-to-color bijection.
    pub assignment: Option<ColorAssignment>,
    /// Index of the tree node that produced the solution: the node itself
    /// for an exact node match, or the series/parallel node whose children
    /// were combined.
    pub node: usize,
    pub node_kind: NodeKind,
}

/// Reachability table of the children dynamic program: which sub-multisets
/// of the motif are exact sums of a sub-collection of the children. Each
/// reachable entry remembers the child that first completed it, which is
/// enough to walk a witness back to the empty multiset.
///
/// Keys are occurrence vectors restricted to the motif's support. When the
/// vector fits, it is bit-packed into a single word, each color getting a
/// field wide enough for its occurrence cap (plus guard bits, so adding a
/// child and range-checking every field stay single word operations);
/// otherwise the vector is kept as-is. Both representations are the same
/// sparse table, so the min(2^k, prod(occ+1)) size bound applies either way.
pub struct SubMotifTable {
    support: Vec<ColorId>,
    child_keys: Vec<Vec<u16>>,
    repr: Repr,
}

enum Repr {
    /// Sorted by packed key; filled by per-child merges so the hot loop is
    /// sequential rather than hash probing.
    Packed {
        shifts: Vec<u32>,
        entries: Vec<(u64, Option<u32>)>,
    },
    Wide {
        entries: HashMap<Vec<u16>, Option<u32>>,
    },
}

fn project(m: &ColorMultiset, support: &[ColorId]) -> Vec<u16> {
    support.iter().map(|&c| m.occ(c) as u16).collect()
}

/// Per-color field layout for the packed representation: bit offsets, or
/// `None` if the vector needs more than one word.
fn field_shifts(caps: &[u16]) -> Option<Vec<u32>> {
    let mut shifts = Vec::with_capacity(caps.len());
    let mut total = 0u32;
    for &cap in caps {
        shifts.push(total);
        let bits = 16 - cap.leading_zeros() + 2; // value bits plus guard room
        total += bits;
        if total > 64 {
            return None;
        }
    }
    Some(shifts)
}

fn pack(key: &[u16], shifts: &[u32]) -> u64 {
    key.iter()
        .zip(shifts)
        .map(|(&v, &s)| (v as u64) << s)
        .sum()
}

impl SubMotifTable {
    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Packed { entries, .. } => entries.len(),
            Repr::Wide { entries, .. } => entries.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lookup(&self, key: &[u16]) -> Option<Option<u32>> {
        match &self.repr {
            Repr::Packed { shifts, entries } => {
                let packed = pack(key, shifts);
                entries
                    .binary_search_by_key(&packed, |&(k, _)| k)
                    .ok()
                    .map(|i| entries[i].1)
            }
            Repr::Wide { entries } => entries.get(key).copied(),
        }
    }

    pub fn is_reachable(&self, m: &ColorMultiset) -> bool {
        self.lookup(&project(m, &self.support)).is_some()
    }

    /// Indices (ascending) of a sub-collection of the children summing
    /// exactly to `m`, if `m` is reachable. The reconstructed witness is
    /// re-summed and checked against the query.
    pub fn witness(&self, m: &ColorMultiset) -> Option<Vec<usize>> {
        let target = project(m, &self.support);
        let mut cur = self.lookup(&target)?;
        let mut key = target.clone();
        let mut picked = Vec::new();
        while let Some(child) = cur {
            picked.push(child as usize);
            for (slot, &c) in key.iter_mut().zip(&self.child_keys[child as usize]) {
                *slot -= c;
            }
            cur = self.lookup(&key).expect("witness chain is closed");
        }
        picked.reverse();
        let mut sum = vec![0u16; self.support.len()];
        for &i in &picked {
            for (slot, &c) in sum.iter_mut().zip(&self.child_keys[i]) {
                *slot += c;
            }
        }
        assert_eq!(sum, target, "witness does not sum to its key");
        Some(picked)
    }
}

/// Fill the reachability table for the given children. Every child multiset
/// must already be a sub-multiset of `m` (the caller prunes).
pub fn dp_fill(children: &[ColorMultiset], m: &ColorMultiset) -> SubMotifTable {
    for (i, c) in children.iter().enumerate() {
        assert!(
            c.is_subset_of(m),
            "child {i} is not a sub-multiset of the motif"
        );
    }
    let k = m.k();
    assert!(k < u16::MAX as usize, "motif too large");
    let support = m.support();
    let target = project(m, &support);
    let child_keys: Vec<Vec<u16>> = children.iter().map(|c| project(c, &support)).collect();

    let repr = match field_shifts(&target) {
        Some(shifts) => {
            // One guard bit per field absorbs the transient sum (at most
            // twice the cap) and one more keeps the range check borrow-free:
            // every field of (target | high) - sum holds its guard bit iff
            // the field stayed within the cap.
            let high: u64 = shifts
                .iter()
                .zip(&target)
                .map(|(&s, &cap)| 1u64 << (s + 16 - cap.leading_zeros() + 1))
                .sum();
            let check = pack(&target, &shifts) | high;
            let mut entries: Vec<(u64, Option<u32>)> = vec![(0, None)];
            let mut merged: Vec<(u64, Option<u32>)> = Vec::new();
            for (i, ck) in child_keys.iter().enumerate() {
                let add = pack(ck, &shifts);
                // Merge the table with its own shift by this child's
                // multiset; existing entries win, so the first witness for
                // every state is kept.
                merged.clear();
                merged.reserve(entries.len() * 2);
                let fits = |s: u64| check.wrapping_sub(s + add) & high == high;
                let (mut a, mut b) = (0usize, 0usize);
                loop {
                    while b < entries.len() && !fits(entries[b].0) {
                        b += 1;
                    }
                    match (a < entries.len(), b < entries.len()) {
                        (false, false) => break,
                        (true, false) => {
                            merged.extend_from_slice(&entries[a..]);
                            break;
                        }
                        (false, true) => {
                            merged.push((entries[b].0 + add, Some(i as u32)));
                            b += 1;
                        }
                        (true, true) => {
                            let ca = entries[a].0;
                            let cb = entries[b].0 + add;
                            if ca <= cb {
                                merged.push(entries[a]);
                                a += 1;
                                if ca == cb {
                                    b += 1;
                                }
                            } else {
                                merged.push((cb, Some(i as u32)));
                                b += 1;
                            }
                        }
                    }
                }
                std::mem::swap(&mut entries, &mut merged);
            }
            Repr::Packed { shifts, entries }
        }
        None => {
            let width = support.len();
            let zero = vec![0u16; width];
            let mut entries: HashMap<Vec<u16>, Option<u32>> = HashMap::new();
            entries.insert(zero.clone(), None);
            let mut reachable: Vec<Vec<u16>> = vec![zero];
            let mut scratch = vec![0u16; width];
            for (i, ck) in child_keys.iter().enumerate() {
                let frontier = reachable.len();
                for j in 0..frontier {
                    let mut fits = true;
                    for s in 0..width {
                        let v = reachable[j][s] + ck[s];
                        if v > target[s] {
                            fits = false;
                            break;
                        }
                        scratch[s] = v;
                    }
                    if fits && !entries.contains_key(&scratch[..]) {
                        entries.insert(scratch.clone(), Some(i as u32));
                        reachable.push(scratch.clone());
                    }
                }
            }
            Repr::Wide { entries }
        }
    };

    let table = SubMotifTable {
        support,
        child_keys,
        repr,
    };
    let mut bound = m.sub_multiset_count();
    if k < 127 {
        bound = bound.min(1u128 << k);
    }
    assert!(
        table.len() as u128 <= bound,
        "table size {} exceeds bound {bound}",
        table.len()
    );
    table
}

/// Color multiset of every tree node, indexed like `tree.nodes`. Computed
/// bottom-up; valid because node indices are a pre-order.
pub fn node_color_multisets(
    g: &VertexColoredGraph,
    tree: &MdTree,
) -> Result<Vec<ColorMultiset>> {
    let colors = g.simple_colors()?;
    let mut out = vec![ColorMultiset::new(); tree.node_count()];
    for idx in (0..tree.node_count()).rev() {
        let node = &tree.nodes[idx];
        if node.children.is_empty() {
            let v = node.vertices.min().expect("leaf is nonempty");
            out[idx] = ColorMultiset::singleton(colors[v]);
        } else {
            out[idx] = ColorMultiset::sum(node.children.iter().map(|&c| &out[c]));
        }
    }
    Ok(out)
}

fn node_solution(tree: &MdTree, idx: usize) -> MotifSolution {
    MotifSolution {
        vertices: tree.nodes[idx].vertices.clone(),
        assignment: None,
        node: idx,
        node_kind: tree.nodes[idx].kind,
    }
}

/// Scan for a strong module whose colors equal the motif: the first tree
/// node in traversal order that matches, if any.
pub fn solve_strong_only(
    g: &VertexColoredGraph,
    tree: &MdTree,
    m: &ColorMultiset,
) -> Result<Option<MotifSolution>> {
    if m.k() == 0 {
        return Err(Error::input("motif is empty"));
    }
    let node_colors = node_color_multisets(g, tree)?;
    for (idx, colors) in node_colors.iter().enumerate() {
        if colors == m {
            return Ok(Some(node_solution(tree, idx)));
        }
    }
    Ok(None)
}

/// Find a module whose color multiset equals the motif, or `None` if no such
/// module exists. Deterministic: the first solution in traversal order wins,
/// with exactly-matching children accepted before the children DP runs.
pub fn solve_module_motif(
    g: &VertexColoredGraph,
    tree: &MdTree,
    m: &ColorMultiset,
) -> Result<Option<MotifSolution>> {
    if m.k() == 0 {
        return Err(Error::input("motif is empty"));
    }
    let node_colors = node_color_multisets(g, tree)?;
    for idx in 0..tree.node_count() {
        let node = &tree.nodes[idx];
        if node_colors[idx] == *m {
            return Ok(Some(node_solution(tree, idx)));
        }
        if !matches!(node.kind, NodeKind::Series | NodeKind::Parallel) {
            continue;
        }
        let pruned: Vec<usize> = node
            .children
            .iter()
            .copied()
            .filter(|&c| node_colors[c].is_subset_of(m))
            .collect();
        if let Some(&c) = pruned.iter().find(|&&c| node_colors[c] == *m) {
            return Ok(Some(node_solution(tree, c)));
        }
        if pruned.len() < 2 {
            continue;
        }
        let child_ms: Vec<ColorMultiset> =
            pruned.iter().map(|&c| node_colors[c].clone()).collect();
        let table = dp_fill(&child_ms, m);
        if let Some(indices) = table.witness(m) {
            let mut vertices = VertexSet::empty(g.n());
            for i in indices {
                vertices.union_with(&tree.nodes[pruned[i]].vertices);
            }
            return Ok(Some(MotifSolution {
                vertices,
                assignment: None,
                node: idx,
                node_kind: node.kind,
            }));
        }
    }
    Ok(None)
}

/// Enumerate all distinct solution vertex sets, capped at `cap`. Order:
/// traversal order of the generating node; within a series/parallel node,
/// exact node matches first, then unions in a take-before-skip DFS over the
/// pruned children.
pub fn enumerate_module_motifs(
    g: &VertexColoredGraph,
    tree: &MdTree,
    m: &ColorMultiset,
    cap: usize,
) -> Result<Vec<MotifSolution>> {
    if m.k() == 0 {
        return Err(Error::input("motif is empty"));
    }
    let node_colors = node_color_multisets(g, tree)?;
    let mut out: Vec<MotifSolution> = Vec::new();
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    let push = |out: &mut Vec<MotifSolution>,
                seen: &mut HashMap<Vec<usize>, ()>,
                sol: MotifSolution| {
        if out.len() < cap && seen.insert(sol.vertices.to_vec(), ()).is_none() {
            out.push(sol);
        }
    };

    for idx in 0..tree.node_count() {
        if out.len() >= cap {
            break;
        }
        let node = &tree.nodes[idx];
        if node_colors[idx] == *m {
            push(&mut out, &mut seen, node_solution(tree, idx));
        }
        if !matches!(node.kind, NodeKind::Series | NodeKind::Parallel) {
            continue;
        }
        let pruned: Vec<usize> = node
            .children
            .iter()
            .copied()
            .filter(|&c| node_colors[c].is_subset_of(m))
            .collect();
        if pruned.len() < 2 {
            continue;
        }
        let child_ms: Vec<ColorMultiset> =
            pruned.iter().map(|&c| node_colors[c].clone()).collect();
        // Suffix sums let the DFS stop as soon as the remaining children
        // cannot supply the colors still missing.
        let mut suffix = vec![ColorMultiset::new(); child_ms.len() + 1];
        for i in (0..child_ms.len()).rev() {
            let mut s = suffix[i + 1].clone();
            s.add_assign(&child_ms[i]);
            suffix[i] = s;
        }
        let mut chosen: Vec<usize> = Vec::new();
        let mut current = ColorMultiset::new();
        union_dfs(
            0,
            &mut chosen,
            &mut current,
            &child_ms,
            &suffix,
            m,
            &mut |sub| {
                let mut vertices = VertexSet::empty(g.n());
                for &i in sub {
                    vertices.union_with(&tree.nodes[pruned[i]].vertices);
                }
                push(
                    &mut out,
                    &mut seen,
                    MotifSolution {
                        vertices,
                        assignment: None,
                        node: idx,
                        node_kind: node.kind,
                    },
                );
                out.len() >= cap
            },
        );
    }
    Ok(out)
}

/// Enumerate sub-collections of at least two children summing exactly to
/// `m`, take-branch first. `emit` returns true to stop early.
fn union_dfs(
    i: usize,
    chosen: &mut Vec<usize>,
    current: &mut ColorMultiset,
    children: &[ColorMultiset],
    suffix: &[ColorMultiset],
    m: &ColorMultiset,
    emit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if *current == *m {
        return chosen.len() >= 2 && emit(chosen);
    }
    if i == children.len() {
        return false;
    }
    // Can the rest still supply what is missing?
    let feasible = m
        .support()
        .iter()
        .all(|&c| m.occ(c) <= current.occ(c) + suffix[i].occ(c));
    if !feasible {
        return false;
    }
    let mut with_child = current.clone();
    with_child.add_assign(&children[i]);
    if with_child.is_subset_of(m) {
        chosen.push(i);
        let stop = {
            let mut cur = with_child;
            union_dfs(i + 1, chosen, &mut cur, children, suffix, m, emit)
        };
        chosen.pop();
        if stop {
            return true;
        }
    }
    union_dfs(i + 1, chosen, current, children, suffix, m, emit)
}
