//! Exhaustive reference solvers, deliberately simple enough to be read as
//! specifications. Each one enforces an explicit budget instead of running
//! unbounded, and ties among optima are broken by lexicographic vertex-id
//! (or set-index) order so expected values in tests are unique.

use crate::error::{Error, Result};
use crate::graph::{ColorAssignment, ColorId, ColorMultiset, VertexColoredGraph};
use crate::mdtree::is_module;
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    /// Largest ground-set size a subset-enumeration oracle accepts.
    pub max_n: usize,
    /// Cap on enumerated candidate subsets.
    pub max_subsets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: 20,
            max_subsets: 1 << 20,
        }
    }
}

impl OracleBudget {
    pub fn with_max_n(max_n: usize) -> Self {
        OracleBudget {
            max_n,
            max_subsets: 1u64 << max_n.min(40),
        }
    }

    fn check(&self, n: usize, what: &str) -> Result<()> {
        if n > self.max_n {
            return Err(Error::Budget(format!(
                "{what} has {n} elements, budget allows {}",
                self.max_n
            )));
        }
        if n as u32 >= 63 || (1u64 << n) > self.max_subsets {
            return Err(Error::Budget(format!(
                "{what} needs 2^{n} candidates, budget allows {}",
                self.max_subsets
            )));
        }
        Ok(())
    }
}

fn mask_to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

fn mask_to_vec(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// All nonempty modules of the graph, sorted lexicographically by their
/// ascending vertex-id lists.
pub fn enumerate_modules(g: &VertexColoredGraph, budget: &OracleBudget) -> Result<Vec<VertexSet>> {
    let n = g.n();
    budget.check(n, "graph")?;
    let mut found = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let set = mask_to_set(n, mask);
        if is_module(g, &set) {
            found.push(set);
        }
    }
    let mut keyed: Vec<(Vec<usize>, VertexSet)> =
        found.into_iter().map(|s| (s.to_vec(), s)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, s)| s).collect())
}

/// Lexicographically smallest module whose color multiset equals `m`.
pub fn find_module_motif_brute(
    g: &VertexColoredGraph,
    m: &ColorMultiset,
    budget: &OracleBudget,
) -> Result<Option<VertexSet>> {
    let n = g.n();
    budget.check(n, "graph")?;
    let colors = g.simple_colors()?;
    let k = m.k();
    let mut best: Option<(Vec<usize>, VertexSet)> = None;
    for mask in 1u64..(1u64 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let set = mask_to_set(n, mask);
        let mut cm = ColorMultiset::new();
        for v in set.iter() {
            cm.add(colors[v], 1);
        }
        if cm != *m || !is_module(g, &set) {
            continue;
        }
        let key = set.to_vec();
        if best.as_ref().is_none_or(|(bk, _)| key < *bk) {
            best = Some((key, set));
        }
    }
    Ok(best.map(|(_, s)| s))
}

/// Lexicographically smallest k-subset that is a module and admits a
/// bijection onto `m` respecting per-vertex color sets, found by trying
/// every assignment. Together with its first feasible assignment.
pub fn find_list_colored_brute(
    g: &VertexColoredGraph,
    m: &ColorMultiset,
    budget: &OracleBudget,
) -> Result<Option<(VertexSet, ColorAssignment)>> {
    let n = g.n();
    budget.check(n, "graph")?;
    let k = m.k();
    let mut best: Option<(Vec<usize>, VertexSet, ColorAssignment)> = None;
    for mask in 1u64..(1u64 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let set = mask_to_set(n, mask);
        let key = set.to_vec();
        if best.as_ref().is_some_and(|(bk, _, _)| *bk < key) {
            continue;
        }
        if !is_module(g, &set) {
            continue;
        }
        let members: Vec<usize> = key.clone();
        let mut remaining = m.clone();
        let mut assignment = Vec::new();
        if assign_exhaustive(g, &members, 0, &mut remaining, &mut assignment) {
            best = Some((key, set, assignment));
        }
    }
    Ok(best.map(|(_, s, a)| (s, a)))
}

fn assign_exhaustive(
    g: &VertexColoredGraph,
    members: &[usize],
    i: usize,
    remaining: &mut ColorMultiset,
    assignment: &mut ColorAssignment,
) -> bool {
    if i == members.len() {
        return remaining.is_zero();
    }
    let v = members[i];
    for &c in g.color_set(v) {
        if remaining.occ(c) == 0 {
            continue;
        }
        remaining.sub(c, 1);
        assignment.push((v, c));
        if assign_exhaustive(g, members, i + 1, remaining, assignment) {
            return true;
        }
        assignment.pop();
        remaining.add(c, 1);
    }
    false
}

/// A maximum independent set, lexicographically smallest among the maxima.
/// Vertex colors are ignored.
pub fn max_independent_set_brute(
    g: &VertexColoredGraph,
    budget: &OracleBudget,
) -> Result<VertexSet> {
    let n = g.n();
    budget.check(n, "graph")?;
    let mut best: (usize, Vec<usize>, VertexSet) = (0, Vec::new(), VertexSet::empty(n));
    for mask in 0u64..(1u64 << n) {
        let members = mask_to_vec(n, mask);
        if members.len() < best.0 {
            continue;
        }
        let independent = members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
        if !independent {
            continue;
        }
        if members.len() > best.0 || members < best.1 {
            best = (members.len(), members.clone(), mask_to_set(n, mask));
        }
    }
    Ok(best.2)
}

/// Minimum-cardinality set cover, lexicographically smallest among minima.
/// Elements are `0..x_size`; returns indices into `sets`.
pub fn min_set_cover_brute(
    x_size: usize,
    sets: &[Vec<usize>],
    budget: &OracleBudget,
) -> Result<Vec<usize>> {
    budget.check(sets.len(), "set collection")?;
    let mut all = vec![false; x_size];
    for s in sets {
        for &x in s {
            if x >= x_size {
                return Err(Error::input(format!(
                    "element {} out of range (universe size {x_size})",
                    x + 1
                )));
            }
            all[x] = true;
        }
    }
    if let Some(x) = all.iter().position(|&c| !c) {
        return Err(Error::input(format!(
            "element {} is not covered by any set",
            x + 1
        )));
    }
    let t = sets.len();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for mask in 0u64..(1u64 << t) {
        let chosen = mask_to_vec(t, mask);
        if best.as_ref().is_some_and(|(sz, bl)| {
            chosen.len() > *sz || (chosen.len() == *sz && *bl <= chosen)
        }) {
            continue;
        }
        let mut covered = vec![false; x_size];
        for &i in &chosen {
            for &x in &sets[i] {
                covered[x] = true;
            }
        }
        if covered.iter().all(|&c| c) {
            best = Some((chosen.len(), chosen));
        }
    }
    Ok(best.expect("coverable systems always admit the full cover").1)
}

/// An exact cover by triples, lexicographically smallest if one exists.
/// Elements are `0..x_size` with `x_size` a multiple of three.
pub fn x3c_brute(
    x_size: usize,
    triples: &[Vec<usize>],
    budget: &OracleBudget,
) -> Result<Option<Vec<usize>>> {
    budget.check(triples.len(), "triple collection")?;
    if !x_size.is_multiple_of(3) {
        return Err(Error::input(format!(
            "universe size {x_size} is not a multiple of 3"
        )));
    }
    for (i, t) in triples.iter().enumerate() {
        let mut t2 = t.clone();
        t2.sort_unstable();
        t2.dedup();
        if t2.len() != 3 {
            return Err(Error::input(format!(
                "set {} is not a 3-element set",
                i + 1
            )));
        }
        if t2.iter().any(|&x| x >= x_size) {
            return Err(Error::input(format!(
                "set {} mentions an element outside the universe",
                i + 1
            )));
        }
    }
    let t = triples.len();
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u64..(1u64 << t) {
        let chosen = mask_to_vec(t, mask);
        if chosen.len() * 3 != x_size {
            continue;
        }
        let mut count = vec![0u32; x_size];
        for &i in &chosen {
            for &x in &triples[i] {
                count[x] += 1;
            }
        }
        if count.iter().all(|&c| c == 1) && best.as_ref().is_none_or(|b| chosen < *b) {
            best = Some(chosen);
        }
    }
    Ok(best)
}

/// Parse the plain-text set-system format: `#` comments and blank lines are
/// skipped, the first significant line is the universe size `|X|`, and every
/// following line is one set of space-separated 1-based element indices.
/// Elements are returned 0-based.
pub fn parse_set_system(text: &str) -> Result<(usize, Vec<Vec<usize>>)> {
    let mut x_size: Option<usize> = None;
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if x_size.is_none() {
            let n: usize = line.parse().map_err(|_| {
                Error::parse(lineno, format!("expected the universe size, got `{line}`"))
            })?;
            x_size = Some(n);
            continue;
        }
        let mut set = Vec::new();
        for token in line.split_whitespace() {
            let e: usize = token.parse().map_err(|_| {
                Error::parse(lineno, format!("invalid element index `{token}`"))
            })?;
            if e == 0 || e > x_size.unwrap() {
                return Err(Error::parse(
                    lineno,
                    format!("element {e} outside the universe 1..{}", x_size.unwrap()),
                ));
            }
            set.push(e - 1);
        }
        sets.push(set);
    }
    match x_size {
        Some(n) => Ok((n, sets)),
        None => Err(Error::input("set-system file is empty")),
    }
}

pub fn serialize_set_system(x_size: usize, sets: &[Vec<usize>]) -> String {
    let mut out = format!("{x_size}\n");
    for set in sets {
        let line: Vec<String> = set.iter().map(|&e| (e + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Number of substitutions needed to turn the colors of `set` into `m`:
/// `|M| - sum_c min(occ_M(c), occ_set(c))`. Requires `|set| = |M|` and a
/// connected induced subgraph.
pub fn count_substitutions(
    g: &VertexColoredGraph,
    m: &ColorMultiset,
    set: &VertexSet,
) -> Result<usize> {
    if set.len() != m.k() {
        return Err(Error::input(format!(
            "solution has {} vertices but the motif has size {}",
            set.len(),
            m.k()
        )));
    }
    if !g.is_connected_within(set) {
        return Err(Error::input(
            "solution does not induce a connected subgraph",
        ));
    }
    let cm = g.color_multiset_of(set)?;
    let support: Vec<ColorId> = m.support();
    let overlap: usize = support
        .iter()
        .map(|&c| m.occ(c).min(cm.occ(c)) as usize)
        .sum();
    Ok(m.k() - overlap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> VertexColoredGraph {
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        VertexColoredGraph::simple(n, &edges, vec![0; n]).unwrap()
    }

    #[test]
    fn modules_of_small_graphs() {
        let budget = OracleBudget::default();
        assert_eq!(enumerate_modules(&k(1), &budget).unwrap().len(), 1);
        assert_eq!(enumerate_modules(&k(4), &budget).unwrap().len(), 15);
        let p3 = VertexColoredGraph::simple(3, &[(0, 1), (1, 2)], vec![0; 3]).unwrap();
        let modules: Vec<Vec<usize>> = enumerate_modules(&p3, &budget)
            .unwrap()
            .iter()
            .map(|s| s.to_vec())
            .collect();
        assert_eq!(
            modules,
            vec![vec![0], vec![0, 1, 2], vec![0, 2], vec![1], vec![2]]
        );
    }

    #[test]
    fn budget_is_enforced() {
        let g = k(5);
        assert!(matches!(
            enumerate_modules(&g, &OracleBudget::with_max_n(3)),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn motif_brute_whole_graph_and_absent_color() {
        let budget = OracleBudget::default();
        let g = VertexColoredGraph::simple(3, &[(0, 1), (1, 2)], vec![0, 1, 0]).unwrap();
        let all = g.color_multiset_of(&g.full_vertex_set()).unwrap();
        let sol = find_module_motif_brute(&g, &all, &budget).unwrap().unwrap();
        assert_eq!(sol.len(), 3);
        let absent = ColorMultiset::from_counts([(7, 1)]);
        assert!(find_module_motif_brute(&g, &absent, &budget)
            .unwrap()
            .is_none());
    }

    #[test]
    fn mis_on_degenerate_graphs() {
        let budget = OracleBudget::default();
        let edgeless = VertexColoredGraph::simple(4, &[], vec![0; 4]).unwrap();
        assert_eq!(
            max_independent_set_brute(&edgeless, &budget).unwrap().len(),
            4
        );
        assert_eq!(max_independent_set_brute(&k(5), &budget).unwrap().len(), 1);
    }

    #[test]
    fn set_cover_examples() {
        let budget = OracleBudget::default();
        assert_eq!(
            min_set_cover_brute(3, &[vec![0, 1, 2]], &budget).unwrap(),
            vec![0]
        );
        assert_eq!(
            min_set_cover_brute(0, &[vec![]], &budget).unwrap(),
            Vec::<usize>::new()
        );
        assert!(min_set_cover_brute(3, &[vec![0, 1]], &budget).is_err());
    }

    #[test]
    fn x3c_examples() {
        let budget = OracleBudget::default();
        assert_eq!(
            x3c_brute(3, &[vec![0, 1, 2]], &budget).unwrap(),
            Some(vec![0])
        );
        // x1 in no triple.
        assert_eq!(
            x3c_brute(6, &[vec![1, 2, 3], vec![3, 4, 5]], &budget).unwrap(),
            None
        );
        assert!(x3c_brute(4, &[vec![0, 1, 2]], &budget).is_err());
        assert!(x3c_brute(6, &[vec![0, 1]], &budget).is_err());
    }

    #[test]
    fn substitution_counts() {
        let g = VertexColoredGraph::simple(3, &[(0, 1), (1, 2)], vec![0, 1, 2]).unwrap();
        let all = VertexSet::full(3);
        let exact = g.color_multiset_of(&all).unwrap();
        assert_eq!(count_substitutions(&g, &exact, &all).unwrap(), 0);
        let wrong = ColorMultiset::from_counts([(5, 3)]);
        assert_eq!(count_substitutions(&g, &wrong, &all).unwrap(), 3);
        let small = ColorMultiset::from_counts([(0, 1)]);
        assert!(count_substitutions(&g, &small, &all).is_err());
        let ends = VertexSet::from_iter(3, [0, 2]);
        let two = ColorMultiset::from_counts([(0, 1), (2, 1)]);
        assert!(count_substitutions(&g, &two, &ends).is_err());
    }

    #[test]
    fn set_system_roundtrip() {
        let text = "3\n1 2\n2 3\n2\n";
        let (x, sets) = parse_set_system(text).unwrap();
        assert_eq!(x, 3);
        assert_eq!(sets, vec![vec![0, 1], vec![1, 2], vec![1]]);
        assert_eq!(serialize_set_system(x, &sets), text);
        assert!(parse_set_system("").is_err());
        assert!(parse_set_system("3\n4\n").is_err());
        assert!(parse_set_system("x\n").is_err());
    }

    #[test]
    fn list_colored_brute_respects_lists() {
        use crate::graph::{parse_graph, ColorUniverse};
        let mut u = ColorUniverse::new();
        let g = parse_graph(
            "v a red|blue\nv b green\nv c blue\ne a b\ne b c\n",
            &mut u,
        )
        .unwrap();
        let m = ColorMultiset::from_counts([
            (u.lookup("red").unwrap(), 1),
            (u.lookup("blue").unwrap(), 1),
        ]);
        let (set, assignment) = find_list_colored_brute(&g, &m, &OracleBudget::default())
            .unwrap()
            .unwrap();
        assert_eq!(set.to_vec(), vec![0, 2]);
        assert_eq!(assignment.len(), 2);
        for &(v, c) in &assignment {
            assert!(g.color_set(v).contains(&c));
        }
    }
}
