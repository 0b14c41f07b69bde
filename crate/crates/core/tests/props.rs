//! Property tests tying the tree builder and solvers to the exhaustive
//! oracles, plus format round-trips and algebraic invariants.

use proptest::prelude::*;

use modmotif::corpus::{
    planted_motif, random_graph, random_list_colored, random_mixed, random_motif, rng_from_seed,
};
use modmotif::graph::{
    multiset_subset, parse_graph, serialize_graph, ColorMultiset, ColorUniverse,
    VertexColoredGraph,
};
use modmotif::mdtree::{decompose, is_module, modules_from_tree, validate_tree};
use modmotif::oracle::{enumerate_modules, find_module_motif_brute, OracleBudget};
use modmotif::solver::{dp_fill, solve_module_motif, solve_strong_only};
use modmotif::vset::VertexSet;

fn seeded_graph(seed: u64, n: usize, colors: usize) -> (VertexColoredGraph, ColorUniverse) {
    let mut rng = rng_from_seed(seed);
    let mut universe = ColorUniverse::new();
    let g = random_mixed(&mut rng, n, colors, &mut universe);
    (g, universe)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gm_roundtrip(seed in 0u64..5000, n in 1usize..25, colors in 1usize..5) {
        let (g, u) = seeded_graph(seed, n, colors);
        let text = serialize_graph(&g, &u);
        let mut u2 = ColorUniverse::new();
        let g2 = parse_graph(&text, &mut u2).unwrap();
        prop_assert_eq!(serialize_graph(&g2, &u2), text);
        prop_assert_eq!(g2.n(), g.n());
        prop_assert_eq!(g2.edges(), g.edges());
    }

    #[test]
    fn gm_roundtrip_list_colored(seed in 0u64..5000, n in 1usize..15) {
        let mut rng = rng_from_seed(seed);
        let mut u = ColorUniverse::new();
        let g = random_list_colored(&mut rng, n, 0.4, 4, &mut u);
        let text = serialize_graph(&g, &u);
        let mut u2 = ColorUniverse::new();
        let g2 = parse_graph(&text, &mut u2).unwrap();
        prop_assert_eq!(serialize_graph(&g2, &u2), text);
    }

    #[test]
    fn multiset_subset_is_a_partial_order(
        a in proptest::collection::vec(0u32..4, 0..6),
        b in proptest::collection::vec(0u32..4, 0..6),
        c in proptest::collection::vec(0u32..4, 0..6),
    ) {
        let ms = |v: &Vec<u32>| ColorMultiset::from_counts(
            v.iter().enumerate().map(|(i, &n)| (i, n)),
        );
        let (a, b, c) = (ms(&a), ms(&b), ms(&c));
        prop_assert!(multiset_subset(&a, &a));
        if multiset_subset(&a, &b) && multiset_subset(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if multiset_subset(&a, &b) && multiset_subset(&b, &c) {
            prop_assert!(multiset_subset(&a, &c));
        }
    }

    #[test]
    fn color_multiset_is_additive_over_disjoint_sets(
        seed in 0u64..5000, n in 2usize..20, split in 0usize..1000,
    ) {
        let (g, _) = seeded_graph(seed, n, 3);
        let mut a = VertexSet::empty(n);
        let mut b = VertexSet::empty(n);
        for v in 0..n {
            if (split >> (v % 10)) & 1 == 1 { a.insert(v) } else { b.insert(v) }
        }
        let mut sum = g.color_multiset_of(&a).unwrap();
        sum.add_assign(&g.color_multiset_of(&b).unwrap());
        prop_assert_eq!(sum, g.color_multiset_of(&g.full_vertex_set()).unwrap());
    }

    #[test]
    fn tree_invariants_hold(seed in 0u64..5000, n in 1usize..40, colors in 1usize..4) {
        let (g, _) = seeded_graph(seed, n, colors);
        let tree = decompose(&g).unwrap();
        prop_assert_eq!(validate_tree(&g, &tree), Vec::<String>::new());
    }

    /// Every module found by exhaustive search is a tree node or a union of
    /// children of one series/parallel node, and vice versa.
    #[test]
    fn tree_generates_exactly_the_modules(seed in 0u64..5000, n in 1usize..10) {
        let (g, _) = seeded_graph(seed, n, 3);
        let tree = decompose(&g).unwrap();
        let budget = OracleBudget::default();
        let from_oracle = enumerate_modules(&g, &budget).unwrap();
        let from_tree = modules_from_tree(&tree, n);
        let ol: Vec<Vec<usize>> = from_oracle.iter().map(|s| s.to_vec()).collect();
        let tl: Vec<Vec<usize>> = from_tree.iter().map(|s| s.to_vec()).collect();
        prop_assert_eq!(ol, tl);
    }

    /// Every union of at least two children of a series or parallel node is
    /// a module, exhaustively over nodes with at most 10 children.
    #[test]
    fn child_unions_of_degenerate_nodes_are_modules(seed in 0u64..3000, n in 2usize..30) {
        let (g, _) = seeded_graph(seed, n, 3);
        let tree = decompose(&g).unwrap();
        for node in &tree.nodes {
            if !matches!(
                node.kind,
                modmotif::mdtree::NodeKind::Series | modmotif::mdtree::NodeKind::Parallel
            ) {
                continue;
            }
            let t = node.children.len();
            if t > 10 {
                continue;
            }
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
                prop_assert!(is_module(&g, &union));
            }
        }
    }

    /// Overlapping modules are closed under intersection, union and
    /// symmetric difference.
    #[test]
    fn overlapping_modules_compose(seed in 0u64..2000, n in 2usize..9) {
        let (g, _) = seeded_graph(seed, n, 2);
        let budget = OracleBudget::default();
        let modules = enumerate_modules(&g, &budget).unwrap();
        for a in &modules {
            for b in &modules {
                let inter = a.intersection(b);
                if inter.is_empty() || a.is_subset_of(b) || b.is_subset_of(a) {
                    continue;
                }
                let union = a.union(b);
                let mut symdiff = union.clone();
                symdiff.subtract(&inter);
                prop_assert!(is_module(&g, &inter));
                prop_assert!(is_module(&g, &union));
                prop_assert!(is_module(&g, &symdiff));
            }
        }
    }

    /// The tree solver and the subset-enumeration oracle agree on presence,
    /// and returned solutions are modules with the exact color multiset.
    #[test]
    fn solver_matches_oracle(seed in 0u64..8000, n in 1usize..10, planted in proptest::bool::ANY) {
        let mut rng = rng_from_seed(seed);
        let mut u = ColorUniverse::new();
        let g = random_mixed(&mut rng, n, 3, &mut u);
        let m = if planted {
            planted_motif(&mut rng, &g)
        } else {
            random_motif(&mut rng, n, 3, 3, &mut u)
        };
        let tree = decompose(&g).unwrap();
        let budget = OracleBudget::default();
        let expected = find_module_motif_brute(&g, &m, &budget).unwrap();
        let got = solve_module_motif(&g, &tree, &m).unwrap();
        prop_assert_eq!(expected.is_some(), got.is_some());
        if let Some(sol) = got {
            prop_assert!(is_module(&g, &sol.vertices));
            prop_assert_eq!(g.color_multiset_of(&sol.vertices).unwrap(), m);
        }
    }

    /// Anything the strong-module scan finds, the general solver also finds.
    #[test]
    fn strong_solutions_are_solutions(seed in 0u64..4000, n in 1usize..12) {
        let mut rng = rng_from_seed(seed);
        let mut u = ColorUniverse::new();
        let g = random_mixed(&mut rng, n, 3, &mut u);
        let m = planted_motif(&mut rng, &g);
        let tree = decompose(&g).unwrap();
        if let Some(strong) = solve_strong_only(&g, &tree, &m).unwrap() {
            let general = solve_module_motif(&g, &tree, &m).unwrap().unwrap();
            prop_assert_eq!(
                g.color_multiset_of(&strong.vertices).unwrap(),
                g.color_multiset_of(&general.vertices).unwrap()
            );
        }
    }

    /// DP reachability equals brute-force enumeration of child subsets.
    #[test]
    fn dp_matches_subset_enumeration(
        children in proptest::collection::vec(
            proptest::collection::vec(0u32..3, 3), 0..13,
        ),
        target in proptest::collection::vec(1u32..4, 3),
    ) {
        let m = ColorMultiset::from_counts(target.iter().enumerate().map(|(i, &n)| (i, n)));
        let kids: Vec<ColorMultiset> = children
            .iter()
            .map(|v| ColorMultiset::from_counts(v.iter().enumerate().map(|(i, &n)| (i, n))))
            .filter(|c| c.is_subset_of(&m))
            .collect();
        let table = dp_fill(&kids, &m);
        let mut expected = std::collections::HashSet::new();
        for mask in 0u32..(1 << kids.len()) {
            let sum = ColorMultiset::sum(
                kids.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| c),
            );
            if sum.is_subset_of(&m) {
                expected.insert((0..3).map(|c| sum.occ(c)).collect::<Vec<_>>());
            }
        }
        // Reachable set equals the brute-force union-of-subsets set.
        prop_assert_eq!(table.len(), expected.len());
        for key in &expected {
            let km = ColorMultiset::from_counts(key.iter().enumerate().map(|(i, &n)| (i, n)));
            prop_assert!(table.is_reachable(&km));
            let witness = table.witness(&km).unwrap();
            let sum = ColorMultiset::sum(witness.iter().map(|&i| &kids[i]));
            prop_assert_eq!(sum, km);
        }
    }

    /// Same DP property over a support too wide to bit-pack, exercising the
    /// fallback representation.
    #[test]
    fn dp_wide_matches_subset_enumeration(
        children in proptest::collection::vec(
            proptest::collection::vec(0u32..2, 22), 0..8,
        ),
        extra in 1u32..3,
    ) {
        let m = ColorMultiset::from_counts((0..22).map(|c| (c, extra)));
        let kids: Vec<ColorMultiset> = children
            .iter()
            .map(|v| ColorMultiset::from_counts(v.iter().enumerate().map(|(i, &n)| (i, n))))
            .collect();
        let table = dp_fill(&kids, &m);
        let mut expected = std::collections::HashSet::new();
        for mask in 0u32..(1 << kids.len()) {
            let sum = ColorMultiset::sum(
                kids.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| c),
            );
            if sum.is_subset_of(&m) {
                expected.insert((0..22).map(|c| sum.occ(c)).collect::<Vec<_>>());
            }
        }
        prop_assert_eq!(table.len(), expected.len());
        for key in &expected {
            let km = ColorMultiset::from_counts(key.iter().enumerate().map(|(i, &n)| (i, n)));
            let witness = table.witness(&km).unwrap();
            let sum = ColorMultiset::sum(witness.iter().map(|&i| &kids[i]));
            prop_assert_eq!(sum, km);
        }
    }

    /// Matching-based bijection feasibility agrees with exhaustive
    /// assignment enumeration.
    #[test]
    fn bijection_matches_exhaustive(
        sets in proptest::collection::vec(
            proptest::collection::vec(0usize..4, 1..4), 1..7,
        ),
        counts in proptest::collection::vec(0u32..3, 4),
    ) {
        let total: u32 = counts.iter().sum();
        prop_assume!(total as usize == sets.len());
        let m = ColorMultiset::from_counts(counts.iter().enumerate().map(|(i, &n)| (i, n)));
        let sets: Vec<Vec<usize>> = sets
            .into_iter()
            .map(|mut s| { s.sort_unstable(); s.dedup(); s })
            .collect();
        let fast = modmotif::listcolor::bijection_feasible(&sets, &m);
        let slow = exhaustive_assignment(&sets, &m);
        prop_assert_eq!(fast.is_some(), slow);
        if let Some(assign) = fast {
            let used = ColorMultiset::from_counts(assign.iter().map(|&c| (c, 1)));
            prop_assert_eq!(used, m);
            for (v, &c) in assign.iter().enumerate() {
                prop_assert!(sets[v].contains(&c));
            }
        }
    }
}

fn exhaustive_assignment(sets: &[Vec<usize>], m: &ColorMultiset) -> bool {
    fn rec(sets: &[Vec<usize>], i: usize, remaining: &mut ColorMultiset) -> bool {
        if i == sets.len() {
            return remaining.is_zero();
        }
        for &c in &sets[i] {
            if remaining.occ(c) > 0 {
                remaining.sub(c, 1);
                if rec(sets, i + 1, remaining) {
                    remaining.add(c, 1);
                    return true;
                }
                remaining.add(c, 1);
            }
        }
        false
    }
    rec(sets, 0, &mut m.clone())
}

/// Node count stays below 2n for large random graphs of varied density.
#[test]
fn node_count_bound_at_scale() {
    let mut rng = rng_from_seed(42);
    for (n, p) in [(500, 0.5), (500, 0.05), (500, 0.95), (200, 0.3)] {
        let mut u = ColorUniverse::new();
        let g = random_graph(&mut rng, n, p, 3, &mut u);
        let tree = decompose(&g).unwrap();
        assert!(tree.node_count() < 2 * n, "n={n} p={p}");
    }
    // A deep cograph too.
    let mut u = ColorUniverse::new();
    let g = modmotif::corpus::random_cograph(&mut rng, 500, 3, &mut u);
    let tree = decompose(&g).unwrap();
    assert!(tree.node_count() < 1000);
    assert_eq!(validate_tree(&g, &tree), Vec::<String>::new());
}

/// A clique on n vertices has 2^n - 1 nonempty modules.
#[test]
fn clique_module_count() {
    let g = VertexColoredGraph::simple(
        4,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        vec![0; 4],
    )
    .unwrap();
    let modules = enumerate_modules(&g, &OracleBudget::default()).unwrap();
    assert_eq!(modules.len(), 15);
}
