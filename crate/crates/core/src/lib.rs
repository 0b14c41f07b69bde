//! Graph motif search under modularity instead of connectivity: a solution
//! is a module of the vertex-colored graph whose colors realize the motif
//! multiset exactly.
//!
//! The crate provides the core data types and text formats ([`graph`]), the
//! modular decomposition tree ([`mdtree`]), the decision/search solvers over
//! the tree ([`solver`], [`listcolor`]), exhaustive reference oracles used to
//! validate everything at small scale ([`oracle`]), gadget reductions from
//! classic hard problems with verifiable solution mappings ([`reduce`]), and
//! seeded random instance generation ([`corpus`]).

pub mod corpus;
pub mod error;
pub mod graph;
pub mod listcolor;
pub mod mdtree;
pub mod oracle;
pub mod reduce;
pub mod solver;
pub mod vset;

pub use error::{Error, Result};
pub use graph::{
    multiset_subset, parse_graph, parse_motif, serialize_graph, serialize_motif, ColorId,
    ColorMultiset, ColorUniverse, Coloring, VertexColoredGraph,
};
pub use listcolor::{bijection_feasible, solve_list_colored};
pub use mdtree::{classify, decompose, is_module, validate_tree, MdNode, MdTree, NodeKind};
pub use oracle::OracleBudget;
pub use solver::{
    dp_fill, enumerate_module_motifs, solve_module_motif, solve_strong_only, MotifSolution,
    SubMotifTable,
};
pub use vset::VertexSet;
