//! Instance builders shared by the benchmark targets.

use modmotif::corpus::planted_colorful_instance;
use modmotif::graph::{ColorMultiset, ColorUniverse, VertexColoredGraph};

/// Planted colorful instance whose solver workload grows with n at fixed k:
/// a tenth of the vertices are motif-colored filler components feeding the
/// root DP, so doubling n roughly doubles the children dimension. Used for
/// the coarse check that doubling n at fixed k stays within the quadratic
/// envelope (at most ~4x).
pub fn scaling_instance(
    n: usize,
    k: usize,
) -> (VertexColoredGraph, ColorMultiset, ColorUniverse) {
    planted_colorful_instance(n, k, n / 10)
}
