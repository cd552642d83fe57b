#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "blockdet/exact_value.hpp"
#include "blockdet/graph.hpp"

namespace blockdet {

/// One B-partition: parts[i] is a subset of block i (possibly empty), the
/// parts are pairwise disjoint and cover every vertex.
struct BPartition {
  std::vector<std::vector<Vertex>> parts;
};

/// (|parts[0]|, ..., |parts[k-1]|) of some B-partition.
using AlphaTuple = std::vector<int>;

/// Product over cut vertices of the number of blocks containing them.
std::size_t bpartition_count(const BlockDecomposition& d);

/// Visits every B-partition once: non-cut vertices stay in their only block
/// and each cut vertex is handed to one of its blocks (odometer over cut
/// vertices in ascending order, last cut vertex fastest).
/// Throws PreconditionError if a cut vertex carries a loop.
void for_each_bpartition(const SignedDigraph& g, const BlockDecomposition& d,
                         const std::function<void(const BPartition&)>& visit);

std::vector<BPartition> enumerate_bpartitions(const SignedDigraph& g,
                                              const BlockDecomposition& d);

/// Sum over B-partitions of the product of block-part determinants
/// (permanents), with the null graph contributing 1. Part values are
/// memoized per (block, removed cut vertices).
ExactValue det_via_bpartitions(const SignedDigraph& g, const BlockDecomposition& d);
ExactValue per_via_bpartitions(const SignedDigraph& g, const BlockDecomposition& d);
ExactValue det_via_bpartitions(const SignedDigraph& g);
ExactValue per_via_bpartitions(const SignedDigraph& g);

/// det(G) = det(H) det(G\H) + det(H\v) det(G\(H\v)) for a vertex set H
/// containing v such that no arc joins H\v to G\H. Throws
/// PreconditionError if H is not separable at v or v has a loop.
ExactValue split_at_cut_vertex_det(const SignedDigraph& g, std::span<const Vertex> h, Vertex v);
ExactValue split_at_cut_vertex_per(const SignedDigraph& g, std::span<const Vertex> h, Vertex v);

/// Part-size tuples read off the B-partitions, in enumeration order.
std::vector<AlphaTuple> enumerate_alpha_tuples(const BlockDecomposition& d);

/// Direct check of the tuple conditions: entries non-negative, sum = n, and
/// for every nonempty block subset S the entries over S sum to at most the
/// number of vertices in the union of those blocks. Exponential in k.
bool satisfies_alpha_conditions(const BlockDecomposition& d, const AlphaTuple& alpha);

/// All tuples passing satisfies_alpha_conditions, lexicographic order.
/// Exponential; meant for cross-checking small inputs.
std::vector<AlphaTuple> enumerate_alpha_tuples_by_conditions(const BlockDecomposition& d);

}  // namespace blockdet
