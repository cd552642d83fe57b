#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "blockdet/exact_value.hpp"
#include "blockdet/graph.hpp"

namespace blockdet {

inline constexpr int kPermanentMaxN = 20;
inline constexpr int kCycleCoverMaxN = 10;

using IntMatrix = std::vector<std::vector<Weight>>;

/// Fraction-free (Bareiss) determinant with row pivoting. det of 0x0 is 1.
ExactValue det_exact(const IntMatrix& a);
ExactValue det_exact(const SignedDigraph& g);

/// Ryser's formula, subsets visited in Gray-code order so each step updates
/// the row sums by one column. Uses 128-bit accumulation when the magnitude
/// bound allows it and arbitrary precision otherwise. per of 0x0 is 1.
/// Throws PreconditionError when n > max_n.
ExactValue per_exact(const IntMatrix& a, int max_n = kPermanentMaxN);
ExactValue per_exact(const SignedDigraph& g, int max_n = kPermanentMaxN);

/// Vertex-disjoint directed cycles covering every vertex. A loop is a
/// 1-cycle and an undirected edge gives a 2-cycle.
struct CycleCover {
  std::vector<std::vector<Vertex>> cycles;  // each starts at its smallest vertex
  ExactValue weight;

  std::size_t cycle_count() const { return cycles.size(); }
};

/// Visits every cycle cover exactly once. Each cycle is grown from the
/// smallest uncovered vertex through larger uncovered vertices, in
/// ascending neighbour order. Throws PreconditionError when n > max_n.
void for_each_cycle_cover(const SignedDigraph& g,
                          const std::function<void(const CycleCover&)>& visit,
                          int max_n = kCycleCoverMaxN);

std::vector<CycleCover> enumerate_cycle_covers(const SignedDigraph& g,
                                               int max_n = kCycleCoverMaxN);

/// det(A) = (-1)^n * sum over covers L of (-1)^{c(L)} w(L).
ExactValue det_via_cycle_covers(const SignedDigraph& g, int max_n = kCycleCoverMaxN);

/// per(A) = sum over covers L of w(L).
ExactValue per_via_cycle_covers(const SignedDigraph& g, int max_n = kCycleCoverMaxN);

}  // namespace blockdet
