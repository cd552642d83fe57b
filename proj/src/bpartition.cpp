#include "blockdet/bpartition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "blockdet/errors.hpp"
#include "blockdet/oracles.hpp"

namespace blockdet {

namespace {

int vertex_total(const BlockDecomposition& d) {
  std::set<Vertex> all;
  for (const auto& b : d.blocks) all.insert(b.begin(), b.end());
  return static_cast<int>(all.size());
}

// Walks all cut-vertex -> block assignments. `owner[c]` is the position in
// d.incidence.at(cut_vertices[c]) of the block that keeps cut vertex c.
void for_each_assignment(const BlockDecomposition& d,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const std::size_t c = d.cut_vertices.size();
  std::vector<std::size_t> owner(c, 0);
  while (true) {
    visit(owner);
    std::size_t i = c;
    while (i > 0) {
      --i;
      if (++owner[i] < d.incidence.at(d.cut_vertices[i]).size()) break;
      owner[i] = 0;
      if (i == 0) return;
    }
    if (c == 0) return;
  }
}

BPartition partition_from(const BlockDecomposition& d, const std::vector<std::size_t>& owner) {
  std::map<Vertex, std::size_t> keeper;
  for (std::size_t c = 0; c < d.cut_vertices.size(); ++c) {
    const Vertex v = d.cut_vertices[c];
    keeper[v] = d.incidence.at(v)[owner[c]];
  }
  BPartition p;
  p.parts.resize(d.blocks.size());
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    for (Vertex v : d.blocks[b]) {
      auto it = keeper.find(v);
      if (it == keeper.end() || it->second == b) p.parts[b].push_back(v);
    }
  }
  return p;
}

void check_cut_loops(const SignedDigraph& g, const BlockDecomposition& d) {
  for (Vertex v : d.cut_vertices) {
    if (g.has_loop(v)) {
      throw PreconditionError("loop on cut vertex " + std::to_string(v) +
                              ": B-partition expansion does not apply");
    }
  }
}

template <typename BlockValue>
ExactValue sum_over_bpartitions(const SignedDigraph& g, const BlockDecomposition& d,
                                BlockValue&& value_of) {
  check_cut_loops(g, d);
  std::vector<std::map<std::vector<Vertex>, ExactValue>> memo(d.blocks.size());
  ExactValue total = 0;
  for_each_assignment(d, [&](const std::vector<std::size_t>& owner) {
    const BPartition p = partition_from(d, owner);
    ExactValue term = 1;
    for (std::size_t b = 0; b < p.parts.size() && term != 0; ++b) {
      auto it = memo[b].find(p.parts[b]);
      if (it == memo[b].end()) {
        const ExactValue v =
            p.parts[b].empty() ? ExactValue(1) : value_of(induced_subgraph(g, p.parts[b]).graph);
        it = memo[b].emplace(p.parts[b], v).first;
      }
      term *= it->second;
    }
    total += term;
  });
  return total;
}

std::vector<bool> membership(const SignedDigraph& g, std::span<const Vertex> h, Vertex v) {
  if (v < 0 || v >= g.size()) throw PreconditionError("split vertex out of range");
  std::vector<bool> in_h(g.size(), false);
  for (Vertex x : h) {
    if (x < 0 || x >= g.size()) throw PreconditionError("split set vertex out of range");
    in_h[x] = true;
  }
  if (!in_h[v]) throw PreconditionError("split set must contain the cut vertex");
  if (g.has_loop(v)) throw PreconditionError("split vertex carries a loop");
  const auto count_h = std::count(in_h.begin(), in_h.end(), true);
  if (count_h < 2 || count_h == g.size()) {
    throw PreconditionError("split set must leave both sides of the cut vertex nonempty");
  }
  for (const auto& [key, w] : g.arcs()) {
    auto [a, b] = key;
    if (a == v || b == v) continue;
    if (in_h[a] != in_h[b]) {
      throw PreconditionError("split set is not separable at vertex " + std::to_string(v) +
                              ": arc (" + std::to_string(a) + "," + std::to_string(b) +
                              ") crosses");
    }
  }
  return in_h;
}

template <typename Value>
ExactValue split_two_terms(const SignedDigraph& g, std::span<const Vertex> h, Vertex v,
                           Value&& value_of) {
  const std::vector<bool> in_h = membership(g, h, v);
  std::vector<Vertex> h_set, h_minus_v, rest, rest_plus_v;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (in_h[x]) {
      h_set.push_back(x);
      if (x != v) h_minus_v.push_back(x);
    } else {
      rest.push_back(x);
    }
    if (!in_h[x] || x == v) rest_plus_v.push_back(x);
  }
  auto val = [&](const std::vector<Vertex>& s) {
    return value_of(induced_subgraph(g, s).graph);
  };
  return val(h_set) * val(rest) + val(h_minus_v) * val(rest_plus_v);
}

ExactValue det_of(const SignedDigraph& x) { return det_exact(x); }
ExactValue per_of(const SignedDigraph& x) { return per_exact(x); }

void enumerate_bounded(const BlockDecomposition& d, int n, std::size_t i, int remaining,
                       AlphaTuple& cur, std::vector<AlphaTuple>& out) {
  const std::size_t k = d.blocks.size();
  if (i == k) {
    if (remaining == 0 && satisfies_alpha_conditions(d, cur)) out.push_back(cur);
    return;
  }
  int rest_cap = 0;
  for (std::size_t j = i + 1; j < k; ++j) rest_cap += static_cast<int>(d.blocks[j].size());
  const int hi = std::min(remaining, static_cast<int>(d.blocks[i].size()));
  for (int a = 0; a <= hi; ++a) {
    if (remaining - a > rest_cap) continue;
    cur[i] = a;
    enumerate_bounded(d, n, i + 1, remaining - a, cur, out);
  }
}

}  // namespace

std::size_t bpartition_count(const BlockDecomposition& d) {
  std::size_t count = 1;
  for (const auto& [v, blocks] : d.incidence) count *= blocks.size();
  return count;
}

void for_each_bpartition(const SignedDigraph& g, const BlockDecomposition& d,
                         const std::function<void(const BPartition&)>& visit) {
  check_cut_loops(g, d);
  for_each_assignment(d, [&](const std::vector<std::size_t>& owner) {
    visit(partition_from(d, owner));
  });
}

std::vector<BPartition> enumerate_bpartitions(const SignedDigraph& g,
                                              const BlockDecomposition& d) {
  std::vector<BPartition> out;
  for_each_bpartition(g, d, [&](const BPartition& p) { out.push_back(p); });
  return out;
}

ExactValue det_via_bpartitions(const SignedDigraph& g, const BlockDecomposition& d) {
  return sum_over_bpartitions(g, d, det_of);
}

ExactValue per_via_bpartitions(const SignedDigraph& g, const BlockDecomposition& d) {
  return sum_over_bpartitions(g, d, per_of);
}

ExactValue det_via_bpartitions(const SignedDigraph& g) {
  return det_via_bpartitions(g, block_decompose(g));
}

ExactValue per_via_bpartitions(const SignedDigraph& g) {
  return per_via_bpartitions(g, block_decompose(g));
}

ExactValue split_at_cut_vertex_det(const SignedDigraph& g, std::span<const Vertex> h, Vertex v) {
  return split_two_terms(g, h, v, det_of);
}

ExactValue split_at_cut_vertex_per(const SignedDigraph& g, std::span<const Vertex> h, Vertex v) {
  return split_two_terms(g, h, v, per_of);
}

std::vector<AlphaTuple> enumerate_alpha_tuples(const BlockDecomposition& d) {
  std::vector<AlphaTuple> out;
  for_each_assignment(d, [&](const std::vector<std::size_t>& owner) {
    const BPartition p = partition_from(d, owner);
    AlphaTuple alpha;
    alpha.reserve(p.parts.size());
    for (const auto& part : p.parts) alpha.push_back(static_cast<int>(part.size()));
    out.push_back(std::move(alpha));
  });
  return out;
}

bool satisfies_alpha_conditions(const BlockDecomposition& d, const AlphaTuple& alpha) {
  const std::size_t k = d.blocks.size();
  if (alpha.size() != k) return false;
  int sum = 0;
  for (int a : alpha) {
    if (a < 0) return false;
    sum += a;
  }
  if (sum != vertex_total(d)) return false;
  if (k >= 63) throw PreconditionError("too many blocks for the subset check");
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
    std::set<Vertex> covered;
    int lhs = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(s >> i & 1)) continue;
      lhs += alpha[i];
      covered.insert(d.blocks[i].begin(), d.blocks[i].end());
    }
    if (lhs > static_cast<int>(covered.size())) return false;
  }
  return true;
}

std::vector<AlphaTuple> enumerate_alpha_tuples_by_conditions(const BlockDecomposition& d) {
  std::vector<AlphaTuple> out;
  AlphaTuple cur(d.blocks.size(), 0);
  const int n = vertex_total(d);
  enumerate_bounded(d, n, 0, n, cur, out);
  return out;
}

}  // namespace blockdet
