#pragma once

// Shared fixtures and the brute-force permutation oracle used to derive
// expected values independently of the library's own algorithms.

#include <algorithm>
#include <numeric>
#include <vector>

#include "blockdet/exact_value.hpp"
#include "blockdet/graph.hpp"

namespace blockdet::testing {

// Leibniz / permutation expansion; feasible up to n = 8 or so.
struct BruteForce {
  ExactValue det = 0;
  ExactValue per = 0;
};

inline BruteForce brute_force(const std::vector<std::vector<Weight>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  BruteForce out;
  do {
    ExactValue term = 1;
    for (int i = 0; i < n && term != 0; ++i) term *= a[i][p[i]];
    if (term == 0) continue;
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    out.per += term;
    out.det += inversions % 2 ? ExactValue(-term) : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline BruteForce brute_force(const SignedDigraph& g) { return brute_force(g.adjacency()); }

// Undirected graph from an edge list, weight +1 unless given.
struct Edge {
  Vertex u, v;
  Weight w = 1;
};

inline SignedDigraph undirected(int n, std::initializer_list<Edge> edges) {
  std::vector<Arc> arcs;
  for (const auto& e : edges) {
    arcs.push_back({e.u, e.v, e.w});
    arcs.push_back({e.v, e.u, e.w});
  }
  return SignedDigraph(n, arcs);
}

// Two triangles sharing vertex 0.
inline SignedDigraph bowtie() {
  return undirected(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
}

inline SignedDigraph cycle_graph(int n, Weight closing = 1) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    const Weight w = i == n - 1 ? closing : 1;
    arcs.push_back({i, (i + 1) % n, w});
    arcs.push_back({(i + 1) % n, i, w});
  }
  return SignedDigraph(n, arcs);
}

inline SignedDigraph path_graph(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) {
    arcs.push_back({i, i + 1, 1});
    arcs.push_back({i + 1, i, 1});
  }
  return SignedDigraph(n, arcs);
}

inline SignedDigraph complete_graph(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) arcs.push_back({i, j, 1});
  return SignedDigraph(n, arcs);
}

// Vertices whose removal disconnects the graph, by brute force.
inline std::vector<Vertex> brute_cut_vertices(const SignedDigraph& g) {
  const std::size_t before = connected_components(g).size();
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    std::vector<Vertex> rest;
    for (Vertex u = 0; u < g.size(); ++u)
      if (u != v) rest.push_back(u);
    if (connected_components(induced_subgraph(g, rest).graph).size() > before) out.push_back(v);
  }
  return out;
}

}  // namespace blockdet::testing
