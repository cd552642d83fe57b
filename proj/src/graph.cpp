#include "blockdet/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "blockdet/errors.hpp"

namespace blockdet {

namespace {

int sign_of(Weight w) { return w > 0 ? 1 : -1; }

void check_vertex(const SignedDigraph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.size()) {
    throw InvalidGraph(std::string(what) + ": vertex " + std::to_string(v) +
                       " outside 0.." + std::to_string(g.size() - 1));
  }
}

}  // namespace

SignedDigraph::SignedDigraph(int n, std::span<const Arc> arcs, bool allow_loops)
    : n_(n), allow_loops_(allow_loops) {
  if (n < 0) throw InvalidGraph("negative vertex count");
  for (const Arc& a : arcs) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      throw InvalidGraph("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                         ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a.weight == 0) {
      throw InvalidGraph("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                         ") has zero weight");
    }
    if (a.from == a.to && !allow_loops) {
      throw InvalidGraph("loop at vertex " + std::to_string(a.from) + " not permitted");
    }
    auto [it, inserted] = arcs_.emplace(std::pair{a.from, a.to}, a.weight);
    if (!inserted) {
      throw InvalidGraph("duplicate arc (" + std::to_string(a.from) + "," +
                         std::to_string(a.to) + ")");
    }
  }
}

Weight SignedDigraph::weight(Vertex u, Vertex v) const {
  auto it = arcs_.find({u, v});
  return it == arcs_.end() ? 0 : it->second;
}

bool SignedDigraph::has_any_loop() const {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [](const auto& kv) { return kv.first.first == kv.first.second; });
}

std::vector<Arc> SignedDigraph::arc_list() const {
  std::vector<Arc> out;
  out.reserve(arcs_.size());
  for (const auto& [key, w] : arcs_) out.push_back({key.first, key.second, w});
  return out;
}

std::vector<std::vector<Weight>> SignedDigraph::adjacency() const {
  std::vector<std::vector<Weight>> a(n_, std::vector<Weight>(n_, 0));
  for (const auto& [key, w] : arcs_) a[key.first][key.second] = w;
  return a;
}

std::vector<std::vector<Vertex>> SignedDigraph::support_neighbors() const {
  std::vector<std::set<Vertex>> sets(n_);
  for (const auto& [key, w] : arcs_) {
    if (key.first == key.second) continue;
    sets[key.first].insert(key.second);
    sets[key.second].insert(key.first);
  }
  std::vector<std::vector<Vertex>> out(n_);
  for (int v = 0; v < n_; ++v) out[v].assign(sets[v].begin(), sets[v].end());
  return out;
}

bool SignedDigraph::is_symmetric() const {
  for (const auto& [key, w] : arcs_) {
    if (key.first == key.second) continue;
    if (weight(key.second, key.first) != w) return false;
  }
  return true;
}

SignedDigraph build_graph(int n, std::span<const Arc> arcs, bool allow_loops) {
  return SignedDigraph(n, arcs, allow_loops);
}

SignedDigraph from_matrix(const std::vector<std::vector<Weight>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n) throw InvalidGraph("matrix is not square");
    for (int j = 0; j < n; ++j) {
      if (matrix[i][j] != 0) arcs.push_back({i, j, matrix[i][j]});
    }
  }
  return SignedDigraph(n, arcs, /*allow_loops=*/true);
}

SignedDigraph underlying(const SignedDigraph& g) {
  std::vector<Arc> arcs = g.arc_list();
  for (Arc& a : arcs) a.weight = a.weight < 0 ? -a.weight : a.weight;
  return SignedDigraph(g.size(), arcs, g.loops_permitted());
}

SignedDigraph transpose(const SignedDigraph& g) {
  std::vector<Arc> arcs = g.arc_list();
  for (Arc& a : arcs) std::swap(a.from, a.to);
  return SignedDigraph(g.size(), arcs, g.loops_permitted());
}

std::vector<std::vector<Vertex>> connected_components(const SignedDigraph& g) {
  const auto nbrs = g.support_neighbors();
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex w : nbrs[v]) {
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const SignedDigraph& g) { return connected_components(g).size() <= 1; }

BlockDecomposition block_decompose(const SignedDigraph& g) {
  const int n = g.size();
  BlockDecomposition d;
  if (n == 0) return d;
  if (!is_connected(g)) throw PreconditionError("block decomposition needs a connected graph");
  if (n == 1) {
    d.blocks.push_back({0});
    return d;
  }

  // Iterative Hopcroft-Tarjan on the undirected support.
  const auto nbrs = g.support_neighbors();
  std::vector<int> disc(n, -1), low(n, 0);
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::vector<std::pair<Vertex, Vertex>> edges;
  int clock = 0;

  disc[0] = low[0] = clock++;
  frames.push_back({0, -1, 0});
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.next < nbrs[f.v].size()) {
      Vertex w = nbrs[f.v][f.next++];
      if (disc[w] == -1) {
        edges.emplace_back(f.v, w);
        disc[w] = low[w] = clock++;
        frames.push_back({w, f.v, 0});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        edges.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const Vertex v = f.v;
    const Vertex p = f.parent;
    frames.pop_back();
    if (p < 0) continue;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      std::set<Vertex> block;
      while (true) {
        auto e = edges.back();
        edges.pop_back();
        block.insert(e.first);
        block.insert(e.second);
        if (e.first == p && e.second == v) break;
      }
      d.blocks.emplace_back(block.begin(), block.end());
    }
  }

  std::sort(d.blocks.begin(), d.blocks.end());
  std::vector<std::vector<std::size_t>> member(n);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    for (Vertex v : d.blocks[b]) member[v].push_back(b);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (member[v].size() >= 2) {
      d.cut_vertices.push_back(v);
      d.incidence.emplace(v, member[v]);
    }
  }
  return d;
}

SignedDigraph apply_switching(const SignedDigraph& g, const SwitchingSignature& s) {
  if (static_cast<int>(s.signs.size()) != g.size()) {
    throw PreconditionError("switching signature length does not match vertex count");
  }
  std::vector<Arc> arcs = g.arc_list();
  for (Arc& a : arcs) a.weight *= s.signs[a.from] * s.signs[a.to];
  return SignedDigraph(g.size(), arcs, g.loops_permitted());
}

BalanceResult is_balanced(const SignedDigraph& g) {
  if (!g.is_symmetric()) throw PreconditionError("balance test needs symmetric weights");
  const int n = g.size();
  const auto nbrs = g.support_neighbors();
  std::vector<int> sign(n, 0), parent(n, -1), depth(n, 0);

  for (Vertex root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : nbrs[v]) {
        if (sign[w] != 0) continue;
        sign[w] = sign[v] * sign_of(g.weight(v, w));
        parent[w] = v;
        depth[w] = depth[v] + 1;
        q.push(w);
      }
    }
  }

  BalanceResult result;
  for (const auto& [key, w] : g.arcs()) {
    auto [u, v] = key;
    if (u >= v) continue;
    if (sign[u] * sign[v] * sign_of(w) == 1) continue;
    // Tree path u -> lca -> v closed by the offending edge (v, u).
    std::vector<Vertex> up{u}, down{v};
    Vertex a = u, b = v;
    while (depth[a] > depth[b]) up.push_back(a = parent[a]);
    while (depth[b] > depth[a]) down.push_back(b = parent[b]);
    while (a != b) {
      up.push_back(a = parent[a]);
      down.push_back(b = parent[b]);
    }
    down.pop_back();  // lca already ends `up`
    result.unbalanced_cycle = std::move(up);
    result.unbalanced_cycle.insert(result.unbalanced_cycle.end(), down.rbegin(), down.rend());
    return result;
  }
  result.balanced = true;
  result.signature.signs = std::move(sign);
  return result;
}

InducedSubgraph induced_subgraph(const SignedDigraph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  for (Vertex v : keep) check_vertex(g, v, "induced_subgraph");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<int> relabel(g.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (const auto& [key, w] : g.arcs()) {
    int a = relabel[key.first], b = relabel[key.second];
    if (a >= 0 && b >= 0) arcs.push_back({a, b, w});
  }
  return {SignedDigraph(static_cast<int>(keep.size()), arcs, g.loops_permitted()),
          std::move(keep)};
}

int cycle_sign(const SignedDigraph& g, std::span<const Vertex> cycle) {
  if (cycle.empty()) throw PreconditionError("cycle_sign: empty cycle");
  int s = 1;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Vertex u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    check_vertex(g, u, "cycle_sign");
    Weight w = g.weight(u, v);
    if (w == 0) {
      throw PreconditionError("cycle_sign: (" + std::to_string(u) + "," + std::to_string(v) +
                              ") is not an arc");
    }
    s *= sign_of(w);
  }
  return s;
}

}  // namespace blockdet
