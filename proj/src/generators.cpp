#include "blockdet/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "blockdet/errors.hpp"

namespace blockdet {

namespace {

void add_edge(std::vector<Arc>& arcs, Vertex u, Vertex v, Weight w) {
  arcs.push_back({u, v, w});
  arcs.push_back({v, u, w});
}

// Local arcs of mK_n (sign +1) or the negative variant (sign -1): the
// directed cycle i -> i+1 carries `cycle_weight`, non-adjacent pairs get
// positive arcs both ways.
std::vector<Arc> mixed_complete_arcs(int n, Weight cycle_weight) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (j == (i + 1) % n) {
        arcs.push_back({i, j, cycle_weight});
      } else if (i != (j + 1) % n) {
        arcs.push_back({i, j, 1});
      }
    }
  }
  return arcs;
}

SignedDigraph mixed_star(const std::vector<int>& sizes, Weight cycle_weight) {
  std::vector<Arc> arcs;
  int next = 1;
  for (int n : sizes) {
    std::vector<Vertex> label(n);
    label[0] = 0;
    for (int i = 1; i < n; ++i) label[i] = next++;
    for (const Arc& a : mixed_complete_arcs(n, cycle_weight)) {
      arcs.push_back({label[a.from], label[a.to], a.weight});
    }
  }
  return SignedDigraph(next, arcs);
}

SignedDigraph shape_graph(const BlockTreeShape& shape) {
  const auto labels = shape_block_vertices(shape);
  std::vector<Arc> arcs;
  int n = 0;
  for (std::size_t b = 0; b < shape.blocks.size(); ++b) {
    const auto& blk = shape.blocks[b];
    const int neg = blk.neg_cliques * blk.clique_size;
    for (int i = 0; i < blk.size; ++i) {
      n = std::max(n, labels[b][i] + 1);
      for (int j = i + 1; j < blk.size; ++j) {
        const bool negative = j < neg && i / blk.clique_size == j / blk.clique_size;
        add_edge(arcs, labels[b][i], labels[b][j], negative ? -1 : 1);
      }
    }
  }
  return SignedDigraph(n, arcs);
}

// Appends `t` with its root joined to `anchor`, returns the next free label.
int attach_tree(std::vector<Arc>& arcs, const SignedTree& t, Vertex anchor, int offset) {
  for (const auto& e : t.edges) add_edge(arcs, offset + e.u, offset + e.v, e.sign);
  add_edge(arcs, anchor, offset, 1);
  return offset + t.size;
}

void add_cycle(std::vector<Arc>& arcs, int n, int delta) {
  for (int i = 0; i + 1 < n; ++i) add_edge(arcs, i, i + 1, 1);
  add_edge(arcs, n - 1, 0, delta);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Weight pick(std::mt19937_64& rng, std::span<const Weight> weights) {
  if (weights.empty()) throw PreconditionError("weight set is empty");
  std::uniform_int_distribution<std::size_t> d(0, weights.size() - 1);
  return weights[d(rng)];
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

std::vector<std::vector<Vertex>> shape_block_vertices(const BlockTreeShape& shape) {
  std::vector<std::vector<Vertex>> labels(shape.blocks.size());
  int next = 0;
  for (std::size_t b = 0; b < shape.blocks.size(); ++b) {
    const int size = shape.blocks[b].size;
    labels[b].resize(size);
    if (b == 0) {
      for (int i = 0; i < size; ++i) labels[b][i] = next++;
      continue;
    }
    for (int i = 0; i + 1 < size; ++i) labels[b][i] = next++;
    const auto& at = shape.attachments[b - 1];
    labels[b][size - 1] = labels[at.parent_block][at.parent_vertex];
  }
  return labels;
}

SignedDigraph gen(const FamilySpec& family) {
  validate(family);
  return std::visit(
      Overloaded{
          [](const CompleteK& x) {
            std::vector<Arc> arcs;
            for (int i = 0; i < x.n; ++i)
              for (int j = i + 1; j < x.n; ++j) add_edge(arcs, i, j, 1);
            return SignedDigraph(x.n, arcs);
          },
          [](const NegCliqueK& x) {
            BlockTreeShape s{{{x.n, x.m, x.r}}, {}};
            return shape_graph(s);
          },
          [](const SignedCycle& x) {
            std::vector<Arc> arcs;
            add_cycle(arcs, x.n, x.delta);
            return SignedDigraph(x.n, arcs);
          },
          [](const SignedPath& x) {
            std::vector<Arc> arcs;
            for (int i = 0; i + 1 < x.n; ++i) add_edge(arcs, i, i + 1, 1);
            return SignedDigraph(x.n, arcs);
          },
          [](const TreeFamily& x) {
            std::vector<Arc> arcs;
            for (const auto& e : x.tree.edges) add_edge(arcs, e.u, e.v, e.sign);
            return SignedDigraph(x.tree.size, arcs);
          },
          [](const BlockGraphK& x) { return shape_graph(x.shape); },
          [](const NegCliqueBlockGraph& x) { return shape_graph(x.shape); },
          [](const UnicyclicSingle& x) {
            std::vector<Arc> arcs;
            add_cycle(arcs, x.n, x.delta);
            int n = attach_tree(arcs, x.tree, 0, x.n);
            return SignedDigraph(n, arcs);
          },
          [](const UnicyclicMulti& x) {
            std::vector<Arc> arcs;
            add_cycle(arcs, x.n, x.delta);
            int n = x.n;
            for (const auto& t : x.trees) n = attach_tree(arcs, t, 0, n);
            return SignedDigraph(n, arcs);
          },
          [](const UnicyclicTwo& x) {
            std::vector<Arc> arcs;
            add_cycle(arcs, x.n, x.delta);
            int n = attach_tree(arcs, x.first, 0, x.n);
            n = attach_tree(arcs, x.second, x.distance, n);
            return SignedDigraph(n, arcs);
          },
          [](const MixedComplete& x) { return SignedDigraph(x.n, mixed_complete_arcs(x.n, 1)); },
          [](const MixedStar& x) { return mixed_star(x.sizes, 1); },
          [](const NegMixedComplete& x) {
            return SignedDigraph(x.n, mixed_complete_arcs(x.n, -1));
          },
          [](const NegMixedStar& x) { return mixed_star(x.sizes, -1); },
      },
      family);
}

SignedDigraph gen_random_block_graph(Seed seed, const RandomBlockGraphOptions& options) {
  if (options.n_max < 2) throw PreconditionError("random block graph needs n_max >= 2");
  std::mt19937_64 rng(seed);
  const int target = uniform(rng, 2, options.n_max);
  const int max_block = std::max(2, options.max_block);

  std::vector<std::pair<Vertex, Vertex>> edges;
  int n = 0;
  while (n < target) {
    // A block of size s adds s new vertices the first time, s - 1 afterwards.
    const int room = n == 0 ? target : target - n + 1;
    const int s = uniform(rng, 2, std::min(max_block, room));
    std::vector<Vertex> members;
    if (n > 0) members.push_back(uniform(rng, 0, n - 1));
    while (static_cast<int>(members.size()) < s) members.push_back(n++);
    const bool cycle = s >= 4 && uniform(rng, 0, 1) == 1;
    if (cycle) {
      for (int i = 0; i < s; ++i) edges.emplace_back(members[i], members[(i + 1) % s]);
    } else {
      for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) edges.emplace_back(members[i], members[j]);
    }
  }

  std::vector<Vertex> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);

  std::vector<Arc> arcs;
  for (auto [u, v] : edges) {
    const Vertex a = relabel[u], b = relabel[v];
    if (!options.directed) {
      add_edge(arcs, a, b, pick(rng, options.weights));
      continue;
    }
    switch (uniform(rng, 0, 2)) {
      case 0:
        arcs.push_back({a, b, pick(rng, options.weights)});
        break;
      case 1:
        arcs.push_back({b, a, pick(rng, options.weights)});
        break;
      default:
        arcs.push_back({a, b, pick(rng, options.weights)});
        arcs.push_back({b, a, pick(rng, options.weights)});
    }
  }
  return SignedDigraph(n, arcs);
}

SignedDigraph gen_random_block_graph(Seed seed, int n_max, std::span<const Weight> weights) {
  RandomBlockGraphOptions options;
  options.n_max = n_max;
  options.weights.assign(weights.begin(), weights.end());
  return gen_random_block_graph(seed, options);
}

SignedTree gen_random_signed_tree(Seed seed, int m) {
  if (m < 1) throw PreconditionError("random tree needs m >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> parents, signs;
  for (int i = 1; i < m; ++i) {
    parents.push_back(uniform(rng, 0, i - 1));
    signs.push_back(uniform(rng, 0, 1) ? 1 : -1);
  }
  return tree_from_parents(parents, signs);
}

SignedDigraph gen_random_digraph(Seed seed, int n, double arc_probability,
                                 std::span<const Weight> weights, bool allow_loops) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(arc_probability);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j && !allow_loops) continue;
      if (coin(rng)) arcs.push_back({i, j, pick(rng, weights)});
    }
  }
  return SignedDigraph(n, arcs, allow_loops);
}

SwitchingSignature gen_random_signature(Seed seed, int n) {
  std::mt19937_64 rng(seed);
  SwitchingSignature s;
  for (int i = 0; i < n; ++i) s.signs.push_back(uniform(rng, 0, 1) ? 1 : -1);
  return s;
}

std::vector<BlockTreeShape> enumerate_clique_tree_shapes(int max_n, int max_k) {
  std::vector<BlockTreeShape> out;
  BlockTreeShape shape;
  // cut[b][i]: local vertex i of block b already shared.
  std::vector<std::vector<bool>> cut;

  auto recurse = [&](auto&& self, int n) -> void {
    out.push_back(shape);
    if (static_cast<int>(shape.blocks.size()) == max_k) return;
    const std::size_t k = shape.blocks.size();
    for (int s = 2; n + s - 1 <= max_n; ++s) {
      std::vector<BlockAttachment> options;
      for (std::size_t b = 0; b < k; ++b) {
        bool fresh_done = false;
        for (int i = 0; i < shape.blocks[b].size; ++i) {
          if (cut[b][i]) {
            // Count each shared vertex once: from its own block (highest
            // local label) when it is a child's anchor, else here.
            const bool is_anchor = b > 0 && i == shape.blocks[b].size - 1;
            if (is_anchor) continue;
            options.push_back({b, i});
          } else if (!fresh_done) {
            options.push_back({b, i});
            fresh_done = true;
          }
        }
      }
      for (const auto& at : options) {
        const bool was_cut = cut[at.parent_block][at.parent_vertex];
        shape.blocks.push_back({s, 0, 0});
        shape.attachments.push_back(at);
        cut[at.parent_block][at.parent_vertex] = true;
        cut.emplace_back(s, false);
        cut.back()[s - 1] = true;
        self(self, n + s - 1);
        cut.pop_back();
        cut[at.parent_block][at.parent_vertex] = was_cut;
        shape.attachments.pop_back();
        shape.blocks.pop_back();
      }
    }
  };

  for (int s = 2; s <= max_n; ++s) {
    shape = BlockTreeShape{{{s, 0, 0}}, {}};
    cut.assign(1, std::vector<bool>(s, false));
    recurse(recurse, s);
  }
  return out;
}

BlockTreeShape gen_random_neg_clique_shape(Seed seed, int max_blocks, int max_n) {
  if (max_blocks < 1 || max_n < 3) throw PreconditionError("shape bounds too small");
  std::mt19937_64 rng(seed);
  const int k = uniform(rng, 1, max_blocks);
  BlockTreeShape shape;
  int n = 0;
  for (int b = 0; b < k; ++b) {
    const int room = b == 0 ? max_n : max_n - n + 1;
    if (room < 3) break;
    const int size = uniform(rng, 3, std::min(room, 7));
    int m = 0, r = 0;
    if (uniform(rng, 0, 3) != 0) {
      r = uniform(rng, 2, size - 1);
      m = uniform(rng, 1, (size - 1) / r);
    }
    if (b > 0) {
      const std::size_t parent = uniform(rng, 0, b - 1);
      const auto& p = shape.blocks[parent];
      const int lo = p.neg_cliques * p.clique_size;
      shape.attachments.push_back({parent, uniform(rng, lo, p.size - 1)});
    }
    shape.blocks.push_back({size, m, r});
    n += b == 0 ? size : size - 1;
  }
  return shape;
}

SignedDigraph gen_switched_balanced(Seed seed, int n_max) {
  const Weight one[] = {1};
  const SignedDigraph g = gen_random_block_graph(seed, n_max, one);
  return apply_switching(g, gen_random_signature(seed ^ 0x9e3779b97f4a7c15ULL, g.size()));
}

SignedDigraph gen_planted_unbalanced(Seed seed, int n_max) {
  if (n_max < 3) throw PreconditionError("a cycle needs n_max >= 3");
  for (Seed attempt = 0;; ++attempt) {
    const SignedDigraph g = gen_switched_balanced(seed + attempt * 0x100000001ULL, n_max);
    const BlockDecomposition d = block_decompose(g);
    std::vector<std::size_t> cyclic;
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
      if (d.blocks[b].size() >= 3) cyclic.push_back(b);
    }
    if (cyclic.empty()) continue;
    std::mt19937_64 rng(seed ^ attempt);
    const auto& block = d.blocks[cyclic[uniform(rng, 0, static_cast<int>(cyclic.size()) - 1)]];
    std::vector<std::pair<Vertex, Vertex>> inner;
    for (Vertex u : block)
      for (Vertex v : block)
        if (u < v && g.has_arc(u, v)) inner.emplace_back(u, v);
    const auto [u, v] = inner[uniform(rng, 0, static_cast<int>(inner.size()) - 1)];
    std::vector<Arc> arcs = g.arc_list();
    for (Arc& a : arcs) {
      if ((a.from == u && a.to == v) || (a.from == v && a.to == u)) a.weight = -a.weight;
    }
    return SignedDigraph(g.size(), arcs);
  }
}

}  // namespace blockdet
