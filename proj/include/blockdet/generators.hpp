#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blockdet/families.hpp"
#include "blockdet/graph.hpp"

namespace blockdet {

using Seed = std::uint64_t;

/// The family instance. Vertex numbering: cycles first (the attachment
/// vertex of a unicyclic graph is 0), then trees in attachment order; star
/// families use 0 as the shared vertex; block shapes number block 0 first
/// and each later block's new vertices in local order.
/// Throws PreconditionError on illegal parameters.
SignedDigraph gen(const FamilySpec& family);

/// Global labels of each block of a shape, indexed by local vertex.
std::vector<std::vector<Vertex>> shape_block_vertices(const BlockTreeShape& shape);

struct RandomBlockGraphOptions {
  int n_max = 8;
  std::vector<Weight> weights{1};
  int max_block = 5;      // largest clique/cycle block
  bool directed = false;  // each edge becomes one or two arcs
};

/// Random tree of blocks (edges, cliques, cycles) glued at cut vertices,
/// loop-free, labels shuffled. Same seed and options give the same graph.
SignedDigraph gen_random_block_graph(Seed seed, const RandomBlockGraphOptions& options);
SignedDigraph gen_random_block_graph(Seed seed, int n_max, std::span<const Weight> weights);

/// Random parent attachment: vertex i picks a parent uniformly from 0..i-1.
SignedTree gen_random_signed_tree(Seed seed, int m);

/// Each ordered pair (loops optional) is an arc with the given probability,
/// weight drawn from `weights`.
SignedDigraph gen_random_digraph(Seed seed, int n, double arc_probability,
                                 std::span<const Weight> weights, bool allow_loops = false);

SwitchingSignature gen_random_signature(Seed seed, int n);

/// Every tree of positive cliques (block sizes >= 2, at most `max_k`
/// blocks, at most `max_n` vertices), up to symmetries inside a clique: a
/// new block hangs either on an existing cut vertex or on one fresh
/// vertex of an earlier block.
std::vector<BlockTreeShape> enumerate_clique_tree_shapes(int max_n, int max_k);

/// Random chain or tree of K_{n_i}^{m_i,r_i} blocks, cut vertices outside
/// the negative cliques, at most `max_blocks` blocks and `max_n` vertices.
BlockTreeShape gen_random_neg_clique_shape(Seed seed, int max_blocks, int max_n);

/// Random undirected block graph with weights +1, then switched by a
/// random signature: balanced by construction.
SignedDigraph gen_switched_balanced(Seed seed, int n_max);

/// Like gen_switched_balanced, with one edge inside a block of three or
/// more vertices negated, so that some cycle through it is negative.
SignedDigraph gen_planted_unbalanced(Seed seed, int n_max);

}  // namespace blockdet
