#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace blockdet {

using Vertex = int;
using Weight = std::int64_t;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  Weight weight = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Exact integer-weighted directed graph on vertices 0..n-1.
///
/// An undirected edge is stored as two arcs of equal weight. A zero weight
/// means "absent" and is never stored. Self-loops are rejected unless the
/// graph was built loop-permitted. Arcs are kept in lexicographic (from, to)
/// order, so iteration and serialization are deterministic.
class SignedDigraph {
 public:
  using ArcMap = std::map<std::pair<Vertex, Vertex>, Weight>;

  SignedDigraph() = default;

  /// Throws InvalidGraph on out-of-range endpoints, duplicate arcs, zero
  /// weights, or a loop when `allow_loops` is false.
  SignedDigraph(int n, std::span<const Arc> arcs, bool allow_loops = false);

  int size() const { return n_; }
  bool loops_permitted() const { return allow_loops_; }
  const ArcMap& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }

  Weight weight(Vertex u, Vertex v) const;
  bool has_arc(Vertex u, Vertex v) const { return weight(u, v) != 0; }
  bool has_loop(Vertex v) const { return has_arc(v, v); }
  bool has_any_loop() const;

  std::vector<Arc> arc_list() const;
  std::vector<std::vector<Weight>> adjacency() const;

  /// Neighbours in the undirected support (loops dropped), sorted.
  std::vector<std::vector<Vertex>> support_neighbors() const;

  /// True when every non-loop arc has a reverse arc of the same weight.
  bool is_symmetric() const;

  /// Equality of vertex count and weighted arc set; the loop permission is a
  /// construction option and does not take part.
  bool operator==(const SignedDigraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  int n_ = 0;
  bool allow_loops_ = false;
  ArcMap arcs_;
};

SignedDigraph build_graph(int n, std::span<const Arc> arcs, bool allow_loops = false);

/// Graph whose adjacency matrix is `matrix`; diagonal entries become loops.
SignedDigraph from_matrix(const std::vector<std::vector<Weight>>& matrix);

/// Same arcs with every weight replaced by its absolute value.
SignedDigraph underlying(const SignedDigraph& g);

SignedDigraph transpose(const SignedDigraph& g);

/// Components of the undirected support, each sorted, ordered by min vertex.
std::vector<std::vector<Vertex>> connected_components(const SignedDigraph& g);

bool is_connected(const SignedDigraph& g);

struct BlockDecomposition {
  /// Each block sorted ascending; blocks ordered lexicographically, which
  /// orders them by smallest contained vertex first.
  std::vector<std::vector<Vertex>> blocks;
  /// Articulation points, ascending.
  std::vector<Vertex> cut_vertices;
  /// For each cut vertex, the indices of the blocks that contain it.
  std::map<Vertex, std::vector<std::size_t>> incidence;

  std::size_t block_count() const { return blocks.size(); }
  bool is_cut_vertex(Vertex v) const { return incidence.count(v) != 0; }
};

/// Blocks (maximal 2-connected pieces and bridges) and cut vertices of the
/// undirected support of `g`. Throws PreconditionError when `g` is
/// disconnected. The null graph has no blocks; a single vertex is one block.
BlockDecomposition block_decompose(const SignedDigraph& g);

struct SwitchingSignature {
  std::vector<int> signs;  // +1 or -1 per vertex
};

/// Conjugation a_uv -> s_u a_uv s_v.
SignedDigraph apply_switching(const SignedDigraph& g, const SwitchingSignature& s);

struct BalanceResult {
  bool balanced = false;
  SwitchingSignature signature;        // set when balanced
  std::vector<Vertex> unbalanced_cycle;  // set when not; closing edge implied
};

/// Harary balance test by sign propagation over a spanning forest.
/// Requires symmetric weights (throws PreconditionError otherwise); loops
/// are ignored and only the sign of each weight matters.
BalanceResult is_balanced(const SignedDigraph& g);

struct InducedSubgraph {
  SignedDigraph graph;
  std::vector<Vertex> original;  // original[new label] = old label
};

/// Subgraph induced by `vertices` (deduplicated, relabeled densely in
/// ascending order of the old labels).
InducedSubgraph induced_subgraph(const SignedDigraph& g, std::span<const Vertex> vertices);

/// Sign of the product of weights along the closed walk
/// cycle[0] -> cycle[1] -> ... -> cycle.back() -> cycle[0].
int cycle_sign(const SignedDigraph& g, std::span<const Vertex> cycle);

}  // namespace blockdet
