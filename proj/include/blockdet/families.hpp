#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "blockdet/graph.hpp"

namespace blockdet {

struct TreeEdge {
  Vertex u = 0;
  Vertex v = 0;
  int sign = 1;
};

/// Signed tree on vertices 0..size-1, rooted at 0, edge signs in {-1, +1}.
struct SignedTree {
  int size = 1;
  std::vector<TreeEdge> edges;
};

/// parents[i - 1] is the parent of vertex i; signs (optional) match parents.
SignedTree tree_from_parents(const std::vector<int>& parents, const std::vector<int>& signs = {});

/// One clique block K_n^{m,r}: m vertex-disjoint all-negative r-cliques on the
/// lowest local labels, every other edge positive. m = 0 is a plain K_n.
struct CliqueBlock {
  int size = 2;
  int neg_cliques = 0;
  int clique_size = 0;
};

/// Block i > 0 shares one vertex with an earlier block: local vertex
/// `parent_vertex` of block `parent_block`. Inside block i that shared
/// vertex is its highest local label.
struct BlockAttachment {
  std::size_t parent_block = 0;
  int parent_vertex = 0;
};

struct BlockTreeShape {
  std::vector<CliqueBlock> blocks;
  std::vector<BlockAttachment> attachments;  // one per block after the first
};

struct CompleteK { int n = 0; };
struct NegCliqueK { int n = 0; int m = 0; int r = 0; };
struct SignedCycle { int n = 3; int delta = 1; };
struct SignedPath { int n = 0; };
struct TreeFamily { SignedTree tree; };
struct BlockGraphK { BlockTreeShape shape; };
struct NegCliqueBlockGraph { BlockTreeShape shape; };
struct UnicyclicSingle { int n = 3; int delta = 1; SignedTree tree; };
struct UnicyclicMulti { int n = 3; int delta = 1; std::vector<SignedTree> trees; };
struct UnicyclicTwo {
  int n = 3;
  int delta = 1;
  SignedTree first;
  SignedTree second;
  int distance = 1;
};
struct MixedComplete { int n = 4; };
struct MixedStar { std::vector<int> sizes; };
struct NegMixedComplete { int n = 4; };
struct NegMixedStar { std::vector<int> sizes; };

using FamilySpec =
    std::variant<CompleteK, NegCliqueK, SignedCycle, SignedPath, TreeFamily, BlockGraphK,
                 NegCliqueBlockGraph, UnicyclicSingle, UnicyclicMulti, UnicyclicTwo,
                 MixedComplete, MixedStar, NegMixedComplete, NegMixedStar>;

/// Throws PreconditionError when a parameter is outside its legal range.
void validate(const SignedTree& t);
void validate(const BlockTreeShape& s, bool allow_negative_cliques);
void validate(const FamilySpec& f);

/// Textual descriptor, e.g. "mixed-complete:5" or "block-graph:3;3@0.0".
std::string format_family(const FamilySpec& f);

/// Inverse of format_family. Throws ParseError on bad syntax.
FamilySpec parse_family(const std::string& text);

}  // namespace blockdet
