#include "blockdet/families.hpp"

#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "blockdet/errors.hpp"

namespace blockdet {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw PreconditionError(msg); }

void require_delta(int delta) {
  if (delta != 1 && delta != -1) bad("cycle sign must be +1 or -1");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int to_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + s + "' in family descriptor");
  }
  return v;
}

std::vector<int> to_ints(const std::string& s) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) out.push_back(to_int(part));
  return out;
}

std::vector<int> expect_ints(const std::string& s, std::size_t count, const std::string& name) {
  auto v = to_ints(s);
  if (v.size() != count) {
    throw ParseError(name + " expects " + std::to_string(count) + " integer(s)");
  }
  return v;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string format_tree(const SignedTree& t) {
  std::vector<std::vector<std::pair<Vertex, int>>> adj(t.size);
  for (const auto& e : t.edges) {
    adj[e.u].push_back({e.v, e.sign});
    adj[e.v].push_back({e.u, e.sign});
  }
  std::vector<int> parent(t.size, -1), sign(t.size, 1);
  std::vector<bool> seen(t.size, false);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (auto [w, s] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      sign[w] = s;
      q.push(w);
    }
  }
  std::string out = "t";
  for (int i = 1; i < t.size; ++i) {
    if (i > 1) out += ',';
    if (sign[i] < 0) out += '-';
    out += std::to_string(parent[i]);
  }
  return out;
}

SignedTree parse_tree(const std::string& s) {
  if (s.empty() || s[0] != 't') throw ParseError("tree descriptor must start with 't'");
  if (s.size() == 1) return SignedTree{};
  std::vector<int> parents, signs;
  for (const auto& item : split(s.substr(1), ',')) {
    const bool negative = !item.empty() && item[0] == '-';
    parents.push_back(to_int(negative ? item.substr(1) : item));
    signs.push_back(negative ? -1 : 1);
  }
  return tree_from_parents(parents, signs);
}

std::string format_shape(const BlockTreeShape& s) {
  std::string out;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    const auto& b = s.blocks[i];
    if (i) out += ';';
    out += std::to_string(b.size);
    if (b.neg_cliques > 0) {
      out += '/' + std::to_string(b.neg_cliques) + '/' + std::to_string(b.clique_size);
    }
    if (i > 0 && i - 1 < s.attachments.size()) {
      out += '@' + std::to_string(s.attachments[i - 1].parent_block) + '.' +
             std::to_string(s.attachments[i - 1].parent_vertex);
    }
  }
  return out;
}

BlockTreeShape parse_shape(const std::string& s) {
  BlockTreeShape shape;
  auto entries = split(s, ';');
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::string body = entries[i];
    BlockAttachment at{i == 0 ? 0 : i - 1, 0};
    if (auto pos = body.find('@'); pos != std::string::npos) {
      if (i == 0) throw ParseError("first block cannot be attached");
      auto where = split(body.substr(pos + 1), '.');
      if (where.size() != 2) throw ParseError("attachment must be '@<block>.<vertex>'");
      at = {static_cast<std::size_t>(to_int(where[0])), to_int(where[1])};
      body = body.substr(0, pos);
    }
    auto nums = split(body, '/');
    CliqueBlock b;
    if (nums.size() == 1) {
      b.size = to_int(nums[0]);
    } else if (nums.size() == 3) {
      b = {to_int(nums[0]), to_int(nums[1]), to_int(nums[2])};
    } else {
      throw ParseError("block must be '<n>' or '<n>/<m>/<r>'");
    }
    shape.blocks.push_back(b);
    if (i > 0) shape.attachments.push_back(at);
  }
  return shape;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

SignedTree tree_from_parents(const std::vector<int>& parents, const std::vector<int>& signs) {
  if (!signs.empty() && signs.size() != parents.size()) {
    throw PreconditionError("tree signs must match parents");
  }
  SignedTree t;
  t.size = static_cast<int>(parents.size()) + 1;
  for (std::size_t i = 0; i < parents.size(); ++i) {
    t.edges.push_back({parents[i], static_cast<Vertex>(i + 1), signs.empty() ? 1 : signs[i]});
  }
  validate(t);
  return t;
}

void validate(const SignedTree& t) {
  if (t.size < 1) bad("tree needs at least one vertex");
  if (static_cast<int>(t.edges.size()) != t.size - 1) bad("tree must have size-1 edges");
  std::vector<int> root(t.size);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& e : t.edges) {
    if (e.u < 0 || e.u >= t.size || e.v < 0 || e.v >= t.size) bad("tree edge out of range");
    if (e.sign != 1 && e.sign != -1) bad("tree edge sign must be +1 or -1");
    int a = find(e.u), b = find(e.v);
    if (a == b) bad("tree edges contain a cycle");
    root[a] = b;
  }
}

void validate(const BlockTreeShape& s, bool allow_negative_cliques) {
  if (s.blocks.empty()) bad("block shape needs at least one block");
  if (s.attachments.size() + 1 != s.blocks.size()) bad("one attachment per extra block");
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    const auto& b = s.blocks[i];
    const int min_size = s.blocks.size() == 1 ? 1 : 2;
    if (b.size < min_size) bad("block " + std::to_string(i) + " is too small");
    if (b.neg_cliques < 0) bad("negative clique count must be >= 0");
    if (b.neg_cliques > 0) {
      if (!allow_negative_cliques) bad("this family has no negative cliques");
      if (b.clique_size < 2) bad("negative clique size must be >= 2");
      if (b.neg_cliques * b.clique_size > b.size - 1) {
        bad("negative cliques must leave a positive vertex (m*r <= n-1)");
      }
    }
    if (i == 0) continue;
    const auto& at = s.attachments[i - 1];
    if (at.parent_block >= i) bad("block " + std::to_string(i) + " must attach to an earlier block");
    const auto& p = s.blocks[at.parent_block];
    if (at.parent_vertex < 0 || at.parent_vertex >= p.size) bad("attachment vertex out of range");
    if (at.parent_vertex < p.neg_cliques * p.clique_size) {
      bad("cut vertex placed inside a negative clique");
    }
  }
}

void validate(const FamilySpec& f) {
  std::visit(
      Overloaded{
          [](const CompleteK& x) {
            if (x.n < 0) bad("complete graph order must be >= 0");
          },
          [](const NegCliqueK& x) {
            if (x.m < 1 || x.r < 2 || x.m * x.r > x.n - 1) {
              bad("K_n^{m,r} needs m >= 1, r >= 2, m*r <= n-1");
            }
          },
          [](const SignedCycle& x) {
            if (x.n < 3) bad("cycle order must be >= 3");
            require_delta(x.delta);
          },
          [](const SignedPath& x) {
            if (x.n < 0) bad("path order must be >= 0");
          },
          [](const TreeFamily& x) { validate(x.tree); },
          [](const BlockGraphK& x) { validate(x.shape, false); },
          [](const NegCliqueBlockGraph& x) { validate(x.shape, true); },
          [](const UnicyclicSingle& x) {
            if (x.n < 3) bad("cycle order must be >= 3");
            require_delta(x.delta);
            validate(x.tree);
          },
          [](const UnicyclicMulti& x) {
            if (x.n < 3) bad("cycle order must be >= 3");
            require_delta(x.delta);
            if (x.trees.empty()) bad("at least one tree");
            for (const auto& t : x.trees) validate(t);
          },
          [](const UnicyclicTwo& x) {
            if (x.n < 3) bad("cycle order must be >= 3");
            require_delta(x.delta);
            if (x.distance < 1 || 2 * x.distance > x.n) bad("distance l must satisfy 1 <= l <= n/2");
            validate(x.first);
            validate(x.second);
          },
          [](const MixedComplete& x) {
            if (x.n <= 3) bad("mixed complete graph needs n > 3");
          },
          [](const MixedStar& x) {
            if (x.sizes.empty()) bad("mixed star needs at least one block");
            for (int s : x.sizes) {
              if (s <= 3) bad("mixed star blocks need n_i > 3");
            }
          },
          [](const NegMixedComplete& x) {
            if (x.n <= 3) bad("negative mixed complete graph needs n > 3");
          },
          [](const NegMixedStar& x) {
            if (x.sizes.empty()) bad("negative mixed star needs at least one block");
            for (int s : x.sizes) {
              if (s <= 3) bad("negative mixed star blocks need n_i > 3");
            }
          },
      },
      f);
}

std::string format_family(const FamilySpec& f) {
  return std::visit(
      Overloaded{
          [](const CompleteK& x) { return "complete:" + std::to_string(x.n); },
          [](const NegCliqueK& x) { return "neg-clique:" + join({x.n, x.m, x.r}); },
          [](const SignedCycle& x) { return "cycle:" + join({x.n, x.delta}); },
          [](const SignedPath& x) { return "path:" + std::to_string(x.n); },
          [](const TreeFamily& x) { return "tree:" + format_tree(x.tree); },
          [](const BlockGraphK& x) { return "block-graph:" + format_shape(x.shape); },
          [](const NegCliqueBlockGraph& x) { return "neg-clique-block:" + format_shape(x.shape); },
          [](const UnicyclicSingle& x) {
            return "unicyclic:" + join({x.n, x.delta}) + ';' + format_tree(x.tree);
          },
          [](const UnicyclicMulti& x) {
            std::string out = "unicyclic-multi:" + join({x.n, x.delta});
            for (const auto& t : x.trees) out += ';' + format_tree(t);
            return out;
          },
          [](const UnicyclicTwo& x) {
            return "unicyclic-two:" + join({x.n, x.delta, x.distance}) + ';' +
                   format_tree(x.first) + ';' + format_tree(x.second);
          },
          [](const MixedComplete& x) { return "mixed-complete:" + std::to_string(x.n); },
          [](const MixedStar& x) { return "mixed-star:" + join(x.sizes); },
          [](const NegMixedComplete& x) { return "neg-mixed-complete:" + std::to_string(x.n); },
          [](const NegMixedStar& x) { return "neg-mixed-star:" + join(x.sizes); },
      },
      f);
}

FamilySpec parse_family(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("family descriptor must be '<name>:<args>'");
  const std::string name = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);

  if (name == "complete") return CompleteK{expect_ints(args, 1, name)[0]};
  if (name == "neg-clique") {
    auto v = expect_ints(args, 3, name);
    return NegCliqueK{v[0], v[1], v[2]};
  }
  if (name == "cycle") {
    auto v = expect_ints(args, 2, name);
    return SignedCycle{v[0], v[1]};
  }
  if (name == "path") return SignedPath{expect_ints(args, 1, name)[0]};
  if (name == "tree") return TreeFamily{parse_tree(args)};
  if (name == "block-graph") return BlockGraphK{parse_shape(args)};
  if (name == "neg-clique-block") return NegCliqueBlockGraph{parse_shape(args)};
  if (name == "mixed-complete") return MixedComplete{expect_ints(args, 1, name)[0]};
  if (name == "mixed-star") return MixedStar{to_ints(args)};
  if (name == "neg-mixed-complete") return NegMixedComplete{expect_ints(args, 1, name)[0]};
  if (name == "neg-mixed-star") return NegMixedStar{to_ints(args)};

  auto groups = split(args, ';');
  if (name == "unicyclic") {
    if (groups.size() != 2) throw ParseError("unicyclic expects '<n>,<delta>;<tree>'");
    auto v = expect_ints(groups[0], 2, name);
    return UnicyclicSingle{v[0], v[1], parse_tree(groups[1])};
  }
  if (name == "unicyclic-multi") {
    if (groups.size() < 2) throw ParseError("unicyclic-multi expects '<n>,<delta>;<tree>;...'");
    auto v = expect_ints(groups[0], 2, name);
    UnicyclicMulti u{v[0], v[1], {}};
    for (std::size_t i = 1; i < groups.size(); ++i) u.trees.push_back(parse_tree(groups[i]));
    return u;
  }
  if (name == "unicyclic-two") {
    if (groups.size() != 3) throw ParseError("unicyclic-two expects '<n>,<delta>,<l>;<tree>;<tree>'");
    auto v = expect_ints(groups[0], 3, name);
    return UnicyclicTwo{v[0], v[1], parse_tree(groups[1]), parse_tree(groups[2]), v[2]};
  }
  throw ParseError("unknown family '" + name + "'");
}

}  // namespace blockdet
