#include "blockdet/closed_forms.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "blockdet/errors.hpp"
#include "blockdet/generators.hpp"
#include "blockdet/oracles.hpp"

namespace blockdet {

namespace {

using Rational = boost::multiprecision::cpp_rational;

ExactValue sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

ExactValue ipow(const ExactValue& base, int e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

void require_delta(int delta) {
  if (delta != 1 && delta != -1) throw PreconditionError("cycle sign must be +1 or -1");
}

void require_cycle(int n, int delta) {
  if (n < 3) throw PreconditionError("cycle order must be >= 3");
  require_delta(delta);
}

void require_mixed(int n) {
  if (n <= 3) throw PreconditionError("mixed complete graph needs n > 3");
}

std::vector<int> tree_order(const SignedTree& t, std::vector<int>& parent) {
  std::vector<std::vector<Vertex>> adj(t.size);
  for (const auto& e : t.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  parent.assign(t.size, -1);
  std::vector<int> order{0};
  std::vector<bool> seen(t.size, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : adj[order[i]]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = order[i];
      order.push_back(w);
    }
  }
  return order;
}

ExactValue neg_clique_factor(int alpha, const CliqueBlock& b) {
  if (b.neg_cliques == 0) return alpha - 1;
  const int m = b.neg_cliques, r = b.clique_size;
  const ExactValue base = 1 - 2 * r;
  return ipow(base, m - 1) * sign_power(static_cast<long long>(m) * r) *
         (ExactValue(alpha) * base + 2 * r * (1 + m * (r - 1)) - 1);
}

int shape_order(const BlockTreeShape& shape) {
  int n = shape.blocks[0].size;
  for (std::size_t i = 1; i < shape.blocks.size(); ++i) n += shape.blocks[i].size - 1;
  return n;
}

template <typename Factor>
ExactValue signed_tuple_sum(const BlockTreeShape& shape, Factor&& factor) {
  const int n = shape_order(shape);
  const int k = static_cast<int>(shape.blocks.size());
  ExactValue sum = 0;
  for (const auto& alpha : shape_alpha_tuples(shape)) {
    ExactValue term = 1;
    for (int i = 0; i < k && term != 0; ++i) term *= factor(alpha[i], shape.blocks[i]);
    sum += term;
  }
  return sign_power(n - k) * sum;
}

void require_positive_shape(const BlockTreeShape& shape) {
  validate(shape, /*allow_negative_cliques=*/false);
}

double pairwise_product(std::vector<double> factors) {
  if (factors.empty()) return 1.0;
  while (factors.size() > 1) {
    std::vector<double> next;
    next.reserve((factors.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < factors.size(); i += 2) next.push_back(factors[i] * factors[i + 1]);
    if (factors.size() % 2) next.push_back(factors.back());
    factors = std::move(next);
  }
  return factors[0];
}

// (n-4)(1 + 2^n - L_n)/4 with L_0 = 2, L_1 = -1, L_i = -L_{i-1} - 2 L_{i-2}:
// the eigenvalue product of J - I - 2Q - Q^(n-1) evaluated over the
// integers, since prod over n-th roots z of (-2z^2 - z - 1) reduces to the
// power sums of the roots of y^2 + y + 2.
ExactValue neg_mixed_complete_integer_product(int n) {
  ExactValue prev = 2, cur = -1;
  for (int i = 2; i <= n; ++i) {
    ExactValue next = -cur - 2 * prev;
    prev = cur;
    cur = next;
  }
  const ExactValue lucas = n == 0 ? prev : cur;
  const ExactValue bracket = 1 + (ExactValue(1) << n) - lucas;
  if (bracket % 4 != 0) throw std::logic_error("eigenvalue product is not integral");
  return (n - 4) * (bracket / 4);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

ExactValue det_complete(int n) {
  if (n < 0) throw PreconditionError("complete graph order must be >= 0");
  return sign_power(n - 1) * ExactValue(n - 1);
}

ExactValue per_complete(int n) {
  if (n < 0) throw PreconditionError("complete graph order must be >= 0");
  ExactValue prev = 1, cur = 0;  // D_0, D_1
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    ExactValue next = (i - 1) * (cur + prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

ExactValue det_signed_cycle(int n, int delta) {
  require_cycle(n, delta);
  if (n % 2) return 2 * delta;
  return n % 4 == 0 ? ExactValue(2 - 2 * delta) : ExactValue(-2 - 2 * delta);
}

ExactValue per_signed_cycle(int n, int delta) {
  require_cycle(n, delta);
  // Printed as 2 - 2 delta for even n; the cycle-cover sum gives 2 + 2 delta.
  return n % 2 ? ExactValue(2 * delta) : ExactValue(2 + 2 * delta);
}

ExactValue det_signed_path(int n) {
  if (n < 0) throw PreconditionError("path order must be >= 0");
  return n % 2 ? ExactValue(0) : sign_power(n / 2);
}

ExactValue per_signed_path(int n) {
  if (n < 0) throw PreconditionError("path order must be >= 0");
  return n % 2 ? 0 : 1;
}

bool has_perfect_matching(const SignedTree& t) {
  validate(t);
  if (t.size % 2) return false;
  std::vector<int> parent;
  const auto order = tree_order(t, parent);
  std::vector<bool> matched(t.size, false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (matched[v]) continue;
    if (parent[v] < 0 || matched[parent[v]]) return false;
    matched[v] = matched[parent[v]] = true;
  }
  return true;
}

SignedTree with_root_anchor(const SignedTree& t) {
  SignedTree out = t;
  out.edges.push_back({0, t.size, 1});
  out.size = t.size + 1;
  return out;
}

ExactValue det_signed_tree(const SignedTree& t) {
  return has_perfect_matching(t) ? sign_power(t.size / 2) : ExactValue(0);
}

ExactValue per_signed_tree(const SignedTree& t) { return has_perfect_matching(t) ? 1 : 0; }

std::vector<AlphaTuple> shape_alpha_tuples(const BlockTreeShape& shape) {
  const SignedDigraph g = gen(NegCliqueBlockGraph{shape});
  const BlockDecomposition d = block_decompose(g);
  const auto labels = shape_block_vertices(shape);

  std::map<std::vector<Vertex>, std::size_t> shape_index;
  for (std::size_t b = 0; b < labels.size(); ++b) {
    auto sorted = labels[b];
    std::sort(sorted.begin(), sorted.end());
    shape_index[sorted] = b;
  }
  std::vector<std::size_t> to_shape(d.blocks.size());
  for (std::size_t b = 0; b < d.blocks.size(); ++b) to_shape[b] = shape_index.at(d.blocks[b]);

  std::vector<AlphaTuple> out;
  for (const auto& alpha : enumerate_alpha_tuples(d)) {
    AlphaTuple permuted(alpha.size());
    for (std::size_t b = 0; b < alpha.size(); ++b) permuted[to_shape[b]] = alpha[b];
    out.push_back(std::move(permuted));
  }
  return out;
}

ExactValue det_block_graph(const BlockTreeShape& shape) {
  require_positive_shape(shape);
  return signed_tuple_sum(shape, [](int alpha, const CliqueBlock&) { return ExactValue(alpha - 1); });
}

ExactValue per_block_graph(const BlockTreeShape& shape) {
  require_positive_shape(shape);
  ExactValue sum = 0;
  for (const auto& alpha : shape_alpha_tuples(shape)) {
    ExactValue term = 1;
    for (int a : alpha) term *= per_complete(a);
    sum += term;
  }
  return sum;
}

ExactValue det_neg_clique_complete(int n, int m, int r) {
  validate(FamilySpec{NegCliqueK{n, m, r}});
  const ExactValue base = 1 - 2 * r;
  return ipow(base, m - 1) * sign_power(n - m * r - 1) *
         (ExactValue(n) * base + 2 * r * (1 + m * (r - 1)) - 1);
}

ExactValue det_neg_clique_block_graph(const BlockTreeShape& shape) {
  validate(shape, /*allow_negative_cliques=*/true);
  return signed_tuple_sum(shape, neg_clique_factor);
}

ExactValue det_unicyclic_single(int n, int delta, const SignedTree& tree) {
  require_cycle(n, delta);
  return det_signed_cycle(n, delta) * det_signed_tree(tree) +
         det_signed_path(n - 1) * det_signed_tree(with_root_anchor(tree));
}

ExactValue per_unicyclic_single(int n, int delta, const SignedTree& tree) {
  require_cycle(n, delta);
  return per_signed_cycle(n, delta) * per_signed_tree(tree) +
         per_signed_path(n - 1) * per_signed_tree(with_root_anchor(tree));
}

UnicyclicCase classify_unicyclic(int n, const SignedTree& tree) {
  if (n % 2 == 0) {
    return has_perfect_matching(tree) ? UnicyclicCase::EvenTreeMatching
                                      : UnicyclicCase::EvenNoMatching;
  }
  if (has_perfect_matching(tree)) return UnicyclicCase::OddTreeMatching;
  if (has_perfect_matching(with_root_anchor(tree))) return UnicyclicCase::OddAnchoredMatching;
  return UnicyclicCase::OddNoMatching;
}

ExactValue det_unicyclic_single_by_cases(int n, int delta, const SignedTree& tree) {
  require_cycle(n, delta);
  const int m = tree.size;
  switch (classify_unicyclic(n, tree)) {
    case UnicyclicCase::EvenTreeMatching:
      return sign_power(m / 2) * (-2 * delta + 2 * sign_power(n / 2));
    case UnicyclicCase::OddAnchoredMatching:
      return sign_power((m + n) / 2);
    case UnicyclicCase::OddTreeMatching:
      return 2 * delta * sign_power(m / 2);
    case UnicyclicCase::EvenNoMatching:
    case UnicyclicCase::OddNoMatching:
      break;
  }
  return 0;
}

ExactValue per_unicyclic_single_by_cases(int n, int delta, const SignedTree& tree) {
  require_cycle(n, delta);
  switch (classify_unicyclic(n, tree)) {
    case UnicyclicCase::EvenTreeMatching:
      return 2 + 2 * delta;
    case UnicyclicCase::OddAnchoredMatching:
      return 1;
    case UnicyclicCase::OddTreeMatching:
      return 2 * delta;
    case UnicyclicCase::EvenNoMatching:
    case UnicyclicCase::OddNoMatching:
      break;
  }
  return 0;
}

namespace {

template <typename CycleFn, typename PathFn, typename TreeFn>
ExactValue multi_sum(int n, int delta, const std::vector<SignedTree>& trees, CycleFn cycle,
                     PathFn path, TreeFn tree) {
  require_cycle(n, delta);
  if (trees.empty()) throw PreconditionError("at least one tree");
  std::vector<ExactValue> plain, anchored;
  for (const auto& t : trees) {
    plain.push_back(tree(t));
    anchored.push_back(tree(with_root_anchor(t)));
  }
  ExactValue all = 1;
  for (const auto& v : plain) all *= v;
  ExactValue mixed = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    ExactValue term = anchored[i];
    for (std::size_t j = 0; j < trees.size(); ++j) {
      if (j != i) term *= plain[j];
    }
    mixed += term;
  }
  return cycle(n, delta) * all + path(n - 1) * mixed;
}

template <typename SingleFn, typename PathFn, typename TreeFn>
ExactValue two_sum(int n, int delta, const SignedTree& first, const SignedTree& second, int l,
                   SingleFn single, PathFn path, TreeFn tree) {
  require_cycle(n, delta);
  if (l < 1 || 2 * l > n) throw PreconditionError("distance l must satisfy 1 <= l <= n/2");
  const ExactValue first_anchored = tree(with_root_anchor(first));
  return single(n, delta, second) * tree(first) +
         first_anchored * tree(with_root_anchor(second)) * path(l - 1) * path(n - l - 1) +
         first_anchored * tree(second) * path(n - 1);
}

}  // namespace

ExactValue det_unicyclic_multi(int n, int delta, const std::vector<SignedTree>& trees) {
  return multi_sum(n, delta, trees, det_signed_cycle, det_signed_path, det_signed_tree);
}

ExactValue per_unicyclic_multi(int n, int delta, const std::vector<SignedTree>& trees) {
  return multi_sum(n, delta, trees, per_signed_cycle, per_signed_path, per_signed_tree);
}

ExactValue det_unicyclic_two(int n, int delta, const SignedTree& first, const SignedTree& second,
                             int distance) {
  return two_sum(n, delta, first, second, distance, det_unicyclic_single, det_signed_path,
                 det_signed_tree);
}

ExactValue per_unicyclic_two(int n, int delta, const SignedTree& first, const SignedTree& second,
                             int distance) {
  return two_sum(n, delta, first, second, distance, per_unicyclic_single, per_signed_path,
                 per_signed_tree);
}

std::complex<double> mixed_cycle_eigen_product(int n) {
  std::complex<double> prod = 1.0;
  for (int i = 1; i < n; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / n;
    prod *= std::complex<double>(-1.0 - std::cos(theta), -std::sin(theta));
  }
  return prod;
}

ExactValue det_mixed_complete(int n) {
  require_mixed(n);
  return n % 2 ? ExactValue(n - 2) : ExactValue(0);
}

ExactValue det_mixed_complete_minus_v(int n) {
  require_mixed(n);
  return sign_power(n) * ExactValue((n - 2) / 2);
}

ExactValue det_mixed_star(const std::vector<int>& sizes) {
  validate(FamilySpec{MixedStar{sizes}});
  ExactValue sum = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] % 2 == 0) continue;
    ExactValue term = det_mixed_complete(sizes[i]);
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      if (j != i) term *= det_mixed_complete_minus_v(sizes[j]);
    }
    sum += term;
  }
  return sum;
}

double neg_mixed_eigen_product(int n) {
  require_mixed(n);
  std::vector<double> factors;
  const int pairs = n % 2 ? (n - 1) / 2 : (n - 2) / 2;
  factors.push_back(n % 2 ? double(n - 4) : 2.0 * (n - 4));
  for (int i = 1; i <= pairs; ++i) {
    const double c = std::cos(2.0 * std::numbers::pi * i / n);
    factors.push_back(2.0 + 8.0 * c * c + 6.0 * c);
  }
  return pairwise_product(std::move(factors));
}

NegMixedDeterminant det_neg_mixed_complete(int n) {
  require_mixed(n);
  return {neg_mixed_eigen_product(n), det_exact(gen(NegMixedComplete{n}))};
}

TridiagState tridiag_state(int m) {
  if (m < 1) throw PreconditionError("tridiagonal order must be >= 1");
  TridiagState s;
  s.order = m;
  s.f.resize(m + 1);
  s.g.resize(m + 1);
  s.h.resize(m + 2);
  s.f[0] = 1;
  s.f[1] = -1;  // -f_0 - 2 f_{-1}
  s.g[0] = 1;
  s.g[1] = -1;
  for (int i = 2; i <= m; ++i) {
    s.f[i] = -s.f[i - 1] - 2 * s.f[i - 2];
    s.g[i] = -s.g[i - 1] - 2 * s.g[i - 2];
  }
  s.h[m + 1] = 1;
  s.h[m] = -1;
  for (int i = m - 1; i >= 1; --i) s.h[i] = -s.h[i + 1] - 2 * s.h[i + 2];
  return s;
}

TridiagEvaluation evaluate_neg_mixed_minus_v(int n) {
  require_mixed(n);
  const int m = n - 1;
  const TridiagState s = tridiag_state(m);
  TridiagEvaluation e;
  e.g_m = s.g[m];
  e.bracket = 0;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i <= j) {
        e.bracket += (ExactValue(1) << (j - i)) * s.g[i - 1] * s.h[j + 1];
      } else {
        e.bracket += s.g[j - 1] * s.h[i + 1];
      }
    }
  }
  if (e.g_m == 0) throw std::logic_error("tridiagonal part is singular");
  const Rational value = Rational(e.g_m) * (1 + Rational(e.bracket) / Rational(e.g_m));
  if (boost::multiprecision::denominator(value) != 1) {
    throw std::logic_error("determinant lemma produced a non-integer for n = " +
                           std::to_string(n));
  }
  e.value = boost::multiprecision::numerator(value);
  return e;
}

ExactValue det_neg_mixed_complete_minus_v(int n) { return evaluate_neg_mixed_minus_v(n).value; }

ExactValue det_neg_mixed_star(const std::vector<int>& sizes) {
  validate(FamilySpec{NegMixedStar{sizes}});
  ExactValue sum = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    ExactValue term = neg_mixed_complete_integer_product(sizes[i]);
    for (std::size_t j = 0; j < sizes.size() && term != 0; ++j) {
      if (j != i) term *= det_neg_mixed_complete_minus_v(sizes[j]);
    }
    sum += term;
  }
  return sum;
}

std::optional<ExactValue> closed_form_det(const FamilySpec& family) {
  validate(family);
  return std::visit(
      Overloaded{
          [](const CompleteK& x) -> std::optional<ExactValue> { return det_complete(x.n); },
          [](const NegCliqueK& x) -> std::optional<ExactValue> {
            return det_neg_clique_complete(x.n, x.m, x.r);
          },
          [](const SignedCycle& x) -> std::optional<ExactValue> {
            return det_signed_cycle(x.n, x.delta);
          },
          [](const SignedPath& x) -> std::optional<ExactValue> { return det_signed_path(x.n); },
          [](const TreeFamily& x) -> std::optional<ExactValue> { return det_signed_tree(x.tree); },
          [](const BlockGraphK& x) -> std::optional<ExactValue> { return det_block_graph(x.shape); },
          [](const NegCliqueBlockGraph& x) -> std::optional<ExactValue> {
            return det_neg_clique_block_graph(x.shape);
          },
          [](const UnicyclicSingle& x) -> std::optional<ExactValue> {
            return det_unicyclic_single(x.n, x.delta, x.tree);
          },
          [](const UnicyclicMulti& x) -> std::optional<ExactValue> {
            return det_unicyclic_multi(x.n, x.delta, x.trees);
          },
          [](const UnicyclicTwo& x) -> std::optional<ExactValue> {
            return det_unicyclic_two(x.n, x.delta, x.first, x.second, x.distance);
          },
          [](const MixedComplete& x) -> std::optional<ExactValue> {
            return det_mixed_complete(x.n);
          },
          [](const MixedStar& x) -> std::optional<ExactValue> { return det_mixed_star(x.sizes); },
          [](const NegMixedComplete& x) -> std::optional<ExactValue> {
            return neg_mixed_complete_integer_product(x.n);
          },
          [](const NegMixedStar& x) -> std::optional<ExactValue> {
            return det_neg_mixed_star(x.sizes);
          },
      },
      family);
}

std::optional<ExactValue> closed_form_per(const FamilySpec& family) {
  validate(family);
  return std::visit(
      Overloaded{
          [](const CompleteK& x) -> std::optional<ExactValue> { return per_complete(x.n); },
          [](const SignedCycle& x) -> std::optional<ExactValue> {
            return per_signed_cycle(x.n, x.delta);
          },
          [](const SignedPath& x) -> std::optional<ExactValue> { return per_signed_path(x.n); },
          [](const TreeFamily& x) -> std::optional<ExactValue> { return per_signed_tree(x.tree); },
          [](const BlockGraphK& x) -> std::optional<ExactValue> { return per_block_graph(x.shape); },
          [](const UnicyclicSingle& x) -> std::optional<ExactValue> {
            return per_unicyclic_single(x.n, x.delta, x.tree);
          },
          [](const UnicyclicMulti& x) -> std::optional<ExactValue> {
            return per_unicyclic_multi(x.n, x.delta, x.trees);
          },
          [](const UnicyclicTwo& x) -> std::optional<ExactValue> {
            return per_unicyclic_two(x.n, x.delta, x.first, x.second, x.distance);
          },
          [](const auto&) -> std::optional<ExactValue> { return std::nullopt; },
      },
      family);
}

}  // namespace blockdet
