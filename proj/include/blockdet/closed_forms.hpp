#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "blockdet/bpartition.hpp"
#include "blockdet/exact_value.hpp"
#include "blockdet/families.hpp"

namespace blockdet {

// Complete graphs ------------------------------------------------------------

/// (-1)^(n-1) (n-1); the 0x0 case gives 1.
ExactValue det_complete(int n);
/// Derangement number D_n via D_n = (n-1)(D_{n-1} + D_{n-2}).
ExactValue per_complete(int n);

// Signed cycles, paths, trees ------------------------------------------------

/// delta is the sign of the cycle. det: 2 - 2 delta (n = 0 mod 4),
/// -2 - 2 delta (n = 2 mod 4), 2 delta (n odd).
ExactValue det_signed_cycle(int n, int delta);
/// 2 + 2 delta for even n (two Hamiltonian covers of weight delta plus two
/// perfect-matching covers of weight +1), 2 delta for odd n.
ExactValue per_signed_cycle(int n, int delta);

ExactValue det_signed_path(int n);
ExactValue per_signed_path(int n);

/// Greedy leaf matching: a leaf is matched to its neighbour, both removed.
bool has_perfect_matching(const SignedTree& t);
/// The tree with one extra vertex joined to its root (the "{T, v}" graph).
SignedTree with_root_anchor(const SignedTree& t);
/// (-1)^(m/2) if the tree has a perfect matching, else 0.
ExactValue det_signed_tree(const SignedTree& t);
ExactValue per_signed_tree(const SignedTree& t);

// Block graphs ---------------------------------------------------------------

/// Part-size tuples of the shape's graph, indexed by shape block order.
std::vector<AlphaTuple> shape_alpha_tuples(const BlockTreeShape& shape);

/// (-1)^(n-k) sum over tuples of prod (alpha_i - 1). All blocks positive.
ExactValue det_block_graph(const BlockTreeShape& shape);
/// sum over tuples of prod D_{alpha_i}. All blocks positive.
ExactValue per_block_graph(const BlockTreeShape& shape);

/// det K_n^{m,r} =
///   (1-2r)^(m-1) (-1)^(n-mr-1) (n(1-2r) + 2r(1 + m(r-1)) - 1),
/// for m >= 1, r >= 2, mr <= n-1.
ExactValue det_neg_clique_complete(int n, int m, int r);

/// (-1)^(n-k) sum over tuples of prod_i (1-2r_i)^(m_i-1) (-1)^(m_i r_i)
/// (alpha_i(1-2r_i) + 2r_i(1 + m_i(r_i-1)) - 1). A block with m_i = 0
/// contributes alpha_i - 1 (the exact quotient of that expression).
ExactValue det_neg_clique_block_graph(const BlockTreeShape& shape);

// Unicyclic graphs -----------------------------------------------------------

/// det(C_n) det(T) + det(P_{n-1}) det({T, v}).
ExactValue det_unicyclic_single(int n, int delta, const SignedTree& tree);
ExactValue per_unicyclic_single(int n, int delta, const SignedTree& tree);

enum class UnicyclicCase {
  EvenNoMatching,     // n even, T has no perfect matching: 0
  EvenTreeMatching,   // n even, T matched: (-1)^(m/2) (-2 delta + 2 (-1)^(n/2))
  OddAnchoredMatching,  // n odd, {T, v} matched: (-1)^((m+n)/2)
  OddTreeMatching,    // n odd, T matched: 2 delta (-1)^(m/2)
  OddNoMatching,      // n odd, neither matched: 0
};

UnicyclicCase classify_unicyclic(int n, const SignedTree& tree);

/// The case table above, evaluated without the two-term split.
ExactValue det_unicyclic_single_by_cases(int n, int delta, const SignedTree& tree);
/// Case table for the permanent; even matched case is 2 + 2 delta.
ExactValue per_unicyclic_single_by_cases(int n, int delta, const SignedTree& tree);

/// det(C_n) prod det(T_i) + det(P_{n-1}) sum_i det({T_i, v}) prod_{j != i} det(T_j).
ExactValue det_unicyclic_multi(int n, int delta, const std::vector<SignedTree>& trees);
ExactValue per_unicyclic_multi(int n, int delta, const std::vector<SignedTree>& trees);

/// Trees on two cycle vertices at distance l (1 <= l <= n/2):
///   det U(C_n, T_2) det T_1
///   + det{T_1, v_1} det{T_2, v_{l+1}} det P_{l-1} det P_{n-l-1}
///   + det{T_1, v_1} det T_2 det P_{n-1}.
ExactValue det_unicyclic_two(int n, int delta, const SignedTree& first,
                             const SignedTree& second, int distance);
ExactValue per_unicyclic_two(int n, int delta, const SignedTree& first,
                             const SignedTree& second, int distance);

// Mixed complete graphs ------------------------------------------------------

/// prod_{i=1}^{n-1} (-1 - w^i) with w = exp(2 pi i / n), in floating point.
std::complex<double> mixed_cycle_eigen_product(int n);

/// 0 for even n, n - 2 for odd n (n > 3).
ExactValue det_mixed_complete(int n);
/// (-1)^n floor((n-2)/2), for any deleted vertex (n > 3).
ExactValue det_mixed_complete_minus_v(int n);
/// sum over odd n_i of det(mK_{n_i}) prod_{j != i} det(mK_{n_j} \ v).
ExactValue det_mixed_star(const std::vector<int>& sizes);

struct NegMixedDeterminant {
  double approx = 0.0;  // trigonometric eigenvalue product
  ExactValue exact;     // det of J - I - 2Q - Q^(n-1)
};

/// Float leg: (n-4) prod_{i=1}^{(n-1)/2} (2 + 8c^2 + 6c) for odd n,
/// 2(n-4) prod_{i=1}^{(n-2)/2} (...) for even n, c = cos(2 pi i / n),
/// multiplied pairwise. Exact leg from the generated matrix.
NegMixedDeterminant det_neg_mixed_complete(int n);
double neg_mixed_eigen_product(int n);

/// Recurrences of the tridiagonal part T (diagonal and subdiagonal -1,
/// superdiagonal -2) of the negative mixed complete graph minus a vertex.
struct TridiagState {
  int order = 0;               // m
  std::vector<ExactValue> f;   // f[0..m], f_i = -f_{i-1} - 2 f_{i-2}, f_0 = 1, f_{-1} = 0
  std::vector<ExactValue> g;   // g[0..m], g_0 = 1, g_1 = -1, same recurrence
  std::vector<ExactValue> h;   // h[1..m+1] (h[0] unused), h_{m+1} = 1, h_m = -1,
                               // h_i = -h_{i+1} - 2 h_{i+2}
};

TridiagState tridiag_state(int m);

struct TridiagEvaluation {
  ExactValue g_m;
  ExactValue bracket;  // sum_{i<=j} 2^(j-i) g_{i-1} h_{j+1} + sum_{j<i} g_{j-1} h_{i+1}
  ExactValue value;    // g_m (1 + bracket / g_m), asserted integral
};

/// Matrix determinant lemma on uu^T + T with m = n - 1.
TridiagEvaluation evaluate_neg_mixed_minus_v(int n);
ExactValue det_neg_mixed_complete_minus_v(int n);

/// sum_i det(neg mK_{n_i}) prod_{j != i} det(neg mK_{n_j} \ v).
ExactValue det_neg_mixed_star(const std::vector<int>& sizes);

// Dispatch -------------------------------------------------------------------

/// Closed-form determinant / permanent of a family instance, or nullopt when
/// no formula exists for that family and quantity.
std::optional<ExactValue> closed_form_det(const FamilySpec& family);
std::optional<ExactValue> closed_form_per(const FamilySpec& family);

}  // namespace blockdet
