#include "blockdet/oracles.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "blockdet/errors.hpp"

namespace blockdet {

namespace {

using Int128 = __int128;

ExactValue to_exact(Int128 v) {
  const bool negative = v < 0;
  // -(INT128_MIN) cannot occur: accumulation bound keeps |v| < 2^125.
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-v)
                                   : static_cast<unsigned __int128>(v);
  ExactValue out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag & ~std::uint64_t{0});
  return negative ? ExactValue(-out) : out;
}

template <typename Acc>
Acc ryser(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Acc> row_sum(n, Acc(0));
  Acc total(0);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    if (gray & bit) {
      for (int i = 0; i < n; ++i) row_sum[i] += a[i][col];
    } else {
      for (int i = 0; i < n; ++i) row_sum[i] -= a[i][col];
    }
    Acc prod(1);
    for (int i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    if (std::popcount(gray) & 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return (n & 1) ? Acc(-total) : total;
}

void check_square(const IntMatrix& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) throw PreconditionError("matrix is not square");
  }
}

}  // namespace

ExactValue det_exact(const IntMatrix& a) {
  check_square(a);
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<ExactValue>> m(n, std::vector<ExactValue>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  }
  int sign = 1;
  ExactValue prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : ExactValue(-m[n - 1][n - 1]);
}

ExactValue det_exact(const SignedDigraph& g) { return det_exact(g.adjacency()); }

ExactValue per_exact(const IntMatrix& a, int max_n) {
  check_square(a);
  const int n = static_cast<int>(a.size());
  if (n > max_n) {
    throw PreconditionError("permanent of order " + std::to_string(n) +
                            " exceeds the bound " + std::to_string(max_n));
  }
  if (n == 0) return 1;
  if (n > 62) throw PreconditionError("permanent order beyond 62 is not supported");
  Weight max_abs = 0;
  for (const auto& row : a) {
    Weight row_abs = 0;
    for (Weight x : row) row_abs += x < 0 ? -x : x;
    max_abs = std::max(max_abs, row_abs);
  }
  if (max_abs == 0) return 0;
  // Every row sum is bounded by max_abs, each product by max_abs^n, and the
  // total by 2^n times that.
  const double bits = n * std::log2(static_cast<double>(max_abs)) + n + 2;
  if (bits < 120.0) return to_exact(ryser<Int128>(a));
  return ryser<ExactValue>(a);
}

ExactValue per_exact(const SignedDigraph& g, int max_n) {
  if (g.size() > max_n) {
    throw PreconditionError("permanent of order " + std::to_string(g.size()) +
                            " exceeds the bound " + std::to_string(max_n));
  }
  return per_exact(g.adjacency(), max_n);
}

namespace {

class CoverWalker {
 public:
  CoverWalker(const SignedDigraph& g, const std::function<void(const CycleCover&)>& visit)
      : n_(g.size()), adj_(g.adjacency()), out_(n_), covered_(n_, false), visit_(visit) {
    for (const auto& [key, w] : g.arcs()) out_[key.first].push_back(key.second);
  }

  void run() {
    cover_.weight = 1;
    next_cycle();
  }

 private:
  void next_cycle() {
    Vertex start = 0;
    while (start < n_ && covered_[start]) ++start;
    if (start == n_) {
      visit_(cover_);
      return;
    }
    covered_[start] = true;
    path_.push_back(start);
    extend(start, start);
    path_.pop_back();
    covered_[start] = false;
  }

  void extend(Vertex start, Vertex v) {
    for (Vertex w : out_[v]) {
      if (w == start) {
        const ExactValue saved = cover_.weight;
        cover_.weight *= adj_[v][w];
        cover_.cycles.push_back(path_);
        next_cycle();
        cover_.cycles.pop_back();
        cover_.weight = saved;
      } else if (w > start && !covered_[w]) {
        const ExactValue saved = cover_.weight;
        cover_.weight *= adj_[v][w];
        covered_[w] = true;
        path_.push_back(w);
        extend(start, w);
        path_.pop_back();
        covered_[w] = false;
        cover_.weight = saved;
      }
    }
  }

  int n_;
  IntMatrix adj_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<bool> covered_;
  std::vector<Vertex> path_;
  CycleCover cover_;
  const std::function<void(const CycleCover&)>& visit_;
};

void check_cover_bound(const SignedDigraph& g, int max_n) {
  if (g.size() > max_n) {
    throw PreconditionError("cycle-cover enumeration of order " + std::to_string(g.size()) +
                            " exceeds the bound " + std::to_string(max_n));
  }
}

}  // namespace

void for_each_cycle_cover(const SignedDigraph& g,
                          const std::function<void(const CycleCover&)>& visit, int max_n) {
  check_cover_bound(g, max_n);
  CoverWalker(g, visit).run();
}

std::vector<CycleCover> enumerate_cycle_covers(const SignedDigraph& g, int max_n) {
  std::vector<CycleCover> out;
  for_each_cycle_cover(g, [&](const CycleCover& c) { out.push_back(c); }, max_n);
  return out;
}

ExactValue det_via_cycle_covers(const SignedDigraph& g, int max_n) {
  ExactValue sum = 0;
  const std::size_t n = static_cast<std::size_t>(g.size());
  for_each_cycle_cover(
      g,
      [&](const CycleCover& c) {
        if ((n + c.cycle_count()) % 2 == 0) {
          sum += c.weight;
        } else {
          sum -= c.weight;
        }
      },
      max_n);
  return sum;
}

ExactValue per_via_cycle_covers(const SignedDigraph& g, int max_n) {
  ExactValue sum = 0;
  for_each_cycle_cover(g, [&](const CycleCover& c) { sum += c.weight; }, max_n);
  return sum;
}

}  // namespace blockdet
