#include "blockdet/properties.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "blockdet/bpartition.hpp"
#include "blockdet/closed_forms.hpp"
#include "blockdet/errors.hpp"
#include "blockdet/graph_io.hpp"
#include "blockdet/oracles.hpp"

namespace blockdet {

namespace {

struct Failure {
  int n = 0;
  std::string detail;
};

using CaseFn = std::function<std::optional<Failure>(std::size_t index)>;

struct Property {
  std::string name;
  std::size_t cases = 0;
  CaseFn run;
};

constexpr Weight kSigns[] = {-1, 1};

Seed case_seed(Seed base, const std::string& name, std::size_t index) {
  Seed h = base * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL;
  for (unsigned char c : name) h = (h ^ c) * 0x100000001b3ULL;
  h ^= index + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string mismatch(const std::string& what, const ExactValue& got, const ExactValue& want) {
  return what + ": got " + to_decimal(got) + ", expected " + to_decimal(want);
}

Failure graph_failure(const SignedDigraph& g, const std::string& what) {
  return {g.size(), what + "\n" + format_sdg(g)};
}

Failure family_failure(const FamilySpec& f, const std::string& what) {
  return {gen(f).size(), format_family(f) + ": " + what};
}

// Checks a closed form against an oracle for one family instance.
std::optional<Failure> check_family(const FamilySpec& f, const ExactValue& formula,
                                    const ExactValue& oracle, const char* quantity) {
  if (formula == oracle) return std::nullopt;
  return family_failure(f, mismatch(quantity, formula, oracle));
}

template <typename T>
Property grid(std::string name, std::vector<T> items,
              std::function<std::optional<Failure>(const T&)> check) {
  auto shared = std::make_shared<std::vector<T>>(std::move(items));
  const std::size_t count = shared->size();
  return {std::move(name), count,
          [shared, check](std::size_t i) { return check((*shared)[i]); }};
}

std::vector<Property> build_properties(const PropertyConfig& cfg) {
  const int max_n = std::max(2, cfg.max_n);
  const std::size_t cases = cfg.cases;
  const Seed seed = cfg.seed;
  const std::string fault = cfg.inject_fault;
  // Sign flip applied to a formula value when its property is the fault target.
  auto tweak = [fault](const std::string& name) {
    return [flip = (fault == name)](ExactValue v) { return flip ? ExactValue(-v) : v; };
  };

  std::vector<Property> props;

  props.push_back({"oracle_triangle", cases, [=](std::size_t i) -> std::optional<Failure> {
                     const Seed s = case_seed(seed, "oracle_triangle", i);
                     const int n = static_cast<int>(s % std::min(8, max_n)) + 1;
                     const SignedDigraph g = gen_random_digraph(s, n, 0.5, kSigns);
                     const ExactValue d = det_exact(g), p = per_exact(g);
                     const ExactValue dc = det_via_cycle_covers(g), pc = per_via_cycle_covers(g);
                     if (dc != d) return graph_failure(g, mismatch("det cycle covers", dc, d));
                     if (pc != p) return graph_failure(g, mismatch("per cycle covers", pc, p));
                     return std::nullopt;
                   }});

  props.push_back({"transpose_switching", cases, [=](std::size_t i) -> std::optional<Failure> {
                     const Seed s = case_seed(seed, "transpose_switching", i);
                     const int n = static_cast<int>(s % std::min(10, max_n)) + 1;
                     const SignedDigraph g = gen_random_digraph(s, n, 0.5, kSigns);
                     const SignedDigraph t = transpose(g);
                     const SignedDigraph w = apply_switching(g, gen_random_signature(s, n));
                     const ExactValue d = det_exact(g), p = per_exact(g);
                     if (det_exact(t) != d) return graph_failure(g, "det changes under transpose");
                     if (per_exact(t) != p) return graph_failure(g, "per changes under transpose");
                     if (det_exact(w) != d) return graph_failure(g, "det changes under switching");
                     if (per_exact(w) != p) return graph_failure(g, "per changes under switching");
                     return std::nullopt;
                   }});

  props.push_back({"block_structure", cases, [=](std::size_t i) -> std::optional<Failure> {
                     const Seed s = case_seed(seed, "block_structure", i);
                     const SignedDigraph g = gen_random_block_graph(s, max_n, kSigns);
                     const BlockDecomposition d = block_decompose(g);
                     std::size_t total = 0, extra = 0;
                     for (const auto& b : d.blocks) total += b.size();
                     for (const auto& [v, bs] : d.incidence) extra += bs.size() - 1;
                     if (total != g.size() + extra) {
                       return graph_failure(g, "block sizes do not add up");
                     }
                     for (std::size_t a = 0; a < d.blocks.size(); ++a) {
                       for (std::size_t b = a + 1; b < d.blocks.size(); ++b) {
                         std::vector<Vertex> common;
                         std::set_intersection(d.blocks[a].begin(), d.blocks[a].end(),
                                               d.blocks[b].begin(), d.blocks[b].end(),
                                               std::back_inserter(common));
                         if (common.size() > 1 ||
                             (common.size() == 1 && !d.is_cut_vertex(common[0]))) {
                           return graph_failure(g, "blocks overlap illegally");
                         }
                       }
                     }
                     // Block-cut tree: blocks + cut vertices as nodes, one
                     // edge per incidence; connected, so a tree iff edges = nodes - 1.
                     if (!d.blocks.empty() &&
                         extra + d.cut_vertices.size() != d.blocks.size() + d.cut_vertices.size() - 1) {
                       return graph_failure(g, "block-cut incidence is not a tree");
                     }
                     if (underlying(underlying(g)) != underlying(g)) {
                       return graph_failure(g, "underlying is not idempotent");
                     }
                     std::vector<Vertex> all(g.size());
                     for (int v = 0; v < g.size(); ++v) all[v] = v;
                     if (induced_subgraph(g, all).graph != g) {
                       return graph_failure(g, "induced subgraph on V(g) differs from g");
                     }
                     return std::nullopt;
                   }});

  props.push_back({"bpartition_soundness", cases, [=](std::size_t i) -> std::optional<Failure> {
                     const Seed s = case_seed(seed, "bpartition_soundness", i);
                     RandomBlockGraphOptions opt;
                     opt.n_max = max_n;
                     opt.weights = {-1, 1};
                     opt.directed = i % 2 == 1;
                     const SignedDigraph g = gen_random_block_graph(s, opt);
                     const BlockDecomposition d = block_decompose(g);
                     const ExactValue db = det_via_bpartitions(g, d), de = det_exact(g);
                     if (db != de) return graph_failure(g, mismatch("det bpartition", db, de));
                     if (g.size() <= kPermanentMaxN) {
                       const ExactValue pb = per_via_bpartitions(g, d), pe = per_exact(g);
                       if (pb != pe) return graph_failure(g, mismatch("per bpartition", pb, pe));
                     }
                     return std::nullopt;
                   }});

  props.push_back({"alpha_bijection", cases, [=](std::size_t i) -> std::optional<Failure> {
                     const Seed s = case_seed(seed, "alpha_bijection", i);
                     const SignedDigraph g = gen_random_block_graph(s, std::min(max_n, 10), kSigns);
                     const BlockDecomposition d = block_decompose(g);
                     const auto parts = enumerate_bpartitions(g, d);
                     if (parts.size() != bpartition_count(d)) {
                       return graph_failure(g, "partition count differs from product of degrees");
                     }
                     auto via_bijection = enumerate_alpha_tuples(d);
                     auto via_conditions = enumerate_alpha_tuples_by_conditions(d);
                     std::sort(via_bijection.begin(), via_bijection.end());
                     std::sort(via_conditions.begin(), via_conditions.end());
                     if (std::adjacent_find(via_bijection.begin(), via_bijection.end()) !=
                         via_bijection.end()) {
                       return graph_failure(g, "bijection produced a repeated tuple");
                     }
                     if (via_bijection != via_conditions) {
                       return graph_failure(g, "tuple sets differ between bijection and conditions");
                     }
                     return std::nullopt;
                   }});

  props.push_back({"cut_vertex_split", cases, [=](std::size_t i) -> std::optional<Failure> {
                     const Seed s = case_seed(seed, "cut_vertex_split", i);
                     const SignedDigraph g = gen_random_block_graph(s, max_n, kSigns);
                     const BlockDecomposition d = block_decompose(g);
                     const ExactValue de = det_exact(g);
                     const ExactValue pe = g.size() <= 14 ? per_exact(g) : ExactValue(0);
                     for (Vertex v : d.cut_vertices) {
                       // Every component of g - v, with v, is a valid H.
                       std::vector<Vertex> rest;
                       for (int u = 0; u < g.size(); ++u)
                         if (u != v) rest.push_back(u);
                       const auto sub = induced_subgraph(g, rest);
                       for (const auto& comp : connected_components(sub.graph)) {
                         std::vector<Vertex> h{v};
                         for (Vertex c : comp) h.push_back(sub.original[c]);
                         const ExactValue ds = split_at_cut_vertex_det(g, h, v);
                         if (ds != de) return graph_failure(g, mismatch("det split", ds, de));
                         if (g.size() <= 14) {
                           const ExactValue ps = split_at_cut_vertex_per(g, h, v);
                           if (ps != pe) return graph_failure(g, mismatch("per split", ps, pe));
                         }
                       }
                     }
                     return std::nullopt;
                   }});

  props.push_back({"balance_equivalence", cases, [=](std::size_t i) -> std::optional<Failure> {
                     const Seed s = case_seed(seed, "balance_equivalence", i);
                     const SignedDigraph g = gen_switched_balanced(s, max_n);
                     const BalanceResult b = is_balanced(g);
                     if (!b.balanced) return graph_failure(g, "switched graph reported unbalanced");
                     const SignedDigraph w = apply_switching(g, b.signature);
                     for (const auto& [key, weight] : w.arcs()) {
                       if (weight != 1) return graph_failure(g, "signature leaves a negative edge");
                     }
                     const SignedDigraph u = underlying(g);
                     if (det_exact(g) != det_exact(u)) return graph_failure(g, "det differs from |G|");
                     if (g.size() <= 14 && per_exact(g) != per_exact(u)) {
                       return graph_failure(g, "per differs from |G|");
                     }
                     return std::nullopt;
                   }});

  props.push_back({"unbalanced_witness", cases, [=](std::size_t i) -> std::optional<Failure> {
                     const Seed s = case_seed(seed, "unbalanced_witness", i);
                     const SignedDigraph g = gen_planted_unbalanced(s, std::max(3, max_n));
                     const BalanceResult b = is_balanced(g);
                     if (b.balanced) return graph_failure(g, "planted negative cycle missed");
                     const auto& c = b.unbalanced_cycle;
                     std::set<Vertex> distinct(c.begin(), c.end());
                     if (c.size() < 3 || distinct.size() != c.size()) {
                       return graph_failure(g, "witness is not a simple cycle");
                     }
                     try {
                       if (cycle_sign(g, c) != -1) return graph_failure(g, "witness cycle is positive");
                     } catch (const Error& e) {
                       return graph_failure(g, std::string("witness is not a cycle: ") + e.what());
                     }
                     return std::nullopt;
                   }});

  // Closed-form grids ---------------------------------------------------------

  {
    auto t = tweak("complete_cycle_path");
    std::vector<FamilySpec> items;
    for (int n = 0; n <= max_n; ++n) items.push_back(CompleteK{n});
    for (int n = 3; n <= max_n; ++n) {
      items.push_back(SignedCycle{n, 1});
      items.push_back(SignedCycle{n, -1});
    }
    for (int n = 0; n <= max_n; ++n) items.push_back(SignedPath{n});
    props.push_back(grid<FamilySpec>(
        "complete_cycle_path", std::move(items),
        [t](const FamilySpec& f) -> std::optional<Failure> {
          const SignedDigraph g = gen(f);
          if (auto e = check_family(f, t(*closed_form_det(f)), det_exact(g), "det")) return e;
          return check_family(f, t(*closed_form_per(f)), per_exact(g), "per");
        }));
  }

  props.push_back({"signed_trees", cases, [=, t = tweak("signed_trees")](std::size_t i)
                                               -> std::optional<Failure> {
                     const Seed s = case_seed(seed, "signed_trees", i);
                     const FamilySpec f = TreeFamily{gen_random_signed_tree(s, 1 + s % max_n)};
                     const SignedDigraph g = gen(f);
                     if (auto e = check_family(f, t(*closed_form_det(f)), det_exact(g), "det")) return e;
                     return check_family(f, t(*closed_form_per(f)), per_exact(g), "per");
                   }});

  {
    auto t = tweak("block_graph_grid");
    std::vector<BlockTreeShape> shapes = enumerate_clique_tree_shapes(std::min(max_n, 12), 4);
    props.push_back(grid<BlockTreeShape>(
        "block_graph_grid", std::move(shapes),
        [t](const BlockTreeShape& s) -> std::optional<Failure> {
          const FamilySpec f = BlockGraphK{s};
          const SignedDigraph g = gen(f);
          if (auto e = check_family(f, t(det_block_graph(s)), det_exact(g), "det")) return e;
          return check_family(f, t(per_block_graph(s)), per_exact(g), "per");
        }));
  }

  {
    auto t = tweak("neg_clique");
    std::vector<FamilySpec> items;
    for (int n = 3; n <= std::min(max_n, 10); ++n)
      for (int r = 2; r <= n - 1; ++r)
        for (int m = 1; m * r <= n - 1; ++m) items.push_back(NegCliqueK{n, m, r});
    for (std::size_t i = 0; i < cases; ++i) {
      items.push_back(NegCliqueBlockGraph{
          gen_random_neg_clique_shape(case_seed(seed, "neg_clique", i), 3, std::min(max_n + 1, 13))});
    }
    props.push_back(grid<FamilySpec>("neg_clique", std::move(items),
                                     [t](const FamilySpec& f) -> std::optional<Failure> {
                                       return check_family(f, t(*closed_form_det(f)),
                                                           det_exact(gen(f)), "det");
                                     }));
  }

  props.push_back({"unicyclic", cases, [=, t = tweak("unicyclic")](std::size_t i)
                                            -> std::optional<Failure> {
                     const Seed s = case_seed(seed, "unicyclic", i);
                     const int n = 3 + static_cast<int>(s % 6);
                     const int delta = (s >> 8) % 2 ? 1 : -1;
                     auto tree = [&](int k) {
                       const Seed ts = case_seed(s, "tree", k);
                       return gen_random_signed_tree(ts, 1 + static_cast<int>(ts % 5));
                     };
                     const SignedTree a = tree(0), b = tree(1), c = tree(2);
                     const int l = 1 + static_cast<int>((s >> 16) % (n / 2));
                     const FamilySpec fams[] = {UnicyclicSingle{n, delta, a},
                                                UnicyclicMulti{n, delta, {a, b, c}},
                                                UnicyclicTwo{n, delta, a, b, l}};
                     for (const auto& f : fams) {
                       const SignedDigraph g = gen(f);
                       if (auto e = check_family(f, t(*closed_form_det(f)), det_exact(g), "det")) return e;
                       if (auto e = check_family(f, t(*closed_form_per(f)), per_exact(g), "per")) return e;
                     }
                     const FamilySpec f = fams[0];
                     const SignedDigraph g = gen(f);
                     if (auto e = check_family(f, t(det_unicyclic_single_by_cases(n, delta, a)),
                                               det_exact(g), "det by cases"))
                       return e;
                     return check_family(f, t(per_unicyclic_single_by_cases(n, delta, a)), per_exact(g),
                                         "per by cases");
                   }});

  {
    auto t = tweak("mixed");
    std::vector<FamilySpec> items;
    for (int n = 4; n <= std::max(4, max_n); ++n) items.push_back(MixedComplete{n});
    for (int a = 4; a <= 7; ++a) {
      items.push_back(MixedStar{{a}});
      for (int b = a; b <= 7; ++b) {
        items.push_back(MixedStar{{a, b}});
        for (int c = b; c <= 7; ++c) items.push_back(MixedStar{{a, b, c}});
      }
    }
    props.push_back(grid<FamilySpec>(
        "mixed", std::move(items), [t](const FamilySpec& f) -> std::optional<Failure> {
          const SignedDigraph g = gen(f);
          if (auto e = check_family(f, t(*closed_form_det(f)), det_exact(g), "det")) return e;
          if (const auto* mc = std::get_if<MixedComplete>(&f)) {
            const ExactValue want = t(det_mixed_complete_minus_v(mc->n));
            for (Vertex v = 0; v < mc->n; ++v) {
              std::vector<Vertex> keep;
              for (Vertex u = 0; u < mc->n; ++u)
                if (u != v) keep.push_back(u);
              const ExactValue got = det_exact(induced_subgraph(g, keep).graph);
              if (got != want) return family_failure(f, mismatch("det minus v", want, got));
            }
            const auto prod = mixed_cycle_eigen_product(mc->n);
            const double target = mc->n % 2 ? 1.0 : 0.0;
            if (std::abs(prod - std::complex<double>(target, 0.0)) > 1e-9) {
              return family_failure(f, "eigenvalue product off its integer value");
            }
          }
          return std::nullopt;
        }));
  }

  {
    auto t = tweak("neg_mixed");
    std::vector<FamilySpec> items;
    for (int n = 4; n <= std::max(4, max_n); ++n) items.push_back(NegMixedComplete{n});
    for (int a = 4; a <= 6; ++a) {
      items.push_back(NegMixedStar{{a}});
      for (int b = a; b <= 6; ++b) {
        items.push_back(NegMixedStar{{a, b}});
        for (int c = b; c <= 6; ++c) items.push_back(NegMixedStar{{a, b, c}});
      }
    }
    props.push_back(grid<FamilySpec>(
        "neg_mixed", std::move(items), [t](const FamilySpec& f) -> std::optional<Failure> {
          const SignedDigraph g = gen(f);
          if (auto e = check_family(f, t(*closed_form_det(f)), det_exact(g), "det")) return e;
          if (const auto* mc = std::get_if<NegMixedComplete>(&f)) {
            const NegMixedDeterminant d = det_neg_mixed_complete(mc->n);
            const double exact = d.exact.convert_to<double>();
            if (std::abs(d.approx - exact) > 1e-6 * std::max(1.0, std::abs(exact))) {
              return family_failure(f, "float product off the exact determinant");
            }
            const ExactValue want = t(det_neg_mixed_complete_minus_v(mc->n));
            for (Vertex v = 0; v < mc->n; ++v) {
              std::vector<Vertex> keep;
              for (Vertex u = 0; u < mc->n; ++u)
                if (u != v) keep.push_back(u);
              const ExactValue got = det_exact(induced_subgraph(g, keep).graph);
              if (got != want) return family_failure(f, mismatch("det minus v", want, got));
            }
          }
          return std::nullopt;
        }));
  }

  return props;
}

PropertyResult run_property(const Property& p, unsigned threads) {
  PropertyResult r;
  r.name = p.name;
  r.cases = p.cases;
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::optional<Failure>> results(p.cases);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < p.cases; i = next++) {
      try {
        results[i] = p.run(i);
      } catch (const std::exception& e) {
        results[i] = Failure{0, std::string("case ") + std::to_string(i) + " threw: " + e.what()};
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(p.cases)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // Smallest failing input, ties broken by case index.
  const Failure* best = nullptr;
  for (const auto& f : results) {
    if (f && (!best || f->n < best->n)) best = &*f;
  }
  if (best) {
    r.passed = false;
    r.counterexample = best->detail;
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BLOCKDET_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  if (requested > 0) n = std::min(n, requested);
  return n;
}

std::vector<std::string> property_names() {
  PropertyConfig cfg;
  cfg.cases = 0;
  cfg.max_n = 4;
  std::vector<std::string> names;
  for (const auto& p : build_properties(cfg)) names.push_back(p.name);
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<std::string> faultable_properties() {
  return {"block_graph_grid", "complete_cycle_path", "mixed", "neg_clique",
          "neg_mixed",        "signed_trees",        "unicyclic"};
}

std::vector<PropertyResult> run_properties(const PropertyConfig& config) {
  if (!config.inject_fault.empty()) {
    const auto names = faultable_properties();
    if (std::find(names.begin(), names.end(), config.inject_fault) == names.end()) {
      throw PreconditionError("no formula to fault in property '" + config.inject_fault + "'");
    }
  }
  const unsigned threads = resolve_threads(config.threads);
  auto props = build_properties(config);
  std::sort(props.begin(), props.end(),
            [](const Property& a, const Property& b) { return a.name < b.name; });
  std::vector<PropertyResult> out;
  for (const auto& p : props) out.push_back(run_property(p, threads));
  return out;
}

}  // namespace blockdet
