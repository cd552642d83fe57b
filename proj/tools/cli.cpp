#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "blockdet/bpartition.hpp"
#include "blockdet/closed_forms.hpp"
#include "blockdet/errors.hpp"
#include "blockdet/graph_io.hpp"
#include "blockdet/oracles.hpp"
#include "blockdet/properties.hpp"

namespace blockdet::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool decomposes(const SignedDigraph& g) {
  if (g.size() == 0 || !is_connected(g)) return false;
  const BlockDecomposition d = block_decompose(g);
  if (d.block_count() < 2) return false;
  for (Vertex v : d.cut_vertices) {
    if (g.has_loop(v)) return false;
  }
  return true;
}

ExactValue evaluate(Method m, bool det, const SignedDigraph& g, const FamilySpec* family) {
  switch (m) {
    case Method::Dense:
      return det ? det_exact(g) : per_exact(g);
    case Method::CycleCover:
      return det ? det_via_cycle_covers(g) : per_via_cycle_covers(g);
    case Method::BPartition:
      return det ? det_via_bpartitions(g) : per_via_bpartitions(g);
    case Method::ClosedForm: {
      if (!family) throw PreconditionError("closed-form needs a --family input");
      const auto v = det ? closed_form_det(*family) : closed_form_per(*family);
      if (!v) {
        throw PreconditionError("no closed-form " + std::string(det ? "det" : "per") + " for " +
                                format_family(*family));
      }
      return *v;
    }
    case Method::Auto:
      break;
  }
  throw PreconditionError("unresolved method");
}

// Independent second opinion: dense when the primary was something else,
// otherwise B-partitions or cycle covers when applicable.
std::optional<Method> cross_method(Method used, bool det, const SignedDigraph& g) {
  if (used != Method::Dense && (det || g.size() <= kPermanentMaxN)) return Method::Dense;
  if (decomposes(g)) return Method::BPartition;
  if (g.size() <= kCycleCoverMaxN) return Method::CycleCover;
  return std::nullopt;
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "bpartition") return Method::BPartition;
  if (name == "dense") return Method::Dense;
  if (name == "cycle-cover") return Method::CycleCover;
  if (name == "closed-form") return Method::ClosedForm;
  throw ParseError("unknown method '" + name + "'");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::BPartition: return "bpartition";
    case Method::Dense: return "dense";
    case Method::CycleCover: return "cycle-cover";
    case Method::ClosedForm: return "closed-form";
  }
  return "?";
}

RunReport compute(const ComputeRequest& request) {
  if (request.file.empty() == request.family.empty()) {
    throw ParseError("give exactly one of --file or --family");
  }
  if (request.quantity != "det" && request.quantity != "per") {
    throw ParseError("quantity must be det or per");
  }
  const bool det = request.quantity == "det";

  std::optional<FamilySpec> family;
  SignedDigraph g;
  RunReport r;
  r.quantity = request.quantity;
  if (!request.file.empty()) {
    g = read_sdg_file(request.file);
    r.input = "file:" + request.file;
  } else {
    family = parse_family(request.family);
    g = gen(*family);
    r.input = "family:" + format_family(*family);
  }

  Method m = request.method;
  if (m == Method::Auto) m = decomposes(g) ? Method::BPartition : Method::Dense;
  r.method = method_name(m);

  const auto start = Clock::now();
  const ExactValue value = evaluate(m, det, g, family ? &*family : nullptr);
  r.elapsed_ms = ms_since(start);
  r.value = to_decimal(value);

  r.cross_check = "skipped";
  if (auto other = cross_method(m, det, g)) {
    const ExactValue second = evaluate(*other, det, g, nullptr);
    r.cross_check = second == value
                        ? "agree: " + method_name(*other)
                        : "mismatch: " + method_name(*other) + " gave " + to_decimal(second);
  }
  if (det && family) {
    if (const auto* nm = std::get_if<NegMixedComplete>(&*family)) {
      r.float_check = neg_mixed_eigen_product(nm->n);
    }
  }
  return r;
}

BlockTreeShape clique_path(int block, int k) {
  BlockTreeShape s;
  s.blocks.push_back({block, 0, 0});
  for (int i = 1; i < k; ++i) {
    s.blocks.push_back({block, 0, 0});
    // Vertex 0 of the previous block is never its anchor (the highest label).
    s.attachments.push_back({static_cast<std::size_t>(i - 1), 0});
  }
  return s;
}

std::vector<BenchRow> bench_block_paths(int block, int max_k, int ryser_max_n) {
  std::vector<BenchRow> rows;
  for (int k = 1; k <= max_k; ++k) {
    const BlockTreeShape shape = clique_path(block, k);
    const SignedDigraph g = gen(BlockGraphK{shape});
    const std::string name = "path-K" + std::to_string(block) + "x" + std::to_string(k);

    auto start = Clock::now();
    const ExactValue via_blocks = per_via_bpartitions(g);
    rows.push_back({name, g.size(), "bpartition", ms_since(start)});

    if (g.size() <= ryser_max_n) {
      start = Clock::now();
      const ExactValue dense = per_exact(g, ryser_max_n);
      const double ms = ms_since(start);
      if (dense != via_blocks) throw std::logic_error("bench: methods disagree on " + name);
      rows.push_back({name, g.size(), "dense", ms});
    } else {
      // Ryser on the first ryser_max_n vertices, doubled per missing vertex.
      std::vector<Vertex> head(ryser_max_n);
      for (int v = 0; v < ryser_max_n; ++v) head[v] = v;
      const SignedDigraph sub = induced_subgraph(g, head).graph;
      start = Clock::now();
      per_exact(sub, ryser_max_n);
      const double ms = ms_since(start) * std::ldexp(1.0, g.size() - ryser_max_n);
      rows.push_back({name, g.size(), "dense-projected", ms});
    }
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact determinants and permanents of signed graphs", "blockdet"};
  app.require_subcommand(1);

  ComputeRequest req;
  std::string method = "auto";
  auto add_compute = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    auto* file = sub->add_option("--file", req.file, "graph in sdg text format");
    auto* fam = sub->add_option("--family", req.family, "family descriptor, e.g. mixed-complete:5");
    file->excludes(fam);
    sub->add_option("--method", method, "auto|bpartition|dense|cycle-cover|closed-form");
    return sub;
  };
  auto* det_cmd = add_compute("det", "determinant of the adjacency matrix");
  auto* per_cmd = add_compute("per", "permanent of the adjacency matrix");

  PropertyConfig check_cfg;
  auto* check_cmd = app.add_subcommand("check", "run the property suite");
  check_cmd->add_option("--max-n", check_cfg.max_n, "largest random graph order");
  check_cmd->add_option("--cases", check_cfg.cases, "cases per randomized property");
  check_cmd->add_option("--seed", check_cfg.seed, "base seed");
  check_cmd->add_option("--threads", check_cfg.threads, "thread cap (also BLOCKDET_THREADS)");
  check_cmd->add_option("--inject-fault", check_cfg.inject_fault,
                        "flip the sign of one property's formula (harness self-test)");

  int bench_block = 8, bench_max_k = 4, bench_ryser = kPermanentMaxN;
  auto* bench_cmd = app.add_subcommand("bench", "per timing: B-partitions vs dense Ryser");
  bench_cmd->add_option("--block", bench_block, "clique size of each block");
  bench_cmd->add_option("--max-k", bench_max_k, "longest block path");
  bench_cmd->add_option("--ryser-max-n", bench_ryser, "largest n run densely");

  std::string gen_family;
  Seed gen_seed = 0;
  int gen_n_max = 8;
  auto* gen_cmd = app.add_subcommand("gen", "print a graph in sdg text format");
  auto* gen_fam = gen_cmd->add_option("--family", gen_family, "family descriptor");
  auto* gen_rand = gen_cmd->add_option("--random-seed", gen_seed, "random block graph seed");
  gen_fam->excludes(gen_rand);
  gen_cmd->add_option("--n-max", gen_n_max, "random block graph size cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (det_cmd->parsed() || per_cmd->parsed()) {
      req.quantity = det_cmd->parsed() ? "det" : "per";
      req.method = parse_method(method);
      const RunReport r = compute(req);
      out << to_json(r).dump(2) << "\n";
      return r.cross_check.rfind("mismatch", 0) == 0 ? kMismatch : kOk;
    }
    if (check_cmd->parsed()) {
      const auto results = run_properties(check_cfg);
      bool ok = true;
      out << std::left << std::setw(22) << "property" << std::right << std::setw(8) << "cases"
          << std::setw(12) << "ms" << "  status\n";
      for (const auto& r : results) {
        out << std::left << std::setw(22) << r.name << std::right << std::setw(8) << r.cases
            << std::setw(12) << std::fixed << std::setprecision(1) << r.elapsed_ms << "  "
            << (r.passed ? "pass" : "FAIL") << "\n";
        ok = ok && r.passed;
      }
      for (const auto& r : results) {
        if (!r.passed) out << "\ncounterexample for " << r.name << ":\n" << r.counterexample << "\n";
      }
      return ok ? kOk : kMismatch;
    }
    if (bench_cmd->parsed()) {
      out << "family,n,method,ms\n";
      for (const auto& row : bench_block_paths(bench_block, bench_max_k, bench_ryser)) {
        out << row.family << "," << row.n << "," << row.method << "," << std::fixed
            << std::setprecision(3) << row.ms << "\n";
      }
      return kOk;
    }
    if (gen_cmd->parsed()) {
      if (!gen_family.empty()) {
        out << format_sdg(gen(parse_family(gen_family)));
      } else {
        const Weight signs[] = {-1, 1};
        out << format_sdg(gen_random_block_graph(gen_seed, gen_n_max, signs));
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidGraph& e) {
    err << "invalid graph: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  }
  return kParse;
}

}  // namespace blockdet::cli
