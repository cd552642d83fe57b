#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "blockdet/generators.hpp"
#include "report.hpp"

namespace blockdet::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kParse = 2, kPrecondition = 3 };

// Methods accepted by det/per.
enum class Method { Auto, BPartition, Dense, CycleCover, ClosedForm };

Method parse_method(const std::string& name);
std::string method_name(Method m);

struct ComputeRequest {
  std::string file;    // exactly one of file / family
  std::string family;
  std::string quantity = "det";
  Method method = Method::Auto;
};

/// Runs one computation plus a cross-check by an independent method.
/// Throws the library's Error subclasses on bad input.
RunReport compute(const ComputeRequest& request);

struct BenchRow {
  std::string family;
  int n = 0;
  std::string method;
  double ms = 0.0;
};

/// Permanent of a path of k K_b blocks for k = 1..max_k, by B-partitions and
/// by dense Ryser (measured up to ryser_max_n, doubled per vertex beyond).
std::vector<BenchRow> bench_block_paths(int block, int max_k, int ryser_max_n);

/// Shape of a path of k copies of K_b, each hanging on a fresh
/// vertex of the previous block.
BlockTreeShape clique_path(int block, int k);

/// Entry point shared by main() and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockdet::cli
