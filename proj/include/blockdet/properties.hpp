#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blockdet/generators.hpp"

namespace blockdet {

// Randomized and grid checks of every identity the library relies on.
// Used by `blockdet check`; each property reports the smallest failing
// input it met.

struct PropertyConfig {
  int max_n = 12;            // cap for random graph orders
  std::size_t cases = 100;   // random cases per randomized property
  Seed seed = 1;
  unsigned threads = 0;      // 0: BLOCKDET_THREADS or hardware concurrency
  std::string inject_fault;  // property name whose formula gets its sign flipped
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  double elapsed_ms = 0.0;
  std::string counterexample;  // empty when passed
};

std::vector<std::string> property_names();

/// Properties whose closed-form value can be sign-flipped via inject_fault.
std::vector<std::string> faultable_properties();

/// Results sorted by property name. Deterministic for a fixed config,
/// whatever the thread count.
std::vector<PropertyResult> run_properties(const PropertyConfig& config);

/// Thread count from BLOCKDET_THREADS (if set and positive), else the
/// hardware concurrency, capped by `requested` when that is nonzero.
unsigned resolve_threads(unsigned requested);

}  // namespace blockdet
