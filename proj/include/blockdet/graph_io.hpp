#pragma once

#include <string>
#include <string_view>

#include "blockdet/graph.hpp"

namespace blockdet {

// Text format, one record per line:
//
//   sdg <n>
//   edge <u> <v> <w>   # undirected: arcs (u,v) and (v,u), both weight w
//   arc <u> <v> <w>    # single directed arc, u == v for a loop
//
// '#' starts a comment. Weights are decimal integers.

/// Canonical text: header, then records in lexicographic arc order, with a
/// symmetric pair of equal weights written once as an `edge` line.
std::string format_sdg(const SignedDigraph& g);

/// Throws InvalidGraph with a line number on any syntax or graph error.
/// Loops in the text make the result loop-permitted.
SignedDigraph parse_sdg(std::string_view text);

SignedDigraph read_sdg_file(const std::string& path);

}  // namespace blockdet
