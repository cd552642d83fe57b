#include "blockdet/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "blockdet/errors.hpp"

namespace blockdet {

namespace {

template <typename Int>
Int parse_int(std::string_view token, int line) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InvalidGraph("line " + std::to_string(line) + ": bad integer '" +
                       std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string format_sdg(const SignedDigraph& g) {
  std::ostringstream out;
  out << "sdg " << g.size() << '\n';
  for (const auto& [key, w] : g.arcs()) {
    auto [u, v] = key;
    const bool paired = u != v && g.weight(v, u) == w;
    if (paired && u > v) continue;
    out << (paired ? "edge " : "arc ") << u << ' ' << v << ' ' << w << '\n';
  }
  return out.str();
}

SignedDigraph parse_sdg(std::string_view text) {
  int n = -1;
  bool loops = false;
  std::vector<Arc> arcs;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_tokens(line);
    if (tok.empty()) continue;

    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "sdg") {
        throw InvalidGraph("line " + std::to_string(line_no) + ": expected 'sdg <n>' header");
      }
      n = parse_int<int>(tok[1], line_no);
      if (n < 0) throw InvalidGraph("line " + std::to_string(line_no) + ": negative n");
      continue;
    }
    if (tok.size() != 4 || (tok[0] != "arc" && tok[0] != "edge")) {
      throw InvalidGraph("line " + std::to_string(line_no) +
                         ": expected 'arc <u> <v> <w>' or 'edge <u> <v> <w>'");
    }
    const Vertex u = parse_int<Vertex>(tok[1], line_no);
    const Vertex v = parse_int<Vertex>(tok[2], line_no);
    const Weight w = parse_int<Weight>(tok[3], line_no);
    if (tok[0] == "edge") {
      if (u == v) throw InvalidGraph("line " + std::to_string(line_no) + ": edge is a loop");
      arcs.push_back({u, v, w});
      arcs.push_back({v, u, w});
    } else {
      loops = loops || u == v;
      arcs.push_back({u, v, w});
    }
  }
  if (n < 0) throw InvalidGraph("missing 'sdg <n>' header");
  return SignedDigraph(n, arcs, loops);
}

SignedDigraph read_sdg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidGraph("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sdg(buf.str());
}

}  // namespace blockdet
