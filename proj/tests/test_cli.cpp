#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using namespace blockdet;
using namespace blockdet::cli;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json report_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

const std::string kBowtie = std::string(BLOCKDET_TEST_DATA) + "/bowtie.sdg";

}  // namespace

TEST_CASE("det and per reports") {
  auto o = invoke({"det", "--family", "mixed-complete:5", "--method", "closed-form"});
  REQUIRE(o.code == kOk);
  auto j = report_of(o);
  CHECK(j["value"] == "3");
  CHECK(j["method"] == "closed-form");
  CHECK(j["cross_check"] == "agree: dense");

  o = invoke({"per", "--family", "complete:4", "--method", "dense"});
  REQUIRE(o.code == kOk);
  CHECK(report_of(o)["value"] == "9");

  o = invoke({"det", "--file", kBowtie, "--method", "bpartition"});
  REQUIRE(o.code == kOk);
  CHECK(report_of(o)["value"] == "-4");

  o = invoke({"per", "--file", kBowtie});
  REQUIRE(o.code == kOk);
  CHECK(report_of(o)["method"] == "bpartition");
  CHECK(report_of(o)["value"] == "4");

  o = invoke({"det", "--family", "complete:5"});
  CHECK(report_of(o)["method"] == "dense");
}

TEST_CASE("negative mixed complete carries a float check") {
  const auto o = invoke({"det", "--family", "neg-mixed-complete:6", "--method", "closed-form"});
  REQUIRE(o.code == kOk);
  const auto j = report_of(o);
  CHECK(j["value"] == "28");
  CHECK(j["float_check"].get<double>() == doctest::Approx(28.0).epsilon(1e-9));
}

TEST_CASE("all applicable methods agree") {
  const std::vector<std::string> families = {"complete:6", "cycle:8,-1", "block-graph:3;4@0.1;3@1.0",
                                             "unicyclic:5,1;t0,0", "mixed-star:5,4"};
  for (const auto& f : families) {
    std::set<std::string> values;
    for (const char* m : {"auto", "bpartition", "dense", "cycle-cover", "closed-form"}) {
      const auto o = invoke({"det", "--family", f, "--method", m});
      REQUIRE_MESSAGE(o.code == kOk, f << " " << m << ": " << o.err);
      values.insert(report_of(o)["value"].get<std::string>());
    }
    CHECK_MESSAGE(values.size() == 1, f);
  }
}

TEST_CASE("report JSON round-trips") {
  RunReport r{"family:complete:4", "per", "dense", "9", 0.125, "agree: cycle-cover", std::nullopt};
  CHECK(report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
  r.float_check = 27.999999999999993;
  r.elapsed_ms = 1.0 / 3.0;
  CHECK(report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);

  const auto o = invoke({"det", "--family", "neg-mixed-complete:7", "--method", "closed-form"});
  const auto parsed = report_from_json(nlohmann::json::parse(o.out));
  CHECK(to_json(parsed).dump(2) + "\n" == o.out);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"det", "--family", "nope:3"}).code == kParse);
  CHECK(invoke({"det", "--family", "complete:x"}).code == kParse);
  CHECK(invoke({"det", "--file", "/nonexistent.sdg"}).code == kParse);
  CHECK(invoke({"det", "--family", "complete:3", "--method", "fast"}).code == kParse);
  CHECK(invoke({"det"}).code == kParse);
  CHECK(invoke({"frobnicate"}).code == kParse);

  CHECK(invoke({"det", "--family", "complete:11", "--method", "cycle-cover"}).code == kPrecondition);
  CHECK(invoke({"per", "--family", "complete:21", "--method", "dense"}).code == kPrecondition);
  CHECK(invoke({"det", "--family", "mixed-complete:3"}).code == kPrecondition);
  CHECK(invoke({"per", "--family", "mixed-complete:5", "--method", "closed-form"}).code ==
        kPrecondition);
  CHECK(invoke({"det", "--file", kBowtie, "--method", "closed-form"}).code == kPrecondition);
  CHECK(invoke({"--help"}).code == kOk);
}

TEST_CASE("bench CSV") {
  const auto o = invoke({"bench", "--max-k", "2", "--ryser-max-n", "12"});
  REQUIRE(o.code == kOk);
  std::istringstream lines(o.out);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "family,n,method,ms");
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    CHECK(std::count(row.begin(), row.end(), ',') == 3);
  }
  CHECK(rows == 4);  // bpartition + dense for k = 1, bpartition + projected for k = 2
  CHECK(o.out.find("path-K8x2,15,dense-projected") != std::string::npos);
}

TEST_CASE("check subcommand") {
  auto o = invoke({"check", "--cases", "10", "--max-n", "8", "--seed", "3"});
  CHECK(o.code == kOk);
  CHECK(o.out.find("FAIL") == std::string::npos);

  // Deterministic regardless of the thread cap.
  auto strip_times = [](const std::string& s) {
    std::istringstream in(s);
    std::string line, out;
    while (std::getline(in, line)) {
      std::istringstream words(line);
      std::string name, cases, ms, status;
      words >> name >> cases >> ms >> status;
      out += name + cases + status + "\n";
    }
    return out;
  };
  auto single = invoke({"check", "--cases", "10", "--max-n", "8", "--threads", "1"});
  auto multi = invoke({"check", "--cases", "10", "--max-n", "8", "--threads", "4"});
  CHECK(strip_times(single.out) == strip_times(multi.out));

  o = invoke({"check", "--cases", "10", "--max-n", "8", "--inject-fault", "complete_cycle_path"});
  CHECK(o.code == kMismatch);
  CHECK(o.out.find("counterexample for complete_cycle_path") != std::string::npos);
  // Smallest failing instance first: the null complete graph.
  CHECK(o.out.find("complete:0: det") != std::string::npos);

  CHECK(invoke({"check", "--inject-fault", "oracle_triangle"}).code == kPrecondition);
}

TEST_CASE("gen subcommand") {
  auto o = invoke({"gen", "--family", "complete:3"});
  CHECK(o.code == kOk);
  CHECK(o.out == "sdg 3\nedge 0 1 1\nedge 0 2 1\nedge 1 2 1\n");
  auto a = invoke({"gen", "--random-seed", "9", "--n-max", "7"});
  auto b = invoke({"gen", "--random-seed", "9", "--n-max", "7"});
  CHECK(a.out == b.out);
}
