#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "extshift/cli.hpp"
#include "extshift/errors.hpp"
#include "extshift/io.hpp"
#include "extshift/random.hpp"

using namespace extshift;

namespace {

const std::string kData = EXTSHIFT_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

io::Json run_json(std::vector<std::string> args) {
  const Run r = run(std::move(args));
  REQUIRE(r.code == 0);
  return io::Json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("extshift_test_" + name);
}

}  // namespace

TEST_CASE("parsing literal inputs") {
  const auto f = io::parse_input("{n:4,k:2,sets:[[1,2],[1,3]]}");
  REQUIRE(std::holds_alternative<SetFamily>(f));
  CHECK(std::get<SetFamily>(f).size() == 2);

  const auto m = io::parse_input("e1^e2 + e2^e3", 3);
  REQUIRE(std::holds_alternative<Multivector>(m));
  CHECK(std::get<Multivector>(m).terms().size() == 2);

  const auto v = io::parse_input(R"({"n": 4, "k": 2, "order": "weight2", "basis": ["e1^e4 + e2^e3"]})");
  REQUIRE(std::holds_alternative<Subspace>(v));
  CHECK(std::get<Subspace>(v).order().kind == OrderKind::weight2);
  CHECK(std::get<Subspace>(v).rows().front().to_string() == "e1^e4 + e2^e3");

  CHECK_THROWS_WITH_AS(io::parse_input("{n:4,k:2,sets:[[1,2],[1,2]]}"), doctest::Contains("duplicate set"),
                       ParseError);
  CHECK_THROWS_AS(io::parse_input("e1^e2"), ParseError);
  CHECK_THROWS_AS(io::parse_input("{n:4,k:2}"), ParseError);
  CHECK_THROWS_AS(io::parse_input("{n:4,k:2,sets:[[1,2]"), ParseError);
  CHECK_THROWS_AS(io::parse_input("{n:4,k:2,basis:[\"e1^e2\", \"e3\"]}"), ParseError);
}

TEST_CASE("errors carry line numbers") {
  const std::string text = "{\n  \"n\": 4,\n  \"k\": 2,\n  \"sets\": [\n    [1, 2],\n    [1, 2]\n  ]\n}\n";
  try {
    io::parse_input(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(std::string(e.what()).find("line 6") != std::string::npos);
  }
  const std::string inhomogeneous = "{\n  \"n\": 4,\n  \"k\": 2,\n  \"basis\": [\n    \"e1^e2\",\n    \"e1 + e2^e3\"\n  ]\n}";
  try {
    io::parse_input(inhomogeneous);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
  }
}

TEST_CASE("JSON round trips") {
  RandomSource rng(61);
  for (int t = 0; t < 30; ++t) {
    const int n = rng.uniform_int(2, 6);
    const auto kind = t % 2 ? OrderKind::weight2 : OrderKind::lex;
    const auto v = rng.subspace(MonomialOrder{kind, n, rng.uniform_int(1, n)}, 3);
    const auto back = io::parse_input(io::to_json(v).dump());
    CHECK(std::get<Subspace>(back) == v);
  }
  const SetFamily f(5, 2, {IndexSet{1, 2}, IndexSet{2, 5}});
  CHECK(std::get<SetFamily>(io::parse_input(io::print(f))) == f);
  CHECK(io::to_json(f).dump() == R"({"n":5,"k":2,"sets":[[1,2],[2,5]]})");
}

TEST_CASE("files are read when the path exists") {
  const auto f = io::parse_input(kData + "/star6_3.json");
  REQUIRE(std::holds_alternative<SetFamily>(f));
  CHECK(std::get<SetFamily>(f).size() == 10);
}

TEST_CASE("cli: verify-family") {
  const Run r = run({"verify-family", kData + "/star6_3.json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"summary\": \"size 10 <= bound 10\"") != std::string::npos);

  // A non-shifted intersecting family is shifted first; the size is kept.
  const auto j = run_json({"verify-family", "{n:6,k:2,sets:[[2,3],[2,4],[3,4]]}"});
  CHECK(j["size"] == 3);
  CHECK(j["satisfied"] == true);
  CHECK_FALSE(j["trace"].empty());

  CHECK(run({"verify-family", "{n:6,k:2,sets:[[1,2],[3,4]]}"}).code == 1);
  CHECK(run({"verify-family", "{n:3,k:2,sets:[[1,2]]}"}).code == 1);
}

TEST_CASE("cli: pipeline and trace files") {
  const Run bad = run({"pipeline", kData + "/bad.json"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("not self-annihilating") != std::string::npos);

  const auto trace = temp_path("trace.json");
  const Run ok = run({"pipeline", "{n:4,k:2,basis:[\"e2^e3\",\"e2^e4\",\"e1^e2\"]}", "--route", "iterate", "--trace",
                      trace.string()});
  CHECK(ok.code == 0);
  std::ifstream in(trace);
  const auto steps = io::Json::parse(in);
  CHECK(steps.is_array());
  CHECK_FALSE(steps.empty());
  std::filesystem::remove(trace);
}

TEST_CASE("cli: falsification and budget exit codes") {
  const Run stall = run({"limit", "{n:4,k:2,basis:[\"e1^e2\",\"e1^e3\",\"e1^e4+e2^e3\"]}", "--route", "iterate"});
  CHECK(stall.code == 2);
  CHECK(stall.err.find("FALSIFIED") != std::string::npos);
  CHECK(run({"hm-verify", "--n", "8", "--k", "3"}).code == 0);
  CHECK(run({"enumerate", "--n", "6", "--k", "3", "--budget", "50"}).code == 3);
}

TEST_CASE("cli: usage errors and help") {
  CHECK(run({}).code == 1);
  CHECK(run({"no-such-verb"}).code == 1);
  CHECK(run({"pipeline"}).code == 1);
  CHECK(run({"pipeline", kData + "/bad.json", "--order", "grevlex"}).code == 1);
  CHECK(run({"limit", "{n:3,k:2,basis:[\"e2^e3\"]}", "--pair", "2"}).code == 1);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify-family") != std::string::npos);
}

TEST_CASE("cli: other verbs") {
  CHECK(run_json({"shift", "{n:3,k:2,sets:[[2,3]]}", "--pair", "2,1"})["sets"] == io::Json::parse("[[1,3]]"));
  CHECK(run_json({"limit", "{n:3,k:2,basis:[\"e2^e3\"]}", "--pair", "2,1"})["basis"] ==
        io::Json::parse(R"(["e1^e3"])"));
  CHECK(run_json({"init", "{n:4,k:2,basis:[\"e1^e4+e2^e3\"]}", "--order", "weight2"})["basis"] ==
        io::Json::parse(R"(["e2^e3"])"));
  CHECK(run_json({"factor", "e1^e2 + e1^e3", "--n", "3"})["decomposable"] == true);
  CHECK(run_json({"annihilator", "{n:4,k:2,sets:[[1,2],[1,3]]}"})["dim"] == 1);
  const auto cross = run_json({"example-cross", "--k", "3", "--check"});
  CHECK(cross["dim"] == 10);
  CHECK(cross["annihilator_dim"] == 0);
  const auto e = run_json({"enumerate", "--n", "6", "--k", "3"});
  CHECK(e["count"] == 59049);
  CHECK(e["max_size"] == 10);
  CHECK(run_json({"enumerate", "--n", "2", "--k", "1", "--mode", "shifted", "--list"})["families"].size() == 2);
  CHECK(run_json({"oracle-pluecker", "--random", "5", "--n", "4", "--k", "2", "--m", "2"})["all_equal"] == true);
  CHECK(run_json({"oracle-pluecker", "{n:3,k:2,basis:[\"e2^e3\"]}", "--pair", "2,1"})["all_equal"] == true);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"oracle-pluecker", "--random", "3", "--n", "4", "--k", "2", "--seed", "9"};
  CHECK(run(args).out == run(args).out);
}
