#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sds/cli.hpp"
#include "sds/errors.hpp"

using sds::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("sds_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const std::string kP3 = "0 1\n1 2\n";
const std::string kTriangle = "0 1\n1 2\n0 2\n";

}  // namespace

TEST_CASE("gen gap 3 has 9 vertices and 9 edges") {
  Result r = call({"gen", "gap", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("p edge 9 9\n", 0) == 0);
}

TEST_CASE("seeded generators are byte-deterministic") {
  Result a = call({"gen", "random", "6", "8", "seed=1"});
  Result b = call({"gen", "random", "6", "8", "seed=1"});
  Result c = call({"gen", "random", "6", "8", "--seed", "1"});
  Result d = call({"gen", "random", "6", "8", "2"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out != d.out);
  CHECK(a.out.rfind("p edge 6 8\n", 0) == 0);
}

TEST_CASE("gen bipartite with p=1 is complete bipartite") {
  Result r = call({"gen", "bipartite", "3", "3", "1.0", "--format", "edgelist"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  int lines = 0;
  for (std::string line; std::getline(in, line);) {
    int u, v;
    std::istringstream(line) >> u >> v;
    CHECK(u < 3);
    CHECK(v >= 3);
    ++lines;
  }
  CHECK(lines == 9);
}

TEST_CASE("gen rejects infeasible parameters") {
  for (auto args : std::vector<std::vector<std::string>>{{"gen", "random", "5", "2"},
                                                         {"gen", "random-2connected", "5", "4"},
                                                         {"gen", "bipartite", "2", "2", "1.5"},
                                                         {"gen", "chordal", "0", "0.5"},
                                                         {"gen", "gap", "0"},
                                                         {"gen", "torus", "3"},
                                                         {"gen", "gap", "x"}}) {
    Result r = call(args);
    CHECK(r.code == sds::cli::kParseError);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("solve examples") {
  std::string gap = call({"gen", "gap", "3"}).out;
  Result r = call({"solve", "-", "--json"}, gap);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["size"] == 3);
  CHECK(j["verified"] == true);
  CHECK(j["blocks"].size() == 7);
  CHECK(j["backend"].is_array());

  r = call({"solve", "-", "--json"}, kP3);
  j = json::parse(r.out);
  CHECK(j["size"] == 1);
  CHECK(j["vertices"] == json::array({1}));

  std::string colours = temp_file("colours", "0 1\n");
  r = call({"solve", "-", "--colours", colours, "--json"}, kTriangle);
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["size"] == 2);
  CHECK(j["vertices"][0] == 0);

  r = call({"solve", "-"}, kP3);
  CHECK(r.out.find("size 1\n") != std::string::npos);
  CHECK(r.out.find("vertices 1\n") != std::string::npos);
}

TEST_CASE("solve json output is stable and sorted") {
  std::string g = call({"gen", "random", "25", "40", "3"}).out;
  Result a = call({"solve", "-", "--json"}, g);
  Result b = call({"solve", "-", "--json"}, g);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  auto v = j["vertices"].get<std::vector<int>>();
  CHECK(std::is_sorted(v.begin(), v.end()));
  CHECK(j["size"] == v.size());
  for (const char* backend : {"bnb", "bipartite", "treewidth"}) {
    Result forced = call({"solve", "-", "--json", "--backend", backend}, g);
    REQUIRE(forced.code == 0);
    CHECK(json::parse(forced.out)["size"] == j["size"]);
  }
}

TEST_CASE("solve error exit codes") {
  Result r = call({"solve", "-"}, "0 1\n2 3\n");
  CHECK(r.code == sds::cli::kDisconnected);
  CHECK(r.out.empty());
  r = call({"solve", "-", "--split-components", "--json"}, "0 1\n2 3\n");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["size"] == 2);

  r = call({"solve", "-"}, "e 1 1\n");
  CHECK(r.code == sds::cli::kParseError);
  CHECK(r.out.empty());
  CHECK(r.err.find("line 1") != std::string::npos);

  r = call({"solve", "/nonexistent/graph.txt"});
  CHECK(r.code == sds::cli::kParseError);

  std::string bad = temp_file("bad_colours", "0 2\n");
  r = call({"solve", "-", "--colours", bad}, kTriangle);
  CHECK(r.code == sds::cli::kParseError);
  CHECK(r.out.empty());

  std::string hard = call({"gen", "random", "60", "300", "5"}).out;
  r = call({"solve", "-", "--backend", "bnb", "--budget", "1"}, hard);
  CHECK(r.code == sds::cli::kBudgetExceeded);
  CHECK(r.out.empty());

  r = call({"solve", "-", "--budget", "0"}, kP3);
  CHECK(r.code == sds::cli::kParseError);
  r = call({"solve", "-", "--backend", "cplex"}, kP3);
  CHECK(r.code == sds::cli::kParseError);
  r = call({}, "");
  CHECK(r.code == sds::cli::kParseError);
  r = call({"frobnicate"}, "");
  CHECK(r.code == sds::cli::kParseError);
}

TEST_CASE("approx examples") {
  std::string gap = call({"gen", "gap", "3"}).out;
  Result r = call({"approx", "lp", "-", "--json"}, gap);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  double bound = j["lp_bound_value"];
  int size = j["size"];
  CHECK(bound <= 3);
  CHECK(size >= 3);
  CHECK(size <= 2 * bound);
  CHECK(j["verified"] == true);

  r = call({"approx", "vc", "-", "--json"}, kTriangle);
  CHECK(json::parse(r.out)["size"] == 2);
  r = call({"approx", "lp", "-", "--json"}, kP3);
  CHECK(json::parse(r.out)["size"] == 1);

  std::string lp = std::filesystem::temp_directory_path() / "sds_cli_test_model.lp";
  r = call({"approx", "lp", "-", "--export-lp", lp, "--check-steps"}, kP3);
  CHECK(r.code == 0);
  std::ifstream file(lp);
  std::string first;
  std::getline(file, first);
  CHECK(first == "Minimize");
  CHECK(call({"approx", "lp", "-"}, "0 1\n2 3\n").code == sds::cli::kDisconnected);
  CHECK(call({"approx", "simplex", "-"}, kP3).code == sds::cli::kParseError);
}

TEST_CASE("verify examples") {
  std::string b = temp_file("set_b", "1\n");
  std::string a = temp_file("set_a", "0 # just a\n");
  Result r = call({"verify", "-", b}, kP3);
  CHECK(r.code == 0);
  CHECK(r.out == "valid\n");
  r = call({"verify", "-", a, "--json"}, kP3);
  CHECK(r.code == sds::cli::kInvalidSet);
  json j = json::parse(r.out);
  CHECK(j["valid"] == false);
  CHECK(j["witness"] == 2);

  std::string gap = temp_file("gap3", call({"gen", "gap", "3"}).out);
  std::string mids = temp_file("mids", "3 4 5\n");
  r = call({"verify", gap, mids, "--enumerate"});
  CHECK(r.code == 0);

  std::string out_of_range = temp_file("set_oor", "7\n");
  CHECK(call({"verify", "-", out_of_range}, kP3).code == sds::cli::kParseError);

  std::string big = temp_file("k7", call({"gen", "random", "7", "21"}).out);
  std::string empty = temp_file("set_empty", "");
  CHECK(call({"verify", big, empty, "--enumerate"}).code == sds::cli::kBudgetExceeded);
  CHECK(call({"verify", big, empty}).code == sds::cli::kInvalidSet);
}

TEST_CASE("oracle examples") {
  std::string gap = call({"gen", "gap", "3"}).out;
  CHECK(call({"oracle", "-"}, gap).out == "sds=3 vc=5\n");
  CHECK(call({"oracle", "-", "--trees"}, kTriangle).out == "sds=2 vc=2 trees=3\n");
  CHECK(call({"oracle", "-", "--trees"}, kP3).out == "sds=1 vc=1 trees=1\n");
  std::string big = call({"gen", "random", "17", "20"}).out;
  Result r = call({"oracle", "-"}, big);
  CHECK(r.code == sds::cli::kBudgetExceeded);
  CHECK(r.out.empty());
}

TEST_CASE("blocks command") {
  std::string gap = call({"gen", "gap", "3"}).out;
  Result r = call({"blocks", "-", "--json"}, gap);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["blocks"].size() == 7);
  CHECK(j["cut_vertices"] == json::array({0, 1, 2, 3, 4, 5}));
  CHECK(j["leaf_order"].size() == 7);
  CHECK(j["leaf_order"].back()["connection"].is_null());

  std::string td = std::filesystem::temp_directory_path() / "sds_cli_test.td";
  r = call({"blocks", "-", "--export-td", td}, kTriangle);
  CHECK(r.code == 0);
  CHECK(r.out.find("treewidth_upper_bound 2") != std::string::npos);
  std::ifstream file(td);
  std::string first;
  std::getline(file, first);
  CHECK(first == "s td 1 3 3");
}

TEST_CASE("bench table is deterministic in its sizes, with jobs") {
  Result one = call({"bench", "--json"});
  Result four = call({"bench", "--json", "--jobs", "4"});
  REQUIRE(one.code == 0);
  REQUIRE(four.code == 0);
  json a = json::parse(one.out)["rows"], b = json::parse(four.out)["rows"];
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i]["instance"] == b[i]["instance"]);
    CHECK(a[i]["exact"] == b[i]["exact"]);
    CHECK(a[i]["lp"] == b[i]["lp"]);
    CHECK(a[i]["exact"] <= a[i]["lp"]);
  }
  CHECK(a[0]["instance"] == "gap-3");
  CHECK(a[0]["exact"] == 3);
}

TEST_CASE("help goes to stdout with exit 0") {
  Result r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("solve") != std::string::npos);
}

TEST_CASE("colour and set file parsers") {
  std::istringstream colours("# header\n0 1\n2 0hat\n1 0\n");
  auto f = sds::cli::parse_colouring(colours, 4);
  CHECK(f == sds::Colouring{sds::Colour::one, sds::Colour::zero, sds::Colour::zero_hat, sds::Colour::zero_hat});
  std::istringstream twice("0 1\n0 0\n");
  CHECK_THROWS_AS(sds::cli::parse_colouring(twice, 2), sds::ParseError);
  std::istringstream extra("0 1 2\n");
  CHECK_THROWS_AS(sds::cli::parse_colouring(extra, 3), sds::ParseError);
  std::istringstream sets("3 1\n1\n");
  CHECK(sds::cli::parse_vertex_set(sets, 4) == sds::VertexSet{1, 3});
  std::istringstream negative("-1\n");
  CHECK_THROWS_AS(sds::cli::parse_vertex_set(negative, 4), sds::ParseError);
}
