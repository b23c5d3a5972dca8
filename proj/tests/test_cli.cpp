#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "nsg/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run nsgraph(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = nsg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "nsgraph-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("verify A5 exits 0 with 21 checks") {
  const auto r = nsgraph({"verify", "A5"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["checks"].size() == 21);
  CHECK(doc["summary"]["fail"] == 0);
  CHECK(doc["summary"]["pass"] == 20);
}

TEST_CASE("graph A5 writes a 59-node DOT file") {
  const auto path = scratch("a5.dot");
  const auto r = nsgraph({"graph", "A5", "--format", "dot", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  CHECK(line == "graph nonsolvable {");
  std::size_t nodes = 0, edges = 0;
  while (std::getline(f, line)) {
    if (line.find("[label=") != std::string::npos) ++nodes;
    if (line.find(" -- ") != std::string::npos) ++edges;
  }
  CHECK(nodes == 59);
  CHECK(edges == 1140);
}

TEST_CASE("graph json carries invariants and schema version") {
  const auto r = nsgraph({"graph", "PSL27", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["vertices"].size() == 167);
  CHECK(doc["invariants"]["diameter"] == 2);
}

TEST_CASE("compare") {
  auto same = nlohmann::json::parse(nsgraph({"compare", "A5", "A5"}).out);
  CHECK(same["equal"] == true);
  auto twins = nlohmann::json::parse(nsgraph({"compare", "SL25", "A5xC2"}).out);
  CHECK(twins["equal"] == true);
  auto differ = nlohmann::json::parse(nsgraph({"compare", "S5", "SL25"}).out);
  CHECK(differ["equal"] == false);
}

TEST_CASE("ordsol profile") {
  const auto doc = nlohmann::json::parse(nsgraph({"ordsol", "A5"}).out);
  CHECK(doc["schema_version"] == 1);
  const nlohmann::json expect = nlohmann::json::parse(
      R"([{"size":10,"count":24},{"size":24,"count":20},{"size":36,"count":15},{"size":60,"count":1}])");
  CHECK(doc["profile"] == expect);
}

TEST_CASE("generator files") {
  const auto path = scratch("s3_copy.gens");
  {
    std::ofstream f(path);
    f << "# S3 again\ndegree 3\n(1 2 3)\n(1 2)\n";
  }
  auto r = nsgraph({"ordsol", path.string()});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["group"]["order"] == 6);

  const auto bad = scratch("bad.gens");
  {
    std::ofstream f(bad);
    f << "degree 3\n(1 2 2)\n";
  }
  r = nsgraph({"verify", bad.string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(nsgraph({"verify", "no-such-group"}).code == 3);
  CHECK(nsgraph({"frobnicate"}).code == 3);
  CHECK(nsgraph({"graph", "A5", "--format", "svg"}).code == 3);
  const auto guard = nsgraph({"analyze", "PSL27", "--guard", "100"});
  CHECK(guard.code == 4);
  CHECK(guard.err.find("order_guard") != std::string::npos);
  CHECK(nsgraph({"graph", "A5", "--out", "/nonexistent-dir/x.dot"}).code == 5);
  CHECK(nsgraph({"--help"}).code == 0);
  CHECK(nsgraph({"catalog"}).out.find("PSL27") != std::string::npos);
}

TEST_CASE("cached results match fresh ones") {
  const auto dir = scratch("cache");
  fs::remove_all(dir);
  const auto first = nsgraph({"analyze", "SL25", "--cache", dir.string()});
  REQUIRE(first.code == 0);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 1);
  const auto again = nsgraph({"analyze", "SL25", "--cache", dir.string(), "--cache-check"});
  CHECK(again.code == 0);
  CHECK(again.out == first.out);

  // A tampered entry is caught by the spot check.
  const auto entry = fs::directory_iterator(dir)->path();
  auto doc = nlohmann::json::parse(std::ifstream(entry));
  doc["radical"]["order"] = 7;
  std::ofstream(entry) << doc.dump();
  CHECK(nsgraph({"analyze", "SL25", "--cache", dir.string(), "--cache-check"}).code == 2);
}

TEST_CASE("verify output is byte-identical across runs") {
  CHECK(nsgraph({"verify", "PSL27"}).out == nsgraph({"verify", "PSL27", "--jobs", "3"}).out);
}
