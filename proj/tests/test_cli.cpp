#include "doctest.h"

#include <fusscat_cli/cli.hpp>
#include <fusscat/json_io.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fusscat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "fusscat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fusscat_test_" + name);
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "--family", "partitions", "-n", "2", "-m", "3"}).out == "22\n");
  CHECK(run({"count", "--family", "positive", "-n", "2", "-m", "1"}).out == "2\n");
  CHECK(run({"count", "--family", "refined", "-n", "2", "-m", "1", "--J", "1"}).out == "1\n");
  CHECK(run({"count", "--family", "refined", "-n", "4", "-m", "3", "--J", "1,2"}).out == "15\n");
  CHECK(run({"count", "--family", "regions", "-n", "3", "-m", "2"}).out == "55\n");
  CHECK(run({"count", "--family", "dissections", "-n", "4", "-m", "3"}).out == "969\n");
  CHECK(run({"-n", "2", "-m", "3", "count", "--family", "partitions"}).out == "22\n");
  CHECK(run({"count", "--family", "partitions", "-n", "40", "-m", "40"}).out ==
        count_partitions(40, 40).str() + "\n");
  const auto j = json::parse(run({"count", "--family", "partitions", "-n", "2", "-m", "3", "--json"}).out);
  CHECK(j.at("count") == "22");
}

TEST_CASE("count errors") {
  CHECK(run({"count", "--family", "bogus", "-n", "2", "-m", "1"}).code == cli::kUsage);
  CHECK(run({"count", "--family", "partitions", "-n", "0", "-m", "1"}).code == cli::kUsage);
  CHECK(run({"count", "--family", "partitions", "-n", "2", "-m", "1", "--J", "1"}).code == cli::kUsage);
  CHECK(run({"count", "--family", "refined", "-n", "2", "-m", "1", "--J", "3"}).code == cli::kUsage);
  CHECK(run({"count", "--family", "regions", "-n", "12", "-m", "3"}).code == cli::kGuardRail);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("enumerate") {
  const auto r = run({"enumerate", "--family", "partitions", "-n", "2", "-m", "1"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  const auto d = run({"enumerate", "--family", "dissections", "-n", "2", "-m", "2", "--json"});
  std::istringstream lines(d.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK_NOTHROW(dissection_from_json(json::parse(line)));
    ++count;
  }
  CHECK(count == 12);
  const auto p = run({"enumerate", "--family", "positive", "-n", "3", "-m", "2"});
  CHECK(std::count(p.out.begin(), p.out.end(), '\n') == 30);
  const auto t = run({"enumerate", "--family", "regions", "-n", "2", "-m", "3", "--json"});
  CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 22);
}

TEST_CASE("map examples") {
  const auto t = run({"map", "--to", "tableau"}, R"({"n":2,"m":3,"parts":[4,2]})");
  CHECK(t.code == 0);
  CHECK(json::parse(t.out).at("rows") == json::parse("[[1,3],[2]]"));

  const auto snake = run({"map", "--from", "tableau", "--to", "dissection"},
                         R"({"n":4,"m":3,"rows":[[3,3,3,3],[3,3,3],[3,3],[3]]})");
  CHECK(json::parse(snake.out).at("diagonals") == json::parse("[[3,6],[6,9],[9,12],[12,15]]"));

  const auto fan = run({"map", "--to", "dissection"}, R"({"n":2,"m":1,"parts":[0,0]})");
  CHECK(json::parse(fan.out).at("diagonals") == json::parse("[[0,3],[0,4]]"));
}

TEST_CASE("map round trips through every pair of families") {
  const std::vector<std::string> names{"partition", "tableau", "dissection"};
  for (const auto& p : enumerate_partitions(3, 2)) {
    const std::string start = to_json(p).dump();
    for (const auto& a : names)
      for (const auto& b : names) {
        const auto there = run({"map", "--to", a}, start);
        REQUIRE(there.code == 0);
        const auto mid = run({"map", "--to", b}, there.out);
        REQUIRE(mid.code == 0);
        const auto back = run({"map", "--to", "partition"}, mid.out);
        CHECK(json::parse(back.out) == json::parse(start));
      }
  }
}

TEST_CASE("map errors") {
  CHECK(run({"map", "--to", "tableau"}, "not json").code == cli::kSchema);
  CHECK(run({"map", "--to", "tableau"}, R"({"n":2})").code == cli::kSchema);
  CHECK(run({"map", "--from", "tableau", "--to", "partition"}, R"({"n":2,"m":1,"parts":[1,0]})").code ==
        cli::kSchema);
  CHECK(run({"map", "--to", "partition"}, R"({"n":2,"m":1,"parts":[3,0]})").code == cli::kInvariant);
  CHECK(run({"map", "--to", "partition"}, R"({"n":2,"m":1,"rows":[[0,1],[1]]})").code == 0);
  CHECK(run({"map", "--to", "partition"}, R"({"n":3,"m":1,"rows":[[1,1,0],[0,1],[1]]})").code ==
        cli::kInvariant);
  CHECK(run({"map", "--to", "partition"}, R"({"n":2,"m":1,"labeling":"standard","diagonals":[[0,2],[0,3]]})")
            .code == cli::kInvariant);
  CHECK(run({"map", "--to", "partition", "--input", "/nonexistent/x.json"}).code == cli::kIo);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--suite", "counts", "--n-max", "3", "--m-max", "2"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto v = json::parse(line);
    CHECK(v.at("status") == "ok");
    CHECK(v.at("check") == "counts");
    ++count;
  }
  CHECK(count == 6);
  CHECK(run({"verify", "--suite", "all", "--n-max", "2", "--m-max", "2"}).code == 0);
  CHECK(run({"verify", "--suite", "oracle", "--n-max", "3", "--m-max", "2"}).code == 0);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::kUsage);
  CHECK(run({"verify", "--n-max", "0"}).code == cli::kUsage);
  CHECK(run({"verify", "--n-max", "20", "--m-max", "3"}).code == cli::kGuardRail);
}

TEST_CASE("render") {
  const auto poly = run({"render"}, R"({"n":4,"m":3,"labeling":"alternating"})");
  CHECK(poly.code == 0);
  CHECK(poly.out.rfind("<svg", 0) == 0);
  CHECK(poly.out.find(">16</text>") != std::string::npos);
  CHECK(poly.out.find("stroke-dasharray=\"6 4\"") != std::string::npos);
  CHECK(run({"render"}, R"({"n":4,"m":3,"labeling":"alternating"})").out == poly.out);

  const auto zero = run({"render"}, R"({"n":4,"m":1,"rows":[[0,0,0,0],[0,0,0],[0,0],[0]]})");
  CHECK(zero.code == 0);
  CHECK(zero.out.find("<text") == std::string::npos);

  const auto young = run({"render"}, R"({"n":2,"m":3,"parts":[4,2]})");
  CHECK(young.code == 0);
  std::size_t filled = 0;
  for (auto pos = young.out.find("#aed6f1"); pos != std::string::npos; pos = young.out.find("#aed6f1", pos + 1))
    ++filled;
  CHECK(filled == 6);

  const auto path = temp_path("render.svg");
  CHECK(run({"render", "--out", path.string()}, R"({"n":1,"m":1,"labeling":"alternating","diagonals":[[1,2]]})")
            .code == 0);
  std::ifstream file(path);
  std::stringstream contents;
  contents << file.rdbuf();
  CHECK(contents.str().find("#c0392b") != std::string::npos);
  std::filesystem::remove(path);

  CHECK(run({"render", "--out", "/nonexistent/dir/x.svg"}, R"({"n":2,"m":3,"parts":[4,2]})").code == cli::kIo);
  CHECK(run({"render"}, R"({"n":2})").code == cli::kSchema);
}
