#include "nw/commands.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nw;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  std::vector<nlohmann::json> records() const {
    std::vector<nlohmann::json> v;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) v.push_back(nlohmann::json::parse(line));
    return v;
  }
  nlohmann::json summary() const { return records().back(); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nwtool");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nwtool_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("counts") {
    auto r = run({"counts", "--r", "2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.summary()["total"] == "12");
    CHECK(r.summary()["summary"] == true);
    CHECK(r.summary()["pass"] == true);
    CHECK(r.summary()["params"]["r"] == 2);
    CHECK(run({"counts", "--r", "1", "--n", "4"}).summary()["total"] == "105");
    CHECK(run({"counts", "--r", "3", "--n", "1"}).summary()["total"] == "3");
    for (const auto& rec : r.records()) CHECK(rec.contains("params"));
  }

  TEST_CASE("gram") {
    auto r = run({"gram", "--r", "1", "--n", "2", "--lambda", "2"});
    CHECK(r.code == 0);
    CHECK(r.summary()["gram_det"] == "2");
    auto g = run({"gram", "--r", "2", "--n", "3", "--lambda", "2|1"});
    CHECK(g.code == 0);
    CHECK(g.summary()["equal"] == true);
    CHECK(g.summary()["path_independent"] == true);
    CHECK(run({"gram", "--r", "2", "--n", "2", "--u", "0,1", "--lambda", "1|1"}).code == 1);
  }

  TEST_CASE("cellrank") {
    auto r = run({"cellrank", "--r", "1", "--n", "2", "--precision", "128"});
    CHECK(r.code == 0);
    CHECK(r.summary()["count"] == 3);
    CHECK(r.summary()["count_formula"] == "3");
    CHECK(r.summary()["rank"] == 3);
  }

  TEST_CASE("omega") {
    auto r = run({"omega", "--r", "1", "--u", "3/2", "--A", "4"});
    CHECK(r.code == 0);
    CHECK(r.summary()["omega"] == nlohmann::json{"4", "6", "9", "27/2", "81/4"});
    CHECK(r.summary()["admissible"] == true);
    CHECK(r.records().size() == 6);
  }

  TEST_CASE("verify and regime errors") {
    auto ok = run({"verify", "--r", "2", "--n", "2", "--precision", "128"});
    CHECK(ok.code == 0);
    CHECK(ok.summary()["relations"] == true);
    auto bad = run({"verify", "--r", "2", "--n", "2", "--u", "1,1"});
    CHECK(bad.code == 1);
    CHECK(bad.summary()["error"] == "regime");
    CHECK(bad.summary()["pass"] == false);
  }

  TEST_CASE("verdicts do not depend on precision") {
    for (const char* cmd : {"verify", "cellrank"}) {
      auto lo = run({cmd, "--r", "1", "--n", "3", "--precision", "64"});
      auto hi = run({cmd, "--r", "1", "--n", "3", "--precision", "256"});
      CHECK(lo.code == hi.code);
      CHECK(lo.summary()["pass"] == hi.summary()["pass"]);
    }
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"nosuch"}).code == 2);
    CHECK(run({"counts", "--r", "0"}).code == 2);
    CHECK(run({"counts", "--n", "x"}).code == 2);
    CHECK(run({"counts", "--r", "2", "--u", "1"}).code == 2);
    CHECK(run({"counts", "--precision", "16"}).code == 2);
    CHECK(run({"gram", "--r", "1"}).code == 2);
    CHECK(run({"counts", "--config", "/nonexistent/cfg.json"}).code == 2);
  }

  TEST_CASE("config file overrides flags") {
    const auto path = temp_file("cfg.json");
    {
      std::ofstream f(path);
      f << R"({"r": 1, "n": 4})";
    }
    auto r = run({"counts", "--r", "2", "--n", "2", "--config", path.string()});
    CHECK(r.code == 0);
    CHECK(r.summary()["total"] == "105");
    {
      std::ofstream f(path);
      f << R"({"command": "gram"})";
    }
    CHECK(run({"counts", "--config", path.string()}).code == 2);
    {
      std::ofstream f(path);
      f << "{not json";
    }
    CHECK(run({"counts", "--config", path.string()}).code == 2);
    std::filesystem::remove(path);
  }

  TEST_CASE("output file and determinism") {
    const auto path = temp_file("out.jsonl");
    auto r = run({"counts", "--r", "2", "--n", "3", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    auto again = run({"counts", "--r", "2", "--n", "3"});
    CHECK(buf.str() == again.out);
    CHECK(run({"verify", "--r", "2", "--n", "2"}).out == run({"verify", "--r", "2", "--n", "2"}).out);
    std::filesystem::remove(path);
  }
}
