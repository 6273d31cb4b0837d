#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "specmon/cli.hpp"

using namespace specmon;
using namespace specmon::cli;
using nlohmann::json;

namespace {
  std::string data(char const* name) {
    return std::string(SPECMON_DATA_DIR) + "/" + name;
  }

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "specmon");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  bool has(std::string const& text, std::string const& needle) {
    return text.find(needle) != std::string::npos;
  }

  std::string temp_file(std::string const& name, std::string const& body) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
  }
}  // namespace

TEST_CASE("word problem examples") {
  auto eq = invoke({"wp", data("bicyclic.txt"), "aab", "a"});
  CHECK(eq.code == 0);
  CHECK(eq.out == "equal\n");

  auto ne = invoke({"wp", data("bicyclic.txt"), "ab", "ba"});
  CHECK(ne.code == 1);
  CHECK(ne.out == "not equal\n");

  CHECK(invoke({"wp", data("bicyclic.txt"), "ab", "-"}).code == 0);
}

TEST_CASE("divisibility and invertibility commands") {
  CHECK(invoke({"divl", data("bicyclic.txt"), "a", "ab"}).code == 0);
  CHECK(invoke({"divl", data("bicyclic.txt"), "a", "b"}).code == 1);
  CHECK(invoke({"divr", data("bicyclic.txt"), "b", "ab"}).code == 0);
  auto inv = invoke({"inv", data("cyclic.txt"), "a"});
  CHECK(inv.code == 0);
  CHECK(has(inv.out, "invertible"));
  CHECK(invoke({"inv", data("bicyclic.txt"), "a"}).code == 1);
}

TEST_CASE("analyze and maxgroup") {
  auto a = invoke({"analyze", data("two_relations.txt")});
  CHECK(a.code == 0);
  CHECK(has(a.out, "index: (6, 4)"));
  CHECK(has(a.out, "shorter"));

  auto m = invoke({"maxgroup", data("bicyclic.txt"), "--json"});
  CHECK(m.code == 0);
  auto j = json::parse(m.out);
  CHECK(j["command"] == "maxgroup");
  CHECK(j["verdict"] == "success");
  CHECK(j["details"]["group"]["rank"] == 1);
}

TEST_CASE("kcheck") {
  auto k = invoke({"kcheck", data("surface.txt"), "--alpha", "2/11"});
  CHECK(k.code == 0);
  CHECK(has(k.out, "passed"));

  auto j = json::parse(invoke({"kcheck", data("surface.txt"), "--json"}).out);
  CHECK(j["verdict"] == "yes");
  CHECK(j["details"]["passed"] == true);
  CHECK(j["details"]["relator_count"] == 16);
  CHECK(j["details"]["worst"]["cancelled"] == 1);
  CHECK(j["details"]["alpha"] == "2/11");

  auto tight = temp_file("specmon_shared.txt",
                         "generators: a b c\nrelation: aab\nrelation: aac\n");
  CHECK(invoke({"kcheck", tight}).code == 1);
  CHECK(invoke({"kcheck", tight, "--alpha", "1/1"}).code == 0);
  CHECK(invoke({"kcheck", tight, "--alpha", "oops"}).code == 64);
}

TEST_CASE("dehn and gwp") {
  auto d = invoke({"dehn", data("cube.txt"), "aa"});
  CHECK(d.code == 0);
  CHECK(has(d.out, "fixpoint: A"));

  CHECK(invoke({"gwp", data("surface.txt"), "abABcdCD"}).code == 0);
  CHECK(invoke({"gwp", data("surface.txt"), "a"}).code == 2);
  CHECK(invoke({"gwp", data("surface.txt"), "a", "--greendlinger"}).code == 1);
  CHECK(invoke({"gwp", data("surface.txt"), "a", "--budget", "20000000"}).code
        != 1);

  auto j = json::parse(
      invoke({"gwp", data("surface.txt"), "a", "--json"}).out);
  CHECK(j["verdict"] == "unknown");
  CHECK(j["details"]["bound"] == "14348907");

  auto tight = temp_file("specmon_shared2.txt",
                         "generators: a b c\nrelation: aab\nrelation: aac\n");
  CHECK(invoke({"gwp", tight, "a"}).code == 65);
}

TEST_CASE("error exit codes") {
  CHECK(invoke({"wp", data("missing.txt"), "a", "b"}).code == 65);
  CHECK(invoke({"wp", data("bicyclic.txt"), "a"}).code == 64);
  CHECK(invoke({}).code == 64);
  CHECK(invoke({"bogus"}).code == 64);
  auto bad = invoke({"wp", data("bicyclic.txt"), "ax", "a"});
  CHECK(bad.code == 65);
  CHECK(has(bad.err, "unknown generator"));

  auto junk = temp_file("specmon_junk.txt", "generators: a\nwhat\n");
  auto r    = invoke({"analyze", junk, "--json"});
  CHECK(r.code == 65);
  auto j = json::parse(r.out);
  CHECK(j["verdict"] == "error");
  CHECK(j["details"]["exit_code"] == 65);
}

TEST_CASE("oracle exhaustion maps to its exit code") {
  // S3 with every backend starved: a commutator has trivial abelian image,
  // so nothing cheap settles ab = ba.
  CliConfig c;
  c.command = "wp";
  c.input   = temp_file("specmon_s3.txt",
                        "generators: a b\nrelation: aa\nrelation: bbb\n"
                          "relation: abab\n");
  c.words               = {"ab", "ba"};
  c.budget.max_states   = 1;
  c.budget.max_length   = 1;
  c.budget.budget       = 0;
  c.budget.greendlinger = false;
  CHECK(run(c).exit_code == exit_inconclusive);

  c.budget = OracleBudget{};
  CHECK(run(c).exit_code == exit_no);
}

TEST_CASE("exit codes depend only on the verdict") {
  for (auto const* cmd : {"wp", "divl", "divr"}) {
    auto text = invoke({cmd, data("bicyclic.txt"), "ab", "b"});
    auto js   = invoke({cmd, data("bicyclic.txt"), "ab", "b", "--json"});
    CHECK(text.code == js.code);
    auto j = json::parse(js.out);
    CHECK(j["verdict"] == (js.code == 0 ? "yes" : "no"));
    CHECK(j["details"]["answer"] == (js.code == 0));
  }
}

TEST_CASE("json round trip") {
  CliConfig c;
  c.command = "analyze";
  c.input   = data("two_relations.txt");
  c.json    = true;
  auto res  = run(c);
  REQUIRE(res.exit_code == 0);
  auto j = json::parse(res.output);
  CHECK(j["details"]["index"]["alpha"] == 6);
  CHECK(j["details"]["index"]["beta"] == 4);
  CHECK(j["details"]["properties"]["I"] == false);
  auto again = json::parse(j.dump());
  CHECK(again == j);
}
