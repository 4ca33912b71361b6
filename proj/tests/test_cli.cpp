#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobmap/cli.hpp"
#include "frobmap/problem.hpp"

using namespace frobmap;
using json = nlohmann::ordered_json;

namespace {

struct TempFile {
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = "cli_case_" + std::to_string(counter++) + ".frob";
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
  std::string path;
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> keys_of(const json& j) {
  std::vector<std::string> ks;
  for (auto it = j.begin(); it != j.end(); ++it) ks.push_back(it.key());
  return ks;
}

json strip_timings(json j) {
  for (auto& l : j["levels"]) l["timings"]["ms"] = 0;
  return j;
}

}  // namespace

TEST_CASE("problem file grammar") {
  SECTION("a complete file") {
    ProblemFile pf = parse_problem(
        "# describes the running instance\n"
        "\n"
        "p = 2\n"
        "vars = x, y, z\n"
        "gens = x*y, y*z\n"
        "e_max = 3\n");
    REQUIRE(pf.p.has_value());
    CHECK(*pf.p == 2);
    CHECK(pf.vars == std::vector<std::string>{"x", "y", "z"});
    REQUIRE(pf.gens.size() == 2);
    CHECK(pf.gens[0].text == "x*y");
    CHECK(pf.gens[1].text == "y*z");
    CHECK(pf.gens[1].line == 5);
    REQUIRE(pf.e_max.has_value());
    CHECK(*pf.e_max == 3);
    CHECK_FALSE(pf.preset.has_value());
  }

  SECTION("operation keys") {
    ProblemFile pf = parse_problem(
        "p = 2\nvars = x, y\ngens = x\ngens2 = y, x*y\narg = x + y\ne = 4\n");
    REQUIRE(pf.gens2.size() == 2);
    CHECK(pf.gens2[1].text == "x*y");
    REQUIRE(pf.arg.has_value());
    CHECK(pf.arg->text == "x + y");
    REQUIRE(pf.op_e.has_value());
    CHECK(*pf.op_e == 4);
  }

  SECTION("grammar violations carry positions") {
    auto expect = [](const char* text, int line, const char* what) {
      try {
        parse_problem(text);
        FAIL("expected ParseError for: " << text);
      } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(std::string(e.what()).find(what) != std::string::npos);
      }
    };
    expect("p = 2\np = 3\n", 2, "duplicate key");
    expect("p = 2\nflavor = mild\n", 2, "unknown key");
    expect("p = 2\njust some words\n", 2, "key = value");
    expect("p = two\n", 1, "expected an integer");
    expect("e_max = 0\n", 1, "out of range");
    expect("e = -1\n", 1, "out of range");
    expect("gens = x,,y\n", 1, "empty list entry");
    expect("preset =\n", 1, "empty preset name");
  }

  SECTION("bad generator expressions point into the file") {
    ProblemFile pf = parse_problem("p = 2\nvars = x, y\ngens = x*y, x*q\n");
    try {
      resolve_problem(pf);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 15);
      CHECK(std::string(e.what()).find("unknown variable") !=
            std::string::npos);
    }
  }
}

TEST_CASE("problem resolution") {
  SECTION("preset fills in everything") {
    ProblemFile pf;
    pf.preset = "paper-monomial";
    ResolvedProblem rp = resolve_problem(pf);
    CHECK(rp.preset_name == "paper-monomial");
    CHECK(rp.p == 2);
    CHECK(rp.ring->variables() == std::vector<std::string>{"x", "y", "z"});
    CHECK(rp.e_max == 3);
    REQUIRE(rp.ideal.generators().size() == 2);
    CHECK(to_string(rp.ideal.generators()[0]) == "x*y");
  }

  SECTION("preset supersedes in-file fields") {
    ProblemFile pf = parse_problem(
        "preset = paper-monomial\np = 5\nvars = a, b\ngens = a*b\ne_max = 9\n");
    ResolvedProblem rp = resolve_problem(pf);
    CHECK(rp.p == 2);
    CHECK(rp.e_max == 3);
    CHECK(rp.ring->width() == 3);
  }

  SECTION("command-line overrides beat the preset") {
    ProblemFile pf;
    pf.preset = "paper-monomial";
    ResolvedProblem rp = resolve_problem(pf, 3, 5);
    CHECK(rp.p == 3);
    CHECK(rp.e_max == 5);
    CHECK(rp.ring->width() == 3);  // variables still from the preset
  }

  SECTION("rejections") {
    ProblemFile pf;
    pf.preset = "no-such-thing";
    CHECK_THROWS_AS(resolve_problem(pf), ConfigError);

    CHECK_THROWS_AS(
        resolve_problem(parse_problem("p = 4\nvars = x\ngens = x\n")),
        ConfigError);
    CHECK_THROWS_AS(
        resolve_problem(parse_problem("p = 2\nvars = x\ngens = 2*x\n")),
        ConfigError);
    CHECK_THROWS_AS(resolve_problem(parse_problem("vars = x\ngens = x\n")),
                    ConfigError);
    CHECK_THROWS_AS(resolve_problem(parse_problem("p = 2\ngens = x\n")),
                    ConfigError);
    CHECK_THROWS_AS(resolve_problem(parse_problem("p = 2\nvars = x\n")),
                    ConfigError);
  }

  SECTION("defaults") {
    ResolvedProblem rp =
        resolve_problem(parse_problem("p = 2\nvars = x\ngens = x\n"));
    CHECK(rp.e_max == 3);
    CHECK(rp.preset_name.empty());
  }
}

TEST_CASE("check subcommand, preset route") {
  CliResult r = cli({"check", "--preset", "paper-monomial", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());

  json j = json::parse(r.out);
  CHECK(keys_of(j) == std::vector<std::string>{"problem", "levels", "version"});
  CHECK(keys_of(j["problem"]) ==
        std::vector<std::string>{"preset", "p", "vars", "gens", "e_max"});
  CHECK(j["problem"]["preset"] == "paper-monomial");
  CHECK(j["problem"]["p"] == 2);
  CHECK(j["problem"]["vars"] == json({"x", "y", "z"}));
  CHECK(j["problem"]["gens"] == json({"x*y", "y*z"}));
  CHECK(j["problem"]["e_max"] == 3);
  CHECK(j["version"] == kVersion);

  REQUIRE(j["levels"].size() == 3);
  const json& lvl = j["levels"][1];
  CHECK(keys_of(lvl) ==
        std::vector<std::string>{"e", "q", "path", "k_generator_count",
                                 "contained_raw", "contained_mod_bracket",
                                 "witnesses", "paths_agree", "error",
                                 "timings"});
  CHECK(lvl["e"] == 2);
  CHECK(lvl["q"] == 4);
  CHECK(lvl["path"] == "monomial");
  CHECK(lvl["k_generator_count"] == 3);
  CHECK(lvl["contained_raw"] == false);
  CHECK(lvl["contained_mod_bracket"] == false);
  CHECK(lvl["witnesses"] == json({"y^3*z^4", "x^4*y^3"}));
  CHECK(lvl["paths_agree"].is_null());
  CHECK(lvl["error"].is_null());
  CHECK(lvl["timings"]["ms"].is_number_integer());

  SECTION("output is deterministic apart from timings") {
    CliResult r2 =
        cli({"check", "--preset", "paper-monomial", "--format", "json"});
    REQUIRE(r2.code == 0);
    CHECK(strip_timings(json::parse(r.out)).dump(2) ==
          strip_timings(json::parse(r2.out)).dump(2));
  }
}

TEST_CASE("check subcommand, text format") {
  CliResult r = cli({"check", "--preset", "paper-monomial"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("problem: p=2 preset=paper-monomial") != std::string::npos);
  CHECK(r.out.find("e=1 q=2 path=monomial") != std::string::npos);
  CHECK(r.out.find("contained_mod_bracket=false") != std::string::npos);
  CHECK(r.out.find("witnesses:") != std::string::npos);
  CHECK(r.out.find("x^2*y") != std::string::npos);
}

TEST_CASE("check subcommand, overrides") {
  SECTION("ladder height") {
    CliResult r = cli({"check", "--preset", "paper-monomial", "--e-max", "1",
                       "--format", "json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["problem"]["e_max"] == 1);
    CHECK(j["levels"].size() == 1);
  }

  SECTION("characteristic") {
    CliResult r = cli({"check", "--preset", "paper-monomial", "--p", "3",
                       "--e-max", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["problem"]["p"] == 3);
    CHECK(j["levels"][0]["q"] == 3);
    CHECK(j["levels"][1]["q"] == 9);
    CHECK(j["levels"][1]["contained_mod_bracket"] == false);
  }

  SECTION("non-prime characteristic is a usage error") {
    CliResult r = cli({"check", "--preset", "paper-monomial", "--p", "6"});
    CHECK(r.code == 1);
    CHECK(r.err.find("prime") != std::string::npos);
  }
}

TEST_CASE("check subcommand, input file route") {
  TempFile f(
      "p = 2\n"
      "vars = x, y, z\n"
      "gens = x*y, y*z\n"
      "e_max = 2\n");
  CliResult r = cli({"check", "--input", f.path, "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["problem"]["preset"].is_null());
  CHECK(j["problem"]["gens"] == json({"x*y", "y*z"}));
  CHECK(j["levels"].size() == 2);
  CHECK(j["levels"][1]["witnesses"] == json({"y^3*z^4", "x^4*y^3"}));
}

TEST_CASE("check subcommand, both paths") {
  CliResult r = cli({"check", "--preset", "paper-monomial", "--e-max", "2",
                     "--both-paths", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  for (const json& lvl : j["levels"]) {
    CHECK(lvl["path"] == "both");
    CHECK(lvl["paths_agree"] == true);
  }
}

TEST_CASE("check subcommand, brute-force candidates match the recursion") {
  CliResult a = cli({"check", "--preset", "paper-monomial", "--format", "json"});
  CliResult b = cli({"check", "--preset", "paper-monomial", "--brute-force-L",
                     "--format", "json"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(strip_timings(json::parse(a.out)) == strip_timings(json::parse(b.out)));
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"check"}).code == 1);  // neither --preset nor --input
  CHECK(cli({"check", "--preset", "paper-monomial", "--input", "x.frob"}).code ==
        1);
  CHECK(cli({"check", "--preset", "unheard-of"}).code == 1);
  CHECK(cli({"check", "--input", "no_such_file.frob"}).code == 1);
  CHECK(cli({"check", "--preset", "paper-monomial", "--format", "yaml"}).code ==
        1);
  CHECK(cli({"op", "colon"}).code == 1);  // missing --input

  SECTION("help exits cleanly") {
    CliResult r = cli({"check", "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--e-max") != std::string::npos);
  }

  SECTION("top-level help lists both subcommands") {
    CliResult r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("check") != std::string::npos);
    CHECK(r.out.find("op") != std::string::npos);
  }
}

TEST_CASE("computation ceiling produces a partial report") {
  CliResult r = cli({"check", "--preset", "paper-determinantal", "--limit", "5",
                     "--format", "json"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error") != std::string::npos);
  json j = json::parse(r.out);  // the report shell is still valid JSON
  CHECK(j["problem"]["preset"] == "paper-determinantal");

  // the global ceiling is restored afterwards: a normal run still succeeds
  CliResult again = cli({"check", "--preset", "paper-monomial"});
  CHECK(again.code == 0);
}

TEST_CASE("op subcommand") {
  SECTION("colon") {
    TempFile f(
        "p = 2\nvars = x, y, z\ngens = x^2*y^2, y^2*z^2\ngens2 = x*y, y*z\n");
    CliResult r = cli({"op", "colon", "--input", f.path});
    REQUIRE(r.code == 0);
    CHECK(r.out == "y*z^2\nx*y*z\nx^2*y\n");
  }

  SECTION("intersect") {
    TempFile f(
        "p = 2\nvars = x, y, z\ngens = x*y, y*z^2\ngens2 = x^2*y, y*z\n");
    CliResult r = cli({"op", "intersect", "--input", f.path});
    REQUIRE(r.code == 0);
    CHECK(r.out == "y*z^2\nx*y*z\nx^2*y\n");
  }

  SECTION("product") {
    TempFile f("p = 2\nvars = x, y\ngens = x\ngens2 = y\n");
    CliResult r = cli({"op", "product", "--input", f.path});
    REQUIRE(r.code == 0);
    CHECK(r.out == "x*y\n");
  }

  SECTION("bracket") {
    TempFile f("p = 2\nvars = x, y, z\ngens = x*y, y*z\ne = 2\n");
    CliResult r = cli({"op", "bracket", "--input", f.path});
    REQUIRE(r.code == 0);
    CHECK(r.out == "y^4*z^4\nx^4*y^4\n");
  }

  SECTION("reduced basis") {
    TempFile f("p = 2\nvars = x, y, z\ngens = x*y - z^2, y*z\n");
    CliResult r = cli({"op", "gb", "--input", f.path});
    REQUIRE(r.code == 0);
    CHECK(r.out == "y*z\nx*y + z^2\nz^3\n");
  }

  SECTION("membership, text and json") {
    TempFile f(
        "p = 2\nvars = x, y, z\ngens = x*y, y*z\narg = x*y*z + x^2*y\n");
    CliResult r = cli({"op", "member", "--input", f.path});
    REQUIRE(r.code == 0);
    CHECK(r.out == "true\n");

    CliResult rj = cli({"op", "member", "--input", f.path, "--format", "json"});
    REQUIRE(rj.code == 0);
    json j = json::parse(rj.out);
    CHECK(j["op"] == "member");
    CHECK(j["member"] == true);
    CHECK(j["error"].is_null());

    TempFile g("p = 2\nvars = x, y, z\ngens = x*y, y*z\narg = x\n");
    CliResult rf = cli({"op", "member", "--input", g.path});
    REQUIRE(rf.code == 0);
    CHECK(rf.out == "false\n");
  }

  SECTION("json generator listing") {
    TempFile f("p = 2\nvars = x, y\ngens = x\ngens2 = y\n");
    CliResult r = cli({"op", "product", "--input", f.path, "--format", "json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["op"] == "product");
    CHECK(j["generators"] == json({"x*y"}));
    CHECK(j["error"].is_null());
  }

  SECTION("missing operand lines") {
    TempFile f("p = 2\nvars = x, y\ngens = x\n");
    CHECK(cli({"op", "colon", "--input", f.path}).code == 1);
    CHECK(cli({"op", "bracket", "--input", f.path}).code == 1);
    CliResult r = cli({"op", "member", "--input", f.path});
    CHECK(r.code == 1);
    CHECK(r.err.find("arg") != std::string::npos);
  }

  SECTION("unknown operation") {
    TempFile f("p = 2\nvars = x\ngens = x\n");
    CHECK(cli({"op", "transmogrify", "--input", f.path}).code == 1);
  }

  SECTION("ceiling failure reports partial output") {
    TempFile f(
        "p = 2\nvars = x, y, z, u, v, w\n"
        "gens = x*v - y*u, x*w - z*u, y*w - z*v\n"
        "gens2 = x*v - y*u\n");
    CliResult r = cli({"op", "colon", "--input", f.path, "--limit", "5",
                       "--format", "json"});
    CHECK(r.code == 2);
    json j = json::parse(r.out);
    CHECK(j["op"] == "colon");
    CHECK(j["error"].is_string());
  }
}
