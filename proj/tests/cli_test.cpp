#include "gfroots/cli.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gfroots/error.hpp"
#include "gfroots/polytext.hpp"
#include "gfroots/random.hpp"
#include "json.hpp"

using namespace gfroots;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("poly text") {
  const Field f(default_spec(8));
  CHECK(format_poly_text(parse_poly_text("1,0,1", f)) == "1,0,1");
  CHECK(format_poly_text(parse_poly_text(" 0x1D , FF,00a ,0,0", f)) == "1d,ff,a");
  CHECK(format_poly_text(parse_poly_text("0,0", f)) == "0");
  for (const char* bad : {"", "1,,2", "1,2,", "g", "1 2", "100", "0x", "-1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_poly_text(bad, f), Error);
  }
  CHECK(parse_hex_u32("0x11D") == 0x11D);
  CHECK_THROWS_AS(parse_hex_u32("123456789"), Error);

  PolyRng rng(71);
  for (int i = 0; i < 200; ++i) {
    const Poly p = rng.poly(f, rng.below(30));
    const std::string text = format_poly_text(p);
    REQUIRE(parse_poly_text(text, f) == p);
    REQUIRE(format_poly_text(parse_poly_text(text, f)) == text);
  }
}

TEST_CASE("element notation") {
  const Field f(FieldSpec{3, 0b1011});
  CHECK(format_hex(Element{0}) == "0");
  CHECK(format_hex(Element{0x1d}) == "1d");
  CHECK(format_log(Element{0}, f) == "0");
  CHECK(format_log(Element{1}, f) == "a^0");
  CHECK(format_log(Element{0b101}, f) == "a^6");
}

TEST_CASE("find-roots") {
  for (const char* method : {"chien", "fast", "oracle"}) {
    CAPTURE(method);
    const Run r = run({"find-roots", "--m", "3", "--poly", "1,0,1", "--method", method});
    CHECK(r.code == 0);
    CHECK(r.out == "# roots: 1\n1 a^0\n");
  }
  const Run r = run({"find-roots", "--m", "3", "--poly", "3,6,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "# roots: 2\n2 a^1\n4 a^2\n");

  const Run zero_root = run({"find-roots", "--m", "3", "--poly", "0,1,1"});
  CHECK(zero_root.out == "# roots: 2\n0 0\n1 a^0\n");

  const Run custom = run({"find-roots", "--m", "3", "--prim-poly", "0xd", "--poly", "0,1"});
  CHECK(custom.code == 0);
  CHECK(custom.out == "# roots: 1\n0 0\n");
}

TEST_CASE("find-roots gives identical bytes for every method") {
  for (unsigned seed = 1; seed <= 30; ++seed) {
    const auto gen = run({"gen", "--m", "8", "--degree", std::to_string(seed),
                          "--roots", std::to_string(seed / 2), "--seed",
                          std::to_string(seed)});
    REQUIRE(gen.code == 0);
    const std::string poly = lines_of(gen.out).at(0);
    const auto fast = run({"find-roots", "--m", "8", "--poly", poly, "--method", "fast"});
    const auto chien = run({"find-roots", "--m", "8", "--poly", poly, "--method", "chien"});
    const auto orc = run({"find-roots", "--m", "8", "--poly", poly, "--method", "oracle"});
    REQUIRE(fast.code == 0);
    REQUIRE(fast.out == orc.out);
    REQUIRE(chien.out == orc.out);
  }
}

TEST_CASE("find-roots errors and edge cases") {
  CHECK(run({"find-roots", "--m", "3", "--poly", "0,0"}).code == 2);
  CHECK(run({"find-roots", "--m", "3", "--poly", "1,9"}).code == 1);
  CHECK(run({"find-roots", "--m", "3", "--poly", "1,x"}).code == 1);
  CHECK(run({"find-roots", "--m", "3", "--prim-poly", "f", "--poly", "1,1"}).code == 2);
  CHECK(run({"find-roots", "--m", "3", "--prim-poly", "6", "--poly", "1,1"}).code == 1);
  CHECK(run({"find-roots", "--m", "20", "--poly", "1,1"}).code == 1);
  CHECK(run({"find-roots", "--m", "3", "--poly", "1,1", "--method", "tjr"}).code == 1);
  CHECK(run({"find-roots", "--m", "3"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);

  const Run constant = run({"find-roots", "--m", "3", "--poly", "5"});
  CHECK(constant.code == 0);
  CHECK(constant.out == "# roots: 0\n");

  const Run diag = run({"find-roots", "--m", "3", "--poly", "0"});
  CHECK(diag.err.find("DegenerateInput") != std::string::npos);
}

TEST_CASE("gen") {
  const auto a = run({"gen", "--m", "3", "--degree", "2", "--roots", "2", "--seed", "5"});
  const auto b = run({"gen", "--m", "3", "--degree", "2", "--roots", "2", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto lines = lines_of(a.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1].rfind("# planted roots:", 0) == 0);

  const auto none = run({"gen", "--m", "8", "--degree", "7", "--seed", "3"});
  CHECK(none.code == 0);
  CHECK(lines_of(none.out).size() == 1);

  CHECK(run({"gen", "--m", "8", "--degree", "3", "--roots", "4"}).code == 1);
  CHECK(run({"gen", "--m", "8", "--degree", "0"}).code == 1);
  CHECK(run({"gen", "--m", "8", "--degree", "50", "--max-degree", "40"}).code == 1);
}

TEST_CASE("gen output has the exact degree and its planted roots") {
  const Field f(default_spec(8));
  for (unsigned seed = 1; seed <= 40; ++seed) {
    const std::size_t degree = 1 + seed % 33;
    const std::size_t roots = seed % (degree + 1);
    const auto g = run({"gen", "--m", "8", "--degree", std::to_string(degree),
                        "--roots", std::to_string(roots), "--seed", std::to_string(seed)});
    REQUIRE(g.code == 0);
    const auto lines = lines_of(g.out);
    const Poly p = parse_poly_text(lines.at(0), f);
    REQUIRE(p.degree() == degree);
    if (roots == 0) continue;

    const auto found = run({"find-roots", "--m", "8", "--poly", lines[0]});
    std::vector<std::string> found_hex;
    for (const auto& line : lines_of(found.out)) {
      if (line[0] != '#') found_hex.push_back(line.substr(0, line.find(' ')));
    }
    std::istringstream planted(lines.at(1).substr(std::string("# planted roots:").size()));
    for (std::string hex; planted >> hex;) {
      CAPTURE(hex);
      REQUIRE(std::find(found_hex.begin(), found_hex.end(), hex) != found_hex.end());
    }
  }
}

TEST_CASE("count-ops") {
  const auto chien = run({"count-ops", "--m", "8", "--degree", "8", "--method", "chien"});
  CHECK(chien.code == 0);
  CHECK(chien.out.find("adds 2040 / 2040 MATCH") != std::string::npos);
  CHECK(chien.out.find("muls 2040 / 2040 MATCH") != std::string::npos);

  const auto fast = run({"count-ops", "--m", "8", "--degree", "8", "--method", "fast"});
  CHECK(fast.code == 0);
  CHECK(fast.out.find("muls 574 / 574 MATCH") != std::string::npos);
  CHECK(fast.out.find("adds 1068 / 1068 MATCH") != std::string::npos);
  CHECK(fast.out.find("exps 510 / 510 MATCH") != std::string::npos);

  const auto small = run({"count-ops", "--m", "3", "--degree", "4", "--method", "fast"});
  CHECK(small.code == 0);
  CHECK(small.out == "method fast m 3 degree 4\nadds 23 / 23 MATCH\n"
                     "muls 19 / 19 MATCH\nexps 14 / 14 MATCH\nMATCH\n");

  CHECK(run({"count-ops", "--m", "8", "--degree", "0"}).code == 1);
}

TEST_CASE("bench") {
  const auto text = run({"bench", "--trials", "1"});
  CHECK(text.code == 0);
  // Title line, header, nine degree rows.
  CHECK(lines_of(text.out).size() == 11);

  const auto machine = run({"bench", "--trials", "2", "--format", "machine",
                            "--degrees", "8,16"});
  CHECK(machine.code == 0);
  const auto recs = lines_of(machine.out);
  REQUIRE(recs.size() == 2);
  CHECK(nlohmann::json::parse(recs[0]).at("degree") == 8);
  CHECK(nlohmann::json::parse(recs[1]).at("degree") == 16);

  CHECK(run({"bench", "--format", "xml"}).code == 1);
  CHECK(run({"bench", "--trials", "0"}).code == 1);
  CHECK(run({"bench", "--degrees", "0"}).code == 1);
}
