#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hdeg/cli/report.hpp"

using namespace hdeg;
using namespace hdeg::cli;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report run(const std::string& text, SessionConfig cfg = {}) { return run_command(parse_input(text), cfg); }

const char* const kEx46 =
    "ring S = QQ[x,y,z];\n"
    "ideal J = intersect((x),(power((y),2), z));\n"
    "algebra A = S / J;\n"
    "params Q = (x - y, x - z);\n";

}  // namespace

TEST_CASE("parse a full script") {
  auto s = parse_input(std::string(kEx46) + "check invariants;\ncheck thm2;");
  REQUIRE(s.statements.size() == 6);
  CHECK(s.command_count() == 2);
  const auto& J = std::get<IdealDecl>(s.statements[1]);
  CHECK(J.expr.kind == IdealExpr::Kind::intersect);
  CHECK(print_expr(J.expr) == "intersect((x), (power((y), 2), z))");
  CHECK(std::get<ParamsDecl>(s.statements[3]).gens == std::vector<std::string>{"x-y", "x-z"});
}

TEST_CASE("empty script") {
  auto s = parse_input("  # nothing here\n// nor here\n");
  CHECK(s.statements.empty());
  auto r = run_command(s, {});
  CHECK(r.is_array());
  CHECK(r.empty());
  CHECK(emit_report(r, Format::json) == "[]\n");
  CHECK_FALSE(has_violation(r));
}

TEST_CASE("round trip through the printer") {
  for (const char* f : {"ex39.hdeg", "ex46.hdeg", "builtin.hdeg", "modules.hdeg"}) {
    CAPTURE(f);
    auto s = parse_input(slurp(std::filesystem::path(HDEG_TEST_DATA) / f));
    auto text = print_script(s);
    CHECK(parse_input(text) == s);
    CHECK(print_script(parse_input(text)) == text);
  }
  auto s = parse_input("ring S = ZZ/7[a,b]; ideal I = product((a, b), (a - 3*b)); ideal K = power(I, 2);");
  CHECK(parse_input(print_script(s)) == s);
}

TEST_CASE("errors carry positions") {
  auto where = [](const std::string& text) {
    try {
      parse_input(text);
    } catch (const ScriptError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(0, 0);
  };
  CHECK(where("ring S = QQ[x,y];\nideal J = (x + 1);") == std::make_pair(2, 12));
  CHECK(where("ring S = QQ[x];\n  ideal J = (y);") == std::make_pair(2, 14));
  CHECK(where("ring S = QQ[x];\nalgebra A = S / K;") == std::make_pair(2, 17));
  CHECK(where("check thm1;") == std::make_pair(1, 1));
  CHECK_THROWS_WITH_AS(parse_input("ring S = QQ[x,y];\nideal J = (x + 1);"), "2:12: inhomogeneous generator 'x+1'", InputError);
}

TEST_CASE("nested ideals and names in lists") {
  auto s = parse_input("ring S = QQ[x,y]; ideal I = (x); ideal K = (I, (y^2), (x + y)*y, intersect(I, (y)));");
  const auto& K = std::get<IdealDecl>(s.statements[2]).expr;
  REQUIRE(K.args.size() == 4);
  CHECK(K.args[0].kind == IdealExpr::Kind::name);
  CHECK(K.args[1].kind == IdealExpr::Kind::poly);
  CHECK(K.args[2].text == "x*y+y^2");
  CHECK(K.args[3].kind == IdealExpr::Kind::intersect);
}

TEST_CASE("scope rules") {
  CHECK_THROWS_AS(parse_input("ring S = QQ[x]; ideal x = (x);"), ScriptError);
  CHECK_THROWS_AS(parse_input("ring S = QQ[x]; ideal I = (x); ring T = QQ[x]; ideal K = product(I, (x));"), ScriptError);
  CHECK_THROWS_AS(parse_input("ring S = QQ[x]; module M = coker [[x]];"), ScriptError);
  CHECK_THROWS_AS(parse_input("ring S = QQ[x]; params Q = (x); ring T = QQ[y]; algebra A = T / (); check thm1;"), ScriptError);
  CHECK_THROWS_AS(parse_input("example ex39 l=2 m=1; ring S = QQ[x]; params Q = (x); check thm1;"), ScriptError);
  CHECK_NOTHROW(parse_input("ring S = QQ[x]; algebra A = S / (); check invariants;"));
}

TEST_CASE("invariants of ex46 through the script") {
  auto r = run(std::string(kEx46) + "check invariants;");
  REQUIRE(r.size() == 1);
  const auto& c = r[0];
  CHECK(c["hilbert_coefficients"] == Report::array({1, -2, -1}));
  CHECK(c["hdeg"] == 3);
  CHECK(c["torsions"] == Report::array({2}));
  CHECK(c["chi1"] == 1);
  CHECK(c["colength"] == 2);
  std::vector<std::string> keys;
  for (const auto& [k, v] : c.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "instance", "ideal", "dimension", "depth", "multiplicity", "colength",
                                         "hilbert_coefficients", "postulation", "hdeg", "torsions", "chi1", "h0_length",
                                         "dual_dims", "flags", "thm1", "thm2", "audit", "witnesses"});
}

TEST_CASE("theorem checks through the script") {
  auto r = run("example ex39 l=2 m=1; check thm1;");
  CHECK(r[0]["thm1"]["condition1"] == true);
  CHECK(r[0]["thm1"]["sound"] == true);
  auto t = run(std::string(kEx46) + "check thm2;");
  CHECK(t[0]["thm2"]["condition2"] == true);
  CHECK(t[0]["thm2"]["condition1"] == false);
  CHECK(t[0]["thm2"]["equivalence_checked"] == false);
}

TEST_CASE("audit on a Cohen-Macaulay ring") {
  auto r = run("ring S = QQ[x,y]; algebra A = S / (); params Q = (x, y); check audit;");
  CHECK(r[0]["audit"]["all_pass"] == true);
  for (const auto& c : r[0]["audit"]["checks"])
    if (c["name"] != "dim M_2 <= 2") CHECK(c["lhs"].get<long>() <= 0);
  CHECK_FALSE(has_violation(r));
}

TEST_CASE("d-sequence failures become witnesses") {
  auto r = run("ring S = QQ[x,y]; algebra Y = S / (x^2, x*y); params a = (x, y); check invariants;");
  CHECK(r[0]["flags"]["d_sequence"] == false);
  bool found = false;
  for (const auto& w : r[0]["witnesses"]) found = found || w.get<std::string>() == "d-sequence fails at (i,j)=(1,1)";
  CHECK(found);
}

TEST_CASE("module presentations") {
  auto r = run(
      "ring T = QQ[x,y]; algebra B = T / (x^2, x*y);"
      "module N = coker [[x, 0], [0, y]] twists (0, 1); params P = (y); check invariants;");
  CHECK(r[0]["dimension"] == 1);
  CHECK(r[0]["hilbert_coefficients"] == Report::array({1, -2}));
  CHECK(r[0]["h0_length"] == 2);
}

TEST_CASE("field override and runtime errors") {
  SessionConfig cfg;
  cfg.field = parse_field_spec("fp:32003");
  auto r = run(std::string(kEx46) + "check invariants;", cfg);
  CHECK(r[0]["hilbert_coefficients"] == Report::array({1, -2, -1}));
  CHECK_THROWS_AS(parse_field_spec("fp:9"), InputError);
  CHECK_THROWS_AS(parse_field_spec("reals"), InputError);
  cfg.field = Field::prime(2);
  CHECK_THROWS_AS(run("ring S = QQ[x]; ideal I = (x/2);", cfg), InputError);
  CHECK_THROWS_WITH_AS(run("ring S = QQ[x,y]; algebra A = S / (); params Q = (x); check thm1;"),
                       doctest::Contains("command 1 (check thm1 on A)"), InputError);
}

TEST_CASE("structured output is deterministic") {
  SessionConfig cfg;
  cfg.seed = 11;
  auto text = slurp(std::filesystem::path(HDEG_TEST_DATA) / "builtin.hdeg");
  auto a = emit_report(run(text, cfg), Format::json);
  auto b = emit_report(run(text, cfg), Format::json);
  CHECK(a == b);
  auto t = emit_report(run(text, cfg), Format::text);
  CHECK(t.find("== check thm2 on ex46(l=2)") != std::string::npos);
}
