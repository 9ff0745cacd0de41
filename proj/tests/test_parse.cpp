#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "qhom/report.hpp"

using namespace qhom;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("all shipped input files parse") {
  for (const char* name :
       {"a2_hereditary.alg", "a3_radsquare.alg", "a4_radsquare.alg",
        "a5_radsquare.alg", "commutative_square.alg", "dual_numbers.alg"}) {
    ParsedInput in =
        parse_input(slurp(std::string(QHOM_FIXTURE_DIR "/") + name));
    CHECK(in.algebra != nullptr);
    for (const auto& d : in.subcategories)
      CHECK_NOTHROW(build_subcategory(in, d));
  }
}

TEST_CASE("symbolic module expressions") {
  ParsedInput in = fx::a3();
  Rep m = resolve_module_expr("P(1)+S(3)", in.algebra, &in);
  CHECK(m.dims == std::vector<int>{1, 0, 1});
  Rep lam = resolve_module_expr("Lambda", in.algebra, &in);
  CHECK(lam.total_dim() == in.algebra->dim());
  Rep dl = resolve_module_expr("DLambda", in.algebra, &in);
  CHECK(is_isomorphic(dl, cogenerator_rep(in.algebra)));
  CHECK_THROWS_AS(resolve_module_expr("nope", in.algebra, &in), ParseError);
  CHECK_THROWS_AS(resolve_module_expr("P(9)", in.algebra, &in), ParseError);
}

TEST_CASE("explicit module blocks") {
  std::string text = fx::a2_text() +
                     "module M\n"
                     "dim 1 1\n"
                     "dim 2 1\n"
                     "map a 1\n";
  ParsedInput in = parse_input(text);
  const Rep* m = in.find_module("M");
  REQUIRE(m != nullptr);
  CHECK(m->dims == std::vector<int>{1, 1});
  CHECK(is_isomorphic(*m, projective_rep(in.algebra, 1)));
  CHECK(in.find_module("other") == nullptr);
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_error_at = [](const std::string& text, int line) {
    try {
      parse_input(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  // unknown vertex in an arrow declaration
  expect_error_at("field Q\nvertices 1 2\narrow a : 2 -> 5\n", 3);
  // non-composable relation term
  expect_error_at(
      "field Q\nvertices 1 2 3\narrow a : 2 -> 1\narrow b : 3 -> 2\n"
      "relation b*a\n",
      5);
  // wrong matrix entry count in a module block
  expect_error_at(fx::a2_text() + "module M\ndim 1 2\ndim 2 1\nmap a 1\n", 7);
  // relation-violating module
  expect_error_at(fx::dual_numbers_text() +
                      "module M\ndim 1 1\nmap x 1\n",
                  5);
  // bad field
  expect_error_at("field F 6\nvertices 1\n", 1);
}

TEST_CASE("non-indecomposable ambient entries are rejected") {
  ParsedInput in = parse_input(
      fx::linear_radsq_text(3) +
      "subcategory C generators = Lambda ambient = Lambda\n");
  CHECK_THROWS_AS(build_subcategory(in, in.subcategories[0]), ParseError);
}

TEST_CASE("structured reports are deterministic") {
  ParsedInput in1 = fx::a3();
  ParsedInput in2 = fx::a3();
  SubcategorySpec s1 = build_subcategory(in1, in1.subcategories[0], 5);
  SubcategorySpec s2 = build_subcategory(in2, in2.subcategories[0], 5);
  Json j1 = to_json(check_maximal_orthogonal(s1, 1, 5));
  Json j2 = to_json(check_maximal_orthogonal(s2, 1, 5));
  CHECK(j1.dump(2) == j2.dump(2));
}

TEST_CASE("report serialization and text rendering") {
  Verdict v;
  v.add_evidence("claim", "7");
  AlgebraPtr a3 = fx::linear_radsq(3);
  v.witnesses.emplace_back("S(3)", fx::simple(a3, 3));
  Json j = to_json(v);
  CHECK(j["outcome"] == "pass");
  CHECK(j["evidence"][0]["value"] == "7");
  CHECK(j["witnesses"][0]["module"]["total_dim"] == 1);

  std::ostringstream os;
  render_text(j, os);
  std::string text = os.str();
  CHECK(text.find("outcome: pass") != std::string::npos);
  CHECK(text.find("claim: claim") != std::string::npos);
  CHECK(text.find("value: 7") != std::string::npos);

  DimValue inf = DimValue::at_least(10);
  Json ji = to_json(inf);
  CHECK(ji["finite"] == false);
  CHECK(ji["value"] == 10);
}
