#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "qhom/orthogonal.hpp"

using namespace qhom;

namespace {

SubcategorySpec a3_nontrivial() {
  ParsedInput in = fx::a3();
  return build_subcategory(in, in.subcategories[0]);
}

}  // namespace

TEST_CASE("perp filters over the enumerated ambient") {
  SubcategorySpec spec = a3_nontrivial();
  REQUIRE(spec.ambient.size() == 5);
  std::vector<int> left = perp_filter(spec, 1, PerpSide::Left);
  std::vector<int> right = perp_filter(spec, 1, PerpSide::Right);
  // exactly one ambient member (the middle simple) falls outside
  CHECK(left.size() == 4);
  CHECK(right.size() == 4);
  CHECK(left == right);
  AlgebraPtr a3 = spec.generators[0].alg;
  for (size_t i = 0; i < spec.ambient.size(); ++i) {
    bool kept = std::find(left.begin(), left.end(), (int)i) != left.end();
    bool is_s2 = is_isomorphic(spec.ambient[i], fx::simple(a3, 2));
    CHECK(kept == !is_s2);
  }
}

TEST_CASE("certified maximal orthogonal subcategory") {
  SubcategorySpec spec = a3_nontrivial();
  Verdict v = check_maximal_orthogonal(spec, 1);
  CHECK(v.outcome == Verdict::Outcome::Pass);
  CHECK(v.passed());
  CHECK_FALSE(v.undecided);
}

TEST_CASE("deficient generator sets fail") {
  SubcategorySpec spec = a3_nontrivial();
  AlgebraPtr a3 = spec.generators[0].alg;
  std::vector<Rep> pieces = {fx::proj(a3, 1), fx::proj(a3, 2),
                             fx::proj(a3, 3), fx::simple(a3, 3)};
  // drop each indecomposable piece in turn; every proper subset loses
  // either the regular module or the cogenerator
  for (size_t drop = 0; drop < pieces.size(); ++drop) {
    SubcategorySpec sub = spec;
    sub.generators.clear();
    for (size_t i = 0; i < pieces.size(); ++i)
      if (i != drop) sub.generators.push_back(pieces[i]);
    Verdict v = check_maximal_orthogonal(sub, 1);
    CHECK_FALSE(v.passed());
    CHECK_FALSE(v.witnesses.empty());
  }
  // here S(3) is a summand of the cogenerator, so the trivial candidate
  // describes the same subcategory and passes as well
  SubcategorySpec trivial = spec;
  trivial.generators = {regular_rep(a3), cogenerator_rep(a3)};
  CHECK(check_maximal_orthogonal(trivial, 1).outcome ==
        Verdict::Outcome::Pass);
}

TEST_CASE("user-supplied ambients cap the claim") {
  ParsedInput in = parse_input(
      fx::linear_radsq_text(3) +
      "subcategory C generators = P(1)+P(2)+P(3)+S(3) "
      "ambient = P(1) P(2) P(3) S(2) S(3)\n");
  SubcategorySpec spec = build_subcategory(in, in.subcategories[0]);
  Verdict v = check_maximal_orthogonal(spec, 1);
  CHECK(v.outcome == Verdict::Outcome::AmbientLimited);
  CHECK(v.passed());
}

TEST_CASE("simple classification on the three-vertex instance") {
  SubcategorySpec spec = a3_nontrivial();
  SimpleClassification c = classify_simples(spec);
  CHECK(c.verdict.passed());
  CHECK(c.n == 2);
  REQUIRE(c.simples.size() == 3);
  CHECK(c.simples[0].pd == DimValue::of(0));
  CHECK(c.simples[1].pd == DimValue::of(1));
  CHECK(c.simples[1].id == DimValue::of(1));
  CHECK(c.simples[2].pd == DimValue::of(2));
  CHECK(c.simples[2].id == DimValue::of(0));
  CHECK(c.simples[2].injective);
  CHECK_FALSE(c.simples[1].injective);
}

TEST_CASE("simple classification on the deeper chain") {
  ParsedInput in = parse_input(
      fx::linear_radsq_text(4) +
      "subcategory trivial generators = Lambda+DLambda ambient = nakayama\n");
  SubcategorySpec spec = build_subcategory(in, in.subcategories[0]);
  SimpleClassification c = classify_simples(spec);
  CHECK(c.verdict.passed());
  CHECK(c.n == 3);
  // middle band: S(2), S(3) have pd and id inside 1..n-1
  CHECK(c.simples[1].pd == DimValue::of(1));
  CHECK(c.simples[2].pd == DimValue::of(2));
  CHECK(c.simples[1].id == DimValue::of(2));
  CHECK(c.simples[2].id == DimValue::of(1));
  CHECK(c.simples[3].pd == DimValue::of(3));
  CHECK(c.simples[3].injective);
}

TEST_CASE("classification refuses inapplicable algebras") {
  AlgebraPtr a2 = fx::a2();
  SubcategorySpec spec;
  spec.generators = {regular_rep(a2), cogenerator_rep(a2)};
  spec.ambient = nakayama_indecomposables(a2);
  spec.provenance = SubcategorySpec::Provenance::NakayamaEnumerated;
  SimpleClassification c = classify_simples(spec);
  CHECK(c.verdict.outcome == Verdict::Outcome::PremiseNotMet);
}

TEST_CASE("trivial-candidate maximality analysis") {
  // deeper chains: the trivial candidate is the maximal subcategory
  for (int nv : {4, 5}) {
    AlgebraPtr a = fx::linear_radsq(nv);
    Verdict v = check_trivial_maximal(a, nv - 1);
    CHECK(v.passed());
    bool found = false;
    for (auto& [k, val] : v.evidence)
      if (k.find("add(Lambda + DLambda)") != std::string::npos) {
        CHECK(val == "yes");
        found = true;
      }
    CHECK(found);
  }
  // three-vertex instance: the trivial candidate is maximal too, since the
  // deep simple is itself a cogenerator summand
  Verdict v3 = check_trivial_maximal(fx::linear_radsq(3), 2);
  CHECK(v3.passed());
  bool trivial_ok = false;
  for (auto& [k, val] : v3.evidence)
    if (k.find("add(Lambda + DLambda)") != std::string::npos)
      trivial_ok = (val == "yes");
  CHECK(trivial_ok);

  // commuting-square algebra: both routes blocked
  Verdict vsq = check_trivial_maximal(fx::square(), 2);
  CHECK(vsq.outcome == Verdict::Outcome::Fail);
  CHECK_FALSE(vsq.witnesses.empty());
}

TEST_CASE("commuting-square algebra numbers") {
  AlgebraPtr sq = fx::square();
  CHECK(pd(fx::simple(sq, 3)) == DimValue::of(1));
  CHECK(injective_dim(fx::simple(sq, 3)) == DimValue::of(2));
  for (int v : {4, 5, 6}) CHECK(is_injective(fx::proj(sq, v)));
  for (int v : {1, 2, 3}) {
    CHECK(injective_dim(fx::proj(sq, v)) == DimValue::of(2));
    CHECK(dim_hom(fx::simple(sq, 3), fx::proj(sq, v)) == 0);
  }
  CHECK(ext_dims(cogenerator_rep(sq), regular_rep(sq), 2)[1] == 0);
  CHECK(ext_dims(cogenerator_rep(sq), regular_rep(sq), 2)[2] == 5);
  // no simple has pd = id = 2
  for (int v = 1; v <= 6; ++v) {
    DimValue p = pd(fx::simple(sq, v));
    DimValue d = injective_dim(fx::simple(sq, v));
    CHECK_FALSE((p == DimValue::of(2) && d == DimValue::of(2)));
  }
}

TEST_CASE("almost-hereditary criterion fails on the commuting square") {
  ParsedInput in = parse_input(
      fx::square_text() +
      "subcategory sp generators = Lambda+DLambda "
      "ambient = S(1) S(2) S(3) S(4) S(5) S(6) P(1) P(2) P(3)\n");
  SubcategorySpec spec = build_subcategory(in, in.subcategories[0]);
  Verdict v = check_almost_hereditary_criterion(spec);
  CHECK(v.outcome == Verdict::Outcome::Fail);
  REQUIRE_FALSE(v.witnesses.empty());
  AlgebraPtr sq = spec.ambient[0].alg;
  bool s4_or_s5 = is_isomorphic(v.witnesses[0].second, fx::simple(sq, 4)) ||
                  is_isomorphic(v.witnesses[0].second, fx::simple(sq, 5));
  CHECK(s4_or_s5);
}

TEST_CASE("auslander-style equivalent formulations agree") {
  SubcategorySpec spec = a3_nontrivial();
  Verdict v = check_auslander_equivalences(spec, 2);
  CHECK(v.passed());
  bool grade_ok = false;
  for (auto& [k, val] : v.evidence)
    if (k.find("grade") != std::string::npos) grade_ok = (val == "2");
  CHECK(grade_ok);
}

TEST_CASE("left approximations into the subcategory and coresolutions") {
  SubcategorySpec spec = a3_nontrivial();
  AlgebraPtr a3 = spec.generators[0].alg;
  // id S(2) = 1 <= n-1: the approximation is the injective envelope and the
  // whole coresolution stays inside the subcategory
  Verdict v2 = check_lemma_3_7(spec, fx::simple(a3, 2), 2);
  CHECK(v2.passed());
  // id S(1) = 2 = n: the approximation target is not the envelope
  Verdict v1 = check_lemma_3_7(spec, fx::simple(a3, 1), 2);
  CHECK(v1.passed());
  bool env = true;
  for (auto& [k, val] : v1.evidence)
    if (k == "approximation target is the injective envelope")
      env = (val == "yes");
  CHECK_FALSE(env);
}
