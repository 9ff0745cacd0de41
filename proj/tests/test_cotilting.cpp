#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "qhom/cotilting.hpp"

using namespace qhom;

TEST_CASE("regular and coregular modules are cotilting") {
  AlgebraPtr a3 = fx::linear_radsq(3);
  CotiltingReport lam = check_cotilting(regular_rep(a3));
  CHECK(lam.status == CotiltingReport::Status::Cotilting);
  CHECK(lam.id_t == DimValue::of(2));
  CHECK(lam.self_orthogonal);
  CHECK(lam.cogenerates);
  CHECK(lam.resolution_depth == 3);

  CotiltingReport dl = check_cotilting(cogenerator_rep(a3));
  CHECK(dl.status == CotiltingReport::Status::Cotilting);
  CHECK(dl.id_t == DimValue::of(0));
  CHECK(dl.resolution_depth == 1);

  // a selfinjective algebra: the regular module works immediately
  AlgebraPtr duals = fx::dual_numbers();
  CotiltingReport reg = check_cotilting(regular_rep(duals));
  CHECK(reg.status == CotiltingReport::Status::Cotilting);
  CHECK(reg.id_t == DimValue::of(0));
}

TEST_CASE("non-cotilting candidates are rejected with reasons") {
  AlgebraPtr a3 = fx::linear_radsq(3);
  // S(2) is self-orthogonal of finite id, but cannot coresolve DLambda
  CotiltingReport s2 = check_cotilting(fx::simple(a3, 2));
  CHECK(s2.status == CotiltingReport::Status::NotCotilting);
  CHECK(s2.self_orthogonal);
  CHECK_FALSE(s2.cogenerates);

  // infinite injective dimension is detected through the cutoff
  AlgebraPtr duals = fx::dual_numbers();
  CotiltingReport s = check_cotilting(fx::simple(duals, 1));
  CHECK(s.status == CotiltingReport::Status::NotCotilting);
  CHECK_FALSE(s.id_t.finite);
}

TEST_CASE("perpendicular membership") {
  AlgebraPtr a3 = fx::linear_radsq(3);
  Rep dl = cogenerator_rep(a3);
  // id DLambda = 0: everything is perpendicular
  CHECK(in_perp_T(fx::simple(a3, 2), dl));
  Rep lam = regular_rep(a3);
  CHECK(in_perp_T(fx::proj(a3, 2), lam));
  // pd S(2) = 1 forces Ext^1(S(2), Lambda) != 0
  CHECK_FALSE(in_perp_T(fx::simple(a3, 2), lam));

  AlgebraPtr duals = fx::dual_numbers();
  CHECK_THROWS_AS(in_perp_T(regular_rep(duals), fx::simple(duals, 1)),
                  UndecidedError);
}

TEST_CASE("coresolutions inside add of a cotilting module") {
  AlgebraPtr a3 = fx::linear_radsq(3);
  Rep dl = cogenerator_rep(a3);
  auto terms = lemma_4_2_coresolution(fx::simple(a3, 2), dl);
  REQUIRE(terms.size() == 2);
  CHECK(is_isomorphic(terms[0], fx::inj(a3, 2)));
  CHECK(is_isomorphic(terms[1], fx::simple(a3, 3)));

  auto deep = lemma_4_2_coresolution(fx::simple(a3, 1), dl);
  REQUIRE(deep.size() == 3);
  CHECK(is_isomorphic(deep[0], fx::inj(a3, 1)));

  // a module of infinite injective dimension cannot be coresolved
  AlgebraPtr duals = fx::dual_numbers();
  CHECK_THROWS_AS(
      lemma_4_2_coresolution(fx::simple(duals, 1), regular_rep(duals)),
      UndecidedError);
}

TEST_CASE("cotilting modules perpendicular to the regular module") {
  AlgebraPtr a3 = fx::linear_radsq(3);
  Verdict v = check_theorem_4_3(regular_rep(a3));
  CHECK(v.passed());
  bool op_id = false, basic = false;
  for (auto& [k, val] : v.evidence) {
    if (k == "id Lambda over the opposite") op_id = (val == "2");
    if (k == "basic(T) isomorphic to basic(Lambda)") basic = (val == "yes");
  }
  CHECK(op_id);
  CHECK(basic);

  // the premise filter: DLambda is not Ext-orthogonal to Lambda here
  Verdict dl = check_theorem_4_3(cogenerator_rep(a3));
  CHECK(dl.outcome == Verdict::Outcome::PremiseNotMet);

  // selfinjective input: id Lambda = 0 never meets the premise
  AlgebraPtr duals = fx::dual_numbers();
  Verdict reg = check_theorem_4_3(regular_rep(duals));
  CHECK(reg.outcome == Verdict::Outcome::PremiseNotMet);
}

TEST_CASE("Ext identity through syzygies of the translate") {
  AlgebraPtr duals = fx::dual_numbers();
  Rep s = fx::simple(duals, 1);
  Rep lam = regular_rep(duals);
  for (int degree = 1; degree <= 3; ++degree)
    for (const Rep& m : {s, lam})
      for (const Rep& n : {s, lam}) {
        Verdict v = lemma_4_5_identity(m, n, degree);
        CHECK(v.passed());
      }
  CHECK(lemma_4_5_identity(s, s, 0).outcome ==
        Verdict::Outcome::PremiseNotMet);
}

TEST_CASE("orbit of the syzygy-translate operation") {
  AlgebraPtr duals = fx::dual_numbers();
  Rep s = fx::simple(duals, 1);
  OrbitReport one = omega_n_tau_orbit(s, 1);
  CHECK(one.period == std::optional<int>(1));
  CHECK_FALSE(one.degenerate);
  OrbitReport two = omega_n_tau_orbit(s, 2);
  CHECK(two.period == std::optional<int>(1));

  // projective starting points collapse immediately
  OrbitReport reg = omega_n_tau_orbit(regular_rep(duals), 1);
  CHECK(reg.degenerate);
  CHECK(reg.period == std::optional<int>(0));
}

TEST_CASE("orbit steps stay inside the orthogonal subcategory") {
  // the non-projective members of a certified subcategory are permuted (up
  // to collapse over finite global dimension) by the operation
  AlgebraPtr duals = fx::dual_numbers();
  std::vector<Rep> x = {regular_rep(duals), fx::simple(duals, 1)};
  OrbitReport r = omega_n_tau_orbit(fx::simple(duals, 1), 1, 8);
  for (const Rep& step : r.steps)
    CHECK((step.is_zero() || add_member(step, x)));

  // starting points that are not perpendicular to the regular module are
  // rejected instead of producing a meaningless orbit
  AlgebraPtr a3 = fx::linear_radsq(3);
  CHECK_THROWS_AS(omega_n_tau_orbit(fx::simple(a3, 3), 2, 4),
                  std::invalid_argument);
}
