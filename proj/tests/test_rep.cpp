#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "qhom/rep.hpp"

using namespace qhom;

TEST_CASE("projective, simple and injective dimension vectors") {
  AlgebraPtr a3 = fx::linear_radsq(3);
  CHECK(fx::proj(a3, 1).dims == std::vector<int>{1, 0, 0});
  CHECK(fx::proj(a3, 2).dims == std::vector<int>{1, 1, 0});
  CHECK(fx::proj(a3, 3).dims == std::vector<int>{0, 1, 1});
  CHECK(fx::inj(a3, 1).dims == std::vector<int>{1, 1, 0});
  CHECK(fx::inj(a3, 2).dims == std::vector<int>{0, 1, 1});
  CHECK(fx::inj(a3, 3).dims == std::vector<int>{0, 0, 1});
  CHECK(fx::simple(a3, 2).dims == std::vector<int>{0, 1, 0});
  CHECK(regular_rep(a3).total_dim() == a3->dim());
  CHECK(cogenerator_rep(a3).total_dim() == a3->dim());
  for (int v = 1; v <= 3; ++v) {
    CHECK(fx::proj(a3, v).satisfies_relations());
    CHECK(fx::inj(a3, v).satisfies_relations());
  }
}

TEST_CASE("Hom out of a projective is evaluation at its vertex") {
  AlgebraPtr sq = fx::square();
  std::vector<Rep> samples = {regular_rep(sq), cogenerator_rep(sq),
                              fx::simple(sq, 3), fx::proj(sq, 6)};
  for (const Rep& m : samples)
    for (int v = 0; v < sq->num_vertices(); ++v)
      CHECK(dim_hom(projective_rep(sq, v), m) == m.dims[v]);
}

TEST_CASE("endomorphisms of the regular module recover the algebra") {
  for (AlgebraPtr a : {fx::linear_radsq(3), fx::a2(), fx::dual_numbers()}) {
    Rep lam = regular_rep(a);
    CHECK(dim_hom(lam, lam) == a->dim());
  }
}

TEST_CASE("module maps compose and commute with the action") {
  AlgebraPtr a3 = fx::linear_radsq(3);
  Rep p2 = fx::proj(a3, 2);
  Rep s2 = fx::simple(a3, 2);
  auto hb = hom_basis(p2, s2);
  REQUIRE(hb.size() == 1);
  CHECK(hb[0].is_valid());
  ModuleMap z = compose(hb[0], zero_map(p2, p2));
  CHECK(z.is_zero());
  CHECK(compose(hb[0], identity_map(p2)).is_valid());
}

TEST_CASE("duality transports hom spaces") {
  AlgebraPtr a3 = fx::linear_radsq(3);
  AlgebraPtr op = a3->opposite();
  std::vector<Rep> mods = {fx::simple(a3, 1), fx::simple(a3, 2),
                           fx::proj(a3, 3), regular_rep(a3)};
  for (const Rep& m : mods)
    for (const Rep& n : mods) {
      CHECK(dim_hom(m, n) == dim_hom(dualize(n, op), dualize(m, op)));
      // double dual comes back with the same dimension vector and homs
      Rep dd = dualize(dualize(m, op), a3);
      CHECK(dd.dims == m.dims);
      CHECK(dim_hom(m, dd) == dim_hom(m, m));
    }
  for (const Rep& m : mods) {
    Rep d = dualize(m, op);
    CHECK(d.satisfies_relations());
  }
}

namespace {

// every F2 module structure on the given dimension vector for a 1-arrow
// constraint set, by raw enumeration
long brute_force_hom_count(const Rep& m, const Rep& n) {
  const AlgebraPtr alg = m.alg;
  int nv = alg->num_vertices();
  std::vector<int> sizes;
  int bits = 0;
  for (int v = 0; v < nv; ++v) {
    sizes.push_back(n.dims[v] * m.dims[v]);
    bits += sizes.back();
  }
  REQUIRE(bits <= 20);
  long count = 0;
  for (long mask = 0; mask < (1L << bits); ++mask) {
    ModuleMap f = zero_map(m, n);
    int pos = 0;
    for (int v = 0; v < nv; ++v)
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c)
          f.comp[v].at(r, c) = Scalar((mask >> pos++) & 1);
    if (f.is_valid()) ++count;
  }
  return count;
}

std::vector<Rep> all_f2_reps(const AlgebraPtr& alg,
                             const std::vector<std::vector<int>>& dim_vecs) {
  std::vector<Rep> out;
  for (const auto& dims : dim_vecs) {
    // enumerate all arrow matrices bit by bit
    int bits = 0;
    for (const auto& ar : alg->quiver().arrows)
      bits += dims[ar.tgt] * dims[ar.src];
    for (long mask = 0; mask < (1L << bits); ++mask) {
      Rep m;
      m.alg = alg;
      m.dims = dims;
      int pos = 0;
      for (const auto& ar : alg->quiver().arrows) {
        Matrix a(dims[ar.tgt], dims[ar.src], alg->field());
        for (int r = 0; r < a.rows(); ++r)
          for (int c = 0; c < a.cols(); ++c)
            a.at(r, c) = Scalar((mask >> pos++) & 1);
        m.action.push_back(std::move(a));
      }
      if (m.satisfies_relations()) out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("hom dimensions agree with brute force over F2") {
  // solver vs raw enumeration on every module pair of small total dimension
  auto a2 = parse_input(fx::a2_text(), 64, FieldSpec::prime(2)).algebra;
  auto duals =
      parse_input(fx::dual_numbers_text(), 64, FieldSpec::prime(2)).algebra;

  std::vector<Rep> a2_mods = all_f2_reps(
      a2, {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}});
  std::vector<Rep> dual_mods = all_f2_reps(duals, {{1}, {2}});

  int checked = 0;
  for (const auto& mods : {a2_mods, dual_mods})
    for (const Rep& m : mods)
      for (const Rep& n : mods) {
        if (m.total_dim() + n.total_dim() > 4) continue;
        long brute = brute_force_hom_count(m, n);
        CHECK(brute == (1L << dim_hom(m, n)));
        ++checked;
      }
  CHECK(checked >= 90);
}

TEST_CASE("kernel, image and cokernel satisfy rank-nullity") {
  AlgebraPtr a3 = fx::linear_radsq(3);
  std::vector<Rep> mods = {regular_rep(a3), cogenerator_rep(a3),
                           fx::simple(a3, 2), fx::proj(a3, 3)};
  for (const Rep& m : mods)
    for (const Rep& n : mods)
      for (const ModuleMap& h : hom_basis(m, n)) {
        auto [ker, ki] = kernel(h);
        auto [im, ii] = image(h);
        auto [cok, cp] = cokernel(h);
        CHECK(ker.total_dim() + im.total_dim() == m.total_dim());
        CHECK(im.total_dim() + cok.total_dim() == n.total_dim());
        CHECK(ki.is_valid());
        CHECK(ii.is_valid());
        CHECK(cp.is_valid());
        CHECK(compose(h, ki).is_zero());
        CHECK(compose(cp, h).is_zero());
      }
}

TEST_CASE("radical of a projective misses only the top") {
  for (AlgebraPtr a : {fx::linear_radsq(4), fx::square()})
    for (int v = 0; v < a->num_vertices(); ++v) {
      Rep p = projective_rep(a, v);
      auto rad = radical_subspaces(p);
      int rdim = 0;
      for (const Matrix& r : rad) rdim += r.cols();
      CHECK(rdim == p.total_dim() - 1);
    }
}

TEST_CASE("relation-violating actions are detected") {
  AlgebraPtr duals = fx::dual_numbers();
  Rep bad;
  bad.alg = duals;
  bad.dims = {2};
  Matrix x(2, 2, duals->field());
  x.at(0, 1) = 1;
  x.at(1, 0) = 1;  // x^2 = identity, not zero
  bad.action.push_back(x);
  CHECK_FALSE(bad.satisfies_relations());
}
