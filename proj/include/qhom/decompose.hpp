#pragma once

#include <random>
#include <stdexcept>

#include "qhom/rep.hpp"

namespace qhom {

/// Raised when the randomized splitting search exhausts its budget without a
/// certificate; callers report "decomposition not certified" instead of a
/// possibly wrong answer.
class UncertifiedError : public std::runtime_error {
public:
  UncertifiedError() : std::runtime_error("decomposition not certified") {}
};

namespace detail {

inline Scalar random_coeff(std::mt19937_64& rng, const FieldSpec& f) {
  if (f.kind() == FieldSpec::Kind::PrimeField) {
    std::uniform_int_distribution<long long> d(0, f.characteristic() - 1);
    return Scalar(d(rng));
  }
  std::uniform_int_distribution<int> d(-20, 20);
  return Scalar(d(rng));
}

inline ModuleMap random_combo(const std::vector<ModuleMap>& basis,
                              std::mt19937_64& rng, const FieldSpec& f) {
  ModuleMap e = zero_map(basis[0].src, basis[0].tgt);
  for (const ModuleMap& b : basis) {
    Scalar c = random_coeff(rng, f);
    for (size_t v = 0; v < e.comp.size(); ++v)
      e.comp[v] = e.comp[v] + b.comp[v].scaled(c);
  }
  return e;
}

inline bool invertible_on_each_vertex(const ModuleMap& h) {
  for (const Matrix& c : h.comp) {
    if (c.rows() != c.cols()) return false;
    if (c.rank() != c.rows()) return false;
  }
  return true;
}

}  // namespace detail

/// Isomorphism test: dimension vectors, hom dimensions both ways, then a
/// randomized search for an invertible hom (generic combinations are
/// invertible whenever an isomorphism exists).
inline bool is_isomorphic(const Rep& m, const Rep& n, uint64_t seed = 0) {
  if (!same_algebra(m.alg, n.alg))
    throw std::invalid_argument("is_isomorphic: different algebras");
  if (m.dims != n.dims) return false;
  if (m.is_zero()) return true;
  auto mn = hom_basis(m, n);
  if (mn.empty()) return false;
  auto nm = hom_basis(n, m);
  if (mn.size() != nm.size()) return false;
  if (dim_hom(m, m) != dim_hom(n, n)) return false;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int trial = 0; trial < 8; ++trial) {
    ModuleMap e = detail::random_combo(mn, rng, m.alg->field());
    if (detail::invertible_on_each_vertex(e)) return true;
  }
  // deterministic fallback: an invertible round trip through a pair of hom
  // basis elements also witnesses an isomorphism
  for (const ModuleMap& f : mn)
    for (const ModuleMap& g : nm)
      if (detail::invertible_on_each_vertex(compose(g, f))) return true;
  return false;
}

struct Decomposition {
  struct Entry {
    Rep summand;
    int multiplicity;
  };
  std::vector<Entry> entries;
  bool certified = true;

  int total_dim() const {
    int d = 0;
    for (const auto& e : entries) d += e.multiplicity * e.summand.total_dim();
    return d;
  }
};

namespace detail {

inline ModuleMap power(const ModuleMap& e, int k) {
  ModuleMap r = identity_map(e.src);
  for (int i = 0; i < k; ++i) r = compose(e, r);
  return r;
}

/// Fitting split along an endomorphism: M = ker(e^d) + im(e^d).
inline bool try_fitting_split(const Rep& m, const ModuleMap& e, Rep& out_a,
                              Rep& out_b) {
  int d = m.total_dim();
  ModuleMap ek = power(e, d);
  std::vector<Matrix> ker_spaces, im_spaces;
  int kdim = 0;
  for (const Matrix& c : ek.comp) {
    Matrix K = c.kernel_basis();
    kdim += K.cols();
    ker_spaces.push_back(std::move(K));
    im_spaces.push_back(c.column_space_basis());
  }
  if (kdim == 0 || kdim == d) return false;
  out_a = sub_rep(m, ker_spaces).first;
  out_b = sub_rep(m, im_spaces).first;
  return true;
}

/// dim of End/rad(End) via the trace form of the natural representation
/// (exact over the rationals; over prime fields used as a best-effort
/// certificate only).
inline int semisimple_end_dim(const std::vector<ModuleMap>& end_basis,
                              const FieldSpec& f) {
  int n = static_cast<int>(end_basis.size());
  Matrix gram(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ModuleMap prod = compose(end_basis[i], end_basis[j]);
      Scalar tr(0);
      for (const Matrix& c : prod.comp)
        for (int k = 0; k < c.rows(); ++k) tr = f.add(tr, c.at(k, k));
      gram.at(i, j) = tr;
    }
  return gram.rank();
}

inline void decompose_into(const Rep& m, std::vector<Rep>& out,
                           std::mt19937_64& rng, int budget, bool& certified) {
  if (m.is_zero()) return;
  auto end_basis = hom_basis(m, m);
  if (end_basis.size() == 1) {
    out.push_back(m);
    return;
  }
  Rep a, b;
  // deterministic candidates first, then seeded random samples
  for (const ModuleMap& e : end_basis)
    if (try_fitting_split(m, e, a, b)) {
      decompose_into(a, out, rng, budget, certified);
      decompose_into(b, out, rng, budget, certified);
      return;
    }
  for (int t = 0; t < budget; ++t) {
    ModuleMap e = random_combo(end_basis, rng, m.alg->field());
    if (try_fitting_split(m, e, a, b)) {
      decompose_into(a, out, rng, budget, certified);
      decompose_into(b, out, rng, budget, certified);
      return;
    }
  }
  // no split found: certify indecomposability through End modulo radical
  int ss = semisimple_end_dim(end_basis, m.alg->field());
  if (ss != 1) certified = false;
  out.push_back(m);
}

}  // namespace detail

/// Krull-Schmidt decomposition with multiplicities. Splitting samples are
/// seeded for reproducibility.
inline Decomposition decompose(const Rep& m, uint64_t seed = 0,
                               int budget = 32) {
  std::mt19937_64 rng(seed ^ 0x51afb2e0d4c9f1b3ULL);
  std::vector<Rep> parts;
  Decomposition d;
  detail::decompose_into(m, parts, rng, budget, d.certified);
  for (const Rep& p : parts) {
    bool merged = false;
    for (auto& e : d.entries)
      if (is_isomorphic(e.summand, p, seed)) {
        ++e.multiplicity;
        merged = true;
        break;
      }
    if (!merged) d.entries.push_back({p, 1});
  }
  return d;
}

/// True iff every indecomposable summand of x is a summand of some generator.
inline bool add_member(const Rep& x, const std::vector<Rep>& generators,
                       uint64_t seed = 0) {
  Decomposition dx = decompose(x, seed);
  if (!dx.certified) throw UncertifiedError();
  std::vector<Rep> gen_parts;
  for (const Rep& g : generators) {
    Decomposition dg = decompose(g, seed);
    if (!dg.certified) throw UncertifiedError();
    for (const auto& e : dg.entries) gen_parts.push_back(e.summand);
  }
  for (const auto& e : dx.entries) {
    bool found = false;
    for (const Rep& g : gen_parts)
      if (is_isomorphic(e.summand, g, seed)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

/// One copy of each non-isomorphic indecomposable summand.
inline Rep basic_rep(const Rep& m, uint64_t seed = 0) {
  Decomposition d = decompose(m, seed);
  if (!d.certified) throw UncertifiedError();
  std::vector<Rep> parts;
  for (const auto& e : d.entries) parts.push_back(e.summand);
  if (parts.empty()) return zero_rep(m.alg);
  return direct_sum(parts, m.alg);
}

/// Chain of radical power subspaces rad^k M expressed in the coordinates of
/// m, ending at zero.
inline std::vector<std::vector<Matrix>> radical_chain(const Rep& m) {
  std::vector<std::vector<Matrix>> chain;
  Rep cur = m;
  ModuleMap to_m = identity_map(m);
  for (;;) {
    std::vector<Matrix> rad = radical_subspaces(cur);
    std::vector<Matrix> in_m;
    int dim = 0;
    for (size_t v = 0; v < rad.size(); ++v) {
      in_m.push_back(to_m.comp[v] * rad[v]);
      dim += rad[v].cols();
    }
    chain.push_back(in_m);
    if (dim == 0) break;
    auto [sub, incl] = sub_rep(cur, rad);
    to_m = compose(to_m, incl);
    cur = sub;
  }
  return chain;
}

/// Unique composition series: every radical layer has total dimension <= 1.
inline bool is_uniserial(const Rep& m) {
  auto chain = radical_chain(m);
  int prev = m.total_dim();
  for (const auto& spaces : chain) {
    int d = 0;
    for (const Matrix& s : spaces) d += s.cols();
    if (prev - d > 1) return false;
    prev = d;
  }
  return true;
}

inline bool is_nakayama(const AlgebraPtr& alg) {
  AlgebraPtr op = alg->opposite();
  for (int v = 0; v < alg->num_vertices(); ++v) {
    if (!is_uniserial(projective_rep(alg, v))) return false;
    if (!is_uniserial(projective_rep(op, v))) return false;
  }
  return true;
}

/// Complete indecomposable list of a Nakayama algebra: the nonzero radical
/// power quotients of the indecomposable projectives.
inline std::vector<Rep> nakayama_indecomposables(const AlgebraPtr& alg,
                                                 uint64_t seed = 0) {
  if (!is_nakayama(alg))
    throw std::invalid_argument("algebra is not Nakayama");
  std::vector<Rep> out;
  for (int v = 0; v < alg->num_vertices(); ++v) {
    Rep p = projective_rep(alg, v);
    auto chain = radical_chain(p);
    for (const auto& spaces : chain) {
      Rep q = quotient_rep(p, spaces).first;
      if (q.is_zero()) continue;
      bool dup = false;
      for (const Rep& r : out)
        if (is_isomorphic(r, q, seed)) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(q);
    }
  }
  return out;
}

}  // namespace qhom
