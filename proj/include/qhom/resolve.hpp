#pragma once

#include <map>

#include "qhom/decompose.hpp"
#include "qhom/verdict.hpp"

namespace qhom {

/// Projective cover P(top m) ->> m. The kernel lies in rad P by construction.
struct Cover {
  ProjSum proj;
  ModuleMap map;  // proj.rep -> m, surjective
};

inline Cover projective_cover(const Rep& m) {
  if (m.is_zero())
    throw std::invalid_argument("projective_cover: zero module");
  const FieldSpec& f = m.alg->field();
  int nv = m.alg->num_vertices();
  std::vector<int> verts;
  std::vector<Matrix> gens;
  for (int j = 0; j < nv; ++j) {
    Matrix rad = radical_subspaces(m)[j];
    std::vector<int> lifts = complement_of_column_span(rad);
    for (int c : lifts) {
      verts.push_back(j);
      Matrix v(m.dims[j], 1, f);
      v.at(c, 0) = 1;
      gens.push_back(v);
    }
  }
  Cover cv;
  cv.proj = projective_sum(m.alg, verts);
  cv.map = hom_from_projective_sum(cv.proj, m, gens);
  return cv;
}

/// A finite prefix of a minimal projective resolution with multiplicity
/// bookkeeping. diffs[0] is P_0 -> M; diffs[i] is P_i -> P_{i-1} for i >= 1.
struct Resolution {
  Rep module;
  std::vector<ProjSum> terms;
  std::vector<ModuleMap> diffs;
  std::vector<std::vector<int>> mults;  // per term: vertex -> P(v) count
  std::vector<int> term_dims;
  bool terminated = false;  // a zero kernel was reached

  int length() const { return static_cast<int>(terms.size()) - 1; }
};

inline Resolution minimal_projective_resolution(const Rep& m, int length) {
  Resolution res;
  res.module = m;
  Rep cur = m;
  ModuleMap to_prev;  // inclusion of the current kernel into the previous term
  for (int i = 0; i <= length; ++i) {
    if (cur.is_zero()) {
      res.terminated = true;
      return res;
    }
    Cover cv = projective_cover(cur);
    ModuleMap diff =
        (i == 0) ? cv.map : compose(to_prev, cv.map);
    auto [ker, incl] = kernel(cv.map);
    std::vector<int> mult(m.alg->num_vertices(), 0);
    for (int v : cv.proj.verts) ++mult[v];
    res.terms.push_back(cv.proj);
    res.diffs.push_back(std::move(diff));
    res.mults.push_back(std::move(mult));
    res.term_dims.push_back(cv.proj.rep.total_dim());
    to_prev = incl;
    cur = ker;
  }
  if (cur.is_zero()) res.terminated = true;
  return res;
}

/// Kernel at stage k of the minimal projective resolution; syzygy(m, 0) = m.
inline Rep syzygy(const Rep& m, int k) {
  Rep cur = m;
  for (int i = 0; i < k; ++i) {
    if (cur.is_zero()) return cur;
    Cover cv = projective_cover(cur);
    cur = kernel(cv.map).first;
  }
  return cur;
}

/// Dimension table of Ext^i(M, N) for 0 <= i <= max_degree.
struct ExtTable {
  std::vector<int> dims;
  int operator[](int i) const {
    return i < static_cast<int>(dims.size()) ? dims[i] : 0;
  }
};

namespace detail {

/// Rank of the composition map Hom(B, N) -> Hom(A, N), phi -> phi . d,
/// for d : A -> B.
inline int rank_hom_pullback(const ModuleMap& d, const Rep& n) {
  auto hb = hom_basis(d.tgt, n);
  if (hb.empty()) return 0;
  std::vector<std::vector<Scalar>> cols;
  for (const ModuleMap& phi : hb) cols.push_back(flatten(compose(phi, d)));
  int rows = static_cast<int>(cols[0].size());
  Matrix m(rows, static_cast<int>(cols.size()), n.alg->field());
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) m.at(r, (int)c) = cols[c][r];
  return m.rank();
}

inline int dim_hom_projective_term(const Resolution& res, int i,
                                   const Rep& n) {
  int d = 0;
  for (size_t v = 0; v < res.mults[i].size(); ++v)
    d += res.mults[i][v] * n.dims[v];
  return d;
}

}  // namespace detail

/// Ext^i as cohomology of Hom(minimal projective resolution of m, n).
inline ExtTable ext_dims(const Rep& m, const Rep& n, int max_degree) {
  if (!same_algebra(m.alg, n.alg))
    throw std::invalid_argument("ext_dims: modules over different algebras");
  ExtTable t;
  if (m.is_zero()) {
    t.dims.assign(max_degree + 1, 0);
    return t;
  }
  Resolution res = minimal_projective_resolution(m, max_degree + 1);
  int k = static_cast<int>(res.terms.size());  // terms 0..k-1 exist
  for (int i = 0; i <= max_degree; ++i) {
    if (i >= k) {
      t.dims.push_back(0);
      continue;
    }
    int hom_dim = detail::dim_hom_projective_term(res, i, n);
    int rank_out = (i + 1 < k) ? detail::rank_hom_pullback(res.diffs[i + 1], n)
                               : 0;
    int rank_in = (i >= 1) ? detail::rank_hom_pullback(res.diffs[i], n) : 0;
    if (i == 0)
      t.dims.push_back(hom_dim - rank_out);  // = dim Hom(m, n)
    else
      t.dims.push_back(hom_dim - rank_out - rank_in);
  }
  return t;
}

/// Resolutions run to max(requested, 2 dim Lambda) before a dimension is
/// flagged as not finite within the cutoff.
inline int default_cutoff(const AlgebraPtr& alg) { return 2 * alg->dim(); }

inline int effective_cutoff(const AlgebraPtr& alg, int requested) {
  return std::max(requested, default_cutoff(alg));
}

inline DimValue pd(const Rep& m, int cutoff = -1) {
  if (m.is_zero()) return DimValue::of(0);
  cutoff = effective_cutoff(m.alg, cutoff);
  Resolution res = minimal_projective_resolution(m, cutoff);
  if (!res.terminated) return DimValue::at_least(cutoff);
  return DimValue::of(static_cast<int>(res.terms.size()) - 1);
}

inline DimValue injective_dim(const Rep& m, int cutoff = -1) {
  return pd(dualize(m), cutoff);
}

inline DimValue global_dim(const AlgebraPtr& alg, int cutoff = -1) {
  DimValue g = DimValue::of(0);
  for (int v = 0; v < alg->num_vertices(); ++v) {
    DimValue d = pd(simple_rep(alg, v), cutoff);
    if (!d.finite) return d;
    if (d.value > g.value) g = d;
  }
  return g;
}

/// grade M = inf{ i >= 0 : Ext^i(M, Lambda) != 0 }.
inline DimValue grade(const Rep& m, int cutoff = -1) {
  cutoff = effective_cutoff(m.alg, cutoff);
  if (m.is_zero()) return DimValue::at_least(cutoff);
  Rep lam = regular_rep(m.alg);
  DimValue p = pd(m, cutoff);
  int bound = p.finite ? p.value : cutoff;
  ExtTable t = ext_dims(m, lam, bound);
  for (int i = 0; i <= bound; ++i)
    if (t[i] != 0) return DimValue::of(i);
  return DimValue::at_least(bound);
}

/// r.grade M = inf{ i >= 1 : Ext^i(M, Lambda) != 0 }.
inline DimValue reduced_grade(const Rep& m, int cutoff = -1) {
  cutoff = effective_cutoff(m.alg, cutoff);
  if (m.is_zero()) return DimValue::at_least(cutoff);
  Rep lam = regular_rep(m.alg);
  DimValue p = pd(m, cutoff);
  int bound = p.finite ? std::max(p.value, 1) : cutoff;
  ExtTable t = ext_dims(m, lam, bound);
  for (int i = 1; i <= bound; ++i)
    if (t[i] != 0) return DimValue::of(i);
  return DimValue::at_least(bound);
}

inline bool is_projective(const Rep& m) {
  return m.is_zero() || kernel(projective_cover(m).map).first.is_zero();
}

inline bool is_injective(const Rep& m) { return is_projective(dualize(m)); }

/// Minimal injective coresolution 0 -> M -> I^0 -> I^1 -> ..., obtained as
/// the dual of the minimal projective resolution of DM over the opposite.
struct InjectiveCoresolution {
  Rep module;
  std::vector<Rep> terms;
  std::vector<std::vector<int>> mults;  // per term: vertex -> I(v) count
  std::vector<ModuleMap> maps;  // maps[0]: M -> I^0; maps[i]: I^{i-1} -> I^i
  std::vector<int> term_dims;
  bool terminated = false;

  int length() const { return static_cast<int>(terms.size()) - 1; }
};

inline InjectiveCoresolution minimal_injective_coresolution(const Rep& m,
                                                            int length) {
  AlgebraPtr op = m.alg->opposite();
  Resolution r = minimal_projective_resolution(dualize(m, op), length);
  InjectiveCoresolution c;
  c.module = m;
  c.terminated = r.terminated;
  c.mults = r.mults;
  c.term_dims = r.term_dims;
  for (size_t i = 0; i < r.terms.size(); ++i)
    c.terms.push_back(dualize(r.terms[i].rep, m.alg));
  for (size_t i = 0; i < r.diffs.size(); ++i)
    c.maps.push_back(dualize(r.diffs[i], m.alg));
  return c;
}

/// The i-th term of the minimal injective coresolution of the regular module.
inline std::vector<Rep> injective_coresolution_terms_of_regular(
    const AlgebraPtr& alg, int upto) {
  InjectiveCoresolution c =
      minimal_injective_coresolution(regular_rep(alg), upto);
  return c.terms;
}

/// Auslander transpose from the minimal presentation P_1 -> P_0 -> M -> 0:
/// Tr M = coker(P_0^* -> P_1^*) over the opposite algebra. Projective
/// summands of m must already be split off by the caller for a canonical
/// answer; Tr of a projective is zero.
inline Rep transpose_rep(const Rep& m) {
  AlgebraPtr op = m.alg->opposite();
  if (m.is_zero()) return zero_rep(op);
  Resolution res = minimal_projective_resolution(m, 1);
  const ProjSum& p0 = res.terms[0];
  if (res.terms.size() < 2) return zero_rep(op);  // m projective
  const ProjSum& p1 = res.terms[1];
  const ModuleMap& d1 = res.diffs[1];
  const Algebra& alg = *m.alg;
  const FieldSpec& f = alg.field();

  ProjSum q0 = projective_sum(op, p0.verts);
  ProjSum q1 = projective_sum(op, p1.verts);

  // entries x[t][s] in e_{j_s} Lambda e_{i_t} of the presentation matrix
  int s_count = p1.num_summands(), t_count = p0.num_summands();
  std::vector<std::vector<LinComb>> x(t_count,
                                      std::vector<LinComb>(s_count));
  for (int s = 0; s < s_count; ++s) {
    int js = p1.verts[s];
    int gc = p1.generator_coord(s);
    std::vector<Scalar> img = d1.comp[js].col(gc);  // in (P_0)_{js}
    for (int t = 0; t < t_count; ++t) {
      const auto& paths = p0.block_paths[t][js];
      for (size_t r = 0; r < paths.size(); ++r) {
        const Scalar& cf = img[p0.offset[t][js] + r];
        if (!f.is_zero(cf)) x[t][s].emplace_back(paths[r], cf);
      }
    }
  }

  // dual map q0 -> q1, on the generator of summand t: sum over s of the
  // reversed element placed in the s-th block
  std::vector<Matrix> gens;
  for (int t = 0; t < t_count; ++t) {
    int it = p0.verts[t];
    Matrix v(q1.rep.dims[it], 1, f);
    for (int s = 0; s < s_count; ++s) {
      for (const auto& [b, cf] : x[t][s]) {
        Path rev;
        rev.source = alg.basis()[b].tgt;
        rev.arrows.assign(alg.basis()[b].path.arrows.rbegin(),
                          alg.basis()[b].path.arrows.rend());
        LinComb nf = op->path_normal_form(rev);
        const auto& block = q1.block_paths[s][it];
        for (const auto& [ob, oc] : nf) {
          for (size_t r = 0; r < block.size(); ++r)
            if (block[r] == ob)
              v.at(q1.offset[s][it] + (int)r, 0) =
                  f.add(v.at(q1.offset[s][it] + (int)r, 0), f.mul(cf, oc));
        }
      }
    }
    gens.push_back(std::move(v));
  }
  ModuleMap dual = hom_from_projective_sum(q0, q1.rep, gens);
  return cokernel(dual).first;
}

/// Splits a module into its projective-free part and projective summands.
struct ProjectiveSplit {
  Rep projective_free;
  std::vector<Rep> projective_summands;
};

inline ProjectiveSplit split_off_projectives(const Rep& m, uint64_t seed = 0) {
  ProjectiveSplit out;
  Decomposition d = decompose(m, seed);
  std::vector<Rep> rest;
  for (const auto& e : d.entries) {
    for (int i = 0; i < e.multiplicity; ++i) {
      if (is_projective(e.summand))
        out.projective_summands.push_back(e.summand);
      else
        rest.push_back(e.summand);
    }
  }
  out.projective_free =
      rest.empty() ? zero_rep(m.alg) : direct_sum(rest, m.alg);
  return out;
}

/// AR translate tau = D Tr on the projective-free part of m.
inline Rep ar_translate(const Rep& m, uint64_t seed = 0) {
  ProjectiveSplit sp = split_off_projectives(m, seed);
  if (sp.projective_free.is_zero()) return zero_rep(m.alg);
  Rep tr = transpose_rep(sp.projective_free);
  return dualize(tr, m.alg);
}

/// Minimal left add(generators)-approximation of x. Starts from the stacked
/// universal map into one copy of C per hom-basis element, then greedily
/// drops target summands while the Hom(-, C') surjectivity survives.
inline ModuleMap minimal_left_approximation(const Rep& x,
                                            const std::vector<Rep>& generators,
                                            uint64_t seed = 0) {
  AlgebraPtr alg = x.alg;
  const FieldSpec& f = alg->field();
  std::vector<Rep> indec;
  for (const Rep& g : generators) {
    Decomposition d = decompose(g, seed);
    for (const auto& e : d.entries) {
      bool dup = false;
      for (const Rep& c : indec)
        if (is_isomorphic(c, e.summand, seed)) {
          dup = true;
          break;
        }
      if (!dup) indec.push_back(e.summand);
    }
  }
  struct Piece {
    Rep target;
    ModuleMap comp;  // x -> target
  };
  std::vector<Piece> pieces;
  for (const Rep& c : indec)
    for (const ModuleMap& h : hom_basis(x, c)) pieces.push_back({c, h});

  auto assemble = [&](const std::vector<int>& keep) {
    std::vector<Rep> parts;
    for (int k : keep) parts.push_back(pieces[k].target);
    Rep tgt = parts.empty() ? zero_rep(alg) : direct_sum(parts, alg);
    ModuleMap fmap = zero_map(x, tgt);
    for (int v = 0; v < alg->num_vertices(); ++v) {
      int ro = 0;
      for (int k : keep) {
        const Matrix& c = pieces[k].comp.comp[v];
        for (int i = 0; i < c.rows(); ++i)
          for (int j = 0; j < c.cols(); ++j)
            fmap.comp[v].at(ro + i, j) = c.at(i, j);
        ro += c.rows();
      }
    }
    return fmap;
  };
  auto is_approximation = [&](const ModuleMap& fmap) {
    for (const Rep& c : indec) {
      int want = dim_hom(x, c);
      if (want == 0) continue;
      auto hb = hom_basis(fmap.tgt, c);
      if (hb.empty()) return false;
      std::vector<std::vector<Scalar>> cols;
      for (const ModuleMap& h : hb) cols.push_back(flatten(compose(h, fmap)));
      Matrix mm((int)cols[0].size(), (int)cols.size(), f);
      for (size_t cc = 0; cc < cols.size(); ++cc)
        for (size_t r = 0; r < cols[cc].size(); ++r)
          mm.at((int)r, (int)cc) = cols[cc][r];
      if (mm.rank() != want) return false;
    }
    return true;
  };

  std::vector<int> keep(pieces.size());
  for (size_t i = 0; i < pieces.size(); ++i) keep[i] = (int)i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < keep.size(); ++i) {
      std::vector<int> trial = keep;
      trial.erase(trial.begin() + i);
      ModuleMap fmap = assemble(trial);
      if (is_approximation(fmap)) {
        keep = trial;
        changed = true;
        break;
      }
    }
  }
  return assemble(keep);
}

/// Minimal right add(generators)-approximation of x, dually.
inline ModuleMap minimal_right_approximation(
    const Rep& x, const std::vector<Rep>& generators, uint64_t seed = 0) {
  AlgebraPtr alg = x.alg;
  const FieldSpec& f = alg->field();
  std::vector<Rep> indec;
  for (const Rep& g : generators) {
    Decomposition d = decompose(g, seed);
    for (const auto& e : d.entries) {
      bool dup = false;
      for (const Rep& c : indec)
        if (is_isomorphic(c, e.summand, seed)) {
          dup = true;
          break;
        }
      if (!dup) indec.push_back(e.summand);
    }
  }
  struct Piece {
    Rep source;
    ModuleMap comp;  // source -> x
  };
  std::vector<Piece> pieces;
  for (const Rep& c : indec)
    for (const ModuleMap& h : hom_basis(c, x)) pieces.push_back({c, h});

  auto assemble = [&](const std::vector<int>& keep) {
    std::vector<Rep> parts;
    for (int k : keep) parts.push_back(pieces[k].source);
    Rep src = parts.empty() ? zero_rep(alg) : direct_sum(parts, alg);
    ModuleMap fmap = zero_map(src, x);
    for (int v = 0; v < alg->num_vertices(); ++v) {
      int co = 0;
      for (int k : keep) {
        const Matrix& c = pieces[k].comp.comp[v];
        for (int i = 0; i < c.rows(); ++i)
          for (int j = 0; j < c.cols(); ++j)
            fmap.comp[v].at(i, co + j) = c.at(i, j);
        co += c.cols();
      }
    }
    return fmap;
  };
  auto is_approximation = [&](const ModuleMap& fmap) {
    for (const Rep& c : indec) {
      int want = dim_hom(c, x);
      if (want == 0) continue;
      auto hb = hom_basis(c, fmap.src);
      if (hb.empty()) return false;
      std::vector<std::vector<Scalar>> cols;
      for (const ModuleMap& h : hb) cols.push_back(flatten(compose(fmap, h)));
      Matrix mm((int)cols[0].size(), (int)cols.size(), f);
      for (size_t cc = 0; cc < cols.size(); ++cc)
        for (size_t r = 0; r < cols[cc].size(); ++r)
          mm.at((int)r, (int)cc) = cols[cc][r];
      if (mm.rank() != want) return false;
    }
    return true;
  };

  std::vector<int> keep(pieces.size());
  for (size_t i = 0; i < pieces.size(); ++i) keep[i] = (int)i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < keep.size(); ++i) {
      std::vector<int> trial = keep;
      trial.erase(trial.begin() + i);
      if (is_approximation(assemble(trial))) {
        keep = trial;
        changed = true;
        break;
      }
    }
  }
  return assemble(keep);
}

/// pd I^i(Lambda) <= m-1 for 0 <= i <= n-1, on the chosen side.
inline Verdict check_mn_condition(const AlgebraPtr& alg, int m, int n,
                                  bool opposite_side = false,
                                  int cutoff = -1) {
  AlgebraPtr a = opposite_side ? alg->opposite() : alg;
  Verdict v;
  InjectiveCoresolution c =
      minimal_injective_coresolution(regular_rep(a), n - 1);
  for (int i = 0; i < n; ++i) {
    if (i >= static_cast<int>(c.terms.size())) break;
    DimValue p = pd(c.terms[i], cutoff);
    v.add_evidence("pd I^" + std::to_string(i), p.to_string());
    if (!p.finite) v.undecided = true;
    if (!p.finite || p.value > m - 1) {
      v.outcome = Verdict::Outcome::Fail;
      v.witnesses.emplace_back("I^" + std::to_string(i), c.terms[i]);
      return v;
    }
  }
  return v;
}

/// n-Gorenstein: pd I^i(Lambda) <= i for 0 <= i <= n-1.
inline Verdict check_gorenstein(const AlgebraPtr& alg, int n,
                                int cutoff = -1) {
  Verdict v;
  InjectiveCoresolution c =
      minimal_injective_coresolution(regular_rep(alg), n - 1);
  for (int i = 0; i < n; ++i) {
    if (i >= static_cast<int>(c.terms.size())) break;
    DimValue p = pd(c.terms[i], cutoff);
    v.add_evidence("pd I^" + std::to_string(i), p.to_string());
    if (!p.finite) v.undecided = true;
    if (!p.finite || p.value > i) {
      v.outcome = Verdict::Outcome::Fail;
      v.witnesses.emplace_back("I^" + std::to_string(i), c.terms[i]);
      return v;
    }
  }
  return v;
}

/// n-Auslander: gl.dim <= n+1 and I^0..I^n(Lambda) all projective.
inline Verdict check_n_auslander(const AlgebraPtr& alg, int n,
                                 int cutoff = -1) {
  Verdict v;
  DimValue g = global_dim(alg, cutoff);
  v.add_evidence("gl.dim", g.to_string());
  if (!g.finite) v.undecided = true;
  if (!g.finite || g.value > n + 1) {
    v.outcome = Verdict::Outcome::Fail;
    v.note = "global dimension exceeds n+1";
    return v;
  }
  InjectiveCoresolution c = minimal_injective_coresolution(regular_rep(alg), n);
  for (int i = 0; i <= n && i < static_cast<int>(c.terms.size()); ++i) {
    bool proj = is_projective(c.terms[i]);
    v.add_evidence("I^" + std::to_string(i) + " projective",
                   proj ? "yes" : "no");
    if (!proj) {
      v.outcome = Verdict::Outcome::Fail;
      v.witnesses.emplace_back("I^" + std::to_string(i), c.terms[i]);
      return v;
    }
  }
  return v;
}

/// id Lambda on both sides when finite and equal, with every pd I^i <= i;
/// absent otherwise.
inline std::optional<int> auslander_gorenstein_level(const AlgebraPtr& alg,
                                                     int cutoff = -1) {
  DimValue idl = injective_dim(regular_rep(alg), cutoff);
  DimValue idr = injective_dim(regular_rep(alg->opposite()), cutoff);
  if (!idl.finite || !idr.finite || idl.value != idr.value)
    return std::nullopt;
  int n = idl.value;
  if (!check_gorenstein(alg, n + 1, cutoff).passed()) return std::nullopt;
  return n;
}

/// For an Auslander-Gorenstein algebra with id Lambda = n on both sides,
/// the first n coresolution terms of Lambda and the last term share no
/// indecomposable summand.
inline Verdict no_common_summand_check(const AlgebraPtr& alg,
                                       uint64_t seed = 0, int cutoff = -1) {
  Verdict v;
  std::optional<int> n = auslander_gorenstein_level(alg, cutoff);
  if (!n) {
    v.outcome = Verdict::Outcome::PremiseNotMet;
    v.note = "not Auslander-Gorenstein with equal finite id on both sides";
    return v;
  }
  v.add_evidence("id Lambda (both sides)", std::to_string(*n));
  if (*n == 0) {
    v.note = "vacuous at level 0";
    return v;
  }
  InjectiveCoresolution c =
      minimal_injective_coresolution(regular_rep(alg), *n);
  std::vector<Rep> early;
  for (int i = 0; i < *n; ++i) {
    Decomposition d = decompose(c.terms[i], seed);
    for (const auto& e : d.entries) early.push_back(e.summand);
  }
  Decomposition last = decompose(c.terms[*n], seed);
  for (const auto& e : last.entries)
    for (const Rep& x : early)
      if (is_isomorphic(e.summand, x, seed)) {
        v.outcome = Verdict::Outcome::Fail;
        v.witnesses.emplace_back("shared summand", e.summand);
        return v;
      }
  return v;
}

}  // namespace qhom
