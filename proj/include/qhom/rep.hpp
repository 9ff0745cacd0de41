#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "qhom/algebra.hpp"

namespace qhom {

/// A finite-dimensional left module presented as a quiver representation:
/// a dimension per vertex and a matrix per arrow. An arrow a: i -> j acts
/// covariantly, M_a : M_i -> M_j.
struct Rep {
  AlgebraPtr alg;
  std::vector<int> dims;       // per vertex
  std::vector<Matrix> action;  // per arrow: dims[tgt] x dims[src]

  int total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
  }
  bool is_zero() const { return total_dim() == 0; }

  /// Product of arrow matrices along a path, application order.
  Matrix act_path(const Path& p) const {
    const Quiver& q = alg->quiver();
    Matrix m = Matrix::identity(dims[p.source], alg->field());
    for (int a : p.arrows) m = action[a] * m;
    (void)q;
    return m;
  }

  /// Every relation of the algebra must evaluate to zero.
  bool satisfies_relations() const {
    const FieldSpec& f = alg->field();
    for (const Relation& r : alg->relations()) {
      int src = r.terms[0].path.source;
      int tgt = r.terms[0].path.target(alg->quiver());
      Matrix sum(dims[tgt], dims[src], f);
      for (const Relation::Term& t : r.terms)
        sum = sum + act_path(t.path).scaled(f.normalize(t.coeff));
      if (!sum.is_zero()) return false;
    }
    return true;
  }
};

inline Rep zero_rep(AlgebraPtr alg) {
  Rep m;
  m.alg = alg;
  m.dims.assign(alg->num_vertices(), 0);
  for (const auto& a : alg->quiver().arrows)
    m.action.push_back(Matrix(0, 0, alg->field())), (void)a;
  return m;
}

inline Rep simple_rep(AlgebraPtr alg, int v) {
  Rep m = zero_rep(alg);
  m.dims[v] = 1;
  for (int a = 0; a < alg->quiver().num_arrows(); ++a) {
    const auto& ar = alg->quiver().arrows[a];
    m.action[a] = Matrix(m.dims[ar.tgt], m.dims[ar.src], alg->field());
  }
  return m;
}

/// P(v) = Lambda e_v, realized on the basis paths with source v. The
/// coordinate order at vertex k is the basis order of paths v -> k.
inline Rep projective_rep(AlgebraPtr alg, int v) {
  Rep m;
  m.alg = alg;
  int nv = alg->num_vertices();
  std::vector<std::vector<int>> paths(nv);
  for (int k = 0; k < nv; ++k) paths[k] = alg->basis_between(v, k);
  m.dims.resize(nv);
  for (int k = 0; k < nv; ++k) m.dims[k] = static_cast<int>(paths[k].size());
  std::vector<std::vector<int>> pos(alg->dim(), std::vector<int>());
  // map global basis index -> row within its target block
  std::vector<int> row_of(alg->dim(), -1);
  for (int k = 0; k < nv; ++k)
    for (size_t r = 0; r < paths[k].size(); ++r)
      row_of[paths[k][r]] = static_cast<int>(r);
  for (int a = 0; a < alg->quiver().num_arrows(); ++a) {
    const auto& ar = alg->quiver().arrows[a];
    Matrix M(m.dims[ar.tgt], m.dims[ar.src], alg->field());
    int ai = alg->arrow_basis_index(a);
    for (size_t c = 0; c < paths[ar.src].size(); ++c) {
      const LinComb& prod = alg->mult(ai, paths[ar.src][c]);
      for (const auto& [b, coeff] : prod) M.at(row_of[b], (int)c) = coeff;
    }
    m.action.push_back(std::move(M));
  }
  return m;
}

/// D of a representation: same dimensions, transposed matrices attached to
/// the reversed arrows. `target` must present the opposite algebra.
inline Rep dualize(const Rep& m, AlgebraPtr target) {
  if (!target->same_presentation(*m.alg->opposite()))
    throw std::invalid_argument("dualize: target is not the opposite algebra");
  Rep d;
  d.alg = target;
  d.dims = m.dims;
  for (int a = 0; a < m.alg->quiver().num_arrows(); ++a)
    d.action.push_back(m.action[a].transpose());
  return d;
}

inline Rep dualize(const Rep& m) { return dualize(m, m.alg->opposite()); }

/// I(v) = D of the opposite-algebra projective at v.
inline Rep injective_rep(AlgebraPtr alg, int v) {
  AlgebraPtr op = alg->opposite();
  return dualize(projective_rep(op, v), alg);
}

inline Rep direct_sum(const std::vector<Rep>& parts, AlgebraPtr alg) {
  Rep m = zero_rep(alg);
  for (const Rep& p : parts) {
    if (!same_algebra(p.alg, alg))
      throw std::invalid_argument("direct_sum: mixed algebras");
    for (int k = 0; k < alg->num_vertices(); ++k) m.dims[k] += p.dims[k];
  }
  for (int a = 0; a < alg->quiver().num_arrows(); ++a) {
    const auto& ar = alg->quiver().arrows[a];
    Matrix M(m.dims[ar.tgt], m.dims[ar.src], alg->field());
    int ro = 0, co = 0;
    for (const Rep& p : parts) {
      for (int i = 0; i < p.dims[ar.tgt]; ++i)
        for (int j = 0; j < p.dims[ar.src]; ++j)
          M.at(ro + i, co + j) = p.action[a].at(i, j);
      ro += p.dims[ar.tgt];
      co += p.dims[ar.src];
    }
    m.action[a] = std::move(M);
  }
  return m;
}

inline Rep direct_sum(const Rep& a, const Rep& b) {
  return direct_sum(std::vector<Rep>{a, b}, a.alg);
}

/// The regular module: P(1) + ... + P(k).
inline Rep regular_rep(AlgebraPtr alg) {
  std::vector<Rep> ps;
  for (int v = 0; v < alg->num_vertices(); ++v)
    ps.push_back(projective_rep(alg, v));
  return direct_sum(ps, alg);
}

/// D(Lambda^op): the injective cogenerator I(1) + ... + I(k).
inline Rep cogenerator_rep(AlgebraPtr alg) {
  std::vector<Rep> is;
  for (int v = 0; v < alg->num_vertices(); ++v)
    is.push_back(injective_rep(alg, v));
  return direct_sum(is, alg);
}

/// A homomorphism of representations: one matrix per vertex, commuting with
/// every arrow action.
struct ModuleMap {
  Rep src;
  Rep tgt;
  std::vector<Matrix> comp;  // per vertex: tgt.dims[v] x src.dims[v]

  bool is_valid() const {
    for (int a = 0; a < src.alg->quiver().num_arrows(); ++a) {
      const auto& ar = src.alg->quiver().arrows[a];
      Matrix lhs = tgt.action[a] * comp[ar.src];
      Matrix rhs = comp[ar.tgt] * src.action[a];
      if (!(lhs == rhs)) return false;
    }
    return true;
  }

  bool is_zero() const {
    for (const Matrix& c : comp)
      if (!c.is_zero()) return false;
    return true;
  }
};

inline ModuleMap zero_map(const Rep& src, const Rep& tgt) {
  ModuleMap f;
  f.src = src;
  f.tgt = tgt;
  for (int v = 0; v < src.alg->num_vertices(); ++v)
    f.comp.push_back(Matrix(tgt.dims[v], src.dims[v], src.alg->field()));
  return f;
}

inline ModuleMap identity_map(const Rep& m) {
  ModuleMap f;
  f.src = m;
  f.tgt = m;
  for (int v = 0; v < m.alg->num_vertices(); ++v)
    f.comp.push_back(Matrix::identity(m.dims[v], m.alg->field()));
  return f;
}

inline ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  // g after f
  ModuleMap h;
  h.src = f.src;
  h.tgt = g.tgt;
  for (size_t v = 0; v < f.comp.size(); ++v)
    h.comp.push_back(g.comp[v] * f.comp[v]);
  return h;
}

/// Basis of Hom(m, n): the solution space of the commuting-square system.
inline std::vector<ModuleMap> hom_basis(const Rep& m, const Rep& n) {
  if (!same_algebra(m.alg, n.alg))
    throw std::invalid_argument("hom_basis: modules over different algebras");
  const FieldSpec& f = m.alg->field();
  int nv = m.alg->num_vertices();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  int unknowns = off[nv];
  auto idx = [&](int v, int r, int c) { return off[v] + r * m.dims[v] + c; };

  int rows = 0;
  for (int a = 0; a < m.alg->quiver().num_arrows(); ++a) {
    const auto& ar = m.alg->quiver().arrows[a];
    rows += n.dims[ar.tgt] * m.dims[ar.src];
  }
  Matrix sys(rows, unknowns, f);
  int eq = 0;
  for (int a = 0; a < m.alg->quiver().num_arrows(); ++a) {
    const auto& ar = m.alg->quiver().arrows[a];
    int i = ar.src, j = ar.tgt;
    for (int r = 0; r < n.dims[j]; ++r)
      for (int c = 0; c < m.dims[i]; ++c) {
        // (N_a f_i - f_j M_a)[r,c] = 0
        for (int k = 0; k < n.dims[i]; ++k)
          sys.at(eq, idx(i, k, c)) =
              f.add(sys.at(eq, idx(i, k, c)), n.action[a].at(r, k));
        for (int k = 0; k < m.dims[j]; ++k)
          sys.at(eq, idx(j, r, k)) =
              f.sub(sys.at(eq, idx(j, r, k)), m.action[a].at(k, c));
        ++eq;
      }
  }
  Matrix K = sys.kernel_basis();
  std::vector<ModuleMap> out;
  for (int b = 0; b < K.cols(); ++b) {
    ModuleMap h = zero_map(m, n);
    for (int v = 0; v < nv; ++v)
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c)
          h.comp[v].at(r, c) = K.at(idx(v, r, c), b);
    out.push_back(std::move(h));
  }
  return out;
}

inline int dim_hom(const Rep& m, const Rep& n) {
  return static_cast<int>(hom_basis(m, n).size());
}

/// Flattens a map's components into a single coordinate vector, used to do
/// linear algebra on hom spaces.
inline std::vector<Scalar> flatten(const ModuleMap& h) {
  std::vector<Scalar> v;
  for (const Matrix& c : h.comp)
    v.insert(v.end(), c.data().begin(), c.data().end());
  return v;
}

/// Dual of a homomorphism: D(f): D(N) -> D(M) over the opposite algebra.
inline ModuleMap dualize(const ModuleMap& h, AlgebraPtr target) {
  ModuleMap d;
  d.src = dualize(h.tgt, target);
  d.tgt = dualize(h.src, target);
  for (const Matrix& c : h.comp) d.comp.push_back(c.transpose());
  return d;
}

/// Subrepresentation spanned by per-vertex subspaces (columns independent,
/// required closed under every arrow). Returns the subrep and its inclusion.
inline std::pair<Rep, ModuleMap> sub_rep(const Rep& m,
                                         const std::vector<Matrix>& spaces) {
  Rep s;
  s.alg = m.alg;
  for (const Matrix& U : spaces) s.dims.push_back(U.cols());
  for (int a = 0; a < m.alg->quiver().num_arrows(); ++a) {
    const auto& ar = m.alg->quiver().arrows[a];
    Matrix img = m.action[a] * spaces[ar.src];
    auto X = spaces[ar.tgt].solve(img);
    if (!X)
      throw std::logic_error("sub_rep: subspaces not closed under the action");
    s.action.push_back(*X);
  }
  ModuleMap incl;
  incl.src = s;
  incl.tgt = m;
  incl.comp = spaces;
  return {s, incl};
}

inline std::pair<Rep, ModuleMap> kernel(const ModuleMap& h) {
  std::vector<Matrix> spaces;
  for (const Matrix& c : h.comp) spaces.push_back(c.kernel_basis());
  return sub_rep(h.src, spaces);
}

inline std::pair<Rep, ModuleMap> image(const ModuleMap& h) {
  std::vector<Matrix> spaces;
  for (const Matrix& c : h.comp) spaces.push_back(c.column_space_basis());
  return sub_rep(h.tgt, spaces);
}

/// Quotient of the target by the image; returns the quotient and projection.
inline std::pair<Rep, ModuleMap> cokernel(const ModuleMap& h) {
  const FieldSpec& f = h.tgt.alg->field();
  int nv = h.tgt.alg->num_vertices();
  std::vector<Matrix> proj(nv), section(nv);
  Rep q;
  q.alg = h.tgt.alg;
  q.dims.resize(nv);
  for (int v = 0; v < nv; ++v) {
    Matrix B = h.comp[v].column_space_basis();
    std::vector<int> comp_idx = complement_of_column_span(B);
    int n = h.tgt.dims[v];
    int r = B.cols(), t = static_cast<int>(comp_idx.size());
    q.dims[v] = t;
    Matrix S(n, t, f);
    for (int j = 0; j < t; ++j) S.at(comp_idx[j], j) = 1;
    section[v] = S;
    Matrix full = B.hcat(S);  // invertible n x n
    auto inv = full.solve(Matrix::identity(n, f));
    if (!inv) throw std::logic_error("cokernel: basis extension failed");
    proj[v] = inv->block(r, 0, t, n);
  }
  for (int a = 0; a < q.alg->quiver().num_arrows(); ++a) {
    const auto& ar = q.alg->quiver().arrows[a];
    q.action.push_back(proj[ar.tgt] * h.tgt.action[a] * section[ar.src]);
  }
  ModuleMap p;
  p.src = h.tgt;
  p.tgt = q;
  p.comp = proj;
  return {q, p};
}

/// Quotient of m by per-vertex subspaces closed under the action.
inline std::pair<Rep, ModuleMap> quotient_rep(const Rep& m,
                                              const std::vector<Matrix>& sub) {
  auto [s, incl] = sub_rep(m, sub);
  return cokernel(incl);
}

/// Per-vertex radical subspaces: rad M at j is the sum of arrow images into j.
inline std::vector<Matrix> radical_subspaces(const Rep& m) {
  const FieldSpec& f = m.alg->field();
  int nv = m.alg->num_vertices();
  std::vector<Matrix> out;
  for (int j = 0; j < nv; ++j) {
    Matrix acc(m.dims[j], 0, f);
    for (int a = 0; a < m.alg->quiver().num_arrows(); ++a)
      if (m.alg->quiver().arrows[a].tgt == j) acc = acc.hcat(m.action[a]);
    out.push_back(acc.column_space_basis());
  }
  return out;
}

/// A direct sum of indecomposable projectives with block bookkeeping.
struct ProjSum {
  Rep rep;
  std::vector<int> verts;  // summand vertices, construction order
  // block_paths[s][k]: global basis indices of paths verts[s] -> k, giving
  // the coordinate layout of summand s at vertex k
  std::vector<std::vector<std::vector<int>>> block_paths;
  std::vector<std::vector<int>> offset;  // offset[s][k] within rep.dims[k]

  int num_summands() const { return static_cast<int>(verts.size()); }

  /// Coordinate of the generator e_{verts[s]} at vertex verts[s].
  int generator_coord(int s) const {
    const Algebra& alg = *rep.alg;
    int v = verts[s];
    const auto& paths = block_paths[s][v];
    for (size_t i = 0; i < paths.size(); ++i)
      if (paths[i] == alg.unit_index(v))
        return offset[s][v] + static_cast<int>(i);
    throw std::logic_error("projective summand without trivial path");
  }
};

inline ProjSum projective_sum(AlgebraPtr alg, const std::vector<int>& verts) {
  ProjSum ps;
  ps.verts = verts;
  std::vector<Rep> parts;
  int nv = alg->num_vertices();
  std::vector<int> run(nv, 0);
  for (int v : verts) {
    parts.push_back(projective_rep(alg, v));
    std::vector<std::vector<int>> bp(nv);
    std::vector<int> off(nv);
    for (int k = 0; k < nv; ++k) {
      bp[k] = alg->basis_between(v, k);
      off[k] = run[k];
      run[k] += static_cast<int>(bp[k].size());
    }
    ps.block_paths.push_back(std::move(bp));
    ps.offset.push_back(std::move(off));
  }
  ps.rep = direct_sum(parts, alg);
  return ps;
}

/// The hom P(v) -> M determined by an element w of M_v: basis path p acts as
/// p . w. Assembled for a whole projective sum from one vector per summand.
inline ModuleMap hom_from_projective_sum(const ProjSum& ps, const Rep& m,
                                         const std::vector<Matrix>& gens) {
  const Algebra& alg = *ps.rep.alg;
  const FieldSpec& f = alg.field();
  int nv = alg.num_vertices();
  ModuleMap h = zero_map(ps.rep, m);
  for (int s = 0; s < ps.num_summands(); ++s) {
    const Matrix& w = gens[s];  // m.dims[verts[s]] x 1
    for (int k = 0; k < nv; ++k) {
      const auto& paths = ps.block_paths[s][k];
      for (size_t c = 0; c < paths.size(); ++c) {
        Matrix col = m.act_path(alg.basis()[paths[c]].path) * w;
        for (int r = 0; r < m.dims[k]; ++r)
          h.comp[k].at(r, ps.offset[s][k] + (int)c) = col.at(r, 0);
      }
    }
  }
  (void)f;
  return h;
}

}  // namespace qhom
