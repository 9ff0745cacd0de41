#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhom/matrix.hpp"
#include "qhom/quiver.hpp"

namespace qhom {

/// Sparse combination of basis elements: (basis index, coefficient) pairs.
using LinComb = std::vector<std::pair<int, Scalar>>;

class AlgebraError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A bound quiver algebra KQ/I presented by an explicit path basis and a
/// multiplication table. The ideal must be admissible: every relation term
/// has length >= 2 and some power of the arrow ideal lies in I, detected by
/// the degree-wise quotient vanishing within the length bound.
class Algebra {
public:
  struct BasisElem {
    Path path;
    int src;
    int tgt;
    int len;
  };

  Algebra(Quiver quiver, std::vector<Relation> relations, FieldSpec field,
          int max_path_length = 64)
      : quiver_(std::move(quiver)), relations_(std::move(relations)),
        field_(field), max_path_length_(max_path_length) {
    validate_relations();
    build();
    build_table();
  }

  const Quiver& quiver() const { return quiver_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<BasisElem>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int num_vertices() const { return quiver_.num_vertices(); }

  /// Index of the trivial path e_v.
  int unit_index(int v) const { return unit_index_[v]; }

  /// Basis index of the length-1 path of a given arrow.
  int arrow_basis_index(int a) const { return arrow_index_[a]; }

  /// Basis indices with a given source vertex (any target), in basis order.
  std::vector<int> basis_with_source(int v) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
      if (basis_[i].src == v) out.push_back(i);
    return out;
  }

  /// Basis indices with given source and target vertices, in basis order.
  std::vector<int> basis_between(int src, int tgt) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
      if (basis_[i].src == src && basis_[i].tgt == tgt) out.push_back(i);
    return out;
  }

  /// Product of basis elements in function order: first j, then i.
  const LinComb& mult(int i, int j) const { return table_[i][j]; }

  /// Product of arbitrary combinations, function order.
  LinComb mult(const LinComb& a, const LinComb& b) const {
    std::map<int, Scalar> acc;
    for (const auto& [i, ci] : a)
      for (const auto& [j, cj] : b) {
        Scalar c = field_.mul(ci, cj);
        for (const auto& [k, ck] : table_[i][j])
          acc[k] = field_.add(acc.count(k) ? acc[k] : Scalar(0),
                              field_.mul(c, ck));
      }
    LinComb out;
    for (auto& [k, v] : acc)
      if (!field_.is_zero(v)) out.emplace_back(k, v);
    return out;
  }

  /// Normal form of an arbitrary path modulo the ideal.
  LinComb path_normal_form(const Path& p) const {
    if (p.length() >= stop_length_) return {};
    auto it = normal_forms_.find(p);
    if (it == normal_forms_.end())
      throw AlgebraError("path does not exist in the quiver");
    return it->second;
  }

  int max_basis_path_length() const { return stop_length_ - 1; }

  std::shared_ptr<const Algebra> opposite() const {
    Quiver q = quiver_.reversed();
    std::vector<Relation> rels;
    for (const Relation& r : relations_) {
      Relation ro;
      for (const Relation::Term& t : r.terms) {
        Path rp;
        rp.source = t.path.target(quiver_);
        rp.arrows.assign(t.path.arrows.rbegin(), t.path.arrows.rend());
        ro.terms.push_back({t.coeff, rp});
      }
      rels.push_back(std::move(ro));
    }
    return std::make_shared<Algebra>(std::move(q), std::move(rels), field_,
                                     max_path_length_);
  }

  /// Structural identity of presentations; used to accept modules built over
  /// independently constructed copies of the same algebra.
  bool same_presentation(const Algebra& o) const {
    if (!(quiver_ == o.quiver_) || field_ != o.field_) return false;
    if (relations_.size() != o.relations_.size()) return false;
    for (size_t i = 0; i < relations_.size(); ++i) {
      const auto& a = relations_[i].terms;
      const auto& b = o.relations_[i].terms;
      if (a.size() != b.size()) return false;
      for (size_t j = 0; j < a.size(); ++j)
        if (!(a[j].path == b[j].path) ||
            field_.normalize(a[j].coeff) != field_.normalize(b[j].coeff))
          return false;
    }
    return true;
  }

private:
  void validate_relations() const {
    for (const Relation& r : relations_) {
      if (r.terms.empty()) throw AlgebraError("empty relation");
      int src = r.terms[0].path.source;
      int tgt = r.terms[0].path.target(quiver_);
      for (const Relation::Term& t : r.terms) {
        if (t.path.length() < 2)
          throw AlgebraError(
              "non-admissible ideal: relation term of length < 2");
        if (t.path.source != src || t.path.target(quiver_) != tgt)
          throw AlgebraError("relation terms are not parallel");
        for (size_t i = 0; i + 1 < t.path.arrows.size(); ++i) {
          const auto& a = quiver_.arrows[t.path.arrows[i]];
          const auto& b = quiver_.arrows[t.path.arrows[i + 1]];
          if (a.tgt != b.src)
            throw AlgebraError("relation path is not composable");
        }
      }
    }
  }

  // Degree-wise construction: at each length the path span is reduced modulo
  // the degree component of the ideal, generated by the homogeneous relation
  // parts closed under left/right multiplication by arrows.
  void build() {
    struct IdealVec {
      // parallel combination of same-length paths
      std::vector<std::pair<Path, Scalar>> terms;
    };

    unit_index_.assign(quiver_.num_vertices(), -1);
    arrow_index_.assign(quiver_.num_arrows(), -1);

    // homogeneous relation parts grouped by degree
    std::map<int, std::vector<IdealVec>> rel_parts;
    for (const Relation& r : relations_) {
      std::map<int, IdealVec> by_deg;
      for (const Relation::Term& t : r.terms)
        by_deg[t.path.length()].terms.push_back(
            {t.path, field_.normalize(t.coeff)});
      for (auto& [deg, vec] : by_deg) rel_parts[deg].push_back(vec);
    }

    std::vector<Path> prev_paths;
    for (int v = 0; v < quiver_.num_vertices(); ++v) {
      Path e;
      e.source = v;
      prev_paths.push_back(e);
    }
    std::vector<IdealVec> prev_ideal;  // ideal spanning set at previous length

    stop_length_ = max_path_length_ + 1;
    for (int len = 0;; ++len) {
      if (len > max_path_length_)
        throw AlgebraError(
            "non-admissible ideal: path length bound exceeded without the "
            "quotient vanishing");

      std::vector<Path> paths;
      if (len == 0) {
        paths = prev_paths;
      } else {
        for (const Path& p : prev_paths)
          for (int a = 0; a < quiver_.num_arrows(); ++a)
            if (quiver_.arrows[a].src == p.target(quiver_)) {
              Path q = p;
              q.arrows.push_back(a);
              paths.push_back(q);
            }
      }
      if (paths.empty()) {
        stop_length_ = len;
        break;
      }

      std::map<Path, int> path_col;
      for (size_t i = 0; i < paths.size(); ++i)
        path_col[paths[i]] = static_cast<int>(i);

      // ideal component at this length
      std::vector<IdealVec> ideal;
      if (auto it = rel_parts.find(len); it != rel_parts.end())
        ideal.insert(ideal.end(), it->second.begin(), it->second.end());
      for (const IdealVec& w : prev_ideal) {
        int wt = w.terms[0].first.target(quiver_);
        int ws = w.terms[0].first.source;
        for (int a = 0; a < quiver_.num_arrows(); ++a) {
          if (quiver_.arrows[a].src == wt) {
            IdealVec nw;
            for (const auto& [p, c] : w.terms) {
              Path q = p;
              q.arrows.push_back(a);
              nw.terms.push_back({q, c});
            }
            ideal.push_back(std::move(nw));
          }
          if (quiver_.arrows[a].tgt == ws) {
            IdealVec nw;
            for (const auto& [p, c] : w.terms) {
              Path q;
              q.source = quiver_.arrows[a].src;
              q.arrows.push_back(a);
              q.arrows.insert(q.arrows.end(), p.arrows.begin(),
                              p.arrows.end());
              nw.terms.push_back({q, c});
            }
            ideal.push_back(std::move(nw));
          }
        }
      }

      int n = static_cast<int>(paths.size());
      Matrix span(static_cast<int>(ideal.size()), n, field_);
      for (size_t r = 0; r < ideal.size(); ++r)
        for (const auto& [p, c] : ideal[r].terms) {
          int col = path_col.at(p);
          span.at((int)r, col) = field_.add(span.at((int)r, col), c);
        }
      std::vector<int> pivots = span.rref();
      std::vector<bool> is_pivot(n, false);
      for (int p : pivots) is_pivot[p] = true;

      // surviving coset representatives become basis elements
      std::vector<int> rep_basis_index(n, -1);
      int new_count = 0;
      for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) {
          const Path& p = paths[c];
          int idx = static_cast<int>(basis_.size());
          basis_.push_back({p, p.source, p.target(quiver_), len});
          rep_basis_index[c] = idx;
          if (len == 0) unit_index_[p.source] = idx;
          if (len == 1) arrow_index_[p.arrows[0]] = idx;
          ++new_count;
        }

      // normal forms for every path of this length
      for (int c = 0; c < n; ++c) {
        LinComb nf;
        if (!is_pivot[c]) {
          nf.emplace_back(rep_basis_index[c], Scalar(1));
        } else {
          // locate the rref row whose pivot is column c
          int row = -1;
          for (size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] == c) {
              row = static_cast<int>(r);
              break;
            }
          for (int k = 0; k < n; ++k)
            if (!is_pivot[k] && !field_.is_zero(span.at(row, k)))
              nf.emplace_back(rep_basis_index[k],
                              field_.neg(span.at(row, k)));
        }
        normal_forms_[paths[c]] = std::move(nf);
      }

      if (new_count == 0) {
        stop_length_ = len;
        break;
      }

      // retain a reduced ideal spanning set (rref rows) for the next degree
      std::vector<IdealVec> reduced;
      for (size_t r = 0; r < pivots.size(); ++r) {
        IdealVec v;
        for (int k = 0; k < n; ++k)
          if (!field_.is_zero(span.at((int)r, k)))
            v.terms.push_back({paths[k], span.at((int)r, k)});
        reduced.push_back(std::move(v));
      }
      prev_ideal = std::move(reduced);
      prev_paths = std::move(paths);
    }
  }

  void build_table() {
    int n = dim();
    table_.assign(n, std::vector<LinComb>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (basis_[i].src != basis_[j].tgt) continue;  // product is zero
        Path prod = Path::compose(basis_[i].path, basis_[j].path, quiver_);
        if (prod.length() >= stop_length_) continue;
        table_[i][j] = path_normal_form(prod);
      }
  }

  Quiver quiver_;
  std::vector<Relation> relations_;
  FieldSpec field_;
  int max_path_length_;
  int stop_length_;  // all paths of this length or more lie in the ideal

  std::vector<BasisElem> basis_;
  std::vector<int> unit_index_;
  std::vector<int> arrow_index_;
  std::map<Path, LinComb> normal_forms_;
  std::vector<std::vector<LinComb>> table_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr make_algebra(Quiver q, std::vector<Relation> rels,
                               FieldSpec field, int max_path_length = 64) {
  return std::make_shared<Algebra>(std::move(q), std::move(rels), field,
                                   max_path_length);
}

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || a->same_presentation(*b);
}

}  // namespace qhom
