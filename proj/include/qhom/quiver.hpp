#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhom/field.hpp"

namespace qhom {

/// Finite quiver with labelled vertices and arrows.
struct Quiver {
  struct Arrow {
    std::string label;
    int src;
    int tgt;
    bool operator==(const Arrow& o) const {
      return label == o.label && src == o.src && tgt == o.tgt;
    }
  };

  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& label) const {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == label) return static_cast<int>(i);
    return -1;
  }

  int arrow_index(const std::string& label) const {
    for (size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].label == label) return static_cast<int>(i);
    return -1;
  }

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }

  bool operator==(const Quiver& o) const {
    return vertices == o.vertices && arrows == o.arrows;
  }

  Quiver reversed() const {
    Quiver q;
    q.vertices = vertices;
    for (const Arrow& a : arrows) q.arrows.push_back({a.label, a.tgt, a.src});
    return q;
  }
};

/// A path in a quiver: arrow indices in application order (the first entry is
/// applied first). The empty path is the trivial path at `source`.
/// Products are written in function order: p*q means "first q, then p".
struct Path {
  int source = -1;             // source vertex
  std::vector<int> arrows;     // application order

  int length() const { return static_cast<int>(arrows.size()); }

  int target(const Quiver& q) const {
    return arrows.empty() ? source : q.arrows[arrows.back()].tgt;
  }

  bool operator==(const Path& o) const {
    return source == o.source && arrows == o.arrows;
  }
  bool operator<(const Path& o) const {
    if (source != o.source) return source < o.source;
    return arrows < o.arrows;
  }

  /// Concatenation p.after(q): first q, then p. Requires composability.
  static Path compose(const Path& p, const Path& q, const Quiver& quiv) {
    if (p.source != q.target(quiv))
      throw std::invalid_argument("paths not composable");
    Path r;
    r.source = q.source;
    r.arrows = q.arrows;
    r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
    return r;
  }

  Path reversed_in(const Quiver& /*original*/, const Quiver& opposite_quiver,
                   int original_target) const {
    Path r;
    r.source = original_target;
    r.arrows.assign(arrows.rbegin(), arrows.rend());
    (void)opposite_quiver;
    return r;
  }
};

/// Linear combination of parallel paths, each of length >= 2.
struct Relation {
  struct Term {
    Scalar coeff;
    Path path;
  };
  std::vector<Term> terms;
};

}  // namespace qhom
