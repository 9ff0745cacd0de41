#pragma once

// Shared fixture algebras, built through the text front end so the tests
// exercise the same path as the CLI.

#include <sstream>
#include <string>

#include "qhom/parse.hpp"

namespace fx {

// linear quiver 1 <- 2 <- ... <- nv with all length-2 paths killed
inline std::string linear_radsq_text(int nv) {
  std::ostringstream os;
  os << "field Q\nvertices";
  for (int v = 1; v <= nv; ++v) os << " " << v;
  os << "\n";
  for (int i = 1; i < nv; ++i)
    os << "arrow b" << i << " : " << (i + 1) << " -> " << i << "\n";
  for (int i = 1; i + 1 < nv; ++i)
    os << "relation b" << i << "*b" << (i + 1) << "\n";
  return os.str();
}

inline qhom::AlgebraPtr linear_radsq(int nv) {
  return qhom::parse_input(linear_radsq_text(nv)).algebra;
}

// the three-vertex instance with the nontrivial orthogonal subcategory
inline qhom::ParsedInput a3() {
  return qhom::parse_input(linear_radsq_text(3) +
                           "subcategory C generators = P(1)+P(2)+P(3)+S(3) "
                           "ambient = nakayama\n");
}

inline std::string a2_text() {
  return "field Q\nvertices 1 2\narrow a : 2 -> 1\n";
}

inline qhom::AlgebraPtr a2() { return qhom::parse_input(a2_text()).algebra; }

inline std::string dual_numbers_text() {
  return "field Q\nvertices 1\narrow x : 1 -> 1\nrelation x*x\n";
}

inline qhom::AlgebraPtr dual_numbers() {
  return qhom::parse_input(dual_numbers_text()).algebra;
}

// six vertices, commuting square on top of two zero relations
inline std::string square_text() {
  return "field Q\n"
         "vertices 1 2 3 4 5 6\n"
         "arrow al : 6 -> 4\n"
         "arrow ga : 6 -> 5\n"
         "arrow be : 4 -> 3\n"
         "arrow de : 5 -> 3\n"
         "arrow la : 3 -> 1\n"
         "arrow mu : 3 -> 2\n"
         "relation be*al - de*ga\n"
         "relation mu*de\n"
         "relation la*be\n";
}

inline qhom::AlgebraPtr square() {
  return qhom::parse_input(square_text()).algebra;
}

inline qhom::Rep simple(const qhom::AlgebraPtr& a, int label) {
  return qhom::simple_rep(a, label - 1);
}

inline qhom::Rep proj(const qhom::AlgebraPtr& a, int label) {
  return qhom::projective_rep(a, label - 1);
}

inline qhom::Rep inj(const qhom::AlgebraPtr& a, int label) {
  return qhom::injective_rep(a, label - 1);
}

}  // namespace fx
