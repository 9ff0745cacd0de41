#pragma once

#include <sstream>

#include "qhom/orthogonal.hpp"

namespace qhom {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

struct SubcategoryDecl {
  std::string name;
  std::vector<std::string> generator_exprs;
  std::vector<std::string> ambient_exprs;  // empty when nakayama
  bool ambient_nakayama = false;
  int line = 0;
};

struct ParsedInput {
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, Rep>> modules;  // declaration order
  std::vector<SubcategoryDecl> subcategories;

  const Rep* find_module(const std::string& name) const {
    for (const auto& [n, m] : modules)
      if (n == name) return &m;
    return nullptr;
  }
};

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    out.push_back(t);
  }
  return out;
}

inline Scalar parse_scalar(const std::string& s, int line) {
  try {
    return Scalar(s);
  } catch (const std::exception&) {
    throw ParseError(line, "bad number '" + s + "'");
  }
}

/// A relation term: optional integer coefficient, then arrow labels joined
/// by '*' in function order (the rightmost factor acts first).
inline std::pair<Scalar, Path> parse_term(const std::string& term,
                                          const Quiver& q, int line) {
  std::vector<std::string> factors;
  std::string cur;
  for (char c : term) {
    if (c == '*') {
      factors.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  factors.push_back(cur);
  Scalar coeff(1);
  size_t start = 0;
  if (!factors.empty() &&
      factors[0].find_first_not_of("-0123456789") == std::string::npos &&
      q.arrow_index(factors[0]) < 0) {
    coeff = parse_scalar(factors[0], line);
    start = 1;
  }
  if (start >= factors.size())
    throw ParseError(line, "relation term '" + term + "' has no arrows");
  Path p;
  // function order: reverse into application order
  for (size_t i = factors.size(); i-- > start;) {
    int a = q.arrow_index(factors[i]);
    if (a < 0)
      throw ParseError(line, "unknown arrow '" + factors[i] + "'");
    if (p.arrows.empty()) {
      p.source = q.arrows[a].src;
    } else if (q.arrows[p.arrows.back()].tgt != q.arrows[a].src) {
      throw ParseError(line, "term '" + term + "' is not composable");
    }
    p.arrows.push_back(a);
  }
  return {coeff, p};
}

}  // namespace detail

/// Symbolic module expressions: P(<v>), I(<v>), S(<v>), Lambda, DLambda, a
/// declared module name, or sums of those joined by '+'.
inline Rep resolve_module_expr(const std::string& expr,
                               const AlgebraPtr& alg,
                               const ParsedInput* named = nullptr,
                               int line = 0) {
  std::vector<std::string> parts;
  std::string cur;
  for (size_t i = 0; i < expr.size(); ++i) {
    if (expr[i] == '+') {
      parts.push_back(cur);
      cur.clear();
    } else if (expr.compare(i, 3, "\xe2\x8a\x95") == 0) {  // circled plus
      parts.push_back(cur);
      cur.clear();
      i += 2;
    } else {
      cur += expr[i];
    }
  }
  parts.push_back(cur);

  std::vector<Rep> summands;
  for (const std::string& part : parts) {
    if (part.empty())
      throw ParseError(line, "empty summand in module expression '" + expr +
                                 "'");
    if (part == "Lambda") {
      summands.push_back(regular_rep(alg));
      continue;
    }
    if (part == "DLambda") {
      summands.push_back(cogenerator_rep(alg));
      continue;
    }
    if (part.size() >= 4 && part[1] == '(' && part.back() == ')' &&
        (part[0] == 'P' || part[0] == 'I' || part[0] == 'S')) {
      std::string label = part.substr(2, part.size() - 3);
      int v = alg->quiver().vertex_index(label);
      if (v < 0) throw ParseError(line, "unknown vertex '" + label + "'");
      if (part[0] == 'P') summands.push_back(projective_rep(alg, v));
      if (part[0] == 'I') summands.push_back(injective_rep(alg, v));
      if (part[0] == 'S') summands.push_back(simple_rep(alg, v));
      continue;
    }
    if (named) {
      if (const Rep* m = named->find_module(part)) {
        summands.push_back(*m);
        continue;
      }
    }
    throw ParseError(line, "unknown module expression '" + part + "'");
  }
  if (summands.size() == 1) return summands[0];
  return direct_sum(summands, alg);
}

/// Parses the full input format: an algebra header followed by optional
/// module blocks and subcategory declarations.
inline ParsedInput parse_input(
    const std::string& text, int max_path_length = 64,
    std::optional<FieldSpec> field_override = std::nullopt) {
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;

  std::optional<FieldSpec> field;
  Quiver quiver;
  std::vector<Relation> relations;
  struct PendingModule {
    std::string name;
    int line;
    std::map<int, int> dims;
    std::vector<std::tuple<int, std::vector<Scalar>, int>> maps;
  };
  std::vector<PendingModule> pending;
  std::vector<SubcategoryDecl> subcats;
  PendingModule* open_module = nullptr;

  while (std::getline(is, raw)) {
    ++lineno;
    std::vector<std::string> tok = detail::tokens_of(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];

    if (kw == "field") {
      if (tok.size() == 2 && tok[1] == "Q") {
        field = FieldSpec::rationals();
      } else if (tok.size() == 3 && tok[1] == "F") {
        long long p;
        try {
          p = std::stoll(tok[2]);
        } catch (const std::exception&) {
          throw ParseError(lineno, "bad characteristic '" + tok[2] + "'");
        }
        try {
          field = FieldSpec::prime(p);
        } catch (const std::exception& e) {
          throw ParseError(lineno, e.what());
        }
      } else {
        throw ParseError(lineno, "expected 'field Q' or 'field F <p>'");
      }
    } else if (kw == "vertices") {
      if (tok.size() < 2) throw ParseError(lineno, "no vertices listed");
      for (size_t i = 1; i < tok.size(); ++i) {
        if (quiver.vertex_index(tok[i]) >= 0)
          throw ParseError(lineno, "duplicate vertex '" + tok[i] + "'");
        quiver.vertices.push_back(tok[i]);
      }
    } else if (kw == "arrow") {
      // arrow <label> : <src> -> <tgt>
      if (tok.size() != 6 || tok[2] != ":" || tok[4] != "->")
        throw ParseError(lineno, "expected 'arrow <label> : <src> -> <tgt>'");
      if (quiver.arrow_index(tok[1]) >= 0)
        throw ParseError(lineno, "duplicate arrow '" + tok[1] + "'");
      int s = quiver.vertex_index(tok[3]);
      int t = quiver.vertex_index(tok[5]);
      if (s < 0) throw ParseError(lineno, "unknown vertex '" + tok[3] + "'");
      if (t < 0) throw ParseError(lineno, "unknown vertex '" + tok[5] + "'");
      quiver.arrows.push_back({tok[1], s, t});
    } else if (kw == "relation") {
      if (tok.size() < 2) throw ParseError(lineno, "empty relation");
      Relation r;
      Scalar sign(1);
      for (size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == "+") {
          sign = Scalar(1);
          continue;
        }
        if (tok[i] == "-") {
          sign = Scalar(-1);
          continue;
        }
        auto [c, p] = detail::parse_term(tok[i], quiver, lineno);
        r.terms.push_back({sign * c, p});
        sign = Scalar(1);
      }
      if (r.terms.empty()) throw ParseError(lineno, "empty relation");
      relations.push_back(std::move(r));
    } else if (kw == "module") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'module <name>'");
      pending.push_back({tok[1], lineno, {}, {}});
      open_module = &pending.back();
    } else if (kw == "dim") {
      if (!open_module) throw ParseError(lineno, "'dim' outside module block");
      if (tok.size() != 3)
        throw ParseError(lineno, "expected 'dim <vertex> <d>'");
      int v = quiver.vertex_index(tok[1]);
      if (v < 0) throw ParseError(lineno, "unknown vertex '" + tok[1] + "'");
      int d;
      try {
        d = std::stoi(tok[2]);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad dimension '" + tok[2] + "'");
      }
      if (d < 0) throw ParseError(lineno, "negative dimension");
      open_module->dims[v] = d;
    } else if (kw == "map") {
      if (!open_module) throw ParseError(lineno, "'map' outside module block");
      if (tok.size() < 2) throw ParseError(lineno, "expected 'map <arrow> ...'");
      int a = quiver.arrow_index(tok[1]);
      if (a < 0) throw ParseError(lineno, "unknown arrow '" + tok[1] + "'");
      std::vector<Scalar> entries;
      for (size_t i = 2; i < tok.size(); ++i)
        entries.push_back(detail::parse_scalar(tok[i], lineno));
      open_module->maps.emplace_back(a, std::move(entries), lineno);
    } else if (kw == "subcategory") {
      // subcategory <name> generators = <exprs> ambient = nakayama | <exprs>
      if (tok.size() < 5 || tok[2] != "generators" || tok[3] != "=")
        throw ParseError(lineno,
                         "expected 'subcategory <name> generators = ... "
                         "ambient = ...'");
      SubcategoryDecl d;
      d.name = tok[1];
      d.line = lineno;
      size_t i = 4;
      while (i < tok.size() && tok[i] != "ambient")
        d.generator_exprs.push_back(tok[i++]);
      if (i + 1 >= tok.size() || tok[i] != "ambient" || tok[i + 1] != "=")
        throw ParseError(lineno, "missing 'ambient =' clause");
      i += 2;
      if (i < tok.size() && tok[i] == "nakayama") {
        d.ambient_nakayama = true;
        ++i;
        if (i != tok.size())
          throw ParseError(lineno, "trailing tokens after 'nakayama'");
      } else {
        while (i < tok.size()) d.ambient_exprs.push_back(tok[i++]);
        if (d.ambient_exprs.empty())
          throw ParseError(lineno, "empty ambient list");
      }
      if (d.generator_exprs.empty())
        throw ParseError(lineno, "empty generator list");
      subcats.push_back(std::move(d));
      open_module = nullptr;
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }

  if (field_override) field = field_override;
  if (!field) throw ParseError(lineno, "missing 'field' directive");
  if (quiver.vertices.empty())
    throw ParseError(lineno, "missing 'vertices' directive");

  ParsedInput out;
  try {
    out.algebra =
        make_algebra(quiver, relations, *field, max_path_length);
  } catch (const AlgebraError& e) {
    throw ParseError(lineno, e.what());
  }

  for (const PendingModule& pm : pending) {
    Rep m = zero_rep(out.algebra);
    for (const auto& [v, d] : pm.dims) m.dims[v] = d;
    for (int a = 0; a < quiver.num_arrows(); ++a)
      m.action[a] = Matrix(m.dims[quiver.arrows[a].tgt],
                           m.dims[quiver.arrows[a].src], *field);
    for (const auto& [a, entries, ln] : pm.maps) {
      int rows = m.dims[quiver.arrows[a].tgt];
      int cols = m.dims[quiver.arrows[a].src];
      if (static_cast<int>(entries.size()) != rows * cols)
        throw ParseError(ln, "map for arrow '" + quiver.arrows[a].label +
                                 "' needs " + std::to_string(rows * cols) +
                                 " entries, got " +
                                 std::to_string(entries.size()));
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
          m.action[a].set(r, c, entries[r * cols + c]);
    }
    if (!m.satisfies_relations())
      throw ParseError(pm.line, "module '" + pm.name +
                                    "' violates the algebra relations");
    if (out.find_module(pm.name))
      throw ParseError(pm.line, "duplicate module '" + pm.name + "'");
    out.modules.emplace_back(pm.name, std::move(m));
  }
  out.subcategories = std::move(subcats);
  return out;
}

/// Builds the SubcategorySpec for a declaration, resolving symbolic module
/// expressions against the parsed input.
inline SubcategorySpec build_subcategory(const ParsedInput& in,
                                         const SubcategoryDecl& d,
                                         uint64_t seed = 0) {
  SubcategorySpec spec;
  for (const std::string& e : d.generator_exprs)
    spec.generators.push_back(
        resolve_module_expr(e, in.algebra, &in, d.line));
  if (d.ambient_nakayama) {
    try {
      spec.ambient = nakayama_indecomposables(in.algebra, seed);
    } catch (const std::invalid_argument& e) {
      throw ParseError(d.line, e.what());
    }
    for (size_t i = 0; i < spec.ambient.size(); ++i)
      spec.ambient_names.push_back("M" + std::to_string(i + 1));
    spec.provenance = SubcategorySpec::Provenance::NakayamaEnumerated;
  } else {
    for (const std::string& e : d.ambient_exprs) {
      Rep m = resolve_module_expr(e, in.algebra, &in, d.line);
      Decomposition dec = decompose(m, seed);
      if (dec.entries.size() != 1 || dec.entries[0].multiplicity != 1)
        throw ParseError(d.line, "ambient member '" + e +
                                     "' is not indecomposable");
      spec.ambient.push_back(m);
      spec.ambient_names.push_back(e);
    }
    spec.provenance = SubcategorySpec::Provenance::UserSupplied;
  }
  return spec;
}

}  // namespace qhom
