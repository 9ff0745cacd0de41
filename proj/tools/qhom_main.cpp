// Command-line front end: parse an algebra/module description, run one
// analysis verb, and print a text or structured report.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qhom/parse.hpp"
#include "qhom/report.hpp"

using namespace qhom;

namespace {

struct Options {
  std::string input_file;
  std::string field;
  uint64_t seed = 0;
  int cutoff = -1;
  int budget = 32;
  std::string format = "text";
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("input", opt.input_file, "algebra description file")
      ->required();
  cmd->add_option("--field", opt.field,
                  "override the field directive (Q or F<p>)");
  cmd->add_option("--seed", opt.seed, "seed for randomized subroutines");
  cmd->add_option("--cutoff", opt.cutoff, "resolution length cutoff");
  cmd->add_option("--budget", opt.budget, "iteration budget");
  cmd->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

ParsedInput load(const Options& opt) {
  std::ifstream in(opt.input_file);
  if (!in) throw ParseError(0, "cannot open '" + opt.input_file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::optional<FieldSpec> override;
  if (!opt.field.empty()) {
    if (opt.field == "Q") {
      override = FieldSpec::rationals();
    } else if (opt.field.size() > 1 && opt.field[0] == 'F') {
      override = FieldSpec::prime(std::stoll(opt.field.substr(1)));
    } else {
      throw ParseError(0, "bad --field value '" + opt.field + "'");
    }
  }
  return parse_input(ss.str(), 64, override);
}

Rep module_arg(const ParsedInput& in, const std::string& expr) {
  return resolve_module_expr(expr, in.algebra, &in);
}

SubcategorySpec subcategory_arg(const ParsedInput& in, const std::string& name,
                                uint64_t seed) {
  for (const SubcategoryDecl& d : in.subcategories)
    if (name.empty() || d.name == name) return build_subcategory(in, d, seed);
  throw ParseError(0, name.empty()
                          ? "input declares no subcategory"
                          : "no subcategory named '" + name + "'");
}

bool json_has_undecided(const Json& j) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (k == "undecided" && v.is_boolean() && v.get<bool>()) return true;
      if (k == "finite" && v.is_boolean() && !v.get<bool>()) return true;
      if (k == "verdict" && v.is_string() &&
          v.get<std::string>() == "undecided-at-depth")
        return true;
      if (json_has_undecided(v)) return true;
    }
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (json_has_undecided(v)) return true;
  }
  return false;
}

int finish(const Json& report, const Options& opt) {
  if (opt.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    render_text(report, std::cout);
  return json_has_undecided(report) ? 2 : 0;
}

Json algebra_summary(const ParsedInput& in, const Options& opt) {
  const AlgebraPtr& a = in.algebra;
  Json j;
  j["dim"] = a->dim();
  j["vertices"] = a->num_vertices();
  j["arrows"] = a->quiver().num_arrows();
  j["field"] = a->field().to_string();
  DimValue g = global_dim(a, opt.cutoff);
  j["gl_dim"] = to_json(g);
  j["id_regular"] = to_json(injective_dim(regular_rep(a), opt.cutoff));
  j["id_regular_opposite"] =
      to_json(injective_dim(regular_rep(a->opposite()), opt.cutoff));
  j["nakayama"] = is_nakayama(a);
  if (g.finite && g.value >= 1) {
    j["auslander_level"] = g.value - 1;
    j["is_gl_minus_1_auslander"] =
        check_n_auslander(a, g.value - 1, opt.cutoff).passed();
    j["gorenstein_at_gl_dim"] = check_gorenstein(a, g.value, opt.cutoff)
                                    .passed();
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homological workbench for bound quiver algebras"};
  app.require_subcommand(1);

  Options opt;
  std::string mod_expr, from_expr, to_expr, subcat_name, other_file,
      other_expr, gamma_file;
  int length = 8, max_degree = 4, level = -1;

  auto* c_summary = app.add_subcommand("summary", "algebra invariants");
  add_common(c_summary, opt);

  auto* c_resolve =
      app.add_subcommand("resolve", "minimal projective resolution");
  add_common(c_resolve, opt);
  c_resolve->add_option("--module", mod_expr)->required();
  c_resolve->add_option("--length", length);

  auto* c_ext = app.add_subcommand("ext", "Ext dimension table");
  add_common(c_ext, opt);
  c_ext->add_option("--from", from_expr)->required();
  c_ext->add_option("--to", to_expr)->required();
  c_ext->add_option("--max", max_degree);

  auto* c_dims = app.add_subcommand("dims", "pd, id, grade, r.grade");
  add_common(c_dims, opt);
  c_dims->add_option("--module", mod_expr)->required();

  auto* c_gor = app.add_subcommand("gorenstein", "n-Gorenstein check");
  add_common(c_gor, opt);
  c_gor->add_option("--n", level);

  auto* c_aus = app.add_subcommand("auslander", "n-Auslander check");
  add_common(c_aus, opt);
  c_aus->add_option("--n", level);

  auto* c_orth =
      app.add_subcommand("orthogonal", "maximal n-orthogonality check");
  add_common(c_orth, opt);
  c_orth->add_option("--subcategory", subcat_name);
  c_orth->add_option("--n", level);

  auto* c_cls =
      app.add_subcommand("classify-simples", "simple module classification");
  add_common(c_cls, opt);
  c_cls->add_option("--subcategory", subcat_name);

  auto* c_tm = app.add_subcommand("trivial-maximal",
                                  "trivial maximal subcategory conditions");
  add_common(c_tm, opt);
  c_tm->add_option("--n", level);

  auto* c_ah =
      app.add_subcommand("almost-hereditary", "almost-hereditary criterion");
  add_common(c_ah, opt);
  c_ah->add_option("--subcategory", subcat_name);

  auto* c_cot = app.add_subcommand("cotilting", "cotilting module check");
  add_common(c_cot, opt);
  c_cot->add_option("--module", mod_expr)->required();

  auto* c_t43 =
      app.add_subcommand("theorem-4-3", "strong cotilting consequences");
  add_common(c_t43, opt);
  c_t43->add_option("--module", mod_expr)->required();

  auto* c_orb = app.add_subcommand("orbit", "syzygy-translate orbit");
  add_common(c_orb, opt);
  c_orb->add_option("--module", mod_expr)->required();
  c_orb->add_option("--n", level);

  auto* c_tcx = app.add_subcommand(
      "tensor-cx", "tensor-product dimension sequence and complexity");
  add_common(c_tcx, opt);
  c_tcx->add_option("--module", mod_expr)->required();
  c_tcx->add_option("--other-file", other_file)->required();
  c_tcx->add_option("--other-module", other_expr)->required();
  c_tcx->add_option("--length", length);

  auto* c_p51 = app.add_subcommand("prop-5-1", "tensor no-go check");
  add_common(c_p51, opt);
  c_p51->add_option("--gamma", gamma_file, "second algebra file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    ParsedInput in = load(opt);
    Json report;
    CLI::App* verb = app.get_subcommands()[0];
    report["command"] = verb->get_name();
    report["input"] = opt.input_file;
    report["seed"] = opt.seed;

    if (verb == c_summary) {
      report["algebra"] = algebra_summary(in, opt);
    } else if (verb == c_resolve) {
      Rep m = module_arg(in, mod_expr);
      Resolution res = minimal_projective_resolution(m, length);
      Json terms = Json::array();
      for (size_t i = 0; i < res.terms.size(); ++i) {
        Json t;
        t["degree"] = (int)i;
        t["total_dim"] = res.term_dims[i];
        Json mults = Json::array();
        for (int c : res.mults[i]) mults.push_back(c);
        t["projective_multiplicities"] = mults;
        terms.push_back(t);
      }
      report["module"] = to_json(m);
      report["terms"] = terms;
      report["terminated"] = res.terminated;
    } else if (verb == c_ext) {
      Rep m = module_arg(in, from_expr);
      Rep n = module_arg(in, to_expr);
      ExtTable t = ext_dims(m, n, max_degree);
      Json dims = Json::array();
      for (int i = 0; i <= max_degree; ++i) dims.push_back(t[i]);
      report["from"] = to_json(m);
      report["to"] = to_json(n);
      report["ext_dims"] = dims;
    } else if (verb == c_dims) {
      Rep m = module_arg(in, mod_expr);
      report["module"] = to_json(m);
      report["pd"] = to_json(pd(m, opt.cutoff));
      report["id"] = to_json(injective_dim(m, opt.cutoff));
      report["grade"] = to_json(grade(m, opt.cutoff));
      report["r_grade"] = to_json(reduced_grade(m, opt.cutoff));
    } else if (verb == c_gor) {
      int n = level;
      if (n < 0) {
        DimValue idl = injective_dim(regular_rep(in.algebra), opt.cutoff);
        n = idl.finite ? idl.value + 1 : 1;
      }
      report["n"] = n;
      report["verdict"] = to_json(check_gorenstein(in.algebra, n, opt.cutoff));
    } else if (verb == c_aus) {
      int n = level;
      if (n < 0) {
        DimValue g = global_dim(in.algebra, opt.cutoff);
        n = g.finite && g.value >= 1 ? g.value - 1 : 0;
      }
      report["n"] = n;
      report["verdict"] =
          to_json(check_n_auslander(in.algebra, n, opt.cutoff));
    } else if (verb == c_orth) {
      SubcategorySpec spec = subcategory_arg(in, subcat_name, opt.seed);
      int n = level >= 0 ? level : 1;
      report["n"] = n;
      report["verdict"] = to_json(check_maximal_orthogonal(spec, n, opt.seed));
    } else if (verb == c_cls) {
      SubcategorySpec spec = subcategory_arg(in, subcat_name, opt.seed);
      SimpleClassification cls =
          classify_simples(spec, opt.seed, opt.cutoff);
      report["n"] = cls.n;
      Json rows = Json::array();
      for (const auto& r : cls.simples) {
        Json row;
        row["vertex"] = in.algebra->quiver().vertices[r.vertex];
        row["pd"] = to_json(r.pd);
        row["id"] = to_json(r.id);
        row["grade"] = to_json(r.grade);
        row["r_grade"] = to_json(r.rgrade);
        row["injective"] = r.injective;
        rows.push_back(row);
      }
      report["simples"] = rows;
      report["verdict"] = to_json(cls.verdict);
    } else if (verb == c_tm) {
      int n = level;
      if (n < 0) {
        DimValue g = global_dim(in.algebra, opt.cutoff);
        n = g.finite ? g.value : 0;
      }
      report["n"] = n;
      report["verdict"] =
          to_json(check_trivial_maximal(in.algebra, n, opt.cutoff));
    } else if (verb == c_ah) {
      SubcategorySpec spec = subcategory_arg(in, subcat_name, opt.seed);
      report["verdict"] = to_json(
          check_almost_hereditary_criterion(spec, opt.seed, opt.cutoff));
    } else if (verb == c_cot) {
      Rep t = module_arg(in, mod_expr);
      report["module"] = to_json(t);
      report["report"] = to_json(check_cotilting(t, opt.seed, opt.cutoff));
    } else if (verb == c_t43) {
      Rep t = module_arg(in, mod_expr);
      report["module"] = to_json(t);
      report["verdict"] = to_json(check_theorem_4_3(t, opt.seed, opt.cutoff));
    } else if (verb == c_orb) {
      Rep x = module_arg(in, mod_expr);
      int n = level >= 0 ? level : 1;
      report["n"] = n;
      OrbitReport orb =
          omega_n_tau_orbit(x, n, opt.budget, opt.seed, opt.cutoff);
      report["orbit"] = to_json(orb);
      if (!orb.period) report["undecided"] = true;
    } else if (verb == c_tcx) {
      Rep m = module_arg(in, mod_expr);
      std::ifstream of(other_file);
      if (!of) throw ParseError(0, "cannot open '" + other_file + "'");
      std::stringstream ss;
      ss << of.rdbuf();
      ParsedInput other = parse_input(ss.str());
      Rep q = resolve_module_expr(other_expr, other.algebra, &other);
      DimSequence dp = dim_sequence_of(m, length, mod_expr);
      DimSequence dq = dim_sequence_of(q, length, other_expr);
      DimSequence conv = tensor_dim_sequence(dp, dq);
      report["first_sequence"] = to_json(dp);
      report["second_sequence"] = to_json(dq);
      report["convolution"] = to_json(conv);
      report["first_cx"] = to_json(estimate_complexity(dp));
      report["second_cx"] = to_json(estimate_complexity(dq));
      report["convolution_cx"] = to_json(estimate_complexity(conv));
      report["audit"] = to_json(audit_prop_5_4(dp, dq));
    } else if (verb == c_p51) {
      std::ifstream gf(gamma_file);
      if (!gf) throw ParseError(0, "cannot open '" + gamma_file + "'");
      std::stringstream ss;
      ss << gf.rdbuf();
      ParsedInput gamma = parse_input(ss.str());
      report["verdict"] =
          to_json(check_prop_5_1(in.algebra, gamma.algebra, opt.cutoff));
    }
    return finish(report, opt);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const UndecidedError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return 2;
  } catch (const UncertifiedError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  }
}
