// Command-line interface: expression evaluation, the anti-involution family,
// fixed-subalgebra bases, and the residue bilinear forms.

#include <CLI11.hpp>
#include <json.hpp>

#include "qpdo/parse.hpp"
#include "qpdo/subalgebra.hpp"

#include <fstream>
#include <iostream>

using namespace qpdo;
using nlohmann::json;

namespace {

// Exit codes: 0 ok, 2 usage, 3 invalid parameters, 4 expression syntax,
// 5 semantic/evaluation error, 6 failed check.
constexpr int kExitUsage = 2;
constexpr int kExitInvalidParams = 3;
constexpr int kExitParse = 4;
constexpr int kExitSemantic = 5;
constexpr int kExitCheckFailed = 6;

FieldElement parse_scalar_arg(std::string s) {
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  return parse_scalar(s);
}

struct ParamArgs {
  int N = 1;
  int n = 1;
  std::string eps = "+1";
  std::string B = "q";
  long r = 0;
  std::string c;  // comma-separated; empty means all ones
  std::string config;
};

void add_param_flags(CLI::App* cmd, ParamArgs& pa) {
  cmd->add_option("--config", pa.config, "key=value parameter file");
  cmd->add_option("--N", pa.N, "matrix size N");
  cmd->add_option("--n", pa.n, "block parameter n in [1..N]");
  cmd->add_option("--epsilon,--A", pa.eps, "sign (n<N) or A (n=N); scalar syntax");
  cmd->add_option("--B", pa.B, "parameter B, scalar syntax (default q)");
  cmd->add_option("--r", pa.r, "T-twist exponent r (n=N only)");
  cmd->add_option("--c", pa.c, "comma-separated c_1..c_{N-1} (default all 1)");
}

void load_config(ParamArgs& pa) {
  if (pa.config.empty()) return;
  std::ifstream in(pa.config);
  if (!in) throw std::invalid_argument("cannot open config file " + pa.config);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "N") pa.N = std::stoi(val);
    else if (key == "n") pa.n = std::stoi(val);
    else if (key == "epsilon" || key == "A") pa.eps = val;
    else if (key == "B") pa.B = val;
    else if (key == "r") pa.r = std::stol(val);
    else if (key == "c") pa.c = val;
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

InvolutionParams build_params(ParamArgs pa) {
  load_config(pa);
  std::vector<FieldElement> c;
  if (pa.c.empty()) {
    c.assign(pa.N > 0 ? pa.N - 1 : 0, FieldElement(1));
  } else {
    std::string rest = pa.c;
    while (true) {
      size_t comma = rest.find(',');
      c.push_back(parse_scalar_arg(rest.substr(0, comma)));
      if (comma == std::string::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return InvolutionParams::make(pa.N, pa.n, parse_scalar_arg(pa.eps),
                                parse_scalar_arg(pa.B), pa.r, std::move(c));
}

json element_json(const Element& x) {
  json terms = json::array();
  for (const auto& [key, coeff] : x.terms())
    terms.push_back({{"k", key.k},
                     {"m", key.m},
                     {"i", key.i},
                     {"j", key.j},
                     {"coeff", coeff.str()}});
  return {{"N", x.size()}, {"terms", terms}};
}

json params_json(const InvolutionParams& p) {
  json c = json::array();
  for (const auto& ci : p.c) c.push_back(ci.str());
  return {{"N", p.N}, {"n", p.n}, {"epsilon", p.eps.str()},
          {"B", p.B.str()}, {"r", p.r}, {"c", c}};
}

bool json_mode(const std::string& output) {
  if (output == "text") return false;
  if (output == "json" || output == "json-like") return true;
  throw std::invalid_argument("--output must be text or json-like");
}

void emit(const std::string& command, const json& params, const json& result,
          const std::string& output, const std::string& text) {
  if (json_mode(output)) {
    json doc = {{"command", command}, {"params", params}, {"result", result}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact symbolic algebra for matrix quantum pseudodifferential operators"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "text";
  app.add_option("--output", output, "output mode: text | json-like")
      ->capture_default_str();

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an operator expression");
  int eval_N = 1;
  std::string eval_expr;
  eval_cmd->add_option("--N", eval_N, "matrix size")->required();
  eval_cmd->add_option("--expr", eval_expr, "expression")->required();

  // bracket
  auto* br_cmd = app.add_subcommand("bracket", "commutator of two expressions");
  int br_N = 1;
  std::string br_a, br_b;
  br_cmd->add_option("--N", br_N, "matrix size")->required();
  br_cmd->add_option("--a", br_a, "left operand")->required();
  br_cmd->add_option("--b", br_b, "right operand")->required();

  // weight
  auto* wt_cmd = app.add_subcommand("weight", "principal gradation weight(s)");
  int wt_N = 1;
  std::string wt_expr;
  wt_cmd->add_option("--N", wt_N, "matrix size")->required();
  wt_cmd->add_option("--expr", wt_expr, "expression")->required();

  // sigma
  auto* sg_cmd = app.add_subcommand("sigma", "apply the anti-involution");
  ParamArgs sg_pa;
  std::string sg_expr;
  add_param_flags(sg_cmd, sg_pa);
  sg_cmd->add_option("--expr", sg_expr, "expression")->required();

  // validate-params
  auto* vp_cmd = app.add_subcommand("validate-params", "check parameter constraints");
  ParamArgs vp_pa;
  add_param_flags(vp_cmd, vp_pa);

  // check-involution
  auto* ci_cmd = app.add_subcommand(
      "check-involution", "involutivity/anti-multiplicativity/gradation suite");
  ParamArgs ci_pa;
  long ci_kmax = 2, ci_mmax = 2;
  add_param_flags(ci_cmd, ci_pa);
  ci_cmd->add_option("--kmax", ci_kmax, "z-exponent window");
  ci_cmd->add_option("--mmax", ci_mmax, "T-exponent window");

  // fixed-basis
  auto* fb_cmd = app.add_subcommand("fixed-basis",
                                    "windowed graded bases of the fixed subalgebra");
  ParamArgs fb_pa;
  long fb_zmin = -1, fb_zmax = 1, fb_tmin = -1, fb_tmax = 1;
  long fb_wmin = 0, fb_wmax = 0;
  add_param_flags(fb_cmd, fb_pa);
  fb_cmd->add_option("--zmin", fb_zmin, "lower z-exponent cutoff");
  fb_cmd->add_option("--zmax", fb_zmax, "upper z-exponent cutoff");
  fb_cmd->add_option("--tmin", fb_tmin, "lower T-exponent cutoff");
  fb_cmd->add_option("--tmax", fb_tmax, "upper T-exponent cutoff");
  auto* fb_wmin_opt = fb_cmd->add_option("--wmin", fb_wmin, "lowest weight");
  auto* fb_wmax_opt = fb_cmd->add_option("--wmax", fb_wmax, "highest weight");
  fb_wmax_opt->needs(fb_wmin_opt);

  // dim-table
  auto* dt_cmd = app.add_subcommand("dim-table", "weight -> dimension table");
  ParamArgs dt_pa;
  long dt_zmin = -1, dt_zmax = 1, dt_tmin = -1, dt_tmax = 1;
  long dt_wmin = -3, dt_wmax = 3;
  add_param_flags(dt_cmd, dt_pa);
  dt_cmd->add_option("--zmin", dt_zmin, "lower z-exponent cutoff");
  dt_cmd->add_option("--zmax", dt_zmax, "upper z-exponent cutoff");
  dt_cmd->add_option("--tmin", dt_tmin, "lower T-exponent cutoff");
  dt_cmd->add_option("--tmax", dt_tmax, "upper T-exponent cutoff");
  dt_cmd->add_option("--wmin", dt_wmin, "lowest weight");
  dt_cmd->add_option("--wmax", dt_wmax, "highest weight");

  // gram
  auto* gr_cmd = app.add_subcommand("gram", "Gram data of a residue form");
  int gr_N = 2, gr_n = 1;
  std::string gr_sign = "+1", gr_form = "std";
  long gr_U = 2;
  gr_cmd->add_option("--N", gr_N, "matrix size")->required();
  gr_cmd->add_option("--n", gr_n, "block parameter")->required();
  gr_cmd->add_option("--sign", gr_sign, "+1 or -1");
  gr_cmd->add_option("--form", gr_form, "std | transpose");
  gr_cmd->add_option("--U", gr_U, "z-exponent window for the basis");

  // adjoint-check
  auto* aj_cmd = app.add_subcommand("adjoint-check", "verify the adjointness identity");
  ParamArgs aj_pa;
  std::string aj_form = "std", aj_L, aj_h, aj_g;
  add_param_flags(aj_cmd, aj_pa);
  aj_cmd->add_option("--form", aj_form, "std | transpose");
  aj_cmd->add_option("--L", aj_L, "operator expression")->required();
  aj_cmd->add_option("--hvec", aj_h, "vector expression h")->required();
  aj_cmd->add_option("--gvec", aj_g, "vector expression g")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (eval_cmd->parsed()) {
    Element x = parse_element(eval_expr, eval_N);
    emit("eval", {{"N", eval_N}, {"expr", eval_expr}}, element_json(x), output,
         x.str() + "\n");
    return 0;
  }

  if (br_cmd->parsed()) {
    Element x = bracket(parse_element(br_a, br_N), parse_element(br_b, br_N));
    emit("bracket", {{"N", br_N}, {"a", br_a}, {"b", br_b}}, element_json(x),
         output, x.str() + "\n");
    return 0;
  }

  if (wt_cmd->parsed()) {
    Element x = parse_element(wt_expr, wt_N);
    auto bands = x.graded_decompose();
    json jb = json::array();
    std::string text;
    if (x.is_zero()) {
      text = "zero\n";
    } else if (bands.size() == 1) {
      text = std::to_string(bands.begin()->first) + "\n";
    } else {
      for (const auto& [w, part] : bands)
        text += std::to_string(w) + ": " + part.str() + "\n";
    }
    for (const auto& [w, part] : bands)
      jb.push_back({{"weight", w}, {"component", element_json(part)}});
    emit("weight", {{"N", wt_N}, {"expr", wt_expr}}, jb, output, text);
    return 0;
  }

  if (sg_cmd->parsed()) {
    InvolutionParams p = build_params(sg_pa);
    Element x = parse_element(sg_expr, p.N);
    Element sx = sigma_apply(p, x);
    emit("sigma", params_json(p), element_json(sx), output, sx.str() + "\n");
    return 0;
  }

  if (vp_cmd->parsed()) {
    InvolutionParams p = build_params(vp_pa);
    ValidityReport rep = validate_params(p);
    json jr = json::array();
    for (const auto& r : rep.results)
      jr.push_back({{"constraint", r.constraint},
                    {"status", r.ok ? "ok" : "violated"},
                    {"detail", r.detail}});
    emit("validate-params", params_json(p),
         {{"valid", rep.valid()}, {"constraints", jr}}, output,
         rep.str() + (rep.valid() ? "valid\n" : "invalid\n"));
    return rep.valid() ? 0 : kExitInvalidParams;
  }

  if (ci_cmd->parsed()) {
    InvolutionParams p = build_params(ci_pa);
    ValidityReport rep = validate_params(p);
    if (!rep.valid()) {
      std::cout << rep.str() << "invalid parameters\n";
      return kExitInvalidParams;
    }
    auto chk = check_anti_involution(p, ci_kmax, ci_mmax);
    // Cross-check the fast path against the oracle on the same window.
    bool agree = true;
    for (long k = -ci_kmax; k <= ci_kmax && agree; ++k)
      for (long m = -ci_mmax; m <= ci_mmax && agree; ++m)
        for (int i = 1; i <= p.N && agree; ++i)
          for (int j = 1; j <= p.N && agree; ++j) {
            Element x = Element::monomial(p.N, FieldElement(1), k, m, i, j);
            if (!(sigma_apply(p, x) == sigma_apply_oracle(p, x))) agree = false;
          }
    std::string text;
    text += std::string("involutive:            ") + (chk.involutive ? "pass" : "FAIL") + "\n";
    text += std::string("anti-multiplicative:   ") + (chk.anti_multiplicative ? "pass" : "FAIL") + "\n";
    text += std::string("gradation-preserving:  ") + (chk.gradation_preserving ? "pass" : "FAIL") + "\n";
    text += std::string("closed-form = oracle:  ") + (agree ? "pass" : "FAIL") + "\n";
    emit("check-involution", params_json(p),
         {{"involutive", chk.involutive},
          {"anti_multiplicative", chk.anti_multiplicative},
          {"gradation_preserving", chk.gradation_preserving},
          {"oracle_agreement", agree}},
         output, text);
    return (chk.anti_involution() && agree) ? 0 : kExitCheckFailed;
  }

  if (fb_cmd->parsed()) {
    InvolutionParams p = build_params(fb_pa);
    FixedSubalgebraSpec spec{p, fb_zmin, fb_zmax, fb_tmin, fb_tmax};
    require_valid(p);
    if (fb_wmin_opt->count() == 0) {
      fb_wmin = fb_zmin * p.N - (p.N - 1);
      fb_wmax = fb_zmax * p.N + (p.N - 1);
    } else if (fb_wmax_opt->count() == 0) {
      fb_wmax = fb_wmin;
    }
    json jb = json::array();
    std::string text;
    for (long w = fb_wmin; w <= fb_wmax; ++w) {
      auto basis = graded_basis(spec, w);
      if (basis.empty()) continue;
      text += "w=" + std::to_string(w) + " dim=" + std::to_string(basis.size()) + "\n";
      json jbasis = json::array();
      for (const auto& b : basis) {
        text += "  " + b.str() + "\n";
        jbasis.push_back(element_json(b));
      }
      jb.push_back({{"weight", w}, {"basis", jbasis}});
    }
    emit("fixed-basis", params_json(p), jb, output, text);
    return 0;
  }

  if (dt_cmd->parsed()) {
    InvolutionParams p = build_params(dt_pa);
    FixedSubalgebraSpec spec{p, dt_zmin, dt_zmax, dt_tmin, dt_tmax};
    require_valid(p);
    auto table = dim_table(spec, dt_wmin, dt_wmax);
    std::string text;
    json jt = json::array();
    for (const auto& [w, d] : table) {
      text += std::to_string(w) + "\t" + std::to_string(d) + "\n";
      jt.push_back({{"weight", w}, {"dim", d}});
    }
    emit("dim-table", params_json(p), jt, output, text);
    return 0;
  }

  if (gr_cmd->parsed()) {
    if (gr_form != "std" && gr_form != "transpose")
      throw std::invalid_argument("--form must be std or transpose");
    FormKind kind = gr_form == "transpose" ? FormKind::Transpose : FormKind::Standard;
    int sign = parse_scalar_arg(gr_sign) == FieldElement(-1) ? -1 : +1;
    FormSpec spec{sign, kind, gr_N, gr_n};
    std::vector<VectorElement> basis;
    std::vector<std::string> labels;
    for (long u = -gr_U; u <= gr_U; ++u)
      for (int pcomp = 1; pcomp <= gr_N; ++pcomp) {
        basis.push_back(VectorElement::basis(gr_N, u, pcomp));
        labels.push_back(basis.back().str());
      }
    auto G = gram_matrix(spec, basis);
    std::string text;
    json jrows = json::array();
    for (size_t a = 0; a < basis.size(); ++a) {
      json row = json::array();
      text += labels[a] + ":";
      for (size_t b = 0; b < basis.size(); ++b) {
        text += " " + G[a][b].str();
        row.push_back(G[a][b].str());
      }
      text += "\n";
      jrows.push_back(row);
    }
    json jsym = json::object();
    std::string symtext;
    for (int s : {+1, -1}) {
      FormSpec sp{s, kind, gr_N, gr_n};
      std::string b1 = to_string(block_symmetry(sp, true, gr_U));
      std::string b2 = to_string(block_symmetry(sp, false, gr_U));
      symtext += std::string("B") + (s > 0 ? "+" : "-") +
                 " first-block: " + b1 + ", second-block: " + b2 + "\n";
      jsym[s > 0 ? "plus" : "minus"] = {{"first_block", b1}, {"second_block", b2}};
    }
    emit("gram",
         {{"N", gr_N}, {"n", gr_n}, {"sign", sign},
          {"form", gr_form}, {"U", gr_U}},
         {{"labels", labels}, {"gram", jrows}, {"block_symmetry", jsym}},
         output, text + symtext);
    return 0;
  }

  if (aj_cmd->parsed()) {
    InvolutionParams p = build_params(aj_pa);
    if (aj_form != "std" && aj_form != "transpose")
      throw std::invalid_argument("--form must be std or transpose");
    FormKind kind = aj_form == "transpose" ? FormKind::Transpose : FormKind::Standard;
    FormSpec spec{p.eps == FieldElement(-1) ? -1 : +1, kind, p.N, p.n};
    Element L = parse_element(aj_L, p.N);
    VectorElement h = parse_vector(aj_h, p.N);
    VectorElement g = parse_vector(aj_g, p.N);
    bool ok = adjoint_check(p, spec, L, h, g);
    emit("adjoint-check", params_json(p), {{"adjoint", ok}}, output,
         std::string(ok ? "adjoint: true" : "adjoint: FALSE") + "\n");
    return ok ? 0 : kExitCheckFailed;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "expression error " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
}
