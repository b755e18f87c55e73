#include "conecalc/cli.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "conecalc/catalog.hpp"
#include "conecalc/error.hpp"
#include "conecalc/expr.hpp"

namespace conecalc {

namespace {

using nlohmann::json;

struct CliState {
  std::string space;
  int codim = 0;
  int n = 0;
  std::string expr1, expr2;
  std::string case_id;
  bool all_cases = false;
  bool json_mode = false;
  std::string out_path;
  std::string formula_name;
  std::optional<int> p_r, p_n, p_d, p_k, p_e, p_g, p_m;
};

ParamMap collected_params(const CliState& st) {
  ParamMap p;
  if (st.p_r) p["r"] = *st.p_r;
  if (st.p_n) p["n"] = *st.p_n;
  if (st.p_d) p["d"] = *st.p_d;
  if (st.p_k) p["k"] = *st.p_k;
  if (st.p_e) p["e"] = *st.p_e;
  if (st.p_g) p["g"] = *st.p_g;
  if (st.p_m) p["m"] = *st.p_m;
  return p;
}

bool is_secant_spec(const std::string& spec) {
  return spec.rfind("sec:", 0) == 0;
}

SecantBundleRing secant_from_spec(const std::string& spec) {
  std::string rest = spec.substr(4);
  auto comma = rest.find(',');
  if (comma == std::string::npos)
    throw UsageError("sec space spec needs sec:<n>,<k>");
  try {
    return make_secant_ring(std::stoi(rest.substr(0, comma)),
                            std::stoi(rest.substr(comma + 1)));
  } catch (const std::invalid_argument&) {
    throw UsageError("bad integers in space spec '" + spec + "'");
  }
}

// canonical term list of a mixed class: [monomial text, coefficient]
std::vector<std::pair<std::string, Rational>> class_terms(
    const MixedClass& x) {
  std::vector<std::pair<std::string, Rational>> out;
  std::vector<std::pair<int, Rational>> amb;
  for (const auto& [mono, c] : x.ambient_part().terms())
    amb.emplace_back(mono.exponent("H"), c);
  std::sort(amb.begin(), amb.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [p, c] : amb)
    out.emplace_back(p == 0 ? "1" : (p == 1 ? "H" : "H^" + std::to_string(p)),
                     c);
  std::vector<std::tuple<int, int, Rational>> exc;
  for (const auto& [mono, c] : x.exceptional_part().terms())
    exc.emplace_back(mono.exponent("h2"), mono.exponent("h1"), c);
  std::sort(exc.begin(), exc.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b))
      return std::get<0>(a) > std::get<0>(b);
    return std::get<1>(a) > std::get<1>(b);
  });
  for (const auto& [e2, e1, c] : exc) {
    std::string inner;
    if (e2 > 0) inner = e2 == 1 ? "h2" : "h2^" + std::to_string(e2);
    if (e1 > 0) {
      if (!inner.empty()) inner += "*";
      inner += e1 == 1 ? "h1" : "h1^" + std::to_string(e1);
    }
    out.emplace_back(inner.empty() ? "E" : "j(" + inner + ")", c);
  }
  return out;
}

json class_json(const MixedClass& x) {
  json out = json::array();
  for (const auto& [mono, c] : class_terms(x))
    out.push_back(json::array({mono, c.str()}));
  return out;
}

json sum_json(const FormalSum& s) {
  json out = json::array();
  for (const auto& [mono, c] : s.terms())
    out.push_back(json::array({mono.str(), c.str()}));
  return out;
}

json ivec_json(const IVec& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

std::map<int, MixedClass> split_by_codim(const MixedClass& x) {
  std::map<int, MixedClass> out;
  for (const auto& [mono, c] : x.ambient_part().terms()) {
    FormalSum t(mono, c);
    out[mono.exponent("H")] += MixedClass::ambient(t);
  }
  for (const auto& [mono, c] : x.exceptional_part().terms()) {
    FormalSum t(mono, c);
    out[mono.exponent("h1") + mono.exponent("h2") + 1] +=
        MixedClass::exceptional(t);
  }
  return out;
}

json report_json(const VerificationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
  json params = json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  return {{"case", rep.id},
          {"params", params},
          {"checks", checks},
          {"pass", rep.pass},
          {"notes", rep.notes}};
}

void print_report(const VerificationReport& rep, std::ostream& out) {
  std::string params;
  for (const auto& [k, v] : rep.params)
    params += " " + k + "=" + std::to_string(v);
  out << (rep.pass ? "PASS" : "FAIL") << " " << rep.id << params << " ("
      << rep.checks.size() << " checks)\n";
  for (const auto& c : rep.checks)
    if (!c.pass)
      out << "  failed: " << c.name << " expected " << c.expected << " got "
          << c.computed << "\n";
}

int cmd_mul(const CliState& st, std::ostream& out) {
  if (is_secant_spec(st.space)) {
    SecantBundleRing pe = secant_from_spec(st.space);
    FormalSum a = eval_secant_expr(st.expr1, pe);
    FormalSum b = eval_secant_expr(st.expr2, pe);
    FormalSum prod = pe.mul(a, b);
    if (st.json_mode)
      out << json{{"space", st.space}, {"product", sum_json(prod)}}.dump()
          << "\n";
    else
      out << prod.str() << "\n";
    return 0;
  }
  BlowupPresentation S = make_space_from_spec(st.space);
  MixedClass prod =
      product(eval_blowup_expr(st.expr1, S), eval_blowup_expr(st.expr2, S), S);
  if (st.json_mode) {
    json grades = json::object();
    for (const auto& [k, part] : split_by_codim(prod))
      grades[std::to_string(k)] = class_json(part);
    out << json{{"space", st.space}, {"product", grades}}.dump() << "\n";
  } else {
    auto grades = split_by_codim(prod);
    if (grades.empty()) out << "0\n";
    for (const auto& [k, part] : grades)
      out << "codim " << k << ": " << part.str() << "\n";
  }
  return 0;
}

int cmd_deg(const CliState& st, std::ostream& out) {
  BigInt value;
  if (is_secant_spec(st.space)) {
    SecantBundleRing pe = secant_from_spec(st.space);
    value = pe.degree(eval_secant_expr(st.expr1, pe));
  } else {
    BlowupPresentation S = make_space_from_spec(st.space);
    value = degree(eval_blowup_expr(st.expr1, S), S);
  }
  if (st.json_mode)
    out << json{{"space", st.space}, {"degree", value.str()}}.dump() << "\n";
  else
    out << value.str() << "\n";
  return 0;
}

int cmd_pairing(const CliState& st, std::ostream& out) {
  if (is_secant_spec(st.space))
    throw DomainError("pairing matrices are provided for blow-up spaces");
  BlowupPresentation S = make_space_from_spec(st.space);
  PairingData pd = pairing_matrix(S, st.codim);
  if (st.json_mode) {
    json matrix = json::array();
    for (const auto& row : pd.matrix) matrix.push_back(ivec_json(row));
    out << json{{"space", st.space},
                {"codim", pd.k},
                {"rows", pd.rows.names},
                {"cols", pd.cols.names},
                {"matrix", matrix}}
               .dump()
        << "\n";
    return 0;
  }
  out << "rows (codim " << pd.k << "):";
  for (const auto& name : pd.rows.names) out << " " << name;
  out << "\ncols (codim " << S.r - pd.k << "):";
  for (const auto& name : pd.cols.names) out << " " << name;
  out << "\n";
  for (const auto& row : pd.matrix) {
    out << "[";
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? " " : "") << row[j].str();
    out << "]\n";
  }
  return 0;
}

int cmd_numbasis(const CliState& st, std::ostream& out) {
  if (is_secant_spec(st.space))
    throw DomainError("numerical bases are provided for blow-up spaces");
  BlowupPresentation S = make_space_from_spec(st.space);
  NumericalBasis nb = numerical_basis(S, st.codim);
  if (st.json_mode) {
    json rels = json::array();
    for (const auto& rel : nb.relations) rels.push_back(ivec_json(rel));
    out << json{{"space", st.space},
                {"codim", nb.k},
                {"generators", nb.gens.names},
                {"basis", nb.basis_names},
                {"relations", rels}}
               .dump()
        << "\n";
    return 0;
  }
  out << "basis:";
  for (const auto& name : nb.basis_names) out << " " << name;
  out << "\n";
  for (const auto& rel : nb.relations) {
    out << "relation: ";
    bool first = true;
    for (std::size_t i = 0; i < rel.size(); ++i) {
      if (rel[i].is_zero()) continue;
      BigInt c = rel[i];
      if (first) {
        if (c.is_negative()) out << "-";
      } else {
        out << (c.is_negative() ? " - " : " + ");
      }
      first = false;
      BigInt mag = c.abs();
      if (!mag.is_one()) out << mag.str() << "*";
      out << nb.gens.names[i];
    }
    out << " = 0\n";
  }
  if (nb.relations.empty()) out << "relations: none\n";
  return 0;
}

int cmd_push(const CliState& st, std::ostream& out) {
  PsiMaps psi(st.n);
  MixedClass pushed =
      psi.pushforward(eval_secant_expr(st.expr1, psi.secant_ring()));
  if (st.json_mode)
    out << json{{"n", st.n}, {"pushforward", class_json(pushed)}}.dump()
        << "\n";
  else
    out << pushed.str() << "\n";
  return 0;
}

int cmd_pull(const CliState& st, std::ostream& out) {
  PsiMaps psi(st.n);
  FormalSum pulled = psi.pullback(eval_blowup_expr(st.expr1, psi.blowup()));
  if (st.json_mode)
    out << json{{"n", st.n}, {"pullback", sum_json(pulled)}}.dump() << "\n";
  else
    out << pulled.str() << "\n";
  return 0;
}

int cmd_cone(const CliState& st, std::ostream& out) {
  auto descs = cone_descriptions(st.case_id, collected_params(st));
  if (st.json_mode) {
    json arr = json::array();
    for (const auto& d : descs) {
      json rays = json::array(), facets = json::array();
      for (const auto& r : d.rays) rays.push_back(ivec_json(r));
      for (const auto& f : d.facets) facets.push_back(ivec_json(f));
      arr.push_back({{"label", d.label},
                     {"space", d.space},
                     {"codim", d.codim},
                     {"basis", d.basis_names},
                     {"rays", rays},
                     {"facets", facets}});
    }
    out << json{{"case", st.case_id}, {"cones", arr}}.dump() << "\n";
    return 0;
  }
  for (const auto& d : descs) {
    out << d.label << " in " << d.space << " codim " << d.codim << ", basis:";
    for (const auto& b : d.basis_names) out << " " << b;
    out << "\n";
    auto dump = [&](const char* label, const std::vector<IVec>& vs) {
      out << "  " << label << ":";
      for (const auto& v : vs) {
        out << " (";
        for (std::size_t i = 0; i < v.size(); ++i)
          out << (i ? "," : "") << v[i].str();
        out << ")";
      }
      out << "\n";
    };
    dump("rays", d.rays);
    dump("facets", d.facets);
  }
  return 0;
}

int cmd_verify(const CliState& st, std::ostream& out) {
  std::vector<VerificationReport> reports;
  if (st.all_cases) {
    struct Job {
      std::string id;
      ParamMap params;
    };
    std::vector<Job> jobs;
    for (const auto& rec : list_cases())
      for (const auto& inst : rec.instances) jobs.push_back({rec.id, inst});
    reports.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        try {
          reports[i] = verify_case(jobs[i].id, jobs[i].params);
        } catch (const std::exception& ex) {
          VerificationReport rep;
          rep.id = jobs[i].id;
          rep.params = jobs[i].params;
          rep.add("exception", "none", ex.what(), false);
          rep.recompute_pass();
          reports[i] = std::move(rep);
        }
      }
    };
    unsigned threads =
        std::min<unsigned>(std::thread::hardware_concurrency(),
                           unsigned(jobs.size()));
    if (threads < 1) threads = 1;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  } else {
    if (st.case_id.empty())
      throw UsageError("verify needs --case <id> or --all");
    reports.push_back(verify_case(st.case_id, collected_params(st)));
  }

  bool all_pass = true;
  std::ostringstream body;
  if (st.json_mode) {
    json arr = json::array();
    for (const auto& rep : reports) {
      arr.push_back(report_json(rep));
      all_pass = all_pass && rep.pass;
    }
    body << (reports.size() == 1 ? arr[0].dump() : arr.dump()) << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& rep : reports) {
      print_report(rep, body);
      all_pass = all_pass && rep.pass;
      if (rep.pass) ++passed;
    }
    if (reports.size() > 1)
      body << passed << "/" << reports.size() << " cases passed\n";
  }
  out << body.str();
  if (!st.out_path.empty()) {
    std::ofstream f(st.out_path);
    if (!f) throw UsageError("cannot write report file " + st.out_path);
    f << body.str();
  }
  return all_pass ? 0 : 1;
}

int cmd_formula(const CliState& st, std::ostream& out) {
  CurveNumerics cn;
  cn.d = st.p_d.value_or(0);
  cn.g = st.p_g.value_or(0);
  cn.e = st.p_e.value_or(0);
  cn.m = st.p_m.value_or(0);
  int k = st.p_k.value_or(-1);
  std::string value;
  if (st.formula_name == "berzolari") {
    if (!st.p_d) throw UsageError("formula berzolari needs --d (and --g)");
    value = berzolari(cn.d, cn.g).str();
  } else if (st.formula_name == "nodes") {
    if (!st.p_d) throw UsageError("formula nodes needs --d");
    value = projection_nodes(cn.d).str();
  } else if (st.formula_name == "h0p3") {
    if (k < 0) throw UsageError("formula h0p3 needs --k");
    value = h0_p3(k).str();
  } else if (st.formula_name == "h0curve") {
    if (!st.p_d || k < 0) throw UsageError("formula h0curve needs --d --k");
    value = h0_curve(cn.d, k).str();
  } else if (st.formula_name == "zslope") {
    if (!st.p_d || !st.p_e)
      throw UsageError("formula zslope needs --d --e [--m]");
    value = st.p_m ? z_slope(cn.d, cn.e, cn.m).str()
                   : z_slope_limit(cn.d, cn.e).str();
  } else {
    throw UsageError("unknown formula '" + st.formula_name +
                     "' (berzolari|nodes|h0p3|h0curve|zslope)");
  }
  if (st.json_mode)
    out << json{{"formula", st.formula_name}, {"value", value}}.dump() << "\n";
  else
    out << value << "\n";
  return 0;
}

int cmd_cases(const CliState& st, std::ostream& out) {
  if (st.json_mode) {
    json arr = json::array();
    for (const auto& rec : list_cases()) {
      CaseInstance rep = instantiate_case(rec.id, rec.instances.front());
      json cones = json::array();
      for (const auto& claim : rep.cones)
        cones.push_back({{"space", claim.space},
                         {"codim", claim.codim},
                         {"generators", claim.generators},
                         {"certificates", claim.certificates}});
      arr.push_back({{"id", rec.id},
                     {"family", rec.family},
                     {"title", rec.title},
                     {"range", rec.range_str},
                     {"instances", rec.instances.size()},
                     {"representative_params", [&] {
                        json p = json::object();
                        for (const auto& [k, v] : rec.instances.front())
                          p[k] = v;
                        return p;
                      }()},
                     {"cones", cones},
                     {"notes", rec.notes}});
    }
    out << arr.dump() << "\n";
    return 0;
  }
  for (const auto& rec : list_cases())
    out << rec.id << "  [" << rec.range_str << "]  " << rec.title << "\n";
  return 0;
}

void add_param_options(CLI::App* cmd, CliState& st) {
  cmd->add_option("--r", st.p_r, "ambient dimension parameter");
  cmd->add_option("--n", st.p_n, "dimension parameter n");
  cmd->add_option("--d", st.p_d, "curve degree parameter");
  cmd->add_option("--k", st.p_k, "codimension / secant order parameter");
  cmd->add_option("--e", st.p_e, "curve degree inside the surface");
  cmd->add_option("--g", st.p_g, "genus parameter");
  cmd->add_option("--m", st.p_m, "cutting degree parameter");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliState st;
  CLI::App app{
      "conecalc: exact intersection rings and effective-cone certificates "
      "for blow ups of projective space along rational curves"};
  app.require_subcommand(0, 1);

  auto* mul = app.add_subcommand("mul", "product of two classes");
  mul->add_option("--space", st.space, "space spec")->required();
  mul->add_flag("--json", st.json_mode, "machine-readable output");
  mul->add_option("expr1", st.expr1, "first class expression")->required();
  mul->add_option("expr2", st.expr2, "second class expression")->required();

  auto* deg = app.add_subcommand("deg", "degree of a top-codimension class");
  deg->add_option("--space", st.space, "space spec")->required();
  deg->add_flag("--json", st.json_mode, "machine-readable output");
  deg->add_option("expr", st.expr1, "class expression")->required();

  auto* pairing = app.add_subcommand("pairing", "degree pairing matrix");
  pairing->add_option("--space", st.space, "space spec")->required();
  pairing->add_option("--codim", st.codim, "codimension")->required();
  pairing->add_flag("--json", st.json_mode, "machine-readable output");

  auto* numbasis =
      app.add_subcommand("numbasis", "numerical basis and relations");
  numbasis->add_option("--space", st.space, "space spec")->required();
  numbasis->add_option("--codim", st.codim, "codimension")->required();
  numbasis->add_flag("--json", st.json_mode, "machine-readable output");

  auto* push = app.add_subcommand(
      "push", "pushforward from the secant bundle to the blow up");
  push->add_option("--n", st.n, "ambient dimension")->required();
  push->add_flag("--json", st.json_mode, "machine-readable output");
  push->add_option("expr", st.expr1, "class in h, zeta")->required();

  auto* pull = app.add_subcommand(
      "pull", "pullback from the blow up to the secant bundle");
  pull->add_option("--n", st.n, "ambient dimension")->required();
  pull->add_flag("--json", st.json_mode, "machine-readable output");
  pull->add_option("expr", st.expr1, "class in H, E, j(...)")->required();

  auto* cone = app.add_subcommand("cone", "rays and facets of a case's cones");
  cone->add_option("--case", st.case_id, "case id")->required();
  cone->add_flag("--json", st.json_mode, "machine-readable output");
  add_param_options(cone, st);

  auto* verify = app.add_subcommand("verify", "run catalog verifications");
  verify->add_option("--case", st.case_id, "case id");
  verify->add_flag("--all", st.all_cases, "verify every record in range");
  verify->add_flag("--json", st.json_mode, "machine-readable output");
  verify->add_option("--out", st.out_path, "also write the report here");
  add_param_options(verify, st);

  auto* formula = app.add_subcommand("formula", "closed-form curve counts");
  formula
      ->add_option("name", st.formula_name,
                   "berzolari|nodes|h0p3|h0curve|zslope")
      ->required();
  formula->add_flag("--json", st.json_mode, "machine-readable output");
  add_param_options(formula, st);

  auto* cases = app.add_subcommand("cases", "list the theorem catalog");
  cases->add_flag("--json", st.json_mode, "machine-readable output");

  std::vector<const char*> argv;
  argv.push_back("conecalc");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
    if (mul->parsed()) return cmd_mul(st, out);
    if (deg->parsed()) return cmd_deg(st, out);
    if (pairing->parsed()) return cmd_pairing(st, out);
    if (numbasis->parsed()) return cmd_numbasis(st, out);
    if (push->parsed()) return cmd_push(st, out);
    if (pull->parsed()) return cmd_pull(st, out);
    if (cone->parsed()) return cmd_cone(st, out);
    if (verify->parsed()) return cmd_verify(st, out);
    if (formula->parsed()) return cmd_formula(st, out);
    if (cases->parsed()) return cmd_cases(st, out);
    out << app.help();
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace conecalc
