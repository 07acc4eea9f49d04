#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "operadlab/identities.hpp"
#include "operadlab/models.hpp"
#include "operadlab/operad.hpp"
#include "operadlab/paper_suite.hpp"
#include "operadlab/poly_text.hpp"
#include "operadlab/power_series.hpp"

using nlohmann::json;
using namespace operadlab;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool zero_duration = false;  // reproduce-paper keeps its report byte-stable

  void write(const std::string& path) const {
    if (path.empty()) return;
    json r;
    r["command"] = command;
    r["inputs"] = inputs;
    r["results"] = results;
    std::int64_t ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    r["duration_ms"] = zero_duration ? 0 : ms;
    std::ofstream out(path);
    out << r.dump(2) << "\n";
  }
};

RelationSet load_relations(const std::string& spec) {
  if (is_builtin_relation_set(spec)) return builtin_relation_set(spec);
  if (std::filesystem::exists(spec)) return load_relation_file(spec);
  throw CLI::ValidationError("--relations",
                             "'" + spec + "' is neither a builtin relation set nor a file");
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    std::string item = s.substr(pos, next - pos);
    if (!item.empty()) out.push_back(item);
    pos = next + 1;
  }
  return out;
}

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
  auto q = rat_parse(text);
  if (!q) throw CLI::ValidationError(flag, "'" + text + "' is not a rational p/q");
  return *q;
}

// "1 e(2) - 1/2 e(-1)"; bare "e(2)" means coefficient 1, "0" is zero.
SpanElement parse_span_element(const std::string& text, const std::string& flag) {
  SpanElement out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "0") return out;
  int sign = 1;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) sign = text[i++] == '-' ? -1 : 1;
  while (i < text.size()) {
    skip();
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) ||
                               text[i] == '/'))
      ++i;
    Rational coeff = start == i ? Rational(1)
                                : parse_rational_arg(text.substr(start, i - start), flag);
    skip();
    if (i >= text.size() || text[i] != 'e')
      throw CLI::ValidationError(flag, "expected e(<index>) in '" + text + "'");
    ++i;
    skip();
    if (i >= text.size() || text[i] != '(')
      throw CLI::ValidationError(flag, "expected '(' after e in '" + text + "'");
    ++i;
    std::size_t close = text.find(')', i);
    if (close == std::string::npos)
      throw CLI::ValidationError(flag, "unbalanced e(...) in '" + text + "'");
    long long idx = 0;
    try {
      idx = std::stoll(text.substr(i, close - i));
    } catch (...) {
      throw CLI::ValidationError(flag, "bad basis index in '" + text + "'");
    }
    i = close + 1;
    out.add(idx, Rational(sign) * coeff);
    skip();
    if (i >= text.size()) break;
    if (text[i] == '+')
      sign = 1;
    else if (text[i] == '-')
      sign = -1;
    else
      throw CLI::ValidationError(flag, "expected '+' or '-' in '" + text + "'");
    ++i;
  }
  return out;
}

json certificate_json(const Certificate& cert) {
  json terms = json::array();
  for (const auto& term : cert.terms) {
    json t;
    t["coeff"] = rat_str(term.coeff);
    t["generator"] = term.generator;
    t["permutation"] = term.sigma;
    terms.push_back(t);
  }
  return terms;
}

std::string certificate_text(const Certificate& cert) {
  std::string out = cert.target + " =";
  bool first = true;
  for (const auto& term : cert.terms) {
    Rational a = term.coeff < 0 ? Rational(-term.coeff) : term.coeff;
    out += first ? (term.coeff < 0 ? " -" : " ") : (term.coeff < 0 ? " - " : " + ");
    first = false;
    if (a != 1) out += rat_str(a) + " ";
    out += term.generator + "(t" + std::to_string(term.sigma[0]) + ",t" +
           std::to_string(term.sigma[1]) + ",t" + std::to_string(term.sigma[2]) + ")";
  }
  return out;
}

json witness_json(const Witness& w) {
  json j;
  j["check"] = w.check;
  j["tuple"] = w.tuple;
  j["lhs"] = w.lhs.str();
  j["rhs"] = w.rhs.str();
  return j;
}

int cmd_dims(const std::string& relations, int max_arity, bool allow6,
             const std::string& json_path) {
  if (max_arity >= 6 && !allow6) {
    std::cerr << "dims: arity >= 6 is an exact elimination that takes minutes; "
                 "pass --allow-arity-6 to opt in\n";
    return kExitUsage;
  }
  Report rep;
  rep.command = "dims";
  rep.inputs = {{"relations", relations}, {"max_arity", max_arity}};
  RelationSet rel = load_relations(relations);
  auto dims = operad_dims(rel, max_arity);
  std::cout << "multilinear dimensions of <" << rel.name << ">\n";
  for (int n = 1; n <= max_arity; ++n)
    std::cout << "  d_" << n << " = " << dims[n - 1] << "\n";
  rep.results["dims"] = dims;
  rep.write(json_path);
  return kExitTrue;
}

int cmd_dual(const std::string& relations, const std::string& json_path) {
  Report rep;
  rep.command = "dual";
  rep.inputs = {{"relations", relations}};
  RelationSet rel = load_relations(relations);
  auto dual = koszul_dual_detailed(rel);
  Subspace span = rel.relations.empty() ? Subspace(12) : orbit_span(rel.relations, 3);
  bool self_dual = subspace_equal(dual.dual_span, span);

  std::cout << "Koszul dual of <" << rel.name << ">\n";
  std::cout << "dim(span) = " << span.rank() << ", dim(dual span) = " << dual.dual_span.rank()
            << ", self-dual: " << (self_dual ? "yes" : "no") << "\n";
  json coeffs = json::array();
  for (const auto& [mono, poly] : dual.coefficients) {
    std::cout << "  " << mono.str() << " (x) [ " << poly_str(poly) << " ]\n";
    coeffs.push_back({{"monomial", mono.str()}, {"coefficient", poly_str(poly)}});
  }
  json rels = json::array();
  for (const auto& p : dual.dual.relations) rels.push_back(poly_str(p));
  rep.results["input_rank"] = span.rank();
  rep.results["dual_rank"] = dual.dual_span.rank();
  rep.results["self_dual"] = self_dual;
  rep.results["coefficients"] = coeffs;
  rep.results["dual_relations"] = rels;
  rep.write(json_path);
  return kExitTrue;
}

int cmd_koszul_test(const std::string& relations, int degree, bool allow6,
                    const std::string& json_path) {
  if (degree >= 6 && !allow6) {
    std::cerr << "koszul-test: degree >= 6 needs --allow-arity-6\n";
    return kExitUsage;
  }
  Report rep;
  rep.command = "koszul-test";
  rep.inputs = {{"relations", relations}, {"degree", degree}};
  RelationSet rel = load_relations(relations);
  auto dims = operad_dims(rel, degree);
  RelationSet dual = koszul_dual(rel);
  auto dual_dims = operad_dims(dual, degree);
  PowerSeries f = gen_series(dims, degree);
  PowerSeries fdual = gen_series(dual_dims, degree);
  PowerSeries residual = sub(compose_series(f, fdual), series_x(degree));
  bool holds = residual.is_zero();

  std::cout << "Koszulity necessary condition for <" << rel.name << "> through degree " << degree
            << "\n";
  std::cout << "  f    = " << series_str(f) << "\n";
  std::cout << "  f!   = " << series_str(fdual) << "\n";
  std::cout << "  f(f!(x)) - x = " << series_str(residual) << "\n";
  std::cout << (holds ? "  necessary condition holds (inconclusive for Koszulity)\n"
                      : "  nonzero residual: the operad is not Koszul\n");
  rep.results["dims"] = dims;
  rep.results["dual_dims"] = dual_dims;
  rep.results["series"] = series_str(f);
  rep.results["dual_series"] = series_str(fdual);
  rep.results["residual"] = series_str(residual);
  rep.results["necessary_condition_holds"] = holds;
  rep.write(json_path);
  return kExitTrue;
}

int cmd_implies(const std::string& from, const std::string& to, const std::string& json_path) {
  Report rep;
  rep.command = "implies";
  auto names = split_csv(from);
  rep.inputs = {{"from", names}, {"to", to}};
  auto result = implies3(names, to);
  std::cout << "{" << from << "} => " << to << ": " << (result.holds ? "true" : "false") << "\n";
  rep.results["holds"] = result.holds;
  if (result.holds) {
    std::cout << "  " << certificate_text(*result.certificate) << "\n";
    rep.results["certificate"] = certificate_json(*result.certificate);
  }
  rep.write(json_path);
  return result.holds ? kExitTrue : kExitFalse;
}

int cmd_equiv(const std::string& left, const std::string& right, const std::string& json_path) {
  Report rep;
  rep.command = "equiv";
  auto lnames = split_csv(left);
  auto rnames = split_csv(right);
  rep.inputs = {{"left", lnames}, {"right", rnames}};
  bool equal = equiv3(lnames, rnames);
  std::cout << "{" << left << "} ~ {" << right << "}: " << (equal ? "true" : "false") << "\n";
  rep.results["equivalent"] = equal;
  rep.write(json_path);
  return equal ? kExitTrue : kExitFalse;
}

int cmd_normal_form(const std::string& relations, const std::string& json_path) {
  Report rep;
  rep.command = "normal-form";
  rep.inputs = {{"relations", relations}};
  RelationSet rel = load_relations(relations);
  Rewriter rw = normal_form(rel);
  std::cout << "degree-3 normal form modulo <" << rel.name << ">\n";
  std::cout << "basis:";
  json basis = json::array();
  for (const auto& t : rw.basis) {
    std::cout << " " << t.str();
    basis.push_back(t.str());
  }
  std::cout << "\n";
  json table = json::object();
  for (const auto& [mono, poly] : rw.table) {
    std::cout << "  " << mono.str() << " -> " << poly_str(poly) << "\n";
    table[mono.str()] = poly_str(poly);
  }
  rep.results["basis"] = basis;
  rep.results["rewrites"] = table;
  rep.write(json_path);
  return kExitTrue;
}

struct ModelCheckArgs {
  std::string model;
  std::string shifts = "";
  std::string eps = "";
  std::string u = "1 e(2)";
  std::string v = "1 e(0)";
  long long u_index = 0;
  long long v_index = 0;
  std::string identity;
  std::string axioms;
  int window = 4;
  std::string depolarize_scale = "1";
  std::string json_path;
};

int cmd_model_check(const ModelCheckArgs& args) {
  Report rep;
  rep.command = "model-check";
  rep.inputs = {{"model", args.model}, {"window", args.window}};

  std::optional<SpanAlgebra> algebra;
  std::optional<BiAlgebra> bialgebra;
  if (args.model == "aS") {
    std::vector<BasisIndex> shifts;
    for (const auto& s : split_csv(args.shifts)) shifts.push_back(std::stoll(s));
    std::vector<Rational> eps;
    for (const auto& s : split_csv(args.eps)) eps.push_back(parse_rational_arg(s, "--eps"));
    rep.inputs["shifts"] = args.shifts;
    rep.inputs["eps"] = args.eps;
    algebra = make_aS(shifts, eps);
  } else if (args.model == "derivation") {
    SpanElement u = parse_span_element(args.u, "--u");
    SpanElement v = parse_span_element(args.v, "--v");
    rep.inputs["u"] = u.str();
    rep.inputs["v"] = v.str();
    algebra = make_derivation_algebra(u, v);
  } else if (args.model == "witt-np") {
    bialgebra = make_witt_np();
  } else if (args.model == "localized") {
    rep.inputs["u_index"] = args.u_index;
    rep.inputs["v_index"] = args.v_index;
    bialgebra = localize(make_witt_np(), args.u_index, args.v_index);
  } else {
    std::cerr << "model-check: unknown model '" << args.model << "'\n";
    return kExitUsage;
  }

  Verdict verdict;
  std::string subject;
  if (!args.identity.empty()) {
    if (!is_builtin(args.identity)) {
      std::cerr << "model-check: unknown identity '" << args.identity << "'\n";
      return kExitUsage;
    }
    rep.inputs["identity"] = args.identity;
    SpanAlgebra target = algebra ? *algebra
                                 : depolarize(*bialgebra, parse_rational_arg(
                                                              args.depolarize_scale,
                                                              "--depolarize-scale"));
    if (bialgebra) rep.inputs["depolarize_scale"] = args.depolarize_scale;
    subject = target.name;
    verdict = check_identity(target, args.identity, args.window);
  } else {
    auto set = axiom_set_from_name(args.axioms);
    if (!set) {
      std::cerr << "model-check: unknown axiom set '" << args.axioms
                << "' (transposed_poisson | novikov_poisson | poisson)\n";
      return kExitUsage;
    }
    rep.inputs["axioms"] = args.axioms;
    BiAlgebra target = bialgebra ? *bialgebra : polarize(*algebra);
    subject = target.name;
    verdict = check_axioms(target, *set, args.window);
  }

  std::cout << subject << ": " << (verdict.passed ? "pass" : "FAIL") << "\n";
  rep.results["subject"] = subject;
  rep.results["passed"] = verdict.passed;
  if (verdict.witness) {
    const Witness& w = *verdict.witness;
    std::cout << "  violated: " << w.check << " at (";
    for (std::size_t i = 0; i < w.tuple.size(); ++i)
      std::cout << (i ? "," : "") << "e(" << w.tuple[i] << ")";
    std::cout << ")\n  lhs = " << w.lhs.str() << "\n  rhs = " << w.rhs.str() << "\n";
    rep.results["witness"] = witness_json(w);
  }
  rep.write(args.json_path);
  return verdict.passed ? kExitTrue : kExitFalse;
}

int cmd_reproduce(bool allow6, const std::string& json_path) {
  Report rep;
  rep.command = "reproduce-paper";
  rep.zero_duration = true;
  rep.inputs = {{"allow_arity_6", allow6}};
  PaperSuiteOptions options;
  options.allow_arity6 = allow6;
  auto results = run_paper_suite(options);
  bool all = true;
  json rows = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << ": "
              << r.detail << "\n";
    rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  std::cout << (all ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
  rep.results["criteria"] = rows;
  rep.results["all_passed"] = all;
  rep.write(json_path);
  return all ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for weak Leibniz / transposed Poisson identities"};
  app.require_subcommand(1);

  std::string relations = "wlei", json_path;
  int max_arity = 5, degree = 5, window = 4;
  bool allow6 = false;

  auto* dims = app.add_subcommand("dims", "multilinear dimension table of an operad quotient");
  dims->add_option("--relations", relations, "builtin set (wlei|assoc|free|full|<poly>) or file");
  dims->add_option("--max-arity", max_arity, "compute d_1..d_N")->check(CLI::Range(1, 7));
  dims->add_flag("--allow-arity-6", allow6, "opt in to the minutes-scale arity-6 elimination");
  dims->add_option("--json", json_path, "write a JSON report");

  auto* dual = app.add_subcommand("dual", "Koszul dual via the tensor-Jacobiator");
  dual->add_option("--relations", relations);
  dual->add_option("--json", json_path);

  auto* ktest = app.add_subcommand("koszul-test", "generating-series necessary condition");
  ktest->add_option("--relations", relations);
  ktest->add_option("--degree", degree)->check(CLI::Range(2, 7));
  ktest->add_flag("--allow-arity-6", allow6);
  ktest->add_option("--json", json_path);

  std::string from, to, left, right;
  auto* implies = app.add_subcommand("implies", "degree-3 implication with certificate");
  implies->add_option("--from", from, "comma-separated polynomial names")->required();
  implies->add_option("--to", to, "target polynomial name")->required();
  implies->add_option("--json", json_path);

  auto* equiv = app.add_subcommand("equiv", "degree-3 equivalence of identity sets");
  equiv->add_option("--left", left)->required();
  equiv->add_option("--right", right)->required();
  equiv->add_option("--json", json_path);

  auto* nf = app.add_subcommand("normal-form", "degree-3 rewrite table onto the paper basis");
  nf->add_option("--relations", relations);
  nf->add_option("--json", json_path);

  ModelCheckArgs mc;
  auto* model = app.add_subcommand("model-check", "window-exact checks on concrete algebras");
  model->add_option("--model", mc.model, "aS | derivation | witt-np | localized")->required();
  model->add_option("--shifts", mc.shifts, "aS: comma-separated integer shifts");
  model->add_option("--eps", mc.eps, "aS: comma-separated rationals, one per shift");
  model->add_option("--u", mc.u, "derivation: span element, e.g. '1 e(2)'");
  model->add_option("--v", mc.v, "derivation: span element, e.g. '1 e(0)'");
  model->add_option("--u-index", mc.u_index, "localized: basis index of u");
  model->add_option("--v-index", mc.v_index, "localized: basis index of v");
  auto* ident = model->add_option("--identity", mc.identity, "polynomial identity to check");
  auto* axioms = model->add_option("--axioms", mc.axioms,
                                   "transposed_poisson | novikov_poisson | poisson");
  ident->excludes(axioms);
  model->add_option("--window", mc.window, "basis indices swept in [-K,K]")->check(CLI::Range(1, 16));
  model->add_option("--depolarize-scale", mc.depolarize_scale,
                    "scale for depolarizing a two-product model before an identity check");
  model->add_option("--json", mc.json_path);

  auto* repro = app.add_subcommand("reproduce-paper", "run the full reproduction suite");
  repro->add_flag("--allow-arity-6", allow6);
  repro->add_option("--json", json_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (dims->parsed()) return cmd_dims(relations, max_arity, allow6, json_path);
    if (dual->parsed()) return cmd_dual(relations, json_path);
    if (ktest->parsed()) return cmd_koszul_test(relations, degree, allow6, json_path);
    if (implies->parsed()) return cmd_implies(from, to, json_path);
    if (equiv->parsed()) return cmd_equiv(left, right, json_path);
    if (nf->parsed()) return cmd_normal_form(relations, json_path);
    if (model->parsed()) {
      if (mc.identity.empty() == mc.axioms.empty()) {
        std::cerr << "model-check: exactly one of --identity / --axioms is required\n";
        return kExitUsage;
      }
      return cmd_model_check(mc);
    }
    if (repro->parsed()) return cmd_reproduce(allow6, json_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
