#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "graphcap/decomposition.hpp"
#include "graphcap/errors.hpp"
#include "graphcap/io.hpp"
#include "graphcap/matching.hpp"
#include "graphcap/oracle.hpp"
#include "graphcap/solver.hpp"
#include "graphcap/structure.hpp"

namespace graphcap::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string input;
  double tol = 1e-7;
  std::uint64_t seed = 0;
  std::size_t max_iter = SolverOptions{}.max_iter;
  std::string format = "json";
  std::string convention = "half-set";
  std::string critical_rule = "tight";
  bool timing = false;
  // subcommand extras
  unsigned power_t = 2;
  bool omega = false;
  bool exact_alpha = false;
  std::string corpus_out;
  std::size_t count = 200;
  std::size_t n_min = 3;
  std::size_t n_max = 12;
};

// Reports carry floats at 12 significant digits so output is stable across runs.
json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json ids(const VertexSet& s) { return json(s.ids()); }

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json distribution_json(const Distribution& p) {
  json out = json::array();
  for (double x : p.values()) out.push_back(num(x));
  return out;
}

json halves_json(const HalfIntegralVector& y) {
  json out = json::array();
  for (std::size_t i = 0; i < y.halves.size(); ++i) out.push_back(y.weight(i));
  return out;
}

SolverOptions solver_options(const Options& o) {
  SolverOptions s;
  s.tol = o.tol;
  s.seed = o.seed;
  s.max_iter = o.max_iter;
  return s;
}

json levels_json(const std::vector<ComponentLevel>& levels) {
  json out = json::array();
  for (const ComponentLevel& c : levels)
    out.push_back({{"vertices", ids(c.vertices)}, {"q_F", num(c.q)}, {"p_F", num(c.p)}, {"fits", c.fits}});
  return out;
}

json certificate_json(const TwoMatchingCertificate& c) {
  return {{"cycles", c.cycles}, {"matched_edges", edges_json(c.matched_edges)}, {"covered", c.covered}};
}

struct Report {
  json result = json::object();
  json certificates = json::object();
  json warnings = json::array();
  int code = kOk;
};

Report capacity(const Graph& g, const Options& o) {
  Report r;
  BalancedSolution sol = solve_balanced(g, solver_options(o));
  r.result = {{"theta", num(sol.theta)},
              {"P", distribution_json(sol.dist)},
              {"method", std::string(to_string(sol.method))},
              {"converged", sol.converged},
              {"iterations", sol.iterations},
              {"tight_edges", edges_json(sol.tight_edges)},
              {"components", levels_json(sol.component_levels)}};
  const Stationarity st = stationarity_certificate(g, sol.dist, 10.0 * o.tol);
  r.certificates = {{"stationarity", st.holds}, {"perfect_2matching", admits_perfect_2matching(g)}};
  if (!st.holds) r.certificates["stationarity_detail"] = st.detail;
  if (!sol.converged) {
    r.warnings.push_back("solver did not certify the optimum; theta is a lower bound");
    r.code = kNotConverged;
  }
  return r;
}

Report split_report(const Graph& g, const Options& o) {
  Report r;
  SplitOptions so;
  so.solver = solver_options(o);
  so.exact_alpha = o.exact_alpha;
  so.critical_rule = parse_critical_rule(o.critical_rule);
  SplitDecomposition d = split(g, so);
  r.result = {{"theta", num(d.solution.theta)},
              {"X", ids(d.x)},
              {"gamma_X", ids(d.gamma_x)},
              {"F", {{"vertices", d.f.original}, {"edges", edges_json(d.f.original_edges())}}},
              {"nu_F", d.nu_f},
              {"lower", d.lower},
              {"upper", d.upper},
              {"exact_by_nu", d.exact_by_nu},
              {"alpha_exact", d.alpha_exact ? json(*d.alpha_exact) : json(nullptr)},
              {"critical_rule", o.critical_rule},
              {"critical_tol", num(d.critical_tol)}};
  r.certificates = {{"f_has_perfect_2matching", d.f_has_p2m},
                    {"f_certificate", d.f_certificate ? certificate_json(*d.f_certificate) : json(nullptr)},
                    {"f_isolated", ids(d.f_isolated)},
                    {"reliable", d.reliable}};
  for (const std::string& a : d.anomalies) r.warnings.push_back(a);
  if (!d.solution.converged) r.code = kNotConverged;
  return r;
}

Report bounds_report(const Graph& g, const Options& o) {
  Report r;
  SplitOptions so;
  so.solver = solver_options(o);
  so.critical_rule = parse_critical_rule(o.critical_rule);
  SplitDecomposition d = split(g, so);
  const auto nu = static_cast<std::int64_t>(max_matching(g).size);
  r.result = {{"lower", d.lower},
              {"upper", d.upper},
              {"exact_by_nu", d.exact_by_nu},
              {"X_size", d.x.size()},
              {"nu_F", d.nu_f},
              {"generic_lower", static_cast<std::int64_t>(g.order()) - 2 * nu}};
  r.certificates = {{"reliable", d.reliable}};
  for (const std::string& a : d.anomalies) r.warnings.push_back(a);
  if (!d.solution.converged) r.code = kNotConverged;
  return r;
}

Report cover_report(const Graph& g, const Options& o) {
  Report r;
  const BasicConvention conv = parse_convention(o.convention);
  FractionalCover c = min_fractional_cover(g);
  TwoMatching tm = max_2matching(g);
  r.result = {{"value", c.value},
              {"y", halves_json(c.weights)},
              {"convention", std::string(to_string(conv))},
              {"basic", is_basic_2cover(g, c.weights, conv)}};
  if (!g.first_isolated()) {
    UniformCoverStatus u = uniform_cover_status(g);
    r.result["uniform_optimal"] = u.optimal;
    r.result["uniform_unique"] = u.unique;
  } else {
    r.result["uniform_optimal"] = nullptr;
    r.result["uniform_unique"] = nullptr;
    r.warnings.push_back("graph has isolated vertices; uniform cover status not defined");
  }
  r.certificates = {{"two_matching_value", tm.value}, {"duality_gap", c.value - tm.value}};
  return r;
}

Report matching_report(const Graph& g, const Options&) {
  Report r;
  Matching m = max_matching(g);
  TwoMatching tm = max_2matching(g);
  r.result = {{"nu", m.size},
              {"matching", edges_json(m.edges)},
              {"two_matching_value", tm.value},
              {"two_matching_weights", halves_json(tm.weights)}};
  if (!g.first_isolated()) {
    Perfect2MatchingResult p = has_perfect_2matching(g);
    r.result["perfect_2matching"] = p.exists;
    if (p.certificate) {
      r.certificates["two_matching"] = certificate_json(*p.certificate);
      r.certificates["valid"] = p.certificate->validate(g);
    }
    if (p.violator) {
      r.certificates["violator"] = ids(*p.violator);
      r.certificates["violator_neighborhood"] = ids(neighborhood(g, *p.violator));
    }
  } else {
    r.result["perfect_2matching"] = false;
    r.warnings.push_back("vertex " + std::to_string(*g.first_isolated()) + " is isolated");
  }
  return r;
}

Report power_report(const Graph& g, const Options& o) {
  Report r;
  Graph gt = power(g, o.power_t);
  r.result = {{"t", o.power_t}, {"n_power", gt.order()}, {"m_power", gt.size()}};
  if (o.omega) {
    const std::size_t w = omega_bruteforce(gt);
    const double rate = std::log2(static_cast<double>(w)) / o.power_t;
    r.result["omega"] = w;
    r.result["log2_omega_over_t"] = num(rate);
    if (!g.first_isolated() && g.size() > 0) {
      BalancedSolution sol = solve_balanced(g, solver_options(o));
      r.certificates = {{"theta", num(sol.theta)}, {"bound_holds", rate <= sol.theta + 1e-6}};
      if (!sol.converged) r.code = kNotConverged;
    }
  }
  return r;
}

Report verify_report(const Graph& g, const Options& o) {
  Report r;
  BalancedSolution sol = solve_balanced(g, solver_options(o));
  const double classify = 10.0 * o.tol;
  const CriticalRule rule = parse_critical_rule(o.critical_rule);
  const VertexSet m = critical_set(g, sol.dist, classify, rule);
  r.result = {{"theta", num(sol.theta)}, {"converged", sol.converged}, {"critical_rule", o.critical_rule},
              {"m_set", ids(m)}};
  if (!sol.converged) r.code = kNotConverged;
  if (!is_stable(g, m)) {
    r.certificates = {{"critical_stable", false}, {"all_passed", false}};
    r.warnings.push_back("m(P) is not stable, so no maximal stable set centres P; other checks skipped");
    return r;
  }
  const VertexSet s = extend_to_maximal_stable(g, m);
  StructureReport rep = verify_balance_certificates(g, sol.dist, s, classify, o.seed, rule);
  r.result["S"] = ids(s);
  r.result["e_set"] = ids(rep.e_set);
  r.result["components"] = levels_json(rep.components);
  json pairs = json::array();
  for (auto [a, b] : rep.precedence) pairs.push_back({a, b});
  r.result["precedence"] = pairs;
  r.result["deficiency_subsets_checked"] = rep.deficiency_subsets_checked;
  r.result["deficiency_sampled"] = rep.deficiency_sampled;
  for (const CertificateCheck& c : rep.checks) {
    r.certificates[c.name] = c.passed;
    if (!c.passed) r.warnings.push_back(c.name + ": " + c.detail);
  }
  r.certificates["all_passed"] = rep.all_passed();
  return r;
}

Report oracle_report(const Graph& g, const Options& o) {
  Report r;
  StableSetResult a = alpha_bruteforce(g);
  r.result = {{"alpha", a.alpha}, {"witness", ids(a.witness)}, {"tau", tau_bruteforce(g)},
              {"omega", omega_bruteforce(g)}};
  if (g.order() <= kStableSetOracleGuard) r.result["perfect_2matching"] = perfect_2matching_oracle(g);
  if (g.order() <= kThetaSearchGuard && g.size() > 0) r.result["theta_search"] = num(theta_search(g, 50, 500, o.seed));
  r.certificates = {{"gallai", a.alpha + r.result["tau"].get<std::size_t>() == g.order()}};
  return r;
}

void render_text(const json& j, std::ostream& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    const bool nested = v.is_object() && !v.empty();
    const bool list_of_objects = v.is_array() && !v.empty() && v.front().is_object();
    if (nested) {
      out << pad << it.key() << ":\n";
      render_text(v, out, depth + 1);
    } else if (list_of_objects) {
      out << pad << it.key() << ":\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << pad << "  [" << i << "]\n";
        render_text(v[i], out, depth + 2);
      }
    } else {
      out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

Graph load(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_graph(text);
  }
  return read_graph_file(path);
}

void add_common(CLI::App* sub, Options& o, bool input_required = true) {
  auto* in = sub->add_option("--input", o.input, "graph file (edge list or DIMACS, '-' for stdin)");
  if (input_required) in->required();
  sub->add_option("--tol", o.tol, "solver convergence tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
  sub->add_option("--max-iter", o.max_iter, "ascent iterations per restart")->capture_default_str();
  sub->add_option("--format", o.format, "report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--convention", o.convention, "basic 2-cover convention")
      ->capture_default_str()
      ->check(CLI::IsMember({"paper-literal", "half-set"}));
  sub->add_option("--critical-rule", o.critical_rule, "which edges make a vertex P-critical")
      ->capture_default_str()
      ->check(CLI::IsMember({"tight", "literal"}));
  sub->add_flag("--timing", o.timing, "record wall-clock time in the report");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph capacity, balanced distributions and stability bounds"};
  app.name("graphcap");
  app.require_subcommand(1);
  Options o;

  struct Command {
    CLI::App* app;
    Report (*fn)(const Graph&, const Options&);
  };
  std::vector<Command> commands;
  auto add = [&](const char* name, const char* desc, Report (*fn)(const Graph&, const Options&)) {
    CLI::App* sub = app.add_subcommand(name, desc);
    commands.push_back({sub, fn});
    return sub;
  };
  add_common(add("capacity", "capacity and a balanced distribution", capacity), o);
  auto* split_cmd = add("split", "splitting decomposition X, ΓX, F", split_report);
  add_common(split_cmd, o);
  split_cmd->add_flag("--exact-alpha", o.exact_alpha, "also run the brute-force stability oracle");
  add_common(add("bounds", "stability number sandwich", bounds_report), o);
  add_common(add("cover", "minimum fractional vertex cover", cover_report), o);
  add_common(add("matching", "matchings and perfect 2-matching certificate", matching_report), o);
  auto* power_cmd = add("power", "conjunctive power G^t", power_report);
  add_common(power_cmd, o);
  power_cmd->add_option("--t", o.power_t, "exponent")->capture_default_str()->check(CLI::Range(1u, 16u));
  power_cmd->add_flag("--omega", o.omega, "compute the clique number of the power");
  add_common(add("verify", "structural certificates of the balanced distribution", verify_report), o);
  auto* oracle_cmd = add("oracle", "brute-force ground truth, or write a random corpus", oracle_report);
  add_common(oracle_cmd, o, false);
  oracle_cmd->add_option("--corpus-out", o.corpus_out, "write a random corpus into this directory");
  oracle_cmd->add_option("--count", o.count, "corpus size")->capture_default_str();
  oracle_cmd->add_option("--n-min", o.n_min, "smallest corpus order")->capture_default_str();
  oracle_cmd->add_option("--n-max", o.n_max, "largest corpus order")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const Command* chosen = nullptr;
  for (const Command& c : commands)
    if (c.app->parsed()) chosen = &c;
  const std::string name = chosen->app->get_name();

  json doc;
  doc["command"] = name;
  doc["input"] = o.input.empty() ? json(nullptr) : json(o.input);
  try {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    if (name == "oracle" && !o.corpus_out.empty()) {
      doc["n"] = nullptr;
      doc["m"] = nullptr;
      std::filesystem::create_directories(o.corpus_out);
      auto corpus = random_corpus(o.count, o.n_min, o.n_max, o.seed);
      write_corpus(o.corpus_out, corpus);
      json files = json::array();
      for (const CorpusEntry& e : corpus) files.push_back(corpus_filename(e));
      r.result = {{"corpus_out", o.corpus_out}, {"files", files}};
    } else {
      if (o.input.empty()) throw Error("--input is required");
      const Graph g = load(o.input);
      doc["n"] = g.order();
      doc["m"] = g.size();
      r = chosen->fn(g, o);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    doc["result"] = std::move(r.result);
    doc["certificates"] = std::move(r.certificates);
    doc["warnings"] = std::move(r.warnings);
    doc["timing_ms"] = o.timing ? num(ms) : json(nullptr);
    if (o.format == "text") {
      render_text(doc, out, 0);
    } else {
      out << doc.dump(2) << "\n";
    }
    return r.code;
  } catch (const Error& e) {
    err << "graphcap " << name << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "graphcap " << name << ": " << e.what() << "\n";
    return kInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"graphcap"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace graphcap::cli
