#include "graphcap/structure.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "graphcap/entropy.hpp"
#include "graphcap/errors.hpp"
#include "graphcap/matching.hpp"

namespace graphcap {
namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

std::vector<Edge> edges_inside(const std::vector<Edge>& edges, const VertexSet& s) {
  std::vector<Edge> out;
  for (const Edge& e : edges)
    if (s.contains(e.u) && s.contains(e.v)) out.push_back(e);
  return out;
}

// Fractional perfect matching on `part` using only `edges`.
bool uniform_block_feasible(const VertexSet& part, const std::vector<Edge>& edges) {
  std::vector<Edge> local;
  for (const Edge& e : edges) {
    auto iu = std::lower_bound(part.begin(), part.end(), e.u) - part.begin();
    auto iv = std::lower_bound(part.begin(), part.end(), e.v) - part.begin();
    local.emplace_back(static_cast<Vertex>(iu), static_cast<Vertex>(iv));
  }
  return admits_perfect_2matching(Graph(part.size(), std::move(local)));
}

}  // namespace

std::vector<Edge> tight_edges(const Graph& g, const Distribution& p, double tol) {
  const double theta = l_value(g, p);
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (edge_value(p, e) - theta <= tol) out.push_back(e);
  return out;
}

CriticalRule parse_critical_rule(std::string_view name) {
  if (name == "tight") return CriticalRule::Tight;
  if (name == "literal") return CriticalRule::Literal;
  throw PreconditionError("unknown critical rule '" + std::string(name) + "'");
}

std::string_view to_string(CriticalRule r) { return r == CriticalRule::Tight ? "tight" : "literal"; }

VertexSet critical_set(const Graph& g, const Distribution& p, double tol, CriticalRule rule) {
  if (p.size() != g.order()) throw PreconditionError("distribution size does not match the graph");
  const auto& edges = rule == CriticalRule::Tight ? tight_edges(g, p, tol) : g.edges();
  std::vector<Vertex> out;
  for (const Edge& e : edges) {
    const double d = p[e.v] - p[e.u];
    if (d > tol) out.push_back(e.u);
    if (-d > tol) out.push_back(e.v);
  }
  return VertexSet(std::move(out));
}

ESet e_set(const Graph& g, const Distribution& p, double tol, CriticalRule rule) {
  if (p.size() != g.order()) throw PreconditionError("distribution size does not match the graph");
  const auto& edges = rule == CriticalRule::Tight ? tight_edges(g, p, tol) : g.edges();
  std::vector<char> unequal(g.order(), 0);
  for (const Edge& e : edges)
    if (std::abs(p[e.v] - p[e.u]) > tol) unequal[e.u] = unequal[e.v] = 1;
  std::vector<Vertex> ids;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!unequal[v]) ids.push_back(v);
  ESet out;
  out.vertices = VertexSet(std::move(ids));
  const VertexSet m = critical_set(g, p, tol, rule);
  out.identity_holds = out.vertices == complement(g, m.united(neighborhood(g, m)));
  return out;
}

std::vector<ComponentLevel> component_levels(const Graph& g, const Distribution& p, const VertexSet& s,
                                             double tol) {
  if (!is_maximal_stable(g, s)) throw PreconditionError("S must be a maximal stable set");
  const auto tight = tight_edges(g, p, tol);
  std::vector<ComponentLevel> out;
  for (VertexSet& comp : components(g, std::span<const Edge>(tight))) {
    double sum_s = 0.0, sum_o = 0.0;
    std::size_t cnt_s = 0, cnt_o = 0;
    for (Vertex v : comp) {
      if (s.contains(v)) {
        sum_s += p[v];
        ++cnt_s;
      } else {
        sum_o += p[v];
        ++cnt_o;
      }
    }
    ComponentLevel lvl;
    lvl.p = cnt_o ? sum_o / static_cast<double>(cnt_o) : sum_s / static_cast<double>(cnt_s);
    lvl.q = cnt_s ? sum_s / static_cast<double>(cnt_s) : lvl.p;
    for (Vertex v : comp) lvl.max_deviation = std::max(lvl.max_deviation, std::abs(p[v] - (s.contains(v) ? lvl.q : lvl.p)));
    lvl.fits = lvl.max_deviation <= tol && lvl.q <= lvl.p + tol;
    lvl.vertices = std::move(comp);
    out.push_back(std::move(lvl));
  }
  return out;
}

Stationarity stationarity_certificate(const Graph& g, const Distribution& p, double tol) {
  Stationarity out;
  const auto tight = tight_edges(g, p, tol);
  for (const VertexSet& comp : components(g, std::span<const Edge>(tight))) {
    const std::string where = "component at vertex " + std::to_string(comp[0]);
    if (comp.size() == 1) {
      out.detail = where + " has no tight edge";
      return out;
    }
    const auto inner = edges_inside(tight, comp);
    double lo = p[comp[0]], hi = lo;
    for (Vertex v : comp) {
      lo = std::min(lo, p[v]);
      hi = std::max(hi, p[v]);
    }
    if (hi - lo <= tol) {
      if (!uniform_block_feasible(comp, inner)) {
        out.detail = where + ": uniform block without a fractional perfect matching";
        return out;
      }
      continue;
    }
    std::vector<Vertex> low, high;
    for (Vertex v : comp) {
      if (p[v] - lo <= tol) low.push_back(v);
      else if (hi - p[v] <= tol) high.push_back(v);
      else {
        out.detail = where + ": more than two levels";
        return out;
      }
    }
    const VertexSet low_set(std::move(low)), high_set(std::move(high));
    for (const Edge& e : inner)
      if (low_set.contains(e.u) == low_set.contains(e.v)) {
        out.detail = where + ": tight edge inside one level";
        return out;
      }
    const auto a = static_cast<std::int64_t>(low_set.size()), b = static_cast<std::int64_t>(high_set.size());
    const double t = hi / lo;
    const double residual = static_cast<double>(a) * std::log1p(1.0 / t) - static_cast<double>(b) * std::log1p(t);
    if (a <= b || std::abs(residual) > 100.0 * tol * static_cast<double>(a + b)) {
      out.detail = where + ": level ratio " + fmt(t) + " is not stationary for " + std::to_string(a) + ":" +
                   std::to_string(b);
      return out;
    }
    if (!bipartite_transport_feasible(low_set, high_set, inner, b, a)) {
      out.detail = where + ": no feasible multiplier transport (Hall condition fails)";
      return out;
    }
  }
  out.holds = true;
  out.detail = "multipliers exist on every tight component";
  return out;
}

bool StructureReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.passed; });
}

bool StructureReport::passed(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.passed;
  throw std::out_of_range("no check named " + std::string(name));
}

StructureReport verify_balance_certificates(const Graph& g, const Distribution& p, const VertexSet& s, double tol,
                                            std::uint64_t seed, CriticalRule rule) {
  if (!is_maximal_stable(g, s)) throw PreconditionError("S must be a maximal stable set");
  StructureReport r;
  r.m_set = critical_set(g, p, tol, rule);
  for (Vertex v : r.m_set)
    if (!s.contains(v)) throw PreconditionError("P is not centered on S: vertex " + std::to_string(v) + " is P-critical");
  r.theta = l_value(g, p);
  r.stable_side = s;
  r.tight_edges = tight_edges(g, p, tol);
  const ESet e = e_set(g, p, tol, rule);
  r.e_set = e.vertices;
  r.components = component_levels(g, p, s, tol);

  auto add = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  {
    std::vector<char> covered(g.order(), 0);
    for (const Edge& x : r.tight_edges) covered[x.u] = covered[x.v] = 1;
    auto miss = std::find(covered.begin(), covered.end(), 0);
    add("line_cover", miss == covered.end(),
        miss == covered.end() ? "tight edges cover every vertex"
                              : "vertex " + std::to_string(miss - covered.begin()) + " has no tight edge");
  }
  add("critical_stable", is_stable(g, r.m_set), "m(P) has " + std::to_string(r.m_set.size()) + " vertices");
  {
    bool ok = true;
    std::string detail = "every component carries at most two levels";
    for (const auto& c : r.components)
      if (!c.fits) {
        ok = false;
        detail = "component at vertex " + std::to_string(c.vertices[0]) + " deviates by " + fmt(c.max_deviation);
        break;
      }
    add("two_levels", ok, detail);
  }
  add("e_identity", e.identity_holds, e.identity_holds ? "e(P) = V \\ (m(P) ∪ Γm(P))" : "e(P) differs from V \\ (m(P) ∪ Γm(P))");

  // Direct relation F ≺ F': an edge leaves the S side of F into F'.
  const std::size_t k = r.components.size();
  std::vector<std::size_t> comp_of(g.order());
  for (std::size_t i = 0; i < k; ++i)
    for (Vertex v : r.components[i].vertices) comp_of[v] = i;
  std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
  for (const Edge& x : g.edges()) {
    for (auto [a, b] : {std::pair{x.u, x.v}, std::pair{x.v, x.u}}) {
      const std::size_t fa = comp_of[a], fb = comp_of[b];
      if (fa != fb && s.contains(a)) reach[fa][fb] = 1;
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (reach[i][j]) r.precedence.emplace_back(i, j);
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      if (reach[i][m])
        for (std::size_t j = 0; j < k; ++j)
          if (reach[m][j]) reach[i][j] = 1;
  {
    bool ok = true;
    std::string detail = std::to_string(r.precedence.size()) + " direct relations, closure consistent";
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = 0; j < k && ok; ++j) {
        if (!reach[i][j]) continue;
        const auto& f = r.components[i];
        const auto& h = r.components[j];
        if (i == j || !(h.q + tol < f.q && f.q <= f.p + tol && f.p + tol < h.p)) {
          ok = false;
          detail = "components " + std::to_string(i) + " and " + std::to_string(j) + " violate q' < q <= p < p'";
        }
      }
    add("precedence", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(seed);
    for (const auto& c : r.components) {
      std::vector<Vertex> high, low;
      for (Vertex v : c.vertices) (s.contains(v) ? low : high).push_back(v);
      if (high.empty()) continue;
      const double ratio = c.p / c.q;
      const VertexSet low_set(low);
      auto check_subset = [&](std::uint64_t mask) {
        std::vector<Vertex> u;
        for (std::size_t i = 0; i < high.size(); ++i)
          if (mask >> i & 1u) u.push_back(high[i]);
        const VertexSet uset(std::move(u));
        const auto alpha = static_cast<std::int64_t>(neighborhood(g, uset).intersected(low_set).size());
        const auto tau = static_cast<std::int64_t>(uset.size());
        const double bound = alpha >= 1 ? t_star(alpha, tau) : 1.0;
        ++r.deficiency_subsets_checked;
        if (bound < ratio - tol) {
          ok = false;
          detail = "subset of component at vertex " + std::to_string(c.vertices[0]) + " gives t = " + fmt(bound) +
                   " < p/q = " + fmt(ratio);
        }
      };
      if (high.size() <= kDeficiencyExhaustiveLimit) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << high.size()) && ok; ++mask) check_subset(mask);
      } else {
        r.deficiency_sampled = true;
        std::vector<Vertex> pool = high;
        for (std::size_t it = 0; it < kDeficiencySamples && ok; ++it) {
          // Random nonempty subset as a shuffled prefix.
          std::shuffle(pool.begin(), pool.end(), rng);
          std::size_t len = 1 + rng() % pool.size();
          const VertexSet uset(std::vector<Vertex>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(len)));
          const auto alpha = static_cast<std::int64_t>(neighborhood(g, uset).intersected(low_set).size());
          const auto tau = static_cast<std::int64_t>(uset.size());
          const double bound = alpha >= 1 ? t_star(alpha, tau) : 1.0;
          ++r.deficiency_subsets_checked;
          if (bound < ratio - tol) {
            ok = false;
            detail = "sampled subset of component at vertex " + std::to_string(c.vertices[0]) + " violates the bound";
          }
        }
      }
      if (!ok) break;
    }
    if (ok)
      detail = std::to_string(r.deficiency_subsets_checked) + (r.deficiency_sampled ? " subsets (sampled)" : " subsets (exhaustive)");
    add("deficiency", ok, detail);
  }

  const Stationarity st = stationarity_certificate(g, p, tol);
  add("stationarity", st.holds, st.detail);
  return r;
}

}  // namespace graphcap
