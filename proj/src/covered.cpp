#include "fraccover/covered.hpp"

#include <algorithm>
#include <stdexcept>

namespace fraccover {

namespace {

// Lexicographic m-combination stepper over {0..count-1}; returns false when
// exhausted.
bool next_combination(std::vector<int>& comb, int count) {
  int m = static_cast<int>(comb.size());
  for (int i = m - 1; i >= 0; --i) {
    if (comb[i] < count - m + i) {
      ++comb[i];
      for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

long binomial_capped(int n, int k, long cap) {
  if (k < 0 || k > n) return 0;
  long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

void check_params(int a, int b, int m) {
  if (a < 1 || a > b) throw std::invalid_argument("need 1 <= a <= b");
  if (m < 0 || m > b) throw std::invalid_argument("need 0 <= m <= b");
}

VertexSet mask_to_set(uint32_t mask, int n) {
  VertexSet s;
  for (int u = 0; u < n; ++u)
    if (mask & (1u << u)) s.push_back(u);
  return s;
}

// Scratch space for evaluating many (S, H) pairs on one graph.
struct Evaluator {
  const Graph& g;
  int a, b;
  std::vector<char> in_s, in_t;
  std::vector<int> dgs;   // d_{G-S}(x)
  std::vector<int> ehxs;  // e_H(x, S), scratch zeroed via touched
  std::vector<int> touched;
  long lhs = 0;

  Evaluator(const Graph& graph, int a_, int b_)
      : g(graph),
        a(a_),
        b(b_),
        in_s(graph.order()),
        in_t(graph.order()),
        dgs(graph.order()),
        ehxs(graph.order(), 0) {}

  void set_s(const VertexSet& s) {
    std::fill(in_s.begin(), in_s.end(), 0);
    for (int u : s) in_s[u] = 1;
    long t_size = 0, t_degrees = 0;
    for (int x = 0; x < g.order(); ++x) {
      int d = 0;
      for (int v : g.neighbors(x))
        if (!in_s[v]) ++d;
      dgs[x] = d;
      in_t[x] = !in_s[x] && d <= a - 1;
      if (in_t[x]) {
        ++t_size;
        t_degrees += d;
      }
    }
    lhs = t_degrees - static_cast<long>(a) * t_size +
          static_cast<long>(b) * static_cast<long>(s.size());
  }

  // delta(S,T,H) = sum_{x in S} d_H(x) - e_H(T,S) + Theta(S,T); the theta
  // summand simplifies to d_{G-S}(x) - a + e_H(x,S) for x in T.
  CriterionTerms evaluate(const EdgeSubset& h) {
    CriterionTerms terms;
    terms.h = h;
    terms.lhs = lhs;
    touched.clear();
    for (int e : h) {
      auto [u, v] = g.edge(e);
      if (in_s[u]) terms.dh_s += 1;
      if (in_s[v]) terms.dh_s += 1;
      if (in_s[u] && !in_s[v]) {
        if (ehxs[v]++ == 0) touched.push_back(v);
      }
      if (in_s[v] && !in_s[u]) {
        if (ehxs[u]++ == 0) touched.push_back(u);
      }
      if ((in_s[u] && in_t[v]) || (in_s[v] && in_t[u])) ++terms.eh_ts;
    }
    for (int x : touched) {
      if (in_t[x] && ehxs[x] >= 2) {
        long tx = dgs[x] - a + ehxs[x];
        if (tx >= 1 && tx <= ehxs[x] - 1) terms.theta += tx;
      }
      ehxs[x] = 0;
    }
    terms.delta = terms.dh_s - terms.eh_ts + terms.theta;
    if (terms.delta > 2L * static_cast<long>(h.size()))
      throw std::logic_error("Fact 1 violated: delta > 2m (implementation bug)");
    return terms;
  }
};

}  // namespace

VertexSet tight_set(const Graph& g, const VertexSet& s, int a) {
  validate_vertex_set(g, s);
  if (a < 1) throw std::invalid_argument("tight_set requires a >= 1");
  std::vector<char> in_s(g.order(), 0);
  for (int u : s) in_s[u] = 1;
  VertexSet t;
  for (int x = 0; x < g.order(); ++x) {
    if (in_s[x]) continue;
    int d = 0;
    for (int v : g.neighbors(x))
      if (!in_s[v]) ++d;
    if (d <= a - 1) t.push_back(x);
  }
  return t;
}

long theta_term(const Graph& g, const VertexSet& s, const VertexSet& t,
                const EdgeSubset& h, int a) {
  validate_vertex_set(g, s);
  validate_edge_subset(g, h);
  if (t != tight_set(g, s, a))
    throw std::invalid_argument("theta_term: T does not match tight_set(G,S,a)");

  std::vector<char> in_s(g.order(), 0), in_h(g.size(), 0);
  for (int u : s) in_s[u] = 1;
  for (int e : h) in_h[e] = 1;

  long total = 0;
  for (int x : t) {
    int eh_xs = 0, dh_x = 0, d_rest = 0;
    for (int v : g.neighbors(x)) {
      int e = g.edge_index(x, v);
      bool forced = in_h[e];
      if (forced) {
        ++dh_x;
        if (in_s[v]) ++eh_xs;
      } else if (!in_s[v]) {
        ++d_rest;  // counts toward d_{G \ E(H) - S}(x)
      }
    }
    if (eh_xs < 2) continue;
    long tx = static_cast<long>(d_rest) - a + dh_x;
    if (tx >= 1 && tx <= eh_xs - 1) total += tx;
  }
  return total;
}

CriterionTerms delta_h(const Graph& g, const VertexSet& s, const EdgeSubset& h,
                       int a, int b) {
  validate_vertex_set(g, s);
  validate_edge_subset(g, h);
  if (a < 1 || a > b) throw std::invalid_argument("need 1 <= a <= b");
  Evaluator ev(g, a, b);
  ev.set_s(s);
  CriterionTerms terms = ev.evaluate(h);
  terms.s = s;
  terms.t = tight_set(g, s, a);
  return terms;
}

std::pair<long, EdgeSubset> max_delta_over_h(const Graph& g, const VertexSet& s,
                                             int a, int m) {
  validate_vertex_set(g, s);
  if (a < 1) throw std::invalid_argument("need a >= 1");
  if (m < 0 || m > g.size())
    throw std::invalid_argument("max_delta_over_h requires 0 <= m <= e(G)");
  Evaluator ev(g, a, a);
  ev.set_s(s);

  std::vector<int> comb(m);
  for (int i = 0; i < m; ++i) comb[i] = i;
  long best = 0;
  EdgeSubset best_h;
  bool first = true;
  do {
    CriterionTerms terms = ev.evaluate(comb);
    if (first || terms.delta > best) {
      best = terms.delta;
      best_h = comb;
      first = false;
    }
  } while (next_combination(comb, g.size()));
  return {best, best_h};
}

Verdict is_covered_criterion(const Graph& g, int a, int b, int m) {
  check_params(a, b, m);
  const int n = g.order();
  if (n > 12) throw std::invalid_argument("criterion method capped at n <= 12");
  if (binomial_capped(g.size(), m, 1'000'000) > 1'000'000)
    throw std::invalid_argument("criterion method capped at C(e(G), m) <= 1e6");
  if (m > g.size()) return {true, Method::criterion, true, std::nullopt};

  Evaluator ev(g, a, b);
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet s = mask_to_set(mask, n);
    ev.set_s(s);
    // Fact 1: delta <= 2m, so such an S can never violate the criterion.
    if (ev.lhs >= 2L * m) continue;

    std::vector<int> comb(m);
    for (int i = 0; i < m; ++i) comb[i] = i;
    long best = 0;
    EdgeSubset best_h;
    bool first = true;
    do {
      CriterionTerms terms = ev.evaluate(comb);
      if (first || terms.delta > best) {
        best = terms.delta;
        best_h = comb;
        first = false;
      }
    } while (next_combination(comb, g.size()));

    if (ev.lhs < best) {
      CoveredWitness w{s, best_h, ev.lhs, best};
      return {false, Method::criterion, false, std::move(w)};
    }
  }
  return {true, Method::criterion, false, std::nullopt};
}

Verdict is_covered_direct(const Graph& g, int a, int b, int m) {
  check_params(a, b, m);
  if (m > g.size()) return {true, Method::direct, true, std::nullopt};

  std::vector<int> comb(m);
  for (int i = 0; i < m; ++i) comb[i] = i;
  do {
    ReducedInstance reduced = forced_reduction(g, comb, a, b);
    FlowResult flow = gf_factor_flow(reduced.graph, reduced.bounds);
    if (!flow.feasible) {
      CoveredWitness w;
      w.h_edges = comb;
      if (g.order() <= 22) {
        CriterionResult cr = gf_factor_criterion(reduced.graph, reduced.bounds);
        if (cr.violating_set) {
          w.s_set = *cr.violating_set;
          w.lhs = criterion_lhs(reduced.graph, reduced.bounds, w.s_set);
        }
      }
      return {false, Method::direct, false, std::move(w)};
    }
  } while (next_combination(comb, g.size()));
  return {true, Method::direct, false, std::nullopt};
}

SufficientResult sufficient_2m(const Graph& g, int a, int b, int m) {
  check_params(a, b, m);
  const int n = g.order();
  if (n > 22) throw std::invalid_argument("sufficient_2m capped at n <= 22");
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    long lhs = 0;
    long t_size = 0, t_degrees = 0, s_size = 0;
    for (int u = 0; u < n; ++u)
      if (mask & (1u << u)) ++s_size;
    for (int x = 0; x < n; ++x) {
      if (mask & (1u << x)) continue;
      int d = 0;
      for (int v : g.neighbors(x))
        if (!(mask & (1u << v))) ++d;
      if (d <= a - 1) {
        ++t_size;
        t_degrees += d;
      }
    }
    lhs = t_degrees - static_cast<long>(a) * t_size + static_cast<long>(b) * s_size;
    if (lhs < 2L * m) return SufficientResult::inconclusive;
  }
  return SufficientResult::holds;
}

}  // namespace fraccover
