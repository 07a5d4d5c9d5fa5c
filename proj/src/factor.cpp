#include "fraccover/factor.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace fraccover {

namespace {

// Dinic max-flow on a small integer-capacity network.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(nodes, -1) {}

  int add_arc(int from, int to, int capacity) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, head_[from], capacity});
    head_[from] = id;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = id + 1;
    return id;
  }

  int flow_on(int arc_id) const { return arcs_[arc_id ^ 1].capacity; }

  long long run(int source, int sink) {
    long long total = 0;
    while (build_levels(source, sink)) {
      iter_ = head_;
      while (long long pushed = augment(source, sink, std::numeric_limits<int>::max()))
        total += pushed;
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    int next;
    int capacity;
  };

  bool build_levels(int source, int sink) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].capacity > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  long long augment(int u, int sink, int limit) {
    if (u == sink) return limit;
    for (int& a = iter_[u]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.capacity > 0 && level_[arc.to] == level_[u] + 1) {
        long long pushed =
            augment(arc.to, sink, std::min<long long>(limit, arc.capacity));
        if (pushed > 0) {
          arc.capacity -= static_cast<int>(pushed);
          arcs_[a ^ 1].capacity += static_cast<int>(pushed);
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

Bounds Bounds::constant(int n, int a, int b) {
  if (n < 0 || a < 0 || b < a) throw std::invalid_argument("need 0 <= a <= b");
  Bounds bounds;
  bounds.g.assign(n, a);
  bounds.f.assign(n, b);
  return bounds;
}

void Bounds::validate(const Graph& graph) const {
  if (static_cast<int>(g.size()) != graph.order() ||
      static_cast<int>(f.size()) != graph.order())
    throw std::invalid_argument("bounds length must equal graph order");
  for (int u = 0; u < graph.order(); ++u) {
    if (g[u] < 0) throw std::invalid_argument("bounds must be non-negative");
    if (g[u] > f[u]) throw std::invalid_argument("bounds require g(u) <= f(u)");
  }
}

bool verify_witness(const Graph& g, const Bounds& bounds, const FactorWitness& w) {
  bounds.validate(g);
  if (static_cast<int>(w.twice_h.size()) != g.size()) return false;
  for (int value : w.twice_h)
    if (value < 0 || value > 2) return false;
  std::vector<long> doubled(g.order(), 0);
  for (int e = 0; e < g.size(); ++e) {
    auto [u, v] = g.edge(e);
    doubled[u] += w.twice_h[e];
    doubled[v] += w.twice_h[e];
  }
  for (int u = 0; u < g.order(); ++u)
    if (doubled[u] < 2L * bounds.g[u] || doubled[u] > 2L * bounds.f[u]) return false;
  return true;
}

FlowResult gf_factor_flow(const Graph& g, const Bounds& bounds) {
  bounds.validate(g);
  const int n = g.order();

  // Nodes: source, sink, u_L = 2+u, u_R = 2+n+u, then the super pair for the
  // lower-bound transform. Arcs source->u_L and u_R->sink carry [g(u), f(u)],
  // each graph edge uv contributes u_L->v_R and v_L->u_R with [0,1].
  const int source = 0, sink = 1;
  const int super_source = 2 + 2 * n, super_sink = 3 + 2 * n;
  MaxFlow net(4 + 2 * n);

  long long lower_total = 0;
  for (int u = 0; u < n; ++u) {
    net.add_arc(source, 2 + u, bounds.f[u] - bounds.g[u]);
    net.add_arc(2 + n + u, sink, bounds.f[u] - bounds.g[u]);
    if (bounds.g[u] > 0) {
      // lower bound g(u) on both vertex arcs
      net.add_arc(super_source, 2 + u, bounds.g[u]);
      net.add_arc(super_source, sink, bounds.g[u]);
      net.add_arc(source, super_sink, bounds.g[u]);
      net.add_arc(2 + n + u, super_sink, bounds.g[u]);
      lower_total += 2LL * bounds.g[u];
    }
  }
  std::vector<int> left_arc(g.size()), right_arc(g.size());
  for (int e = 0; e < g.size(); ++e) {
    auto [u, v] = g.edge(e);
    left_arc[e] = net.add_arc(2 + u, 2 + n + v, 1);
    right_arc[e] = net.add_arc(2 + v, 2 + n + u, 1);
  }
  net.add_arc(sink, source, std::numeric_limits<int>::max() / 2);

  if (net.run(super_source, super_sink) != lower_total) return {false, std::nullopt};

  FactorWitness w;
  w.twice_h.resize(g.size());
  for (int e = 0; e < g.size(); ++e)
    w.twice_h[e] = net.flow_on(left_arc[e]) + net.flow_on(right_arc[e]);
  return {true, std::move(w)};
}

long criterion_lhs(const Graph& g, const Bounds& bounds, const VertexSet& s) {
  bounds.validate(g);
  validate_vertex_set(g, s);
  long lhs = 0;
  for (int u : s) lhs += bounds.f[u];
  std::vector<char> in_s(g.order(), 0);
  for (int u : s) in_s[u] = 1;
  for (int x = 0; x < g.order(); ++x) {
    if (in_s[x]) continue;
    int d = 0;
    for (int v : g.neighbors(x))
      if (!in_s[v]) ++d;
    if (d <= bounds.g[x] - 1) lhs += d - bounds.g[x];
  }
  return lhs;
}

CriterionResult gf_factor_criterion(const Graph& g, const Bounds& bounds) {
  bounds.validate(g);
  const int n = g.order();
  if (n > 22) throw std::invalid_argument("subset criterion capped at n <= 22");

  std::vector<int> members;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    long lhs = 0;
    for (int u = 0; u < n; ++u)
      if (mask & (1u << u)) lhs += bounds.f[u];
    for (int x = 0; x < n; ++x) {
      if (mask & (1u << x)) continue;
      int d = 0;
      for (int v : g.neighbors(x))
        if (!(mask & (1u << v))) ++d;
      if (d <= bounds.g[x] - 1) lhs += d - bounds.g[x];
    }
    if (lhs < 0) {
      VertexSet s;
      for (int u = 0; u < n; ++u)
        if (mask & (1u << u)) s.push_back(u);
      return {false, std::move(s)};
    }
  }
  return {true, std::nullopt};
}

ReducedInstance forced_reduction(const Graph& g, const EdgeSubset& h, int a, int b) {
  validate_edge_subset(g, h);
  if (a < 1 || a > b) throw std::invalid_argument("need 1 <= a <= b");
  if (static_cast<int>(h.size()) > b)
    throw std::invalid_argument("forced set larger than b cannot be saturated");

  std::vector<int> dh(g.order(), 0);
  for (int e : h) {
    auto [u, v] = g.edge(e);
    ++dh[u];
    ++dh[v];
  }
  Bounds reduced;
  reduced.g.resize(g.order());
  reduced.f.resize(g.order());
  for (int u = 0; u < g.order(); ++u) {
    reduced.g[u] = std::max(0, a - dh[u]);
    reduced.f[u] = b - dh[u];
    // d_H(u) <= |H| <= b, so f' stays non-negative
    if (reduced.f[u] < 0)
      throw std::logic_error("forced_reduction produced a negative upper bound");
  }
  return {delete_edges(g, h), std::move(reduced)};
}

}  // namespace fraccover
