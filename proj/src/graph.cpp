#include "fraccover/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace fraccover {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  adj_.assign(static_cast<size_t>(n) * n, 0);
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) throw std::invalid_argument("vertex index out of range");
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[static_cast<size_t>(u) * n_ + v] != 0;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (adjacent(u, v)) return;
  adj_[static_cast<size_t>(u) * n_ + v] = 1;
  adj_[static_cast<size_t>(v) * n_ + u] = 1;
  auto e = std::minmax(u, v);
  std::pair<int, int> p{e.first, e.second};
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), p), p);
}

std::pair<int, int> Graph::edge(int index) const {
  if (index < 0 || index >= size()) throw std::invalid_argument("edge index out of range");
  return edges_[index];
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair<int, int>{u, v});
  if (it == edges_.end() || *it != std::pair<int, int>{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Graph::degree(int u) const {
  check_vertex(u);
  int d = 0;
  for (int v = 0; v < n_; ++v) d += adj_[static_cast<size_t>(u) * n_ + v];
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) throw std::invalid_argument("minimum degree of the null graph");
  int d = n_;
  for (int u = 0; u < n_; ++u) d = std::min(d, degree(u));
  return d;
}

std::vector<int> Graph::neighbors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (adj_[static_cast<size_t>(u) * n_ + v]) out.push_back(v);
  return out;
}

Graph empty_graph(int n) {
  if (n < 1) throw std::invalid_argument("empty_graph requires n >= 1");
  return Graph(n);
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete requires n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  Graph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph g(g1.order() + g2.order());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  int shift = g1.order();
  for (auto [u, v] : g2.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  for (int u = 0; u < g1.order(); ++u)
    for (int v = 0; v < g2.order(); ++v) g.add_edge(u, g1.order() + v);
  return g;
}

Graph h_na(int n, int a) {
  if (a < 1 || a > n - 1) throw std::invalid_argument("h_na requires 1 <= a <= n-1");
  Graph tail = disjoint_union(complete(1), complete(n - a));
  if (a == 1) return tail;
  return join(complete(a - 1), tail);
}

Graph k_join_family(int n, int a) {
  if (a < 2 || a > n - 1) throw std::invalid_argument("k_join_family requires 2 <= a <= n-1");
  return join(complete(a - 1), disjoint_union(complete(n - a), complete(1)));
}

void validate_vertex_set(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.order())
      throw std::invalid_argument("vertex set member out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument("vertex set must be sorted and duplicate-free");
  }
}

void validate_edge_subset(const Graph& g, const EdgeSubset& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 || m[i] >= g.size())
      throw std::invalid_argument("edge subset member out of range");
    if (i > 0 && m[i] <= m[i - 1])
      throw std::invalid_argument("edge subset must be sorted and duplicate-free");
  }
}

VertexDeletion delete_vertices(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  std::vector<int> old_to_new(g.order(), -1);
  int next = 0;
  size_t si = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (si < s.size() && s[si] == u) {
      ++si;
      continue;
    }
    old_to_new[u] = next++;
  }
  Graph h(next);
  for (auto [u, v] : g.edges())
    if (old_to_new[u] >= 0 && old_to_new[v] >= 0) h.add_edge(old_to_new[u], old_to_new[v]);
  return {std::move(h), std::move(old_to_new)};
}

Graph delete_edges(const Graph& g, const EdgeSubset& m) {
  validate_edge_subset(g, m);
  Graph h(g.order());
  size_t mi = 0;
  for (int e = 0; e < g.size(); ++e) {
    if (mi < m.size() && m[mi] == e) {
      ++mi;
      continue;
    }
    auto [u, v] = g.edge(e);
    h.add_edge(u, v);
  }
  return h;
}

int degree_minus(const Graph& g, int u, const VertexSet& s) {
  validate_vertex_set(g, s);
  int d = g.degree(u);
  for (int w : s)
    if (g.adjacent(u, w)) --d;
  return d;
}

int edges_between(const Graph& g, const VertexSet& s1, const VertexSet& s2) {
  validate_vertex_set(g, s1);
  validate_vertex_set(g, s2);
  std::vector<char> in1(g.order(), 0), in2(g.order(), 0);
  for (int u : s1) in1[u] = 1;
  for (int u : s2) {
    if (in1[u]) throw std::invalid_argument("edges_between requires disjoint sets");
    in2[u] = 1;
  }
  int count = 0;
  for (auto [u, v] : g.edges())
    if ((in1[u] && in2[v]) || (in1[v] && in2[u])) ++count;
  return count;
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int root = 0; root < g.order(); ++root) {
    if (label[root] >= 0) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (label[v] < 0) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto label = component_labels(g);
  return *std::max_element(label.begin(), label.end()) == 0;
}

}  // namespace fraccover
