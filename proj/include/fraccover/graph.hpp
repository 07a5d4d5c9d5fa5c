#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fraccover {

// Sorted, duplicate-free vertex indices.
using VertexSet = std::vector<int>;
// Sorted, duplicate-free edge indices into Graph::edges().
using EdgeSubset = std::vector<int>;

// Simple undirected graph. Vertices are dense indices 0..n-1; edges carry
// stable indices 0..e-1, sorted lexicographically by (u,v) with u < v, so
// subset enumeration and witnesses are reproducible across runs.
class Graph {
 public:
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int index) const;
  // Index of edge (u,v), or -1 when absent.
  int edge_index(int u, int v) const;

  int degree(int u) const;
  int min_degree() const;
  std::vector<int> neighbors(int u) const;

 private:
  void check_vertex(int u) const;

  int n_;
  std::vector<unsigned char> adj_;  // n*n symmetric 0/1 matrix
  std::vector<std::pair<int, int>> edges_;
};

// Standard families.
Graph empty_graph(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);

// Disjoint union: G2's vertices are shifted by G1's order.
Graph disjoint_union(const Graph& g1, const Graph& g2);
// Join: disjoint union plus all cross edges.
Graph join(const Graph& g1, const Graph& g2);

// K_{a-1} joined with (K_1 + K_{n-a}); exactly one vertex of degree a-1
// when a <= n-2. Requires 1 <= a <= n-1.
Graph h_na(int n, int a);
// K_{a-1} joined with (K_{n-a} union K_1); same construction as h_na up to
// isomorphism, kept as a named alias so reports can match either notation.
// Requires 2 <= a <= n-1.
Graph k_join_family(int n, int a);

struct VertexDeletion {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for deleted vertices
};

// Induced subgraph on V \ S.
VertexDeletion delete_vertices(const Graph& g, const VertexSet& s);
// Same vertex set, edges E \ M.
Graph delete_edges(const Graph& g, const EdgeSubset& m);

// Degree of u in G - S.
int degree_minus(const Graph& g, int u, const VertexSet& s);
// Number of edges with one end in s1 and the other in s2; s1, s2 disjoint.
int edges_between(const Graph& g, const VertexSet& s1, const VertexSet& s2);
bool is_connected(const Graph& g);
// Connected component labels, 0-based, in order of first visit.
std::vector<int> component_labels(const Graph& g);

// Throws std::invalid_argument unless s is sorted, duplicate-free and all
// members are < g.order().
void validate_vertex_set(const Graph& g, const VertexSet& s);
void validate_edge_subset(const Graph& g, const EdgeSubset& m);

}  // namespace fraccover
