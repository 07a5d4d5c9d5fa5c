#pragma once

#include <optional>
#include <vector>

#include "fraccover/graph.hpp"

namespace fraccover {

// Per-vertex integer degree bounds g(u) <= f(u).
struct Bounds {
  std::vector<int> g;
  std::vector<int> f;

  static Bounds constant(int n, int a, int b);
  void validate(const Graph& graph) const;
};

// Half-integral edge weights certifying a fractional (g,f)-factor, stored as
// doubled numerators so constraint checks stay in integer arithmetic.
struct FactorWitness {
  std::vector<int> twice_h;  // per edge index, values in {0,1,2}
};

// Exact integer check of the witness invariants against (G, bounds).
bool verify_witness(const Graph& g, const Bounds& bounds, const FactorWitness& w);

struct FlowResult {
  bool feasible = false;
  std::optional<FactorWitness> witness;  // present iff feasible
};

// Decides fractional (g,f)-factor existence by a circulation with lower
// bounds on the bipartite double cover; the integral flow symmetrizes to a
// half-integral witness.
FlowResult gf_factor_flow(const Graph& g, const Bounds& bounds);

struct CriterionResult {
  bool feasible = false;
  std::optional<VertexSet> violating_set;  // first violating S, bitmask order
};

// Exponential subset oracle: checks, for every S, that
//   sum_{x in T} d_{G-S}(x) - sum_{x in T} g(x) + sum_{x in S} f(x) >= 0
// with T = {x not in S : d_{G-S}(x) <= g(x)-1}. Capped at n <= 22.
CriterionResult gf_factor_criterion(const Graph& g, const Bounds& bounds);

// The criterion's left-hand side at one S; negative iff S is a violation.
long criterion_lhs(const Graph& g, const Bounds& bounds, const VertexSet& s);

struct ReducedInstance {
  Graph graph;
  Bounds bounds;
};

// Forces h = 1 on H for an [a,b]-factor: removes E(H) and shifts the bounds
// by d_H. A fractional [a,b]-factor of G with h = 1 on H exists iff the
// reduced instance has a fractional (g',f')-factor.
ReducedInstance forced_reduction(const Graph& g, const EdgeSubset& h, int a, int b);

}  // namespace fraccover
