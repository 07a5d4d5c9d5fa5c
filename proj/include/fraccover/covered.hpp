#pragma once

#include <optional>
#include <utility>

#include "fraccover/factor.hpp"
#include "fraccover/graph.hpp"

namespace fraccover {

// One evaluation of the coveredness criterion at a fixed (S, H) pair.
struct CriterionTerms {
  VertexSet s;
  VertexSet t;
  EdgeSubset h;
  long lhs = 0;      // sum_{v in T} d_{G-S}(v) - a|T| + b|S|
  long dh_s = 0;     // sum_{x in S} d_H(x)
  long eh_ts = 0;    // e_H(T, S)
  long theta = 0;    // Theta(S, T)
  long delta = 0;    // dh_s - eh_ts + theta, always <= 2m
};

enum class Method { criterion, direct, sufficient };

struct CoveredWitness {
  VertexSet s_set;
  EdgeSubset h_edges;
  long lhs = 0;
  long delta = 0;
};

struct Verdict {
  bool covered = false;
  Method method = Method::direct;
  // True when e(G) < m: the definition quantifies over no H at all.
  bool vacuous = false;
  std::optional<CoveredWitness> witness;  // present iff not covered
};

// T = {x outside S : d_{G-S}(x) <= a-1}.
VertexSet tight_set(const Graph& g, const VertexSet& s, int a);

// Theta(S,T): sum over x in T with e_H(x,S) >= 2 and
// 1 <= d_{G\E(H)-S}(x) - a + d_H(x) <= e_H(x,S) - 1 of that middle quantity.
long theta_term(const Graph& g, const VertexSet& s, const VertexSet& t,
                const EdgeSubset& h, int a);

// All criterion terms at (S, H); lhs uses b, delta is checked against 2m.
CriterionTerms delta_h(const Graph& g, const VertexSet& s, const EdgeSubset& h,
                       int a, int b);

// Exhaustive max of delta over all C(e(G), m) edge subsets; returns the
// lexicographically first maximizer. Requires e(G) >= m.
std::pair<long, EdgeSubset> max_delta_over_h(const Graph& g, const VertexSet& s,
                                             int a, int m);

// Necessary-and-sufficient subset criterion; capped at n <= 12 and
// C(e(G), m) <= 1e6.
Verdict is_covered_criterion(const Graph& g, int a, int b, int m);

// Direct method: for every H of size m, force H and decide the reduced
// fractional factor instance by the flow solver.
Verdict is_covered_direct(const Graph& g, int a, int b, int m);

enum class SufficientResult { holds, inconclusive };

// One-sided test (lhs >= 2m for all S); "holds" implies covered. n <= 22.
SufficientResult sufficient_2m(const Graph& g, int a, int b, int m);

}  // namespace fraccover
