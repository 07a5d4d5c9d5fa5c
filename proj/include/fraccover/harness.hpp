#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fraccover/covered.hpp"
#include "fraccover/graph.hpp"

namespace fraccover {

enum class TheoremKind { spectral, size };

struct HypothesisReport {
  TheoremKind theorem = TheoremKind::spectral;
  int a = 0, b = 0, m = 0;
  int n = 0, e = 0, delta = 0;
  std::optional<double> rho;  // spectral theorem only
  long order_bound = 0;
  long threshold = 0;  // rho threshold n-b-1, or the size threshold
  bool connected = false;
  std::map<std::string, bool> clauses;
  bool hypotheses_met = false;
};

// Smallest admissible order, ceil of (4b+2a+ab+(b+8)m+16)/2.
long spectral_order_bound(int a, int b, int m);
// Smallest admissible order, ceil of 4a+5b/2+4m+7.
long size_order_bound(int a, int b, int m);
// C(n-b-1, 2) + ab + 2a + (b+1)m.
long size_threshold(int n, int a, int b, int m);

// Hypotheses of the spectral theorem: connected, n >= order bound,
// delta >= a+m, rho >= n-b-1 - rho_tol. Requires 2 <= a <= b, 1 <= m <= b.
HypothesisReport theorem1_hypotheses(const Graph& g, int a, int b, int m,
                                     double rho_tol = 1e-9);
// Hypotheses of the size theorem: connected, n >= order bound,
// delta >= a+m, e(G) >= size threshold.
HypothesisReport theorem2_hypotheses(const Graph& g, int a, int b, int m);

// All 2^C(n,2) labeled graphs on n vertices in bitmask order (edge slot
// (u,v), u < v, lexicographic); n <= 7.
void enumerate_labeled_graphs(int n, bool connected_only,
                              const std::function<void(const Graph&)>& visit);

// K_n minus uniformly random edges, never letting delta drop below a+m;
// deterministic under seed.
Graph random_dense(int n, int a, int b, int m, int edges_to_remove, uint64_t seed);

struct CampaignOptions {
  int a = 2, b = 2, m = 1;
  TheoremKind theorem = TheoremKind::spectral;
  double rho_tol = 1e-9;
  bool include_timing = true;  // false zeroes elapsed_ms for byte-stable output
  int jobs = 1;
};

// Reads graph6 lines from `in`, writes one JSON object per line to `out`.
// Exit status: 0 clean, 1 I/O or parameter error, 2 hypotheses-met graph not
// covered, 3 internal consistency failure.
int verify_campaign(std::istream& in, std::ostream& out, const CampaignOptions& opts);

struct CrossValidateSummary {
  long graphs = 0;
  long comparisons = 0;
  bool ok = true;
  std::string counterexample;  // serialized first failure, empty when ok
};

// Certifies criterion = direct, Lemma 2.3 soundness and m-monotonicity over
// all connected labeled graphs with n <= max_n (max_n <= 6) for each (a,b,m).
CrossValidateSummary cross_validate(int max_n,
                                    const std::vector<std::array<int, 3>>& params);

}  // namespace fraccover
