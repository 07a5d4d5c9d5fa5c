#include "fraccover/harness.hpp"

#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "fraccover/graph6.hpp"
#include "fraccover/spectral.hpp"

namespace fraccover {

namespace {

using ordered_json = nlohmann::ordered_json;

void check_theorem_params(int a, int b, int m) {
  if (a < 2 || a > b) throw std::invalid_argument("theorems require 2 <= a <= b");
  if (m < 1 || m > b) throw std::invalid_argument("theorems require 1 <= m <= b");
}

ordered_json witness_json(const std::optional<CoveredWitness>& w) {
  if (!w) return nullptr;
  ordered_json j;
  j["s_set"] = w->s_set;
  j["h_edges"] = w->h_edges;
  j["lhs"] = w->lhs;
  j["delta"] = w->delta;
  return j;
}

struct RecordResult {
  std::string line;
  int status = 0;  // worst severity contributed by this record
};

RecordResult campaign_record(const std::string& g6, const CampaignOptions& opts) {
  RecordResult result;
  ordered_json j;
  auto start = std::chrono::steady_clock::now();

  Graph g = from_graph6(g6);
  HypothesisReport report =
      opts.theorem == TheoremKind::spectral
          ? theorem1_hypotheses(g, opts.a, opts.b, opts.m, opts.rho_tol)
          : theorem2_hypotheses(g, opts.a, opts.b, opts.m);

  j["graph6"] = g6;
  j["a"] = opts.a;
  j["b"] = opts.b;
  j["m"] = opts.m;
  j["theorem"] = opts.theorem == TheoremKind::spectral ? "spectral" : "size";
  j["n"] = report.n;
  j["e"] = report.e;
  j["delta"] = report.delta;
  if (report.rho)
    j["rho"] = *report.rho;
  else
    j["rho"] = nullptr;
  j["order_bound"] = report.order_bound;
  j["threshold"] = report.threshold;
  j["hypotheses_met"] = report.hypotheses_met;
  j["clauses"] = report.clauses;

  bool vacuous = false;
  if (report.hypotheses_met) {
    try {
      Verdict v = is_covered_direct(g, opts.a, opts.b, opts.m);
      vacuous = v.vacuous;
      j["covered"] = v.covered;
      j["witness"] = witness_json(v.witness);
      if (!v.covered) result.status = 2;
    } catch (const std::logic_error&) {
      result.status = 3;
      throw;
    }
  } else {
    j["covered"] = nullptr;
    j["witness"] = nullptr;
  }
  // keep schema field order: covered, vacuous, witness, elapsed_ms
  ordered_json out;
  for (auto& [key, value] : j.items()) {
    out[key] = value;
    if (key == "covered") out["vacuous"] = vacuous;
  }
  double elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  out["elapsed_ms"] = opts.include_timing ? elapsed : 0.0;
  result.line = out.dump();
  return result;
}

}  // namespace

long spectral_order_bound(int a, int b, int m) {
  long num = 4L * b + 2L * a + static_cast<long>(a) * b + (b + 8L) * m + 16;
  return (num + 1) / 2;
}

long size_order_bound(int a, int b, int m) {
  long num = 8L * a + 5L * b + 8L * m + 14;
  return (num + 1) / 2;
}

long size_threshold(int n, int a, int b, int m) {
  long k = n - b - 1;
  long choose2 = k >= 2 ? k * (k - 1) / 2 : 0;
  return choose2 + static_cast<long>(a) * b + 2L * a + (b + 1L) * m;
}

HypothesisReport theorem1_hypotheses(const Graph& g, int a, int b, int m,
                                     double rho_tol) {
  check_theorem_params(a, b, m);
  HypothesisReport r;
  r.theorem = TheoremKind::spectral;
  r.a = a;
  r.b = b;
  r.m = m;
  r.n = g.order();
  r.e = g.size();
  r.delta = g.order() > 0 ? g.min_degree() : 0;
  r.order_bound = spectral_order_bound(a, b, m);
  r.threshold = r.n - b - 1;
  r.connected = is_connected(g);
  r.rho = spectral_radius(g).rho;
  r.clauses["connected"] = r.connected;
  r.clauses["order"] = r.n >= r.order_bound;
  r.clauses["min_degree"] = r.delta >= a + m;
  r.clauses["threshold"] = *r.rho >= static_cast<double>(r.threshold) - rho_tol;
  r.hypotheses_met = r.clauses["connected"] && r.clauses["order"] &&
                     r.clauses["min_degree"] && r.clauses["threshold"];
  return r;
}

HypothesisReport theorem2_hypotheses(const Graph& g, int a, int b, int m) {
  check_theorem_params(a, b, m);
  HypothesisReport r;
  r.theorem = TheoremKind::size;
  r.a = a;
  r.b = b;
  r.m = m;
  r.n = g.order();
  r.e = g.size();
  r.delta = g.order() > 0 ? g.min_degree() : 0;
  r.order_bound = size_order_bound(a, b, m);
  r.threshold = size_threshold(r.n, a, b, m);
  r.connected = is_connected(g);
  r.clauses["connected"] = r.connected;
  r.clauses["order"] = r.n >= r.order_bound;
  r.clauses["min_degree"] = r.delta >= a + m;
  r.clauses["threshold"] = r.e >= r.threshold;
  r.hypotheses_met = r.clauses["connected"] && r.clauses["order"] &&
                     r.clauses["min_degree"] && r.clauses["threshold"];
  return r;
}

void enumerate_labeled_graphs(int n, bool connected_only,
                              const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("labeled enumeration capped at 1 <= n <= 7");
  const int slots = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slot_edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slot_edges.emplace_back(u, v);
  for (uint32_t mask = 0; mask < (1u << slots); ++mask) {
    Graph g(n);
    for (int i = 0; i < slots; ++i)
      if (mask & (1u << i)) g.add_edge(slot_edges[i].first, slot_edges[i].second);
    if (connected_only && !is_connected(g)) continue;
    visit(g);
  }
}

Graph random_dense(int n, int a, int b, int m, int edges_to_remove, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_dense requires n >= 1");
  check_theorem_params(a, b, m);
  const long max_remove = static_cast<long>(n) * (n - 1) / 2 -
                          (static_cast<long>(n) * (a + m) + 1) / 2;
  if (edges_to_remove < 0 || edges_to_remove > max_remove)
    throw std::invalid_argument("removal count exceeds the minimum-degree budget");

  Graph g = complete(n);
  std::mt19937_64 rng(seed);
  const int floor_degree = a + m;
  int removed = 0;
  long retries = 0;
  while (removed < edges_to_remove) {
    if (retries > 10'000)
      throw std::runtime_error("random_dense: could not place removals in 1e4 retries");
    int idx = static_cast<int>(rng() % g.size());
    auto [u, v] = g.edge(idx);
    if (g.degree(u) <= floor_degree || g.degree(v) <= floor_degree) {
      ++retries;
      continue;
    }
    g = delete_edges(g, {idx});
    ++removed;
  }
  return g;
}

int verify_campaign(std::istream& in, std::ostream& out, const CampaignOptions& opts) {
  try {
    check_theorem_params(opts.a, opts.b, opts.m);
  } catch (const std::invalid_argument& ex) {
    out << ordered_json{{"error", ex.what()}}.dump() << "\n";
    return 1;
  }

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }

  std::vector<std::string> output(lines.size());
  std::vector<int> statuses(lines.size(), 0);

  auto work = [&](size_t i) {
    try {
      RecordResult r = campaign_record(lines[i], opts);
      output[i] = r.line;
      statuses[i] = r.status;
    } catch (const Graph6ParseError& ex) {
      output[i] = ordered_json{{"error", ex.what()}, {"line", i + 1}}.dump();
      statuses[i] = 1;
    } catch (const std::logic_error& ex) {
      output[i] = ordered_json{{"error", ex.what()}, {"line", i + 1}}.dump();
      statuses[i] = 3;
    } catch (const std::exception& ex) {
      output[i] = ordered_json{{"error", ex.what()}, {"line", i + 1}}.dump();
      statuses[i] = 1;
    }
  };

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || lines.size() < 2) {
    for (size_t i = 0; i < lines.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < lines.size(); i = next.fetch_add(1))
          work(i);
      });
    for (auto& th : pool) th.join();
  }

  int status = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    out << output[i] << "\n";
    // precedence: internal failure > falsified conclusion > I/O error
    if (statuses[i] == 3 || status == 3)
      status = 3;
    else if (statuses[i] == 2 || status == 2)
      status = 2;
    else if (statuses[i] == 1)
      status = 1;
  }
  return status;
}

CrossValidateSummary cross_validate(int max_n,
                                    const std::vector<std::array<int, 3>>& params) {
  if (max_n < 1 || max_n > 6)
    throw std::invalid_argument("cross_validate capped at max_n <= 6");
  for (auto [a, b, m] : params) {
    if (a < 1 || a > b || m < 0 || m > b)
      throw std::invalid_argument("cross_validate requires 1 <= a <= b, 0 <= m <= b");
  }

  CrossValidateSummary summary;
  for (int n = 1; n <= max_n && summary.ok; ++n) {
    enumerate_labeled_graphs(n, true, [&](const Graph& g) {
      if (!summary.ok) return;
      ++summary.graphs;
      for (auto [a, b, m] : params) {
        Verdict crit = is_covered_criterion(g, a, b, m);
        Verdict direct = is_covered_direct(g, a, b, m);
        ++summary.comparisons;

        auto fail = [&](const std::string& what) {
          summary.ok = false;
          ordered_json j;
          j["check"] = what;
          j["graph6"] = to_graph6(g);
          j["a"] = a;
          j["b"] = b;
          j["m"] = m;
          j["criterion_covered"] = crit.covered;
          j["direct_covered"] = direct.covered;
          j["criterion_witness"] = witness_json(crit.witness);
          j["direct_witness"] = witness_json(direct.witness);
          summary.counterexample = j.dump();
        };

        if (crit.covered != direct.covered || crit.vacuous != direct.vacuous) {
          fail("criterion/direct disagreement");
          return;
        }
        if (sufficient_2m(g, a, b, m) == SufficientResult::holds && !direct.covered) {
          fail("sufficient_2m held on a non-covered graph");
          return;
        }
        if (m >= 1 && m - 1 <= g.size() && direct.covered &&
            !is_covered_direct(g, a, b, m - 1).covered) {
          fail("coveredness not monotone in m");
          return;
        }
      }
    });
  }
  return summary;
}

}  // namespace fraccover
