#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fraccover/graph.hpp"

namespace fraccover {

struct SpectralResult {
  double rho = 0.0;       // largest adjacency eigenvalue
  double residual = 0.0;  // inf-norm of A*v - rho*v
  long iterations = 0;
  std::vector<double> perron_vector;  // unit inf-norm; positive on the
                                      // dominant component, zero elsewhere
};

Eigen::MatrixXd adjacency_matrix(const Graph& g);

// Power iteration on A + I from the all-ones direction, per connected
// component; the shift keeps bipartite components (eigenvalue pair +-rho)
// converging and is removed exactly from the reported value.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-10);

// Independent oracle: cyclic Jacobi eigendecomposition, n <= 64 only.
double spectral_radius_jacobi(const Graph& g);

// rho(G) <= (delta-1)/2 + sqrt(2e - n*delta + (delta+1)^2/4), delta >= 1.
double hong_bound(const Graph& g);

// f(x) = (x-1)/2 + sqrt(2q - px + (1+x)^2/4); non-increasing on [0, p-1]
// whenever 2q <= p(p-1).
double hong_f(double x, long p, long q);

struct QuotientPart {
  int size = 0;
  bool clique = false;  // false: independent set
};

// Largest eigenvalue of the quotient matrix of an equitable partition built
// from clique/independent parts with an all-or-nothing join pattern; equals
// the spectral radius of the corresponding full graph.
double quotient_spectral_radius(const std::vector<QuotientPart>& parts,
                                const std::vector<std::pair<int, int>>& joins);

}  // namespace fraccover
