#include "fraccover/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace fraccover {

namespace {

constexpr long kIterationCap = 1'000'000;

// Power iteration on A + I for one connected component given as an adjacency
// matrix. Returns the component's SpectralResult (rho already unshifted).
SpectralResult power_iterate(const Eigen::MatrixXd& a, double tol) {
  const auto n = a.rows();
  Eigen::MatrixXd shifted = a + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  v /= v.lpNorm<Eigen::Infinity>();

  double rayleigh = 0.0;
  for (long it = 1; it <= kIterationCap; ++it) {
    Eigen::VectorXd w = shifted * v;
    double next = v.dot(w) / v.squaredNorm();
    double norm = w.lpNorm<Eigen::Infinity>();
    w /= norm;
    double residual = (a * w - (next - 1.0) * w).lpNorm<Eigen::Infinity>();
    bool settled = it > 1 && std::abs(next - rayleigh) <= tol && residual <= 10.0 * tol;
    rayleigh = next;
    v = w;
    if (settled) {
      SpectralResult r;
      r.rho = rayleigh - 1.0;
      r.residual = residual;
      r.iterations = it;
      r.perron_vector.assign(v.data(), v.data() + n);
      return r;
    }
  }
  throw std::runtime_error("power iteration did not converge within 1e6 iterations");
}

}  // namespace

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

SpectralResult spectral_radius(const Graph& g, double tol) {
  if (g.order() < 1) throw std::invalid_argument("spectral_radius requires n >= 1");
  if (tol <= 0.0) throw std::invalid_argument("spectral_radius requires tol > 0");

  auto label = component_labels(g);
  int components = 0;
  for (int l : label) components = std::max(components, l + 1);

  SpectralResult best;
  best.rho = -1.0;
  for (int c = 0; c < components; ++c) {
    std::vector<int> members;
    for (int u = 0; u < g.order(); ++u)
      if (label[u] == c) members.push_back(u);

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(members.size(), members.size());
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        if (g.adjacent(members[i], members[j])) a(i, j) = a(j, i) = 1.0;

    SpectralResult r = power_iterate(a, tol);
    if (r.rho > best.rho) {
      best.rho = r.rho;
      best.residual = r.residual;
      best.iterations = r.iterations;
      best.perron_vector.assign(g.order(), 0.0);
      for (size_t i = 0; i < members.size(); ++i)
        best.perron_vector[members[i]] = r.perron_vector[i];
    }
  }
  return best;
}

double spectral_radius_jacobi(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > 64)
    throw std::invalid_argument("jacobi oracle handles 1 <= n <= 64 only");
  Eigen::MatrixXd a = adjacency_matrix(g);

  auto off_norm = [&a, n]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(s);
  };

  while (off_norm() >= 1e-12) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double sign = theta < 0.0 ? -1.0 : 1.0;
        double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);
        double apq = a(p, q);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          double aip = a(i, p), aiq = a(i, q);
          a(i, p) = a(p, i) = aip - s * (aiq + aip * tau);
          a(i, q) = a(q, i) = aiq + s * (aip - aiq * tau);
        }
      }
    }
  }
  return a.diagonal().maxCoeff();
}

double hong_bound(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("hong_bound requires n >= 1");
  const int delta = g.min_degree();
  if (delta < 1) throw std::invalid_argument("hong_bound requires minimum degree >= 1");
  const double e = g.size();
  return (delta - 1.0) / 2.0 +
         std::sqrt(2.0 * e - static_cast<double>(n) * delta + (delta + 1.0) * (delta + 1.0) / 4.0);
}

double hong_f(double x, long p, long q) {
  if (p < 0 || q < 0 || 2 * q > p * (p - 1))
    throw std::invalid_argument("hong_f requires 0 <= 2q <= p(p-1)");
  if (x < 0.0 || x > static_cast<double>(p - 1))
    throw std::invalid_argument("hong_f requires 0 <= x <= p-1");
  double radicand = 2.0 * q - p * x + (1.0 + x) * (1.0 + x) / 4.0;
  if (radicand < 0.0) throw std::invalid_argument("hong_f radicand is negative");
  return (x - 1.0) / 2.0 + std::sqrt(radicand);
}

double quotient_spectral_radius(const std::vector<QuotientPart>& parts,
                                const std::vector<std::pair<int, int>>& joins) {
  const int k = static_cast<int>(parts.size());
  if (k == 0) throw std::invalid_argument("quotient partition must be non-empty");
  for (const auto& p : parts)
    if (p.size < 1) throw std::invalid_argument("quotient part sizes must be >= 1");

  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i)
    if (parts[i].clique) b(i, i) = parts[i].size - 1;
  for (auto [i, j] : joins) {
    if (i < 0 || i >= k || j < 0 || j >= k || i == j)
      throw std::invalid_argument("invalid join pair");
    b(i, j) = parts[j].size;
    b(j, i) = parts[i].size;
  }

  // B is similar to a symmetric matrix via diag(sqrt(size)); the symmetrized
  // form keeps the spectrum real and lets the self-adjoint solver apply.
  Eigen::VectorXd scale(k);
  for (int i = 0; i < k; ++i) scale(i) = std::sqrt(static_cast<double>(parts[i].size));
  Eigen::MatrixXd sym =
      scale.asDiagonal() * b * scale.cwiseInverse().asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  return solver.eigenvalues().maxCoeff();
}

}  // namespace fraccover
