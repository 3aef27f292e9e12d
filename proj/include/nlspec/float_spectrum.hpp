// float_spectrum.hpp — floating-point eigenvalues of the normalized Laplacian
// for display. Never used for equality decisions; the exact fingerprint is.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <utility>
#include <vector>

#include "nlspec/graph.hpp"

namespace nlspec {

inline std::vector<double> float_spectrum(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 0) laplacian(v, v) = 1.0;
    for (int u = v + 1; u < n; ++u) {
      if (!g.adjacent(v, u)) continue;
      const double w = -1.0 / std::sqrt(static_cast<double>(g.degree(v)) * g.degree(u));
      laplacian(v, u) = w;
      laplacian(u, v) = w;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + n);
}

// Groups a sorted eigenvalue list into (value, multiplicity) runs; display
// only, tolerance configurable.
inline std::vector<std::pair<double, int>> group_eigenvalues(const std::vector<double>& values,
                                                             double tol = 1e-9) {
  std::vector<std::pair<double, int>> groups;
  for (double v : values) {
    if (!groups.empty() && v - groups.back().first <= tol) {
      ++groups.back().second;
    } else {
      groups.emplace_back(v, 1);
    }
  }
  return groups;
}

}  // namespace nlspec
