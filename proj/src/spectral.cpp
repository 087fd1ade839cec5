#include "ferrers/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>

namespace ferrers {

SpectrumVector laplacian_spectrum(const BipartiteGraph& g) {
  const int n = g.n();
  if (n == 0) throw std::invalid_argument("laplacian_spectrum: empty graph");
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < g.p(); ++i)
    for (int j = 0; j < g.q(); ++j)
      if (g.has_edge(i, j)) {
        int u = i, v = g.p() + j;
        lap(u, u) += 1.0;
        lap(v, v) += 1.0;
        lap(u, v) -= 1.0;
        lap(v, u) -= 1.0;
      }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("laplacian_spectrum: eigensolver failed");
  SpectrumVector out;
  out.eigenvalues.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + n);
  std::reverse(out.eigenvalues.begin(), out.eigenvalues.end());
  out.tolerance = 1e-9 * std::max(1.0, 2.0 * g.edge_count());
  return out;
}

double spectral_tree_count(const BipartiteGraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("spectral_tree_count: disconnected input");
  SpectrumVector s = laplacian_spectrum(g);
  double prod = 1.0;
  for (size_t i = 0; i + 1 < s.eigenvalues.size(); ++i) prod *= s.eigenvalues[i];
  return prod / static_cast<double>(g.n());
}

bool grone_merris_check(const BipartiteGraph& g, double eps) {
  SpectrumVector s = laplacian_spectrum(g);
  auto [dx, dy] = degrees(g);
  std::vector<int> all(dx);
  all.insert(all.end(), dy.begin(), dy.end());
  std::sort(all.rbegin(), all.rend());
  // conjugate of the full degree sequence; zeros contribute nothing
  std::vector<int> conj;
  if (!all.empty() && all[0] > 0) {
    conj.assign(static_cast<size_t>(all[0]), 0);
    for (int d : all)
      for (int j = 0; j < d; ++j) ++conj[static_cast<size_t>(j)];
  }
  size_t len = std::max(s.eigenvalues.size(), conj.size());
  double su = 0.0, sv = 0.0;
  for (size_t i = 0; i < len; ++i) {
    if (i < s.eigenvalues.size()) su += s.eigenvalues[i];
    if (i < conj.size()) sv += static_cast<double>(conj[i]);
    if (su > sv + eps) return false;
  }
  return std::abs(su - sv) <= eps;
}

bool inequality1_check(const BipartiteGraph& g, double eps) {
  if (!is_connected(g))
    throw std::invalid_argument("inequality1_check: disconnected input");
  auto [dx, dy] = degrees(g);
  double rhs = 1.0 / (static_cast<double>(g.p()) * g.q());
  for (int d : dx) rhs *= d;
  for (int d : dy) rhs *= d;
  return spectral_tree_count(g) <= rhs + eps;
}

}  // namespace ferrers
