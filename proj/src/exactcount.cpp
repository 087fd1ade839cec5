#include "ferrers/exactcount.hpp"

#include <bit>
#include <stdexcept>

namespace ferrers {

ExactInt bareiss_determinant(std::vector<std::vector<ExactInt>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  ExactInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        // Fraction-free step: every division here is exact.
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

ExactInt spanning_tree_count(const BipartiteGraph& g, int delete_index) {
  const int n = g.n();
  if (n == 0) throw std::invalid_argument("spanning_tree_count: empty graph");
  if (delete_index == -1) delete_index = n - 1;
  if (delete_index < 0 || delete_index >= n)
    throw std::invalid_argument("spanning_tree_count: bad deletion index");
  if (n == 1) return 1;

  // Laplacian D - A over vertex order X then Y, with the chosen row/column
  // dropped (Matrix-Tree: any cofactor works).
  std::vector<int> keep;
  keep.reserve(static_cast<size_t>(n - 1));
  for (int v = 0; v < n; ++v)
    if (v != delete_index) keep.push_back(v);

  auto entry = [&](int u, int v) -> long {
    if (u == v) {
      if (u < g.p()) return std::popcount(g.neighbors(u));
      long deg = 0;
      for (int i = 0; i < g.p(); ++i)
        if (g.has_edge(i, u - g.p())) ++deg;
      return deg;
    }
    if (u > v) std::swap(u, v);
    if (u < g.p() && v >= g.p() && g.has_edge(u, v - g.p())) return -1;
    return 0;
  };

  std::vector<std::vector<ExactInt>> m(keep.size(),
                                       std::vector<ExactInt>(keep.size()));
  for (size_t r = 0; r < keep.size(); ++r)
    for (size_t c = 0; c < keep.size(); ++c) m[r][c] = entry(keep[r], keep[c]);
  return bareiss_determinant(std::move(m));
}

ExactRational ferrers_invariant(const BipartiteGraph& g) {
  if (g.p() < 1 || g.q() < 1)
    throw std::invalid_argument("ferrers_invariant: needs both sides nonempty");
  auto [dx, dy] = degrees(g);
  ExactInt prod = 1;
  for (int d : dx) prod *= d;
  for (int d : dy) prod *= d;
  ExactRational f(prod, ExactInt(static_cast<long>(g.p()) * g.q()));
  f.canonicalize();
  return f;
}

Classification classify(const BipartiteGraph& g) {
  Classification c;
  c.tree_count = spanning_tree_count(g);
  c.ferrers_invariant = ferrers_invariant(g);
  c.verdict = ExactRational(c.tree_count) <= c.ferrers_invariant ? Verdict::Good
                                                                 : Verdict::Bad;
  return c;
}

bool venkataramana_holds(const BipartiteGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("venkataramana_holds: disconnected");
  if (g.p() < 1 || g.q() < 1)
    throw std::invalid_argument("venkataramana_holds: needs both sides nonempty");
  auto [d, e] = degrees(g);
  // T <= sqrt(e1) * prod_{i>=2}(d_i + 1/2) * prod_{j>=2}(e_j + 1/2), decided
  // as T^2 <= e1 * (that product)^2; both sides are nonnegative.
  ExactRational prod = 1;
  const ExactRational half(1, 2);
  for (size_t i = 1; i < d.size(); ++i) prod *= ExactRational(d[i]) + half;
  for (size_t j = 1; j < e.size(); ++j) prod *= ExactRational(e[j]) + half;
  ExactInt t = spanning_tree_count(g);
  return ExactRational(t * t) <= ExactRational(e[0]) * prod * prod;
}

std::string to_string(Verdict v) { return v == Verdict::Good ? "Good" : "Bad"; }

std::string rational_string(const ExactRational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace ferrers
