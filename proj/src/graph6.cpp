#include "ferrers/graph6.hpp"

#include <stdexcept>

namespace ferrers {

// Standard graph6 for n <= 62, upper-triangle bits column-major, 6 bits per
// printable character offset by 63.

std::string to_graph6(const BipartiteGraph& g) {
  int n = g.n();
  if (n > 62) throw std::invalid_argument("graph6: n > 62 unsupported");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int bit = 5;
  char cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      // vertex order: X block then Y block; edges only across the blocks
      bool edge = i < g.p() && j >= g.p() && g.has_edge(i, j - g.p());
      if (edge) cur |= static_cast<char>(1 << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(63 + cur));
        bit = 5;
        cur = 0;
      }
    }
  if (bit != 5) out.push_back(static_cast<char>(63 + cur));
  out.push_back(':');
  for (int v = 0; v < n; ++v) out.push_back(v < g.p() ? '0' : '1');
  return out;
}

BipartiteGraph from_graph6(const std::string& text) {
  auto sep = text.find(':');
  if (sep == std::string::npos)
    throw std::invalid_argument("graph6: missing bipartition mask after ':'");
  std::string g6 = text.substr(0, sep);
  std::string mask = text.substr(sep + 1);
  if (g6.empty()) throw std::invalid_argument("graph6: empty string");
  int n = g6[0] - 63;
  if (n < 0 || n > 62) throw std::invalid_argument("graph6: bad vertex count");
  if (static_cast<int>(mask.size()) != n)
    throw std::invalid_argument("graph6: mask length != n");
  size_t need = 1 + (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (g6.size() != need) throw std::invalid_argument("graph6: bad length");

  std::vector<int> side(static_cast<size_t>(n));
  std::vector<int> local(static_cast<size_t>(n));
  int p = 0, q = 0;
  for (int v = 0; v < n; ++v) {
    if (mask[static_cast<size_t>(v)] == '0') side[static_cast<size_t>(v)] = 0, local[static_cast<size_t>(v)] = p++;
    else if (mask[static_cast<size_t>(v)] == '1') side[static_cast<size_t>(v)] = 1, local[static_cast<size_t>(v)] = q++;
    else throw std::invalid_argument("graph6: mask must be over {0,1}");
  }

  std::vector<std::pair<int, int>> edges;
  size_t pos = 1;
  int bit = 5;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int c = g6[pos] - 63;
      if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad character");
      if ((c >> bit) & 1) {
        if (side[static_cast<size_t>(i)] == side[static_cast<size_t>(j)])
          throw std::invalid_argument("graph6: edge within one side of the bipartition");
        int xi = side[static_cast<size_t>(i)] == 0 ? i : j;
        int yj = side[static_cast<size_t>(i)] == 0 ? j : i;
        edges.emplace_back(local[static_cast<size_t>(xi)], local[static_cast<size_t>(yj)]);
      }
      if (--bit < 0) {
        ++pos;
        bit = 5;
      }
    }
  return BipartiteGraph::from_edges(p, q, edges);
}

}  // namespace ferrers
