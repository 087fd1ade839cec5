#include "ferrers/bigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace ferrers {

namespace {

constexpr Mask low_bits(int k) { return k <= 0 ? 0u : (Mask{1} << k) - 1u; }

// The run of `d` ones at the top of a q-bit word.  Maximal-matrix canonical
// form packs neighborhoods toward high bit positions.
constexpr Mask high_run(int d, int q) { return low_bits(d) << (q - d); }

}  // namespace

BipartiteGraph::BipartiteGraph(int p, int q, std::vector<Mask> adj)
    : p_(p), q_(q), adj_(std::move(adj)) {
  if (p < 0 || q < 0 || q > 31) throw std::invalid_argument("bad bipartition sizes");
  if (adj_.size() != static_cast<size_t>(p))
    throw std::invalid_argument("adjacency row count != p");
  for (Mask row : adj_)
    if (row & ~low_bits(q)) throw std::invalid_argument("neighbor index out of range");
}

BipartiteGraph BipartiteGraph::from_edges(
    int p, int q, const std::vector<std::pair<int, int>>& edges) {
  if (p < 0 || q < 0 || q > 31) throw std::invalid_argument("bad bipartition sizes");
  std::vector<Mask> adj(static_cast<size_t>(p), 0u);
  for (auto [i, j] : edges) {
    if (i < 0 || i >= p || j < 0 || j >= q)
      throw std::invalid_argument("edge index out of range");
    Mask bit = Mask{1} << j;
    if (adj[static_cast<size_t>(i)] & bit)
      throw std::invalid_argument("duplicate edge");
    adj[static_cast<size_t>(i)] |= bit;
  }
  return BipartiteGraph{p, q, std::move(adj)};
}

int BipartiteGraph::edge_count() const {
  int total = 0;
  for (Mask row : adj_) total += std::popcount(row);
  return total;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < p_; ++i)
    for (int j = 0; j < q_; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

std::pair<std::vector<int>, std::vector<int>> degrees(const BipartiteGraph& g) {
  std::vector<int> dx(static_cast<size_t>(g.p()), 0);
  std::vector<int> dy(static_cast<size_t>(g.q()), 0);
  for (int i = 0; i < g.p(); ++i) {
    dx[static_cast<size_t>(i)] = std::popcount(g.neighbors(i));
    for (int j = 0; j < g.q(); ++j)
      if (g.has_edge(i, j)) ++dy[static_cast<size_t>(j)];
  }
  std::sort(dx.rbegin(), dx.rend());
  std::sort(dy.rbegin(), dy.rend());
  return {std::move(dx), std::move(dy)};
}

BipartiteGraph ferrers_from_partition(const Partition& lam) {
  if (lam.empty()) throw std::invalid_argument("empty partition has no Ferrers graph");
  std::vector<Mask> adj;
  adj.reserve(static_cast<size_t>(lam.size()));
  for (int part : lam.parts()) adj.push_back(low_bits(part));
  return BipartiteGraph{lam.size(), lam[0], std::move(adj)};
}

namespace {

// Reachability fixpoint restricted to the given vertex subsets.
bool connected_on(const BipartiteGraph& g, Mask xs, Mask ys) {
  int total = std::popcount(xs) + std::popcount(ys);
  if (total == 0) return true;
  Mask rx = 0, ry = 0;
  if (xs) rx = xs & (~xs + 1);  // lowest allowed X vertex as seed
  else ry = ys & (~ys + 1);
  for (;;) {
    Mask nrx = rx, nry = ry;
    for (int i = 0; i < g.p(); ++i)
      if ((xs >> i) & 1u) {
        Mask nb = g.neighbors(i) & ys;
        if ((rx >> i) & 1u) nry |= nb;
        else if (nb & ry) nrx |= Mask{1} << i;
      }
    if (nrx == rx && nry == ry) break;
    rx = nrx;
    ry = nry;
  }
  return std::popcount(rx) + std::popcount(ry) == total;
}

}  // namespace

bool is_connected(const BipartiteGraph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  return connected_on(g, low_bits(g.p()), low_bits(g.q()));
}

std::vector<int> cut_vertices(const BipartiteGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("cut_vertices: disconnected input");
  std::vector<int> out;
  const Mask all_x = low_bits(g.p()), all_y = low_bits(g.q());
  for (int i = 0; i < g.p(); ++i)
    if (!connected_on(g, all_x & ~(Mask{1} << i), all_y)) out.push_back(i);
  for (int j = 0; j < g.q(); ++j)
    if (!connected_on(g, all_x, all_y & ~(Mask{1} << j))) out.push_back(g.p() + j);
  return out;
}

bool is_biconnected(const BipartiteGraph& g) {
  if (g.n() < 2) return false;
  if (!is_connected(g)) return false;
  return cut_vertices(g).empty();
}

bool has_induced_2K2(const BipartiteGraph& g) {
  for (int a = 0; a < g.p(); ++a)
    for (int c = a + 1; c < g.p(); ++c) {
      Mask na = g.neighbors(a), nc = g.neighbors(c);
      if ((na & ~nc) && (nc & ~na)) return true;
    }
  return false;
}

bool is_ferrers(const BipartiteGraph& g) {
  // Chain condition on X-neighborhoods: after sorting by size, each must
  // contain the next.
  std::vector<Mask> rows(g.adj());
  std::sort(rows.begin(), rows.end(),
            [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    if ((rows[i] | rows[i + 1]) != rows[i]) return false;
  return true;
}

BipartiteGraph glue_at_vertex(const BipartiteGraph& g1, int x1,
                              const BipartiteGraph& g2, int x2) {
  if (x1 < 0 || x1 >= g1.p() || x2 < 0 || x2 >= g2.p())
    throw std::invalid_argument("glue_at_vertex: invalid X-vertex id");
  std::vector<Mask> adj(g1.adj());
  adj[static_cast<size_t>(x1)] |= g2.neighbors(x2) << g1.q();
  for (int i = 0; i < g2.p(); ++i)
    if (i != x2) adj.push_back(g2.neighbors(i) << g1.q());
  return BipartiteGraph{g1.p() + g2.p() - 1, g1.q() + g2.q(), std::move(adj)};
}

BipartiteGraph join_by_edge(const BipartiteGraph& g1, int u,
                            const BipartiteGraph& g2, int v) {
  if (u < 0 || u >= g1.p() || v < 0 || v >= g2.q())
    throw std::invalid_argument("join_by_edge: invalid vertex id");
  std::vector<Mask> adj(g1.adj());
  for (int i = 0; i < g2.p(); ++i) adj.push_back(g2.neighbors(i) << g1.q());
  adj[static_cast<size_t>(u)] |= Mask{1} << (g1.q() + v);
  return BipartiteGraph{g1.p() + g2.p(), g1.q() + g2.q(), std::move(adj)};
}

bool koo_condition(const BipartiteGraph& g) {
  auto cuts = cut_vertices(g);  // throws on disconnected input
  bool deg2_cut = false;
  for (int v : cuts) {
    int deg;
    if (v < g.p()) {
      deg = std::popcount(g.neighbors(v));
    } else {
      deg = 0;
      for (int i = 0; i < g.p(); ++i)
        if (g.has_edge(i, v - g.p())) ++deg;
    }
    if (deg == 2) {
      deg2_cut = true;
      break;
    }
  }
  // |E|/(pq) >= 68/125, cross-multiplied to stay exact.
  return deg2_cut && 125L * g.edge_count() >= 68L * g.p() * g.q();
}

BipartiteGraph swap_sides(const BipartiteGraph& g) {
  std::vector<Mask> adj(static_cast<size_t>(g.q()), 0u);
  for (int i = 0; i < g.p(); ++i)
    for (int j = 0; j < g.q(); ++j)
      if (g.has_edge(i, j)) adj[static_cast<size_t>(j)] |= Mask{1} << i;
  return BipartiteGraph{g.q(), g.p(), std::move(adj)};
}

BipartiteGraph relabel(const BipartiteGraph& g, const std::vector<int>& perm_x,
                       const std::vector<int>& perm_y) {
  if (perm_x.size() != static_cast<size_t>(g.p()) ||
      perm_y.size() != static_cast<size_t>(g.q()))
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Mask> adj(static_cast<size_t>(g.p()), 0u);
  for (int i = 0; i < g.p(); ++i) {
    Mask row = 0;
    for (int j = 0; j < g.q(); ++j)
      if (g.has_edge(i, j)) row |= Mask{1} << perm_y[static_cast<size_t>(j)];
    adj[static_cast<size_t>(perm_x[static_cast<size_t>(i)])] = row;
  }
  return BipartiteGraph{g.p(), g.q(), std::move(adj)};
}

namespace {

// Maximal adjacency-matrix form over all row and column permutations.
// Rows are compared as q-bit integers with the first column at the top bit,
// so the extremal form has weakly decreasing rows and a high-packed first
// row.  Columns are kept as an ordered list of interchangeable blocks that
// refine as rows are placed; branching happens only on genuinely tied rows.
struct Canonicalizer {
  int p, q;
  const std::vector<Mask>* rows;
  std::vector<Mask> best;
  bool have_best = false;

  // blocks: column masks, first block occupying the highest bit positions.
  void rec(std::vector<Mask>& blocks, Mask used, std::vector<Mask>& prefix) {
    int depth = static_cast<int>(prefix.size());
    if (depth == p) {
      if (!have_best || prefix > best) {
        best = prefix;
        have_best = true;
      }
      return;
    }
    // Value each unused row would take if placed next, packing its bits to
    // the top of every block.
    Mask best_val = 0;
    std::vector<std::pair<Mask, int>> candidates;  // (value, row index)
    for (int i = 0; i < p; ++i) {
      if ((used >> i) & 1u) continue;
      Mask r = (*rows)[static_cast<size_t>(i)];
      Mask val = 0;
      for (Mask b : blocks) {
        int s = std::popcount(b);
        int c = std::popcount(b & r);
        val = (val << s) | (low_bits(c) << (s - c));
      }
      if (val > best_val) best_val = val;
      candidates.emplace_back(val, i);
    }
    // Lexicographic pruning against the best complete candidate.
    if (have_best) {
      bool tied = std::equal(prefix.begin(), prefix.end(), best.begin());
      if (tied && best_val < best[static_cast<size_t>(depth)]) return;
    }
    std::vector<Mask> tried;
    for (auto [val, i] : candidates) {
      if (val != best_val) continue;
      Mask r = (*rows)[static_cast<size_t>(i)];
      if (std::find(tried.begin(), tried.end(), r) != tried.end())
        continue;  // equal rows span identical subtrees
      tried.push_back(r);
      std::vector<Mask> refined;
      refined.reserve(blocks.size() * 2);
      for (Mask b : blocks) {
        if (Mask in = b & r) refined.push_back(in);
        if (Mask out = b & ~r) refined.push_back(out);
      }
      prefix.push_back(val);
      rec(refined, used | (Mask{1} << i), prefix);
      prefix.pop_back();
    }
  }
};

std::vector<Mask> canon_rows(int p, int q, const std::vector<Mask>& rows) {
  if (p == 0) return {};
  Canonicalizer c{p, q, &rows, {}, false};
  std::vector<Mask> blocks{low_bits(q)};
  std::vector<Mask> prefix;
  prefix.reserve(static_cast<size_t>(p));
  c.rec(blocks, 0u, prefix);
  return c.best;
}

std::vector<Mask> canon_oriented(const BipartiteGraph& g) {
  // Orientation convention p <= q; when p == q the transpose competes too.
  const BipartiteGraph* oriented = &g;
  BipartiteGraph swapped{0, 0, {}};
  if (g.p() > g.q()) {
    swapped = swap_sides(g);
    oriented = &swapped;
  }
  std::vector<Mask> best = canon_rows(oriented->p(), oriented->q(), oriented->adj());
  if (g.p() == g.q() && g.p() > 0) {
    BipartiteGraph t = swap_sides(g);
    std::vector<Mask> alt = canon_rows(t.p(), t.q(), t.adj());
    if (alt > best) best = alt;
  }
  return best;
}

}  // namespace

CanonicalKey canonical_key(const BipartiteGraph& g) {
  if (g.n() > 0 && !is_connected(g))
    throw std::invalid_argument("canonical_key: disconnected input");
  std::vector<Mask> rows = canon_oriented(g);
  CanonicalKey key;
  key.reserve(2 + rows.size() * 2);
  key.push_back(static_cast<std::uint8_t>(std::min(g.p(), g.q())));
  key.push_back(static_cast<std::uint8_t>(std::max(g.p(), g.q())));
  for (Mask r : rows) {
    key.push_back(static_cast<std::uint8_t>(r >> 8));
    key.push_back(static_cast<std::uint8_t>(r & 0xffu));
  }
  return key;
}

bool is_canonical(const BipartiteGraph& g) {
  if (g.p() > g.q()) return false;
  const auto& rows = g.adj();
  if (!std::is_sorted(rows.rbegin(), rows.rend())) return false;
  return rows == canon_oriented(g);
}

std::vector<EnumShard> enumeration_shards(int n) {
  if (n < 2) throw std::invalid_argument("enumerate_connected: n must be >= 2");
  std::vector<EnumShard> shards;
  for (int p = 1; 2 * p <= n; ++p) {
    int q = n - p;
    for (int d = q; d >= 1; --d) shards.push_back({n, p, d});
  }
  return shards;
}

namespace {

void gen_rows(int p, int q, std::vector<Mask>& rows, bool require_biconnected,
              const std::function<void(const BipartiteGraph&)>& yield) {
  if (static_cast<int>(rows.size()) == p) {
    Mask covered = 0;
    for (Mask r : rows) covered |= r;
    if (covered != low_bits(q)) return;  // isolated Y vertex
    BipartiteGraph g{p, q, rows};
    if (!is_connected(g)) return;
    if (require_biconnected && !is_biconnected(g)) return;
    if (is_canonical(g)) yield(g);
    return;
  }
  for (Mask r = rows.back(); r >= 1; --r) {
    rows.push_back(r);
    gen_rows(p, q, rows, require_biconnected, yield);
    rows.pop_back();
  }
}

}  // namespace

void enumerate_shard(const EnumShard& shard, bool require_biconnected,
                     const std::function<void(const BipartiteGraph&)>& yield) {
  int p = shard.p, q = shard.n - shard.p;
  // Canonical forms have a high-packed first row of this exact degree.
  std::vector<Mask> rows{high_run(shard.first_degree, q)};
  gen_rows(p, q, rows, require_biconnected, yield);
}

void enumerate_connected(int n, bool require_biconnected,
                         const std::function<void(const BipartiteGraph&)>& yield) {
  for (const EnumShard& shard : enumeration_shards(n))
    enumerate_shard(shard, require_biconnected, yield);
}

}  // namespace ferrers
