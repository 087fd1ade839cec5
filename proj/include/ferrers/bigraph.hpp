#pragma once
// Bipartite graphs as per-X-vertex neighbor bitsets, structural predicates,
// the partition-to-graph construction, vertex gluing and edge joins, and
// isomorph-rejecting enumeration of connected bipartite graphs.
//
// Vertex ids: X vertices are 0..p-1, Y vertices are p..p+q-1.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ferrers/partition.hpp"

namespace ferrers {

using Mask = std::uint32_t;

class BipartiteGraph {
 public:
  // adj[i] holds the Y-neighbors of x_i as a bitset over {0..q-1}.
  BipartiteGraph(int p, int q, std::vector<Mask> adj);

  static BipartiteGraph from_edges(int p, int q,
                                   const std::vector<std::pair<int, int>>& edges);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }
  int edge_count() const;
  Mask neighbors(int i) const { return adj_[static_cast<size_t>(i)]; }
  const std::vector<Mask>& adj() const { return adj_; }
  bool has_edge(int i, int j) const { return (adj_[static_cast<size_t>(i)] >> j) & 1u; }
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const BipartiteGraph&) const = default;

 private:
  int p_ = 0;
  int q_ = 0;
  std::vector<Mask> adj_;
};

// X- and Y-degree sequences, each sorted descending.  Zeros are kept, so the
// results are weakly decreasing but not always Partitions.
std::pair<std::vector<int>, std::vector<int>> degrees(const BipartiteGraph& g);

BipartiteGraph ferrers_from_partition(const Partition& lam);

bool is_connected(const BipartiteGraph& g);

// Vertices whose removal disconnects the graph; requires connected input.
std::vector<int> cut_vertices(const BipartiteGraph& g);

// Connected, at least 2 vertices, no cut vertex.  K2 counts as 2-connected.
bool is_biconnected(const BipartiteGraph& g);

bool has_induced_2K2(const BipartiteGraph& g);

// X-neighborhoods form a chain under inclusion.
bool is_ferrers(const BipartiteGraph& g);

// Identify X-vertex x1 of g1 with X-vertex x2 of g2.
BipartiteGraph glue_at_vertex(const BipartiteGraph& g1, int x1,
                              const BipartiteGraph& g2, int x2);

// Disjoint union plus one new edge from X-vertex u of g1 to Y-vertex v of g2.
BipartiteGraph join_by_edge(const BipartiteGraph& g1, int u,
                            const BipartiteGraph& g2, int v);

// Some cut vertex has degree exactly 2 and |E|/(p*q) >= 68/125, compared
// exactly as rationals.  Requires connected input.
bool koo_condition(const BipartiteGraph& g);

BipartiteGraph swap_sides(const BipartiteGraph& g);

// Relabel by permutations of X and Y: vertex x_i becomes x_{perm_x[i]}.
BipartiteGraph relabel(const BipartiteGraph& g, const std::vector<int>& perm_x,
                       const std::vector<int>& perm_y);

// Opaque, totally ordered; equal keys iff isomorphic (connected graphs).
using CanonicalKey = std::vector<std::uint8_t>;

CanonicalKey canonical_key(const BipartiteGraph& g);

// True iff g is the representative its own isomorphism class enumerates:
// p <= q, rows weakly decreasing, and the adjacency matrix is extremal over
// all row/column permutations (and the transpose when p == q).
bool is_canonical(const BipartiteGraph& g);

// One shard of the enumeration stream: all graphs with the given X-side size
// whose first X-neighborhood is the left-packed run of `first_degree` ones.
struct EnumShard {
  int n = 0;
  int p = 0;
  int first_degree = 0;
};

std::vector<EnumShard> enumeration_shards(int n);

void enumerate_shard(const EnumShard& shard, bool require_biconnected,
                     const std::function<void(const BipartiteGraph&)>& yield);

// Exactly one representative per isomorphism class of connected bipartite
// graphs on n vertices, deterministic order.  Requires n >= 2.
void enumerate_connected(int n, bool require_biconnected,
                         const std::function<void(const BipartiteGraph&)>& yield);

}  // namespace ferrers
