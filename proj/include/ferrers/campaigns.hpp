#pragma once
// Verification drivers: the exhaustive Ferrers-bound search with optional
// cut-vertex pruning (sound because levels run in increasing size), the
// Ferrers-graph equality sweep, the partition-level counterexample scanner,
// and randomized structural-property sweeps.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ferrers/bigraph.hpp"
#include "ferrers/exactcount.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

struct VerificationRecord {
  CanonicalKey key;
  int n = 0, p = 0, q = 0;
  ExactInt tree_count;
  ExactRational ferrers_invariant;
  Verdict verdict = Verdict::Good;
  // Named side-checks: grone_merris, venkataramana, inequality1, and
  // ferrers_equality when the graph is Ferrers.
  std::map<std::string, bool> checks;
  BipartiteGraph graph{0, 0, {}};
};

struct LevelSummary {
  int n = 0;
  std::uint64_t classes = 0;
  std::uint64_t bad = 0;
  // Minimum of F - T over the level; unset when the level is empty.
  std::optional<ExactRational> min_gap;
  std::map<std::pair<int, int>, std::uint64_t> per_pq;
};

struct CampaignReport {
  int n_max = 0;
  bool pruned = false;
  std::vector<LevelSummary> levels;
  std::uint64_t total_classes = 0;
  std::uint64_t total_bad = 0;
};

struct VerifyOptions {
  int n_max = 2;
  bool prune_cutvertex = false;
  int workers = 1;
  // Checkpoint file; written atomically after each completed shard when set.
  std::string checkpoint_path;
  bool resume = false;
};

// Classifies every enumerated connected bipartite graph of sizes 2..n_max,
// streaming one record per graph in deterministic order.  With pruning, each
// level above the smallest is restricted to 2-connected graphs.
CampaignReport verify_conjecture1(
    const VerifyOptions& opts,
    const std::function<void(const VerificationRecord&)>& on_record);

struct EqualitySweepReport {
  std::uint64_t partitions_checked = 0;
  std::vector<Partition> failures;
};

// Asserts exact T = F on ferrers_from_partition(lam) for every partition with
// 1 <= sum(lam) <= max_cells.
EqualitySweepReport verify_ferrers_equality(int max_cells);

struct Conjecture2Instance {
  Partition a;  // degrees of the p X-vertices; sum(a) = |E|
  Partition b;  // degrees of the q Y-vertices
  Partition lam;  // candidate spectrum, n-1 positive integers
  int p() const { return a.size(); }
  int q() const { return b.size(); }
  int n() const { return p() + q(); }
};

enum class C2Status { HypothesisFailed, Holds, Violated };

struct Conjecture2Verdict {
  C2Status status = C2Status::Holds;
  // For HypothesisFailed: which hypothesis broke, in check order:
  // "shape", "gale_ryser", "d_below_lambda", "lambda_below_dstar".
  std::string failed_hypothesis;
  ExactRational lhs;  // (1/n) prod lam_i, when hypotheses hold
  ExactRational rhs;  // (1/(p q)) prod d_i
};

Conjecture2Verdict check_conjecture2_instance(const Conjecture2Instance& inst);

// All hypothesis-satisfying integer instances with sum(a) = sum(b) <= sum_max
// and n <= n_max whose conclusion fails, deterministic order.  Sides are
// normalized to p <= q (the predicate is symmetric under side swap).
std::vector<std::pair<Conjecture2Instance, Conjecture2Verdict>>
scan_conjecture2(int sum_max, int n_max);

struct StructuralSweepReport {
  std::uint64_t glue_trials = 0;
  std::uint64_t join_trials = 0;
  std::uint64_t koo_graphs = 0;
  std::vector<BipartiteGraph> counterexamples;
};

// Randomized glue/edge-join trials over Good graphs of size <= n_max plus an
// exhaustive Koo-condition sweep; every result is expected Good.
StructuralSweepReport structural_property_sweep(int n_max, int trials,
                                                std::uint64_t seed);

std::string key_hex(const CanonicalKey& key);

}  // namespace ferrers
