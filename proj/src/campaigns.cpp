#include "ferrers/campaigns.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ferrers/spectral.hpp"
#include "json.hpp"

namespace ferrers {

namespace {

using nlohmann::json;

VerificationRecord make_record(const BipartiteGraph& g) {
  VerificationRecord rec;
  rec.key = canonical_key(g);
  rec.n = g.n();
  rec.p = g.p();
  rec.q = g.q();
  Classification c = classify(g);
  rec.tree_count = c.tree_count;
  rec.ferrers_invariant = c.ferrers_invariant;
  rec.verdict = c.verdict;
  double eps = 1e-7 * 2.0 * g.edge_count();
  rec.checks["grone_merris"] = grone_merris_check(g, eps);
  rec.checks["venkataramana"] = venkataramana_holds(g);
  rec.checks["inequality1"] = inequality1_check(g, eps);
  if (is_ferrers(g))
    rec.checks["ferrers_equality"] =
        ExactRational(rec.tree_count) == rec.ferrers_invariant;
  rec.graph = g;
  return rec;
}

json summary_to_json(const LevelSummary& s) {
  json per_pq = json::array();
  for (const auto& [pq, count] : s.per_pq)
    per_pq.push_back({pq.first, pq.second, count});
  return {{"n", s.n},
          {"classes", s.classes},
          {"bad", s.bad},
          {"min_gap", s.min_gap ? json(rational_string(*s.min_gap)) : json()},
          {"per_pq", per_pq}};
}

LevelSummary summary_from_json(const json& j) {
  LevelSummary s;
  s.n = j.at("n").get<int>();
  s.classes = j.at("classes").get<std::uint64_t>();
  s.bad = j.at("bad").get<std::uint64_t>();
  if (!j.at("min_gap").is_null()) {
    std::string text = j.at("min_gap").get<std::string>();
    s.min_gap = ExactRational(text);
    s.min_gap->canonicalize();
  }
  for (const auto& e : j.at("per_pq"))
    s.per_pq[{e[0].get<int>(), e[1].get<int>()}] = e[2].get<std::uint64_t>();
  return s;
}

void merge_into(LevelSummary& acc, const LevelSummary& part) {
  acc.classes += part.classes;
  acc.bad += part.bad;
  if (part.min_gap && (!acc.min_gap || *part.min_gap < *acc.min_gap))
    acc.min_gap = part.min_gap;
  for (const auto& [pq, count] : part.per_pq) acc.per_pq[pq] += count;
}

struct Checkpoint {
  int n_max = 0;
  bool prune = false;
  std::vector<LevelSummary> levels_done;
  int current_level = 0;
  int shards_done = 0;
  LevelSummary partial;
};

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
  json j = {{"n_max", cp.n_max},
            {"prune", cp.prune},
            {"current_level", cp.current_level},
            {"shards_done", cp.shards_done},
            {"partial", summary_to_json(cp.partial)},
            {"levels_done", json::array()}};
  for (const auto& s : cp.levels_done) j["levels_done"].push_back(summary_to_json(s));
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
    out << j.dump() << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot replace checkpoint: " + path);
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("unreadable checkpoint: " + path);
  json j;
  in >> j;
  Checkpoint cp;
  cp.n_max = j.at("n_max").get<int>();
  cp.prune = j.at("prune").get<bool>();
  cp.current_level = j.at("current_level").get<int>();
  cp.shards_done = j.at("shards_done").get<int>();
  cp.partial = summary_from_json(j.at("partial"));
  for (const auto& e : j.at("levels_done")) cp.levels_done.push_back(summary_from_json(e));
  return cp;
}

struct ShardResult {
  std::vector<VerificationRecord> records;
  LevelSummary partial;
};

ShardResult run_shard(const EnumShard& shard, bool biconnected_only) {
  ShardResult out;
  out.partial.n = shard.n;
  enumerate_shard(shard, biconnected_only, [&](const BipartiteGraph& g) {
    VerificationRecord rec = make_record(g);
    ++out.partial.classes;
    if (rec.verdict == Verdict::Bad) ++out.partial.bad;
    ExactRational gap = rec.ferrers_invariant - ExactRational(rec.tree_count);
    if (!out.partial.min_gap || gap < *out.partial.min_gap) out.partial.min_gap = gap;
    ++out.partial.per_pq[{g.p(), g.q()}];
    out.records.push_back(std::move(rec));
  });
  return out;
}

}  // namespace

CampaignReport verify_conjecture1(
    const VerifyOptions& opts,
    const std::function<void(const VerificationRecord&)>& on_record) {
  if (opts.n_max < 2) throw std::invalid_argument("verify_conjecture1: n_max < 2");
  const int workers = std::max(1, opts.workers);

  Checkpoint cp;
  cp.n_max = opts.n_max;
  cp.prune = opts.prune_cutvertex;
  cp.current_level = 2;
  if (opts.resume && !opts.checkpoint_path.empty()) {
    Checkpoint loaded = read_checkpoint(opts.checkpoint_path);
    if (loaded.n_max != opts.n_max || loaded.prune != opts.prune_cutvertex)
      throw std::runtime_error("checkpoint does not match requested campaign");
    cp = loaded;
  }

  for (int n = cp.current_level; n <= opts.n_max; ++n) {
    if (n != cp.current_level) {
      cp.current_level = n;
      cp.shards_done = 0;
      cp.partial = LevelSummary{};
      cp.partial.n = n;
    }
    cp.partial.n = n;
    std::vector<EnumShard> shards = enumeration_shards(n);
    size_t next = static_cast<size_t>(cp.shards_done);
    while (next < shards.size()) {
      size_t chunk = std::min<size_t>(static_cast<size_t>(workers), shards.size() - next);
      std::vector<std::future<ShardResult>> futs;
      for (size_t k = 0; k < chunk; ++k)
        futs.push_back(std::async(chunk == 1 ? std::launch::deferred : std::launch::async,
                                  run_shard, shards[next + k], opts.prune_cutvertex));
      for (size_t k = 0; k < chunk; ++k) {
        ShardResult res = futs[k].get();
        for (const auto& rec : res.records) on_record(rec);
        merge_into(cp.partial, res.partial);
      }
      next += chunk;
      cp.shards_done = static_cast<int>(next);
      if (!opts.checkpoint_path.empty()) write_checkpoint(opts.checkpoint_path, cp);
    }
    cp.levels_done.push_back(cp.partial);
    cp.current_level = n + 1;
    cp.shards_done = 0;
    cp.partial = LevelSummary{};
    if (!opts.checkpoint_path.empty() && n < opts.n_max)
      write_checkpoint(opts.checkpoint_path, cp);
  }

  CampaignReport report;
  report.n_max = opts.n_max;
  report.pruned = opts.prune_cutvertex;
  report.levels = cp.levels_done;
  for (const auto& s : report.levels) {
    report.total_classes += s.classes;
    report.total_bad += s.bad;
  }
  return report;
}

EqualitySweepReport verify_ferrers_equality(int max_cells) {
  if (max_cells < 1) throw std::invalid_argument("verify_ferrers_equality: max_cells < 1");
  EqualitySweepReport report;
  for (int m = 1; m <= max_cells; ++m)
    for (int parts = 1; parts <= m; ++parts)
      enumerate_partitions(m, parts, m, [&](const Partition& lam) {
        ++report.partitions_checked;
        Classification c = classify(ferrers_from_partition(lam));
        if (ExactRational(c.tree_count) != c.ferrers_invariant)
          report.failures.push_back(lam);
      });
  return report;
}

Conjecture2Verdict check_conjecture2_instance(const Conjecture2Instance& inst) {
  Conjecture2Verdict v;
  const int n = inst.n();
  if (inst.p() < 1 || inst.q() < 1 || inst.lam.size() != n - 1) {
    v.status = C2Status::HypothesisFailed;
    v.failed_hypothesis = "shape";
    return v;
  }
  if (!is_bigraphic(inst.a, inst.b)) {
    v.status = C2Status::HypothesisFailed;
    v.failed_hypothesis = "gale_ryser";
    return v;
  }
  std::vector<int> merged(inst.a.parts());
  merged.insert(merged.end(), inst.b.parts().begin(), inst.b.parts().end());
  std::sort(merged.rbegin(), merged.rend());
  Partition d{merged};
  if (!majorized_by(d, inst.lam)) {
    v.status = C2Status::HypothesisFailed;
    v.failed_hypothesis = "d_below_lambda";
    return v;
  }
  if (!majorized_by(inst.lam, conjugate(d))) {
    v.status = C2Status::HypothesisFailed;
    v.failed_hypothesis = "lambda_below_dstar";
    return v;
  }
  v.lhs = ExactRational(1, n);
  for (int x : inst.lam.parts()) v.lhs *= x;
  v.rhs = ExactRational(1, static_cast<long>(inst.p()) * inst.q());
  for (int x : merged) v.rhs *= x;
  v.lhs.canonicalize();
  v.rhs.canonicalize();
  v.status = v.lhs <= v.rhs ? C2Status::Holds : C2Status::Violated;
  return v;
}

std::vector<std::pair<Conjecture2Instance, Conjecture2Verdict>>
scan_conjecture2(int sum_max, int n_max) {
  if (sum_max < 1 || n_max < 2) throw std::invalid_argument("scan_conjecture2: bad bounds");
  std::vector<std::pair<Conjecture2Instance, Conjecture2Verdict>> out;
  for (int m = 1; m <= sum_max; ++m)
    for (int n = 2; n <= n_max; ++n)
      for (int p = 1; 2 * p <= n; ++p) {
        int q = n - p;
        enumerate_partitions(m, p, q, [&](const Partition& a) {
          enumerate_partitions(m, q, p, [&](const Partition& b) {
            // sides are interchangeable; when p == q keep one ordering
            if (p == q && a.parts() < b.parts()) return;
            if (!is_bigraphic(a, b)) return;
            // lam_1 <= n is forced by lam <= d* (d has n positive parts)
            enumerate_partitions(2L * m, n - 1, std::min(2 * m, n),
                                 [&](const Partition& lam) {
              Conjecture2Instance inst{a, b, lam};
              Conjecture2Verdict v = check_conjecture2_instance(inst);
              if (v.status == C2Status::Violated) out.emplace_back(inst, v);
            });
          });
        });
      }
  return out;
}

StructuralSweepReport structural_property_sweep(int n_max, int trials,
                                                std::uint64_t seed) {
  StructuralSweepReport report;
  std::vector<BipartiteGraph> good;
  for (int n = 2; n <= n_max; ++n)
    enumerate_connected(n, false, [&](const BipartiteGraph& g) {
      if (classify(g).verdict == Verdict::Good) good.push_back(g);
      ++report.koo_graphs;
      if (koo_condition(g) && classify(g).verdict == Verdict::Bad)
        report.counterexamples.push_back(g);
    });

  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t bound) {
    return static_cast<int>(rng() % bound);
  };
  for (int t = 0; t < trials; ++t) {
    const BipartiteGraph& g1 = good[static_cast<size_t>(pick(good.size()))];
    const BipartiteGraph& g2 = good[static_cast<size_t>(pick(good.size()))];
    int x1 = pick(static_cast<std::uint64_t>(g1.p()));
    int x2 = pick(static_cast<std::uint64_t>(g2.p()));
    BipartiteGraph glued = glue_at_vertex(g1, x1, g2, x2);
    ++report.glue_trials;
    if (classify(glued).verdict == Verdict::Bad) report.counterexamples.push_back(glued);

    int u = pick(static_cast<std::uint64_t>(g1.p()));
    int v = pick(static_cast<std::uint64_t>(g2.q()));
    BipartiteGraph joined = join_by_edge(g1, u, g2, v);
    ++report.join_trials;
    if (classify(joined).verdict == Verdict::Bad) report.counterexamples.push_back(joined);
  }
  return report;
}

std::string key_hex(const CanonicalKey& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (std::uint8_t b : key) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

}  // namespace ferrers
