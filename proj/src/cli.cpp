#include "ferrers/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "ferrers/bigraph.hpp"
#include "ferrers/campaigns.hpp"
#include "ferrers/exactcount.hpp"
#include "ferrers/graph6.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/spectral.hpp"

namespace ferrers::cli {

namespace {

using nlohmann::ordered_json;

BipartiteGraph graph_from_json_text(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return BipartiteGraph::from_edges(j.at("p").get<int>(), j.at("q").get<int>(), edges);
}

ordered_json graph_to_json(const BipartiteGraph& g) {
  ordered_json edges = ordered_json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return {{"p", g.p()}, {"q", g.q()}, {"edges", edges}};
}

ordered_json partition_json(const Partition& p) {
  ordered_json out = ordered_json::array();
  for (int part : p.parts()) out.push_back(part);
  return out;
}

struct GraphInput {
  std::string json_text;
  std::string graph6_text;
  std::string partition_text;

  void attach(CLI::App* cmd, bool required = true) {
    auto* grp = cmd->add_option_group("graph input");
    grp->add_option("--graph", json_text,
                    "graph as JSON {\"p\":..,\"q\":..,\"edges\":[[i,j],..]}");
    grp->add_option("--graph6", graph6_text,
                    "graph as <graph6>:<bipartition mask>");
    grp->add_option("--partition", partition_text,
                    "build the Ferrers graph of this partition, e.g. 3,3,2,1");
    grp->require_option(required ? 1 : 0, 1);
  }

  BipartiteGraph load() const {
    if (!json_text.empty()) return graph_from_json_text(json_text);
    if (!graph6_text.empty()) return from_graph6(graph6_text);
    return ferrers_from_partition(parse_partition(partition_text));
  }
};

// --out sink; stdout when unset.  Campaign resume appends.
class OutputSink {
 public:
  OutputSink(const std::string& path, bool append) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(
          path, append ? std::ios::app : std::ios::trunc);
      if (!*file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void line(const ordered_json& j) { stream() << j.dump() << "\n"; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int worker_cap(int shards) {
  int cap = shards;
  if (const char* env = std::getenv("FERRERS_LAB_THREADS")) {
    int limit = std::atoi(env);
    if (limit >= 1) cap = std::min(cap, limit);
  }
  return std::max(1, cap);
}

ordered_json record_json(const VerificationRecord& rec) {
  ordered_json checks;
  for (const auto& [name, ok] : rec.checks) checks[name] = ok;
  return {{"key", key_hex(rec.key)},
          {"n", rec.n},
          {"p", rec.p},
          {"q", rec.q},
          {"g6", to_graph6(rec.graph)},
          {"T", rec.tree_count.get_str()},
          {"F", rational_string(rec.ferrers_invariant)},
          {"verdict", to_string(rec.verdict)},
          {"checks", checks}};
}

ordered_json level_json(const LevelSummary& s) {
  ordered_json per_pq = ordered_json::array();
  for (const auto& [pq, count] : s.per_pq)
    per_pq.push_back({{"p", pq.first}, {"q", pq.second}, {"classes", count}});
  ordered_json j = {{"n", s.n}, {"classes", s.classes}, {"bad", s.bad}};
  j["min_gap"] = s.min_gap ? ordered_json(rational_string(*s.min_gap)) : ordered_json();
  j["per_pq"] = per_pq;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for the Ferrers bound conjecture"};
  app.require_subcommand(1);

  int n_max = 8, max_cells = 12, sum_max = 4, shards = 1;
  bool prune = false, resume = false, biconnected = false, edge_join = false;
  double eps = 1e-9;
  std::uint64_t seed = 0;
  int x1 = 0, x2 = 0;
  std::string out_path, checkpoint_path;
  GraphInput gin, gin2;

  auto* verify = app.add_subcommand("verify", "exhaustively classify connected bipartite graphs");
  verify->add_option("--max-vertices", n_max, "largest vertex count")->required()
      ->check(CLI::Range(2, 31));
  verify->add_flag("--prune", prune, "restrict each level to 2-connected graphs");
  verify->add_option("--out", out_path, "JSONL output path (default stdout)");
  verify->add_option("--checkpoint", checkpoint_path, "checkpoint file");
  verify->add_flag("--resume", resume, "resume from --checkpoint");
  verify->add_option("--shards", shards, "parallel shard width")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "accepted for campaign reproducibility metadata");

  auto* feq = app.add_subcommand("ferrers-eq", "check exact T = F on all Ferrers graphs up to a cell budget");
  feq->add_option("--max-cells", max_cells, "largest partition sum")->required()
      ->check(CLI::PositiveNumber);
  feq->add_option("--out", out_path, "JSONL output path (default stdout)");

  auto* scan2 = app.add_subcommand("scan2", "scan partition/spectrum instances for conjecture-2 violations");
  scan2->add_option("--sum-max", sum_max, "largest edge sum")->required()
      ->check(CLI::PositiveNumber);
  scan2->add_option("--n-max", n_max, "largest n = p + q")->required()
      ->check(CLI::Range(2, 64));
  scan2->add_option("--out", out_path, "JSONL output path (default stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "exact T, F, and Good/Bad verdict for one graph");
  gin.attach(classify_cmd);
  classify_cmd->add_option("--out", out_path, "JSONL output path (default stdout)");

  auto* treecount = app.add_subcommand("treecount", "exact spanning tree count");
  gin.attach(treecount);
  treecount->add_option("--out", out_path, "JSONL output path (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum, descending");
  gin.attach(spectrum);
  spectrum->add_option("--eps", eps, "tolerance reported with the spectrum")->check(CLI::PositiveNumber);
  spectrum->add_option("--out", out_path, "JSONL output path (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "one representative per isomorphism class, sizes 2..N");
  enumerate->add_option("--max-vertices", n_max, "largest vertex count")->required()
      ->check(CLI::Range(2, 31));
  enumerate->add_flag("--prune", biconnected, "2-connected representatives only");
  enumerate->add_option("--out", out_path, "JSONL output path (default stdout)");

  auto* glue = app.add_subcommand("glue", "glue two graphs at X-vertices (or join by a new edge)");
  gin.attach(glue);
  glue->add_option("--graph2", gin2.json_text, "second graph as JSON")->required();
  glue->add_option("--x1", x1, "X-vertex of the first graph (with --edge: X endpoint)");
  glue->add_option("--x2", x2, "X-vertex of the second graph (with --edge: Y endpoint)");
  glue->add_flag("--edge", edge_join, "join by a new edge instead of identifying vertices");
  glue->add_option("--out", out_path, "JSONL output path (default stdout)");

  auto* koo = app.add_subcommand("koo", "degree-2 cutvertex + density condition for one graph");
  gin.attach(koo);
  koo->add_option("--out", out_path, "JSONL output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, std::cout, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) {
      OutputSink sink(out_path, resume);
      VerifyOptions opts;
      opts.n_max = n_max;
      opts.prune_cutvertex = prune;
      opts.workers = worker_cap(shards);
      opts.checkpoint_path = checkpoint_path;
      opts.resume = resume;
      CampaignReport report = verify_conjecture1(
          opts, [&](const VerificationRecord& rec) { sink.line(record_json(rec)); });
      ordered_json summary = {{"campaign", "verify"},
                              {"n_max", report.n_max},
                              {"pruned", report.pruned},
                              {"seed", seed},
                              {"classes", report.total_classes},
                              {"bad_count", report.total_bad},
                              {"levels", ordered_json::array()}};
      for (const auto& s : report.levels) summary["levels"].push_back(level_json(s));
      sink.line(summary);
      err << "verify: " << report.total_classes << " classes up to n=" << report.n_max
          << ", " << report.total_bad << " Ferrers-bad\n";
      return report.total_bad > 0 ? kExitFindings : kExitOk;
    }

    if (*feq) {
      OutputSink sink(out_path, false);
      EqualitySweepReport report = verify_ferrers_equality(max_cells);
      ordered_json j = {{"campaign", "ferrers-eq"},
                        {"max_cells", max_cells},
                        {"partitions_checked", report.partitions_checked},
                        {"failures", ordered_json::array()}};
      for (const auto& lam : report.failures) j["failures"].push_back(partition_json(lam));
      sink.line(j);
      err << "ferrers-eq: " << report.partitions_checked << " partitions, "
          << report.failures.size() << " failures\n";
      return report.failures.empty() ? kExitOk : kExitFindings;
    }

    if (*scan2) {
      OutputSink sink(out_path, false);
      auto violations = scan_conjecture2(sum_max, n_max);
      for (const auto& [inst, v] : violations)
        sink.line({{"a", partition_json(inst.a)},
                   {"b", partition_json(inst.b)},
                   {"lam", partition_json(inst.lam)},
                   {"lhs", rational_string(v.lhs)},
                   {"rhs", rational_string(v.rhs)},
                   {"status", "Violated"}});
      sink.line({{"campaign", "scan2"},
                 {"sum_max", sum_max},
                 {"n_max", n_max},
                 {"violations", violations.size()}});
      err << "scan2: " << violations.size() << " violated instances\n";
      return violations.empty() ? kExitOk : kExitFindings;
    }

    if (*classify_cmd) {
      OutputSink sink(out_path, false);
      Classification c = classify(gin.load());
      sink.line({{"T", c.tree_count.get_str()},
                 {"F", rational_string(c.ferrers_invariant)},
                 {"verdict", to_string(c.verdict)}});
      return c.verdict == Verdict::Bad ? kExitFindings : kExitOk;
    }

    if (*treecount) {
      OutputSink sink(out_path, false);
      sink.line({{"T", spanning_tree_count(gin.load()).get_str()}});
      return kExitOk;
    }

    if (*spectrum) {
      OutputSink sink(out_path, false);
      SpectrumVector s = laplacian_spectrum(gin.load());
      ordered_json eig = ordered_json::array();
      for (double x : s.eigenvalues) eig.push_back(x);
      sink.line({{"eigenvalues", eig}, {"tolerance", s.tolerance}});
      return kExitOk;
    }

    if (*enumerate) {
      OutputSink sink(out_path, false);
      std::uint64_t total = 0;
      for (int n = 2; n <= n_max; ++n)
        enumerate_connected(n, biconnected, [&](const BipartiteGraph& g) {
          ++total;
          sink.line({{"n", g.n()},
                     {"p", g.p()},
                     {"q", g.q()},
                     {"key", key_hex(canonical_key(g))},
                     {"g6", to_graph6(g)}});
        });
      err << "enumerate: " << total << " classes\n";
      return kExitOk;
    }

    if (*glue) {
      OutputSink sink(out_path, false);
      BipartiteGraph g1 = gin.load();
      BipartiteGraph g2 = graph_from_json_text(gin2.json_text);
      BipartiteGraph merged = edge_join ? join_by_edge(g1, x1, g2, x2)
                                        : glue_at_vertex(g1, x1, g2, x2);
      Classification c = classify(merged);
      ordered_json j = graph_to_json(merged);
      j["T"] = c.tree_count.get_str();
      j["F"] = rational_string(c.ferrers_invariant);
      j["verdict"] = to_string(c.verdict);
      sink.line(j);
      return c.verdict == Verdict::Bad ? kExitFindings : kExitOk;
    }

    if (*koo) {
      OutputSink sink(out_path, false);
      BipartiteGraph g = gin.load();
      bool cond = koo_condition(g);
      Classification c = classify(g);
      sink.line({{"koo_condition", cond}, {"verdict", to_string(c.verdict)}});
      return c.verdict == Verdict::Bad ? kExitFindings : kExitOk;
    }
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cerr);
}

}  // namespace ferrers::cli
