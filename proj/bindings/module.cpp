// Python bindings for the main operations.  Exact integers cross the boundary
// as Python ints, exact rationals as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ferrers/bigraph.hpp"
#include "ferrers/campaigns.hpp"
#include "ferrers/exactcount.hpp"
#include "ferrers/graph6.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/spectral.hpp"

namespace py = pybind11;
using namespace ferrers;

namespace {

py::object py_int(const ExactInt& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object py_fraction(const ExactRational& v) {
  auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(v.get_num().get_str()) / fraction(v.get_den().get_str());
}

Partition make_partition(const std::vector<int>& parts) { return Partition{parts}; }

WeakSeq seq_from_ints(const std::vector<long>& v) {
  WeakSeq s;
  for (long x : v) s.emplace_back(x);
  return s;
}

py::dict verdict_dict(const Conjecture2Verdict& v) {
  py::dict out;
  switch (v.status) {
    case C2Status::HypothesisFailed:
      out["status"] = "HypothesisFailed";
      out["failed_hypothesis"] = v.failed_hypothesis;
      break;
    case C2Status::Holds:
      out["status"] = "Holds";
      break;
    case C2Status::Violated:
      out["status"] = "Violated";
      break;
  }
  if (v.status != C2Status::HypothesisFailed) {
    out["lhs"] = py_fraction(v.lhs);
    out["rhs"] = py_fraction(v.rhs);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(ferrers_lab, m) {
  m.doc() = "Exact toolkit for the Ferrers bound conjecture on bipartite graphs";

  py::class_<Partition>(m, "Partition")
      .def(py::init(&make_partition), py::arg("parts"))
      .def_property_readonly("parts", &Partition::parts)
      .def("sum", &Partition::sum)
      .def("__len__", &Partition::size)
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
      .def("__repr__",
           [](const Partition& p) { return "Partition(" + format_partition(p) + ")"; });

  py::implicitly_convertible<std::vector<int>, Partition>();

  m.def(
      "conjugate",
      [](const Partition& p) { return conjugate(p).parts(); }, py::arg("p"));
  m.def(
      "majorized_by",
      [](const std::vector<long>& u, const std::vector<long>& v) {
        return majorized_by(seq_from_ints(u), seq_from_ints(v));
      },
      py::arg("u"), py::arg("v"));
  m.def("is_bigraphic", &is_bigraphic, py::arg("a"), py::arg("b"));
  m.def(
      "partitions",
      [](long total, int parts, int max_part) {
        std::vector<Partition> out;
        enumerate_partitions(total, parts, max_part,
                             [&](const Partition& p) { out.push_back(p); });
        return out;
      },
      py::arg("total"), py::arg("exact_parts"), py::arg("max_part"));

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def_static("from_edges", &BipartiteGraph::from_edges, py::arg("p"),
                  py::arg("q"), py::arg("edges"))
      .def_property_readonly("p", &BipartiteGraph::p)
      .def_property_readonly("q", &BipartiteGraph::q)
      .def_property_readonly("n", &BipartiteGraph::n)
      .def("edges", &BipartiteGraph::edges)
      .def("edge_count", &BipartiteGraph::edge_count)
      .def("__eq__", [](const BipartiteGraph& a, const BipartiteGraph& b) { return a == b; })
      .def("__repr__", [](const BipartiteGraph& g) { return to_graph6(g); });

  m.def("ferrers_from_partition", &ferrers_from_partition, py::arg("lam"));
  m.def("degrees", &degrees, py::arg("g"));
  m.def("is_connected", &is_connected, py::arg("g"));
  m.def("cut_vertices", &cut_vertices, py::arg("g"));
  m.def("is_biconnected", &is_biconnected, py::arg("g"));
  m.def("has_induced_2K2", &has_induced_2K2, py::arg("g"));
  m.def("is_ferrers", &is_ferrers, py::arg("g"));
  m.def("glue_at_vertex", &glue_at_vertex, py::arg("g1"), py::arg("x1"),
        py::arg("g2"), py::arg("x2"));
  m.def("join_by_edge", &join_by_edge, py::arg("g1"), py::arg("u"), py::arg("g2"),
        py::arg("v"));
  m.def("koo_condition", &koo_condition, py::arg("g"));
  m.def("to_graph6", &to_graph6, py::arg("g"));
  m.def("from_graph6", &from_graph6, py::arg("text"));
  m.def("canonical_key",
        [](const BipartiteGraph& g) { return key_hex(canonical_key(g)); },
        py::arg("g"));
  m.def(
      "enumerate_connected",
      [](int n, bool biconnected) {
        std::vector<BipartiteGraph> out;
        enumerate_connected(n, biconnected,
                            [&](const BipartiteGraph& g) { out.push_back(g); });
        return out;
      },
      py::arg("n"), py::arg("require_biconnected") = false);

  m.def("spanning_tree_count",
        [](const BipartiteGraph& g) { return py_int(spanning_tree_count(g)); },
        py::arg("g"));
  m.def("ferrers_invariant",
        [](const BipartiteGraph& g) { return py_fraction(ferrers_invariant(g)); },
        py::arg("g"));
  m.def(
      "classify",
      [](const BipartiteGraph& g) {
        Classification c = classify(g);
        py::dict out;
        out["T"] = py_int(c.tree_count);
        out["F"] = py_fraction(c.ferrers_invariant);
        out["verdict"] = to_string(c.verdict);
        return out;
      },
      py::arg("g"));
  m.def("venkataramana_holds", &venkataramana_holds, py::arg("g"));

  m.def("laplacian_spectrum",
        [](const BipartiteGraph& g) { return laplacian_spectrum(g).eigenvalues; },
        py::arg("g"));
  m.def("spectral_tree_count", &spectral_tree_count, py::arg("g"));
  m.def("grone_merris_check", &grone_merris_check, py::arg("g"), py::arg("eps"));
  m.def("inequality1_check", &inequality1_check, py::arg("g"), py::arg("eps"));

  m.def(
      "check_conjecture2",
      [](const Partition& a, const Partition& b, const Partition& lam) {
        return verdict_dict(check_conjecture2_instance({a, b, lam}));
      },
      py::arg("a"), py::arg("b"), py::arg("lam"));
  m.def(
      "scan_conjecture2",
      [](int sum_max, int n_max) {
        py::list out;
        for (const auto& [inst, v] : scan_conjecture2(sum_max, n_max)) {
          py::dict d = verdict_dict(v);
          d["a"] = inst.a;
          d["b"] = inst.b;
          d["lam"] = inst.lam;
          out.append(d);
        }
        return out;
      },
      py::arg("sum_max"), py::arg("n_max"));
  m.def(
      "verify_conjecture1",
      [](int n_max, bool prune) {
        VerifyOptions opts;
        opts.n_max = n_max;
        opts.prune_cutvertex = prune;
        std::vector<py::dict> bad;
        CampaignReport report =
            verify_conjecture1(opts, [&](const VerificationRecord& rec) {
              if (rec.verdict == Verdict::Bad) {
                py::dict d;
                d["g6"] = to_graph6(rec.graph);
                d["T"] = py_int(rec.tree_count);
                d["F"] = py_fraction(rec.ferrers_invariant);
                bad.push_back(d);
              }
            });
        py::dict out;
        out["classes"] = report.total_classes;
        out["bad_count"] = report.total_bad;
        out["bad"] = bad;
        return out;
      },
      py::arg("n_max"), py::arg("prune") = false);
}
