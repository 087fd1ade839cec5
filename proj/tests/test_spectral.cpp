#include "ferrers/spectral.hpp"

#include <cmath>

#include "doctest.h"
#include "ferrers/exactcount.hpp"

using namespace ferrers;

namespace {

BipartiteGraph k2() { return BipartiteGraph::from_edges(1, 1, {{0, 0}}); }

BipartiteGraph c4() {
  return BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

BipartiteGraph c6() {
  return BipartiteGraph::from_edges(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}});
}

BipartiteGraph k13() {
  return BipartiteGraph::from_edges(1, 3, {{0, 0}, {0, 1}, {0, 2}});
}

BipartiteGraph fig1() { return ferrers_from_partition(Partition{{3, 3, 2, 1}}); }

void check_spectrum(const BipartiteGraph& g, const std::vector<double>& expect) {
  SpectrumVector s = laplacian_spectrum(g);
  REQUIRE(s.eigenvalues.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i)
    CHECK(s.eigenvalues[i] == doctest::Approx(expect[i]).epsilon(1e-9));
}

std::vector<BipartiteGraph> enumerate_all(int n) {
  std::vector<BipartiteGraph> out;
  enumerate_connected(n, false, [&](const BipartiteGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace

TEST_CASE("spectra of known graphs") {
  check_spectrum(k2(), {2, 0});
  check_spectrum(c4(), {4, 2, 2, 0});
  check_spectrum(k13(), {4, 1, 1, 0});
}

TEST_CASE("spectral tree count") {
  CHECK(spectral_tree_count(c4()) == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(spectral_tree_count(k2()) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(spectral_tree_count(fig1()) == doctest::Approx(36.0).epsilon(1e-4));
  CHECK_THROWS_AS(spectral_tree_count(BipartiteGraph::from_edges(2, 2, {{0, 0}, {1, 1}})),
                  std::invalid_argument);
}

TEST_CASE("grone-merris hand examples") {
  CHECK(grone_merris_check(c4(), 1e-9));
  CHECK(grone_merris_check(k2(), 1e-9));
  CHECK(grone_merris_check(k13(), 1e-9));
}

TEST_CASE("trace identity and Grone-Merris over all graphs, n <= 7") {
  for (int n = 2; n <= 7; ++n)
    for (const BipartiteGraph& g : enumerate_all(n)) {
      SpectrumVector s = laplacian_spectrum(g);
      double trace = 0;
      for (double x : s.eigenvalues) trace += x;
      CHECK(std::abs(trace - 2.0 * g.edge_count()) <= s.tolerance);
      CHECK(std::abs(s.eigenvalues.back()) <= s.tolerance);
      CHECK(grone_merris_check(g, 1e-7 * 2.0 * g.edge_count()));
    }
}

TEST_CASE("spectral count matches exact count, n <= 7") {
  for (int n = 2; n <= 7; ++n)
    for (const BipartiteGraph& g : enumerate_all(n)) {
      double exact = mpq_class(spanning_tree_count(g)).get_d();
      double rel = std::abs(spectral_tree_count(g) - exact) / std::max(1.0, exact);
      CHECK(rel <= 1e-6);
    }
}

TEST_CASE("inequality1 examples and agreement with exact verdicts") {
  CHECK(inequality1_check(c6(), 1e-9));
  CHECK(inequality1_check(c4(), 1e-9));
  CHECK(inequality1_check(fig1(), 1e-7));
  for (int n = 2; n <= 7; ++n)
    for (const BipartiteGraph& g : enumerate_all(n)) {
      bool spectral_ok = inequality1_check(g, 1e-7 * 2.0 * g.edge_count());
      CHECK(spectral_ok == (classify(g).verdict == Verdict::Good));
    }
}
