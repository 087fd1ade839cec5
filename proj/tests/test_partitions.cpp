#include "ferrers/partition.hpp"

#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace ferrers;

namespace {

std::vector<Partition> all_partitions_of(int m, int max_parts = 64) {
  std::vector<Partition> out;
  for (int parts = (m == 0 ? 0 : 1); parts <= std::min(m, max_parts); ++parts)
    enumerate_partitions(m, parts, m == 0 ? 1 : m,
                         [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace

TEST_CASE("conjugate examples") {
  CHECK(conjugate(Partition{{3, 3, 2, 1}}) == Partition{{4, 3, 2}});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{{2, 1, 1}}) == Partition{{3, 1}});
}

TEST_CASE("conjugation is an involution, sums up to 30") {
  for (int m = 0; m <= 30; ++m)
    for (const Partition& p : all_partitions_of(m)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(conjugate(p).sum() == p.sum());
    }
}

TEST_CASE("majorization examples") {
  CHECK(majorized_by(Partition{{2, 2, 2, 1, 1}}, Partition{{2, 2, 2, 2}}));
  CHECK(majorized_by(Partition{{2, 2, 2, 2}}, Partition{{5, 3}}));
  CHECK_FALSE(majorized_by(Partition{{3, 1}}, Partition{{2, 2}}));
  // unequal totals are incomparable, not an error
  CHECK_FALSE(majorized_by(Partition{{1}}, Partition{{2}}));
  CHECK_FALSE(majorized_by(Partition{{2}}, Partition{{1}}));
}

TEST_CASE("majorization rejects non-monotone input") {
  WeakSeq up{mpq_class(1), mpq_class(2)};
  WeakSeq ok{mpq_class(2), mpq_class(1)};
  CHECK_THROWS_AS(majorized_by(up, ok), std::invalid_argument);
  CHECK_THROWS_AS(majorized_by(ok, up), std::invalid_argument);
}

TEST_CASE("majorization is reflexive and a partial order on equal sums (m <= 10)") {
  for (int m = 1; m <= 10; ++m) {
    auto parts = all_partitions_of(m);
    for (const auto& p : parts) CHECK(majorized_by(p, p));
    for (const auto& u : parts)
      for (const auto& v : parts) {
        if (majorized_by(u, v) && majorized_by(v, u)) CHECK(u == v);
        for (const auto& w : parts)
          if (majorized_by(u, v) && majorized_by(v, w)) CHECK(majorized_by(u, w));
      }
  }
}

TEST_CASE("is_bigraphic examples") {
  CHECK(is_bigraphic(Partition{{2, 2}}, Partition{{2, 1, 1}}));
  CHECK(is_bigraphic(Partition{{3, 3, 2, 1}}, Partition{{4, 3, 2}}));
  CHECK_FALSE(is_bigraphic(Partition{{2, 2}}, Partition{{4}}));
}

TEST_CASE("Gale-Ryser agrees with brute-force realization, sums <= 8, <= 4 parts") {
  for (int m = 1; m <= 8; ++m)
    for (int mm = 1; mm <= 8; ++mm) {
      auto as = all_partitions_of(m, 4);
      auto bs = all_partitions_of(mm, 4);
      for (const auto& a : as)
        for (const auto& b : bs) {
          bool brute = (m == mm) && oracle::realizable_brute(a.parts(), b.parts());
          CHECK(is_bigraphic(a, b) == brute);
        }
    }
}

TEST_CASE("enumerate_partitions examples and ordering") {
  std::vector<Partition> got;
  enumerate_partitions(4, 2, 3, [&](const Partition& p) { got.push_back(p); });
  CHECK(got == std::vector<Partition>{Partition{{3, 1}}, Partition{{2, 2}}});

  got.clear();
  enumerate_partitions(0, 0, 1, [&](const Partition& p) { got.push_back(p); });
  CHECK(got == std::vector<Partition>{Partition{}});

  got.clear();
  enumerate_partitions(3, 3, 1, [&](const Partition& p) { got.push_back(p); });
  CHECK(got == std::vector<Partition>{Partition{{1, 1, 1}}});

  // lexicographically decreasing, no duplicates
  got.clear();
  enumerate_partitions(10, 4, 10, [&](const Partition& p) { got.push_back(p); });
  for (size_t i = 0; i + 1 < got.size(); ++i) CHECK(got[i].parts() > got[i + 1].parts());
}

TEST_CASE("partition text round trip") {
  CHECK(format_partition(parse_partition("3,3,2,1")) == "3,3,2,1");
  CHECK(parse_partition("") == Partition{});
  CHECK_THROWS(parse_partition("2,3"));  // increasing
  CHECK_THROWS(parse_partition("1,x"));
}
