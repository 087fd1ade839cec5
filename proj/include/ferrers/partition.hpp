#pragma once
// Integer partitions: conjugation, majorization (Marshall-Olkin convention,
// zero-padded to a common length), Gale-Ryser realizability, and bounded
// enumeration streams.

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

namespace ferrers {

// Weakly decreasing sequence of positive integers.  The empty partition
// (of 0) is valid.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long sum() const;
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Weakly decreasing sequence of nonnegative exact rationals.
using WeakSeq = std::vector<mpq_class>;

Partition conjugate(const Partition& p);

// u precedes v in the dominance order: every prefix sum of u is at most the
// corresponding prefix sum of v and the totals agree, after zero-padding both
// to the common length.  Unequal totals give false (incomparable), not an
// error.  Non-monotone or negative input throws std::invalid_argument.
bool majorized_by(const WeakSeq& u, const WeakSeq& v);
bool majorized_by(const Partition& u, const Partition& v);

// Gale-Ryser: (a, b) is realizable as the two degree sequences of a bipartite
// graph iff a is majorized by conjugate(b).
bool is_bigraphic(const Partition& a, const Partition& b);

// Yields every partition of `total` into exactly `exact_parts` positive parts,
// each at most `max_part`, in lexicographically decreasing order.
void enumerate_partitions(long total, int exact_parts, int max_part,
                          const std::function<void(const Partition&)>& yield);

// CLI/JSON text form: comma-separated decreasing integers, e.g. "3,3,2,1".
// The empty string parses to the empty partition.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

WeakSeq to_weak_seq(const Partition& p);

}  // namespace ferrers
