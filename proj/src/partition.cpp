#include "ferrers/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ferrers {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition part < 1");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition not weakly decreasing");
  }
}

long Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return Partition{};
  std::vector<int> out(static_cast<size_t>(p[0]), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<size_t>(j)];
  return Partition{std::move(out)};
}

static void check_weak_seq(const WeakSeq& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) throw std::invalid_argument("weak sequence entry < 0");
    if (i > 0 && s[i] > s[i - 1])
      throw std::invalid_argument("weak sequence not weakly decreasing");
  }
}

bool majorized_by(const WeakSeq& u, const WeakSeq& v) {
  check_weak_seq(u);
  check_weak_seq(v);
  const size_t len = std::max(u.size(), v.size());
  mpq_class su = 0, sv = 0;
  bool prefixes_ok = true;
  for (size_t i = 0; i < len; ++i) {
    if (i < u.size()) su += u[i];
    if (i < v.size()) sv += v[i];
    if (su > sv) prefixes_ok = false;
  }
  return prefixes_ok && su == sv;
}

bool majorized_by(const Partition& u, const Partition& v) {
  return majorized_by(to_weak_seq(u), to_weak_seq(v));
}

bool is_bigraphic(const Partition& a, const Partition& b) {
  return majorized_by(a, conjugate(b));
}

namespace {

void enum_rec(long total, int parts_left, int max_part, std::vector<int>& acc,
              const std::function<void(const Partition&)>& yield) {
  if (parts_left == 0) {
    if (total == 0) yield(Partition{acc});
    return;
  }
  // Each remaining part is in [1, hi]; largest-first keeps the stream in
  // lexicographically decreasing order.
  long hi = std::min<long>(max_part, total - (parts_left - 1));
  for (long part = hi; part >= 1; --part) {
    if (part * parts_left < total) break;
    acc.push_back(static_cast<int>(part));
    enum_rec(total - part, parts_left - 1, static_cast<int>(part), acc, yield);
    acc.pop_back();
  }
}

}  // namespace

void enumerate_partitions(long total, int exact_parts, int max_part,
                          const std::function<void(const Partition&)>& yield) {
  if (total < 0 || exact_parts < 0 || max_part < 1)
    throw std::invalid_argument("enumerate_partitions: bad bounds");
  std::vector<int> acc;
  enum_rec(total, exact_parts, max_part, acc, yield);
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  if (!text.empty()) {
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("bad partition token: " + tok);
      parts.push_back(v);
    }
  }
  return Partition{std::move(parts)};
}

std::string format_partition(const Partition& p) {
  std::ostringstream out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out << ',';
    out << p[i];
  }
  return out.str();
}

WeakSeq to_weak_seq(const Partition& p) {
  WeakSeq s;
  s.reserve(static_cast<size_t>(p.size()));
  for (int part : p.parts()) s.emplace_back(part);
  return s;
}

}  // namespace ferrers
