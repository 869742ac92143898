#include "birkhoff/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace birkhoff {

Partition::Partition(std::vector<unsigned> parts, unsigned bound)
    : parts_(std::move(parts)), bound_(bound) {
  if (bound_ < 1) throw std::invalid_argument("partition bound must be >= 1");
  unsigned prev = bound_;
  unsigned w = 0;
  for (unsigned p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
    if (p > prev)
      throw std::invalid_argument("partition parts must be weakly decreasing and at most the bound");
    prev = p;
    w += p;
  }
  weight_ = w;
}

Partition Partition::parse(std::string_view text, unsigned bound) {
  std::vector<unsigned> parts;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) return Partition({}, bound);
  while (true) {
    skip_ws();
    if (i == text.size() || text[i] < '0' || text[i] > '9')
      throw ParseError("expected a positive integer part", i);
    unsigned long v = 0;
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + static_cast<unsigned long>(text[i] - '0');
      if (v > 1000000) throw ParseError("part out of range", start);
      ++i;
    }
    parts.push_back(static_cast<unsigned>(v));
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }
  try {
    return Partition(std::move(parts), bound);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> enumerate_partitions(unsigned d, unsigned m) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.emplace_back(cur, m);
      return;
    }
    for (unsigned k = std::min(max_part, remaining); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(d, m);
  return out;
}

Partition maximal_partition(unsigned d, unsigned m) {
  std::vector<unsigned> parts(d / m, m);
  if (d % m) parts.push_back(d % m);
  return Partition(std::move(parts), m);
}

bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.weight() != q.weight())
    throw UnequalWeightError("dominance comparison of partitions with different weights");
  unsigned long sp = 0, sq = 0;
  std::size_t n = std::max(p.length(), q.length());
  for (std::size_t i = 1; i <= n; ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp > sq) return false;
  }
  return true;
}

Partition partition_union(const Partition& p, const Partition& q) {
  if (p.bound() != q.bound()) throw ShapeMismatchError("partition union with different bounds");
  std::vector<unsigned> parts = p.parts();
  parts.insert(parts.end(), q.parts().begin(), q.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
  return Partition(std::move(parts), p.bound());
}

std::size_t nilpotent_hom_dim(const Partition& q, const Partition& p) {
  std::size_t total = 0;
  for (unsigned pi : p.parts())
    for (unsigned qj : q.parts()) total += std::min(pi, qj);
  return total;
}

}  // namespace birkhoff
