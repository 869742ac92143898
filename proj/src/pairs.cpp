#include "birkhoff/pairs.hpp"

#include <algorithm>
#include <cassert>

namespace birkhoff {

const char* pair_type_name(PairType t) {
  switch (t) {
    case PairType::MonoOnly: return "mono";
    case PairType::EpiOnly: return "epi";
    case PairType::Both: return "both";
    case PairType::Neither: return "neither";
  }
  return "?";
}

PartitionPair::PartitionPair(Partition p_, Partition q_) : p(std::move(p_)), q(std::move(q_)) {
  if (p.bound() != q.bound()) throw ShapeMismatchError("partition pair with different bounds");
}

PartitionPair parse_pair(std::string_view text, unsigned bound) {
  std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected '|' separating the two partitions", text.size());
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("more than one '|'", text.find('|', bar + 1));
  Partition p = Partition::parse(text.substr(0, bar), bound);
  Partition q = [&] {
    try {
      return Partition::parse(text.substr(bar + 1), bound);
    } catch (const ParseError& e) {
      throw ParseError("in second component: " + std::string(e.what()), bar + 1 + e.position);
    }
  }();
  return PartitionPair(std::move(p), std::move(q));
}

PairType classify_pair(const Partition& p, const Partition& q) {
  if (p.bound() != q.bound()) throw ShapeMismatchError("pair classification with different bounds");
  std::size_t n = std::max(p.length(), q.length()) + 1;
  bool mono = true, epi = true;
  for (std::size_t i = 1; i <= n; ++i) {
    if (p.part(i) < q.part(i) || q.part(i) < p.part(i + 1)) mono = false;
    if (q.part(i) < p.part(i) || p.part(i) < q.part(i + 1)) epi = false;
  }
  if (mono && epi) return PairType::Both;
  if (mono) return PairType::MonoOnly;
  if (epi) return PairType::EpiOnly;
  return PairType::Neither;
}

bool is_indecomposable_pair(const Partition& p, const Partition& q) {
  if (p.bound() != q.bound()) throw ShapeMismatchError("pair test with different bounds");
  const std::size_t lp = p.length(), lq = q.length();
  if (lp == 1 && lq == 1 && p.part(1) == q.part(1)) return true;  // (n) = (n)
  auto strict_chain = [](const Partition& a, const Partition& b) {
    // a1 > b1 > a2 > b2 > ..., with len(a) = len(b) or len(b) + 1
    const std::size_t la = a.length(), lb = b.length();
    if (la == 0 || (la != lb && la != lb + 1)) return false;
    for (std::size_t i = 1; i <= lb; ++i)
      if (a.part(i) <= b.part(i)) return false;
    for (std::size_t i = 1; i + 1 <= la; ++i)
      if (b.part(i) <= a.part(i + 1)) return false;
    return true;
  };
  return strict_chain(p, q) || strict_chain(q, p);
}

PartitionPair pair_union(const PartitionPair& a, const PartitionPair& b) {
  return PartitionPair(partition_union(a.p, b.p), partition_union(a.q, b.q));
}

namespace {

// Selects one entry of a nonempty candidate list; candidates always carry
// equal part values, so any choice yields the same summand multiset.
using TieBreak = std::function<std::size_t(const std::vector<std::size_t>&)>;

CanonicalDecomposition decompose(const Partition& p, const Partition& q, const TieBreak& pick_equal,
                                 const TieBreak& pick_up, const TieBreak& pick_down) {
  const std::size_t lp = p.length(), lq = q.length();
  PairMatching mg;
  mg.equal_match.assign(lq + 1, 0);
  mg.up_left.assign(lq + 1, 0);
  mg.down_right.assign(lq + 1, 0);

  // Maximal matching of equal parts (the I0/J0/u data).
  std::vector<bool> in_i0(lp + 1, false);
  for (std::size_t j = 1; j <= lq; ++j) {
    std::vector<std::size_t> cands;
    for (std::size_t i = 1; i <= lp; ++i)
      if (!in_i0[i] && p.part(i) == q.part(j)) cands.push_back(i);
    if (cands.empty()) continue;
    std::size_t i = pick_equal(cands);
    mg.equal_match[j] = i;
    in_i0[i] = true;
  }

  // Up-left edges, left to right: the nearest free part strictly above q_j.
  std::vector<bool> used_up(lp + 1, false);
  for (std::size_t j = 1; j <= lq; ++j) {
    if (mg.equal_match[j]) continue;
    unsigned best = 0;
    for (std::size_t i = 1; i <= lp; ++i)
      if (!in_i0[i] && !used_up[i] && p.part(i) > q.part(j))
        best = best == 0 ? p.part(i) : std::min(best, p.part(i));
    if (best == 0) continue;
    std::vector<std::size_t> cands;
    for (std::size_t i = 1; i <= lp; ++i)
      if (!in_i0[i] && !used_up[i] && p.part(i) == best) cands.push_back(i);
    std::size_t i = pick_up(cands);
    mg.up_left[j] = i;
    used_up[i] = true;
  }

  // Down-right edges, right to left: the nearest free part strictly below q_j.
  std::vector<bool> used_down(lp + 1, false);
  for (std::size_t j = lq; j >= 1; --j) {
    if (mg.equal_match[j]) continue;
    unsigned best = 0;
    for (std::size_t i = 1; i <= lp; ++i)
      if (!in_i0[i] && !used_down[i] && p.part(i) < q.part(j)) best = std::max(best, p.part(i));
    if (best == 0) continue;
    std::vector<std::size_t> cands;
    for (std::size_t i = 1; i <= lp; ++i)
      if (!in_i0[i] && !used_down[i] && p.part(i) == best) cands.push_back(i);
    std::size_t i = pick_down(cands);
    mg.down_right[j] = i;
    used_down[i] = true;
  }

  // Partial inverses for walking the alternating chains.
  std::vector<std::size_t> up_inv(lp + 1, 0), down_inv(lp + 1, 0);
  for (std::size_t j = 1; j <= lq; ++j) {
    if (mg.up_left[j]) up_inv[mg.up_left[j]] = j;
    if (mg.down_right[j]) down_inv[mg.down_right[j]] = j;
  }

  const unsigned bound = p.bound();
  std::vector<PartitionPair> summands;
  for (std::size_t j = 1; j <= lq; ++j)
    if (mg.equal_match[j])
      summands.emplace_back(Partition({q.part(j)}, bound), Partition({q.part(j)}, bound));

  // Chains led by a p-part that is not the lower end of a down-right edge.
  for (std::size_t i0 = 1; i0 <= lp; ++i0) {
    if (in_i0[i0] || down_inv[i0]) continue;
    std::vector<unsigned> ps, qs;
    std::size_t i = i0;
    while (true) {
      ps.push_back(p.part(i));
      std::size_t j = up_inv[i];
      if (!j) break;
      qs.push_back(q.part(j));
      i = mg.down_right[j];
      if (!i) break;
    }
    summands.emplace_back(Partition(std::move(ps), bound), Partition(std::move(qs), bound));
  }

  // Chains led by a q-part with no up-left edge.
  for (std::size_t j0 = 1; j0 <= lq; ++j0) {
    if (mg.equal_match[j0] || mg.up_left[j0]) continue;
    std::vector<unsigned> ps, qs;
    std::size_t j = j0;
    while (true) {
      qs.push_back(q.part(j));
      std::size_t i = mg.down_right[j];
      if (!i) break;
      ps.push_back(p.part(i));
      j = up_inv[i];
      if (!j) break;
    }
    summands.emplace_back(Partition(std::move(ps), bound), Partition(std::move(qs), bound));
  }

  std::sort(summands.begin(), summands.end(), [](const PartitionPair& a, const PartitionPair& b) {
    if (!(a.p == b.p)) return b.p < a.p;  // descending lex by p, then by q
    return b.q < a.q;
  });

  // Every summand is indecomposable and the union reconstructs the input.
  PartitionPair acc(Partition::empty(bound), Partition::empty(bound));
  for (const PartitionPair& s : summands) {
    assert(is_indecomposable_pair(s.p, s.q));
    acc = pair_union(acc, s);
  }
  assert(acc.p == p && acc.q == q);
  (void)acc;

  return {std::move(summands), std::move(mg)};
}

}  // namespace

CanonicalDecomposition canonical_decomposition(const Partition& p, const Partition& q) {
  if (p.bound() != q.bound()) throw ShapeMismatchError("decomposition with different bounds");
  auto first = [](const std::vector<std::size_t>& c) { return c.front(); };
  auto last = [](const std::vector<std::size_t>& c) { return c.back(); };
  return decompose(p, q, first, last, first);
}

CanonicalDecomposition canonical_decomposition_randomized(const Partition& p, const Partition& q,
                                                          Rng& rng) {
  if (p.bound() != q.bound()) throw ShapeMismatchError("decomposition with different bounds");
  // Only the equal-part matching is a free choice; the nearest-position rule
  // for the up/down edges is part of the construction and stays fixed.
  auto any = [&rng](const std::vector<std::size_t>& c) {
    return c[uniform_below(rng, c.size())];
  };
  auto first = [](const std::vector<std::size_t>& c) { return c.front(); };
  auto last = [](const std::vector<std::size_t>& c) { return c.back(); };
  return decompose(p, q, any, last, first);
}

std::string matching_dot(const Partition& p, const Partition& q, const PairMatching& matching) {
  std::string out = "graph decomposition {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  out += "  { rank=same;";
  for (std::size_t i = 1; i <= p.length(); ++i)
    out += " p" + std::to_string(i) + " [label=\"" + std::to_string(p.part(i)) + "\"];";
  out += " }\n  { rank=same;";
  for (std::size_t j = 1; j <= q.length(); ++j)
    out += " q" + std::to_string(j) + " [label=\"" + std::to_string(q.part(j)) + "\"];";
  out += " }\n";
  for (std::size_t j = 1; j <= q.length(); ++j) {
    if (matching.equal_match[j])
      out += "  p" + std::to_string(matching.equal_match[j]) + " -- q" + std::to_string(j) +
             " [style=bold];\n";
    if (matching.up_left[j])
      out += "  p" + std::to_string(matching.up_left[j]) + " -- q" + std::to_string(j) +
             " [color=blue];\n";
    if (matching.down_right[j])
      out += "  p" + std::to_string(matching.down_right[j]) + " -- q" + std::to_string(j) +
             " [color=red];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace birkhoff
