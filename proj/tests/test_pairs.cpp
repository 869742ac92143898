#include <doctest.h>

#include <set>
#include <string>

#include "birkhoff/pairs.hpp"
#include "helpers.hpp"

using namespace birkhoff;
using birkhoff::testing::part;

namespace {

std::multiset<std::string> summand_multiset(const CanonicalDecomposition& dec) {
  std::multiset<std::string> out;
  for (const PartitionPair& s : dec.summands) out.insert(s.str());
  return out;
}

}  // namespace

TEST_CASE("pair classification") {
  CHECK(classify_pair(part({6, 3, 2}, 6), part({4, 2, 1}, 6)) == PairType::MonoOnly);
  CHECK(classify_pair(part({3, 2}, 3), part({3, 2}, 3)) == PairType::Both);
  CHECK(classify_pair(part({1}, 3), part({3}, 3)) == PairType::EpiOnly);
  CHECK(classify_pair(part({2, 1}, 3), part({3, 2}, 3)) == PairType::EpiOnly);
  // With the zero-extension convention the epi chain needs q2 >= p2 = 1 here,
  // so this pair interlaces in neither direction.
  CHECK(classify_pair(part({1, 1}, 3), part({3}, 3)) == PairType::Neither);
  CHECK(classify_pair(part({2, 2}, 3), part({3, 1}, 3)) == PairType::Neither);
}

TEST_CASE("indecomposable pairs") {
  CHECK(is_indecomposable_pair(part({5}, 5), part({5}, 5)));
  CHECK(is_indecomposable_pair(part({18, 10, 2}, 19), part({13, 3}, 19)));
  CHECK_FALSE(is_indecomposable_pair(part({3, 3}, 3), part({2}, 3)));
  CHECK(is_indecomposable_pair(part({3}, 3), Partition::empty(3)));
  CHECK(is_indecomposable_pair(Partition::empty(3), part({3}, 3)));
  CHECK_FALSE(is_indecomposable_pair(Partition::empty(3), Partition::empty(3)));
  CHECK_FALSE(is_indecomposable_pair(part({3}, 3), part({3, 1}, 3)));
  CHECK(is_indecomposable_pair(part({2}, 3), part({3, 1}, 3)));
}

TEST_CASE("worked canonical decomposition") {
  Partition p = part({19, 18, 17, 16, 13, 13, 10, 10, 9, 6, 6, 2, 2, 1}, 19);
  Partition q = part({19, 15, 14, 13, 13, 13, 12, 8, 4, 4, 3, 2}, 19);
  auto dec = canonical_decomposition(p, q);
  std::multiset<std::string> expected = {
      "19|19", "13|13", "13|13", "2|2", "18,10,2|13,3", "17,9,6,1|14,8,4", "16,6|15,4", "10|12"};
  CHECK(summand_multiset(dec) == expected);
  // Canonical output order: descending lexicographic by p-component.
  REQUIRE(dec.summands.size() == 8);
  CHECK(dec.summands[0].str() == "19|19");
  CHECK(dec.summands[1].str() == "18,10,2|13,3");
  CHECK(dec.summands.back().str() == "2|2");
}

TEST_CASE("decomposition edge cases") {
  auto none = canonical_decomposition(Partition::empty(4), Partition::empty(4));
  CHECK(none.summands.empty());

  auto single = canonical_decomposition(part({2}, 4), part({2}, 4));
  REQUIRE(single.summands.size() == 1);
  CHECK(single.summands[0].str() == "2|2");
}

TEST_CASE("idempotence on indecomposable pairs") {
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned dp = 0; dp <= 7; ++dp)
      for (unsigned dq = 0; dq <= 7; ++dq)
        for (const auto& p : enumerate_partitions(dp, m))
          for (const auto& q : enumerate_partitions(dq, m)) {
            if (!is_indecomposable_pair(p, q)) continue;
            auto dec = canonical_decomposition(p, q);
            REQUIRE(dec.summands.size() == 1);
            CHECK(dec.summands[0] == PartitionPair(p, q));
          }
}

TEST_CASE("reconstruction, indecomposability, and weak-type structure of summands") {
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned dp = 0; dp <= 12; ++dp)
      for (unsigned dq = 0; dq <= 12; ++dq)
        for (const auto& p : enumerate_partitions(dp, m))
          for (const auto& q : enumerate_partitions(dq, m)) {
            auto dec = canonical_decomposition(p, q);
            PartitionPair acc(Partition::empty(m), Partition::empty(m));
            std::size_t equal_summands = 0;
            for (const auto& s : dec.summands) {
              CHECK(is_indecomposable_pair(s.p, s.q));
              acc = pair_union(acc, s);
              if (s.p == s.q) ++equal_summands;
            }
            CHECK(acc.p == p);
            CHECK(acc.q == q);
            // Weakly indecomposable pairs split into one strict pair plus
            // copies of (n)=(n) only.
            if (is_weakly_indecomposable(p, q) && !dec.summands.empty())
              CHECK(dec.summands.size() - equal_summands <= 1);
          }
}

TEST_CASE("choice independence under randomized tie-breaking") {
  Rng rng(99);
  std::vector<PartitionPair> inputs = {
      {part({19, 18, 17, 16, 13, 13, 10, 10, 9, 6, 6, 2, 2, 1}, 19),
       part({19, 15, 14, 13, 13, 13, 12, 8, 4, 4, 3, 2}, 19)},
      {part({5, 5, 5, 3, 3, 1, 1}, 5), part({5, 5, 4, 3, 3, 3, 1}, 5)},
      {part({4, 4, 4, 4}, 4), part({4, 4, 2, 2, 2}, 4)},
      {part({2, 2, 1, 1}, 3), part({3, 2, 2, 1}, 3)},
  };
  for (const auto& pr : inputs) {
    auto reference = summand_multiset(canonical_decomposition(pr.p, pr.q));
    for (int trial = 0; trial < 25; ++trial)
      CHECK(summand_multiset(canonical_decomposition_randomized(pr.p, pr.q, rng)) == reference);
  }
}

TEST_CASE("appending an equal part preserves the weak type") {
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned dp = 0; dp <= 6; ++dp)
      for (unsigned dq = 0; dq <= 6; ++dq)
        for (const auto& p : enumerate_partitions(dp, m))
          for (const auto& q : enumerate_partitions(dq, m)) {
            PairType t = classify_pair(p, q);
            if (t == PairType::Neither) continue;
            for (unsigned n = 1; n <= m; ++n) {
              Partition nn({n}, m);
              PairType t2 = classify_pair(partition_union(p, nn), partition_union(q, nn));
              CHECK(t2 != PairType::Neither);
              if (t == PairType::MonoOnly) CHECK(t2 != PairType::EpiOnly);
              if (t == PairType::EpiOnly) CHECK(t2 != PairType::MonoOnly);
            }
          }
}

TEST_CASE("pair union") {
  PartitionPair a(part({3}, 3), part({2}, 3));
  PartitionPair b(part({1}, 3), Partition::empty(3));
  CHECK(pair_union(a, b).str() == "3,1|2");
  PartitionPair empty(Partition::empty(3), Partition::empty(3));
  CHECK(pair_union(a, empty) == a);
}

TEST_CASE("pair parsing and rendering") {
  auto pr = parse_pair("6,3,2|4,2,1", 6);
  CHECK(pr.p == part({6, 3, 2}, 6));
  CHECK(pr.q == part({4, 2, 1}, 6));
  CHECK(pr.str() == "6,3,2|4,2,1");

  auto empty = parse_pair("|", 3);
  CHECK(empty.p.length() == 0);
  CHECK(empty.q.length() == 0);

  CHECK_THROWS_AS(parse_pair("3,a|2", 5), ParseError);
  CHECK_THROWS_AS(parse_pair("3,2", 5), ParseError);
  try {
    parse_pair("3|a", 5);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position >= 2);
  }
}

TEST_CASE("matching diagram DOT output") {
  auto pr = parse_pair("3,1|2", 3);
  auto dec = canonical_decomposition(pr.p, pr.q);
  std::string dot = matching_dot(pr.p, pr.q, dec.matching);
  CHECK(dot.find("graph decomposition {") == 0);
  CHECK(dot.find("p1 [label=\"3\"]") != std::string::npos);
  CHECK(dot.find("q1 [label=\"2\"]") != std::string::npos);
  // 2 sits under 3 (up-left edge) and above 1 (down-right edge).
  CHECK(dot.find("p1 -- q1 [color=blue]") != std::string::npos);
  CHECK(dot.find("p2 -- q1 [color=red]") != std::string::npos);
}
