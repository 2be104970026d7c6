#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "vcmax/maximum.hpp"

using namespace vcmax;

namespace {

SetFamily prefixes(std::size_t n) {
  std::vector<Subset> ms;
  for (std::size_t k = 0; k <= n; ++k) ms.push_back(Subset::full(k));
  return SetFamily(OrderedGround::chain(n), ms);
}

SetFamily singletons(std::size_t n) {
  std::vector<Subset> ms;
  for (std::size_t i = 0; i < n; ++i) ms.push_back(Subset::singleton(i));
  return SetFamily(OrderedGround::chain(n), ms);
}

}  // namespace

TEST_CASE("codes") {
  CHECK(Code("0110").str() == "0110");
  CHECK_THROWS_AS(Code(""), InputError);
  CHECK_THROWS_AS(Code("012"), InputError);
  const auto all3 = Code::all_of_length(3);
  REQUIRE(all3.size() == 8);
  CHECK(all3.front().str() == "000");
  CHECK(all3.back().str() == "111");
  CHECK(std::is_sorted(all3.begin(), all3.end()));
}

TEST_CASE("subsequence examples") {
  CHECK(is_subsequence(Code("11"), Code("101")));
  CHECK_FALSE(is_subsequence(Code("00"), Code("101")));
  CHECK(is_subsequence(Code("101"), Code("101")));
  CHECK_FALSE(is_subsequence(Code("1010"), Code("101")));
}

TEST_CASE("property: subsequence is a partial order on codes") {
  std::vector<Code> codes;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (auto& c : Code::all_of_length(m)) codes.push_back(c);
  }
  for (const auto& a : codes) {
    CHECK(is_subsequence(a, a));
    for (const auto& b : codes) {
      if (is_subsequence(a, b) && a.size() == b.size()) CHECK(a == b);
      if (!is_subsequence(a, b)) continue;
      for (const auto& c : codes) {
        if (is_subsequence(b, c)) CHECK(is_subsequence(a, c));
      }
    }
  }
}

TEST_CASE("induces_pattern examples") {
  const OrderedGround g({"a", "b", "c"});
  CHECK(induces_pattern(g.parse_subset("b"), Code("010"), 3));
  CHECK_FALSE(induces_pattern(g.parse_subset("b"), Code("11"), 3));
  CHECK(induces_pattern(g.parse_subset("a,c"), Code("101"), 3));
  CHECK_FALSE(induces_pattern(Subset{}, Code("0000"), 3));
}

TEST_CASE("oracle: induces_pattern against exhaustive position search") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 7);
    const Subset a(uniform_below(rng, std::uint64_t{1} << n));
    const std::size_t m = 1 + uniform_below(rng, n + 1);
    std::string rho;
    for (std::size_t i = 0; i < m; ++i) rho.push_back(uniform_below(rng, 2) ? '1' : '0');
    CHECK(induces_pattern(a, Code(rho), n) == oracle::induces(a, rho, n));
  }
}

TEST_CASE("is_d_maximum examples") {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto power = bounded_size_family(OrderedGround::chain(n), n);
    CHECK(is_d_maximum(power, n));
    CHECK(is_d_maximum(power, n, MaximumCheck::strict));
  }
  const auto iv = intervals_family(OrderedGround::chain(6), 1);
  CHECK(iv.size() == 22);
  CHECK(is_d_maximum(iv, 2));
  CHECK_FALSE(is_d_maximum(singletons(3), 1));
  CHECK_FALSE(is_d_maximum(singletons(3), 1, MaximumCheck::strict));
}

TEST_CASE("oracle: both maximum checks agree with the definition") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 400; ++trial) {
    const auto f = oracle::random_small_family(rng, 6);
    const std::size_t d = uniform_below(rng, 4);
    const bool truth = oracle::is_d_maximum(f, d);
    CHECK(is_d_maximum(f, d, MaximumCheck::fast) == truth);
    CHECK(is_d_maximum(f, d, MaximumCheck::strict) == truth);
    CHECK(find_maximality_violation(f, d).has_value() == !truth);
  }
  for (const auto& e : corpus::maximum_families(7)) {
    CAPTURE(e.name);
    CHECK(oracle::is_d_maximum(e.family, e.d));
  }
}

TEST_CASE("forbidden labels") {
  const auto p = prefixes(3);
  const auto& g = p.ground();
  CHECK(forbidden_label(p, g.parse_subset("1,3")) == g.parse_subset("3"));
  CHECK(forbidden_label(p, g.parse_subset("2,3")) == g.parse_subset("3"));
  CHECK(forbidden_label(p, g.parse_subset("1,2")) == g.parse_subset("2"));

  const auto iv = intervals_family(OrderedGround::chain(6), 1);
  for_each_subset_of_size(6, 3, [&](Subset a) {
    const auto e = a.elements();
    CHECK(forbidden_label(iv, a) == Subset::singleton(e[0]).with(e[2]));
  });

  CHECK_THROWS_AS(forbidden_label(bounded_size_family(OrderedGround::chain(3), 3), Subset(0b11)), NotMaximumError);
  CHECK(forbidden_label(singletons(3), Subset(0b11)) == Subset(0b11));
  try {
    forbidden_label(SetFamily(OrderedGround::chain(3), {Subset{}, Subset(0b111)}), Subset(0b11));
    FAIL("expected NotMaximumError");
  } catch (const NotMaximumError& e) {
    CHECK(e.offending() == Subset(0b11));
  }
}

TEST_CASE("forbidden codes") {
  CHECK(forbidden_codes(prefixes(4), 1) == std::set<Code>{Code("01")});
  CHECK(forbidden_codes(intervals_family(OrderedGround::chain(7), 1), 2) == std::set<Code>{Code("101")});
  for (std::size_t d = 0; d <= 2; ++d) {
    for (const auto& eta : Code::all_of_length(d + 1)) {
      CHECK(forbidden_codes(pattern_avoiding_family(OrderedGround::chain(7), eta), d) == std::set<Code>{eta});
    }
  }
}

TEST_CASE("reconstruction from labels") {
  const auto p = prefixes(3);
  CHECK(reconstruct_from_labels(forbidden_label_table(p, 1), p.ground()) == p);

  const OrderedGround abc({"a", "b", "c"});
  ForbiddenLabelTable single{2, {{abc.full(), abc.parse_subset("a,c")}}};
  const auto r = reconstruct_from_labels(single, abc);
  CHECK(r.size() == 7);
  CHECK_FALSE(r.contains(abc.parse_subset("a,c")));

  ForbiddenLabelTable partial{1, {{abc.parse_subset("a,b"), abc.parse_subset("b")}}};
  CHECK_THROWS_WITH_AS(reconstruct_from_labels(partial, abc), doctest::Contains("missing 2 key"), InputError);
  ForbiddenLabelTable bad{1, {{abc.parse_subset("a,b"), abc.parse_subset("c")}}};
  CHECK_THROWS_AS(reconstruct_from_labels(bad, abc), InputError);
  ForbiddenLabelTable wrong_size{1, {{abc.full(), abc.parse_subset("c")}}};
  CHECK_THROWS_AS(reconstruct_from_labels(wrong_size, abc), InputError);
}

TEST_CASE("property: label round trip and inherited maximality on the corpus") {
  for (const auto& e : corpus::maximum_families(10)) {
    CAPTURE(e.name);
    CHECK(e.family.size() == sauer_bound_u64(e.family.ground().size(), e.d));
    CHECK(is_d_maximum(e.family, e.d, MaximumCheck::strict));
    const auto table = forbidden_label_table(e.family, e.d);
    CHECK(reconstruct_from_labels(table, e.family.ground()) == e.family);
  }
  // every restriction is again d-maximum
  for (const auto& e : corpus::maximum_families(6)) {
    const auto n = e.family.ground().size();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      CHECK(is_d_maximum(restrict(e.family, Subset(a)), std::min(e.d, Subset(a).size())));
    }
  }
}

TEST_CASE("finite characterization") {
  const auto iv = intervals_family(OrderedGround::chain(5), 1);
  CHECK(is_finitely_characterized(iv, Code("101")));
  const auto power = bounded_size_family(OrderedGround::chain(4), 4);
  for (std::size_t m = 1; m <= 4; ++m) {
    for (const auto& eta : Code::all_of_length(m)) CHECK_FALSE(is_finitely_characterized(power, eta));
  }
  for (const auto& eta : Code::all_of_length(3)) {
    CHECK(is_finitely_characterized(pattern_avoiding_family(OrderedGround::chain(6), eta), eta));
  }
}

TEST_CASE("maximum witness search") {
  const auto iv = intervals_family(OrderedGround::chain(10), 1);
  const auto w = vcm_witness_search(iv, 2, 6, 100000, 1);
  REQUIRE(w.witness);
  CHECK(w.witness->size() == 6);
  CHECK(is_d_maximum(restrict(iv, *w.witness), 2));

  const auto power = bounded_size_family(OrderedGround::chain(3), 3);
  const auto p = vcm_witness_search(power, 3, 3, 1000, 1);
  REQUIRE(p.witness);
  CHECK(*p.witness == Subset::full(3));

  // Singletons without the empty set still trace the empty set on any proper
  // subset, so proper subsets of size 4 are 1-maximum witnesses.
  const auto s = vcm_witness_search(singletons(5), 1, 5, 100000, 1);
  REQUIRE(s.witness);
  CHECK(s.witness->size() == 4);

  const auto two = SetFamily(OrderedGround::chain(5), {Subset{}, Subset::full(5)});
  const auto none = vcm_witness_search(two, 1, 5, 100000, 1);
  CHECK_FALSE(none.witness);
  CHECK(none.exhaustive);

  // the randomized path for large grounds
  const auto big = intervals_family(OrderedGround::chain(20), 1, 20);
  const auto r = vcm_witness_search(big, 2, 8, 2000, 7);
  REQUIRE(r.witness);
  CHECK(is_d_maximum(restrict(big, *r.witness), 2));
}
