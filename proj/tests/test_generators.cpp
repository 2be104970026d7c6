#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vcmax/generators.hpp"

using namespace vcmax;

namespace {

std::set<std::uint64_t> masks(const SetFamily& f) {
  std::set<std::uint64_t> out;
  for (auto m : f.members()) out.insert(m.bits());
  return out;
}

PointSample planar(std::initializer_list<std::pair<Rational, Rational>> pts) {
  std::vector<Point> out;
  for (const auto& [x, y] : pts) out.push_back({x, y});
  return PointSample(2, out);
}

// Traces {y : fixed(y) + sum_k c_k free_k(y) >= 0} over all real c, by
// Fourier-Motzkin feasibility of each candidate sign pattern.
std::set<std::uint64_t> poly_oracle(const PointSample& s, const PolySpec& spec) {
  std::set<std::uint64_t> out;
  const std::size_t d = spec.free_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.size()); ++mask) {
    std::vector<oracle::Ineq> sys;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto& y = s.points()[i];
      const bool in = (mask >> i) & 1U;
      oracle::Ineq q{std::vector<Rational>(d), in ? spec.fixed_at(y) : Rational(-spec.fixed_at(y)), !in};
      for (std::size_t k = 0; k < d; ++k) q.a[k] = in ? spec.free_at(k, y) : Rational(-spec.free_at(k, y));
      sys.push_back(q);
    }
    if (oracle::feasible(sys, d)) out.insert(mask);
  }
  return out;
}

std::vector<Rational> integer_grid(long long lo, long long hi) {
  std::vector<Rational> out;
  for (long long v = lo; v <= hi; ++v) out.emplace_back(v);
  return out;
}

PointSample random_lattice_sample(std::mt19937_64& rng, std::size_t n, long long range) {
  std::set<std::pair<long long, long long>> seen;
  std::vector<Point> pts;
  while (pts.size() < n) {
    const long long x = static_cast<long long>(uniform_below(rng, 2 * range + 1)) - range;
    const long long y = static_cast<long long>(uniform_below(rng, 2 * range + 1)) - range;
    if (seen.emplace(x, y).second) pts.push_back({Rational(x), Rational(y)});
  }
  return PointSample(2, pts);
}

}  // namespace

TEST_CASE("intervals family") {
  CHECK(intervals_family(OrderedGround::chain(6), 1).size() == 22);
  CHECK(intervals_family(OrderedGround::chain(6), 2).size() == 57);
  CHECK(intervals_family(OrderedGround::chain(5), 3).size() == 32);
  CHECK(intervals_family(OrderedGround::chain(6), 3).size() == 64);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto f = intervals_family(OrderedGround::chain(n), k);
      CHECK(f.size() == sauer_bound_u64(n, 2 * k));
      if (n <= 8) CHECK(oracle::vc_dimension(f) == std::min(2 * k, n));
      for (std::size_t i = 0; i < f.size(); ++i) {
        // count maximal runs of '1' in the word
        const auto w = f.word(i);
        std::size_t runs = 0;
        for (std::size_t j = 0; j < w.size(); ++j) runs += w[j] == '1' && (j == 0 || w[j - 1] == '0');
        CHECK(runs <= k);
      }
    }
  }
}

TEST_CASE("bounded size family") {
  const auto g = OrderedGround::chain(4);
  CHECK(bounded_size_family(g, 0).size() == 1);
  CHECK(bounded_size_family(g, 4).size() == 16);
  CHECK(bounded_size_family(g, 2).size() == 11);
  CHECK_THROWS_AS(bounded_size_family(g, 9), InputError);
}

TEST_CASE("random family") {
  const auto g = OrderedGround::chain(4);
  CHECK(random_family(g, 16, 1).size() == 16);
  CHECK_THROWS_AS(random_family(g, 0, 1), InputError);
  CHECK_THROWS_AS(random_family(g, 17, 1), InputError);
  CHECK(random_family(OrderedGround::chain(9), 40, 5) == random_family(OrderedGround::chain(9), 40, 5));
  CHECK_FALSE(random_family(OrderedGround::chain(9), 40, 5) == random_family(OrderedGround::chain(9), 40, 6));
}

TEST_CASE("point samples") {
  CHECK_THROWS_AS(planar({{Rational(1), Rational(2)}, {Rational(1), Rational(2)}}), InputError);
  CHECK_FALSE(planar({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}, {Rational(3), Rational(3)}}).general_position());
  CHECK(planar({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(2), Rational(3)}}).general_position());
  const auto s = random_general_position_points(9, 4);
  CHECK(s.size() == 9);
  CHECK(s.general_position());
  CHECK(s.ground().label(0) == "p1");
}

TEST_CASE("halfplane traces") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    const auto s = random_general_position_points(7, seed);
    const auto r = halfplane_traces(s);
    CHECK(r.exact);
    CHECK(r.general_position);
    CHECK(r.family.size() == 29);
    CHECK(is_d_maximum(r.family, 2));
    CHECK(masks(r.family) == oracle::halfplane_traces(s));
  }
  const auto one = halfplane_traces(planar({{Rational(3), Rational(-1)}}));
  CHECK(one.family.size() == 2);

  const auto line = halfplane_traces(planar({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}, {Rational(3), Rational(3)}}));
  CHECK(line.family.size() < 7);
  CHECK_FALSE(line.general_position);

  const auto origin = halfplane_traces(planar({{Rational(0), Rational(0)}, {Rational(1), Rational(2)}}));
  CHECK(origin.degenerate_points == std::vector<std::size_t>{0});
  for (auto m : origin.family.members()) CHECK(m.contains(0));
}

TEST_CASE("oracle: exact planar traces against Fourier-Motzkin") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 7);
    // a small lattice forces collinear and origin-degenerate samples
    const auto s = random_lattice_sample(rng, n, 2 + static_cast<long long>(uniform_below(rng, 4)));
    const auto r = halfplane_traces(s);
    CHECK(masks(r.family) == oracle::halfplane_traces(s));
    if (!r.general_position) continue;
    CHECK(r.family.size() == sauer_bound_u64(n, 2));
  }
}

TEST_CASE("oracle: one- and two-parameter polynomial specs") {
  const std::vector<PolySpec> specs{
      PolySpec({{Rational(1), {0, 0}}}, {{1, 0}}),                          // 1 + c x
      PolySpec({{Rational(-1), {2, 0}}, {Rational(1), {0, 2}}}, {{1, 0}, {0, 0}}),  // y^2 - x^2 + c1 x + c2
      PolySpec({{Rational(1), {0, 1}}}, {{2, 0}, {1, 0}}),                  // y + c1 x^2 + c2 x
  };
  std::mt19937_64 rng(52);
  const auto grid = integer_grid(0, 0);
  for (const auto& spec : specs) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto s = random_lattice_sample(rng, 1 + uniform_below(rng, 6), 4);
      const auto r = polynomial_traces(s, spec, grid, 1);
      CHECK(r.exact);
      CHECK(masks(r.family) == poly_oracle(s, spec));
    }
  }
}

TEST_CASE("polynomial traces: sampled mode and degenerate specs") {
  // closed discs: -(x^2 + y^2) + c1 x + c2 y + c3 >= 0
  const PolySpec discs({{Rational(-1), {2, 0}}, {Rational(-1), {0, 2}}}, {{1, 0}, {0, 1}, {0, 0}});
  const auto s = random_general_position_points(6, 8, 10);
  const auto grid = integer_grid(-12, 12);
  const auto r = polynomial_traces(s, discs, grid, 3);
  CHECK_FALSE(r.exact);
  CHECK(r.family.size() >= 42);
  CHECK(r.family.size() <= 64);
  CHECK(vc_dimension(r.family) <= 3);

  // 1 + c x on points sharing one x coordinate: all or nothing
  const PolySpec shared({{Rational(1), {0, 0}}}, {{1, 0}});
  const auto col = planar({{Rational(2), Rational(0)}, {Rational(2), Rational(5)}, {Rational(2), Rational(-3)}});
  const auto c = polynomial_traces(col, shared, integer_grid(0, 0), 1);
  CHECK(c.family.size() >= 1);
  CHECK(c.family.size() <= 2);

  CHECK_THROWS_AS(polynomial_traces(s, discs, std::span<const Rational>{}, 1), InputError);
  CHECK_THROWS_AS(PolySpec({}, {{1, 0}, {1, 0}}), InputError);
}

TEST_CASE("rectangle traces") {
  CHECK(rectangle_traces(planar({{Rational(0), Rational(0)}})).family.size() == 2);
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<Point> diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back({Rational(static_cast<long long>(i)), Rational(static_cast<long long>(i))});
    CHECK(rectangle_traces(PointSample(2, diag)).family.size() == n * (n - 1) / 2 + n + 1);
  }
  // four points around a fifth that sits in the box of (0,1) and (3,2)
  const auto five = planar({{Rational(0), Rational(1)},
                            {Rational(2), Rational(0)},
                            {Rational(3), Rational(2)},
                            {Rational(1), Rational(3)},
                            {Rational(7, 5), Rational(8, 5)}});
  CHECK(five.general_position());
  const auto r = rectangle_traces(five);
  CHECK(masks(r.family) == oracle::rectangle_traces(five));
  CHECK(r.family.size() < 31);
  CHECK_FALSE(is_d_maximum(r.family, 4));

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_lattice_sample(rng, 1 + uniform_below(rng, 8), 4);
    CHECK(masks(rectangle_traces(s).family) == oracle::rectangle_traces(s));
  }
}
