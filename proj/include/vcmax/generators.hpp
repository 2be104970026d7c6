#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vcmax/core.hpp"
#include "vcmax/genus.hpp"

namespace vcmax {

/// Subsets of the chain made of at most k runs of consecutive elements,
/// the empty set included. 2k-maximum.
SetFamily intervals_family(const OrderedGround& chain, std::size_t k, std::size_t cap = kDefaultEnumerationCap);

/// [X]^{<=m}: every subset with at most m elements, by size then bit order.
SetFamily bounded_size_family(const OrderedGround& ground, std::size_t m, std::size_t cap = kDefaultEnumerationCap);

/// `count` distinct subsets drawn uniformly, sorted by bits.
SetFamily random_family(const OrderedGround& ground, std::uint64_t count, std::uint64_t seed);

using Point = std::vector<Rational>;

/// Distinct points of Q^m. For m = 2 the general-position flag means no
/// point at the origin, no two collinear with the origin and no three
/// collinear, which is what makes the halfplane arrangement simple. For
/// other m it records only distinctness.
class PointSample {
 public:
  PointSample(std::size_t dimension, std::vector<Point> points, std::uint64_t seed = 0);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::uint64_t seed() const { return seed_; }
  bool general_position() const { return general_position_; }
  /// Labels p1, p2, ... in point order.
  OrderedGround ground() const;

 private:
  std::size_t dimension_;
  std::vector<Point> points_;
  std::uint64_t seed_;
  bool general_position_ = true;
};

/// n integer points in [-range, range]^2 in general position, deterministic
/// in the seed.
PointSample random_general_position_points(std::size_t n, std::uint64_t seed, long long range = 50);

using Exponents = std::vector<unsigned>;

struct Term {
  Rational coefficient;
  Exponents exponents;

  friend bool operator==(const Term&, const Term&) = default;
};

/// fixed(y) + c_1 u_1(y) + ... + c_d u_d(y), where the fixed part is a
/// polynomial and each u_k a monomial with a free coefficient.
class PolySpec {
 public:
  /// Throws InputError when d = 0, when arities disagree, when two free
  /// monomials coincide, or when the fixed part is a multiple of a free one.
  PolySpec(std::vector<Term> fixed, std::vector<Exponents> free);

  std::size_t variables() const { return variables_; }
  std::size_t free_count() const { return free_.size(); }
  const std::vector<Term>& fixed() const { return fixed_; }
  const std::vector<Exponents>& free() const { return free_; }

  Rational fixed_at(const Point& y) const;
  Rational free_at(std::size_t k, const Point& y) const;

  /// 1 + c_1 x + c_2 y.
  static PolySpec halfplane();

  friend bool operator==(const PolySpec&, const PolySpec&) = default;

 private:
  std::vector<Term> fixed_;
  std::vector<Exponents> free_;
  std::size_t variables_ = 0;
};

struct TraceResult {
  SetFamily family;
  bool exact = false;            ///< false: a lower bound obtained by sampling
  bool general_position = false;
  std::vector<std::size_t> degenerate_points;  ///< points where every free monomial vanishes
};

/// Exact traces of {1 + c_1 x + c_2 y >= 0} for n <= 12.
TraceResult halfplane_traces(const PointSample& sample);

/// Traces of {p(c, y) >= 0}. Exact by arrangement enumeration when d <= 2.
/// For d >= 3, samples the coefficient grid together with points next to
/// every vertex of the constraint arrangement and reports a lower bound.
TraceResult polynomial_traces(const PointSample& sample, const PolySpec& spec, std::span<const Rational> grid,
                              std::uint64_t seed);

/// Exact traces of closed axis-parallel rectangles, for n <= 12.
TraceResult rectangle_traces(const PointSample& sample);

}  // namespace vcmax
