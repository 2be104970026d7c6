#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vcmax/core.hpp"
#include "vcmax/maximum.hpp"

namespace vcmax {

using Rational = boost::multiprecision::cpp_rational;

/// A point of the extended rational line.
class ExtValue {
 public:
  enum class Kind { neg_inf, finite, pos_inf };

  ExtValue() = default;
  ExtValue(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}  // NOLINT: implicit by design
  static ExtValue neg_inf() { return ExtValue(Kind::neg_inf); }
  static ExtValue pos_inf() { return ExtValue(Kind::pos_inf); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::finite; }
  /// Requires finite().
  const Rational& value() const;

  /// "-inf", "+inf", "p/q" or "p".
  std::string to_string() const;

  friend bool operator==(const ExtValue& a, const ExtValue& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b);

 private:
  explicit ExtValue(Kind k) : kind_(k) {}
  Kind kind_ = Kind::finite;
  Rational value_;
};

/// Parses "-inf", "+inf"/"inf", integers, decimals and "p/q".
ExtValue parse_ext_value(std::string_view text);

/// A nonempty convex set: a singleton or an interval with flagged endpoints.
struct Component {
  ExtValue lo;
  ExtValue hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Component point(Rational p);
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const;
  std::string to_string() const;

  friend bool operator==(const Component&, const Component&) = default;
};

/// A finite union of maximal convex components of the extended rational
/// line, stored left to right. Two neighbours may share an endpoint only when
/// both exclude it.
class ConvexUnion {
 public:
  ConvexUnion() = default;  ///< the empty set
  /// Sorts and validates; throws InputError on overlap, mergeable neighbours
  /// or malformed components.
  explicit ConvexUnion(std::vector<Component> components);

  /// Parses "{p}", "(l,r)", "[l,r]", "(l,r]", "[l,r)" separated by commas.
  /// The empty string and "{}" are the empty set.
  static ConvexUnion parse(std::string_view text);
  static ConvexUnion full_line();

  const std::vector<Component>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  bool contains(const Rational& x) const;
  /// Inverse of parse(); "{}" for the empty set.
  std::string to_string() const;

  friend bool operator==(const ConvexUnion&, const ConvexUnion&) = default;

 private:
  std::vector<Component> components_;
};

/// Finite component endpoints together with punctures, ascending, deduplicated.
std::vector<Rational> boundary_points(const ConvexUnion& b);

/// Bit i is 0 iff the i-th open region between consecutive boundary points
/// lies inside the set.
Code genus_scan(const ConvexUnion& b);

/// Shortest code the set does not induce, found by enumerating codes by
/// length. Throws ConsistencyError if that code is not unique or its length
/// disagrees with the boundary count.
Code genus_oracle(const ConvexUnion& b);

/// True iff some x_0 < ... < x_{m-1} satisfy (x_j in b) <=> rho(j) = 1.
bool induces_code(const ConvexUnion& b, const Code& rho);

/// All length-m codes induced by b.
std::set<Code> pattern_set(const ConvexUnion& b, std::size_t m);

/// A set whose genus is eta, with boundary points 1..|eta|-1 and closed
/// endpoints wherever membership is free.
ConvexUnion convex_union_from_genus(const Code& eta);

/// Every subset of the chain that does not induce eta, in ascending bit order.
SetFamily pattern_avoiding_family(const OrderedGround& chain, const Code& eta,
                                  std::size_t cap = kDefaultEnumerationCap);

}  // namespace vcmax
