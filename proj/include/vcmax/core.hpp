#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vcmax/errors.hpp"
#include "vcmax/subset.hpp"

namespace vcmax {

using BigInt = boost::multiprecision::cpp_int;

/// Default limit on n for operations that enumerate all 2^n subsets.
inline constexpr std::size_t kDefaultEnumerationCap = 16;

/// Throws SizeError when n exceeds cap.
void require_within_cap(std::size_t n, std::size_t cap, std::string_view operation);

/// A finite ground set with a fixed strict total order given by label
/// position. Reordering the labels makes a different ground.
class OrderedGround {
 public:
  OrderedGround() = default;
  explicit OrderedGround(std::vector<std::string> labels);

  /// Chain with labels "first", "first+1", ... (n elements).
  static OrderedGround chain(std::size_t n, long long first = 1);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  Subset full() const { return Subset::full(size()); }
  /// Subset named by labels; throws InputError on unknown labels.
  Subset subset_of(std::span<const std::string> labels) const;
  /// Parses "a,b,c" (empty string is the empty set).
  Subset parse_subset(std::string_view comma_separated) const;
  /// "{a,b}" in ground order; "{}" for the empty set.
  std::string format(Subset s) const;
  std::vector<std::string> labels_of(Subset s) const;

  /// Ground consisting of the elements of `s` in the induced order.
  OrderedGround sub_ground(Subset s) const;

  friend bool operator==(const OrderedGround& a, const OrderedGround& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A duplicate-free family of subsets of an ordered ground. Member order is
/// kept as given; equality compares member sets.
class SetFamily {
 public:
  SetFamily() = default;
  /// Rejects duplicate members and members outside the ground.
  SetFamily(OrderedGround ground, std::vector<Subset> members);
  /// Same, but drops duplicates (first occurrence wins).
  static SetFamily normalized(OrderedGround ground, std::vector<Subset> members);

  const OrderedGround& ground() const { return ground_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Subset s) const;

  /// Membership word of member i: character j is '1' iff ground element j is in it.
  std::string word(std::size_t i) const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.ground_ == b.ground_ && a.sorted_ == b.sorted_;
  }

 private:
  OrderedGround ground_;
  std::vector<Subset> members_;
  std::vector<Subset> sorted_;
};

std::string to_word(Subset s, std::size_t n);

/// The trace family {C ∩ A : C ∈ family} over the sub-ground A.
SetFamily restrict(const SetFamily& family, Subset a);
/// |{C ∩ A}| without materializing the trace family.
std::size_t trace_count(const SetFamily& family, Subset a);
bool shatters(const SetFamily& family, Subset a);

/// Largest shattered cardinality; ascending search that stops at the first
/// size with no shattered set.
std::size_t vc_dimension(const SetFamily& family);
/// True iff no (d+1)-subset is shattered.
bool vc_dimension_at_most(const SetFamily& family, std::size_t d);

/// Sum_{i<=d} C(n,i) when d < n, otherwise 2^n. Throws InputError on negative arguments.
BigInt sauer_bound(std::int64_t n, std::int64_t d);
/// Machine-width variant; requires n <= 63.
std::uint64_t sauer_bound_u64(std::size_t n, std::size_t d);

struct SauerProfile {
  std::size_t vc_dimension = 0;
  std::vector<std::uint64_t> counts;  ///< counts[k] = max over |A| = k of |C|^A|
  std::vector<std::uint64_t> bounds;  ///< bounds[k] = sauer_bound(k, vc_dimension)
};

SauerProfile sauer_profile(const SetFamily& family, std::size_t cap = kDefaultEnumerationCap);

/// Returns the number of distinct traces seen on a random parameter set of
/// the given size.
using TraceOracle = std::function<double(std::size_t size, std::mt19937_64& rng)>;

struct GrowthEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  ///< root-mean-square residual of the log-log fit
  std::vector<double> counts;
  bool superpolynomial_suspected = false;
};

/// Least-squares slope of log(count) against log(size).
GrowthEstimate estimate_growth_exponent(const TraceOracle& oracle, std::span<const std::size_t> sizes,
                                        std::uint64_t seed);

/// Oracle that traces `family` on uniformly random subsets of its ground and
/// reports the largest count over `samples` draws.
TraceOracle random_subset_oracle(const SetFamily& family, std::size_t samples = 1);

/// Uniform integer in [0, bound) using rejection, independent of the
/// standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace vcmax
