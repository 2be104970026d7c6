#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "vcmax/core.hpp"

namespace vcmax {

/// A nonempty binary word used as a forbidden or induced pattern.
class Code {
 public:
  /// Parses a raw 0/1 string; throws InputError on anything else.
  explicit Code(std::string_view bits);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] == '1'; }
  const std::string& str() const { return bits_; }

  /// All codes of length m in lexicographic order.
  static std::vector<Code> all_of_length(std::size_t m);

  friend bool operator==(const Code&, const Code&) = default;
  friend auto operator<=>(const Code&, const Code&) = default;

 private:
  std::string bits_;
};

/// True iff eta embeds into mu by an order-preserving map matching bits.
bool is_subsequence(const Code& eta, const Code& mu);

/// True iff some positions p_0 < ... < p_{m-1} drawn from `positions` satisfy
/// (p_j in a) <=> rho(j) = 1.
bool induces_pattern(Subset a, const Code& rho, Subset positions);
/// Same, over the whole chain {0..n-1}.
bool induces_pattern(Subset a, const Code& rho, std::size_t n);

/// The 0/1 reading of `label` along the elements of `key` in ground order.
Code code_of(Subset label, Subset key);

enum class MaximumCheck {
  fast,    ///< |C| = sauer_bound(n, d) and VC(C) <= d
  strict,  ///< |C|^A| = sauer_bound(|A|, d) for every A
};

bool is_d_maximum(const SetFamily& family, std::size_t d, MaximumCheck mode = MaximumCheck::fast,
                  std::size_t cap = kDefaultEnumerationCap);

/// Smallest subset A with |C|^A| != sauer_bound(|A|, d), trying the
/// (d+1)-subsets first; nullopt when the family is d-maximum.
std::optional<Subset> find_maximality_violation(const SetFamily& family, std::size_t d,
                                                std::size_t cap = kDefaultEnumerationCap);

/// The unique subset of `a` missing from the traces on `a`. Throws
/// NotMaximumError naming `a` when zero or several traces are missing.
Subset forbidden_label(const SetFamily& family, Subset a);

struct ForbiddenLabelTable {
  std::size_t d = 0;
  std::map<Subset, Subset> entries;  ///< (d+1)-subset -> its forbidden label

  friend bool operator==(const ForbiddenLabelTable&, const ForbiddenLabelTable&) = default;
};

ForbiddenLabelTable forbidden_label_table(const SetFamily& family, std::size_t d);

std::set<Code> forbidden_codes(const SetFamily& family, std::size_t d);

/// {B : B ∩ A != C_A for every entry}, filtered over all 2^n candidates.
/// Throws InputError listing missing keys when the table is incomplete.
SetFamily reconstruct_from_labels(const ForbiddenLabelTable& table, const OrderedGround& ground,
                                  std::size_t cap = kDefaultEnumerationCap);

/// For each probe X0 and A ⊆ X0: A is a trace on X0 iff eta is not induced on
/// A by elements of X0.
bool is_finitely_characterized(const SetFamily& family, const Code& eta, std::span<const Subset> probes);
/// Probes every subset of the ground.
bool is_finitely_characterized(const SetFamily& family, const Code& eta, std::size_t cap = kDefaultEnumerationCap);

struct WitnessSearch {
  std::optional<Subset> witness;  ///< restrict(family, *witness) is d-maximum
  std::size_t candidates_checked = 0;
  bool exhaustive = false;        ///< the search covered every candidate size it was allowed
};

/// Looks for a large subset on which the family is d-maximum, of size in
/// [d+1, max_witness]. Exhaustive (largest first) for n <= 14, otherwise
/// seeded random restarts with greedy growth. An empty result means "not
/// found within budget", never "does not exist".
WitnessSearch vcm_witness_search(const SetFamily& family, std::size_t d, std::size_t max_witness,
                                 std::size_t budget, std::uint64_t seed);

}  // namespace vcmax
