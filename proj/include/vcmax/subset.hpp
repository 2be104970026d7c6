#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <type_traits>
#include <vector>

namespace vcmax {

/// Largest ground set representable by a Subset.
inline constexpr std::size_t kMaxGround = 64;

/// A subset of an ordered ground, as a bit mask: bit i is the i-th element
/// in the ground's order.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr Subset singleton(std::size_t i) { return Subset(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr Subset with(std::size_t i) const { return Subset(bits_ | (std::uint64_t{1} << i)); }
  constexpr Subset without(std::size_t i) const { return Subset(bits_ & ~(std::uint64_t{1} << i)); }

  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
  /// Set difference a \ b.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

  /// Element indices in ascending order.
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Packs the bits of `s` lying in `within` into a dense word: bit j of the
/// result is the j-th element of `within`.
constexpr std::uint64_t pack(Subset s, Subset within) {
  std::uint64_t out = 0;
  int j = 0;
  for (auto w = within.bits(); w != 0; w &= w - 1, ++j) {
    if (s.bits() & (w & (~w + 1))) out |= std::uint64_t{1} << j;
  }
  return out;
}

/// Inverse of pack().
constexpr Subset unpack(std::uint64_t packed, Subset within) {
  std::uint64_t out = 0;
  int j = 0;
  for (auto w = within.bits(); w != 0; w &= w - 1, ++j) {
    if ((packed >> j) & 1U) out |= w & (~w + 1);
  }
  return Subset(out);
}

namespace detail {
// Invokes f(s); a callback returning bool stops the enumeration by returning false.
template <class F>
bool visit(F& f, Subset s) {
  if constexpr (std::is_same_v<std::invoke_result_t<F&, Subset>, bool>) {
    return f(s);
  } else {
    f(s);
    return true;
  }
}
}  // namespace detail

/// Calls f(Subset) for every k-element subset of {0..n-1}, in increasing
/// numeric order (Gosper's hack). If f returns bool, false stops early.
template <class F>
void for_each_subset_of_size(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  if (k == 0) {
    detail::visit(f, Subset{});
    return;
  }
  const std::uint64_t limit_bit = n >= 64 ? 0 : std::uint64_t{1} << n;
  std::uint64_t s = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    if (!detail::visit(f, Subset(s))) return;
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0 || (limit_bit != 0 && (r & limit_bit))) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

/// Calls f(Subset) for every subset of `s`, including the empty set and s,
/// in decreasing numeric order. If f returns bool, false stops early.
template <class F>
void for_each_subset_of(Subset s, F&& f) {
  std::uint64_t sub = s.bits();
  while (true) {
    if (!detail::visit(f, Subset(sub))) return;
    if (sub == 0) break;
    sub = (sub - 1) & s.bits();
  }
}

}  // namespace vcmax

template <>
struct std::hash<vcmax::Subset> {
  std::size_t operator()(vcmax::Subset s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
