#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vcmax {

/// Outcome of checking one mathematical claim on concrete input. A failed
/// report is a finding about the input, not an error in the program.
struct Report {
  std::string claim;
  bool passed = true;
  std::vector<std::pair<std::string, std::int64_t>> quantities;
  std::vector<std::string> witnesses;

  explicit Report(std::string claim_id) : claim(std::move(claim_id)) {}

  /// Records or overwrites a named quantity.
  void quantity(const std::string& name, std::int64_t value);
  /// Value of a recorded quantity; throws std::out_of_range when absent.
  std::int64_t get(const std::string& name) const;
  void witness(std::string text) { witnesses.push_back(std::move(text)); }
  /// Marks the claim violated and records why.
  void fail(std::string why);
};

}  // namespace vcmax
