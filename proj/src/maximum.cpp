#include "vcmax/maximum.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace vcmax {

Code::Code(std::string_view bits) : bits_(bits) {
  if (bits_.empty()) throw InputError("code must be nonempty");
  if (bits_.find_first_not_of("01") != std::string::npos) {
    throw InputError("code '" + bits_ + "' must consist of 0 and 1 only");
  }
}

std::vector<Code> Code::all_of_length(std::size_t m) {
  if (m == 0 || m > 24) throw InputError("code length must be in 1..24");
  std::vector<Code> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
    std::string s(m, '0');
    for (std::size_t j = 0; j < m; ++j) {
      if ((v >> (m - 1 - j)) & 1U) s[j] = '1';
    }
    out.emplace_back(s);
  }
  return out;
}

bool is_subsequence(const Code& eta, const Code& mu) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < mu.size() && j < eta.size(); ++i) {
    if (mu[i] == eta[j]) ++j;
  }
  return j == eta.size();
}

bool induces_pattern(Subset a, const Code& rho, Subset positions) {
  if (rho.size() > positions.size()) return false;
  // Taking the earliest match for each bit leaves the longest suffix for the rest.
  std::size_t j = 0;
  for (auto p = positions.bits(); p != 0 && j < rho.size(); p &= p - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(p));
    if (a.contains(i) == rho[j]) ++j;
  }
  return j == rho.size();
}

bool induces_pattern(Subset a, const Code& rho, std::size_t n) { return induces_pattern(a, rho, Subset::full(n)); }

Code code_of(Subset label, Subset key) {
  if (key.empty()) throw InputError("code_of: empty key");
  std::string s;
  for (auto i : key.elements()) s.push_back(label.contains(i) ? '1' : '0');
  return Code(s);
}

namespace {

bool has_sauer_trace_count(const SetFamily& family, Subset a, std::size_t d) {
  return trace_count(family, a) == sauer_bound_u64(a.size(), d);
}

}  // namespace

std::optional<Subset> find_maximality_violation(const SetFamily& family, std::size_t d, std::size_t cap) {
  const std::size_t n = family.ground().size();
  require_within_cap(n, cap, "strict maximum check");
  std::optional<Subset> bad;
  auto probe = [&](Subset a) {
    if (!has_sauer_trace_count(family, a, d)) bad = a;
    return !bad;
  };
  if (d + 1 <= n) {
    for_each_subset_of_size(n, d + 1, probe);
    if (bad) return bad;
  }
  for (std::size_t k = 0; k <= n && !bad; ++k) {
    if (k == d + 1) continue;
    for_each_subset_of_size(n, k, probe);
  }
  return bad;
}

bool is_d_maximum(const SetFamily& family, std::size_t d, MaximumCheck mode, std::size_t cap) {
  if (family.empty()) return false;
  if (mode == MaximumCheck::strict) return !find_maximality_violation(family, d, cap);
  const std::size_t n = family.ground().size();
  if (sauer_bound(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)) != family.size()) return false;
  return vc_dimension_at_most(family, d);
}

Subset forbidden_label(const SetFamily& family, Subset a) {
  if (!a.is_subset_of(family.ground().full())) throw InputError("forbidden_label: set is not inside the ground");
  if (a.size() > 20) throw SizeError("forbidden_label: set too large to enumerate its traces");
  std::vector<bool> seen(std::size_t{1} << a.size(), false);
  for (auto m : family.members()) seen[pack(m, a)] = true;
  std::optional<Subset> missing;
  std::size_t missing_count = 0;
  for (std::uint64_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) {
      ++missing_count;
      missing = unpack(v, a);
    }
  }
  if (missing_count != 1) {
    throw NotMaximumError("family is not maximum on " + family.ground().format(a) + ": " +
                              std::to_string(missing_count) + " traces missing where exactly one is required",
                          a);
  }
  return *missing;
}

ForbiddenLabelTable forbidden_label_table(const SetFamily& family, std::size_t d) {
  ForbiddenLabelTable table;
  table.d = d;
  for_each_subset_of_size(family.ground().size(), d + 1,
                          [&](Subset a) { table.entries.emplace(a, forbidden_label(family, a)); });
  return table;
}

std::set<Code> forbidden_codes(const SetFamily& family, std::size_t d) {
  std::set<Code> out;
  for (const auto& [key, label] : forbidden_label_table(family, d).entries) out.insert(code_of(label, key));
  return out;
}

SetFamily reconstruct_from_labels(const ForbiddenLabelTable& table, const OrderedGround& ground, std::size_t cap) {
  const std::size_t n = ground.size();
  require_within_cap(n, cap, "reconstruct_from_labels");
  for (const auto& [key, label] : table.entries) {
    if (!key.is_subset_of(ground.full())) throw InputError("label table key outside the ground");
    if (key.size() != table.d + 1) {
      throw InputError("label table key " + ground.format(key) + " does not have " + std::to_string(table.d + 1) +
                       " elements");
    }
    if (!label.is_subset_of(key)) {
      throw InputError("label " + ground.format(label) + " is not a subset of its key " + ground.format(key));
    }
  }
  std::vector<std::string> missing;
  for_each_subset_of_size(n, table.d + 1, [&](Subset a) {
    if (!table.entries.contains(a)) missing.push_back(ground.format(a));
  });
  if (!missing.empty()) {
    std::string msg = "label table is missing " + std::to_string(missing.size()) + " key(s):";
    const std::size_t shown = std::min<std::size_t>(missing.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) msg += " " + missing[i];
    if (shown < missing.size()) msg += " ...";
    throw InputError(msg);
  }
  std::vector<Subset> members;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const Subset cand(b);
    const bool ok = std::all_of(table.entries.begin(), table.entries.end(),
                                [&](const auto& e) { return (cand & e.first) != e.second; });
    if (ok) members.push_back(cand);
  }
  return SetFamily(ground, std::move(members));
}

bool is_finitely_characterized(const SetFamily& family, const Code& eta, std::span<const Subset> probes) {
  for (auto probe : probes) {
    if (!probe.is_subset_of(family.ground().full())) throw InputError("probe outside the ground");
    if (probe.size() > 20) throw SizeError("probe too large to enumerate its subsets");
    std::vector<bool> is_trace(std::size_t{1} << probe.size(), false);
    for (auto m : family.members()) is_trace[pack(m, probe)] = true;
    for (std::uint64_t v = 0; v < is_trace.size(); ++v) {
      if (is_trace[v] == induces_pattern(unpack(v, probe), eta, probe)) return false;
    }
  }
  return true;
}

bool is_finitely_characterized(const SetFamily& family, const Code& eta, std::size_t cap) {
  const std::size_t n = family.ground().size();
  require_within_cap(n, cap, "is_finitely_characterized");
  std::vector<Subset> probes;
  for_each_subset_of(Subset::full(n), [&](Subset s) { probes.push_back(s); });
  return is_finitely_characterized(family, eta, probes);
}

WitnessSearch vcm_witness_search(const SetFamily& family, std::size_t d, std::size_t max_witness,
                                 std::size_t budget, std::uint64_t seed) {
  if (family.empty()) throw InputError("vcm_witness_search on an empty family");
  const std::size_t n = family.ground().size();
  const std::size_t lo = std::min(d + 1, n);
  const std::size_t hi = std::min(max_witness, n);
  WitnessSearch out;
  if (hi < lo || lo == 0) {
    out.exhaustive = true;
    return out;
  }
  auto works = [&](Subset a) {
    ++out.candidates_checked;
    return is_d_maximum(restrict(family, a), d);
  };

  if (n <= 14) {
    bool exhausted_budget = false;
    for (std::size_t k = hi; k >= lo && !out.witness && !exhausted_budget; --k) {
      for_each_subset_of_size(n, k, [&](Subset a) {
        if (out.candidates_checked >= budget) {
          exhausted_budget = true;
          return false;
        }
        if (works(a)) out.witness = a;
        return !out.witness;
      });
    }
    out.exhaustive = !exhausted_budget;
    return out;
  }

  // Being d-maximum is inherited by subsets, so growing greedily from a
  // random order only ever needs to test one new element at a time.
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  while (out.candidates_checked < budget) {
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
    Subset current;
    for (auto x : order) {
      if (current.size() >= hi || out.candidates_checked >= budget) break;
      const Subset next = current.with(x);
      if (next.size() < lo || works(next)) current = next;
    }
    if (current.size() >= lo && current.size() <= hi && works(current)) {
      if (!out.witness || current.size() > out.witness->size()) out.witness = current;
      if (out.witness->size() == hi) break;
    }
  }
  return out;
}

}  // namespace vcmax
