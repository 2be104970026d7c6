#include "vcmax/core.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <cmath>
#include <numeric>
#include <sstream>

namespace vcmax {

void require_within_cap(std::size_t n, std::size_t cap, std::string_view operation) {
  if (n > cap) {
    std::ostringstream os;
    os << operation << ": ground of size " << n << " exceeds the enumeration cap " << cap
       << " (raise it with VCMAX_CAP, or use a sampled mode such as vcm/density)";
    throw SizeError(os.str());
  }
}

namespace {

bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == ',' || c == ':' || c == '{' || c == '}' || c == '"' || std::isspace(static_cast<unsigned char>(c));
  });
}

}  // namespace

OrderedGround::OrderedGround(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxGround) {
    throw SizeError("ground has " + std::to_string(labels_.size()) + " elements; at most " +
                    std::to_string(kMaxGround) + " are supported");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!valid_label(labels_[i])) throw InputError("invalid ground label '" + labels_[i] + "'");
    if (!index_.emplace(labels_[i], i).second) throw InputError("duplicate ground label '" + labels_[i] + "'");
  }
}

OrderedGround OrderedGround::chain(std::size_t n, long long first) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(first + static_cast<long long>(i)));
  return OrderedGround(std::move(labels));
}

std::optional<std::size_t> OrderedGround::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Subset OrderedGround::subset_of(std::span<const std::string> labels) const {
  Subset s;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw InputError("unknown label '" + l + "'");
    s = s.with(*i);
  }
  return s;
}

Subset OrderedGround::parse_subset(std::string_view text) const {
  std::string body(text);
  if (!body.empty() && body.front() == '{') body.erase(0, 1);
  if (!body.empty() && body.back() == '}') body.pop_back();
  std::vector<std::string> parts;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1 && parts.front().empty()) return Subset{};
  for (const auto& p : parts) {
    if (p.empty()) throw InputError("empty label in subset '" + std::string(text) + "'");
  }
  return subset_of(parts);
}

std::string OrderedGround::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (auto i : s.elements()) {
    if (!first) out += ',';
    out += labels_.at(i);
    first = false;
  }
  return out + "}";
}

std::vector<std::string> OrderedGround::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (auto i : s.elements()) out.push_back(labels_.at(i));
  return out;
}

OrderedGround OrderedGround::sub_ground(Subset s) const { return OrderedGround(labels_of(s)); }

SetFamily::SetFamily(OrderedGround ground, std::vector<Subset> members)
    : ground_(std::move(ground)), members_(std::move(members)), sorted_(members_) {
  const Subset full = ground_.full();
  for (auto m : members_) {
    if (!m.is_subset_of(full)) throw InputError("member outside the ground");
  }
  std::sort(sorted_.begin(), sorted_.end());
  auto dup = std::adjacent_find(sorted_.begin(), sorted_.end());
  if (dup != sorted_.end()) throw InputError("duplicate member " + ground_.format(*dup));
}

SetFamily SetFamily::normalized(OrderedGround ground, std::vector<Subset> members) {
  std::vector<Subset> unique;
  std::vector<Subset> seen;
  for (auto m : members) {
    auto it = std::lower_bound(seen.begin(), seen.end(), m);
    if (it != seen.end() && *it == m) continue;
    seen.insert(it, m);
    unique.push_back(m);
  }
  return SetFamily(std::move(ground), std::move(unique));
}

bool SetFamily::contains(Subset s) const { return std::binary_search(sorted_.begin(), sorted_.end(), s); }

std::string to_word(Subset s, std::size_t n) {
  std::string w(n, '0');
  for (std::size_t j = 0; j < n; ++j) {
    if (s.contains(j)) w[j] = '1';
  }
  return w;
}

std::string SetFamily::word(std::size_t i) const { return to_word(members_.at(i), ground_.size()); }

SetFamily restrict(const SetFamily& family, Subset a) {
  if (!a.is_subset_of(family.ground().full())) throw InputError("restriction set is not inside the ground");
  std::vector<Subset> traces;
  std::vector<std::uint64_t> seen;
  for (auto m : family.members()) {
    const std::uint64_t packed = pack(m & a, a);
    auto it = std::lower_bound(seen.begin(), seen.end(), packed);
    if (it != seen.end() && *it == packed) continue;
    seen.insert(it, packed);
    traces.emplace_back(packed);
  }
  return SetFamily(family.ground().sub_ground(a), std::move(traces));
}

std::size_t trace_count(const SetFamily& family, Subset a) {
  if (!a.is_subset_of(family.ground().full())) throw InputError("trace set is not inside the ground");
  std::vector<std::uint64_t> traces;
  traces.reserve(family.size());
  for (auto m : family.members()) traces.push_back((m & a).bits());
  std::sort(traces.begin(), traces.end());
  return static_cast<std::size_t>(std::unique(traces.begin(), traces.end()) - traces.begin());
}

bool shatters(const SetFamily& family, Subset a) {
  if (a.size() >= 63) return false;
  const auto need = std::uint64_t{1} << a.size();
  if (family.size() < need) {
    if (!a.is_subset_of(family.ground().full())) throw InputError("shatter set is not inside the ground");
    return false;
  }
  return trace_count(family, a) == need;
}

namespace {

bool some_subset_shattered(const SetFamily& family, std::size_t k) {
  const std::size_t n = family.ground().size();
  if (k > n) return false;
  if (k < 63 && family.size() < (std::uint64_t{1} << k)) return false;
  bool found = false;
  for_each_subset_of_size(n, k, [&](Subset a) {
    found = shatters(family, a);
    return !found;
  });
  return found;
}

}  // namespace

std::size_t vc_dimension(const SetFamily& family) {
  if (family.empty()) throw InputError("vc_dimension of an empty family");
  std::size_t d = 0;
  for (std::size_t k = 1; k <= family.ground().size(); ++k) {
    if (!some_subset_shattered(family, k)) break;
    d = k;
  }
  return d;
}

bool vc_dimension_at_most(const SetFamily& family, std::size_t d) {
  if (family.empty()) throw InputError("vc_dimension of an empty family");
  return !some_subset_shattered(family, d + 1);
}

BigInt sauer_bound(std::int64_t n, std::int64_t d) {
  if (n < 0 || d < 0) throw InputError("sauer_bound requires nonnegative n and d");
  if (d >= n) return BigInt(1) << static_cast<unsigned>(n);
  BigInt term = 1;
  BigInt total = 1;
  for (std::int64_t i = 1; i <= d; ++i) {
    term = term * (n - i + 1) / i;
    total += term;
  }
  return total;
}

std::uint64_t sauer_bound_u64(std::size_t n, std::size_t d) {
  if (n > 63) throw SizeError("sauer_bound_u64 requires n <= 63; use sauer_bound");
  return sauer_bound(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)).convert_to<std::uint64_t>();
}

SauerProfile sauer_profile(const SetFamily& family, std::size_t cap) {
  const std::size_t n = family.ground().size();
  require_within_cap(n, cap, "sauer_profile");
  SauerProfile p;
  p.vc_dimension = vc_dimension(family);
  p.counts.assign(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    for_each_subset_of_size(n, k, [&](Subset a) {
      p.counts[k] = std::max<std::uint64_t>(p.counts[k], trace_count(family, a));
    });
    p.bounds.push_back(sauer_bound_u64(k, p.vc_dimension));
  }
  return p;
}

GrowthEstimate estimate_growth_exponent(const TraceOracle& oracle, std::span<const std::size_t> sizes,
                                        std::uint64_t seed) {
  if (sizes.size() < 2) throw InputError("growth estimate needs at least two sizes");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw InputError("growth estimate sizes must be positive");
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw InputError("growth estimate sizes must be strictly ascending");
  }
  std::mt19937_64 rng(seed);
  GrowthEstimate est;
  std::vector<double> xs;
  std::vector<double> ys;
  for (auto k : sizes) {
    const double c = oracle(k, rng);
    if (!(c >= 1.0)) throw InputError("trace oracle returned a count below 1");
    est.counts.push_back(c);
    xs.push_back(std::log(static_cast<double>(k)));
    ys.push_back(std::log(c));
  }
  const double m = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / m;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / m;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  est.slope = sxy / sxx;
  est.intercept = my - est.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (est.intercept + est.slope * xs[i]);
    ss += r * r;
  }
  est.residual = std::sqrt(ss / m);
  // Polynomial growth flattens toward its exponent in log-log coordinates;
  // exponential growth keeps steepening.
  if (xs.size() >= 3) {
    const double first = (ys[1] - ys[0]) / (xs[1] - xs[0]);
    const std::size_t l = xs.size() - 1;
    const double last = (ys[l] - ys[l - 1]) / (xs[l] - xs[l - 1]);
    est.superpolynomial_suspected = last > first + std::max(0.5, 0.25 * std::abs(first));
  }
  return est;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InputError("uniform_below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

TraceOracle random_subset_oracle(const SetFamily& family, std::size_t samples) {
  if (samples == 0) throw InputError("random_subset_oracle needs at least one sample");
  return [family, samples](std::size_t k, std::mt19937_64& rng) {
    const std::size_t n = family.ground().size();
    if (k > n) throw InputError("sample size " + std::to_string(k) + " exceeds ground size " + std::to_string(n));
    std::size_t best = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      // Floyd's sampling of k distinct indices.
      Subset a;
      for (std::size_t j = n - k; j < n; ++j) {
        const auto t = static_cast<std::size_t>(uniform_below(rng, j + 1));
        a = a.contains(t) ? a.with(j) : a.with(t);
      }
      best = std::max(best, trace_count(family, a));
    }
    return static_cast<double>(best);
  };
}

}  // namespace vcmax
