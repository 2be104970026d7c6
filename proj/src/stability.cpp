#include "vcmax/stability.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

#include "vcmax/generators.hpp"
#include "vcmax/genus.hpp"
#include "vcmax/maximum.hpp"

namespace vcmax {

namespace {

// Fixed-width bitset over family members.
class MemberBits {
 public:
  explicit MemberBits(std::size_t size, bool fill = false)
      : words_((size + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
    if (fill && size % 64 != 0) words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
  }

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return kUnreachable;
  }
  MemberBits with(const MemberBits& mask, bool keep_set) const {
    MemberBits out = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= keep_set ? mask.words_[k] : ~mask.words_[k];
    return out;
  }
  bool meets(const MemberBits& mask, bool keep_set) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & (keep_set ? mask.words_[k] : ~mask.words_[k])) != 0) return true;
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> words_;
};

class LadderSearch {
 public:
  explicit LadderSearch(const SetFamily& family) : family_(family), n_(family.ground().size()) {
    for (std::size_t x = 0; x < n_; ++x) {
      MemberBits bits(family.size());
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (family.members()[i].contains(x)) bits.set(i);
      }
      containing_.push_back(std::move(bits));
    }
  }

  LadderResult run() {
    std::vector<MemberBits> levels{MemberBits(family_.size(), true)};
    std::vector<std::size_t> points;
    dfs(levels, points, Subset{});
    return best_;
  }

 private:
  // levels[j] holds the members meeting the chosen points in exactly the
  // first j of them; levels[1..m] are nonempty.
  void dfs(const std::vector<MemberBits>& levels, std::vector<std::size_t>& points, Subset used) {
    const std::size_t m = points.size();
    if (m > best_.dimension) record(levels, points);
    if (best_.dimension == n_) return;
    std::vector<std::size_t> candidates;
    for (std::size_t x = 0; x < n_; ++x) {
      if (used.contains(x) || !levels[m].meets(containing_[x], true)) continue;
      bool ok = true;
      for (std::size_t j = 1; j <= m && ok; ++j) ok = levels[j].meets(containing_[x], false);
      if (ok) candidates.push_back(x);
    }
    if (m + candidates.size() <= best_.dimension) return;
    for (auto x : candidates) {
      std::vector<MemberBits> next;
      next.reserve(m + 2);
      for (std::size_t j = 0; j <= m; ++j) next.push_back(levels[j].with(containing_[x], false));
      next.push_back(levels[m].with(containing_[x], true));
      points.push_back(x);
      dfs(next, points, used.with(x));
      points.pop_back();
      if (best_.dimension == n_) return;
    }
  }

  void record(const std::vector<MemberBits>& levels, const std::vector<std::size_t>& points) {
    best_.dimension = points.size();
    best_.witness.points = points;
    best_.witness.sets.clear();
    for (std::size_t j = 1; j < levels.size(); ++j) best_.witness.sets.push_back(family_.members()[levels[j].first()]);
  }

  const SetFamily& family_;
  std::size_t n_;
  std::vector<MemberBits> containing_;
  LadderResult best_;
};

std::size_t symdiff_size(Subset a, Subset b) { return (a ^ b).size(); }

void require_maximum(const SetFamily& family, std::size_t d, const char* operation) {
  if (!is_d_maximum(family, d)) {
    throw PreconditionError(std::string(operation) + " requires a " + std::to_string(d) + "-maximum family");
  }
}

}  // namespace

bool is_ladder(const SetFamily& family, const LadderWitness& w) {
  if (w.points.size() != w.sets.size()) return false;
  Subset seen;
  for (auto x : w.points) {
    if (x >= family.ground().size() || seen.contains(x)) return false;
    seen = seen.with(x);
  }
  for (std::size_t j = 0; j < w.sets.size(); ++j) {
    if (!family.contains(w.sets[j])) return false;
    for (std::size_t i = 0; i < w.points.size(); ++i) {
      if (w.sets[j].contains(w.points[i]) != (i <= j)) return false;
    }
  }
  return true;
}

LadderResult ladder_dimension(const SetFamily& family) {
  if (family.empty()) throw InputError("ladder_dimension of an empty family");
  return LadderSearch(family).run();
}

std::string format_ladder(const OrderedGround& ground, const LadderWitness& w) {
  std::string out;
  for (std::size_t i = 0; i < w.points.size(); ++i) out += (i ? "," : "") + ground.label(w.points[i]);
  out += " |";
  for (std::size_t j = 0; j < w.sets.size(); ++j) out += (j ? "," : " ") + ground.format(w.sets[j]);
  return out;
}

OneInclusionGraph::OneInclusionGraph(const SetFamily& family) : adjacency_(family.size()) {
  std::unordered_map<Subset, std::size_t> index;
  for (std::size_t i = 0; i < family.size(); ++i) index.emplace(family.members()[i], i);
  const std::size_t n = family.ground().size();
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      auto it = index.find(family.members()[i] ^ Subset::singleton(x));
      if (it != index.end()) adjacency_[i].push_back(it->second);
    }
    std::sort(adjacency_[i].begin(), adjacency_[i].end());
    edges_ += adjacency_[i].size();
  }
  edges_ /= 2;
  component_.assign(family.size(), kUnreachable);
  for (std::size_t s = 0; s < family.size(); ++s) {
    if (component_[s] != kUnreachable) continue;
    std::deque<std::size_t> queue{s};
    component_[s] = component_count_;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto w : adjacency_[v]) {
        if (component_[w] == kUnreachable) {
          component_[w] = component_count_;
          queue.push_back(w);
        }
      }
    }
    ++component_count_;
  }
}

std::vector<std::size_t> OneInclusionGraph::distances_from(std::size_t v) const {
  std::vector<std::size_t> dist(adjacency_.size(), kUnreachable);
  std::deque<std::size_t> queue{v};
  dist.at(v) = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto w : adjacency_[u]) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Report verify_distance_law(const SetFamily& family, std::size_t max_witnesses) {
  Report r("hamming-equals-graph-distance");
  const OneInclusionGraph g(family);
  std::int64_t pairs = 0;
  std::int64_t violations = 0;
  const auto& ms = family.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto dist = g.distances_from(i);
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      ++pairs;
      const std::size_t h = symdiff_size(ms[i], ms[j]);
      if (dist[j] == h) continue;
      ++violations;
      if (static_cast<std::size_t>(violations) <= max_witnesses) {
        r.witness(family.ground().format(ms[i]) + " " + family.ground().format(ms[j]) + ": hamming " +
                  std::to_string(h) + ", graph " + (dist[j] == kUnreachable ? "inf" : std::to_string(dist[j])));
      }
    }
  }
  r.passed = violations == 0;
  r.quantity("members", static_cast<std::int64_t>(family.size()));
  r.quantity("edges", static_cast<std::int64_t>(g.edge_count()));
  r.quantity("components", static_cast<std::int64_t>(g.component_count()));
  r.quantity("pairs", pairs);
  r.quantity("violations", violations);
  return r;
}

SetFamily symdiff_family(const SetFamily& family, Subset a) {
  if (!a.is_subset_of(family.ground().full())) throw InputError("symmetric-difference set outside the ground");
  std::vector<Subset> out;
  out.reserve(family.size());
  for (auto m : family.members()) out.push_back(m ^ a);
  return SetFamily(family.ground(), std::move(out));
}

TightLadderExample tight_ladder_example(std::size_t n) {
  if (n < 1) throw InputError("tight_ladder_example requires n >= 1");
  if (2 * n > kMaxGround) throw SizeError("tight_ladder_example: ground of size 2n exceeds 64");
  std::vector<std::string> labels;
  for (std::size_t k = n; k >= 1; --k) labels.push_back("-" + std::to_string(k));
  for (std::size_t k = 1; k <= n; ++k) labels.push_back(std::to_string(k));
  const OrderedGround ground(std::move(labels));
  // -k sits at index n-k and k at index n+k-1.
  std::vector<Subset> literal;
  for (std::size_t i = 1; i <= n; ++i) literal.emplace_back(((std::uint64_t{1} << i) - 1) << n);
  for (std::size_t i = 1; i <= n; ++i) literal.emplace_back(((std::uint64_t{1} << i) - 1) << (n - i));
  std::vector<Subset> with_empty{Subset{}};
  with_empty.insert(with_empty.end(), literal.begin(), literal.end());
  return TightLadderExample{SetFamily(ground, std::move(with_empty)), SetFamily(ground, std::move(literal)),
                            Subset::full(n)};
}

Report check_symdiff_bound(const SetFamily& family, Subset a) {
  Report r("symdiff-ladder-bound");
  const auto before = ladder_dimension(family);
  const auto flipped = symdiff_family(family, a);
  const auto after = ladder_dimension(flipped);
  r.quantity("ladder_dimension", static_cast<std::int64_t>(before.dimension));
  r.quantity("ladder_dimension_after", static_cast<std::int64_t>(after.dimension));
  r.quantity("bound", static_cast<std::int64_t>(2 * before.dimension));
  r.witness("ladder: " + format_ladder(family.ground(), before.witness));
  r.witness("ladder after: " + format_ladder(family.ground(), after.witness));
  if (after.dimension > 2 * before.dimension) {
    r.fail("flip " + family.ground().format(a) + " raises the ladder dimension from " +
           std::to_string(before.dimension) + " to " + std::to_string(after.dimension));
  }
  return r;
}

Report check_cc(const SetFamily& family, std::size_t d) {
  require_maximum(family, d, "check_cc");
  Report r("maximum-member-size-bounds");
  const auto ld = ladder_dimension(family);
  const std::size_t n = ld.dimension;
  r.quantity("ladder_dimension", static_cast<std::int64_t>(n));
  r.witness("ladder: " + format_ladder(family.ground(), ld.witness));
  const auto& g = family.ground();
  const auto& ms = family.members();

  if (family.contains(Subset{})) {
    std::size_t largest = 0;
    for (auto c : ms) {
      largest = std::max(largest, c.size());
      if (c.size() > n) r.fail("clause 1: member " + g.format(c) + " has more than " + std::to_string(n) + " elements");
    }
    r.quantity("largest_member", static_cast<std::int64_t>(largest));
  }

  std::size_t largest_flip = 0;
  std::optional<std::pair<Subset, Subset>> largest_pair;
  for (auto b : ms) {
    for (auto c : ms) {
      const std::size_t s = symdiff_size(c, b);
      if (s > largest_flip || !largest_pair) {
        largest_flip = std::max(largest_flip, s);
        largest_pair = {b, c};
      }
      if (s > 2 * n) r.fail("clause 2: " + g.format(c) + " xor " + g.format(b) + " has " + std::to_string(s) + " elements");
    }
  }
  r.quantity("largest_symdiff_member", static_cast<std::int64_t>(largest_flip));
  if (largest_pair) {
    r.witness("largest symdiff: " + g.format(largest_pair->second) + " xor " + g.format(largest_pair->first));
  }

  // Clause 3 in its stated form: C = S xor B for some S of size at most 2n.
  for (auto b : ms) {
    for (auto c : ms) {
      const Subset s = c ^ b;
      if (!(s.size() <= 2 * n && (s ^ b) == c)) {
        r.fail("clause 3: " + g.format(c) + " is not in [X]^{<=" + std::to_string(2 * n) + "} xor " + g.format(b));
      }
    }
  }
  return r;
}

LadderConverse ladder_converse(const SetFamily& family, const LadderWitness& w) {
  if (!is_ladder(family, w)) throw InputError("ladder_converse: not a ladder of the family");
  std::vector<std::string> labels;
  Subset points;
  for (auto x : w.points) {
    labels.push_back(family.ground().label(x));
    points = points.with(x);
  }
  // Initial segments are the sets avoiding <01>; below two points that code
  // cannot occur and every subset is an initial segment.
  OrderedGround order(labels);
  LadderConverse out{order.size() >= 2 ? pattern_avoiding_family(order, Code("01"), kMaxGround)
                                       : bounded_size_family(order, order.size())};
  out.one_maximum = is_d_maximum(out.family, 1);
  const Subset full = out.family.ground().full();
  if (out.family.contains(full) && out.family.contains(Subset{})) out.full_minus_empty = (full - Subset{}).size();
  std::vector<Subset> traced;
  for (auto c : family.members()) {
    Subset t;
    for (std::size_t i = 0; i < w.points.size(); ++i) {
      if (c.contains(w.points[i])) t = t.with(i);
    }
    traced.push_back(t);
  }
  std::sort(traced.begin(), traced.end());
  for (auto s : out.family.members()) {
    if (std::binary_search(traced.begin(), traced.end(), s)) ++out.traced_members;
  }
  return out;
}

Report check_theorem_tt(const SetFamily& family, std::size_t d) {
  require_maximum(family, d, "check_theorem_tt");
  Report r("member-difference-at-most-ladder-dimension");
  const auto ld = ladder_dimension(family);
  r.quantity("ladder_dimension", static_cast<std::int64_t>(ld.dimension));
  r.witness("ladder: " + format_ladder(family.ground(), ld.witness));
  std::size_t largest = 0;
  std::pair<Subset, Subset> arg{};
  for (auto a : family.members()) {
    for (auto b : family.members()) {
      if ((a - b).size() > largest) {
        largest = (a - b).size();
        arg = {a, b};
      }
    }
  }
  r.quantity("max_difference", static_cast<std::int64_t>(largest));
  r.witness("largest difference: " + family.ground().format(arg.first) + " \\ " + family.ground().format(arg.second));
  if (largest > ld.dimension) {
    r.fail("difference " + std::to_string(largest) + " exceeds ladder dimension " + std::to_string(ld.dimension));
  }
  if (ld.dimension >= 1 && ld.dimension <= kDefaultEnumerationCap) {
    const auto conv = ladder_converse(family, ld.witness);
    r.quantity("converse_length", static_cast<std::int64_t>(ld.dimension));
    r.quantity("converse_members", static_cast<std::int64_t>(conv.family.size()));
    r.quantity("converse_traced", static_cast<std::int64_t>(conv.traced_members));
    r.quantity("converse_full_minus_empty", static_cast<std::int64_t>(conv.full_minus_empty));
    if (!conv.one_maximum) r.fail("converse: initial segments of the ladder are not 1-maximum");
    if (conv.full_minus_empty != ld.dimension) r.fail("converse: |A \\ {}| differs from the ladder length");
  }
  return r;
}

NormalForm stable_maximum_normal_form(const SetFamily& family, std::optional<Subset> base) {
  if (family.empty()) throw InputError("stable_maximum_normal_form of an empty family");
  NormalForm nf;
  nf.ladder_dimension = ladder_dimension(family).dimension;
  nf.m = 2 * nf.ladder_dimension;
  nf.base = base.value_or(family.members().front());
  if (!nf.base.is_subset_of(family.ground().full())) throw InputError("normal-form base outside the ground");
  auto fits = [&](std::size_t m) {
    return std::all_of(family.members().begin(), family.members().end(),
                       [&](Subset c) { return symdiff_size(c, nf.base) <= m; });
  };
  nf.containment = fits(nf.m);
  nf.least_m = 0;
  while (!fits(nf.least_m)) ++nf.least_m;
  return nf;
}

SmallNormalFormSearch search_small_normal_form(const SetFamily& family, std::size_t cap) {
  if (family.empty()) throw InputError("search_small_normal_form of an empty family");
  const std::size_t n = family.ground().size();
  require_within_cap(n, cap, "search_small_normal_form");
  SmallNormalFormSearch out;
  out.ladder_dimension = ladder_dimension(family).dimension;
  out.best_m = n + 1;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    std::size_t worst = 0;
    for (auto c : family.members()) {
      worst = std::max(worst, symdiff_size(c, Subset(b)));
      if (worst >= out.best_m) break;
    }
    if (worst < out.best_m) {
      out.best_m = worst;
      out.best_base = Subset(b);
    }
  }
  out.within_ladder_dimension = out.best_m <= out.ladder_dimension;
  return out;
}

}  // namespace vcmax
