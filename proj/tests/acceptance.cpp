// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// (integer or rational); the only tolerances are the wall-clock limits on
// criteria 1 and 6.

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "oracles.hpp"
#include "vcmax/stability.hpp"

using namespace vcmax;

namespace {

constexpr double kCountingSeconds = 120.0;
constexpr double kDistanceSeconds = 60.0;
constexpr int kRandomCases = 1000;
constexpr int kRandomUnions = 250;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string code_set(const std::set<Code>& s) {
  std::string out = "{";
  for (const auto& c : s) out += (out.size() > 1 ? "," : "") + c.str();
  return out + "}";
}

Outcome avoiding_family_counts() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t families = 0;
  for (std::size_t d = 0; d <= 4; ++d) {
    for (std::size_t n = d + 1; n <= 14; ++n) {
      const BigInt expected = sauer_bound(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
      for (const auto& eta : Code::all_of_length(d + 1)) {
        ++families;
        const auto size = pattern_avoiding_family(OrderedGround::chain(n), eta).size();
        o.require(BigInt(size) == expected, "eta=" + eta.str() + " n=" + std::to_string(n) + " has " +
                                                std::to_string(size) + " members");
      }
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < kCountingSeconds, "took " + std::to_string(secs) + " s");
  o.detail << families << " families, " << secs << " s (limit " << kCountingSeconds << " s)";
  return o;
}

Outcome avoiding_family_codes() {
  Outcome o;
  std::size_t families = 0;
  for (std::size_t d = 0; d <= 3; ++d) {
    for (std::size_t n = d + 1; n <= 10; ++n) {
      for (const auto& eta : Code::all_of_length(d + 1)) {
        ++families;
        const auto codes = forbidden_codes(pattern_avoiding_family(OrderedGround::chain(n), eta), d);
        o.require(codes == std::set<Code>{eta}, "eta=" + eta.str() + " n=" + std::to_string(n) + " gave " + code_set(codes));
      }
    }
  }
  o.detail << families << " families";
  return o;
}

Outcome label_round_trip(const std::vector<corpus::Entry>& fams) {
  Outcome o;
  for (const auto& e : fams) {
    o.require(is_d_maximum(e.family, e.d), e.name + " is not maximum");
    const auto back = reconstruct_from_labels(forbidden_label_table(e.family, e.d), e.family.ground());
    o.require(back == e.family, e.name + " did not round trip");
  }
  o.detail << fams.size() << " maximum families";
  return o;
}

Outcome genus_agreement() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t with_components[7] = {};
  for (int i = 0; i < kRandomUnions; ++i) {
    const auto b = oracle::random_convex_union(rng, 6);
    ++with_components[b.components().size()];
    o.require(genus_scan(b) == genus_oracle(b), b.to_string());
  }
  o.require(genus_scan(ConvexUnion::parse("{0}")).str() == "11", "{0}");
  o.require(genus_scan(ConvexUnion::parse("(0,1)")).str() == "101", "(0,1)");
  o.detail << kRandomUnions << " random unions (by component count:";
  for (auto c : with_components) o.detail << " " << c;
  o.detail << "), anchors {0}->11 and (0,1)->101";
  return o;
}

Outcome pattern_sets() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t checks = 0;
  for (int i = 0; i < kRandomUnions; ++i) {
    const auto b = oracle::random_convex_union(rng, 6);
    const auto g = genus_scan(b);
    for (std::size_t m = 1; m <= 6; ++m) {
      std::set<Code> avoiders;
      for (const auto& rho : Code::all_of_length(m)) {
        if (!is_subsequence(g, rho)) avoiders.insert(rho);
      }
      const auto ps = pattern_set(b, m);
      std::set<Code> sampled;
      for (const auto& w : oracle::induced_codes(b, m)) sampled.emplace(w);
      o.require(ps == avoiders, b.to_string() + " m=" + std::to_string(m));
      o.require(ps == sampled, b.to_string() + " m=" + std::to_string(m) + " (sampled oracle)");
      ++checks;
    }
  }
  o.detail << checks << " (union, m) pairs, m <= 6";
  return o;
}

Outcome distance_law(const std::vector<corpus::Entry>& fams) {
  Outcome o;
  const auto t0 = Clock::now();
  std::int64_t pairs = 0;
  for (const auto& e : fams) {
    const auto r = verify_distance_law(e.family);
    pairs += r.get("pairs");
    o.require(r.passed && r.get("components") == 1, e.name);
  }
  const double secs = seconds_since(t0);
  o.require(secs < kDistanceSeconds, "took " + std::to_string(secs) + " s");
  o.detail << fams.size() << " families, " << pairs << " pairs, " << secs << " s (limit " << kDistanceSeconds << " s)";
  return o;
}

Outcome symdiff_bound() {
  Outcome o;
  std::mt19937_64 rng(7);
  int violations = 0;
  std::string first;
  for (int i = 0; i < kRandomCases; ++i) {
    const auto f = oracle::random_small_family(rng, 7);
    const Subset a(uniform_below(rng, std::uint64_t{1} << f.ground().size()));
    const auto r = check_symdiff_bound(f, a);
    if (r.passed) continue;
    if (violations++ == 0) {
      first = "n=" + std::to_string(f.ground().size()) + " |C|=" + std::to_string(f.size()) + " LD " +
              std::to_string(r.get("ladder_dimension")) + " -> " + std::to_string(r.get("ladder_dimension_after"));
    }
  }
  o.require(violations == 0, std::to_string(violations) + " of " + std::to_string(kRandomCases) +
                                 " random families exceed the doubled bound, e.g. " + first);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto t = tight_ladder_example(n);
    const auto before = ladder_dimension(t.family).dimension;
    const auto after = ladder_dimension(symdiff_family(t.family, t.flip)).dimension;
    o.require(before == n && after == 2 * n, "tight example n=" + std::to_string(n) + " gives " +
                                                 std::to_string(before) + " -> " + std::to_string(after));
  }
  o.detail << "random violations " << violations << "/" << kRandomCases << "; tight example LD n -> 2n for n = 1..5";
  return o;
}

Outcome member_size_bounds(const std::vector<corpus::Entry>& fams) {
  Outcome o;
  for (const auto& e : fams) o.require(check_cc(e.family, e.d).passed, e.name);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto c = bounded_size_family(OrderedGround::chain(2 * n), n);
    const auto flipped = symdiff_family(c, Subset::full(n));
    std::size_t largest = 0;
    for (auto m : flipped.members()) largest = std::max(largest, m.size());
    o.require(largest == 2 * n, "tightness n=" + std::to_string(n) + " largest " + std::to_string(largest));
    o.require(ladder_dimension(c).dimension == n, "tightness instance ladder dimension, n=" + std::to_string(n));
  }
  o.detail << fams.size() << " families; tightness member of size 2n for n = 1..5";
  return o;
}

Outcome difference_bound(const std::vector<corpus::Entry>& fams) {
  Outcome o;
  for (const auto& e : fams) o.require(check_theorem_tt(e.family, e.d).passed, e.name);
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<Subset> prefixes;
    for (std::size_t k = 0; k <= n + 1; ++k) prefixes.push_back(Subset::full(k));
    const SetFamily f(OrderedGround::chain(n + 1), prefixes);
    const auto ld = ladder_dimension(f);
    const auto conv = ladder_converse(f, ld.witness);
    o.require(ld.dimension == n + 1 && conv.one_maximum && conv.full_minus_empty == n + 1,
              "converse for ladder length " + std::to_string(n + 1));
  }
  o.detail << fams.size() << " families; converse 1-maximum with |A \\ {}| = n+1 for n = 0..5";
  return o;
}

Outcome geometry() {
  Outcome o;
  const auto pts = random_general_position_points(7, 1);
  const auto hp = halfplane_traces(pts);
  std::set<std::uint64_t> got;
  for (auto m : hp.family.members()) got.insert(m.bits());
  o.require(pts.general_position(), "sample not in general position");
  o.require(hp.family.size() == 29, "halfplane traces " + std::to_string(hp.family.size()));
  o.require(got == oracle::halfplane_traces(pts), "halfplane traces differ from the elimination oracle");
  o.require(is_d_maximum(hp.family, 2), "halfplane traces not 2-maximum");
  // four points around a fifth that lies in the box spanned by (0,1) and (3,2)
  const PointSample five(2, {{Rational(0), Rational(1)},
                             {Rational(2), Rational(0)},
                             {Rational(3), Rational(2)},
                             {Rational(1), Rational(3)},
                             {Rational(7, 5), Rational(8, 5)}});
  const auto rect = rectangle_traces(five);
  std::set<std::uint64_t> rgot;
  for (auto m : rect.family.members()) rgot.insert(m.bits());
  o.require(rgot == oracle::rectangle_traces(five), "rectangle traces differ from the bounding-box oracle");
  o.require(rect.family.size() < 31, "rectangle traces " + std::to_string(rect.family.size()));
  o.detail << "halfplane " << hp.family.size() << " traces (2-maximum); rectangles on 5 points "
           << rect.family.size() << " < 31 traces, VC " << vc_dimension(rect.family);
  return o;
}

Outcome oracle_equivalences() {
  Outcome o;
  std::mt19937_64 rng(11);
  for (int i = 0; i < kRandomCases; ++i) {
    const auto f = oracle::random_small_family(rng, 7);
    o.require(vc_dimension(f) == oracle::vc_dimension(f), "vc_dimension case " + std::to_string(i));
    o.require(ladder_dimension(f).dimension == oracle::ladder_dimension(f), "ladder_dimension case " + std::to_string(i));
    const std::size_t n = f.ground().size();
    const Subset a(uniform_below(rng, std::uint64_t{1} << n));
    std::string rho;
    const std::size_t m = 1 + uniform_below(rng, n + 1);
    for (std::size_t k = 0; k < m; ++k) rho.push_back(uniform_below(rng, 2) ? '1' : '0');
    o.require(induces_pattern(a, Code(rho), n) == oracle::induces(a, rho, n), "induces_pattern case " + std::to_string(i));
  }
  o.detail << kRandomCases << " instances each for vc, ladder and pattern induction";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Acceptance checks");
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-11)")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  std::optional<std::vector<corpus::Entry>> fams;
  auto corpus10 = [&]() -> const std::vector<corpus::Entry>& {
    if (!fams) fams = corpus::maximum_families(10);
    return *fams;
  };

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"avoiding-family sizes equal the Sauer bound (d <= 4, n <= 14)", avoiding_family_counts},
      {"avoiding families have exactly their code as forbidden code (d <= 3, n <= 10)", avoiding_family_codes},
      {"forbidden-label reconstruction is the identity on generated maximum families", [&] { return label_round_trip(corpus10()); }},
      {"genus scan equals the atom oracle; anchor genera", genus_agreement},
      {"pattern sets are exactly the genus avoiders (m <= 6)", pattern_sets},
      {"hamming distance equals graph distance on maximum families", [&] { return distance_law(corpus10()); }},
      {"flipping by a set at most doubles the ladder dimension; tight example", symdiff_bound},
      {"member size bounds on maximum families; tightness instance", [&] { return member_size_bounds(corpus10()); }},
      {"member differences bounded by the ladder dimension; ladder converse", [&] { return difference_bound(corpus10()); }},
      {"halfplane traces are 2-maximum on 7 points; rectangles are not maximum on 5", geometry},
      {"vc, ladder and pattern induction agree with exhaustive oracles", oracle_equivalences},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail << "exception: " << e.what();
    }
    all = all && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " | "
              << r.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
