#include "vcmax/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

namespace vcmax {

namespace {

SetFamily family_from_bits(const OrderedGround& ground, const std::set<std::uint64_t>& bits) {
  std::vector<Subset> members;
  members.reserve(bits.size());
  for (auto b : bits) members.emplace_back(b);
  return SetFamily(ground, std::move(members));
}

Rational power(const Rational& base, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

Rational monomial_at(const Exponents& ex, const Point& y) {
  Rational out = 1;
  for (std::size_t v = 0; v < ex.size(); ++v) out *= power(y[v], ex[v]);
  return out;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// k + a . c >= 0 for a parameter vector c.
struct Constraint {
  Rational k;
  std::vector<Rational> a;

  Rational at(std::span<const Rational> c) const {
    Rational v = k;
    for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * c[i];
    return v;
  }
};

std::uint64_t trace_at(std::span<const Constraint> cs, std::span<const Rational> c) {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].at(c) >= 0) t |= std::uint64_t{1} << i;
  }
  return t;
}

// Every event value, the gaps between consecutive ones, and one value beyond each end.
std::vector<Rational> line_samples(std::vector<Rational> events) {
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  if (events.empty()) return {Rational(0)};
  std::vector<Rational> out{events.front() - 1};
  for (std::size_t i = 0; i < events.size(); ++i) {
    out.push_back(events[i]);
    if (i + 1 < events.size()) out.push_back((events[i] + events[i + 1]) / 2);
  }
  out.push_back(events.back() + 1);
  return out;
}

// Exact sign vectors of an arrangement of lines k + a0 c0 + a1 c1 = 0 with the
// closed side counted as inside. Each face of the arrangement meets a vertical
// slice taken either at an event abscissa (a vertex or a vertical line) or
// strictly between two consecutive events, and within a slice the same
// event/gap sampling covers every face.
std::set<std::uint64_t> planar_traces(std::span<const Constraint> cs) {
  std::vector<Rational> events;
  struct Line {
    Rational intercept;
    Rational slope;
  };
  std::vector<Line> lines;
  for (const auto& c : cs) {
    if (c.a[1] != 0) {
      lines.push_back({-c.k / c.a[1], -c.a[0] / c.a[1]});
    } else if (c.a[0] != 0) {
      events.push_back(-c.k / c.a[0]);
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].slope != lines[j].slope) {
        events.push_back((lines[j].intercept - lines[i].intercept) / (lines[i].slope - lines[j].slope));
      }
    }
  }
  std::set<std::uint64_t> out;
  for (const auto& s : line_samples(std::move(events))) {
    std::vector<Rational> roots;
    for (const auto& c : cs) {
      if (c.a[1] != 0) roots.push_back(-(c.k + c.a[0] * s) / c.a[1]);
    }
    for (const auto& t : line_samples(std::move(roots))) {
      const Rational point[2] = {s, t};
      out.insert(trace_at(cs, point));
    }
  }
  return out;
}

// Solves m x = rhs; nullopt when m is singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t d = rhs.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && m[pivot][col] == 0) ++pivot;
    if (pivot == d) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < d; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t r = 0; r < d; ++r) rhs[r] /= m[r][r];
  return rhs;
}

// Samples every face incident to each vertex cut out by d constraints. The
// step along each direction stays short of every constraint not through the
// vertex, so the local sign pattern is exactly the one prescribed.
void vertex_refinement(std::span<const Constraint> cs, std::size_t d, std::uint64_t seed,
                       std::set<std::uint64_t>& out) {
  constexpr std::size_t kMaxVertices = 4000;
  const std::size_t n = cs.size();
  std::vector<Subset> bases;
  for_each_subset_of_size(n, d, [&](Subset s) { bases.push_back(s); });
  if (bases.size() > kMaxVertices) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < kMaxVertices; ++i) {
      std::swap(bases[i], bases[i + uniform_below(rng, bases.size() - i)]);
    }
    bases.resize(kMaxVertices);
  }
  std::vector<std::vector<int>> directions{{}};
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& dir : directions) {
      for (int s : {-1, 0, 1}) {
        auto e = dir;
        e.push_back(s);
        next.push_back(std::move(e));
      }
    }
    directions = std::move(next);
  }
  for (auto basis : bases) {
    const auto idx = basis.elements();
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> rhs;
    for (auto i : idx) {
      m.push_back(cs[i].a);
      rhs.push_back(-cs[i].k);
    }
    const auto vertex = solve(m, rhs);
    if (!vertex) continue;
    std::optional<Rational> clearance;  // min over other constraints of |f(v)| / sum |a|
    for (std::size_t j = 0; j < n; ++j) {
      const Rational f = cs[j].at(*vertex);
      if (f == 0) continue;
      Rational norm = 0;
      for (const auto& x : cs[j].a) norm += abs(x);
      if (norm == 0) continue;
      const Rational c = abs(f) / norm;
      if (!clearance || c < *clearance) clearance = c;
    }
    for (const auto& dir : directions) {
      std::vector<Rational> target(dir.begin(), dir.end());
      const auto step = solve(m, target);
      if (!step) continue;
      Rational longest = 0;
      for (const auto& x : *step) longest = std::max(longest, abs(x));
      std::vector<Rational> c = *vertex;
      if (longest != 0) {
        const Rational eps = clearance ? Rational(*clearance / (2 * longest)) : Rational(1);
        for (std::size_t k = 0; k < d; ++k) c[k] += eps * (*step)[k];
      }
      out.insert(trace_at(cs, c));
    }
  }
}

void grid_sampling(std::span<const Constraint> cs, std::size_t d, std::span<const Rational> grid, std::uint64_t seed,
                   std::set<std::uint64_t>& out) {
  constexpr std::uint64_t kMaxGridPoints = 200000;
  std::uint64_t total = 1;
  bool too_many = false;
  for (std::size_t k = 0; k < d && !too_many; ++k) {
    if (total > kMaxGridPoints / grid.size()) too_many = true;
    total *= grid.size();
  }
  std::vector<Rational> c(d);
  if (!too_many && total <= kMaxGridPoints) {
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t r = code;
      for (std::size_t k = 0; k < d; ++k) {
        c[k] = grid[r % grid.size()];
        r /= grid.size();
      }
      out.insert(trace_at(cs, c));
    }
    return;
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::uint64_t i = 0; i < kMaxGridPoints; ++i) {
    for (std::size_t k = 0; k < d; ++k) c[k] = grid[uniform_below(rng, grid.size())];
    out.insert(trace_at(cs, c));
  }
}

Rational cross(const Point& o, const Point& p, const Point& q) {
  return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]);
}

bool planar_general_position(const std::vector<Point>& pts) {
  const Point origin{Rational(0), Rational(0)};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i][0] == 0 && pts[i][1] == 0) return false;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (cross(origin, pts[i], pts[j]) == 0) return false;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (cross(pts[i], pts[j], pts[k]) == 0) return false;
      }
    }
  }
  return true;
}

}  // namespace

SetFamily intervals_family(const OrderedGround& chain, std::size_t k, std::size_t cap) {
  if (k < 1) throw InputError("intervals_family requires k >= 1");
  const std::size_t n = chain.size();
  require_within_cap(n, cap, "intervals_family");
  std::vector<Subset> members;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const auto runs = static_cast<std::size_t>(std::popcount(b & ~(b << 1)));
    if (runs <= k) members.emplace_back(b);
  }
  return SetFamily(chain, std::move(members));
}

SetFamily bounded_size_family(const OrderedGround& ground, std::size_t m, std::size_t cap) {
  const std::size_t n = ground.size();
  if (m > n) throw InputError("bounded_size_family requires m <= n");
  require_within_cap(n, cap, "bounded_size_family");
  std::vector<Subset> members;
  for (std::size_t k = 0; k <= m; ++k) for_each_subset_of_size(n, k, [&](Subset s) { members.push_back(s); });
  return SetFamily(ground, std::move(members));
}

SetFamily random_family(const OrderedGround& ground, std::uint64_t count, std::uint64_t seed) {
  const std::size_t n = ground.size();
  if (count == 0) throw InputError("random_family: count must be at least 1");
  if (n < 64 && count > (std::uint64_t{1} << n)) {
    throw InputError("random_family: count " + std::to_string(count) + " exceeds 2^" + std::to_string(n));
  }
  if (count > (std::uint64_t{1} << 24)) throw SizeError("random_family: count above 2^24");
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  if (n < 64) {
    // Floyd's algorithm: a uniform count-subset of [0, 2^n).
    const std::uint64_t universe = std::uint64_t{1} << n;
    for (std::uint64_t j = universe - count; j < universe; ++j) {
      const std::uint64_t t = uniform_below(rng, j + 1);
      chosen.insert(chosen.contains(t) ? j : t);
    }
  } else {
    while (chosen.size() < count) chosen.insert(rng());
  }
  std::vector<std::uint64_t> bits(chosen.begin(), chosen.end());
  std::sort(bits.begin(), bits.end());
  std::vector<Subset> members;
  members.reserve(bits.size());
  for (auto b : bits) members.emplace_back(b);
  return SetFamily(ground, std::move(members));
}

PointSample::PointSample(std::size_t dimension, std::vector<Point> points, std::uint64_t seed)
    : dimension_(dimension), points_(std::move(points)), seed_(seed) {
  if (dimension_ == 0) throw InputError("point dimension must be positive");
  if (points_.size() > kMaxGround) throw SizeError("at most 64 points are supported");
  for (const auto& p : points_) {
    if (p.size() != dimension_) throw InputError("point has the wrong number of coordinates");
  }
  auto sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("sample has repeated points");
  if (dimension_ == 2) general_position_ = planar_general_position(points_);
}

OrderedGround PointSample::ground() const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points_.size(); ++i) labels.push_back("p" + std::to_string(i + 1));
  return OrderedGround(std::move(labels));
}

PointSample random_general_position_points(std::size_t n, std::uint64_t seed, long long range) {
  if (range < 1) throw InputError("coordinate range must be positive");
  std::mt19937_64 rng(seed);
  const auto width = static_cast<std::uint64_t>(2 * range + 1);
  std::vector<Point> pts;
  std::size_t attempts = 0;
  while (pts.size() < n) {
    if (++attempts > 100000) throw InputError("could not place points in general position; widen the range");
    Point p{Rational(static_cast<long long>(uniform_below(rng, width)) - range),
            Rational(static_cast<long long>(uniform_below(rng, width)) - range)};
    pts.push_back(p);
    if (!planar_general_position(pts)) pts.pop_back();
  }
  return PointSample(2, std::move(pts), seed);
}

PolySpec::PolySpec(std::vector<Term> fixed, std::vector<Exponents> free)
    : fixed_(std::move(fixed)), free_(std::move(free)) {
  if (free_.empty()) throw InputError("a polynomial family needs at least one free coefficient");
  variables_ = free_.front().size();
  for (const auto& e : free_) {
    if (e.size() != variables_) throw InputError("monomials disagree on the number of variables");
  }
  for (const auto& t : fixed_) {
    if (t.exponents.size() != variables_) throw InputError("monomials disagree on the number of variables");
  }
  auto sorted = free_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("free monomials must be distinct");
  if (fixed_.size() == 1 && std::find(free_.begin(), free_.end(), fixed_.front().exponents) != free_.end()) {
    throw InputError("the fixed term is a multiple of a free monomial");
  }
}

Rational PolySpec::fixed_at(const Point& y) const {
  Rational v = 0;
  for (const auto& t : fixed_) v += t.coefficient * monomial_at(t.exponents, y);
  return v;
}

Rational PolySpec::free_at(std::size_t k, const Point& y) const { return monomial_at(free_.at(k), y); }

PolySpec PolySpec::halfplane() { return PolySpec({Term{Rational(1), {0, 0}}}, {{1, 0}, {0, 1}}); }

TraceResult polynomial_traces(const PointSample& sample, const PolySpec& spec, std::span<const Rational> grid,
                              std::uint64_t seed) {
  if (grid.empty()) throw InputError("coefficient grid is empty");
  if (sample.dimension() != spec.variables()) {
    throw InputError("sample dimension " + std::to_string(sample.dimension()) + " does not match the " +
                     std::to_string(spec.variables()) + " polynomial variables");
  }
  const std::size_t d = spec.free_count();
  TraceResult out;
  out.general_position = sample.general_position();
  std::vector<Constraint> cs;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto& y = sample.points()[i];
    Constraint c{spec.fixed_at(y), {}};
    bool constant = true;
    for (std::size_t k = 0; k < d; ++k) {
      c.a.push_back(spec.free_at(k, y));
      constant = constant && c.a.back() == 0;
    }
    if (constant) out.degenerate_points.push_back(i);
    cs.push_back(std::move(c));
  }
  std::set<std::uint64_t> traces;
  if (d <= 2) {
    if (d == 1) {
      for (auto& c : cs) c.a.emplace_back(0);
    }
    traces = planar_traces(cs);
    out.exact = true;
  } else {
    grid_sampling(cs, d, grid, seed, traces);
    vertex_refinement(cs, d, seed, traces);
    out.exact = false;
  }
  out.family = family_from_bits(sample.ground(), traces);
  return out;
}

TraceResult halfplane_traces(const PointSample& sample) {
  if (sample.dimension() != 2) throw InputError("halfplane traces need planar points");
  if (sample.size() > 12) throw SizeError("halfplane_traces supports at most 12 points");
  const Rational unit[1] = {Rational(0)};
  return polynomial_traces(sample, PolySpec::halfplane(), unit, sample.seed());
}

TraceResult rectangle_traces(const PointSample& sample) {
  if (sample.dimension() != 2) throw InputError("rectangle traces need planar points");
  if (sample.size() > 12) throw SizeError("rectangle_traces supports at most 12 points");
  const auto& pts = sample.points();
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (const auto& p : pts) {
    xs.push_back(p[0]);
    ys.push_back(p[1]);
  }
  for (auto* v : {&xs, &ys}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  std::set<std::uint64_t> traces{0};
  for (std::size_t x0 = 0; x0 < xs.size(); ++x0) {
    for (std::size_t x1 = x0; x1 < xs.size(); ++x1) {
      for (std::size_t y0 = 0; y0 < ys.size(); ++y0) {
        for (std::size_t y1 = y0; y1 < ys.size(); ++y1) {
          std::uint64_t t = 0;
          for (std::size_t i = 0; i < pts.size(); ++i) {
            if (pts[i][0] >= xs[x0] && pts[i][0] <= xs[x1] && pts[i][1] >= ys[y0] && pts[i][1] <= ys[y1]) {
              t |= std::uint64_t{1} << i;
            }
          }
          traces.insert(t);
        }
      }
    }
  }
  TraceResult out;
  out.family = family_from_bits(sample.ground(), traces);
  out.exact = true;
  out.general_position = sample.general_position();
  return out;
}

}  // namespace vcmax
