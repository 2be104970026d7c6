#include "vcmax/genus.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace vcmax {

const Rational& ExtValue::value() const {
  if (!finite()) throw InputError("value() of an infinite endpoint");
  return value_;
}

std::string ExtValue::to_string() const {
  switch (kind_) {
    case Kind::neg_inf:
      return "-inf";
    case Kind::pos_inf:
      return "+inf";
    case Kind::finite:
      break;
  }
  return value_.str();
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
  if (a.kind_ != b.kind_ || !a.finite()) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

ExtValue parse_ext_value(std::string_view raw) {
  const std::string text = trim(raw);
  if (text == "-inf") return ExtValue::neg_inf();
  if (text == "+inf" || text == "inf") return ExtValue::pos_inf();
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw InputError("malformed rational '" + text + "'");
    const BigInt d{std::string(den)};
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    value = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto ip = body.substr(0, dot);
    const auto fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
      throw InputError("malformed decimal '" + text + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    const BigInt whole = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
    const BigInt frac = fp.empty() ? BigInt(0) : BigInt(std::string(fp));
    value = Rational(whole * scale + frac, scale);
  } else {
    if (!all_digits(body)) throw InputError("malformed number '" + text + "'");
    value = Rational(BigInt(std::string(body)));
  }
  return ExtValue(negative ? Rational(-value) : value);
}

Component Component::point(Rational p) { return Component{ExtValue(p), ExtValue(p), true, true}; }

bool Component::contains(const Rational& x) const {
  const ExtValue v(x);
  const auto l = lo <=> v;
  const auto h = v <=> hi;
  const bool left_ok = l < 0 || (l == 0 && lo_closed);
  const bool right_ok = h < 0 || (h == 0 && hi_closed);
  return left_ok && right_ok;
}

std::string Component::to_string() const {
  if (is_point()) return "{" + lo.to_string() + "}";
  return std::string(lo_closed ? "[" : "(") + lo.to_string() + "," + hi.to_string() + (hi_closed ? "]" : ")");
}

ConvexUnion::ConvexUnion(std::vector<Component> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.lo > c.hi) throw InputError("component " + c.to_string() + " has left endpoint above right endpoint");
    if (!c.lo.finite() && c.lo_closed) throw InputError("infinite endpoints must be open");
    if (!c.hi.finite() && c.hi_closed) throw InputError("infinite endpoints must be open");
    if (c.lo.kind() == ExtValue::Kind::pos_inf || c.hi.kind() == ExtValue::Kind::neg_inf) {
      throw InputError("component " + c.to_string() + " is empty");
    }
    if (c.is_point() && !(c.lo_closed && c.hi_closed)) throw InputError("degenerate interval " + c.to_string() + " is empty");
  }
  std::sort(components_.begin(), components_.end(), [](const Component& a, const Component& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  for (std::size_t i = 1; i < components_.size(); ++i) {
    const auto& a = components_[i - 1];
    const auto& b = components_[i];
    if (a.hi > b.lo) throw InputError("components " + a.to_string() + " and " + b.to_string() + " overlap");
    if (a.hi == b.lo && (a.hi_closed || b.lo_closed)) {
      throw InputError("components " + a.to_string() + " and " + b.to_string() +
                       " are not maximal: their union is convex");
    }
  }
}

ConvexUnion ConvexUnion::full_line() {
  return ConvexUnion({Component{ExtValue::neg_inf(), ExtValue::pos_inf(), false, false}});
}

ConvexUnion ConvexUnion::parse(std::string_view raw) {
  const std::string text = trim(raw);
  if (text.empty() || text == "{}") return ConvexUnion{};
  std::vector<Component> comps;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) throw InputError("expected a component in '" + text + "'");
    const char open = text[i];
    char close = 0;
    if (open == '{') {
      close = '}';
    } else if (open == '(' || open == '[') {
      const auto r = text.find_first_of(")]", i);
      if (r == std::string::npos) throw InputError("unterminated interval in '" + text + "'");
      close = text[r];
    } else {
      throw InputError("unexpected character '" + std::string(1, open) + "' in '" + text + "'");
    }
    const auto end = text.find(close, i + 1);
    if (end == std::string::npos) throw InputError("unterminated component in '" + text + "'");
    const std::string_view inner(text.data() + i + 1, end - i - 1);
    if (open == '{') {
      const ExtValue p = parse_ext_value(inner);
      if (!p.finite()) throw InputError("a point component must be finite");
      comps.push_back(Component::point(p.value()));
    } else {
      const auto comma = inner.find(',');
      if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos) {
        throw InputError("interval needs exactly two endpoints in '" + text + "'");
      }
      comps.push_back(Component{parse_ext_value(inner.substr(0, comma)), parse_ext_value(inner.substr(comma + 1)),
                                open == '[', close == ']'});
    }
    i = end + 1;
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != ',') throw InputError("expected ',' between components in '" + text + "'");
    ++i;
  }
  return ConvexUnion(std::move(comps));
}

bool ConvexUnion::contains(const Rational& x) const {
  return std::any_of(components_.begin(), components_.end(), [&](const Component& c) { return c.contains(x); });
}

std::string ConvexUnion::to_string() const {
  if (components_.empty()) return "{}";
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += ',';
    out += c.to_string();
  }
  return out;
}

std::vector<Rational> boundary_points(const ConvexUnion& b) {
  std::vector<Rational> pts;
  for (const auto& c : b.components()) {
    if (c.lo.finite()) pts.push_back(c.lo.value());
    if (c.hi.finite()) pts.push_back(c.hi.value());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Code genus_scan(const ConvexUnion& b) {
  const auto pts = boundary_points(b);
  std::string bits;
  const std::size_t d = pts.size();
  for (std::size_t i = 0; i <= d; ++i) {
    Rational probe;
    if (d == 0) {
      probe = 0;
    } else if (i == 0) {
      probe = pts.front() - 1;
    } else if (i == d) {
      probe = pts.back() + 1;
    } else {
      probe = (pts[i - 1] + pts[i]) / 2;
    }
    bits.push_back(b.contains(probe) ? '0' : '1');
  }
  return Code(bits);
}

namespace {

// The line as a left-to-right sequence of atoms: open regions, which hold
// arbitrarily many points, and single points. Built from the components
// alone so that it does not share logic with boundary_points().
struct Atom {
  bool inside;
  bool region;
};

std::vector<Atom> atoms_of(const ConvexUnion& b) {
  std::vector<Atom> atoms;
  auto push_point = [&](bool inside) {
    // A puncture is emitted by both neighbours; keep one copy.
    if (!atoms.empty() && !atoms.back().region && !atoms.back().inside && !inside) return;
    atoms.push_back({inside, false});
  };
  const auto& comps = b.components();
  if (comps.empty() || comps.front().lo.finite()) atoms.push_back({false, true});
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    if (i > 0 && comps[i - 1].hi < c.lo) atoms.push_back({false, true});
    if (c.is_point()) {
      atoms.push_back({true, false});
      continue;
    }
    if (c.lo.finite()) push_point(c.lo_closed);
    atoms.push_back({true, true});
    if (c.hi.finite()) push_point(c.hi_closed);
  }
  if (!comps.empty() && comps.back().hi.finite()) atoms.push_back({false, true});
  return atoms;
}

bool atoms_induce(const std::vector<Atom>& atoms, const Code& rho) {
  std::size_t j = 0;
  for (const auto& a : atoms) {
    if (j == rho.size()) break;
    if (a.region) {
      while (j < rho.size() && rho[j] == a.inside) ++j;
    } else if (rho[j] == a.inside) {
      ++j;
    }
  }
  return j == rho.size();
}

}  // namespace

bool induces_code(const ConvexUnion& b, const Code& rho) { return atoms_induce(atoms_of(b), rho); }

Code genus_oracle(const ConvexUnion& b) {
  const auto atoms = atoms_of(b);
  for (std::size_t len = 1; len <= 24; ++len) {
    std::vector<Code> missing;
    for (auto& c : Code::all_of_length(len)) {
      if (!atoms_induce(atoms, c)) missing.push_back(c);
    }
    if (missing.empty()) continue;
    const std::size_t expected = boundary_points(b).size() + 1;
    if (missing.size() != 1) {
      throw ConsistencyError("set " + b.to_string() + " has " + std::to_string(missing.size()) +
                             " shortest non-induced codes of length " + std::to_string(len));
    }
    if (len != expected) {
      throw ConsistencyError("set " + b.to_string() + " has shortest non-induced code of length " +
                             std::to_string(len) + " but " + std::to_string(expected - 1) + " boundary points");
    }
    return missing.front();
  }
  throw SizeError("genus_oracle: more than 23 boundary points");
}

std::set<Code> pattern_set(const ConvexUnion& b, std::size_t m) {
  if (m == 0) throw InputError("pattern length must be at least 1");
  const auto atoms = atoms_of(b);
  std::set<Code> out;
  for (auto& c : Code::all_of_length(m)) {
    if (atoms_induce(atoms, c)) out.insert(c);
  }
  return out;
}

ConvexUnion convex_union_from_genus(const Code& eta) {
  const std::size_t d = eta.size() - 1;
  auto inside = [&](std::size_t region) { return !eta[region]; };
  std::vector<Component> comps;
  std::optional<Component> open;  // component whose right end is not yet placed
  if (inside(0)) open = Component{ExtValue::neg_inf(), ExtValue::pos_inf(), false, false};
  for (std::size_t k = 1; k <= d; ++k) {
    const Rational p(static_cast<long long>(k));
    const bool left = inside(k - 1);
    const bool right = inside(k);
    if (left && right) {
      open->hi = p;
      open->hi_closed = false;
      comps.push_back(*open);
      open = Component{ExtValue(p), ExtValue::pos_inf(), false, false};
    } else if (left) {
      open->hi = p;
      open->hi_closed = true;
      comps.push_back(*open);
      open.reset();
    } else if (right) {
      open = Component{ExtValue(p), ExtValue::pos_inf(), true, false};
    } else {
      comps.push_back(Component::point(p));
    }
  }
  if (open) comps.push_back(*open);
  return ConvexUnion(std::move(comps));
}

SetFamily pattern_avoiding_family(const OrderedGround& chain, const Code& eta, std::size_t cap) {
  const std::size_t n = chain.size();
  require_within_cap(n, cap, "pattern_avoiding_family");
  if (eta.size() > n) throw PreconditionError("code length exceeds the chain size");
  std::vector<Subset> members;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    if (!induces_pattern(Subset(b), eta, n)) members.emplace_back(b);
  }
  return SetFamily(chain, std::move(members));
}

}  // namespace vcmax
