// Command-line front end. Exit status: 0 success, 1 a checked claim does not
// hold for the input, 2 unusable input.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcmax/core.hpp"
#include "vcmax/generators.hpp"
#include "vcmax/genus.hpp"
#include "vcmax/io.hpp"
#include "vcmax/maximum.hpp"
#include "vcmax/report.hpp"
#include "vcmax/stability.hpp"

namespace {

using vcmax::Code;
using vcmax::InputError;
using vcmax::SetFamily;
using vcmax::Subset;
using Json = nlohmann::ordered_json;

constexpr int kClaimFailed = 1;
constexpr int kBadInput = 2;

struct Settings {
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 0;
  std::size_t cap = vcmax::kDefaultEnumerationCap;
};

struct Result {
  Json json = Json::object();
  std::string text;
  int status = 0;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  return vcmax::read_file(path);
}

SetFamily load_family(const std::string& path) { return vcmax::parse_family(read_input(path)); }

std::string bool_text(bool b) { return b ? "true" : "false"; }

Json family_json(const SetFamily& f) {
  Json j;
  j["ground"] = f.ground().labels();
  auto members = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) members.push_back(f.word(i));
  j["members"] = std::move(members);
  return j;
}

Result family_result(const SetFamily& f, const std::vector<std::pair<std::string, Json>>& notes = {}) {
  Result r;
  std::string header;
  for (const auto& [k, v] : notes) {
    r.json[k] = v;
    header += "# " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
  const Json body = family_json(f);
  for (const auto& [k, v] : body.items()) r.json[k] = v;
  r.text = header + vcmax::format_sfam(f);
  return r;
}

Result report_result(const vcmax::Report& rep) {
  Result r;
  r.json["claim"] = rep.claim;
  r.json["passed"] = rep.passed;
  Json q = Json::object();
  for (const auto& [k, v] : rep.quantities) q[k] = v;
  r.json["quantities"] = q;
  r.json["witnesses"] = rep.witnesses;
  std::ostringstream os;
  os << "claim: " << rep.claim << "\npassed: " << bool_text(rep.passed) << "\n";
  for (const auto& [k, v] : rep.quantities) os << k << ": " << v << "\n";
  for (const auto& w : rep.witnesses) os << "witness: " << w << "\n";
  r.text = os.str();
  r.status = rep.passed ? 0 : kClaimFailed;
  return r;
}

void flatten_tsv(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten_tsv(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (const auto& v : j) flatten_tsv(v, prefix, out);
  } else {
    out += prefix + "\t" + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

std::string render(const Result& r, const std::string& command, const Settings& s) {
  if (s.format == "json") {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    for (const auto& [k, v] : r.json.items()) j[k] = v;
    return j.dump(2) + "\n";
  }
  if (s.format == "tsv") {
    std::string out;
    flatten_tsv(r.json, "", out);
    return out;
  }
  return r.text;
}

std::size_t cap_from_env() {
  const char* env = std::getenv("VCMAX_CAP");
  if (env == nullptr || *env == '\0') return vcmax::kDefaultEnumerationCap;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > vcmax::kMaxGround) throw InputError("VCMAX_CAP must be an integer in 1..64");
  return v;
}

std::vector<vcmax::Rational> parse_grid(const std::string& text) {
  std::vector<vcmax::Rational> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = vcmax::parse_ext_value(text.substr(0, dots));
    const auto hi = vcmax::parse_ext_value(text.substr(dots + 2));
    if (!lo.finite() || !hi.finite() || hi.value() < lo.value()) throw InputError("grid range must be lo..hi");
    for (vcmax::Rational v = lo.value(); v <= hi.value(); v += 1) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto v = vcmax::parse_ext_value(tok);
    if (!v.finite()) throw InputError("grid values must be finite");
    out.push_back(v.value());
  }
  return out;
}

Subset parse_set(const SetFamily& f, const std::string& text) { return f.ground().parse_subset(text); }

Result cmd_vc(const SetFamily& f) {
  Result r;
  const auto d = vcmax::vc_dimension(f);
  std::optional<Subset> witness;
  vcmax::for_each_subset_of_size(f.ground().size(), d, [&](Subset a) {
    if (vcmax::shatters(f, a)) witness = a;
    return !witness;
  });
  r.json["vc_dimension"] = d;
  r.json["shattered"] = f.ground().format(*witness);
  r.text = std::to_string(d) + "\n";
  return r;
}

Result cmd_sauer_numbers(long long n, long long d) {
  Result r;
  const auto b = vcmax::sauer_bound(n, d);
  r.json["n"] = n;
  r.json["d"] = d;
  r.json["bound"] = b.str();
  r.text = b.str() + "\n";
  return r;
}

Result cmd_sauer_profile(const SetFamily& f, std::size_t cap) {
  Result r;
  const auto p = vcmax::sauer_profile(f, cap);
  r.json["vc_dimension"] = p.vc_dimension;
  r.json["counts"] = p.counts;
  r.json["bounds"] = p.bounds;
  std::ostringstream os;
  os << "k\tcount\tbound\n";
  for (std::size_t k = 0; k < p.counts.size(); ++k) os << k << "\t" << p.counts[k] << "\t" << p.bounds[k] << "\n";
  r.text = os.str();
  return r;
}

// A subset on which the family misses the Sauer count at d, looking at
// (d+1)-subsets and the whole ground before the full strict sweep.
std::optional<Subset> maximum_violation(const SetFamily& f, std::size_t d, bool strict, std::size_t cap) {
  const std::size_t n = f.ground().size();
  std::optional<Subset> bad;
  if (d + 1 <= n) {
    const auto want = vcmax::sauer_bound_u64(d + 1, d);
    vcmax::for_each_subset_of_size(n, d + 1, [&](Subset a) {
      if (vcmax::trace_count(f, a) != want) bad = a;
      return !bad;
    });
  }
  if (!bad && vcmax::sauer_bound(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)) != f.size()) {
    bad = f.ground().full();
  }
  if (!bad && strict) bad = vcmax::find_maximality_violation(f, d, cap);
  return bad;
}

Result cmd_maximum(const SetFamily& f, std::size_t d, bool strict, std::size_t cap) {
  Result r;
  const auto mode = strict ? vcmax::MaximumCheck::strict : vcmax::MaximumCheck::fast;
  const bool ok = vcmax::is_d_maximum(f, d, mode, cap);
  r.json["d"] = d;
  r.json["mode"] = strict ? "strict" : "fast";
  r.json["maximum"] = ok;
  r.json["members"] = f.size();
  r.json["sauer_bound"] = vcmax::sauer_bound(static_cast<std::int64_t>(f.ground().size()), static_cast<std::int64_t>(d)).str();
  if (ok) {
    r.text = "true\n";
    return r;
  }
  r.status = kClaimFailed;
  const auto bad = maximum_violation(f, d, strict, cap);
  if (!bad) throw vcmax::ConsistencyError("maximum check failed without an offending subset");
  const auto traces = vcmax::trace_count(f, *bad);
  const auto expected = vcmax::sauer_bound(static_cast<std::int64_t>(bad->size()), static_cast<std::int64_t>(d));
  r.json["offending"] = f.ground().format(*bad);
  r.json["traces"] = traces;
  r.json["expected"] = expected.str();
  r.text = "false: " + f.ground().format(*bad) + " has " + std::to_string(traces) + " traces, expected " +
           expected.str() + "\n";
  return r;
}

Result cmd_labels(const SetFamily& f, std::size_t d) {
  Result r;
  const auto t = vcmax::forbidden_label_table(f, d);
  r.json["d"] = d;
  Json entries = Json::array();
  for (const auto& [k, v] : t.entries) entries.push_back({{"key", f.ground().format(k)}, {"label", f.ground().format(v)}});
  r.json["entries"] = entries;
  r.text = vcmax::format_label_table(t, f.ground());
  return r;
}

Result cmd_codes(const SetFamily& f, std::size_t d) {
  Result r;
  std::vector<std::string> codes;
  for (const auto& c : vcmax::forbidden_codes(f, d)) codes.push_back(c.str());
  r.json["d"] = d;
  r.json["codes"] = codes;
  for (const auto& c : codes) r.text += c + "\n";
  return r;
}

Result cmd_genus(const std::string& text) {
  Result r;
  const auto b = vcmax::ConvexUnion::parse(text);
  const auto scan = vcmax::genus_scan(b);
  const auto oracle = vcmax::genus_oracle(b);
  if (scan != oracle) {
    throw vcmax::ConsistencyError("region scan gives " + scan.str() + " but the shortest non-induced code is " +
                                  oracle.str() + " for " + b.to_string());
  }
  std::vector<std::string> pts;
  for (const auto& p : vcmax::boundary_points(b)) pts.push_back(p.str());
  r.json["set"] = b.to_string();
  r.json["boundary_points"] = pts;
  r.json["genus"] = scan.str();
  r.text = scan.str() + "\n";
  return r;
}

Result cmd_patterns(const std::string& text, std::size_t m) {
  Result r;
  const auto b = vcmax::ConvexUnion::parse(text);
  std::vector<std::string> codes;
  for (const auto& c : vcmax::pattern_set(b, m)) codes.push_back(c.str());
  r.json["set"] = b.to_string();
  r.json["m"] = m;
  r.json["patterns"] = codes;
  for (const auto& c : codes) r.text += c + "\n";
  return r;
}

Result cmd_ladder(const SetFamily& f) {
  Result r;
  const auto ld = vcmax::ladder_dimension(f);
  r.json["ladder_dimension"] = ld.dimension;
  Json pts = Json::array();
  for (auto x : ld.witness.points) pts.push_back(f.ground().label(x));
  Json sets = Json::array();
  for (auto s : ld.witness.sets) sets.push_back(f.ground().format(s));
  r.json["points"] = pts;
  r.json["sets"] = sets;
  r.text = std::to_string(ld.dimension) + "\n" + vcmax::format_ladder(f.ground(), ld.witness) + "\n";
  return r;
}

Result cmd_graph(const SetFamily& f, bool distances) {
  if (distances) return report_result(vcmax::verify_distance_law(f));
  Result r;
  const vcmax::OneInclusionGraph g(f);
  r.json["vertices"] = g.vertex_count();
  r.json["edges"] = g.edge_count();
  r.json["components"] = g.component_count();
  r.json["component_of"] = g.components();
  std::ostringstream os;
  os << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count() << "\ncomponents: " << g.component_count()
     << "\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << f.word(v) << "\t" << g.components()[v] << "\n";
  }
  r.text = os.str();
  return r;
}

Result cmd_normal_form(const SetFamily& f, const std::string& base, bool search, std::size_t cap) {
  Result r;
  std::optional<Subset> b;
  if (!base.empty()) b = parse_set(f, base);
  const auto nf = vcmax::stable_maximum_normal_form(f, b);
  r.json["ladder_dimension"] = nf.ladder_dimension;
  r.json["m"] = nf.m;
  r.json["base"] = f.ground().format(nf.base);
  r.json["containment"] = nf.containment;
  r.json["least_m"] = nf.least_m;
  std::ostringstream os;
  os << "ladder_dimension: " << nf.ladder_dimension << "\nm: " << nf.m << "\nbase: " << f.ground().format(nf.base)
     << "\ncontainment: " << bool_text(nf.containment) << "\nleast_m: " << nf.least_m << "\n";
  if (search) {
    const auto s = vcmax::search_small_normal_form(f, cap);
    Json c;
    c["conjectural"] = true;
    c["best_base"] = f.ground().format(s.best_base);
    c["best_m"] = s.best_m;
    c["within_ladder_dimension"] = s.within_ladder_dimension;
    r.json["search"] = c;
    os << "search (conjectural): base " << f.ground().format(s.best_base) << " gives m = " << s.best_m
       << (s.within_ladder_dimension ? " <= " : " > ") << "ladder dimension\n";
  }
  r.text = os.str();
  r.status = nf.containment ? 0 : kClaimFailed;
  return r;
}

Result cmd_vcm(const SetFamily& f, std::size_t d, std::size_t max_witness, std::size_t budget, std::uint64_t seed) {
  Result r;
  const auto w = vcmax::vcm_witness_search(f, d, max_witness, budget, seed);
  r.json["d"] = d;
  r.json["found"] = w.witness.has_value();
  if (w.witness) r.json["witness"] = f.ground().format(*w.witness);
  r.json["candidates_checked"] = w.candidates_checked;
  r.json["exhaustive"] = w.exhaustive;
  if (w.witness) {
    r.text = f.ground().format(*w.witness) + "\n";
  } else {
    r.text = std::string("not found") + (w.exhaustive ? "" : " within budget") + "\n";
  }
  return r;
}

Result cmd_density(const SetFamily& f, const std::vector<std::size_t>& sizes, std::size_t samples, std::uint64_t seed) {
  Result r;
  const auto est = vcmax::estimate_growth_exponent(vcmax::random_subset_oracle(f, samples), sizes, seed);
  r.json["sizes"] = sizes;
  r.json["counts"] = est.counts;
  r.json["slope"] = est.slope;
  r.json["intercept"] = est.intercept;
  r.json["residual"] = est.residual;
  r.json["superpolynomial_suspected"] = est.superpolynomial_suspected;
  std::ostringstream os;
  os << "slope: " << est.slope << "\nresidual: " << est.residual
     << "\nsuperpolynomial_suspected: " << bool_text(est.superpolynomial_suspected) << "\n";
  r.text = os.str();
  return r;
}

Result generated(const vcmax::TraceResult& t) {
  return family_result(t.family, {{"exact", t.exact},
                                  {"general_position", t.general_position},
                                  {"degenerate_points", t.degenerate_points}});
}

vcmax::PointSample load_or_draw_points(const std::string& path, std::size_t n, std::uint64_t seed) {
  if (!path.empty()) return vcmax::parse_points(read_input(path), seed);
  if (n == 0) throw InputError("give --points FILE or --n N");
  return vcmax::random_general_position_points(n, seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum VC classes: VC dimension, forbidden codes, genus, ladders"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
  app.add_option("-o,--output", s.output, "Write output to this file atomically");
  app.add_option("--seed", s.seed, "Random seed");
  std::optional<std::size_t> cap_flag;
  app.add_option("--cap", cap_flag, "Largest ground size for exhaustive enumeration (default VCMAX_CAP or 16)")
      ->check(CLI::Range(1, 64));
  app.fallthrough();

  std::function<Result()> run;
  std::string command;
  std::string file;
  std::string code;
  std::string set;
  std::string ground;
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t k = 1;
  std::size_t m = 1;
  long long sn = -1;
  long long sd = -1;
  bool strict = false;
  bool distances = false;
  bool search = false;
  bool literal = false;
  std::size_t max_witness = 0;
  std::size_t budget = 100000;
  std::size_t samples = 1;
  std::uint64_t count = 1;
  std::string sizes_text;
  std::string points;
  std::string spec;
  std::string grid = "-8..8";

  auto sub = [&](const std::string& name, const std::string& help, std::function<Result()> body) {
    auto* c = app.add_subcommand(name, help);
    c->callback([&command, &run, name, body] {
      command = name;
      run = body;
    });
    return c;
  };
  auto family_arg = [&](CLI::App* c) { c->add_option("file", file, "Family file (.sfam or JSON), '-' for stdin")->required(); };
  auto cap = [&] { return cap_flag.value_or(cap_from_env()); };

  auto* c = sub("vc", "VC dimension with a shattered witness", [&] { return cmd_vc(load_family(file)); });
  family_arg(c);

  c = sub("sauer", "Sauer bound for --n/--d, or the trace profile of a family", [&] {
    if (!file.empty()) return cmd_sauer_profile(load_family(file), cap());
    if (sn < 0 || sd < 0) throw InputError("sauer needs a family file or both --n and --d");
    return cmd_sauer_numbers(sn, sd);
  });
  c->add_option("file", file, "Family file");
  c->add_option("--n", sn, "Ground size");
  c->add_option("--d", sd, "Dimension");

  c = sub("maximum", "Is the family d-maximum?", [&] { return cmd_maximum(load_family(file), d, strict, cap()); });
  family_arg(c);
  c->add_option("--d", d)->required();
  c->add_flag("--strict", strict, "Check every subset instead of the cardinality and VC test");

  c = sub("labels", "Forbidden label table", [&] { return cmd_labels(load_family(file), d); });
  family_arg(c);
  c->add_option("--d", d)->required();

  c = sub("codes", "Forbidden codes", [&] { return cmd_codes(load_family(file), d); });
  family_arg(c);
  c->add_option("--d", d)->required();

  c = sub("reconstruct", "Family from a forbidden label table", [&] {
    std::vector<std::string> labels;
    std::stringstream ss(ground);
    std::string tok;
    while (std::getline(ss, tok, ',')) labels.push_back(tok);
    const vcmax::OrderedGround g(labels);
    return family_result(vcmax::reconstruct_from_labels(vcmax::parse_label_table(read_input(file), g), g, cap()));
  });
  c->add_option("file", file, "Label table file")->required();
  c->add_option("--ground", ground, "Ground labels in order, comma-separated")->required();

  c = sub("characterized", "Is the family finitely characterized by --code?", [&] {
    Result r;
    const bool ok = vcmax::is_finitely_characterized(load_family(file), Code(code), cap());
    r.json["code"] = code;
    r.json["characterized"] = ok;
    r.text = bool_text(ok) + "\n";
    r.status = ok ? 0 : kClaimFailed;
    return r;
  });
  family_arg(c);
  c->add_option("--code", code)->required();

  c = sub("genus", "Genus of a finite union of convex sets", [&] { return cmd_genus(set); });
  c->add_option("set", set, "e.g. \"(0,1),{2}\"")->required();

  c = sub("genus-inverse", "A convex union with the given genus", [&] {
    Result r;
    const auto b = vcmax::convex_union_from_genus(Code(code));
    r.json["code"] = code;
    r.json["set"] = b.to_string();
    r.text = b.to_string() + "\n";
    return r;
  });
  c->add_option("--code", code)->required();

  c = sub("patterns", "Codes of length --m induced by a convex union", [&] { return cmd_patterns(set, m); });
  c->add_option("set", set)->required();
  c->add_option("--m", m)->required();

  c = sub("avoid", "Subsets of the chain 1..n avoiding --code", [&] {
    return family_result(vcmax::pattern_avoiding_family(vcmax::OrderedGround::chain(n), Code(code), cap()));
  });
  c->add_option("--code", code)->required();
  c->add_option("--n", n)->required();

  c = sub("ladder", "Ladder dimension with a witness", [&] { return cmd_ladder(load_family(file)); });
  family_arg(c);

  c = sub("graph", "One-inclusion graph", [&] { return cmd_graph(load_family(file), distances); });
  family_arg(c);
  c->add_flag("--distances", distances, "Compare Hamming and graph distance for all pairs");

  c = sub("symdiff", "Flip every member by --set", [&] {
    const auto f = load_family(file);
    return family_result(vcmax::symdiff_family(f, parse_set(f, set)));
  });
  family_arg(c);
  c->add_option("--set", set, "Comma-separated labels")->required();

  c = sub("llbound", "Ladder dimension after flipping by --set against twice the original", [&] {
    const auto f = load_family(file);
    return report_result(vcmax::check_symdiff_bound(f, parse_set(f, set)));
  });
  family_arg(c);
  c->add_option("--set", set)->required();

  c = sub("cc", "Member-size bounds for a d-maximum family", [&] { return report_result(vcmax::check_cc(load_family(file), d)); });
  family_arg(c);
  c->add_option("--d", d)->required();

  c = sub("tt", "Member differences against the ladder dimension", [&] {
    return report_result(vcmax::check_theorem_tt(load_family(file), d));
  });
  family_arg(c);
  c->add_option("--d", d)->required();

  c = sub("normal-form", "Realize the family inside [X]^{<=m} xor B", [&] {
    return cmd_normal_form(load_family(file), set, search, cap());
  });
  family_arg(c);
  c->add_option("--base", set, "Base set B (default: first member)");
  c->add_flag("--search", search, "Also search every base for the least m (conjectural, reported only)");

  c = sub("vcm", "Search for a subset on which the family is d-maximum", [&] {
    return cmd_vcm(load_family(file), d, max_witness == 0 ? vcmax::kMaxGround : max_witness, budget, s.seed);
  });
  family_arg(c);
  c->add_option("--d", d)->required();
  c->add_option("--max-witness", max_witness, "Largest witness size (default: ground size)");
  c->add_option("--budget", budget, "Candidate subsets to test");

  c = sub("density", "Log-log growth of trace counts on random subsets", [&] {
    std::vector<std::size_t> sizes;
    std::stringstream ss(sizes_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) sizes.push_back(std::stoul(tok));
    return cmd_density(load_family(file), sizes, samples, s.seed);
  });
  family_arg(c);
  c->add_option("--sizes", sizes_text, "Ascending comma-separated subset sizes")->required();
  c->add_option("--samples", samples, "Random subsets per size (the maximum count is kept)");

  auto* gen = app.add_subcommand("generate", "Example families");
  gen->require_subcommand(1);
  auto gsub = [&](const std::string& name, const std::string& help, std::function<Result()> body) {
    auto* g = gen->add_subcommand(name, help);
    g->callback([&command, &run, name, body] {
      command = "generate " + name;
      run = body;
    });
    return g;
  };
  c = gsub("intervals", "Unions of at most k runs on the chain 1..n", [&] {
    return family_result(vcmax::intervals_family(vcmax::OrderedGround::chain(n), k, cap()));
  });
  c->add_option("--n", n)->required();
  c->add_option("--k", k);
  c = gsub("bounded", "All subsets of 1..n with at most m elements", [&] {
    return family_result(vcmax::bounded_size_family(vcmax::OrderedGround::chain(n), m, cap()));
  });
  c->add_option("--n", n)->required();
  c->add_option("--m", m)->required();
  c = gsub("points", "Planar integer points in general position", [&] {
    Result r;
    const auto p = vcmax::random_general_position_points(n, s.seed);
    r.text = vcmax::format_points(p);
    Json pts = Json::array();
    for (const auto& pt : p.points()) pts.push_back({pt[0].str(), pt[1].str()});
    r.json["dimension"] = 2;
    r.json["points"] = pts;
    return r;
  });
  c->add_option("--n", n)->required();
  c = gsub("halfplane", "Traces of {1 + c1 x + c2 y >= 0}", [&] {
    return generated(vcmax::halfplane_traces(load_or_draw_points(points, n, s.seed)));
  });
  c->add_option("--points", points, "Point file");
  c->add_option("--n", n, "Draw this many random general-position points instead");
  c = gsub("poly", "Traces of a polynomial positivity family", [&] {
    const auto spec_v = vcmax::parse_polyspec(read_input(spec));
    const auto sample = vcmax::parse_points(read_input(points), s.seed);
    const auto g = parse_grid(grid);
    return generated(vcmax::polynomial_traces(sample, spec_v, g, s.seed));
  });
  c->add_option("--points", points)->required();
  c->add_option("--spec", spec)->required();
  c->add_option("--grid", grid, "Coefficient values: lo..hi or a comma list");
  c = gsub("rect", "Traces of closed axis-parallel rectangles", [&] {
    return generated(vcmax::rectangle_traces(load_or_draw_points(points, n, s.seed)));
  });
  c->add_option("--points", points);
  c->add_option("--n", n);
  c = gsub("random", "Uniform random family", [&] {
    return family_result(vcmax::random_family(vcmax::OrderedGround::chain(n), count, s.seed));
  });
  c->add_option("--n", n)->required();
  c->add_option("--count", count)->required();
  c = gsub("tight-ladder", "Prefixes and suffixes on -n..-1,1..n", [&] {
    const auto ex = vcmax::tight_ladder_example(n);
    const auto& f = literal ? ex.literal_family : ex.family;
    return family_result(f, {{"flip", f.ground().format(ex.flip)}});
  });
  c->add_option("--n", n)->required();
  c->add_flag("--literal", literal, "Omit the empty set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code_v = app.exit(e);
    return code_v == 0 ? 0 : kBadInput;
  }

  try {
    const Result r = run();
    const std::string out = render(r, command, s);
    if (s.output.empty()) {
      std::cout << out;
    } else {
      vcmax::write_file_atomic(s.output, out);
    }
    return r.status;
  } catch (const vcmax::NotMaximumError& e) {
    std::cerr << "vcmax: " << e.what() << "\n";
    return kClaimFailed;
  } catch (const vcmax::ConsistencyError& e) {
    std::cerr << "vcmax: internal consistency check failed: " << e.what() << "\n";
    return kClaimFailed;
  } catch (const vcmax::InputError& e) {
    std::cerr << "vcmax: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "vcmax: " << e.what() << "\n";
    return kBadInput;
  }
}
