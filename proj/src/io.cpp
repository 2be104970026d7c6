#include "vcmax/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vcmax {

namespace {

// Data lines with comments and surrounding blanks removed, paired with their
// 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> data_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    out.emplace_back(number, line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string at_line(std::size_t n) { return "line " + std::to_string(n) + ": "; }

Subset parse_word(const std::string& word, std::size_t n, std::size_t line) {
  if (word.size() != n) {
    throw InputError(at_line(line) + "word '" + word + "' has length " + std::to_string(word.size()) +
                     ", expected " + std::to_string(n));
  }
  Subset s;
  for (std::size_t j = 0; j < n; ++j) {
    if (word[j] == '1') {
      s = s.with(j);
    } else if (word[j] != '0') {
      throw InputError(at_line(line) + "word '" + word + "' must consist of 0 and 1 only");
    }
  }
  return s;
}

}  // namespace

SetFamily parse_sfam(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw InputError("family file has no ground line");
  OrderedGround ground(split_ws(lines.front().second));
  std::vector<Subset> members;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    members.push_back(parse_word(lines[i].second, ground.size(), lines[i].first));
  }
  return SetFamily(std::move(ground), std::move(members));
}

std::string format_sfam(const SetFamily& family) {
  std::string out;
  const auto& labels = family.ground().labels();
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? " " : "") + labels[i];
  out += '\n';
  for (std::size_t i = 0; i < family.size(); ++i) out += family.word(i) + '\n';
  return out;
}

SetFamily parse_family_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON family: ") + e.what());
  }
  if (!j.is_object() || !j.contains("ground") || !j.contains("members")) {
    throw InputError("JSON family needs \"ground\" and \"members\" fields");
  }
  try {
    OrderedGround ground(j.at("ground").get<std::vector<std::string>>());
    std::vector<Subset> members;
    std::size_t index = 0;
    for (const auto& w : j.at("members")) {
      ++index;
      const auto word = w.get<std::string>();
      if (word.size() != ground.size() || word.find_first_not_of("01") != std::string::npos) {
        throw InputError("member " + std::to_string(index) + " is not a 0/1 word of length " +
                         std::to_string(ground.size()));
      }
      members.push_back(parse_word(word, ground.size(), 0));
    }
    return SetFamily(std::move(ground), std::move(members));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("JSON family has the wrong shape: ") + e.what());
  }
}

std::string format_family_json(const SetFamily& family) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["ground"] = family.ground().labels();
  auto members = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < family.size(); ++i) members.push_back(family.word(i));
  j["members"] = std::move(members);
  return j.dump(2) + "\n";
}

SetFamily parse_family(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_family_json(text);
  return parse_sfam(text);
}

ForbiddenLabelTable parse_label_table(std::string_view text, const OrderedGround& ground) {
  ForbiddenLabelTable table;
  bool have_d = false;
  for (const auto& [line, body] : data_lines(text)) {
    const auto colon = body.find(':');
    if (colon == std::string::npos || body.find(':', colon + 1) != std::string::npos) {
      throw InputError(at_line(line) + "expected 'key : label'");
    }
    Subset key;
    Subset label;
    try {
      key = ground.parse_subset(body.substr(0, colon));
      label = ground.parse_subset(body.substr(colon + 1));
    } catch (const InputError& e) {
      throw InputError(at_line(line) + e.what());
    }
    if (key.empty()) throw InputError(at_line(line) + "empty key");
    if (!have_d) {
      table.d = key.size() - 1;
      have_d = true;
    } else if (key.size() != table.d + 1) {
      throw InputError(at_line(line) + "key size differs from earlier keys");
    }
    if (!table.entries.emplace(key, label).second) throw InputError(at_line(line) + "repeated key");
  }
  if (!have_d) throw InputError("label table is empty");
  return table;
}

std::string format_label_table(const ForbiddenLabelTable& table, const OrderedGround& ground) {
  auto bare = [&](Subset s) {
    std::string out;
    for (const auto& l : ground.labels_of(s)) out += (out.empty() ? "" : ",") + l;
    return out;
  };
  std::string out;
  for (const auto& [key, label] : table.entries) out += bare(key) + " : " + bare(label) + "\n";
  return out;
}

PointSample parse_points(std::string_view text, std::uint64_t seed) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw InputError("point file has no dimension line");
  std::size_t m = 0;
  try {
    std::size_t used = 0;
    m = std::stoul(lines.front().second, &used);
    if (used != lines.front().second.size()) throw InputError("");
  } catch (const std::exception&) {
    throw InputError(at_line(lines.front().first) + "expected the point dimension");
  }
  std::vector<Point> pts;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Point p;
    for (const auto& tok : split_ws(lines[i].second)) {
      ExtValue v;
      try {
        v = parse_ext_value(tok);
      } catch (const InputError& e) {
        throw InputError(at_line(lines[i].first) + e.what());
      }
      if (!v.finite()) throw InputError(at_line(lines[i].first) + "coordinates must be finite");
      p.push_back(v.value());
    }
    if (p.size() != m) {
      throw InputError(at_line(lines[i].first) + "expected " + std::to_string(m) + " coordinates");
    }
    pts.push_back(std::move(p));
  }
  return PointSample(m, std::move(pts), seed);
}

std::string format_points(const PointSample& sample) {
  std::string out = std::to_string(sample.dimension()) + "\n";
  for (const auto& p : sample.points()) {
    for (std::size_t k = 0; k < p.size(); ++k) out += (k ? " " : "") + p[k].str();
    out += '\n';
  }
  return out;
}

PolySpec parse_polyspec(std::string_view text) {
  std::vector<Term> fixed;
  std::vector<Exponents> free;
  for (const auto& [line, body] : data_lines(text)) {
    auto tokens = split_ws(body);
    const std::string kind = tokens.front();
    if (kind != "fixed" && kind != "*" && kind != "free") {
      throw InputError(at_line(line) + "expected 'fixed', '*' or 'free'");
    }
    std::size_t next = 1;
    Rational coefficient = 1;
    if (kind != "free" && next < tokens.size() && tokens[next].rfind("coef=", 0) == 0) {
      const auto v = parse_ext_value(tokens[next].substr(5));
      if (!v.finite()) throw InputError(at_line(line) + "coefficient must be finite");
      coefficient = v.value();
      ++next;
    }
    Exponents e;
    for (; next < tokens.size(); ++next) {
      const auto& t = tokens[next];
      if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 3) {
        throw InputError(at_line(line) + "exponent '" + t + "' is not a small nonnegative integer");
      }
      e.push_back(static_cast<unsigned>(std::stoul(t)));
    }
    if (e.empty()) throw InputError(at_line(line) + "monomial needs at least one exponent");
    if (kind == "free") {
      free.push_back(std::move(e));
    } else {
      fixed.push_back(Term{coefficient, std::move(e)});
    }
  }
  return PolySpec(std::move(fixed), std::move(free));
}

std::string format_polyspec(const PolySpec& spec) {
  std::string out;
  auto exps = [](const Exponents& e) {
    std::string s;
    for (auto x : e) s += " " + std::to_string(x);
    return s;
  };
  for (const auto& t : spec.fixed()) out += "fixed coef=" + t.coefficient.str() + exps(t.exponents) + "\n";
  for (const auto& e : spec.free()) out += "free" + exps(e) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw InputError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError("cannot replace '" + path + "': " + ec.message());
  }
}

}  // namespace vcmax
