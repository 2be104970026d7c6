#pragma once

#include <string>
#include <string_view>

#include "vcmax/core.hpp"
#include "vcmax/generators.hpp"
#include "vcmax/maximum.hpp"

namespace vcmax {

/// Text family format: '#' comment lines, a ground line of labels, then one
/// 0/1 membership word per member.
SetFamily parse_sfam(std::string_view text);
std::string format_sfam(const SetFamily& family);

/// {"schema": 1, "ground": [...], "members": ["0101", ...]}.
SetFamily parse_family_json(std::string_view text);
std::string format_family_json(const SetFamily& family);

/// Either format, chosen by the first non-blank character.
SetFamily parse_family(std::string_view text);

/// One "key_labels : label_labels" line per entry; d is the key size minus one.
ForbiddenLabelTable parse_label_table(std::string_view text, const OrderedGround& ground);
std::string format_label_table(const ForbiddenLabelTable& table, const OrderedGround& ground);

/// Dimension on the first data line, then one point of that many rationals per line.
PointSample parse_points(std::string_view text, std::uint64_t seed = 0);
std::string format_points(const PointSample& sample);

/// Lines "fixed [coef=c] e_1 .. e_m" (or "* ...") and "free e_1 .. e_m".
PolySpec parse_polyspec(std::string_view text);
std::string format_polyspec(const PolySpec& spec);

std::string read_file(const std::string& path);
/// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace vcmax
