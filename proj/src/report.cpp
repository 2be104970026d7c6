#include "vcmax/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcmax {

void Report::quantity(const std::string& name, std::int64_t value) {
  auto it = std::find_if(quantities.begin(), quantities.end(), [&](const auto& q) { return q.first == name; });
  if (it == quantities.end()) {
    quantities.emplace_back(name, value);
  } else {
    it->second = value;
  }
}

std::int64_t Report::get(const std::string& name) const {
  auto it = std::find_if(quantities.begin(), quantities.end(), [&](const auto& q) { return q.first == name; });
  if (it == quantities.end()) throw std::out_of_range("report has no quantity '" + name + "'");
  return it->second;
}

void Report::fail(std::string why) {
  passed = false;
  witnesses.push_back(std::move(why));
}

}  // namespace vcmax
