#include "gstruct/report.hpp"

#include <algorithm>

namespace gstruct {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Report& Report::add(std::string name, bool pass, std::string detail,
                    std::optional<RMatrix> witness) {
  checks.push_back({std::move(name), pass, std::move(detail), std::move(witness)});
  return *this;
}

Report& Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check copy = c;
    if (!prefix.empty()) copy.name = prefix + "." + copy.name;
    checks.push_back(std::move(copy));
  }
  return *this;
}

const Check* Report::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

}  // namespace gstruct
