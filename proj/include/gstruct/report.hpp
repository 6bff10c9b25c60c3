#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gstruct/matrix.hpp"

namespace gstruct {

/// One named pass/fail check with an optional exact witness.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<RMatrix> witness;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Ordered list of checks about one subject.
struct Report {
  std::string subject;
  std::vector<Check> checks;

  bool all_pass() const;
  Report& add(std::string name, bool pass, std::string detail = {},
              std::optional<RMatrix> witness = std::nullopt);
  /// Appends other's checks, prefixing their names with prefix + ".".
  Report& merge(const Report& other, const std::string& prefix = {});
  const Check* find(const std::string& name) const;
  std::size_t failures() const;

  friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace gstruct
