#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "gstruct/catalog.hpp"
#include "gstruct/extended.hpp"
#include "gstruct/liealg.hpp"
#include "gstruct/report.hpp"

namespace gstruct {

using json = nlohmann::json;

/// Accepts a rational string ("3", "-1/2") or a JSON integer. Anything else is a ParseError.
Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

RMatrix matrix_from_json(const json& j);
json matrix_to_json(const RMatrix& m);

/// {"dim": m, "salamon": "(...)"} or {"dim": m, "brackets": [{"i":1,"j":2,"k":5,"c":"1"}]}
/// with 1-based indices. Jacobi is enforced.
LieAlgebra algebra_from_json(const json& j);
json algebra_to_json(const LieAlgebra& L, const std::optional<std::string>& salamon = std::nullopt);

/// {"gram": [[...]]} or {"gram_in_basis": {"C": [[...]], "P": [[...]]}}.
PseudoMetric metric_from_json(const json& j);
json metric_to_json(const PseudoMetric& g);
json metric_to_json(const RMatrix& C, const RMatrix& P);

/// A structure file as read, before any verification.
struct StructureFile {
  int lambda = -1;
  int ell = -1;
  std::optional<RMatrix> S;
  std::optional<RMatrix> A;  ///< classical blocks, when given
  std::optional<RMatrix> B;
};

/// {"lambda": l, "ell": e, "S": [[...]]} or {"lambda", "ell", "A": {"i,j": "r"}, "B": {...}}.
StructureFile structure_from_json(const json& j, std::size_t m);
/// Assembles S from the file. A/B blocks are placed as [[A, lambda ell B G^-1], [G B, -A^t]]
/// without validating them, so a bad structure reaches the verifier and fails there.
GenStructure structure_matrix(const StructureFile& f, const PseudoMetric& metric);
json structure_to_json(const GenStructure& S);
json classical_to_json(const ClassicalForm& cf, int lambda, int ell);

json report_to_json(const Report& r);
Report report_from_json(const json& j);

/// Parses a file; malformed or truncated JSON raises ParseError naming the file.
json load_json(const std::filesystem::path& path);

/// The three files of an entry (algebra, metric, structure); curves use Phi_eps(s).
struct ExportBundle {
  json algebra;
  json metric;
  json structure;
};
ExportBundle export_entry(const CatalogEntry& entry, int epsilon = 1,
                          const Rational& s = Rational(0));

}  // namespace gstruct
