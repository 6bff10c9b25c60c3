#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gstruct/extended.hpp"
#include "gstruct/liealg.hpp"

namespace gstruct {

/// Phi_eps(t) = cos t R + sin t Q_eps.
struct CurveFamily {
  int epsilon = 1;
  GenStructure R;
  GenStructure Q;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  LieAlgebra algebra;
  std::optional<std::string> salamon;  ///< the literal string, when the algebra is given that way
  PseudoMetric metric;
  std::optional<RMatrix> metric_values;  ///< C, when g is given in another basis
  std::optional<RMatrix> metric_basis;   ///< P, columns = that basis in e-coordinates
  Signature expected_signature;
  std::vector<DualBracket> reference_mixed;  ///< reference [e_i, e_j*] table
  std::optional<ClassicalForm> classical;  ///< the (A, B) pair of a fixed structure
  int lambda = -1;
  int ell = -1;
  std::vector<CurveFamily> curves;
};

const std::vector<std::string>& catalog_names();

/// Throws ValidationError for an unknown name.
CatalogEntry catalog_get(const std::string& name);

/// The default sample points of the Weierstrass parameter.
const std::vector<Rational>& default_curve_samples();

/// The four reference generators of D_eps(delta) at t = 2 atan(s):
///   -sin t e1 + (cos t - delta) e2*,   sin t e2 + (cos t - delta) e1*,
///   eps sin t e3 + (cos t + delta) e4*, -eps sin t e4 + (cos t + delta) e3*.
std::vector<Vec> ellipse_reference_generators(int epsilon, int delta, const Rational& s);

/// The same lines with the scalar factors 2s/(1+s^2) or 2/(1+s^2) divided out.
/// Unlike the reference vectors these never vanish, so they also span D_eps(delta) at s = 0.
std::vector<Vec> ellipse_generator_lines(int epsilon, int delta, const Rational& s);

/// Reproduces every claim about the entry: Jacobi, metric signature, cotangent table,
/// the structure axioms, and integrability (Nijenhuis for the fixed structures,
/// two-sided involutivity and reference generators at each curve sample).
Report verify_entry(const CatalogEntry& entry,
                    const std::vector<Rational>& samples = default_curve_samples());

/// The structure to export or verify for an entry: the fixed S, or Phi_eps at s.
GenStructure entry_structure(const CatalogEntry& entry, int epsilon = 1,
                             const Rational& s = Rational(0));

}  // namespace gstruct
