#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gstruct/errors.hpp"
#include "gstruct/matrix.hpp"

namespace gstruct {

/// One structure constant contribution: [e_i, e_j] += coeff * e_k (0-based indices).
struct BracketTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational coeff;
};

struct JacobiViolation {
  std::size_t i = 0, j = 0, k = 0;  // 0-based, i < j < k
  Vec value;                         // sum over cyclic [x,[y,z]]
};

/// Raised when a constructed algebra fails the Jacobi identity.
class JacobiError : public ValidationError {
 public:
  JacobiError(const std::string& what, JacobiViolation violation)
      : ValidationError(what), violation_(std::move(violation)) {}
  const JacobiViolation& violation() const { return violation_; }

 private:
  JacobiViolation violation_;
};

/// Finite dimensional Lie algebra over Q given by structure constants
/// c^k_{ij}, [e_i, e_j] = sum_k c^k_{ij} e_k. Antisymmetric by construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Abelian algebra of the given dimension. Default labels are e1, e2, ...
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});
  /// Accumulates the terms and their antisymmetric partners. Does not check Jacobi;
  /// use jacobi_check or with_verified_jacobi.
  LieAlgebra(std::size_t dim, const std::vector<BracketTerm>& terms,
             std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// c^k_{ij}
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// Nonzero (k, c^k_{ij}) pairs of [e_i, e_j].
  const std::vector<std::pair<std::size_t, Rational>>& basis_bracket(std::size_t i,
                                                                     std::size_t j) const {
    return table_[i * dim_ + j];
  }
  /// Nonzero c^k_{ij} with i < j.
  std::vector<BracketTerm> nonzero_terms() const;

  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table_;
};

/// Bilinear expansion of [x, y]. Throws DimensionError on length mismatch.
Vec bracket_eval(const LieAlgebra& L, const Vec& x, const Vec& y);

/// Exhaustive Jacobi check over basis triples i < j < k. Empty result means valid.
std::vector<JacobiViolation> jacobi_check(const LieAlgebra& L);

/// Throws JacobiError naming the first violating triple.
const LieAlgebra& require_jacobi(const LieAlgebra& L);

/// Parses Salamon notation "(t1,...,tm)". Each slot i is 0 or a signed sum of digit
/// pairs "jk", meaning [e_j, e_k] = +e_i for '+jk' (descending pairs allowed).
/// Verifies Jacobi before returning.
LieAlgebra parse_salamon(std::string_view spec);

/// Canonical Salamon string (ascending pairs). Throws ValidationError when the algebra
/// has more than 9 dimensions or structure constants other than 0, +1, -1.
std::string to_salamon(const LieAlgebra& L);

/// The cotangent algebra g x| g* with basis (e_1..e_m, e_1*..e_m*):
/// [e_i, e_j*] = -e_j* o ad_{e_i}, [g*, g*] = 0. Jacobi is re-verified.
LieAlgebra cotangent_algebra(const LieAlgebra& L);

struct SubalgebraWitness {
  std::size_t a = 0;  ///< index into the span list
  std::size_t b = 0;
  Vec bracket;
  Vec residual;  ///< bracket reduced modulo the span; nonzero
};

struct SubalgebraResult {
  bool closed = true;
  std::optional<SubalgebraWitness> witness;
};

/// Whether span is closed under the bracket. Throws ValidationError for dependent spans.
SubalgebraResult subalgebra_check(const LieAlgebra& L, const std::vector<Vec>& span);

/// [e_i, e_j*] = coeff * e_l* inside a cotangent algebra (0-based, i, j, l < m).
struct DualBracket {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational coeff;
  std::size_t l = 0;
  friend bool operator==(const DualBracket&, const DualBracket&) = default;
};

/// All nonzero mixed brackets [e_i, e_j*] of a cotangent algebra of g with dim g = m,
/// sorted by (i, j, l).
std::vector<DualBracket> mixed_brackets(const LieAlgebra& cotangent, std::size_t m);

/// Parses the slot notation for mixed brackets, e.g. "(25*+56*, 5*1, 46*, 6*3, 6*1, 0)":
/// in slot l a term "ab*" means [e_a, e_b*] = e_l* and "a*b" means [e_a*, e_b] = e_l*.
/// Result is normalised to the [e_i, e_j*] orientation and sorted like mixed_brackets.
std::vector<DualBracket> parse_dual_table(std::string_view table, std::size_t m);

}  // namespace gstruct
