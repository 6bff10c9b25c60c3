#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "gstruct/exactla.hpp"
#include "gstruct/liealg.hpp"
#include "gstruct/report.hpp"

namespace gstruct {

/// Nondegenerate symmetric bilinear form g on g = R^m, stored as its Gram matrix G
/// (which is also the matrix of g-flat) together with G^{-1}, the Gram matrix of the
/// induced form on the dual.
class PseudoMetric {
 public:
  /// Throws ValidationError unless G is square, symmetric and invertible.
  static PseudoMetric from_gram(RMatrix G);
  /// Gram matrix C given in the basis formed by the columns of P.
  static PseudoMetric from_basis(const RMatrix& C, const RMatrix& P);
  /// diag(I_p, -I_q).
  static PseudoMetric standard(std::size_t p, std::size_t q);

  std::size_t dim() const { return gram_.rows(); }
  const RMatrix& gram() const { return gram_; }
  const RMatrix& inverse() const { return inverse_; }
  const Signature& signature() const { return signature_; }

  friend bool operator==(const PseudoMetric& a, const PseudoMetric& b) {
    return a.gram_ == b.gram_;
  }

 private:
  RMatrix gram_;
  RMatrix inverse_;
  Signature signature_;
};

/// E = g + g* with the split form b and the structure I_k = [[0, k G^{-1}], [G, 0]].
struct ExtendedSpace {
  PseudoMetric metric;
  int k = -1;
  RMatrix bgram;  ///< [[0, I], [I, 0]]
  RMatrix ik;

  std::size_t m() const { return metric.dim(); }
};

/// Throws ValidationError if k is not +-1 or the resulting I_k fails I_k^2 = k id or
/// b-symmetry.
ExtendedSpace build_extended(const PseudoMetric& metric, int k);

/// Endomorphism S of E with parameters (lambda, ell); k = -lambda*ell.
class GenStructure {
 public:
  GenStructure(RMatrix S, int lambda, int ell);

  const RMatrix& matrix() const { return s_; }
  int lambda() const { return lambda_; }
  int ell() const { return ell_; }
  int k() const { return -lambda_ * ell_; }
  std::size_t m() const { return s_.rows() / 2; }

  friend bool operator==(const GenStructure&, const GenStructure&) = default;

 private:
  RMatrix s_;
  int lambda_;
  int ell_;
};

/// Checks "square" (S^2 = lambda id), "split" (tr S = 0), "b_skew" (S^t b + b S = 0)
/// and "anticommutes_Ik" (S I_k + I_k S = 0). Failing checks carry the residual matrix.
/// Throws DimensionError / ValidationError if S and E do not fit together.
Report verify_algebraic(const GenStructure& S, const ExtendedSpace& E);

/// Convenience: builds E with k = S.k() and runs verify_algebraic.
Report verify_algebraic(const GenStructure& S, const PseudoMetric& metric);

/// S = [[A, lambda ell B G^{-1}], [G B, -A^t]].
struct ClassicalForm {
  RMatrix A;
  RMatrix B;
  RMatrix theta_flat;  ///< G B
  RMatrix pi_sharp;    ///< lambda ell B G^{-1}

  friend bool operator==(const ClassicalForm&, const ClassicalForm&) = default;
};

ClassicalForm make_classical(RMatrix A, RMatrix B, int lambda, int ell, const PseudoMetric& metric);

/// lambda A^2 + ell B^2 = id, AB = BA, GA = A^t G, theta and pi skew.
Report check_classical(const ClassicalForm& cf, int lambda, int ell, const PseudoMetric& metric);

/// Reads A and B off the blocks. Throws ValidationError naming the first block identity
/// or classical invariant that fails.
ClassicalForm to_classical(const GenStructure& S, const PseudoMetric& metric);

/// Assembles S from (A, B). Invariants are checked first; the result is verified.
GenStructure from_classical(const ClassicalForm& cf, int lambda, int ell,
                            const PseudoMetric& metric);

enum class ExtremalKind { R, Q };

/// R = diag(s, -s^t) from a product/complex structure s compatible with g, or
/// Q = [[0, lambda omega^{-1}], [omega, 0]] from omega-flat.
GenStructure build_extremal(ExtremalKind kind, const RMatrix& data, int lambda, int ell,
                            const PseudoMetric& metric);

struct ProductOrComplex {
  RMatrix s;
};
struct Symplectic {
  RMatrix omega_flat;
};
using Extremal = std::variant<ProductOrComplex, Symplectic>;

class NotExtremalError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Recovers s (block diagonal S) or omega-flat (block off-diagonal S) and certifies
/// the (lambda,0) or (0,ell) identities. Throws NotExtremalError for mixed blocks.
Extremal extract_extremal(const GenStructure& S, const PseudoMetric& metric);

struct NijenhuisValue {
  std::size_t a = 0;
  std::size_t b = 0;
  Vec value;
};

struct NijenhuisReport {
  std::size_t pairs_checked = 0;
  std::vector<NijenhuisValue> nonzero;
  bool integrable() const { return nonzero.empty(); }
};

/// N(x,y) = [Sx,Sy] - S[Sx,y] - S[x,Sy] + lambda[x,y] on all basis pairs a < b of T.
NijenhuisReport nijenhuis(const LieAlgebra& T, const RMatrix& S, int lambda);
NijenhuisReport nijenhuis_integrability(const LieAlgebra& T, const GenStructure& S);

struct EigenBasis {
  int delta = 1;
  std::vector<Vec> vectors;
};

/// Kernel of S - delta id.
EigenBasis eigenbasis(const RMatrix& S, int delta);

struct InvolutivityResult {
  bool involutive = true;
  EigenBasis basis;
  std::optional<SubalgebraWitness> witness;
};

/// Closedness of D(delta) under the bracket of T. Only for lambda = +1; throws
/// ValidationError for lambda = -1 (use nijenhuis_integrability).
InvolutivityResult eigenspace_involutivity(const LieAlgebra& T, const GenStructure& S, int delta);

/// Both eigenspaces of a lambda = +1 structure plus the Nijenhuis tensor, and the
/// agreement of the two criteria.
Report paracomplex_integrability(const LieAlgebra& T, const GenStructure& S);

/// cos t and sin t at t = 2 atan(s).
struct Weierstrass {
  Rational cos;
  Rational sin;
};
Weierstrass weierstrass(const Rational& s);

struct CurveSpec {
  GenStructure R;
  GenStructure Q;
  Rational s;
};

/// cos t R + sin t Q at the rational point s. Throws ValidationError when R and Q do
/// not anticommute or have different (lambda, ell).
GenStructure curve_point(const CurveSpec& spec);

/// Change of basis of g by the columns of A acting on E: diag(A^{-1}, A^t). Carries
/// b to b and I_k(G) to I_k(A^t G A).
RMatrix change_of_basis_operator(const RMatrix& A);

/// P S P^{-1} with the same (lambda, ell).
GenStructure conjugate(const GenStructure& S, const RMatrix& P);

/// Basis of {X : X I_k = I_k X, X^t b + b X = 0}, the Lie algebra of linear maps
/// preserving b_k.
std::vector<RMatrix> symmetry_algebra(const ExtendedSpace& E);

/// (I - X)^{-1} (I + X). Throws SingularMatrixError if I - X is singular.
RMatrix cayley(const RMatrix& X);

}  // namespace gstruct
