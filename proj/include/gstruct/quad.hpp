#pragma once

#include <string>

#include "gstruct/rational.hpp"

namespace gstruct {

/// An element a + b*iota of Q[iota] with iota^2 = kappa, kappa in {-1, +1}.
///
/// kappa = -1 gives the Gaussian rationals (a field); kappa = +1 gives the
/// rational Lorentz numbers, a ring with zero divisors spanned by the null
/// idempotents e = (1 - iota)/2 and ebar = (1 + iota)/2.
class QuadScalar {
 public:
  /// Zero of the complex type; use zero(kappa) when the type matters.
  QuadScalar() = default;
  QuadScalar(Rational re, Rational im, int kappa);

  static QuadScalar zero(int kappa) { return {0, 0, kappa}; }
  static QuadScalar one(int kappa) { return {1, 0, kappa}; }
  static QuadScalar iota(int kappa) { return {0, 1, kappa}; }
  static QuadScalar real(const Rational& value, int kappa) { return {value, 0, kappa}; }
  /// e = (1 - eps)/2 and ebar = (1 + eps)/2 in the Lorentz numbers.
  static QuadScalar null_e();
  static QuadScalar null_ebar();

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  int kappa() const { return kappa_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  QuadScalar conj() const { return {re_, -im_, kappa_}; }
  /// a^2 - kappa*b^2, so that z * conj(z) = norm(z).
  Rational norm() const { return re_ * re_ - kappa_ * im_ * im_; }
  /// Throws ZeroDivisorError when norm() == 0 (only possible for nonzero z if kappa = +1).
  QuadScalar inverse() const;

  QuadScalar operator-() const { return {-re_, -im_, kappa_}; }
  QuadScalar& operator+=(const QuadScalar& rhs);
  QuadScalar& operator-=(const QuadScalar& rhs);
  QuadScalar& operator*=(const QuadScalar& rhs);
  QuadScalar& operator/=(const QuadScalar& rhs) { return *this *= rhs.inverse(); }

  friend QuadScalar operator+(QuadScalar lhs, const QuadScalar& rhs) { return lhs += rhs; }
  friend QuadScalar operator-(QuadScalar lhs, const QuadScalar& rhs) { return lhs -= rhs; }
  friend QuadScalar operator*(QuadScalar lhs, const QuadScalar& rhs) { return lhs *= rhs; }
  friend QuadScalar operator/(QuadScalar lhs, const QuadScalar& rhs) { return lhs /= rhs; }
  friend QuadScalar operator*(const Rational& s, const QuadScalar& z) {
    return {s * z.re_, s * z.im_, z.kappa_};
  }

  /// Exact equality; scalars of different kappa compare unequal unless both are zero.
  friend bool operator==(const QuadScalar& a, const QuadScalar& b);

 private:
  void require_same_kappa(const QuadScalar& rhs) const;

  Rational re_{0};
  Rational im_{0};
  int kappa_ = -1;
};

enum class QuadOp { add, mul, conj };

/// Dispatches one ring operation; conj ignores b. Throws KappaMismatchError on mixed kappa.
QuadScalar quad_arith(const QuadScalar& a, const QuadScalar& b, QuadOp op);

/// "a+bi" / "a+be" style rendering for reports.
std::string to_string(const QuadScalar& z);

}  // namespace gstruct
