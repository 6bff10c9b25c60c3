#include "gstruct/quad.hpp"

#include "gstruct/errors.hpp"

namespace gstruct {

QuadScalar::QuadScalar(Rational re, Rational im, int kappa)
    : re_(std::move(re)), im_(std::move(im)), kappa_(kappa) {
  if (kappa != -1 && kappa != 1) throw ValidationError("kappa must be -1 or +1");
}

QuadScalar QuadScalar::null_e() { return {Rational(1, 2), Rational(-1, 2), 1}; }
QuadScalar QuadScalar::null_ebar() { return {Rational(1, 2), Rational(1, 2), 1}; }

void QuadScalar::require_same_kappa(const QuadScalar& rhs) const {
  if (kappa_ != rhs.kappa_) {
    throw KappaMismatchError("cannot combine scalars with iota^2 = " + std::to_string(kappa_) +
                             " and iota^2 = " + std::to_string(rhs.kappa_));
  }
}

QuadScalar QuadScalar::inverse() const {
  const Rational n = norm();
  if (n == 0) {
    throw ZeroDivisorError("quadratic scalar " + to_string(*this) + " is not invertible");
  }
  return {re_ / n, -im_ / n, kappa_};
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
  require_same_kappa(rhs);
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) {
  require_same_kappa(rhs);
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
  require_same_kappa(rhs);
  Rational re = re_ * rhs.re_ + kappa_ * im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

bool operator==(const QuadScalar& a, const QuadScalar& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.kappa_ == b.kappa_ && a.re_ == b.re_ && a.im_ == b.im_;
}

QuadScalar quad_arith(const QuadScalar& a, const QuadScalar& b, QuadOp op) {
  switch (op) {
    case QuadOp::add:
      return a + b;
    case QuadOp::mul:
      return a * b;
    case QuadOp::conj:
      return a.conj();
  }
  throw ValidationError("unknown quadratic operation");
}

std::string to_string(const QuadScalar& z) {
  const char* unit = z.kappa() == -1 ? "i" : "eps";
  std::string out = to_string(z.re());
  if (z.im() >= 0) out += "+";
  out += to_string(z.im());
  out += unit;
  return out;
}

}  // namespace gstruct
