#include "gstruct/exactla.hpp"

#include <utility>

namespace gstruct {

namespace {

bool is_zero_entry(const Rational& x) { return x == 0; }
bool is_zero_entry(const QuadScalar& x) { return x.is_zero(); }

Rational field_inverse(const Rational& x) { return 1 / x; }
QuadScalar field_inverse(const QuadScalar& x) { return x.inverse(); }

void require_field(const RMatrix&) {}
void require_field(const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).kappa() == 1) {
        throw ZeroDivisorError(
            "Gaussian elimination over the Lorentz numbers is not supported (zero divisors)");
      }
}

template <class T>
T zero_of(const Matrix<T>& m) {
  return m.fill_value();
}

}  // namespace

template <class T>
Echelon<T> rref(const Matrix<T>& m) {
  require_field(m);
  Matrix<T> a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && is_zero_entry(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    const T inv = field_inverse(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero_entry(a(i, col))) continue;
      const T factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

template <class T>
KernelResult<T> rref_kernel(const Matrix<T>& m) {
  const Echelon<T> e = rref(m);
  KernelResult<T> out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  const T zero = zero_of(m);
  T one = zero;
  if constexpr (std::is_same_v<T, QuadScalar>) {
    one = QuadScalar::one(zero.kappa());
  } else {
    one = 1;
  }
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), zero);
    v[free] = one;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

template Echelon<Rational> rref(const RMatrix&);
template Echelon<QuadScalar> rref(const QMatrix&);
template KernelResult<Rational> rref_kernel(const RMatrix&);
template KernelResult<QuadScalar> rref_kernel(const QMatrix&);

std::size_t rank(const RMatrix& m) { return rref(m).pivots.size(); }

RMatrix inverse(const RMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix " + m.shape());
  const std::size_t n = m.rows();
  RMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw SingularMatrixError("matrix is singular");
  }
  return e.reduced.block(0, n, n, n);
}

Rational determinant(const RMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix " + m.shape());
  RMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + "," + std::to_string(s.z) + ")";
}

template <class T>
std::vector<T> congruence_diagonal(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionError("congruence diagonalization of " + m.shape());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) throw ValidationError("matrix is not symmetric");

  Matrix<T> a = m;
  const std::size_t n = a.rows();
  const T zero = zero_of(m);
  std::vector<T> diagonal;
  // Simultaneous row/column operations keep a symmetric.
  auto add_into = [&](std::size_t target, std::size_t source, const T& factor) {
    for (std::size_t j = 0; j < n; ++j) a(target, j) += factor * a(source, j);
    for (std::size_t i = 0; i < n; ++i) a(i, target) += factor * a(i, source);
  };
  auto swap_index = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero_entry(a(pivot, pivot))) ++pivot;
    if (pivot == n) {
      // Zero diagonal: repair with an off-diagonal entry a_ij, adding j into i makes a_ii = 2a_ij.
      bool repaired = false;
      for (std::size_t i = k; i < n && !repaired; ++i) {
        for (std::size_t j = i + 1; j < n && !repaired; ++j) {
          if (is_zero_entry(a(i, j))) continue;
          T one = zero;
          if constexpr (std::is_same_v<T, QuadScalar>) {
            one = QuadScalar::one(zero.kappa());
          } else {
            one = 1;
          }
          add_into(i, j, one);
          pivot = i;
          repaired = true;
        }
      }
      if (!repaired) {
        for (std::size_t r = k; r < n; ++r) diagonal.push_back(zero);
        break;
      }
    }
    swap_index(k, pivot);
    const T inv = field_inverse(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (is_zero_entry(a(r, k))) continue;
      const T factor = -(a(r, k) * inv);
      add_into(r, k, factor);
    }
    diagonal.push_back(a(k, k));
  }
  return diagonal;
}

template std::vector<Rational> congruence_diagonal(const RMatrix&);
template std::vector<QuadScalar> congruence_diagonal(const QMatrix&);

Signature signature_of_symmetric(const RMatrix& m) {
  Signature s;
  for (const auto& d : congruence_diagonal(m)) {
    if (d > 0) {
      ++s.p;
    } else if (d < 0) {
      ++s.q;
    } else {
      ++s.z;
    }
  }
  return s;
}

RMatrix congruent_gram(const RMatrix& C, const RMatrix& P) {
  if (!C.is_square() || !P.is_square() || C.rows() != P.rows()) {
    throw DimensionError("congruent_gram: C " + C.shape() + ", P " + P.shape());
  }
  if (!is_symmetric(C)) throw ValidationError("congruent_gram: C is not symmetric");
  const RMatrix Pinv = inverse(P);
  return Pinv.transpose() * C * Pinv;
}

std::size_t span_rank(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  return rank(from_columns(vectors));
}

bool in_span(const std::vector<Vec>& span, const Vec& v) {
  if (is_zero(v)) return true;
  std::vector<Vec> extended = span;
  extended.push_back(v);
  return span_rank(extended) == span_rank(span);
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  const std::size_t ra = span_rank(a);
  if (ra != span_rank(b)) return false;
  std::vector<Vec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both) == ra;
}

RMatrix matrix_of_linear_map(std::size_t rows, std::size_t cols,
                             const std::function<std::vector<RMatrix>(const RMatrix&)>& map) {
  const std::size_t unknowns = rows * cols;
  std::vector<Vec> columns;
  columns.reserve(unknowns);
  for (std::size_t u = 0; u < unknowns; ++u) {
    RMatrix basis = zeros(rows, cols);
    basis(u / cols, u % cols) = 1;
    Vec column;
    for (const RMatrix& out : map(basis))
      for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) column.push_back(out(i, j));
    columns.push_back(std::move(column));
  }
  return from_columns(columns);
}

RMatrix unflatten(const Vec& coords, std::size_t rows, std::size_t cols) {
  if (coords.size() != rows * cols) throw DimensionError("unflatten: wrong coordinate count");
  RMatrix out(rows, cols);
  for (std::size_t u = 0; u < coords.size(); ++u) out(u / cols, u % cols) = coords[u];
  return out;
}

}  // namespace gstruct
