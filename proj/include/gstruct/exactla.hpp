#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gstruct/matrix.hpp"

namespace gstruct {

template <class T>
struct KernelResult {
  std::size_t rank = 0;
  std::vector<std::vector<T>> kernel_basis;
};

/// Reduced row echelon form over Q or Q(i) together with the pivot columns.
template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Matrices over the Lorentz numbers are rejected with
/// ZeroDivisorError because the ring has zero divisors.
template <class T>
Echelon<T> rref(const Matrix<T>& m);

/// Rank and a kernel basis read off the reduced echelon form (one vector per free column).
template <class T>
KernelResult<T> rref_kernel(const Matrix<T>& m);

std::size_t rank(const RMatrix& m);
RMatrix inverse(const RMatrix& m);
Rational determinant(const RMatrix& m);

struct Signature {
  std::size_t p = 0;  ///< positive
  std::size_t q = 0;  ///< negative
  std::size_t z = 0;  ///< zero
  friend auto operator<=>(const Signature&, const Signature&) = default;
};
std::string to_string(const Signature& s);

/// Diagonal of a congruence diagonalization P^t M P (Lagrange reduction).
/// Works over any field of characteristic zero; M must be symmetric.
template <class T>
std::vector<T> congruence_diagonal(const Matrix<T>& m);

/// Inertia of a rational symmetric matrix via congruence_diagonal.
Signature signature_of_symmetric(const RMatrix& m);

/// Gram matrix in the standard basis when C is the Gram matrix in the basis whose
/// coordinates are the columns of P: returns G = P^{-t} C P^{-1}.
RMatrix congruent_gram(const RMatrix& C, const RMatrix& P);

/// Span utilities over Q. Vectors need not be independent.
bool in_span(const std::vector<Vec>& span, const Vec& v);
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b);
std::size_t span_rank(const std::vector<Vec>& vectors);

/// Matrix of a linear map on rows x cols matrices, in row-major coordinates.
/// The map may return several matrices; their entries are stacked.
RMatrix matrix_of_linear_map(std::size_t rows, std::size_t cols,
                             const std::function<std::vector<RMatrix>(const RMatrix&)>& map);

/// Rebuilds a rows x cols matrix from row-major coordinates.
RMatrix unflatten(const Vec& coords, std::size_t rows, std::size_t cols);

}  // namespace gstruct
