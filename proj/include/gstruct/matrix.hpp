#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gstruct/errors.hpp"
#include "gstruct/quad.hpp"
#include "gstruct/rational.hpp"

namespace gstruct {

/// Dense row-major matrix with exact entries.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_, fill_value());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix out(nr, nc, fill_value());
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == zero_like(x))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& rhs) {
    require_same_shape(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    require_same_shape(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(const Rational& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("matrix product " + a.shape() + " * " + b.shape());
    }
    Matrix out(a.rows_, b.cols_, a.fill_value());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& ail = a(i, l);
        if (ail == zero_like(ail)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += ail * b(l, j);
      }
    }
    return out;
  }
  friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector product " + a.shape());
    std::vector<T> out(a.rows_, a.fill_value());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    return a * std::span<const T>(v);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  /// Zero of the entry type, carrying the entry kind (kappa) of this matrix when relevant.
  T fill_value() const { return data_.empty() ? T{} : zero_like(data_.front()); }

 private:
  static T zero_like(const T& x) {
    if constexpr (std::is_same_v<T, QuadScalar>) {
      return QuadScalar::zero(x.kappa());
    } else {
      return T{0};
    }
  }
  void require_same_shape(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw DimensionError("shape mismatch " + shape() + " vs " + rhs.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RMatrix = Matrix<Rational>;
using QMatrix = Matrix<QuadScalar>;
using Vec = std::vector<Rational>;

RMatrix identity(std::size_t n);
RMatrix zeros(std::size_t rows, std::size_t cols);
RMatrix diag(const std::vector<Rational>& entries);
RMatrix from_columns(const std::vector<Vec>& columns);
/// [[tl, tr], [bl, br]]; all blocks must fit.
RMatrix assemble(const RMatrix& tl, const RMatrix& tr, const RMatrix& bl, const RMatrix& br);
/// Block diagonal matrix from square blocks.
RMatrix block_diag(const std::vector<RMatrix>& blocks);
Rational trace(const RMatrix& m);
bool is_symmetric(const RMatrix& m);
bool is_skew(const RMatrix& m);

/// Embeds a rational matrix into Q[iota].
QMatrix promote(const RMatrix& m, int kappa);
QMatrix conj(const QMatrix& m);
/// Multiplies every entry by a quadratic scalar.
QMatrix scale(const QuadScalar& s, const QMatrix& m);

Vec unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scaled(const Rational& s, const Vec& v);

std::string to_string(const RMatrix& m);
std::string to_string(const Vec& v);

}  // namespace gstruct
