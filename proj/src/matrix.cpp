#include "gstruct/matrix.hpp"

namespace gstruct {

RMatrix identity(std::size_t n) {
  RMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RMatrix zeros(std::size_t rows, std::size_t cols) { return RMatrix(rows, cols); }

RMatrix diag(const std::vector<Rational>& entries) {
  RMatrix out(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out(i, i) = entries[i];
  return out;
}

RMatrix from_columns(const std::vector<Vec>& columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns.front().size();
  RMatrix out(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw DimensionError("from_columns: ragged columns");
    for (std::size_t i = 0; i < n; ++i) out(i, j) = columns[j][i];
  }
  return out;
}

RMatrix assemble(const RMatrix& tl, const RMatrix& tr, const RMatrix& bl, const RMatrix& br) {
  if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() ||
      tr.cols() != br.cols()) {
    throw DimensionError("assemble: incompatible blocks");
  }
  const std::size_t r0 = tl.rows(), c0 = tl.cols();
  RMatrix out(r0 + bl.rows(), c0 + tr.cols());
  auto put = [&](const RMatrix& b, std::size_t ro, std::size_t co) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(ro + i, co + j) = b(i, j);
  };
  put(tl, 0, 0);
  put(tr, 0, c0);
  put(bl, r0, 0);
  put(br, r0, c0);
  return out;
}

RMatrix block_diag(const std::vector<RMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw DimensionError("block_diag: non-square block");
    n += b.rows();
  }
  RMatrix out(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return out;
}

Rational trace(const RMatrix& m) {
  if (!m.is_square()) throw DimensionError("trace of " + m.shape());
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

bool is_symmetric(const RMatrix& m) { return m.is_square() && m == m.transpose(); }
bool is_skew(const RMatrix& m) { return m.is_square() && m == -m.transpose(); }

QMatrix promote(const RMatrix& m, int kappa) {
  QMatrix out(m.rows(), m.cols(), QuadScalar::zero(kappa));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = QuadScalar::real(m(i, j), kappa);
  return out;
}

QMatrix conj(const QMatrix& m) {
  QMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).conj();
  return out;
}

QMatrix scale(const QuadScalar& s, const QMatrix& m) {
  QMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  return out;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum of different lengths");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec scaled(const Rational& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

std::string to_string(const RMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace gstruct
