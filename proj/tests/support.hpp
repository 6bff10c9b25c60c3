#pragma once

#include <cstddef>
#include <vector>

#include "gstruct/catalog.hpp"
#include "gstruct/random.hpp"
#include "gstruct/twistor.hpp"

namespace gstruct::testing {

inline Vec unit(std::size_t n, std::size_t i, const Rational& scale = Rational(1)) {
  Vec v(n, Rational(0));
  v[i] = scale;
  return v;
}

inline Vec vec(std::initializer_list<Rational> xs) { return Vec(xs); }

/// Product structure r on the metric diag(I_p, -I_q), p = p_plus + p_minus and
/// q = q_plus + q_minus, with the first p_plus positive and the first q_plus negative
/// directions in D(1).
struct Splitting {
  std::size_t p_plus, q_plus, p_minus, q_minus;
  std::size_t m() const { return p_plus + q_plus + p_minus + q_minus; }
};

inline std::vector<Splitting> splittings(std::size_t max_m) {
  std::vector<Splitting> out;
  for (std::size_t a = 0; a <= max_m; ++a)
    for (std::size_t b = 0; a + b <= max_m; ++b)
      for (std::size_t c = 0; a + b + c <= max_m; ++c)
        for (std::size_t d = 0; a + b + c + d <= max_m; ++d)
          if (a + b + c + d > 0) out.push_back({a, b, c, d});
  return out;
}

inline GenStructure product_structure(const Splitting& s, PseudoMetric* metric_out = nullptr) {
  const std::size_t p = s.p_plus + s.p_minus;
  const std::size_t q = s.q_plus + s.q_minus;
  std::vector<Rational> r;
  for (std::size_t i = 0; i < p; ++i) r.push_back(i < s.p_plus ? 1 : -1);
  for (std::size_t i = 0; i < q; ++i) r.push_back(i < s.q_plus ? 1 : -1);
  const PseudoMetric metric = PseudoMetric::standard(p, q);
  if (metric_out) *metric_out = metric;
  return build_extremal(ExtremalKind::R, diag(r), 1, 1, metric);
}

/// Para-Kaehler Q on diag(I_h, -I_h) with omega-flat = [[0, I], [-I, 0]], moved to a
/// random basis of g.
inline std::pair<PseudoMetric, GenStructure> para_kaehler(Sampler& rng, std::size_t m) {
  const std::size_t h = m / 2;
  const PseudoMetric G0 = PseudoMetric::standard(h, h);
  const RMatrix omega = assemble(zeros(h, h), identity(h), -identity(h), zeros(h, h));
  const GenStructure Q = build_extremal(ExtremalKind::Q, omega, 1, 1, G0);
  const RMatrix A = rng.invertible(m);
  return {PseudoMetric::from_gram(A.transpose() * G0.gram() * A),
          conjugate(Q, change_of_basis_operator(A))};
}

/// Cayley transform of a random b-skew X: preserves b, not I_k.
inline RMatrix random_b_isometry(Sampler& rng, std::size_t m) {
  for (;;) {
    const RMatrix a = rng.matrix(m, m, 1);
    RMatrix b = rng.matrix(m, m, 1);
    RMatrix c = rng.matrix(m, m, 1);
    b = b - b.transpose();
    c = c - c.transpose();
    const RMatrix X = Rational(1, 2) * assemble(a, b, c, -a.transpose());
    try {
      return cayley(X);
    } catch (const SingularMatrixError&) {
    }
  }
}

/// Random invertible matrix commuting with I_k: id + M + k I_k M I_k.
inline RMatrix random_ik_commuting(Sampler& rng, const ExtendedSpace& E) {
  const std::size_t n = 2 * E.m();
  for (;;) {
    const RMatrix M = rng.matrix(n, n, 1);
    const RMatrix X = identity(n) + Rational(1, 2) * (M + Rational(E.k) * (E.ik * M * E.ik));
    if (determinant(X) != 0) return X;
  }
}

/// Random lambda-involutions on a random metric of the right kind, mixing structures that
/// satisfy both compatibility conditions, only one of them, or neither.
struct InvolutionCase {
  PseudoMetric metric;
  RMatrix S;
};

inline InvolutionCase random_lambda_involution(Sampler& rng, int lambda, int ell, std::size_t m,
                                               int variant) {
  auto [metric, S] = random_structure(rng, lambda, ell, m);
  const ExtendedSpace E = build_extended(metric, S.k());
  switch (variant % 4) {
    case 0:
      return {metric, S.matrix()};
    case 1: {
      const RMatrix P = random_b_isometry(rng, m);
      return {metric, P * S.matrix() * inverse(P)};
    }
    case 2: {
      const RMatrix P = random_ik_commuting(rng, E);
      return {metric, P * S.matrix() * inverse(P)};
    }
    default:
      return {metric, random_involution(rng, lambda, m)};
  }
}

inline LieAlgebra random_algebra(Sampler& rng, std::size_t m) {
  switch (rng.integer(0, 2)) {
    case 0:
      return LieAlgebra(m);
    case 1:
      return m >= 3 ? random_two_step(rng, m, 1) : LieAlgebra(m);
    default:
      return random_abelian_extension(rng, m);
  }
}

/// ad_z on T*g as a matrix, for z = e_a.
inline RMatrix ad_matrix(const LieAlgebra& T, std::size_t a) {
  const std::size_t n = T.dim();
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < n; ++c) cols.push_back(bracket_eval(T, unit(n, a), unit(n, c)));
  return from_columns(cols);
}

inline bool b_invariant(const LieAlgebra& T) {
  const std::size_t n = T.dim();
  const RMatrix b = assemble(zeros(n / 2, n / 2), identity(n / 2), identity(n / 2),
                             zeros(n / 2, n / 2));
  for (std::size_t a = 0; a < n; ++a) {
    const RMatrix M = ad_matrix(T, a);
    if (!(M.transpose() * b + b * M).is_zero()) return false;
  }
  return true;
}

}  // namespace gstruct::testing
