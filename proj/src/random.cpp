#include "gstruct/random.hpp"

#include "gstruct/twistor.hpp"

namespace gstruct {

int Sampler::integer(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational Sampler::rational(int num_bound, int den_bound) {
  Rational r(integer(-num_bound, num_bound), integer(1, den_bound));
  r.canonicalize();
  return r;
}

RMatrix Sampler::matrix(std::size_t rows, std::size_t cols, int bound) {
  RMatrix out = zeros(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = integer(-bound, bound);
  return out;
}

RMatrix Sampler::invertible(std::size_t n, int steps) {
  RMatrix out = identity(n);
  if (n < 2) {
    out(0, 0) = coin() ? 1 : -1;
    return out;
  }
  if (steps == 0) steps = static_cast<int>(2 * n);
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    const int c = integer(-2, 2);
    for (std::size_t col = 0; col < n; ++col) out(i, col) += c * out(j, col);
  }
  return out;
}

PseudoMetric Sampler::metric(std::size_t p, std::size_t q) {
  const RMatrix A = invertible(p + q);
  return PseudoMetric::from_gram(A.transpose() * PseudoMetric::standard(p, q).gram() * A);
}

RMatrix Sampler::symmetry(const std::vector<RMatrix>& algebra_basis, std::size_t n) {
  if (algebra_basis.empty()) return identity(n);
  for (;;) {
    RMatrix X = zeros(n, n);
    for (const auto& b : algebra_basis) {
      const int c = integer(-1, 1);
      if (c != 0) X = X + Rational(c, 2) * b;
    }
    try {
      return cayley(X);
    } catch (const SingularMatrixError&) {
    }
  }
}

std::pair<PseudoMetric, GenStructure> random_structure(Sampler& rng, int lambda, int ell,
                                                       std::size_t m) {
  std::size_t p = 0;
  std::size_t q = 0;
  std::optional<std::size_t> sig;
  for (;;) {
    p = static_cast<std::size_t>(rng.integer(0, static_cast<int>(m)));
    q = m - p;
    if (lambda == -1 && ell == 1 && p != q) continue;
    if (lambda == -1 && ell == -1 && m % 2 != 0) {
      throw ValidationError("(-1,-1)-structures need even dimension");
    }
    break;
  }
  if (lambda == 1 && ell == 1) sig = static_cast<std::size_t>(rng.integer(0, static_cast<int>(m)));
  const ModelPoint mp = model_point(lambda, ell, p, q, sig);
  const ExtendedSpace E = build_extended(mp.metric, mp.S.k());
  const GenStructure moved = conjugate(mp.S, rng.symmetry(E));
  const RMatrix A = rng.invertible(m);
  const PseudoMetric metric = PseudoMetric::from_gram(A.transpose() * mp.metric.gram() * A);
  return {metric, conjugate(moved, change_of_basis_operator(A))};
}

RMatrix random_involution(Sampler& rng, int lambda, std::size_t m) {
  const std::size_t n = 2 * m;
  RMatrix base = zeros(n, n);
  if (lambda == 1) {
    for (std::size_t i = 0; i < n; ++i) base(i, i) = i < m ? 1 : -1;
  } else {
    for (std::size_t i = 0; i < n; i += 2) {
      base(i, i + 1) = -1;
      base(i + 1, i) = 1;
    }
  }
  const RMatrix P = rng.invertible(n);
  return P * base * inverse(P);
}

LieAlgebra random_two_step(Sampler& rng, std::size_t m, std::size_t center) {
  std::vector<BracketTerm> terms;
  const std::size_t free = m - center;
  for (std::size_t i = 0; i < free; ++i)
    for (std::size_t j = i + 1; j < free; ++j)
      for (std::size_t k = free; k < m; ++k) {
        const int c = rng.integer(-1, 1);
        if (c != 0) terms.push_back({i, j, k, Rational(c)});
      }
  return LieAlgebra(m, terms);
}

LieAlgebra random_abelian_extension(Sampler& rng, std::size_t m) {
  std::vector<BracketTerm> terms;
  const std::size_t last = m - 1;
  for (std::size_t i = 0; i < last; ++i)
    for (std::size_t k = 0; k < last; ++k) {
      const int c = rng.integer(-1, 1);
      if (c != 0) terms.push_back({last, i, k, Rational(c)});
    }
  return LieAlgebra(m, terms);
}

}  // namespace gstruct
