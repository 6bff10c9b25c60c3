#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gstruct/extended.hpp"
#include "gstruct/liealg.hpp"

namespace gstruct {

/// Seeded source of small exact test data. Identical seeds give identical streams.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  bool coin() { return integer(0, 1) == 1; }
  /// n/d with |n| <= num_bound, 1 <= d <= den_bound.
  Rational rational(int num_bound = 3, int den_bound = 3);
  /// Unimodular-ish invertible integer matrix: a product of random elementary operations.
  RMatrix invertible(std::size_t n, int steps = 0);
  RMatrix matrix(std::size_t rows, std::size_t cols, int bound = 2);

  /// Metric of signature (p, q) written in a random basis.
  PseudoMetric metric(std::size_t p, std::size_t q);
  /// Cayley transform of a random small element of the symmetry algebra of b_k
  /// (n x n matrices). An empty basis gives the identity.
  RMatrix symmetry(const std::vector<RMatrix>& algebra_basis, std::size_t n);
  RMatrix symmetry(const ExtendedSpace& E) { return symmetry(symmetry_algebra(E), 2 * E.m()); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// A random algebraic (lambda, ell)-structure: a model point of random admissible
/// signature, moved by a random symmetry of b_k and then by a random change of basis of g.
/// Returns the metric in the new basis and the structure.
std::pair<PseudoMetric, GenStructure> random_structure(Sampler& rng, int lambda, int ell,
                                                       std::size_t m);

/// Random S with S^2 = lambda id on E = g + g*: a diagonal (or block j) involution
/// conjugated by a random invertible 2m x 2m matrix. Generally not b-skew.
RMatrix random_involution(Sampler& rng, int lambda, std::size_t m);

/// Random 2-step nilpotent algebra of dimension m: [e_i, e_j] in span of the last
/// `center` basis vectors for i, j < m - center.
LieAlgebra random_two_step(Sampler& rng, std::size_t m, std::size_t center);

/// Random metric Lie algebra of the form h x_phi R: a random derivation D of an abelian
/// ideal acting by ad_{e_m}. Always Jacobi-valid.
LieAlgebra random_abelian_extension(Sampler& rng, std::size_t m);

}  // namespace gstruct
