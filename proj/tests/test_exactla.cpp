#include "doctest.h"

#include "gstruct/exactla.hpp"
#include "gstruct/quad.hpp"
#include "support.hpp"

using namespace gstruct;
using gstruct::testing::vec;

TEST_CASE("rationals parse strictly and stay reduced") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("0/5")) == "0");
  for (const char* bad : {"", "1/0", "abc", "1.5", " 1", "1/", "/2", "1/2/3", "+", "6/-4"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("null Lorentz numbers are orthogonal idempotents") {
  const QuadScalar e = QuadScalar::null_e();
  const QuadScalar eb = QuadScalar::null_ebar();
  const QuadScalar eps = QuadScalar::iota(1);
  CHECK(e * eb == QuadScalar::zero(1));
  CHECK(quad_arith(e, eb, QuadOp::mul).is_zero());
  CHECK(e * e == e);
  CHECK(eb * eb == eb);
  CHECK(eps * e == -e);
  CHECK(eps * eb == eb);
  CHECK(e + eb == QuadScalar::one(1));
  CHECK_THROWS_AS(e.inverse(), ZeroDivisorError);
}

TEST_CASE("Gaussian rationals") {
  const QuadScalar i = QuadScalar::iota(-1);
  CHECK(i * i == QuadScalar::real(-1, -1));
  const QuadScalar z(Rational(3), Rational(-2, 5), -1);
  CHECK(quad_arith(z, z, QuadOp::conj) == QuadScalar(Rational(3), Rational(2, 5), -1));
  CHECK(z * z.inverse() == QuadScalar::one(-1));
  CHECK_THROWS_AS(i + QuadScalar::iota(1), KappaMismatchError);
  CHECK_THROWS_AS(quad_arith(i, QuadScalar::one(1), QuadOp::mul), KappaMismatchError);
}

TEST_CASE("every nonzero Gaussian rational has a verified inverse") {
  Sampler rng(11);
  for (int n = 0; n < 300; ++n) {
    const QuadScalar z(rng.rational(5, 4), rng.rational(5, 4), -1);
    if (z.is_zero()) continue;
    CHECK(z * z.inverse() == QuadScalar::one(-1));
  }
}

TEST_CASE("kernels of small matrices") {
  SUBCASE("zero map") {
    const auto k = rref_kernel(zeros(3, 3));
    CHECK(k.rank == 0);
    CHECK(k.kernel_basis.size() == 3);
  }
  SUBCASE("identity") {
    const auto k = rref_kernel(identity(4));
    CHECK(k.rank == 4);
    CHECK(k.kernel_basis.empty());
  }
  SUBCASE("rank one") {
    const auto k = rref_kernel(RMatrix{{1, 2}, {2, 4}});
    CHECK(k.rank == 1);
    REQUIRE(k.kernel_basis.size() == 1);
    CHECK(same_span(k.kernel_basis, {vec({-2, 1})}));
  }
}

TEST_CASE("Gaussian elimination refuses Lorentz-number matrices") {
  const QMatrix m = promote(identity(2), 1);
  CHECK_THROWS_AS(rref(m), ZeroDivisorError);
  CHECK_NOTHROW(rref(promote(identity(2), -1)));
}

TEST_CASE("kernel vectors are exact and rank-nullity holds") {
  Sampler rng(7);
  for (int n = 0; n < 200; ++n) {
    const auto rows = static_cast<std::size_t>(rng.integer(1, 5));
    const auto cols = static_cast<std::size_t>(rng.integer(1, 5));
    RMatrix M = rng.matrix(rows, cols, 2);
    if (rng.coin() && rows > 1) {
      for (std::size_t c = 0; c < cols; ++c) M(rows - 1, c) = M(0, c) * 2;
    }
    const auto k = rref_kernel(M);
    CHECK(k.rank + k.kernel_basis.size() == cols);
    CHECK(span_rank(k.kernel_basis) == k.kernel_basis.size());
    for (const auto& v : k.kernel_basis) CHECK(is_zero(M * v));
  }
}

TEST_CASE("complex kernels") {
  const QuadScalar i = QuadScalar::iota(-1);
  const QuadScalar one = QuadScalar::one(-1);
  QMatrix m(1, 2, QuadScalar::zero(-1));
  m(0, 0) = one;
  m(0, 1) = i;
  const auto k = rref_kernel(m);
  REQUIRE(k.kernel_basis.size() == 1);
  const auto& v = k.kernel_basis.front();
  CHECK((one * v[0] + i * v[1]).is_zero());
}

TEST_CASE("signatures by Lagrange reduction") {
  CHECK(signature_of_symmetric(diag({4, -4, 2, -2, -2, 2})) == Signature{3, 3, 0});
  CHECK(signature_of_symmetric(identity(5)) == Signature{5, 0, 0});
  CHECK(signature_of_symmetric(RMatrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
  CHECK(signature_of_symmetric(RMatrix{{0, 0}, {0, 0}}) == Signature{0, 0, 2});
  CHECK(signature_of_symmetric(RMatrix{{1, 1}, {1, 1}}) == Signature{1, 0, 1});
  CHECK_THROWS_AS(signature_of_symmetric(RMatrix{{0, 1}, {0, 0}}), ValidationError);
}

TEST_CASE("signature is a congruence invariant") {
  Sampler rng(3);
  for (int n = 0; n < 200; ++n) {
    const auto dim = static_cast<std::size_t>(rng.integer(1, 5));
    RMatrix M = rng.matrix(dim, dim, 2);
    M = M + M.transpose();
    const RMatrix P = rng.invertible(dim);
    CHECK(signature_of_symmetric(P.transpose() * M * P) == signature_of_symmetric(M));
  }
}

TEST_CASE("Gram matrices from another basis") {
  const RMatrix C{{2, 1}, {1, -3}};
  CHECK(congruent_gram(C, identity(2)) == C);
  CHECK(congruent_gram(identity(2), diag({2, 1})) == diag({Rational(1, 4), 1}));
  CHECK_THROWS_AS(congruent_gram(identity(2), RMatrix{{1, 2}, {2, 4}}), SingularMatrixError);

  const RMatrix P = from_columns({vec({0, 0, 0, 1, 0, 0}), vec({-4, 0, 0, 1, 0, 0}),
                                  vec({-3, -1, 1, 0, 0, 0}), vec({-1, 1, 1, 0, 0, 0}),
                                  vec({0, 0, 0, 0, 0, 1}), vec({0, 0, 0, 0, 2, 1})});
  const RMatrix G1 = congruent_gram(diag({4, -4, 2, -2, -2, 2}), P);
  // computed independently with a CAS
  const RMatrix expected{{0, 0, 0, 1, 0, 0},  {0, 0, -1, -1, 0, 0}, {0, -1, 0, 2, 0, 0},
                         {1, -1, 2, 4, 0, 0}, {0, 0, 0, 0, 0, 1},   {0, 0, 0, 0, 1, -2}};
  CHECK(G1 == expected);
  CHECK(P.transpose() * G1 * P == diag({4, -4, 2, -2, -2, 2}));
  CHECK(signature_of_symmetric(G1) == Signature{3, 3, 0});
}

TEST_CASE("inverse and determinant") {
  Sampler rng(5);
  for (int n = 0; n < 100; ++n) {
    const auto dim = static_cast<std::size_t>(rng.integer(1, 6));
    const RMatrix A = rng.invertible(dim);
    CHECK(A * inverse(A) == identity(dim));
    CHECK(determinant(A) * determinant(inverse(A)) == 1);
  }
  CHECK_THROWS_AS(inverse(RMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
}
