#include "doctest.h"

#include "gstruct/catalog.hpp"
#include "gstruct/extended.hpp"
#include "gstruct/io.hpp"
#include "support.hpp"

using namespace gstruct;
using gstruct::testing::unit;

namespace {

const RMatrix j2{{0, -1}, {1, 0}};

GenStructure s5() {
  const CatalogEntry e = catalog_get("g5");
  return from_classical(*e.classical, -1, -1, e.metric);
}

}  // namespace

TEST_CASE("pseudo-metrics") {
  const PseudoMetric g = PseudoMetric::from_gram(diag({1, -1, Rational(1, 2)}));
  CHECK(g.signature() == Signature{2, 1, 0});
  CHECK(g.inverse() == diag({1, -1, 2}));
  CHECK_THROWS_AS(PseudoMetric::from_gram(RMatrix{{1, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(PseudoMetric::from_gram(RMatrix{{1, 1}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(PseudoMetric::from_gram(zeros(2, 3)), DimensionError);
}

TEST_CASE("extended space") {
  const ExtendedSpace E = build_extended(PseudoMetric::from_gram(diag({1, -1})), 1);
  const RMatrix expected{{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
  CHECK(E.ik == expected);
  const ExtendedSpace F = build_extended(PseudoMetric::standard(3, 0), -1);
  CHECK(F.ik == assemble(zeros(3, 3), -identity(3), identity(3), zeros(3, 3)));
  CHECK(F.ik * F.ik == -identity(6));
  Sampler rng(2);
  for (int n = 0; n < 20; ++n) {
    const auto p = static_cast<std::size_t>(rng.integer(0, 3));
    const auto q = static_cast<std::size_t>(rng.integer(p == 0 ? 1 : 0, 3));
    const ExtendedSpace X = build_extended(rng.metric(p, q), rng.coin() ? 1 : -1);
    CHECK(signature_of_symmetric(X.bgram) == Signature{p + q, p + q, 0});
    CHECK(X.ik * X.ik == Rational(X.k) * identity(2 * (p + q)));
    CHECK(X.ik.transpose() * X.bgram == X.bgram * X.ik);
  }
}

TEST_CASE("algebraic axioms") {
  SUBCASE("S5 on g5") {
    const CatalogEntry e = catalog_get("g5");
    CHECK(verify_algebraic(s5(), e.metric).all_pass());
  }
  SUBCASE("product structure") {
    const GenStructure R = build_extremal(ExtremalKind::R, diag({1, -1}), 1, 1, PseudoMetric::standard(2, 0));
    CHECK(R.matrix() == diag({1, -1, -1, 1}));
    CHECK(verify_algebraic(R, PseudoMetric::standard(2, 0)).all_pass());
  }
  SUBCASE("identity") {
    const PseudoMetric g = PseudoMetric::standard(2, 0);
    const Report r = verify_algebraic(GenStructure(identity(4), -1, -1), g);
    CHECK_FALSE(r.find("square")->pass);
    CHECK_FALSE(r.find("b_skew")->pass);
    REQUIRE(r.find("b_skew")->witness);
    CHECK(*r.find("b_skew")->witness == Rational(2) * build_extended(g, -1).bgram);
    CHECK(r.find("square")->witness);
    const Report p = verify_algebraic(GenStructure(identity(4), 1, 1), g);
    CHECK(p.find("square")->pass);
    CHECK_FALSE(p.find("split")->pass);
    CHECK_FALSE(p.find("b_skew")->pass);
  }
  SUBCASE("mismatched inputs") {
    CHECK_THROWS_AS(verify_algebraic(GenStructure(identity(4), 1, 1), PseudoMetric::standard(3, 0)),
                    DimensionError);
    CHECK_THROWS_AS(verify_algebraic(GenStructure(identity(4), 1, 1),
                                     build_extended(PseudoMetric::standard(2, 0), 1)),
                    ValidationError);
    CHECK_THROWS_AS(GenStructure(identity(4), 2, 1), ValidationError);
    CHECK_THROWS_AS(GenStructure(identity(3), 1, 1), DimensionError);
  }
}

TEST_CASE("classical form") {
  SUBCASE("S5") {
    const CatalogEntry e = catalog_get("g5");
    const ClassicalForm cf = to_classical(s5(), e.metric);
    RMatrix A = zeros(6, 6);
    A(0, 1) = 1;
    A(3, 2) = 1;
    A(1, 0) = -1;
    A(2, 3) = -1;
    RMatrix B = zeros(6, 6);
    B(4, 5) = -1;
    B(5, 4) = 1;
    CHECK(cf.A == A);
    CHECK(cf.B == B);
  }
  SUBCASE("extremal shapes") {
    const PseudoMetric g = PseudoMetric::from_gram(diag({2, -1}));
    const RMatrix s = diag({1, -1});
    const ClassicalForm r = to_classical(build_extremal(ExtremalKind::R, s, 1, 1, g), g);
    CHECK(r.A == s);
    CHECK(r.B.is_zero());
    const RMatrix omega{{0, 1}, {-1, 0}};
    const PseudoMetric h = PseudoMetric::standard(1, 1);
    const ClassicalForm q = to_classical(build_extremal(ExtremalKind::Q, omega, 1, 1, h), h);
    CHECK(q.A.is_zero());
    CHECK(q.B == h.inverse() * omega);
  }
  SUBCASE("assembly") {
    const PseudoMetric g = PseudoMetric::standard(2, 0);
    const GenStructure S = from_classical(make_classical(zeros(2, 2), j2, -1, -1, g), -1, -1, g);
    CHECK(S.matrix() == assemble(zeros(2, 2), j2, j2, zeros(2, 2)));
    const GenStructure R = from_classical(make_classical(diag({1, -1}), zeros(2, 2), 1, 1, g), 1, 1, g);
    CHECK(R == build_extremal(ExtremalKind::R, diag({1, -1}), 1, 1, g));
    CHECK_THROWS_WITH_AS(from_classical(make_classical(identity(2), j2, -1, -1, g), -1, -1, g),
                         doctest::Contains("lambda A^2 + ell B^2"), ValidationError);
  }
  SUBCASE("catalog pairs") {
    for (const char* name : {"g1", "g2", "g3", "g4", "g5"}) {
      CAPTURE(name);
      const CatalogEntry e = catalog_get(name);
      const GenStructure S = from_classical(*e.classical, -1, -1, e.metric);
      CHECK(verify_algebraic(S, e.metric).all_pass());
      CHECK(to_classical(S, e.metric) == *e.classical);
    }
  }
  SUBCASE("round trip on random structures") {
    Sampler rng(23);
    for (int n = 0; n < 40; ++n) {
      const int lambda = rng.coin() ? 1 : -1;
      const int ell = rng.coin() ? 1 : -1;
      const auto m = static_cast<std::size_t>(2 * rng.integer(1, 2));
      const auto [g, S] = random_structure(rng, lambda, ell, m);
      REQUIRE(verify_algebraic(S, g).all_pass());
      const ClassicalForm cf = to_classical(S, g);
      CHECK(check_classical(cf, lambda, ell, g).all_pass());
      CHECK(from_classical(cf, lambda, ell, g) == S);
    }
  }
}

TEST_CASE("extremal structures") {
  SUBCASE("para-Kaehler") {
    const PseudoMetric g = PseudoMetric::standard(1, 1);
    const RMatrix omega{{0, 1}, {-1, 0}};
    const GenStructure Q = build_extremal(ExtremalKind::Q, omega, 1, 1, g);
    CHECK(verify_algebraic(Q, g).all_pass());
    const RMatrix r = g.inverse() * omega;
    CHECK(r == RMatrix{{0, 1}, {1, 0}});
    CHECK(r * r == identity(2));
  }
  SUBCASE("Kaehler") {
    const PseudoMetric g = PseudoMetric::standard(2, 0);
    const RMatrix omega{{0, 1}, {-1, 0}};
    const GenStructure Q = build_extremal(ExtremalKind::Q, omega, -1, -1, g);
    CHECK(verify_algebraic(Q, g).all_pass());
    const RMatrix j = g.inverse() * omega;
    CHECK(j * j == -identity(2));
  }
  SUBCASE("violated preconditions") {
    const PseudoMetric g = PseudoMetric::standard(2, 0);
    CHECK_THROWS_AS(build_extremal(ExtremalKind::R, diag({1, 2}), 1, 1, g), ValidationError);
    CHECK_THROWS_AS(build_extremal(ExtremalKind::R, RMatrix{{0, 1}, {1, 0}}, 1, 1,
                                   PseudoMetric::from_gram(diag({1, 2}))),
                    ValidationError);
    CHECK_THROWS_AS(build_extremal(ExtremalKind::Q, identity(2), -1, -1, g), ValidationError);
    CHECK_THROWS_AS(build_extremal(ExtremalKind::Q, RMatrix{{0, 1}, {-1, 0}}, 1, 1, g),
                    ValidationError);
  }
  SUBCASE("ellipse ends") {
    const CatalogEntry e = catalog_get("ellipse");
    for (const auto& f : e.curves) {
      const Extremal r = extract_extremal(f.R, e.metric);
      REQUIRE(std::holds_alternative<ProductOrComplex>(r));
      const RMatrix& s = std::get<ProductOrComplex>(r).s;
      CHECK(s == diag({1, 1, -1, -1}));
      const auto d1 = rref_kernel(s - identity(4)).kernel_basis;
      CHECK(same_span(d1, {unit(4, 0), unit(4, 1)}));
      const Extremal q = extract_extremal(f.Q, e.metric);
      REQUIRE(std::holds_alternative<Symplectic>(q));
      const RMatrix B = block_diag({j2, Rational(f.epsilon) * j2});
      CHECK(std::get<Symplectic>(q).omega_flat == B);
    }
    CHECK(catalog_get("ellipse").curves.front().R.matrix() == diag({1, 1, -1, -1, -1, -1, 1, 1}));
  }
  SUBCASE("S5 is far from extremal") {
    CHECK_THROWS_AS(extract_extremal(s5(), catalog_get("g5").metric), NotExtremalError);
    CHECK(rank(catalog_get("g5").classical->B) == 2);
  }
}

TEST_CASE("interpolation between extremal structures") {
  Sampler rng(29);
  for (int n = 0; n < 30; ++n) {
    const int lambda = rng.coin() ? 1 : -1;
    const int ell = rng.coin() ? 1 : -1;
    const std::size_t m = 2 * static_cast<std::size_t>(rng.integer(1, 2));
    // diagonal s and G commute; a block j is symmetric for blocks diag(1, -1) of G
    RMatrix s0 = zeros(m, m);
    RMatrix G0 = zeros(m, m);
    for (std::size_t i = 0; i < m; i += 2) {
      if (lambda == 1) {
        s0(i, i) = rng.coin() ? 1 : -1;
        s0(i + 1, i + 1) = rng.coin() ? 1 : -1;
        G0(i, i) = rng.coin() ? 1 : -1;
        G0(i + 1, i + 1) = rng.coin() ? 1 : -1;
      } else {
        s0(i, i + 1) = -1;
        s0(i + 1, i) = 1;
        G0(i, i) = 1;
        G0(i + 1, i + 1) = -1;
      }
    }
    const RMatrix A = rng.invertible(m);
    const PseudoMetric g = PseudoMetric::from_gram(A.transpose() * G0 * A);
    const RMatrix s = inverse(A) * s0 * A;
    const GenStructure R = build_extremal(ExtremalKind::R, s, lambda, ell, g);
    CHECK(verify_algebraic(R, g).all_pass());
    const Extremal x = extract_extremal(R, g);
    REQUIRE(std::holds_alternative<ProductOrComplex>(x));
    const RMatrix& got = std::get<ProductOrComplex>(x).s;
    CHECK(got * got == Rational(lambda) * identity(m));
    CHECK(g.gram() * got == got.transpose() * g.gram());
  }
  // omega side
  for (int n = 0; n < 30; ++n) {
    const int lambda = rng.coin() ? 1 : -1;
    const int ell = rng.coin() ? 1 : -1;
    const auto [g, Q] = random_structure(rng, lambda, ell, 2);
    const ExtendedSpace E = build_extended(g, Q.k());
    (void)E;
    try {
      const Extremal x = extract_extremal(Q, g);
      if (const auto* sy = std::get_if<Symplectic>(&x)) {
        const RMatrix& w = sy->omega_flat;
        CHECK(w.transpose() == -w);
        CHECK(inverse(w) * g.gram() == Rational(ell) * (g.inverse() * w));
      } else {
        const RMatrix& s = std::get<ProductOrComplex>(x).s;
        CHECK(s * s == Rational(lambda) * identity(2));
      }
    } catch (const NotExtremalError&) {
    }
  }
}

TEST_CASE("Nijenhuis tensor") {
  SUBCASE("abelian") {
    const LieAlgebra T = cotangent_algebra(LieAlgebra(2));
    const GenStructure R = build_extremal(ExtremalKind::R, diag({1, -1}), 1, 1, PseudoMetric::standard(2, 0));
    const NijenhuisReport N = nijenhuis_integrability(T, R);
    CHECK(N.integrable());
    CHECK(N.pairs_checked == 6);
  }
  SUBCASE("catalog") {
    for (const char* name : {"g1", "g2", "g3", "g4", "g5"}) {
      const CatalogEntry e = catalog_get(name);
      const NijenhuisReport N = nijenhuis_integrability(cotangent_algebra(e.algebra),
                                                        from_classical(*e.classical, -1, -1, e.metric));
      CHECK(N.integrable());
      CHECK(N.pairs_checked == 66);
    }
  }
  SUBCASE("S5 with B56 flipped") {
    const CatalogEntry e = catalog_get("g5");
    StructureFile f;
    f.A = e.classical->A;
    f.B = e.classical->B;
    (*f.B)(4, 5) = 1;
    const GenStructure S = structure_matrix(f, e.metric);
    CHECK_FALSE(verify_algebraic(S, e.metric).all_pass());
    const NijenhuisReport N = nijenhuis(cotangent_algebra(e.algebra), S.matrix(), -1);
    CHECK_FALSE(N.integrable());
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(nijenhuis(cotangent_algebra(LieAlgebra(2)), identity(6), 1), DimensionError);
  }
}

TEST_CASE("eigenspaces") {
  const CatalogEntry e = catalog_get("ellipse");
  const LieAlgebra T = cotangent_algebra(e.algebra);
  SUBCASE("R on the ellipse") {
    for (int delta : {1, -1}) {
      const InvolutivityResult r = eigenspace_involutivity(T, e.curves.front().R, delta);
      CHECK(r.involutive);
      CHECK(r.basis.vectors.size() == 4);
      for (const auto& v : r.basis.vectors) {
        CHECK(e.curves.front().R.matrix() * v == scaled(Rational(delta), v));
      }
    }
  }
  SUBCASE("complex structures are rejected") {
    CHECK_THROWS_AS(eigenspace_involutivity(cotangent_algebra(catalog_get("g5").algebra), s5(), 1),
                    ValidationError);
  }
  SUBCASE("non-involutive eigenspace") {
    const LieAlgebra T5 = cotangent_algebra(parse_salamon("(0,0,0,0,12,15+34)"));
    const GenStructure R = build_extremal(ExtremalKind::R, diag({1, 1, -1, -1, -1, -1}), 1, 1,
                                          PseudoMetric::standard(6, 0));
    const InvolutivityResult r = eigenspace_involutivity(T5, R, 1);
    CHECK_FALSE(r.involutive);
    REQUIRE(r.witness);
    CHECK(r.witness->bracket == unit(12, 4));
    CHECK(r.witness->residual == unit(12, 4));
    const Report p = paracomplex_integrability(T5, R);
    CHECK(p.find("criteria_agree")->pass);
    CHECK_FALSE(p.find("nijenhuis_vanishes")->pass);
  }
}

TEST_CASE("curve points") {
  const CatalogEntry e = catalog_get("ellipse");
  const CurveFamily& f = e.curves.front();
  CHECK(curve_point({f.R, f.Q, 0}) == f.R);
  CHECK(curve_point({f.R, f.Q, 1}) == f.Q);
  const RMatrix half = Rational(1, 5) * (Rational(3) * f.R.matrix() + Rational(4) * f.Q.matrix());
  CHECK(curve_point({f.R, f.Q, Rational(1, 2)}).matrix() == half);
  const Weierstrass w = weierstrass(Rational(-3));
  CHECK(w.cos * w.cos + w.sin * w.sin == 1);
  CHECK_THROWS_AS(curve_point({f.R, f.R, Rational(1, 2)}), ValidationError);
  Sampler rng(31);
  const LieAlgebra T = cotangent_algebra(e.algebra);
  for (int n = 0; n < 20; ++n) {
    const Rational s = rng.rational(9, 7);
    for (const auto& fam : e.curves) {
      const GenStructure phi = curve_point({fam.R, fam.Q, s});
      CHECK(verify_algebraic(phi, e.metric).all_pass());
    }
  }
}

TEST_CASE("conjugation by symmetries of b_k") {
  Sampler rng(37);
  for (int n = 0; n < 30; ++n) {
    const int lambda = rng.coin() ? 1 : -1;
    const int ell = rng.coin() ? 1 : -1;
    const auto [g, S] = random_structure(rng, lambda, ell, 2);
    const ExtendedSpace E = build_extended(g, S.k());
    const RMatrix P = rng.symmetry(E);
    CHECK(P.transpose() * E.bgram * P == E.bgram);
    CHECK(P * E.ik == E.ik * P);
    CHECK(verify_algebraic(conjugate(S, P), E).all_pass());
    const GenStructure broken(random_involution(rng, lambda, 2), lambda, ell);
    CHECK(verify_algebraic(conjugate(broken, P), E).all_pass() == verify_algebraic(broken, E).all_pass());
  }
}

TEST_CASE("Nijenhuis agrees with two-sided involutivity") {
  Sampler rng(41);
  for (int n = 0; n < 30; ++n) {
    const auto m = static_cast<std::size_t>(rng.integer(1, 3));
    const LieAlgebra L = gstruct::testing::random_algebra(rng, m);
    const auto [g, S] = random_structure(rng, 1, rng.coin() ? 1 : -1, m);
    const Report r = paracomplex_integrability(cotangent_algebra(L), S);
    CHECK(r.find("criteria_agree")->pass);
  }
}
