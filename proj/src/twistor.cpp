#include "gstruct/twistor.hpp"

namespace gstruct {

namespace {

void require_all_pass(const Report& r, const std::string& what) {
  for (const auto& c : r.checks) {
    if (!c.pass) throw ValidationError(what + ": " + c.name + " fails (" + c.detail + ")");
  }
}

}  // namespace

BetaForm beta_form(const GenStructure& S, const ExtendedSpace& E) {
  if (S.lambda() != 1 || S.ell() != 1) {
    throw ValidationError("beta_S is defined for (1,1)-structures only");
  }
  if (E.k != -1) throw ValidationError("beta_S needs the extended space with k = -1");
  require_all_pass(verify_algebraic(S, E), "beta_S precondition");
  BetaForm out;
  out.gram = (S.matrix() * E.ik).transpose() * E.bgram;
  if (!is_symmetric(out.gram)) {
    throw ValidationError("invariant violation: beta_S is not symmetric");
  }
  out.signature = signature_of_symmetric(out.gram);
  const std::size_t m = E.m();
  if (out.signature.z != 0 || out.signature.p % 2 != 0 || out.signature.p + out.signature.q != 2 * m) {
    throw ValidationError("invariant violation: beta_S has signature " + to_string(out.signature) +
                          ", expected (2n, 2m-2n, 0)");
  }
  out.n = out.signature.p / 2;
  return out;
}

std::size_t beta_signature(const GenStructure& S, const ExtendedSpace& E) {
  return beta_form(S, E).n;
}

TwistorForms bk_gram(const ExtendedSpace& E) {
  const int k = E.k;
  const QMatrix real_part = promote(E.bgram, k);
  const QMatrix imag_part = promote(E.bgram * E.ik, k);
  TwistorForms out;
  out.k = k;
  out.gram = real_part + scale(QuadScalar(0, k, k), imag_part);
  out.basis_gram = out.gram.block(0, 0, E.m(), E.m());
  return out;
}

Report bk_properties(const TwistorForms& forms, const ExtendedSpace& E) {
  const int k = forms.k;
  const std::size_t m = E.m();
  Report r;
  r.subject = k == -1 ? "b_{-1} (C-valued)" : "b_1 (L-valued)";
  r.add("iota_symmetric", forms.gram == forms.gram.transpose(), "b_k(x,y) = b_k(y,x)");
  const QMatrix lhs = promote(E.ik, k).transpose() * forms.gram;
  const QMatrix rhs = scale(QuadScalar::iota(k), forms.gram);
  r.add("iota_bilinear", lhs == rhs, "b_k(iota x, y) = iota b_k(x, y) with iota x = I_k x");

  if (k == -1) {
    const auto d = congruence_diagonal(forms.basis_gram);
    bool nondegenerate = true;
    for (const auto& x : d) nondegenerate = nondegenerate && !x.is_zero();
    r.add("congruent_to_identity", nondegenerate,
          "nondegenerate symmetric over Q(i); every diagonal entry is a square over C");
  } else {
    const QMatrix expected_basis = scale(QuadScalar::iota(1), promote(E.metric.gram(), 1));
    r.add("eps_metric_on_basis", forms.basis_gram == expected_basis, "b_1(e_i, e_j) = eps G_ij");
    const QMatrix chart = promote(null_chart(E.metric), 1);
    const QMatrix in_null = chart.transpose() * forms.gram * chart;
    const QMatrix G = promote(E.metric.gram(), 1);
    const QMatrix zero(m, m, QuadScalar::zero(1));
    QMatrix expected(2 * m, 2 * m, QuadScalar::zero(1));
    // eps e = -e, eps ebar = ebar
    const QMatrix top = scale(-QuadScalar::null_e(), G);
    const QMatrix bottom = scale(QuadScalar::null_ebar(), G);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        expected(i, j) = top(i, j);
        expected(m + i, m + j) = bottom(i, j);
      }
    r.add("null_basis_form", in_null == expected,
          "B_1(x1 e + y1 ebar, x2 e + y2 ebar) = eps(e<x1,x2> + ebar<y1,y2>)");
  }
  return r;
}

bool char_condition(const RMatrix& S, int lambda, int ell, const ExtendedSpace& E) {
  const std::size_t n = 2 * E.m();
  if (S.rows() != n || S.cols() != n) throw DimensionError("structure does not fit E");
  if (E.k != -lambda * ell) throw ValidationError("extended space has k != -lambda ell");
  if (!(S * S == Rational(lambda) * identity(n))) {
    throw ValidationError("char_condition requires S^2 = lambda id");
  }
  const TwistorForms forms = bk_gram(E);
  const QMatrix s = promote(S, E.k);
  const QMatrix lhs = s.transpose() * forms.gram * s;
  const QMatrix rhs = scale(QuadScalar::real(-lambda, E.k), conj(forms.gram));
  return lhs == rhs;
}

RMatrix null_chart(const PseudoMetric& metric) {
  const std::size_t m = metric.dim();
  const Rational half(1, 2);
  const RMatrix I = identity(m);
  const RMatrix G = metric.gram();
  return assemble(half * I, half * I, -half * G, half * G);
}

Signature lorentz_imaginary_signature(const ExtendedSpace& E) {
  if (E.k != 1) throw ValidationError("Im(b_1) needs the extended space with k = +1");
  return signature_of_symmetric(E.bgram * E.ik);
}

Admissibility split_admissibility(int lambda, int ell, std::size_t p, std::size_t q) {
  if (lambda == -1 && ell == 1 && p != q) {
    return {false, "a (-1,1)-structure is an anti-isometry of h = Im(b_1), whose signature (" +
                       std::to_string(2 * p) + "," + std::to_string(2 * q) +
                       ") is twice that of g; this forces p = q (g split)"};
  }
  return {true, "no constraint from the anti-isometry argument"};
}

ModelPoint model_point(int lambda, int ell, std::size_t p, std::size_t q,
                       std::optional<std::size_t> sig) {
  const std::size_t m = p + q;
  if (m == 0) throw ValidationError("model point needs a positive dimension");
  if ((lambda != 1 && lambda != -1) || (ell != 1 && ell != -1)) {
    throw ValidationError("lambda and ell must be -1 or +1");
  }
  if (sig && !(lambda == 1 && ell == 1)) {
    throw ValidationError("sig is only meaningful for (1,1)-structures");
  }
  const PseudoMetric metric = PseudoMetric::standard(p, q);
  const Admissibility adm = split_admissibility(lambda, ell, p, q);
  if (!adm.admissible) throw ValidationError("inadmissible signature: " + adm.reason);

  std::optional<RMatrix> null_matrix;
  std::optional<GenStructure> S;
  std::string description;

  if (lambda == 1 && ell == 1) {
    // sig(R) = (negative directions in D(+1)) + (positive directions in D(-1)).
    const std::size_t n = sig.value_or(m / 2);
    if (n > m) throw ValidationError("sig must lie in [0, m]");
    const std::size_t pos_minus = std::min(n, p);
    const std::size_t neg_plus = n - pos_minus;
    std::vector<Rational> r_diag;
    for (std::size_t i = 0; i < p; ++i) r_diag.push_back(i < p - pos_minus ? 1 : -1);
    for (std::size_t i = 0; i < q; ++i) r_diag.push_back(i < neg_plus ? 1 : -1);
    S = build_extremal(ExtremalKind::R, diag(r_diag), 1, 1, metric);
    description = "R = diag(r, -r*) from a diagonal product structure r";
  } else if (lambda == -1 && ell == -1) {
    if (m % 2 != 0) {
      throw ValidationError("inadmissible signature: (-1,-1)-structures need even dimension");
    }
    RMatrix j = zeros(m, m);
    for (std::size_t i = 0; i < m; i += 2) {
      j(i, i + 1) = -1;
      j(i + 1, i) = 1;
    }
    const GenStructure kaehler =
        build_extremal(ExtremalKind::Q, j, -1, -1, PseudoMetric::standard(m, 0));
    // C-isometry of b_{-1}: e_i -> -e_i*, e_i* -> -e_i on the negative directions.
    RMatrix psi = identity(2 * m);
    for (std::size_t i = p; i < m; ++i) {
      psi(i, i) = 0;
      psi(m + i, m + i) = 0;
      psi(m + i, i) = -1;
      psi(i, m + i) = -1;
    }
    S = conjugate(kaehler, psi);
    description = "standard Kaehler Q on R^m transported to signature (p,q)";
  } else {
    const RMatrix chart = null_chart(metric);
    RMatrix sn;
    if (lambda == 1) {
      sn = assemble(zeros(m, m), identity(m), identity(m), zeros(m, m));
      description = "conjugation of L^m: x e + y ebar -> y e + x ebar";
    } else {
      const RMatrix r = assemble(zeros(p, p), identity(p), identity(p), zeros(p, p));
      sn = assemble(zeros(m, m), r, -r, zeros(m, m));
      description = "x e + y ebar -> r(y) e - r(x) ebar, r(x1,x2) = (x2,x1)";
    }
    null_matrix = sn;
    S = GenStructure(chart * sn * inverse(chart), lambda, ell);
  }

  const ExtendedSpace E = build_extended(metric, S->k());
  require_all_pass(verify_algebraic(*S, E), "model point");
  if (!char_condition(S->matrix(), lambda, ell, E)) {
    throw ValidationError("model point fails the b_k characterization");
  }
  return {lambda, ell, p, q, metric, std::move(null_matrix), std::move(*S), std::move(description)};
}

OrbitReport orbit_dimension_check(const ModelPoint& mp, const ExtendedSpace& E) {
  const RMatrix& S = mp.S.matrix();
  const std::size_t n = S.rows();
  if (2 * E.m() != n) throw DimensionError("model point does not fit E");
  if (E.k != mp.S.k()) throw ValidationError("extended space has the wrong k");
  OrbitReport out;
  const RMatrix tangent = matrix_of_linear_map(n, n, [&](const RMatrix& X) {
    return std::vector<RMatrix>{X * S + S * X, X.transpose() * E.bgram + E.bgram * X,
                                X * E.ik + E.ik * X};
  });
  out.constraint_tangent_dim = n * n - rank(tangent);
  out.group_dim = symmetry_algebra(E).size();
  const RMatrix isotropy = matrix_of_linear_map(n, n, [&](const RMatrix& X) {
    return std::vector<RMatrix>{X * E.ik - E.ik * X, X.transpose() * E.bgram + E.bgram * X,
                                X * S - S * X};
  });
  out.isotropy_dim = n * n - rank(isotropy);
  out.orbit_dim = out.group_dim - out.isotropy_dim;
  return out;
}

}  // namespace gstruct
