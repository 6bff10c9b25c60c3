#include "gstruct/extended.hpp"

#include <string>

namespace gstruct {

namespace {

void require_unit(int value, const char* name) {
  if (value != 1 && value != -1) {
    throw ValidationError(std::string(name) + " must be -1 or +1, got " + std::to_string(value));
  }
}

RMatrix split_form(std::size_t m) {
  return assemble(zeros(m, m), identity(m), identity(m), zeros(m, m));
}

std::string pm(int v) { return v > 0 ? "+1" : "-1"; }

}  // namespace

PseudoMetric PseudoMetric::from_gram(RMatrix G) {
  if (!G.is_square() || G.rows() == 0) throw DimensionError("metric Gram matrix must be square and nonempty");
  if (!is_symmetric(G)) throw ValidationError("metric Gram matrix is not symmetric");
  PseudoMetric out;
  try {
    out.inverse_ = gstruct::inverse(G);
  } catch (const SingularMatrixError&) {
    throw ValidationError("metric is degenerate (det G = 0)");
  }
  out.signature_ = signature_of_symmetric(G);
  out.gram_ = std::move(G);
  return out;
}

PseudoMetric PseudoMetric::from_basis(const RMatrix& C, const RMatrix& P) {
  try {
    return from_gram(congruent_gram(C, P));
  } catch (const SingularMatrixError&) {
    throw ValidationError("basis matrix P is singular");
  }
}

PseudoMetric PseudoMetric::standard(std::size_t p, std::size_t q) {
  std::vector<Rational> d(p, Rational(1));
  d.insert(d.end(), q, Rational(-1));
  return from_gram(diag(d));
}

ExtendedSpace build_extended(const PseudoMetric& metric, int k) {
  require_unit(k, "k");
  const std::size_t m = metric.dim();
  ExtendedSpace E{metric, k, split_form(m),
                  assemble(zeros(m, m), Rational(k) * metric.inverse(), metric.gram(), zeros(m, m))};
  if (!(E.ik * E.ik == Rational(k) * identity(2 * m))) {
    throw ValidationError("I_k^2 != k id");
  }
  if (!(E.ik.transpose() * E.bgram == E.bgram * E.ik)) {
    throw ValidationError("I_k is not symmetric for b");
  }
  return E;
}

GenStructure::GenStructure(RMatrix S, int lambda, int ell)
    : s_(std::move(S)), lambda_(lambda), ell_(ell) {
  require_unit(lambda, "lambda");
  require_unit(ell, "ell");
  if (!s_.is_square() || s_.rows() % 2 != 0) {
    throw DimensionError("structure matrix must be 2m x 2m, got " + s_.shape());
  }
}

Report verify_algebraic(const GenStructure& S, const ExtendedSpace& E) {
  const std::size_t n = 2 * E.m();
  if (S.matrix().rows() != n) {
    throw DimensionError("structure is " + S.matrix().shape() + ", extended space has dim " +
                         std::to_string(n));
  }
  if (S.k() != E.k) {
    throw ValidationError("extended space built with k = " + pm(E.k) + " but (lambda, ell) = (" +
                          pm(S.lambda()) + ", " + pm(S.ell()) + ") needs k = " + pm(S.k()));
  }
  const RMatrix& s = S.matrix();
  Report r;
  r.subject = "algebraic axioms for (lambda, ell) = (" + pm(S.lambda()) + ", " + pm(S.ell()) + ")";

  const RMatrix square = s * s - Rational(S.lambda()) * identity(n);
  r.add("square", square.is_zero(), "S^2 = " + pm(S.lambda()) + " id",
        square.is_zero() ? std::nullopt : std::optional<RMatrix>(square));

  const Rational tr = trace(s);
  r.add("split", tr == 0, "trace S = " + to_string(tr));

  const RMatrix skew = s.transpose() * E.bgram + E.bgram * s;
  r.add("b_skew", skew.is_zero(), "S^t b + b S = 0",
        skew.is_zero() ? std::nullopt : std::optional<RMatrix>(skew));

  const RMatrix anti = s * E.ik + E.ik * s;
  r.add("anticommutes_Ik", anti.is_zero(), "S I_k + I_k S = 0",
        anti.is_zero() ? std::nullopt : std::optional<RMatrix>(anti));
  return r;
}

Report verify_algebraic(const GenStructure& S, const PseudoMetric& metric) {
  return verify_algebraic(S, build_extended(metric, S.k()));
}

ClassicalForm make_classical(RMatrix A, RMatrix B, int lambda, int ell,
                             const PseudoMetric& metric) {
  require_unit(lambda, "lambda");
  require_unit(ell, "ell");
  const std::size_t m = metric.dim();
  if (A.rows() != m || A.cols() != m || B.rows() != m || B.cols() != m) {
    throw DimensionError("classical blocks must be " + std::to_string(m) + "x" +
                         std::to_string(m));
  }
  RMatrix theta = metric.gram() * B;
  RMatrix pi = Rational(lambda * ell) * (B * metric.inverse());
  return {std::move(A), std::move(B), std::move(theta), std::move(pi)};
}

Report check_classical(const ClassicalForm& cf, int lambda, int ell, const PseudoMetric& metric) {
  const std::size_t m = metric.dim();
  const RMatrix& G = metric.gram();
  Report r;
  r.subject = "classical form identities";
  const RMatrix square =
      Rational(lambda) * (cf.A * cf.A) + Rational(ell) * (cf.B * cf.B) - identity(m);
  r.add("lambda_A2_plus_ell_B2", square.is_zero(), "lambda A^2 + ell B^2 = id",
        square.is_zero() ? std::nullopt : std::optional<RMatrix>(square));
  const RMatrix comm = cf.A * cf.B - cf.B * cf.A;
  r.add("A_B_commute", comm.is_zero(), "AB = BA",
        comm.is_zero() ? std::nullopt : std::optional<RMatrix>(comm));
  const RMatrix sym = G * cf.A - cf.A.transpose() * G;
  r.add("A_g_symmetric", sym.is_zero(), "G A = A^t G",
        sym.is_zero() ? std::nullopt : std::optional<RMatrix>(sym));
  r.add("theta_skew", is_skew(cf.theta_flat), "theta-flat = G B is skew");
  r.add("pi_skew", is_skew(cf.pi_sharp), "pi-sharp = lambda ell B G^{-1} is skew");
  return r;
}

ClassicalForm to_classical(const GenStructure& S, const PseudoMetric& metric) {
  const std::size_t m = metric.dim();
  if (S.m() != m) throw DimensionError("structure and metric dimensions differ");
  const RMatrix& s = S.matrix();
  const RMatrix A = s.block(0, 0, m, m);
  const RMatrix B = metric.inverse() * s.block(m, 0, m, m);
  ClassicalForm cf = make_classical(A, B, S.lambda(), S.ell(), metric);
  if (!(s.block(0, m, m, m) == cf.pi_sharp)) {
    throw ValidationError("upper-right block is not lambda ell B G^{-1}");
  }
  if (!(s.block(m, m, m, m) == -A.transpose())) {
    throw ValidationError("lower-right block is not -A^t");
  }
  const Report inv = check_classical(cf, S.lambda(), S.ell(), metric);
  for (const auto& c : inv.checks) {
    if (!c.pass) throw ValidationError("classical identity fails: " + c.detail);
  }
  return cf;
}

GenStructure from_classical(const ClassicalForm& cf, int lambda, int ell,
                            const PseudoMetric& metric) {
  const ClassicalForm fresh = make_classical(cf.A, cf.B, lambda, ell, metric);
  const Report inv = check_classical(fresh, lambda, ell, metric);
  for (const auto& c : inv.checks) {
    if (!c.pass) throw ValidationError("classical identity fails: " + c.detail);
  }
  GenStructure S(assemble(fresh.A, fresh.pi_sharp, fresh.theta_flat, -fresh.A.transpose()), lambda,
                 ell);
  const Report axioms = verify_algebraic(S, metric);
  for (const auto& c : axioms.checks) {
    if (!c.pass) throw ValidationError("assembled structure fails " + c.name + ": " + c.detail);
  }
  return S;
}

GenStructure build_extremal(ExtremalKind kind, const RMatrix& data, int lambda, int ell,
                            const PseudoMetric& metric) {
  require_unit(lambda, "lambda");
  require_unit(ell, "ell");
  const std::size_t m = metric.dim();
  if (data.rows() != m || data.cols() != m) {
    throw DimensionError("extremal data must be " + std::to_string(m) + "x" + std::to_string(m));
  }
  const RMatrix& G = metric.gram();
  RMatrix S;
  if (kind == ExtremalKind::R) {
    if (!(data * data == Rational(lambda) * identity(m))) {
      throw ValidationError("s^2 != lambda id");
    }
    if (!(G * data == data.transpose() * G)) {
      throw ValidationError("s is not symmetric for g (g-flat s != s* g-flat)");
    }
    S = assemble(data, zeros(m, m), zeros(m, m), -data.transpose());
  } else {
    if (!is_skew(data)) throw ValidationError("omega-flat is not skew");
    RMatrix omega_inv;
    try {
      omega_inv = inverse(data);
    } catch (const SingularMatrixError&) {
      throw ValidationError("omega is degenerate");
    }
    if (!(omega_inv * G == Rational(ell) * (metric.inverse() * data))) {
      throw ValidationError("omega-flat^{-1} g-flat != ell g-flat^{-1} omega-flat");
    }
    S = assemble(zeros(m, m), Rational(lambda) * omega_inv, data, zeros(m, m));
  }
  GenStructure out(std::move(S), lambda, ell);
  const Report axioms = verify_algebraic(out, metric);
  for (const auto& c : axioms.checks) {
    if (!c.pass) throw ValidationError("extremal structure fails " + c.name);
  }
  return out;
}

Extremal extract_extremal(const GenStructure& S, const PseudoMetric& metric) {
  const std::size_t m = metric.dim();
  if (S.m() != m) throw DimensionError("structure and metric dimensions differ");
  const Report axioms = verify_algebraic(S, metric);
  if (!axioms.all_pass()) throw ValidationError("structure fails the algebraic axioms");
  const RMatrix& s = S.matrix();
  const RMatrix tl = s.block(0, 0, m, m), tr = s.block(0, m, m, m);
  const RMatrix bl = s.block(m, 0, m, m), br = s.block(m, m, m, m);
  const RMatrix& G = metric.gram();
  if (tr.is_zero() && bl.is_zero()) {
    if (!(tl * tl == Rational(S.lambda()) * identity(m)) || !(G * tl == tl.transpose() * G) ||
        !(br == -tl.transpose())) {
      throw ValidationError("block-diagonal structure does not certify a (lambda,0)-structure");
    }
    return ProductOrComplex{tl};
  }
  if (tl.is_zero() && br.is_zero()) {
    const RMatrix omega_inv = inverse(bl);
    if (!is_skew(bl) ||
        !(omega_inv * G == Rational(S.ell()) * (metric.inverse() * bl)) ||
        !(tr == Rational(S.lambda()) * omega_inv)) {
      throw ValidationError("off-diagonal structure does not certify a (0,ell)-structure");
    }
    return Symplectic{bl};
  }
  throw NotExtremalError("not extremal: both diagonal and off-diagonal blocks are nonzero");
}

NijenhuisReport nijenhuis(const LieAlgebra& T, const RMatrix& S, int lambda) {
  const std::size_t n = T.dim();
  if (S.rows() != n || S.cols() != n) {
    throw DimensionError("structure " + S.shape() + " on a " + std::to_string(n) +
                         "-dimensional algebra");
  }
  std::vector<Vec> images;
  images.reserve(n);
  for (std::size_t a = 0; a < n; ++a) images.push_back(S.column(a));
  NijenhuisReport report;
  for (std::size_t a = 0; a < n; ++a) {
    const Vec ea = unit_vector(n, a);
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vec eb = unit_vector(n, b);
      Vec value = bracket_eval(T, images[a], images[b]);
      const Vec inner = add(bracket_eval(T, images[a], eb), bracket_eval(T, ea, images[b]));
      const Vec s_inner = S * inner;
      for (std::size_t i = 0; i < n; ++i) value[i] -= s_inner[i];
      if (lambda != 0) value = add(value, scaled(Rational(lambda), bracket_eval(T, ea, eb)));
      ++report.pairs_checked;
      if (!is_zero(value)) report.nonzero.push_back({a, b, std::move(value)});
    }
  }
  return report;
}

NijenhuisReport nijenhuis_integrability(const LieAlgebra& T, const GenStructure& S) {
  return nijenhuis(T, S.matrix(), S.lambda());
}

EigenBasis eigenbasis(const RMatrix& S, int delta) {
  require_unit(delta, "delta");
  const auto k = rref_kernel(S - Rational(delta) * identity(S.rows()));
  return {delta, k.kernel_basis};
}

InvolutivityResult eigenspace_involutivity(const LieAlgebra& T, const GenStructure& S,
                                           int delta) {
  if (S.lambda() != 1) {
    throw ValidationError(
        "eigenspace involutivity needs real eigenvalues (lambda = +1); use the Nijenhuis tensor");
  }
  const std::size_t n = S.matrix().rows();
  if (T.dim() != n) throw DimensionError("structure and algebra dimensions differ");
  if (!(S.matrix() * S.matrix() == identity(n))) throw ValidationError("S^2 != id");
  InvolutivityResult out;
  out.basis = eigenbasis(S.matrix(), delta);
  const SubalgebraResult sub = subalgebra_check(T, out.basis.vectors);
  out.involutive = sub.closed;
  out.witness = sub.witness;
  return out;
}

Report paracomplex_integrability(const LieAlgebra& T, const GenStructure& S) {
  Report r;
  r.subject = "integrability of a lambda = +1 structure";
  const auto plus = eigenspace_involutivity(T, S, 1);
  const auto minus = eigenspace_involutivity(T, S, -1);
  const auto nij = nijenhuis_integrability(T, S);
  r.add("D(+1)_involutive", plus.involutive,
        "dim D(+1) = " + std::to_string(plus.basis.vectors.size()));
  r.add("D(-1)_involutive", minus.involutive,
        "dim D(-1) = " + std::to_string(minus.basis.vectors.size()));
  r.add("nijenhuis_vanishes", nij.integrable(),
        std::to_string(nij.nonzero.size()) + " nonzero of " + std::to_string(nij.pairs_checked) +
            " basis pairs");
  r.add("criteria_agree", nij.integrable() == (plus.involutive && minus.involutive),
        "Nijenhuis vanishing <=> both eigenspaces involutive");
  return r;
}

Weierstrass weierstrass(const Rational& s) {
  const Rational denom = 1 + s * s;
  return {(1 - s * s) / denom, 2 * s / denom};
}

GenStructure curve_point(const CurveSpec& spec) {
  const GenStructure& R = spec.R;
  const GenStructure& Q = spec.Q;
  if (R.lambda() != Q.lambda() || R.ell() != Q.ell()) {
    throw ValidationError("curve endpoints have different (lambda, ell)");
  }
  if (R.matrix().rows() != Q.matrix().rows()) throw DimensionError("curve endpoint sizes differ");
  const RMatrix anti = R.matrix() * Q.matrix() + Q.matrix() * R.matrix();
  if (!anti.is_zero()) throw ValidationError("R and Q do not anticommute");
  const Weierstrass w = weierstrass(spec.s);
  return GenStructure(w.cos * R.matrix() + w.sin * Q.matrix(), R.lambda(), R.ell());
}

RMatrix change_of_basis_operator(const RMatrix& A) {
  const std::size_t m = A.rows();
  return assemble(inverse(A), zeros(m, m), zeros(m, m), A.transpose());
}

GenStructure conjugate(const GenStructure& S, const RMatrix& P) {
  return GenStructure(P * S.matrix() * inverse(P), S.lambda(), S.ell());
}

std::vector<RMatrix> symmetry_algebra(const ExtendedSpace& E) {
  const std::size_t n = 2 * E.m();
  const RMatrix M = matrix_of_linear_map(n, n, [&](const RMatrix& X) {
    return std::vector<RMatrix>{X * E.ik - E.ik * X, X.transpose() * E.bgram + E.bgram * X};
  });
  std::vector<RMatrix> out;
  for (const auto& v : rref_kernel(M).kernel_basis) out.push_back(unflatten(v, n, n));
  return out;
}

RMatrix cayley(const RMatrix& X) {
  const RMatrix I = identity(X.rows());
  return inverse(I - X) * (I + X);
}

}  // namespace gstruct
