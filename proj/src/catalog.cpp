#include "gstruct/catalog.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace gstruct {

namespace {

using Sparse = std::map<std::pair<int, int>, Rational>;

RMatrix from_sparse(std::size_t n, const Sparse& entries) {
  RMatrix out = zeros(n, n);
  for (const auto& [rc, v] : entries) out(rc.first - 1, rc.second - 1) = v;
  return out;
}

std::vector<BracketTerm> one_based(std::initializer_list<std::array<int, 4>> terms) {
  std::vector<BracketTerm> out;
  for (const auto& t : terms) {
    out.push_back({static_cast<std::size_t>(t[0] - 1), static_cast<std::size_t>(t[1] - 1),
                   static_cast<std::size_t>(t[2] - 1), Rational(t[3])});
  }
  return out;
}

PseudoMetric diagonal_metric(std::vector<Rational> d) { return PseudoMetric::from_gram(diag(d)); }

CatalogEntry nilpotent(std::string name, LieAlgebra algebra, std::optional<std::string> salamon,
                       PseudoMetric metric, Signature sig, const std::string& table,
                       const Sparse& A, const Sparse& B) {
  const std::size_t m = algebra.dim();
  CatalogEntry e{std::move(name),
                 "six-dimensional nilpotent Lie algebra with a generalized complex structure "
                 "compatible with a pseudo-Riemannian metric",
                 std::move(algebra),
                 std::move(salamon),
                 metric,
                 std::nullopt,
                 std::nullopt,
                 sig,
                 parse_dual_table(table, m),
                 make_classical(from_sparse(m, A), from_sparse(m, B), -1, -1, metric),
                 -1,
                 -1,
                 {}};
  return e;
}

CatalogEntry make_g1() {
  RMatrix P = from_columns({{0, 0, 0, 1, 0, 0},
                            {-4, 0, 0, 1, 0, 0},
                            {-3, -1, 1, 0, 0, 0},
                            {-1, 1, 1, 0, 0, 0},
                            {0, 0, 0, 0, 0, 1},
                            {0, 0, 0, 0, 2, 1}});
  RMatrix C = diag({4, -4, 2, -2, -2, 2});
  LieAlgebra L(6, one_based({{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1},
                             {3, 4, 6, 1}, {5, 2, 6, 1}}));
  CatalogEntry e = nilpotent(
      "g1", std::move(L), std::nullopt, PseudoMetric::from_basis(C, P), {3, 3, 0},
      "(23*+34*+45*, 3*1+35*+6*5, 4*1+5*2+46*, 5*1+6*3, 26*, 0)",
      {{{1, 2}, 1}, {{4, 3}, 1}, {{4, 4}, 1}, {{5, 5}, 1}, {{6, 5}, 1},
       {{2, 1}, -1}, {{3, 2}, -1}, {{3, 3}, -1}, {{6, 6}, -1}},
      {{{3, 5}, -1}, {{4, 6}, -1}, {{5, 2}, -1}, {{6, 2}, -1}, {{3, 6}, 2},
       {{5, 3}, 2}, {{6, 4}, 2}, {{5, 1}, 1}, {{5, 4}, 4}});
  e.metric_values = C;
  e.metric_basis = P;
  return e;
}

CatalogEntry make_salamon(std::string name, const std::string& salamon, std::vector<Rational> d,
                          Signature sig, const std::string& table, const Sparse& A,
                          const Sparse& B) {
  return nilpotent(std::move(name), parse_salamon(salamon), salamon, diagonal_metric(std::move(d)),
                   sig, table, A, B);
}

CatalogEntry make_ellipse() {
  LieAlgebra L(4, one_based({{3, 4, 4, 2}, {4, 2, 1, 2}, {3, 1, 1, 1}, {2, 3, 2, 1}}));
  const PseudoMetric metric = PseudoMetric::standard(4, 0);
  std::vector<DualBracket> reference;
  for (const auto& [i, j, c, l] : std::vector<std::array<int, 4>>{{1, 1, 1, 3},
                                                                 {2, 1, 2, 4},
                                                                 {2, 2, -1, 3},
                                                                 {3, 1, -1, 1},
                                                                 {3, 2, 1, 2},
                                                                 {3, 4, -2, 4},
                                                                 {4, 1, -2, 2},
                                                                 {4, 4, 2, 3}}) {
    reference.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), Rational(c),
                       static_cast<std::size_t>(l - 1)});
  }
  std::sort(reference.begin(), reference.end(), [](const DualBracket& a, const DualBracket& b) {
    return std::tie(a.i, a.j, a.l) < std::tie(b.i, b.j, b.l);
  });
  const GenStructure R = build_extremal(ExtremalKind::R, diag({1, 1, -1, -1}), 1, -1, metric);
  std::vector<CurveFamily> curves;
  for (int eps : {1, -1}) {
    RMatrix omega = zeros(4, 4);
    omega(0, 1) = -1;
    omega(1, 0) = 1;
    omega(2, 3) = -eps;
    omega(3, 2) = eps;
    curves.push_back({eps, R, build_extremal(ExtremalKind::Q, omega, 1, -1, metric)});
  }
  return CatalogEntry{"ellipse",
                      "four-dimensional solvable Lie algebra of the ellipse manifold with the "
                      "curves cos t R + sin t Q_eps of generalized paracomplex structures",
                      std::move(L),
                      std::nullopt,
                      metric,
                      std::nullopt,
                      std::nullopt,
                      {4, 0, 0},
                      std::move(reference),
                      std::nullopt,
                      1,
                      -1,
                      std::move(curves)};
}

std::string sample_label(int eps, const Rational& s) {
  return std::string("eps=") + (eps > 0 ? "+1" : "-1") + ",s=" + to_string(s);
}

std::string describe_mixed(const std::vector<DualBracket>& v) {
  std::string out;
  for (const auto& d : v) {
    if (!out.empty()) out += ", ";
    out += "[e" + std::to_string(d.i + 1) + ",e" + std::to_string(d.j + 1) + "*]=" +
           to_string(d.coeff) + "e" + std::to_string(d.l + 1) + "*";
  }
  return out.empty() ? "none" : out;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"g1", "g2", "g3", "g4", "g5", "ellipse"};
  return names;
}

const std::vector<Rational>& default_curve_samples() {
  static const std::vector<Rational> samples{Rational(0), Rational(1), Rational(1, 2),
                                             Rational(-3), Rational(7, 5)};
  return samples;
}

CatalogEntry catalog_get(const std::string& name) {
  if (name == "g1") return make_g1();
  if (name == "g2") {
    return make_salamon("g2", "(0,0,12,13,14,34+52)", {-2, 1, 1, 1, 1, Rational(1, 2)}, {5, 1, 0},
                        "(23*+34*+45*, 3*1+6*5, 4*1+46*, 5*1+6*3, 26*, 0)",
                        {{{1, 1}, 1}, {{3, 3}, 1}, {{6, 6}, 1}, {{1, 2}, -1}, {{2, 2}, -1},
                         {{2, 1}, 2}},
                        {{{3, 6}, -1}, {{4, 5}, -1}, {{5, 4}, 1}, {{6, 3}, 2}});
  }
  if (name == "g3") {
    return make_salamon("g3", "(0,0,0,12,13,14+35)", {-1, 1, 1, 1, 1, 1}, {5, 1, 0},
                        "(24*+35*+46*, 4*1, 5*1+56*, 6*1, 6*3, 0)",
                        {{{1, 2}, -1}, {{2, 1}, 1}},
                        {{{3, 6}, -1}, {{4, 5}, -1}, {{5, 4}, 1}, {{6, 3}, 1}});
  }
  if (name == "g4") {
    return make_salamon("g4", "(0,0,0,12,23,14+35)", {-2, 1, 2, 1, 1, 1}, {5, 1, 0},
                        "(24*+46*, 4*1+35*, 5*2+56*, 6*1, 6*3, 0)",
                        {{{1, 1}, 1}, {{1, 2}, -1}, {{2, 2}, -1}, {{3, 3}, -1}, {{6, 6}, -1},
                         {{2, 1}, 2}},
                        {{{3, 6}, -1}, {{4, 5}, -1}, {{5, 4}, 1}, {{6, 3}, 2}});
  }
  if (name == "g5") {
    return make_salamon("g5", "(0,0,0,0,12,15+34)", {-1, 1, -1, 1, 1, 1}, {4, 2, 0},
                        "(25*+56*, 5*1, 46*, 6*3, 6*1, 0)",
                        {{{1, 2}, 1}, {{4, 3}, 1}, {{2, 1}, -1}, {{3, 4}, -1}},
                        {{{5, 6}, -1}, {{6, 5}, 1}});
  }
  if (name == "ellipse") return make_ellipse();
  throw ValidationError("unknown catalog entry '" + name + "'");
}

std::vector<Vec> ellipse_reference_generators(int epsilon, int delta, const Rational& s) {
  const auto [c, sn] = weierstrass(s);
  const Rational eps(epsilon);
  const Rational d(delta);
  auto vec = [](std::initializer_list<std::pair<std::size_t, Rational>> entries) {
    Vec v(8, Rational(0));
    for (const auto& [i, x] : entries) v[i] = x;
    return v;
  };
  return {vec({{0, -sn}, {5, c - d}}), vec({{1, sn}, {4, c - d}}),
          vec({{2, eps * sn}, {7, c + d}}), vec({{3, -eps * sn}, {6, c + d}})};
}

std::vector<Vec> ellipse_generator_lines(int epsilon, int delta, const Rational& s) {
  // cos t - 1 = -s (sin t), cos t + 1 = (sin t)/s; divide by 2s/(1+s^2) or 2/(1+s^2).
  const Rational eps(epsilon);
  auto vec = [](std::initializer_list<std::pair<std::size_t, Rational>> entries) {
    Vec v(8, Rational(0));
    for (const auto& [i, x] : entries) v[i] = x;
    return v;
  };
  if (delta == 1) {
    return {vec({{0, -1}, {5, -s}}), vec({{1, 1}, {4, -s}}), vec({{2, eps * s}, {7, 1}}),
            vec({{3, -eps * s}, {6, 1}})};
  }
  return {vec({{0, -s}, {5, 1}}), vec({{1, s}, {4, 1}}), vec({{2, eps}, {7, -s}}),
          vec({{3, -eps}, {6, -s}})};
}

GenStructure entry_structure(const CatalogEntry& entry, int epsilon, const Rational& s) {
  if (entry.classical) return from_classical(*entry.classical, entry.lambda, entry.ell, entry.metric);
  for (const auto& f : entry.curves) {
    if (f.epsilon == epsilon) return curve_point({f.R, f.Q, s});
  }
  throw ValidationError("entry '" + entry.name + "' has no curve with eps = " +
                        std::to_string(epsilon));
}

Report verify_entry(const CatalogEntry& entry, const std::vector<Rational>& samples) {
  Report r;
  r.subject = entry.name;
  const std::size_t m = entry.algebra.dim();

  const auto violations = jacobi_check(entry.algebra);
  r.add("jacobi", violations.empty(),
        violations.empty() ? "all basis triples"
                           : "violation at (" + std::to_string(violations.front().i + 1) + "," +
                                 std::to_string(violations.front().j + 1) + "," +
                                 std::to_string(violations.front().k + 1) + ")");
  if (!violations.empty()) return r;

  if (entry.salamon) {
    r.add("salamon_round_trip", parse_salamon(*entry.salamon) == entry.algebra, *entry.salamon);
  }
  const Signature sig = entry.metric.signature();
  r.add("metric_signature", sig == entry.expected_signature,
        to_string(sig) + " expected " + to_string(entry.expected_signature));

  const LieAlgebra T = cotangent_algebra(entry.algebra);
  r.add("cotangent_jacobi", jacobi_check(T).empty(), "dim " + std::to_string(T.dim()));
  const auto mixed = mixed_brackets(T, m);
  r.add("cotangent_table", mixed == entry.reference_mixed,
        mixed == entry.reference_mixed ? std::to_string(mixed.size()) + " mixed brackets as in the reference table"
                                     : "computed " + describe_mixed(mixed) + "; reference " +
                                           describe_mixed(entry.reference_mixed));

  if (entry.classical) {
    r.merge(check_classical(*entry.classical, entry.lambda, entry.ell, entry.metric), "classical");
    std::optional<GenStructure> S;
    try {
      S = from_classical(*entry.classical, entry.lambda, entry.ell, entry.metric);
      r.add("assembly", true, "S from (A, B)");
    } catch (const Error& ex) {
      r.add("assembly", false, ex.what());
      return r;
    }
    r.merge(verify_algebraic(*S, entry.metric), "S");
    const NijenhuisReport N = nijenhuis_integrability(T, *S);
    std::string detail = std::to_string(N.pairs_checked) + " basis pairs, " +
                         std::to_string(N.nonzero.size()) + " nonzero";
    std::optional<RMatrix> witness;
    if (!N.integrable()) {
      const auto& w = N.nonzero.front();
      detail += "; first at (" + T.labels()[w.a] + "," + T.labels()[w.b] + ")";
      witness = from_columns({w.value});
    }
    r.add("nijenhuis", N.integrable(), detail, witness);
  }

  for (const auto& family : entry.curves) {
    const std::string fam = std::string("eps=") + (family.epsilon > 0 ? "+1" : "-1");
    bool extremal_ok = std::holds_alternative<ProductOrComplex>(
                           extract_extremal(family.R, entry.metric)) &&
                       std::holds_alternative<Symplectic>(extract_extremal(family.Q, entry.metric));
    r.add(fam + ".extremal_ends", extremal_ok, "R block-diagonal, Q block-off-diagonal");
    for (const auto& s : samples) {
      const std::string label = sample_label(family.epsilon, s);
      std::optional<GenStructure> phi;
      try {
        phi = curve_point({family.R, family.Q, s});
      } catch (const Error& ex) {
        r.add(label + ".curve_point", false, ex.what());
        continue;
      }
      r.merge(verify_algebraic(*phi, entry.metric), label);
      for (int delta : {1, -1}) {
        const std::string d = label + ".D(" + (delta > 0 ? "+1" : "-1") + ")";
        const InvolutivityResult inv = eigenspace_involutivity(T, *phi, delta);
        const std::size_t dim = inv.basis.vectors.size();
        std::optional<RMatrix> witness;
        if (inv.witness) witness = from_columns({inv.witness->residual});
        r.add(d + ".involutive", inv.involutive && dim == m,
              "dim " + std::to_string(dim) + (inv.involutive ? ", closed" : ", not closed"),
              witness);

        const auto lines = ellipse_generator_lines(family.epsilon, delta, s);
        const auto reference = ellipse_reference_generators(family.epsilon, delta, s);
        bool reference_ok = span_rank(lines) == m && same_span(lines, inv.basis.vectors);
        std::string how = "reference lines";
        if (s != 0) {
          for (std::size_t i = 0; i < reference.size(); ++i) {
            reference_ok = reference_ok && !is_zero(reference[i]) && in_span({lines[i]}, reference[i]);
          }
          how = "reference vectors";
        }
        r.add(d + ".reference_generators", reference_ok, how + " span D(delta)");
      }
    }
  }
  return r;
}

}  // namespace gstruct
