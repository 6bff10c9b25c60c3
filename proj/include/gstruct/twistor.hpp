#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "gstruct/extended.hpp"

namespace gstruct {

/// beta_S(x, y) = b(S I_{-1} x, y) for a (1,1)-structure and its inertia.
struct BetaForm {
  RMatrix gram;
  Signature signature;
  std::size_t n = 0;  ///< sig(S): the signature is (2n, 2m - 2n)
};

/// Throws ValidationError unless S is an algebraic (1,1)-structure on E (k = -1).
/// A symmetric beta_S whose inertia is not of the form (2n, 2m-2n, 0) is reported
/// as an invariant violation (ValidationError).
BetaForm beta_form(const GenStructure& S, const ExtendedSpace& E);
std::size_t beta_signature(const GenStructure& S, const ExtendedSpace& E);

/// b_k(x, y) = b(x, y) + k iota b(x, I_k y) with iota^2 = k (iota = i for k = -1,
/// iota = eps for k = +1).
struct TwistorForms {
  int k = -1;
  QMatrix gram;        ///< 2m x 2m, real basis (e_1..e_m, e_1*..e_m*)
  QMatrix basis_gram;  ///< m x m on e_1..e_m, an iota-basis of (E, I_k)
};

TwistorForms bk_gram(const ExtendedSpace& E);

/// iota-symmetry, iota-bilinearity and, per k, the normal form of b_k:
/// k = -1: nondegenerate over Q(i), hence congruent to Z^t W over C;
/// k = +1: eps G on the iota-basis and eps(e<x1,x2> + ebar<y1,y2>) in null coordinates.
Report bk_properties(const TwistorForms& forms, const ExtendedSpace& E);

/// b_k(Sx, Sy) = -lambda conj(b_k(x, y)) on all basis pairs, k = -lambda ell.
/// Throws ValidationError if S^2 != lambda id or E has the wrong k.
bool char_condition(const RMatrix& S, int lambda, int ell, const ExtendedSpace& E);

/// Real coordinates (a, alpha) of the element x e + y ebar of (E, I_1), as a matrix
/// acting on (x, y): a = (x + y)/2, alpha = G (y - x)/2.
RMatrix null_chart(const PseudoMetric& metric);

/// Signature of h = Im(b_1), which is twice the signature of g.
Signature lorentz_imaginary_signature(const ExtendedSpace& E);

struct ModelPoint {
  int lambda = 1;
  int ell = 1;
  std::size_t p = 0;
  std::size_t q = 0;
  PseudoMetric metric;                  ///< diag(I_p, -I_q)
  std::optional<RMatrix> null_matrix;   ///< S in null coordinates (k = +1 cases)
  GenStructure S;                       ///< S in standard coordinates
  std::string description;
};

/// Base points of the four fibres at the metric diag(I_p, -I_q):
///   (1,1):   R from a diagonal product structure r with sig(R) = sig (default m/2);
///   (1,-1):  the conjugation of L^m, x e + y ebar -> y e + x ebar;
///   (-1,1):  x e + y ebar -> r(y) e - r(x) ebar with r the block swap (needs p = q);
///   (-1,-1): the standard Kaehler Q on R^m moved to signature (p,q) by a C-isometry
///            of b_{-1} (needs m even).
/// Throws ValidationError for inadmissible signatures.
ModelPoint model_point(int lambda, int ell, std::size_t p, std::size_t q,
                       std::optional<std::size_t> sig = std::nullopt);

struct OrbitReport {
  std::size_t constraint_tangent_dim = 0;  ///< solutions of the linearized constraints at S
  std::size_t group_dim = 0;               ///< dim of the b_k-preserving algebra
  std::size_t isotropy_dim = 0;            ///< its centralizer of S
  std::size_t orbit_dim = 0;               ///< group_dim - isotropy_dim
  bool agree() const { return constraint_tangent_dim == orbit_dim; }
};

OrbitReport orbit_dimension_check(const ModelPoint& mp, const ExtendedSpace& E);

struct Admissibility {
  bool admissible = true;
  std::string reason;
};

/// Necessary condition from the anti-isometry argument: a (-1,1)-structure forces p = q.
Admissibility split_admissibility(int lambda, int ell, std::size_t p, std::size_t q);

}  // namespace gstruct
