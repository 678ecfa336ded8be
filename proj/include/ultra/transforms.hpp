#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ultra/polycore.hpp"

namespace ultra {

// The linear maps below all send x^k to a positive multiple of the degree-k
// member of a Jacobi family. Each takes a monomial-basis input and returns a
// monomial-basis polynomial of the same degree.

/// x^k -> k!/Gamma(k+1+alpha) P_k^{(alpha,alpha)}, alpha > -1.
template <class T>
BasicPoly<T> ultra_transform(const BasicPoly<T>& f, double alpha);

/// x^k -> P_k (Legendre). Same code path as ultra_transform(f, 0).
template <class T>
BasicPoly<T> legendre_transform(const BasicPoly<T>& f);

/// x^k -> P_k^{(alpha,beta)}
template <class T>
BasicPoly<T> jacobi_transform(const BasicPoly<T>& f, double alpha, double beta);

/// x^k -> P_k^{(alpha,beta)} / k!
template <class T>
BasicPoly<T> jacobi_factorial_transform(const BasicPoly<T>& f, double alpha, double beta);

// ---------------------------------------------------------------------------
// Transform specifications
// ---------------------------------------------------------------------------

struct UltraTheorem12 {
  double alpha = 0.0;
};
struct LegendreConj11 {};
struct JacobiConj32 {
  double alpha = 0.0;
  double beta = 0.0;
};
struct JacobiFactorialQ31 {
  double alpha = 0.0;
  double beta = 0.0;
};
/// x^k -> Q_k / (delta_k h_k) for an orthogonal family Q with per-degree
/// generating-function weights delta_k and squared norms h_k.
struct GenericIserlesSaff {
  std::vector<double> delta;
  Basis family = Basis::legendre();
  std::vector<double> h;
};

using TransformKind = std::variant<UltraTheorem12, LegendreConj11, JacobiConj32, JacobiFactorialQ31, GenericIserlesSaff>;

struct TransformSpec {
  TransformKind kind;
  unsigned max_degree = 30;

  /// Throws BadParameter / SpecIncomplete if the invariants fail.
  void validate() const;
};

std::string describe(const TransformKind& kind);

/// Family basis the transform maps into.
Basis target_basis(const TransformKind& kind);

/// Scale s_k with x^k -> s_k * (degree-k member of target_basis), k = 0..n.
std::vector<double> degree_factors(const TransformKind& kind, unsigned n);

/// s_k(a) / s_k(b) for two transforms with the same target basis.
std::vector<double> factor_ratios(const TransformKind& a, const TransformKind& b, unsigned n);

/// True when the ratio sequence is a positive constant within rel_tol, i.e.
/// the two transforms agree up to one global positive factor.
bool proportional(std::span<const double> ratios, double rel_tol);

/// Sum_k q_k / (delta_k h_k) Q_k(x), returned in the monomial basis.
/// Throws SpecIncomplete if delta or h is missing a degree.
Poly iserles_saff_transform(std::span<const double> q, const GenericIserlesSaff& spec);

/// delta_k = 2k + 2a + 1 with h_k the weighted squared norms of P_k^{(a,a)}.
GenericIserlesSaff ultraspherical_iserles_saff(double alpha, unsigned n);

/// As above but delta_k also carries the (1+2a)_k/(1+a)_k prefactor with
/// which P_k^{(a,a)} enters the (2t d/dt + 2a + 1)-differentiated
/// generating function. These are the actual expansion coefficients.
GenericIserlesSaff ultraspherical_iserles_saff_genfun(double alpha, unsigned n);

template <class T>
BasicPoly<T> apply_transform(const TransformSpec& spec, const BasicPoly<T>& f);

}  // namespace ultra
