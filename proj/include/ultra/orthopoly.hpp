#pragma once

#include <span>
#include <string>
#include <vector>

#include "ultra/polycore.hpp"

namespace ultra {

/// Largest degree the constructors accept.
inline constexpr unsigned kMaxOrthoDegree = 64;

/// P_k = (a x + b) P_{k-1} - c P_{k-2}, valid for k >= 1 with P_{-1} = 0.
template <class T>
struct RecurrenceStep {
  T a;
  T b;
  T c;
};

template <class T>
RecurrenceStep<T> jacobi_recurrence(unsigned k, const T& alpha, const T& beta);

/// Throws BadParameter unless alpha > -1 and beta > -1.
void check_jacobi_parameters(double alpha, double beta);

/// Monomial coefficients of P_n^{(alpha,beta)}.
template <class T>
BasicPoly<T> jacobi_poly(unsigned n, const T& alpha, const T& beta);

/// P_0 ... P_{n_max} in the monomial basis, built by one recurrence sweep.
template <class T>
std::vector<BasicPoly<T>> jacobi_polys(unsigned n_max, const T& alpha, const T& beta);

/// P_n^{(alpha,beta)}(x) by the scalar recurrence.
template <class T>
T jacobi_value(unsigned n, const T& alpha, const T& beta, const T& x);

// ---------------------------------------------------------------------------
// Generating functions
// ---------------------------------------------------------------------------

enum class GenFun {
  /// 2^{a+b} / (rho (1 + t + rho)^b (1 - t + rho)^a), rho = sqrt(1 - 2xt + t^2)
  JacobiF,
  /// (1 - 2xt + t^2)^{-a-1/2}
  UltraG,
  /// (2 t d/dt + 2a + 1) applied to UltraG
  G2,
};

struct GenFunSpec {
  GenFun family = GenFun::UltraG;
  double alpha = 0.0;
  double beta = 0.0;  // JacobiF only
};

/// Taylor coefficients in t at t = 0, orders 0..N, by truncated power-series
/// arithmetic. Requires |x| < 1 (x = +-1 is also accepted: the series stay
/// well defined there) and N <= 64.
std::vector<double> genfun_taylor(const GenFunSpec& spec, double x, unsigned N);

/// Taylor coefficients of (2a+1)(1 - t^2) / (1 - 2xt + t^2)^{a+3/2}.
std::vector<double> g2_taylor(double x, double alpha, unsigned N);

/// (1+2a)_k / (1+a)_k: the prefactor of P_k^{(a,a)} in the UltraG expansion.
double ultra_genfun_prefactor(unsigned k, double alpha);

/// Max relative error of the G2 coefficients against the two candidate
/// forms c_k (1+2a)_k/(1+a)_k P_k^{(a,a)}(x), c_k = 2k+2a+1 or 2k+a+1.
struct G2FormCheck {
  double err_2k_2a_1 = 0.0;
  double err_2k_a_1 = 0.0;
  /// "2k+2a+1", "2k+a+1", "both" (only when a = 0) or "neither".
  std::string supported;
};

G2FormCheck g2_coefficient_check(double alpha, unsigned N, std::span<const double> xs, double rel_tol = 1e-9);

// ---------------------------------------------------------------------------
// Orthogonality
// ---------------------------------------------------------------------------

struct OrthoConstant {
  unsigned n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double h = 0.0;
};

/// Squared weighted norm of P_n^{(alpha,beta)} on (-1,1) with weight
/// (1-x)^alpha (1+x)^beta, evaluated in the log domain.
OrthoConstant ortho_constant(unsigned n, double alpha, double beta);

/// The alternative printed norm for alpha = beta, reading its n as k:
/// 2^{1+a} Gamma(1+a+k)^2 / (k! (2k+2a+1) Gamma(1+2a+2k)). Kept only so the
/// quadrature check can show which constant is right.
double printed_ultra_norm(unsigned k, double alpha);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss rule for (1-x)^alpha (1+x)^beta on (-1,1) from the eigen-decomposition
/// of the Jacobi matrix of the monic recurrence. Exact for degree 2*npts - 1.
QuadratureRule gauss_jacobi(unsigned npts, double alpha, double beta);

/// int_{-1}^{1} P_n P_m (1-x)^alpha (1+x)^beta dx with an (n+m+4)-point rule.
double quad_inner_product(unsigned n, unsigned m, double alpha, double beta);

}  // namespace ultra
