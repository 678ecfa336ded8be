#pragma once

#include <span>
#include <vector>

#include "ultra/polycore.hpp"
#include "ultra/signreg.hpp"

namespace ultra {

/// Biorthogonal polynomial p_m for the weight omega(x, t) dx on (a, b) and
/// nodes t_1 < ... < t_m: monic of degree m with
/// int_a^b p_m(x) omega(x, t_l) dx = 0 for every node.
struct BiorthogonalSystem {
  std::vector<double> nodes;
  KernelSpec kernel;
  Interval interval;
  /// Row l, column k: I_k(t_l), k = 0..m-1.
  std::vector<std::vector<double>> moment_matrix;
  /// I_m(t_l), the right-hand side of the monic system.
  std::vector<double> top_moments;
  Poly poly;
};

/// I_k(t) = int_a^b x^k omega(x, t) dx by adaptive Gauss-Kronrod, falling
/// back to tanh-sinh for endpoint singularities. Requires k <= 30; throws
/// QuadratureFailure unless the error estimate is <= 1e-10 (1 + |I|).
double moment(const KernelSpec& kernel, unsigned k, double t, Interval interval);

/// int_a^b g(x) omega(x, t) dx with the same error contract as moment().
double weighted_integral(const KernelSpec& kernel, double t, Interval interval, const std::function<double(double)>& g);

/// D_m = det [I_k(t_l)], k = 0..m-1. Nodes must be pairwise distinct (BadNodes).
double regularity_det(const KernelSpec& kernel, std::span<const double> nodes, Interval interval);

/// Solves for the lower coefficients of monic p_m. Throws SingularSystem
/// when |D_m| <= policy.tau_det times the row-norm scale.
BiorthogonalSystem biorthogonal_poly(const KernelSpec& kernel, std::span<const double> nodes, Interval interval,
                                     const PrecisionPolicy& policy = {});

/// int p_m(x) omega(x, t_l) dx for each node, by direct quadrature of p_m.
std::vector<double> orthogonality_residuals(const BiorthogonalSystem& system);

/// Roots of p_m classified against the system's interval at policy.tau_root.
RootReport zeros_in_interval_check(const BiorthogonalSystem& system, const PrecisionPolicy& policy = {});

/// omega(x, t) = (1 - x^2)^alpha G2(x, t): the generating kernel of the
/// ultraspherical transform against Lebesgue measure on (-1, 1).
KernelSpec ultraspherical_biortho_kernel(double alpha);

/// Builds p_n for ultraspherical_biortho_kernel(alpha) with the roots of f as
/// nodes and compares it, monic, with ultra_transform(f, alpha) made monic.
/// Returns max_k |p_k - u_k| / max_k |u_k|. f needs n <= 8 distinct real
/// roots inside (-1, 1) (BadNodes otherwise).
double transform_equivalence_check(const Poly& f, double alpha, const PrecisionPolicy& policy = {});

}  // namespace ultra
