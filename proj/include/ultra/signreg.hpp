#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ultra/polycore.hpp"
#include "ultra/precision.hpp"

namespace ultra {

struct Rectangle {
  Interval x;
  Interval y;

  static Rectangle square(double lo, double hi) { return {{lo, hi}, {lo, hi}}; }
  bool contains(double xv, double yv) const {
    return x.lo < xv && xv < x.hi && y.lo < yv && yv < y.hi;
  }
  bool bounded() const;
};

/// A real function with a declared constant sign on the kernel's domain.
struct SignedFactor {
  std::function<double(double)> fn;
  int sign = 1;
  std::string name;

  static SignedFactor constant(double c);
};

/// Bivariate kernel K(x, y) on an open rectangle.
class KernelSpec {
 public:
  enum class Family { Unit, ExpXY, PowerSum, UltraKernel, G2Kernel, JacobiGenFun, FactorWrapped, Composed };

  /// K == 1; the trivial weight of biorthogonality examples.
  static KernelSpec unit(Rectangle domain);
  /// e^{xy}
  static KernelSpec exp_xy(Rectangle domain);
  /// (x + y)^{-beta}, beta > 0, domain inside (0, inf)^2
  static KernelSpec power_sum(double beta, Rectangle domain);
  /// (1 - 2xy + y^2)^{-beta}, domain inside (-1, 1)^2; any real beta
  static KernelSpec ultra(double beta, Rectangle domain = Rectangle::square(-1.0, 1.0));
  /// (2a+1)(1 - y^2) / (1 - 2xy + y^2)^{a+3/2}, a > -1
  static KernelSpec g2(double alpha, Rectangle domain = Rectangle::square(-1.0, 1.0));
  /// 2^{a+b} / (rho (1 + y + rho)^b (1 - y + rho)^a), rho = sqrt(1 - 2xy + y^2)
  static KernelSpec jacobi_genfun(double alpha, double beta, Rectangle domain = Rectangle::square(-1.0, 1.0));
  /// phi(x) psi(y) K(x, y)
  static KernelSpec factor_wrapped(KernelSpec base, SignedFactor phi, SignedFactor psi);
  /// M(x, y) = sum_{z in grid} K(x, z) L(z, y): a discrete positive measure.
  static KernelSpec composed(KernelSpec k, KernelSpec l, std::vector<double> grid);

  Family family() const { return family_; }
  const Rectangle& domain() const { return domain_; }
  double alpha() const { return a_; }
  double beta() const { return b_; }
  std::string describe() const;

  /// Throws OutOfDomain if (x, y) is not in the open rectangle.
  template <class T>
  T eval(const T& x, const T& y) const;

 private:
  KernelSpec(Family f, Rectangle d) : family_(f), domain_(d) {}

  Family family_;
  Rectangle domain_;
  double a_ = 0.0;
  double b_ = 0.0;
  std::shared_ptr<const KernelSpec> first_;
  std::shared_ptr<const KernelSpec> second_;
  SignedFactor phi_;
  SignedFactor psi_;
  std::vector<double> grid_;
};

double kernel_eval(const KernelSpec& spec, double x, double y);

struct MinorValue {
  double det = 0.0;
  /// Product of the row sup-norms of the kernel matrix.
  double scale = 0.0;
  double ratio() const { return scale > 0.0 ? std::abs(det) / scale : 0.0; }
};

/// det [K(x_i, y_j)] by partially pivoted elimination in the policy's
/// precision. Tuples must be strictly increasing, in the domain, 1 <= m <= 8.
MinorValue ssr_minor_value(const KernelSpec& spec, std::span<const double> xs, std::span<const double> ys,
                           const PrecisionPolicy& policy = {});

double ssr_minor(const KernelSpec& spec, std::span<const double> xs, std::span<const double> ys,
                 const PrecisionPolicy& policy = {});

enum class MinorSign { Positive, Negative, Indeterminate };
enum class SsrVerdict { ConsistentSSR, ConsistentSTP, ViolationFound, Inconclusive };

std::string to_string(MinorSign s);
std::string to_string(SsrVerdict v);

struct SsrLevel {
  int m = 0;
  int trials = 0;
  int positives = 0;
  int negatives = 0;
  int indeterminates = 0;
  /// Determinate minors whose sign disagrees with the majority.
  int violations = 0;
  MinorSign inferred_sign = MinorSign::Indeterminate;
  double min_abs_det = 0.0;
  /// Smallest |det| / scale among determinate minors.
  double min_determinate_ratio = 0.0;
  /// Largest |det| / scale among indeterminate minors (0 if none).
  double max_indeterminate_ratio = 0.0;
};

struct SsrReport {
  std::string kernel;
  int m_max = 0;
  std::uint64_t seed = 0;
  std::vector<SsrLevel> levels;
  SsrVerdict verdict = SsrVerdict::Inconclusive;

  int total_violations() const;
  /// "+-+..." with '?' for indeterminate levels.
  std::string sign_pattern() const;
};

/// Minimum gap between sampled tuple entries.
inline constexpr double kMinTupleSeparation = 1e-3;

/// Samples strictly increasing tuples (sorted i.i.d. uniform draws, gaps at
/// least kMinTupleSeparation) and classifies each minor as +, - or
/// indeterminate (|det| <= tau_det * scale). A ConsistentSTP/SSR verdict
/// means no sampled minor contradicted the property, not that it holds.
SsrReport ssr_scan(const KernelSpec& spec, int m_max, int trials_per_m, std::uint64_t seed,
                   const PrecisionPolicy& policy = {});

struct FactorCheck {
  SsrReport base;
  SsrReport wrapped;
  /// Per level: wrapped sign == base sign * (sign phi)^m (sign psi)^m.
  bool consistent = false;
};

FactorCheck factor_invariance_check(const KernelSpec& base, const SignedFactor& phi, const SignedFactor& psi,
                                    int m_max, int trials, std::uint64_t seed, const PrecisionPolicy& policy = {});

/// Scans the discrete composition M of K and L over grid_z.
SsrReport composition_check(const KernelSpec& k, const KernelSpec& l, std::span<const double> grid_z, int m_max,
                            int trials, std::uint64_t seed, const PrecisionPolicy& policy = {});

}  // namespace ultra
