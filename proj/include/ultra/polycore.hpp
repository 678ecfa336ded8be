#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "ultra/precision.hpp"

namespace ultra {

// ---------------------------------------------------------------------------
// Basis tags
// ---------------------------------------------------------------------------

enum class BasisKind { Monomial, Ultraspherical, Jacobi };

/// Which family the coefficient at index k multiplies. Ultraspherical(a) is
/// the symmetric Jacobi family P_k^{(a,a)}; Legendre is Ultraspherical(0).
struct Basis {
  BasisKind kind = BasisKind::Monomial;
  double alpha = 0.0;
  double beta = 0.0;

  static Basis monomial() { return {}; }
  static Basis legendre() { return ultraspherical(0.0); }
  static Basis ultraspherical(double alpha);
  static Basis jacobi(double alpha, double beta);

  bool is_orthogonal() const { return kind != BasisKind::Monomial; }
  /// Jacobi parameters of the family (beta == alpha for ultraspherical).
  double jacobi_alpha() const { return alpha; }
  double jacobi_beta() const { return kind == BasisKind::Ultraspherical ? alpha : beta; }
  std::string to_string() const;

  friend bool operator==(const Basis&, const Basis&) = default;
};

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

template <class T>
class BasicPoly {
 public:
  BasicPoly() : coeffs_{T(0)} {}
  explicit BasicPoly(std::vector<T> coeffs, Basis basis = Basis::monomial());

  static BasicPoly constant(T c) { return BasicPoly(std::vector<T>{c}); }
  /// Monic product of (x - r) over the given real roots.
  static BasicPoly from_roots(std::span<const T> roots);
  static BasicPoly from_roots(std::initializer_list<T> roots) {
    std::vector<T> r(roots);
    return from_roots(std::span<const T>(r));
  }

  const Basis& basis() const { return basis_; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  const T& operator[](std::size_t k) const { return coeffs_[k]; }

  /// Highest index with a nonzero coefficient (0 for the zero polynomial).
  int degree() const;
  /// Drops trailing coefficients with |c| <= tau * max|c|.
  BasicPoly trimmed(double tau) const;
  T leading() const { return coeffs_[static_cast<std::size_t>(degree())]; }

  BasicPoly& operator+=(const BasicPoly& rhs);
  BasicPoly& operator-=(const BasicPoly& rhs);
  BasicPoly& operator*=(const T& s);

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator*(BasicPoly a, const T& s) { return a *= s; }
  friend BasicPoly operator*(const T& s, BasicPoly a) { return a *= s; }

  /// Monomial-basis product.
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) { return multiply(a, b); }

 private:
  static BasicPoly multiply(const BasicPoly& a, const BasicPoly& b);

  Basis basis_;
  std::vector<T> coeffs_;
};

using Poly = BasicPoly<double>;
using ExtendedPoly = BasicPoly<Extended>;

template <class To, class From>
BasicPoly<To> poly_cast(const BasicPoly<From>& p) {
  std::vector<To> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    if constexpr (std::is_same_v<To, double>)
      c.push_back(to_double(v));
    else
      c.push_back(To(v));
  }
  return BasicPoly<To>(std::move(c), p.basis());
}

// ---------------------------------------------------------------------------
// Scalar special functions
// ---------------------------------------------------------------------------

/// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
template <class T>
T pochhammer(const T& x, unsigned n) {
  T r(1);
  for (unsigned k = 0; k < n; ++k) r *= x + T(k);
  return r;
}

struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;
  double value() const;
};

/// log|Gamma(x)| with the sign of Gamma(x). Throws BadParameter at poles.
SignedLog log_gamma(double x);

// ---------------------------------------------------------------------------
// Evaluation and conversion
// ---------------------------------------------------------------------------

/// Horner for monomial coefficients, Clenshaw on the Jacobi three-term
/// recurrence for orthogonal-family coefficients.
template <class T>
T poly_eval(const BasicPoly<T>& p, const T& x);

/// Same polynomial function expressed in the monomial basis.
template <class T>
BasicPoly<T> basis_to_monomial(const BasicPoly<T>& p);

// ---------------------------------------------------------------------------
// Roots
// ---------------------------------------------------------------------------

using Complex = std::complex<double>;

/// All deg(p) complex roots with multiplicity. The polynomial is converted
/// to the monomial basis and trimmed with policy.tau_trim first. Extended
/// policies refine the double-precision estimates at policy.bits.
std::vector<Complex> poly_roots(const Poly& p, const PrecisionPolicy& policy = {});
std::vector<Complex> poly_roots(const ExtendedPoly& p, const PrecisionPolicy& policy);

/// Componentwise backward error |p(z)| / sum |a_k| |z|^k for a monomial p.
double root_backward_error(const Poly& p, Complex z);

struct Interval {
  double lo = -1.0;
  double hi = 1.0;

  static Interval unit() { return {-1.0, 1.0}; }
  static Interval real_line() {
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  }
};

enum class RootClass { AllStrictlyInside, SomeOnBoundary, SomeOutside, SomeNonReal };

std::string to_string(RootClass c);

struct RootReport {
  std::vector<Complex> roots;
  Interval interval;
  double tol = 0.0;
  RootClass classification = RootClass::AllStrictlyInside;

  int inside = 0;
  int on_boundary = 0;
  int outside = 0;
  int non_real = 0;
  /// Smallest signed distance Re(r) - lo or hi - Re(r) over all roots
  /// (negative when a root lies outside). +inf when there are no roots.
  double min_boundary_distance = std::numeric_limits<double>::infinity();
  double max_abs_imag = 0.0;
  /// Smallest |r_i - r_j| over distinct indices (+inf for fewer than two).
  double min_pairwise_separation = std::numeric_limits<double>::infinity();

  /// True when every root is real (within tol) and in the closed interval.
  bool in_closed_interval() const {
    return classification == RootClass::AllStrictlyInside ||
           classification == RootClass::SomeOnBoundary;
  }
};

/// Precedence: SomeNonReal, then SomeOutside, then SomeOnBoundary.
RootReport classify_roots(std::span<const Complex> roots, Interval interval, double tol);

}  // namespace ultra
