// Root finding: companion-matrix eigenvalues for starting values, then
// Aberth-Ehrlich simultaneous iteration in the working precision.

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include "ultra/error.hpp"
#include "ultra/polycore.hpp"

namespace ultra {
namespace {

// std::complex is unspecified for non-builtin scalars, so the iteration
// carries its own minimal complex type.
template <class T>
struct Cx {
  T re;
  T im;

  Cx() : re(0), im(0) {}
  Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator*(const T& s, const Cx& a) { return {s * a.re, s * a.im}; }
  friend Cx operator/(const Cx& a, const Cx& b) {
    const T d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  T norm() const { return re * re + im * im; }
  T abs() const {
    using std::sqrt;
    return sqrt(norm());
  }
};

template <class T>
T unit_roundoff();
template <>
double unit_roundoff<double>() {
  return std::numeric_limits<double>::epsilon() / 2;
}
template <>
Extended unit_roundoff<Extended>() {
  const Extended probe(0);
  return ldexp(Extended(1), -static_cast<int>(mpfr_get_prec(probe.backend().data())));
}

/// Monic-normalised, constant-term-nonzero coefficients (low to high).
template <class T>
std::vector<Cx<T>> aberth(const std::vector<T>& c, std::vector<Cx<T>> z, int max_iter) {
  using std::abs;
  const std::size_t n = c.size() - 1;
  std::vector<T> abs_c(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) abs_c[k] = abs(c[k]);
  const T u = unit_roundoff<T>();
  const T slack = T(4 * static_cast<double>(n + 1));
  std::vector<char> done(n, 0);

  for (int iter = 0; iter < max_iter; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      // Horner for p, p' and the rounding bound sum |a_k| |z|^k.
      Cx<T> p(c[n], T(0)), dp;
      T bound = abs_c[n];
      const T r = z[i].abs();
      for (std::size_t k = n; k-- > 0;) {
        dp = dp * z[i] + p;
        p = p * z[i] + Cx<T>(c[k], T(0));
        bound = bound * r + abs_c[k];
      }
      if (p.abs() <= slack * u * bound) {
        done[i] = 1;
        continue;
      }
      all_done = false;
      const Cx<T> newton = p / dp;
      Cx<T> sum;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        sum = sum + Cx<T>(T(1), T(0)) / (z[i] - z[j]);
      }
      const Cx<T> w = newton / (Cx<T>(T(1), T(0)) - newton * sum);
      z[i] = z[i] - w;
      if (w.abs() <= u * z[i].abs()) done[i] = 1;
    }
    if (all_done) break;
  }
  return z;
}

/// Nudges coincident starting values apart; Aberth's repulsion term needs
/// pairwise distinct iterates.
template <class T>
void separate(std::vector<Cx<T>>& z, double scale) {
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((z[i] - z[j]).abs() <= T(1e-12 * scale)) {
        const double angle = 0.7 + 1.3 * static_cast<double>(i);
        z[i] = z[i] + Cx<T>(T(1e-8 * scale * std::cos(angle)), T(1e-8 * scale * std::sin(angle)));
      }
}

std::vector<Complex> companion_estimates(const std::vector<double>& c) {
  const std::size_t n = c.size() - 1;
  if (n == 1) return {Complex(-c[0] / c[1], 0.0)};
  Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t k = 0; k < c.size(); ++k) v[static_cast<Eigen::Index>(k)] = c[k];
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(v);
  const auto& r = solver.roots();
  std::vector<Complex> out;
  out.reserve(n);
  for (Eigen::Index k = 0; k < r.size(); ++k) out.push_back(r[k]);
  return out;
}

struct Prepared {
  std::size_t zero_roots = 0;
  std::size_t degree = 0;
};

/// Trims, strips exact zero roots, and normalises to monic form in place.
template <class T>
Prepared prepare(std::vector<T>& c, double tau_trim) {
  BasicPoly<T> p(c);
  p = p.trimmed(tau_trim);
  c = p.coeffs();
  if (c.size() < 2) fail(ErrorCode::DegreeZero, "root finding needs degree >= 1");
  Prepared info;
  while (c.size() > 1 && c.front() == T(0)) {
    c.erase(c.begin());
    ++info.zero_roots;
  }
  const T lead = c.back();
  for (T& v : c) v /= lead;
  info.degree = c.size() - 1;
  return info;
}

std::vector<Complex> roots_double(std::vector<double> c, const PrecisionPolicy& policy) {
  const Prepared info = prepare(c, policy.tau_trim);
  std::vector<Complex> out(info.zero_roots, Complex(0.0, 0.0));
  if (info.degree == 0) return out;

  const auto est = companion_estimates(c);
  std::vector<Cx<double>> z;
  for (const auto& e : est) z.emplace_back(e.real(), e.imag());
  double scale = 1.0;
  for (const auto& e : est) scale = std::max(scale, std::abs(e));
  separate(z, scale);
  z = aberth(c, std::move(z), 100);
  for (const auto& w : z) out.emplace_back(w.re, w.im);
  return out;
}

std::vector<Complex> roots_extended(std::vector<Extended> c, const PrecisionPolicy& policy) {
  const Prepared info = prepare(c, policy.tau_trim);
  std::vector<Complex> out(info.zero_roots, Complex(0.0, 0.0));
  if (info.degree == 0) return out;

  std::vector<double> cd;
  cd.reserve(c.size());
  for (const auto& v : c) cd.push_back(to_double(v));
  PrecisionPolicy dp = policy;
  dp.mode = PrecisionPolicy::Mode::Double;
  const auto start = roots_double(cd, dp);

  std::vector<Cx<Extended>> z;
  double scale = 1.0;
  for (const auto& e : start) {
    z.emplace_back(Extended(e.real()), Extended(e.imag()));
    scale = std::max(scale, std::abs(e));
  }
  separate(z, scale);
  // Clustered roots converge only linearly, hence the generous cap.
  z = aberth(c, std::move(z), 40 * policy.bits);
  for (const auto& w : z) out.emplace_back(to_double(w.re), to_double(w.im));
  return out;
}

}  // namespace

std::vector<Complex> poly_roots(const Poly& p, const PrecisionPolicy& policy) {
  policy.validate();
  const Poly mono = basis_to_monomial(p);
  if (!policy.is_extended()) return roots_double(mono.coeffs(), policy);
  ScopedPrecision guard(policy.bits);
  return roots_extended(poly_cast<Extended>(mono).coeffs(), policy);
}

std::vector<Complex> poly_roots(const ExtendedPoly& p, const PrecisionPolicy& policy) {
  policy.validate();
  if (!policy.is_extended()) return poly_roots(poly_cast<double>(p), policy);
  ScopedPrecision guard(policy.bits);
  return roots_extended(basis_to_monomial(p).coeffs(), policy);
}

double root_backward_error(const Poly& p, Complex z) {
  const Poly mono = basis_to_monomial(p);
  const auto& c = mono.coeffs();
  Complex acc(0.0, 0.0);
  double bound = 0.0;
  const double r = std::abs(z);
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * z + c[k];
    bound = bound * r + std::abs(c[k]);
  }
  return bound == 0.0 ? 0.0 : std::abs(acc) / bound;
}

}  // namespace ultra
