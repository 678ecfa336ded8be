#include "ultra/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "ultra/error.hpp"
#include "ultra/series.hpp"

namespace ultra {

void check_jacobi_parameters(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0))
    fail(ErrorCode::BadParameter,
         "Jacobi parameters must exceed -1 (alpha=" + std::to_string(alpha) + ", beta=" + std::to_string(beta) + ")");
}

template <class T>
RecurrenceStep<T> jacobi_recurrence(unsigned k, const T& alpha, const T& beta) {
  if (k == 0) fail(ErrorCode::BadParameter, "recurrence step starts at k = 1");
  if (k == 1) return {(alpha + beta + T(2)) / T(2), (alpha - beta) / T(2), T(0)};
  const T kk(k);
  const T s = T(2) * kk + alpha + beta;
  const T d = T(2) * kk * (kk + alpha + beta);
  return {
      (s - T(1)) * s / d,
      (s - T(1)) * (alpha * alpha - beta * beta) / (d * (s - T(2))),
      T(2) * (kk + alpha - T(1)) * (kk + beta - T(1)) * s / (d * (s - T(2))),
  };
}

template <class T>
std::vector<BasicPoly<T>> jacobi_polys(unsigned n_max, const T& alpha, const T& beta) {
  check_jacobi_parameters(to_double(alpha), to_double(beta));
  if (n_max > kMaxOrthoDegree)
    fail(ErrorCode::BadParameter, "degree " + std::to_string(n_max) + " exceeds the configured maximum");
  std::vector<std::vector<T>> c;
  c.push_back({T(1)});
  for (unsigned k = 1; k <= n_max; ++k) {
    const auto st = jacobi_recurrence<T>(k, alpha, beta);
    std::vector<T> next(k + 1, T(0));
    const auto& p1 = c[k - 1];
    for (std::size_t j = 0; j < p1.size(); ++j) {
      next[j + 1] += st.a * p1[j];
      next[j] += st.b * p1[j];
    }
    if (k >= 2) {
      const auto& p2 = c[k - 2];
      for (std::size_t j = 0; j < p2.size(); ++j) next[j] -= st.c * p2[j];
    }
    c.push_back(std::move(next));
  }
  std::vector<BasicPoly<T>> out;
  out.reserve(c.size());
  for (auto& v : c) out.emplace_back(std::move(v));
  return out;
}

template <class T>
BasicPoly<T> jacobi_poly(unsigned n, const T& alpha, const T& beta) {
  return jacobi_polys<T>(n, alpha, beta).back();
}

template <class T>
T jacobi_value(unsigned n, const T& alpha, const T& beta, const T& x) {
  check_jacobi_parameters(to_double(alpha), to_double(beta));
  T prev(0), cur(1);
  for (unsigned k = 1; k <= n; ++k) {
    const auto st = jacobi_recurrence<T>(k, alpha, beta);
    T next = (st.a * x + st.b) * cur - st.c * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// ---------------------------------------------------------------------------

namespace {

void check_series_args(double x, unsigned N) {
  if (!(std::abs(x) <= 1.0)) fail(ErrorCode::BadParameter, "generating functions need |x| <= 1");
  if (N > 64) fail(ErrorCode::BadParameter, "series order is capped at 64");
}

// 1 - 2xt + t^2
series::Series base_quadratic(double x) { return {1.0, -2.0 * x, 1.0}; }

}  // namespace

std::vector<double> genfun_taylor(const GenFunSpec& spec, double x, unsigned N) {
  check_series_args(x, N);
  switch (spec.family) {
    case GenFun::UltraG:
      check_jacobi_parameters(spec.alpha, spec.alpha);
      return series::pow(base_quadratic(x), -spec.alpha - 0.5, N);
    case GenFun::G2:
      return g2_taylor(x, spec.alpha, N);
    case GenFun::JacobiF: {
      check_jacobi_parameters(spec.alpha, spec.beta);
      const auto rho = series::sqrt(base_quadratic(x), N);
      const auto one_plus = series::add(rho, {1.0, 1.0}, N);    // 1 + t + rho
      const auto one_minus = series::add(rho, {1.0, -1.0}, N);  // 1 - t + rho
      auto f = series::reciprocal(rho, N);
      f = series::mul(f, series::pow(one_plus, -spec.beta, N), N);
      f = series::mul(f, series::pow(one_minus, -spec.alpha, N), N);
      return series::scale(f, std::exp2(spec.alpha + spec.beta));
    }
  }
  fail(ErrorCode::BadParameter, "unknown generating function");
}

std::vector<double> g2_taylor(double x, double alpha, unsigned N) {
  check_series_args(x, N);
  check_jacobi_parameters(alpha, alpha);
  const auto p = series::pow(base_quadratic(x), -alpha - 1.5, N);
  return series::scale(series::mul({1.0, 0.0, -1.0}, p, N), 2.0 * alpha + 1.0);
}

double ultra_genfun_prefactor(unsigned k, double alpha) {
  return pochhammer(1.0 + 2.0 * alpha, k) / pochhammer(1.0 + alpha, k);
}

G2FormCheck g2_coefficient_check(double alpha, unsigned N, std::span<const double> xs, double rel_tol) {
  G2FormCheck out;
  for (double x : xs) {
    const auto c = g2_taylor(x, alpha, N);
    for (unsigned k = 0; k <= N; ++k) {
      const double base = ultra_genfun_prefactor(k, alpha) * jacobi_value(k, alpha, alpha, x);
      const double a = (2.0 * k + 2.0 * alpha + 1.0) * base;
      const double b = (2.0 * k + alpha + 1.0) * base;
      const double scale = std::max({std::abs(c[k]), std::abs(a), 1.0});
      out.err_2k_2a_1 = std::max(out.err_2k_2a_1, std::abs(c[k] - a) / scale);
      out.err_2k_a_1 = std::max(out.err_2k_a_1, std::abs(c[k] - b) / scale);
    }
  }
  const bool first = out.err_2k_2a_1 <= rel_tol;
  const bool second = out.err_2k_a_1 <= rel_tol;
  out.supported = first && second ? "both" : first ? "2k+2a+1" : second ? "2k+a+1" : "neither";
  return out;
}

// ---------------------------------------------------------------------------

double printed_ultra_norm(unsigned k, double alpha) {
  check_jacobi_parameters(alpha, alpha);
  const double log_h = (1.0 + alpha) * std::numbers::ln2 + 2.0 * log_gamma(1.0 + alpha + k).log_abs -
                       log_gamma(k + 1.0).log_abs - log_gamma(1.0 + 2.0 * alpha + 2.0 * k).log_abs;
  return std::exp(log_h) / (2.0 * k + 2.0 * alpha + 1.0);
}

OrthoConstant ortho_constant(unsigned n, double alpha, double beta) {
  check_jacobi_parameters(alpha, beta);
  const double ab = alpha + beta;
  double log_h = (1.0 + ab) * std::numbers::ln2 + log_gamma(1.0 + alpha + n).log_abs +
                 log_gamma(1.0 + beta + n).log_abs;
  if (n == 0) {
    // (1 + a + b) Gamma(1 + a + b) = Gamma(2 + a + b), finite at a + b = -1
    log_h -= log_gamma(2.0 + ab).log_abs;
  } else {
    log_h -= std::log(2.0 * n + 1.0 + ab) + log_gamma(n + 1.0).log_abs + log_gamma(1.0 + ab + n).log_abs;
  }
  return {n, alpha, beta, std::exp(log_h)};
}

QuadratureRule gauss_jacobi(unsigned npts, double alpha, double beta) {
  check_jacobi_parameters(alpha, beta);
  if (npts == 0) fail(ErrorCode::BadParameter, "quadrature needs at least one node");
  const double ab = alpha + beta;
  Eigen::VectorXd diag(npts);
  Eigen::VectorXd sub(npts > 1 ? npts - 1 : 0);
  for (unsigned k = 0; k < npts; ++k) {
    if (k == 0) {
      diag[k] = (beta - alpha) / (ab + 2.0);
    } else {
      const double s = 2.0 * k + ab;
      diag[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    if (k >= 1) {
      double b;
      if (k == 1) {
        b = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
      } else {
        const double s = 2.0 * k + ab;
        b = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
      }
      sub[k - 1] = std::sqrt(b);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) fail(ErrorCode::QuadratureFailure, "Jacobi matrix eigensolver did not converge");

  const double mu0 = std::exp((ab + 1.0) * std::numbers::ln2 + log_gamma(alpha + 1.0).log_abs +
                              log_gamma(beta + 1.0).log_abs - log_gamma(ab + 2.0).log_abs);
  QuadratureRule rule;
  rule.nodes.resize(npts);
  rule.weights.resize(npts);
  for (unsigned i = 0; i < npts; ++i) {
    rule.nodes[i] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

double quad_inner_product(unsigned n, unsigned m, double alpha, double beta) {
  check_jacobi_parameters(alpha, beta);
  if (n > 15 || m > 15) fail(ErrorCode::BadParameter, "inner products are supported for degrees <= 15");
  const auto rule = gauss_jacobi(n + m + 4, alpha, beta);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    acc += rule.weights[i] * jacobi_value(n, alpha, beta, x) * jacobi_value(m, alpha, beta, x);
  }
  return acc;
}

template RecurrenceStep<double> jacobi_recurrence(unsigned, const double&, const double&);
template RecurrenceStep<Extended> jacobi_recurrence(unsigned, const Extended&, const Extended&);
template std::vector<BasicPoly<double>> jacobi_polys(unsigned, const double&, const double&);
template std::vector<BasicPoly<Extended>> jacobi_polys(unsigned, const Extended&, const Extended&);
template BasicPoly<double> jacobi_poly(unsigned, const double&, const double&);
template BasicPoly<Extended> jacobi_poly(unsigned, const Extended&, const Extended&);
template double jacobi_value(unsigned, const double&, const double&, const double&);
template Extended jacobi_value(unsigned, const Extended&, const Extended&, const Extended&);

}  // namespace ultra
