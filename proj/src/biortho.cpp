#include "ultra/biortho.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "ultra/error.hpp"
#include "ultra/transforms.hpp"

namespace ultra {
namespace {

constexpr double kMomentTolerance = 1e-10;

void check_interval(const Interval& iv) {
  if (!(iv.lo < iv.hi)) fail(ErrorCode::BadInterval, "integration interval needs lo < hi");
  if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) fail(ErrorCode::BadInterval, "integration interval must be finite");
}

std::vector<double> checked_nodes(std::span<const double> nodes) {
  std::vector<double> t(nodes.begin(), nodes.end());
  std::sort(t.begin(), t.end());
  if (std::adjacent_find(t.begin(), t.end()) != t.end()) fail(ErrorCode::BadNodes, "nodes must be pairwise distinct");
  return t;
}

Eigen::MatrixXd moment_block(const KernelSpec& kernel, std::span<const double> t, unsigned cols, Interval iv) {
  Eigen::MatrixXd a(static_cast<Eigen::Index>(t.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t l = 0; l < t.size(); ++l)
    for (unsigned k = 0; k < cols; ++k)
      a(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(k)) = moment(kernel, k, t[l], iv);
  return a;
}

}  // namespace

double weighted_integral(const KernelSpec& kernel, double t, Interval interval,
                         const std::function<double(double)>& g) {
  check_interval(interval);
  const auto f = [&](double x) { return g(x) * kernel.eval(x, t); };

  double err = 0.0;
  double l1 = 0.0;
  const double gk = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, interval.lo, interval.hi, 15,
                                                                                   1e-12, &err, &l1);
  if (std::isfinite(gk) && err <= kMomentTolerance * (1.0 + std::abs(gk))) return gk;

  // Endpoint singularities (weights with negative exponents) defeat
  // bisection; the double-exponential rule handles them.
  boost::math::quadrature::tanh_sinh<double> ts(15);
  double ts_err = 0.0;
  const double v = ts.integrate(f, interval.lo, interval.hi, 1e-14, &ts_err, &l1);
  if (std::isfinite(v) && ts_err <= kMomentTolerance * (1.0 + std::abs(v))) return v;

  std::ostringstream os;
  os << "integral at t=" << t << " did not reach the error target (gk err " << err << ", tanh-sinh err " << ts_err
     << ")";
  fail(ErrorCode::QuadratureFailure, os.str());
}

double moment(const KernelSpec& kernel, unsigned k, double t, Interval interval) {
  if (k > 30) fail(ErrorCode::BadParameter, "moments are supported up to k = 30");
  return weighted_integral(kernel, t, interval, [k](double x) { return std::pow(x, static_cast<int>(k)); });
}

double regularity_det(const KernelSpec& kernel, std::span<const double> nodes, Interval interval) {
  if (nodes.empty() || nodes.size() > 8) fail(ErrorCode::BadParameter, "regularity determinant needs 1..8 nodes");
  const auto t = checked_nodes(nodes);
  const auto a = moment_block(kernel, t, static_cast<unsigned>(t.size()), interval);
  return a.partialPivLu().determinant();
}

BiorthogonalSystem biorthogonal_poly(const KernelSpec& kernel, std::span<const double> nodes, Interval interval,
                                     const PrecisionPolicy& policy) {
  if (nodes.size() > 8) fail(ErrorCode::BadParameter, "biorthogonal systems are supported up to m = 8");
  check_interval(interval);
  const auto t = checked_nodes(nodes);
  const auto m = static_cast<Eigen::Index>(t.size());

  BiorthogonalSystem sys{t, kernel, interval, {}, {}, Poly::constant(1.0)};
  if (m == 0) return sys;

  const Eigen::MatrixXd full = moment_block(kernel, t, static_cast<unsigned>(m + 1), interval);
  const Eigen::MatrixXd a = full.leftCols(m);
  const Eigen::VectorXd rhs = -full.col(m);

  double scale = 1.0;
  for (Eigen::Index l = 0; l < m; ++l) scale *= a.row(l).cwiseAbs().maxCoeff();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  const double det = lu.determinant();
  if (!(std::abs(det) > policy.tau_det * scale)) {
    std::ostringstream os;
    os << "moment determinant " << det << " is below tau_det * scale = " << policy.tau_det * scale;
    fail(ErrorCode::SingularSystem, os.str());
  }
  Eigen::VectorXd c = lu.solve(rhs);
  // one step of iterative refinement
  c += lu.solve(rhs - a * c);

  std::vector<double> coeffs(static_cast<std::size_t>(m + 1));
  for (Eigen::Index k = 0; k < m; ++k) coeffs[static_cast<std::size_t>(k)] = c[k];
  coeffs.back() = 1.0;
  sys.poly = Poly(std::move(coeffs));

  sys.moment_matrix.assign(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(m)));
  sys.top_moments.resize(static_cast<std::size_t>(m));
  for (Eigen::Index l = 0; l < m; ++l) {
    for (Eigen::Index k = 0; k < m; ++k)
      sys.moment_matrix[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = a(l, k);
    sys.top_moments[static_cast<std::size_t>(l)] = full(l, m);
  }
  return sys;
}

std::vector<double> orthogonality_residuals(const BiorthogonalSystem& system) {
  std::vector<double> r;
  r.reserve(system.nodes.size());
  for (double t : system.nodes)
    r.push_back(weighted_integral(system.kernel, t, system.interval,
                                  [&](double x) { return poly_eval(system.poly, x); }));
  return r;
}

RootReport zeros_in_interval_check(const BiorthogonalSystem& system, const PrecisionPolicy& policy) {
  if (system.poly.degree() == 0) return classify_roots({}, system.interval, policy.tau_root);
  const auto roots = poly_roots(system.poly, policy);
  return classify_roots(roots, system.interval, policy.tau_root);
}

KernelSpec ultraspherical_biortho_kernel(double alpha) {
  if (alpha == 0.0) return KernelSpec::g2(0.0);
  std::ostringstream name;
  name << "(1-x^2)^" << alpha;
  SignedFactor weight{[alpha](double x) { return std::pow((1.0 - x) * (1.0 + x), alpha); }, 1, name.str()};
  return KernelSpec::factor_wrapped(KernelSpec::g2(alpha), weight, SignedFactor::constant(1.0));
}

double transform_equivalence_check(const Poly& f, double alpha, const PrecisionPolicy& policy) {
  if (f.basis().is_orthogonal()) fail(ErrorCode::BadParameter, "equivalence check takes a monomial-basis input");
  const Poly g = f.trimmed(policy.tau_trim);
  const int n = g.degree();
  if (n == 0) return 0.0;
  if (n > 8) fail(ErrorCode::BadParameter, "equivalence check supports degree <= 8");

  const auto roots = poly_roots(g, policy);
  const auto rep = classify_roots(roots, Interval::unit(), policy.tau_root);
  if (rep.classification != RootClass::AllStrictlyInside || !(rep.min_pairwise_separation > policy.tau_root))
    fail(ErrorCode::BadNodes, "input needs distinct real roots inside (-1, 1)");
  std::vector<double> nodes;
  for (const auto& r : roots) nodes.push_back(r.real());

  const auto sys = biorthogonal_poly(ultraspherical_biortho_kernel(alpha), nodes, Interval::unit(), policy);
  Poly u = ultra_transform(g, alpha);
  u *= 1.0 / u.leading();

  double diff = 0.0;
  double size = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    diff = std::max(diff, std::abs(sys.poly[k] - u[k]));
    size = std::max(size, std::abs(u[k]));
  }
  return diff / size;
}

}  // namespace ultra
