#include "ultra/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ultra/error.hpp"
#include "ultra/orthopoly.hpp"

namespace ultra {

Basis Basis::ultraspherical(double alpha) {
  check_jacobi_parameters(alpha, alpha);
  return {BasisKind::Ultraspherical, alpha, alpha};
}

Basis Basis::jacobi(double alpha, double beta) {
  check_jacobi_parameters(alpha, beta);
  return {BasisKind::Jacobi, alpha, beta};
}

std::string Basis::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case BasisKind::Monomial: os << "monomial"; break;
    case BasisKind::Ultraspherical: os << "ultraspherical(" << alpha << ")"; break;
    case BasisKind::Jacobi: os << "jacobi(" << alpha << "," << beta << ")"; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

template <class T>
BasicPoly<T>::BasicPoly(std::vector<T> coeffs, Basis basis)
    : basis_(basis), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(T(0));
  if (basis_.is_orthogonal()) check_jacobi_parameters(basis_.jacobi_alpha(), basis_.jacobi_beta());
}

template <class T>
BasicPoly<T> BasicPoly<T>::from_roots(std::span<const T> roots) {
  std::vector<T> c{T(1)};
  for (const T& r : roots) {
    c.push_back(T(0));
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return BasicPoly(std::move(c));
}

template <class T>
int BasicPoly<T>::degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;)
    if (coeffs_[k] != T(0)) return static_cast<int>(k);
  return 0;
}

template <class T>
BasicPoly<T> BasicPoly<T>::trimmed(double tau) const {
  using std::abs;
  T scale(0);
  for (const T& c : coeffs_) scale = std::max<T>(scale, abs(c));
  std::vector<T> c = coeffs_;
  while (c.size() > 1 && abs(c.back()) <= T(tau) * scale) c.pop_back();
  return BasicPoly(std::move(c), basis_);
}

template <class T>
BasicPoly<T>& BasicPoly<T>::operator+=(const BasicPoly& rhs) {
  if (!(basis_ == rhs.basis_)) fail(ErrorCode::BadParameter, "adding polynomials in different bases");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

template <class T>
BasicPoly<T>& BasicPoly<T>::operator-=(const BasicPoly& rhs) {
  if (!(basis_ == rhs.basis_)) fail(ErrorCode::BadParameter, "subtracting polynomials in different bases");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

template <class T>
BasicPoly<T>& BasicPoly<T>::operator*=(const T& s) {
  for (T& c : coeffs_) c *= s;
  return *this;
}

template <class T>
BasicPoly<T> BasicPoly<T>::multiply(const BasicPoly& a, const BasicPoly& b) {
  if (a.basis_.is_orthogonal() || b.basis_.is_orthogonal())
    fail(ErrorCode::BadParameter, "product is only defined for monomial-basis polynomials");
  std::vector<T> c(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return BasicPoly(std::move(c));
}

// ---------------------------------------------------------------------------

double SignedLog::value() const { return sign * std::exp(log_abs); }

SignedLog log_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) fail(ErrorCode::BadParameter, "Gamma has a pole at nonpositive integers");
  SignedLog r;
  r.log_abs = std::lgamma(x);
  if (x < 0.0) {
    // Gamma alternates sign on (-k-1, -k): negative on (-1, 0).
    const auto k = static_cast<long>(std::floor(-x));
    r.sign = (k % 2 == 0) ? -1 : 1;
  }
  return r;
}

// ---------------------------------------------------------------------------

template <class T>
T poly_eval(const BasicPoly<T>& p, const T& x) {
  const auto& c = p.coeffs();
  const std::size_t n = c.size();
  if (!p.basis().is_orthogonal()) {
    T acc(0);
    for (std::size_t k = n; k-- > 0;) acc = acc * x + c[k];
    return acc;
  }
  // Clenshaw: y_k = c_k + (a_{k+1} x + b_{k+1}) y_{k+1} - c_{k+2} y_{k+2}.
  const T alpha(p.basis().jacobi_alpha());
  const T beta(p.basis().jacobi_beta());
  T y1(0), y2(0);
  for (std::size_t k = n; k-- > 0;) {
    T y = c[k];
    if (k + 1 < n) {
      const auto s1 = jacobi_recurrence<T>(static_cast<unsigned>(k + 1), alpha, beta);
      y += (s1.a * x + s1.b) * y1;
    }
    if (k + 2 < n) {
      const auto s2 = jacobi_recurrence<T>(static_cast<unsigned>(k + 2), alpha, beta);
      y -= s2.c * y2;
    }
    y2 = y1;
    y1 = y;
  }
  return y1;
}

template <class T>
BasicPoly<T> basis_to_monomial(const BasicPoly<T>& p) {
  if (!p.basis().is_orthogonal()) return p;
  const auto n = static_cast<unsigned>(p.size() - 1);
  const auto family = jacobi_polys<T>(n, T(p.basis().jacobi_alpha()), T(p.basis().jacobi_beta()));
  std::vector<T> out(p.size(), T(0));
  for (unsigned k = 0; k <= n; ++k) {
    const auto& pk = family[k].coeffs();
    for (std::size_t j = 0; j < pk.size(); ++j) out[j] += p[k] * pk[j];
  }
  return BasicPoly<T>(std::move(out));
}

// ---------------------------------------------------------------------------

std::string to_string(RootClass c) {
  switch (c) {
    case RootClass::AllStrictlyInside: return "AllStrictlyInside";
    case RootClass::SomeOnBoundary: return "SomeOnBoundary";
    case RootClass::SomeOutside: return "SomeOutside";
    case RootClass::SomeNonReal: return "SomeNonReal";
  }
  return "Unknown";
}

RootReport classify_roots(std::span<const Complex> roots, Interval interval, double tol) {
  if (!(interval.lo < interval.hi)) fail(ErrorCode::BadInterval, "interval needs lo < hi");
  if (!(tol > 0.0)) fail(ErrorCode::BadParameter, "tolerance must be positive");

  RootReport rep;
  rep.roots.assign(roots.begin(), roots.end());
  rep.interval = interval;
  rep.tol = tol;
  for (const Complex& r : roots) {
    const double im = std::abs(r.imag());
    rep.max_abs_imag = std::max(rep.max_abs_imag, im);
    rep.min_boundary_distance =
        std::min({rep.min_boundary_distance, r.real() - interval.lo, interval.hi - r.real()});
    if (im > tol) {
      ++rep.non_real;
    } else if (interval.lo + tol < r.real() && r.real() < interval.hi - tol) {
      ++rep.inside;
    } else if (interval.lo - tol <= r.real() && r.real() <= interval.hi + tol) {
      ++rep.on_boundary;
    } else {
      ++rep.outside;
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      rep.min_pairwise_separation = std::min(rep.min_pairwise_separation, std::abs(roots[i] - roots[j]));
  if (rep.non_real > 0)
    rep.classification = RootClass::SomeNonReal;
  else if (rep.outside > 0)
    rep.classification = RootClass::SomeOutside;
  else if (rep.on_boundary > 0)
    rep.classification = RootClass::SomeOnBoundary;
  else
    rep.classification = RootClass::AllStrictlyInside;
  return rep;
}

template class BasicPoly<double>;
template class BasicPoly<Extended>;
template double poly_eval(const BasicPoly<double>&, const double&);
template Extended poly_eval(const BasicPoly<Extended>&, const Extended&);
template BasicPoly<double> basis_to_monomial(const BasicPoly<double>&);
template BasicPoly<Extended> basis_to_monomial(const BasicPoly<Extended>&);

}  // namespace ultra
