#include "ultra/signreg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ultra/error.hpp"
#include "ultra/random.hpp"

namespace ultra {

bool Rectangle::bounded() const {
  return std::isfinite(x.lo) && std::isfinite(x.hi) && std::isfinite(y.lo) && std::isfinite(y.hi);
}

SignedFactor SignedFactor::constant(double c) {
  if (c == 0.0) fail(ErrorCode::BadParameter, "constant factor must be nonzero");
  std::ostringstream os;
  os << c;
  return {[c](double) { return c; }, c > 0.0 ? 1 : -1, os.str()};
}

namespace {

void check_rectangle(const Rectangle& d) {
  if (!(d.x.lo < d.x.hi) || !(d.y.lo < d.y.hi)) fail(ErrorCode::BadInterval, "kernel domain must be nonempty");
}

void check_inside(const Interval& inner, double lo, double hi, const char* what) {
  if (inner.lo < lo || inner.hi > hi) fail(ErrorCode::BadParameter, what);
}

}  // namespace

KernelSpec KernelSpec::unit(Rectangle domain) {
  check_rectangle(domain);
  return {Family::Unit, domain};
}

KernelSpec KernelSpec::exp_xy(Rectangle domain) {
  check_rectangle(domain);
  return {Family::ExpXY, domain};
}

KernelSpec KernelSpec::power_sum(double beta, Rectangle domain) {
  check_rectangle(domain);
  if (!(beta > 0.0)) fail(ErrorCode::BadParameter, "power-sum kernel needs beta > 0");
  const double inf = std::numeric_limits<double>::infinity();
  check_inside(domain.x, 0.0, inf, "power-sum kernel lives on (0, inf)^2");
  check_inside(domain.y, 0.0, inf, "power-sum kernel lives on (0, inf)^2");
  KernelSpec k(Family::PowerSum, domain);
  k.b_ = beta;
  return k;
}

KernelSpec KernelSpec::ultra(double beta, Rectangle domain) {
  check_rectangle(domain);
  check_inside(domain.x, -1.0, 1.0, "ultraspherical kernel lives on (-1, 1)^2");
  check_inside(domain.y, -1.0, 1.0, "ultraspherical kernel lives on (-1, 1)^2");
  KernelSpec k(Family::UltraKernel, domain);
  k.b_ = beta;
  return k;
}

KernelSpec KernelSpec::g2(double alpha, Rectangle domain) {
  check_rectangle(domain);
  if (!(alpha > -1.0)) fail(ErrorCode::BadParameter, "G2 kernel needs alpha > -1");
  check_inside(domain.x, -1.0, 1.0, "G2 kernel lives on (-1, 1)^2");
  check_inside(domain.y, -1.0, 1.0, "G2 kernel lives on (-1, 1)^2");
  KernelSpec k(Family::G2Kernel, domain);
  k.a_ = alpha;
  return k;
}

KernelSpec KernelSpec::jacobi_genfun(double alpha, double beta, Rectangle domain) {
  check_rectangle(domain);
  if (!(alpha > -1.0) || !(beta > -1.0)) fail(ErrorCode::BadParameter, "Jacobi parameters must exceed -1");
  check_inside(domain.x, -1.0, 1.0, "Jacobi generating kernel lives on (-1, 1)^2");
  check_inside(domain.y, -1.0, 1.0, "Jacobi generating kernel lives on (-1, 1)^2");
  KernelSpec k(Family::JacobiGenFun, domain);
  k.a_ = alpha;
  k.b_ = beta;
  return k;
}

KernelSpec KernelSpec::factor_wrapped(KernelSpec base, SignedFactor phi, SignedFactor psi) {
  if (!phi.fn || !psi.fn) fail(ErrorCode::BadParameter, "factor functions must be set");
  if (std::abs(phi.sign) != 1 || std::abs(psi.sign) != 1) fail(ErrorCode::BadParameter, "factor signs must be +-1");
  KernelSpec k(Family::FactorWrapped, base.domain_);
  k.first_ = std::make_shared<const KernelSpec>(std::move(base));
  k.phi_ = std::move(phi);
  k.psi_ = std::move(psi);
  return k;
}

KernelSpec KernelSpec::composed(KernelSpec kk, KernelSpec ll, std::vector<double> grid) {
  if (grid.empty()) fail(ErrorCode::BadParameter, "composition grid is empty");
  if (!std::is_sorted(grid.begin(), grid.end()) || std::adjacent_find(grid.begin(), grid.end()) != grid.end())
    fail(ErrorCode::BadParameter, "composition grid must be strictly increasing");
  for (double z : grid) {
    if (!(kk.domain_.y.lo < z && z < kk.domain_.y.hi) || !(ll.domain_.x.lo < z && z < ll.domain_.x.hi))
      fail(ErrorCode::BadParameter, "composition grid must lie in K's y-domain and L's x-domain");
  }
  KernelSpec m(Family::Composed, Rectangle{kk.domain_.x, ll.domain_.y});
  m.first_ = std::make_shared<const KernelSpec>(std::move(kk));
  m.second_ = std::make_shared<const KernelSpec>(std::move(ll));
  m.grid_ = std::move(grid);
  return m;
}

std::string KernelSpec::describe() const {
  std::ostringstream os;
  switch (family_) {
    case Family::Unit: os << "unit"; break;
    case Family::ExpXY: os << "exp_xy"; break;
    case Family::PowerSum: os << "power_sum(beta=" << b_ << ")"; break;
    case Family::UltraKernel: os << "ultra(beta=" << b_ << ")"; break;
    case Family::G2Kernel: os << "g2(alpha=" << a_ << ")"; break;
    case Family::JacobiGenFun: os << "jacobi_genfun(alpha=" << a_ << ",beta=" << b_ << ")"; break;
    case Family::FactorWrapped:
      os << "factor(" << phi_.name << "," << psi_.name << ")*" << first_->describe();
      break;
    case Family::Composed:
      os << "compose(" << first_->describe() << "," << second_->describe() << ",grid=" << grid_.size() << ")";
      break;
  }
  os << " on (" << domain_.x.lo << "," << domain_.x.hi << ")x(" << domain_.y.lo << "," << domain_.y.hi << ")";
  return os.str();
}

template <class T>
T KernelSpec::eval(const T& x, const T& y) const {
  using std::exp;
  using std::pow;
  using std::sqrt;
  const double xd = to_double(x);
  const double yd = to_double(y);
  if (!domain_.contains(xd, yd)) {
    std::ostringstream os;
    os << "(" << xd << ", " << yd << ") outside " << describe();
    fail(ErrorCode::OutOfDomain, os.str());
  }
  switch (family_) {
    case Family::Unit:
      return T(1);
    case Family::ExpXY:
      return exp(x * y);
    case Family::PowerSum:
      return pow(x + y, T(-b_));
    case Family::UltraKernel:
      return pow(T(1) - T(2) * x * y + y * y, T(-b_));
    case Family::G2Kernel: {
      const T a(a_);
      return (T(2) * a + T(1)) * (T(1) - y * y) * pow(T(1) - T(2) * x * y + y * y, -a - T(1.5));
    }
    case Family::JacobiGenFun: {
      const T a(a_), b(b_);
      const T rho = sqrt(T(1) - T(2) * x * y + y * y);
      return pow(T(2), a + b) / (rho * pow(T(1) + y + rho, b) * pow(T(1) - y + rho, a));
    }
    case Family::FactorWrapped: {
      const double px = phi_.fn(xd);
      const double py = psi_.fn(yd);
      if ((px > 0.0 ? 1 : -1) != phi_.sign || px == 0.0 || (py > 0.0 ? 1 : -1) != psi_.sign || py == 0.0)
        fail(ErrorCode::BadParameter, "factor left its declared sign at (" + std::to_string(xd) + ", " +
                                          std::to_string(yd) + ")");
      return T(px) * T(py) * first_->eval(x, y);
    }
    case Family::Composed: {
      T acc(0);
      for (double z : grid_) acc += first_->eval(x, T(z)) * second_->eval(T(z), y);
      return acc;
    }
  }
  fail(ErrorCode::BadParameter, "unknown kernel family");
}

template double KernelSpec::eval(const double&, const double&) const;
template Extended KernelSpec::eval(const Extended&, const Extended&) const;

double kernel_eval(const KernelSpec& spec, double x, double y) { return spec.eval(x, y); }

// ---------------------------------------------------------------------------

namespace {

void check_tuple(std::span<const double> v, const Interval& iv, const char* which) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(iv.lo < v[i] && v[i] < iv.hi))
      fail(ErrorCode::BadTuple, std::string(which) + " tuple leaves the kernel domain");
    if (i > 0 && !(v[i - 1] < v[i])) fail(ErrorCode::BadTuple, std::string(which) + " tuple must be strictly increasing");
  }
}

template <class T>
MinorValue minor_in(const KernelSpec& spec, std::span<const double> xs, std::span<const double> ys) {
  using std::abs;
  const std::size_t m = xs.size();
  std::vector<T> a(m * m);
  double scale = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    double row_max = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      a[i * m + j] = spec.eval(T(xs[i]), T(ys[j]));
      row_max = std::max(row_max, std::abs(to_double(a[i * m + j])));
    }
    scale *= row_max;
  }
  T det(1);
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < m; ++r)
      if (abs(a[r * m + c]) > abs(a[piv * m + c])) piv = r;
    if (a[piv * m + c] == T(0)) return {0.0, scale};
    if (piv != c) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a[c * m + j], a[piv * m + j]);
      det = -det;
    }
    const T p = a[c * m + c];
    det *= p;
    for (std::size_t r = c + 1; r < m; ++r) {
      const T f = a[r * m + c] / p;
      for (std::size_t j = c + 1; j < m; ++j) a[r * m + j] -= f * a[c * m + j];
    }
  }
  return {to_double(det), scale};
}

}  // namespace

MinorValue ssr_minor_value(const KernelSpec& spec, std::span<const double> xs, std::span<const double> ys,
                           const PrecisionPolicy& policy) {
  policy.validate();
  if (xs.size() != ys.size() || xs.empty() || xs.size() > 8)
    fail(ErrorCode::BadTuple, "tuples must have equal length 1..8");
  check_tuple(xs, spec.domain().x, "x");
  check_tuple(ys, spec.domain().y, "y");
  if (!policy.is_extended()) return minor_in<double>(spec, xs, ys);
  ScopedPrecision guard(policy.bits);
  return minor_in<Extended>(spec, xs, ys);
}

double ssr_minor(const KernelSpec& spec, std::span<const double> xs, std::span<const double> ys,
                 const PrecisionPolicy& policy) {
  return ssr_minor_value(spec, xs, ys, policy).det;
}

std::string to_string(MinorSign s) {
  switch (s) {
    case MinorSign::Positive: return "+";
    case MinorSign::Negative: return "-";
    case MinorSign::Indeterminate: return "?";
  }
  return "?";
}

std::string to_string(SsrVerdict v) {
  switch (v) {
    case SsrVerdict::ConsistentSSR: return "ConsistentSSR";
    case SsrVerdict::ConsistentSTP: return "ConsistentSTP";
    case SsrVerdict::ViolationFound: return "ViolationFound";
    case SsrVerdict::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

int SsrReport::total_violations() const {
  int v = 0;
  for (const auto& l : levels) v += l.violations;
  return v;
}

std::string SsrReport::sign_pattern() const {
  std::string s;
  for (const auto& l : levels) s += to_string(l.inferred_sign);
  return s;
}

namespace {

std::vector<double> sample_tuple(Rng& rng, int m, const Interval& iv) {
  std::vector<double> v(static_cast<std::size_t>(m));
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (double& x : v) x = rng.uniform(iv.lo, iv.hi);
    std::sort(v.begin(), v.end());
    bool ok = true;
    for (std::size_t i = 1; i < v.size() && ok; ++i) ok = v[i] - v[i - 1] >= kMinTupleSeparation;
    if (ok) return v;
  }
  fail(ErrorCode::BadParameter, "domain too small for the minimum tuple separation");
}

SsrVerdict verdict_of(const std::vector<SsrLevel>& levels) {
  bool indeterminate = false;
  bool all_positive = true;
  for (const auto& l : levels) {
    if (l.violations > 0) return SsrVerdict::ViolationFound;
    if (l.inferred_sign == MinorSign::Indeterminate) indeterminate = true;
    if (l.inferred_sign != MinorSign::Positive) all_positive = false;
  }
  if (indeterminate) return SsrVerdict::Inconclusive;
  return all_positive ? SsrVerdict::ConsistentSTP : SsrVerdict::ConsistentSSR;
}

}  // namespace

SsrReport ssr_scan(const KernelSpec& spec, int m_max, int trials_per_m, std::uint64_t seed,
                   const PrecisionPolicy& policy) {
  policy.validate();
  const int cap = policy.is_extended() ? 8 : 6;
  if (m_max < 1 || m_max > cap)
    fail(ErrorCode::BadParameter, "m_max must be in 1.." + std::to_string(cap) + " for " + policy.to_string());
  if (trials_per_m < 100) fail(ErrorCode::BadParameter, "ssr_scan needs at least 100 trials per m");
  if (!spec.domain().bounded()) fail(ErrorCode::BadParameter, "sampling needs a bounded kernel domain");

  SsrReport rep;
  rep.kernel = spec.describe();
  rep.m_max = m_max;
  rep.seed = seed;
  for (int m = 1; m <= m_max; ++m) {
    SsrLevel lvl;
    lvl.m = m;
    lvl.trials = trials_per_m;
    lvl.min_abs_det = std::numeric_limits<double>::infinity();
    lvl.min_determinate_ratio = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials_per_m; ++t) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(t)));
      const auto xs = sample_tuple(rng, m, spec.domain().x);
      const auto ys = sample_tuple(rng, m, spec.domain().y);
      const MinorValue mv = ssr_minor_value(spec, xs, ys, policy);
      lvl.min_abs_det = std::min(lvl.min_abs_det, std::abs(mv.det));
      const double ratio = mv.ratio();
      if (!(ratio > policy.tau_det)) {
        ++lvl.indeterminates;
        lvl.max_indeterminate_ratio = std::max(lvl.max_indeterminate_ratio, ratio);
        continue;
      }
      lvl.min_determinate_ratio = std::min(lvl.min_determinate_ratio, ratio);
      (mv.det > 0.0 ? lvl.positives : lvl.negatives)++;
    }
    if (lvl.positives > lvl.negatives)
      lvl.inferred_sign = MinorSign::Positive;
    else if (lvl.negatives > lvl.positives)
      lvl.inferred_sign = MinorSign::Negative;
    lvl.violations = std::min(lvl.positives, lvl.negatives);
    if (lvl.positives + lvl.negatives == 0) lvl.min_determinate_ratio = 0.0;
    rep.levels.push_back(lvl);
  }
  rep.verdict = verdict_of(rep.levels);
  return rep;
}

FactorCheck factor_invariance_check(const KernelSpec& base, const SignedFactor& phi, const SignedFactor& psi,
                                    int m_max, int trials, std::uint64_t seed, const PrecisionPolicy& policy) {
  FactorCheck out;
  out.base = ssr_scan(base, m_max, trials, seed, policy);
  out.wrapped = ssr_scan(KernelSpec::factor_wrapped(base, phi, psi), m_max, trials, seed, policy);
  out.consistent = true;
  for (std::size_t i = 0; i < out.base.levels.size(); ++i) {
    const auto b = out.base.levels[i].inferred_sign;
    const auto w = out.wrapped.levels[i].inferred_sign;
    if (b == MinorSign::Indeterminate || w == MinorSign::Indeterminate) {
      out.consistent = out.consistent && b == w;
      continue;
    }
    const int m = out.base.levels[i].m;
    const int flip = (m % 2 == 0) ? 1 : phi.sign * psi.sign;
    const int bs = b == MinorSign::Positive ? 1 : -1;
    const int ws = w == MinorSign::Positive ? 1 : -1;
    out.consistent = out.consistent && ws == bs * flip;
  }
  return out;
}

SsrReport composition_check(const KernelSpec& k, const KernelSpec& l, std::span<const double> grid_z, int m_max,
                            int trials, std::uint64_t seed, const PrecisionPolicy& policy) {
  const auto m = KernelSpec::composed(k, l, std::vector<double>(grid_z.begin(), grid_z.end()));
  return ssr_scan(m, m_max, trials, seed, policy);
}

}  // namespace ultra
