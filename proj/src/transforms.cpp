#include "ultra/transforms.hpp"

#include <cmath>
#include <sstream>

#include "ultra/error.hpp"
#include "ultra/orthopoly.hpp"

namespace ultra {
namespace {

template <class T>
void require_monomial(const BasicPoly<T>& f) {
  if (f.basis().is_orthogonal()) fail(ErrorCode::BadParameter, "transforms act on monomial-basis input");
}

/// Sum_k a_k s_k F_k in the monomial basis, where F is the given family.
template <class T>
BasicPoly<T> map_to_family(const BasicPoly<T>& f, const Basis& family, const std::vector<T>& scale) {
  require_monomial(f);
  std::vector<T> c(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) c[k] = f[k] * scale[k];
  return basis_to_monomial(BasicPoly<T>(std::move(c), family));
}

/// k! / Gamma(k + 1 + alpha) = 1 / (Gamma(1 + alpha) prod_{j<=k} (j + alpha)/j)
template <class T>
std::vector<T> ultra_scales(std::size_t count, double alpha) {
  using std::tgamma;
  check_jacobi_parameters(alpha, alpha);
  const T a(alpha);
  std::vector<T> s(count);
  T acc = T(1) / tgamma(T(1) + a);
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) acc *= T(static_cast<double>(k)) / (T(static_cast<double>(k)) + a);
    s[k] = acc;
  }
  return s;
}

template <class T>
std::vector<T> factorial_scales(std::size_t count) {
  std::vector<T> s(count);
  T acc(1);
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) acc /= T(static_cast<double>(k));
    s[k] = acc;
  }
  return s;
}

void check_iserles_saff(const GenericIserlesSaff& spec, std::size_t count) {
  if (spec.delta.size() < count || spec.h.size() < count)
    fail(ErrorCode::SpecIncomplete, "delta/h constants missing for degree " + std::to_string(count - 1));
  for (std::size_t k = 0; k < count; ++k) {
    if (spec.delta[k] == 0.0) fail(ErrorCode::BadParameter, "delta_k must be nonzero");
    if (!(spec.h[k] > 0.0)) fail(ErrorCode::BadParameter, "h_k must be positive");
  }
  if (!spec.family.is_orthogonal()) fail(ErrorCode::BadParameter, "Iserles-Saff family must be orthogonal");
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

template <class T>
BasicPoly<T> ultra_transform(const BasicPoly<T>& f, double alpha) {
  return map_to_family(f, Basis::ultraspherical(alpha), ultra_scales<T>(f.size(), alpha));
}

template <class T>
BasicPoly<T> legendre_transform(const BasicPoly<T>& f) {
  return ultra_transform(f, 0.0);
}

template <class T>
BasicPoly<T> jacobi_transform(const BasicPoly<T>& f, double alpha, double beta) {
  return map_to_family(f, Basis::jacobi(alpha, beta), std::vector<T>(f.size(), T(1)));
}

template <class T>
BasicPoly<T> jacobi_factorial_transform(const BasicPoly<T>& f, double alpha, double beta) {
  return map_to_family(f, Basis::jacobi(alpha, beta), factorial_scales<T>(f.size()));
}

// ---------------------------------------------------------------------------

void TransformSpec::validate() const {
  std::visit(Overloaded{
                 [](const UltraTheorem12& s) { check_jacobi_parameters(s.alpha, s.alpha); },
                 [](const LegendreConj11&) {},
                 [](const JacobiConj32& s) { check_jacobi_parameters(s.alpha, s.beta); },
                 [](const JacobiFactorialQ31& s) { check_jacobi_parameters(s.alpha, s.beta); },
                 [this](const GenericIserlesSaff& s) { check_iserles_saff(s, max_degree + 1); },
             },
             kind);
}

std::string describe(const TransformKind& kind) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const UltraTheorem12& s) { os << "ultra(alpha=" << s.alpha << ")"; },
                 [&](const LegendreConj11&) { os << "legendre"; },
                 [&](const JacobiConj32& s) { os << "jacobi(alpha=" << s.alpha << ",beta=" << s.beta << ")"; },
                 [&](const JacobiFactorialQ31& s) {
                   os << "jacobi_factorial(alpha=" << s.alpha << ",beta=" << s.beta << ")";
                 },
                 [&](const GenericIserlesSaff& s) { os << "iserles_saff(" << s.family.to_string() << ")"; },
             },
             kind);
  return os.str();
}

Basis target_basis(const TransformKind& kind) {
  return std::visit(Overloaded{
                        [](const UltraTheorem12& s) { return Basis::ultraspherical(s.alpha); },
                        [](const LegendreConj11&) { return Basis::legendre(); },
                        [](const JacobiConj32& s) { return Basis::jacobi(s.alpha, s.beta); },
                        [](const JacobiFactorialQ31& s) { return Basis::jacobi(s.alpha, s.beta); },
                        [](const GenericIserlesSaff& s) { return s.family; },
                    },
                    kind);
}

std::vector<double> degree_factors(const TransformKind& kind, unsigned n) {
  const std::size_t count = n + 1;
  return std::visit(Overloaded{
                        [&](const UltraTheorem12& s) { return ultra_scales<double>(count, s.alpha); },
                        [&](const LegendreConj11&) { return ultra_scales<double>(count, 0.0); },
                        [&](const JacobiConj32&) { return std::vector<double>(count, 1.0); },
                        [&](const JacobiFactorialQ31&) { return factorial_scales<double>(count); },
                        [&](const GenericIserlesSaff& s) {
                          check_iserles_saff(s, count);
                          std::vector<double> out(count);
                          for (std::size_t k = 0; k < count; ++k) out[k] = 1.0 / (s.delta[k] * s.h[k]);
                          return out;
                        },
                    },
                    kind);
}

std::vector<double> factor_ratios(const TransformKind& a, const TransformKind& b, unsigned n) {
  const Basis ba = target_basis(a);
  const Basis bb = target_basis(b);
  if (ba.jacobi_alpha() != bb.jacobi_alpha() || ba.jacobi_beta() != bb.jacobi_beta())
    fail(ErrorCode::BadParameter, "factor ratios need transforms into the same family");
  const auto fa = degree_factors(a, n);
  const auto fb = degree_factors(b, n);
  std::vector<double> r(fa.size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = fa[k] / fb[k];
  return r;
}

bool proportional(std::span<const double> ratios, double rel_tol) {
  if (ratios.empty()) return true;
  const double c = ratios.front();
  if (!(c > 0.0)) return false;
  for (double r : ratios)
    if (std::abs(r - c) > rel_tol * c) return false;
  return true;
}

Poly iserles_saff_transform(std::span<const double> q, const GenericIserlesSaff& spec) {
  if (q.empty()) fail(ErrorCode::BadParameter, "empty coefficient list");
  const auto s = degree_factors(spec, static_cast<unsigned>(q.size() - 1));
  return map_to_family(Poly(std::vector<double>(q.begin(), q.end())), spec.family, s);
}

GenericIserlesSaff ultraspherical_iserles_saff(double alpha, unsigned n) {
  check_jacobi_parameters(alpha, alpha);
  GenericIserlesSaff spec;
  spec.family = Basis::ultraspherical(alpha);
  for (unsigned k = 0; k <= n; ++k) {
    spec.delta.push_back(2.0 * k + 2.0 * alpha + 1.0);
    spec.h.push_back(ortho_constant(k, alpha, alpha).h);
  }
  return spec;
}

GenericIserlesSaff ultraspherical_iserles_saff_genfun(double alpha, unsigned n) {
  GenericIserlesSaff spec = ultraspherical_iserles_saff(alpha, n);
  for (unsigned k = 0; k <= n; ++k) spec.delta[k] *= ultra_genfun_prefactor(k, alpha);
  return spec;
}

template <class T>
BasicPoly<T> apply_transform(const TransformSpec& spec, const BasicPoly<T>& f) {
  spec.validate();
  if (f.degree() > static_cast<int>(spec.max_degree))
    fail(ErrorCode::BadParameter, "input degree exceeds the transform's max_degree");
  return std::visit(Overloaded{
                        [&](const UltraTheorem12& s) { return ultra_transform(f, s.alpha); },
                        [&](const LegendreConj11&) { return legendre_transform(f); },
                        [&](const JacobiConj32& s) { return jacobi_transform(f, s.alpha, s.beta); },
                        [&](const JacobiFactorialQ31& s) { return jacobi_factorial_transform(f, s.alpha, s.beta); },
                        [&](const GenericIserlesSaff& s) {
                          const auto d = degree_factors(s, static_cast<unsigned>(f.size() - 1));
                          std::vector<T> scale(d.begin(), d.end());
                          return map_to_family(f, s.family, scale);
                        },
                    },
                    spec.kind);
}

#define ULTRA_INSTANTIATE(T)                                                            \
  template BasicPoly<T> ultra_transform(const BasicPoly<T>&, double);                   \
  template BasicPoly<T> legendre_transform(const BasicPoly<T>&);                        \
  template BasicPoly<T> jacobi_transform(const BasicPoly<T>&, double, double);          \
  template BasicPoly<T> jacobi_factorial_transform(const BasicPoly<T>&, double, double); \
  template BasicPoly<T> apply_transform(const TransformSpec&, const BasicPoly<T>&);

ULTRA_INSTANTIATE(double)
ULTRA_INSTANTIATE(Extended)

#undef ULTRA_INSTANTIATE

}  // namespace ultra
