#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "support.hpp"
#include "ultra/error.hpp"
#include "ultra/orthopoly.hpp"
#include "ultra/transforms.hpp"

using namespace ultra;
using testing::hausdorff;
using testing::max_coeff_diff;

namespace {

Poly monomial(unsigned k) {
  std::vector<double> c(k + 1, 0.0);
  c[k] = 1.0;
  return Poly(c);
}

Poly random_poly(Rng& rng, int degree) {
  std::vector<double> c(static_cast<std::size_t>(degree + 1));
  for (double& v : c) v = rng.uniform(-1.0, 1.0);
  return Poly(c);
}

}  // namespace

TEST_CASE("ultra_transform examples") {
  const auto t = ultra_transform(Poly({0.0, 0.0, 1.0}), 0.0);
  CHECK(max_coeff_diff(t, Poly({-0.5, 0.0, 1.5})) < 1e-15);
  CHECK(hausdorff(poly_roots(t), {-1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0)}) < 1e-14);

  for (double a : {-0.5, 0.0, 0.5, 2.5}) {
    const auto c = ultra_transform(Poly::constant(3.0), a);
    CHECK(c.degree() == 0);
    CHECK(c[0] == doctest::Approx(3.0 / std::tgamma(1.0 + a)));
  }

  // x^2 - x has a root at 1: no location promise, just linearity
  const auto r = ultra_transform(Poly({0.0, -1.0, 1.0}), 0.0);
  CHECK(max_coeff_diff(r, jacobi_poly(2, 0.0, 0.0) - jacobi_poly(1, 0.0, 0.0)) < 1e-15);

  CHECK_THROWS_AS(ultra_transform(Poly({1.0, 1.0}), -1.0), Error);
  CHECK_THROWS_AS(ultra_transform(Poly({1.0, 1.0}, Basis::legendre()), 0.0), Error);
}

TEST_CASE("ultra_transform against the generating-function oracle") {
  // x^k -> k!/Gamma(k+1+a) * [t^k]G / ((1+2a)_k/(1+a)_k), evaluated pointwise
  Rng rng(40);
  for (double a : {-0.25, 0.5, 1.0, 2.5}) {
    for (unsigned k = 0; k <= 10; ++k) {
      const auto t = ultra_transform(monomial(k), a);
      for (int i = 0; i < 5; ++i) {
        const double x = rng.uniform(-1.0, 1.0);
        const auto g = genfun_taylor({GenFun::UltraG, a, a}, x, k);
        const double want = std::tgamma(k + 1.0) / std::tgamma(k + 1.0 + a) * g[k] / ultra_genfun_prefactor(k, a);
        CHECK(std::abs(poly_eval(t, x) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

TEST_CASE("legendre_transform") {
  CHECK(max_coeff_diff(legendre_transform(Poly({0.0, 1.0})), Poly({0.0, 1.0})) < 1e-15);
  CHECK(max_coeff_diff(legendre_transform(Poly::constant(1.0)), Poly::constant(1.0)) < 1e-15);
  const auto t = legendre_transform(Poly::from_roots({0.5, -0.5}));
  CHECK(max_coeff_diff(t, Poly({-0.75, 0.0, 1.5})) < 1e-15);
  CHECK(hausdorff(poly_roots(t), {-1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}) < 1e-14);

  SUBCASE("identical to ultra_transform at alpha = 0") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
      const auto f = random_poly(rng, rng.uniform_int(0, 20));
      CHECK(max_coeff_diff(legendre_transform(f), ultra_transform(f, 0.0)) <= 1e-14);
    }
  }
}

TEST_CASE("jacobi_transform") {
  for (double a : {0.0, 1.0, 3.0}) CHECK(jacobi_transform(Poly::constant(1.0), a, 2.0)[0] == 1.0);
  CHECK(max_coeff_diff(jacobi_transform(Poly({0.0, 1.0}), 0.0, 0.0), Poly({0.0, 1.0})) < 1e-15);
  CHECK(max_coeff_diff(jacobi_transform(Poly({0.0, 0.0, 1.0}), 0.0, 0.0), Poly({-0.5, 0.0, 1.5})) < 1e-15);
  // boundary input x^2 - 1 maps to P_2 - P_0 = (3/2)(x^2 - 1)
  const auto b = jacobi_transform(Poly::from_roots({1.0, -1.0}), 0.0, 0.0);
  CHECK(max_coeff_diff(b, Poly({-1.5, 0.0, 1.5})) < 1e-15);
  CHECK_THROWS_AS(jacobi_transform(Poly({1.0}), 0.0, -1.0), Error);
}

TEST_CASE("jacobi_factorial_transform") {
  CHECK(jacobi_factorial_transform(Poly::constant(1.0), 0.0, 0.0)[0] == 1.0);
  CHECK(max_coeff_diff(jacobi_factorial_transform(Poly({0.0, 0.0, 1.0}), 0.0, 0.0), Poly({-0.25, 0.0, 0.75})) < 1e-15);
  CHECK(max_coeff_diff(jacobi_factorial_transform(Poly({0.0, 1.0, 1.0}), 0.0, 0.0), Poly({-0.25, 1.0, 0.75})) <
        1e-15);
  const auto r = poly_roots(jacobi_factorial_transform(Poly({0.0, 0.0, 1.0}), 0.0, 0.0));
  for (const auto& z : r) CHECK(z.imag() == 0.0);
}

TEST_CASE("iserles_saff_transform") {
  GenericIserlesSaff s0{{1.0}, Basis::legendre(), {2.0}};
  const auto p0 = iserles_saff_transform(std::vector<double>{1.0}, s0);
  CHECK(p0[0] == doctest::Approx(0.5));

  GenericIserlesSaff s1{{1.0, 3.0}, Basis::legendre(), {2.0, 2.0 / 3.0}};
  const auto p1 = iserles_saff_transform(std::vector<double>{0.0, 1.0}, s1);
  CHECK(max_coeff_diff(p1, Poly({0.0, 0.5})) < 1e-15);

  SUBCASE("zeros invariant under q -> c q") {
    const auto spec = ultraspherical_iserles_saff(0.0, 6);
    const std::vector<double> q = Poly::from_roots({-0.8, -0.1, 0.3, 0.7}).coeffs();
    std::vector<double> cq = q;
    for (double& v : cq) v *= -3.5;
    const auto ra = poly_roots(iserles_saff_transform(q, spec));
    const auto rb = poly_roots(iserles_saff_transform(cq, spec));
    std::vector<double> rb_real;
    for (const auto& z : rb) rb_real.push_back(z.real());
    CHECK(hausdorff(ra, rb_real) < 1e-12);
  }
  SUBCASE("errors") {
    GenericIserlesSaff short_spec{{1.0}, Basis::legendre(), {2.0}};
    try {
      iserles_saff_transform(std::vector<double>{1.0, 2.0}, short_spec);
      FAIL("expected SpecIncomplete");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SpecIncomplete);
    }
    GenericIserlesSaff zero_delta{{0.0}, Basis::legendre(), {2.0}};
    CHECK_THROWS_AS(iserles_saff_transform(std::vector<double>{1.0}, zero_delta), Error);
    GenericIserlesSaff bad_h{{1.0}, Basis::legendre(), {-2.0}};
    CHECK_THROWS_AS(iserles_saff_transform(std::vector<double>{1.0}, bad_h), Error);
    GenericIserlesSaff mono{{1.0}, Basis::monomial(), {2.0}};
    CHECK_THROWS_AS(iserles_saff_transform(std::vector<double>{1.0}, mono), Error);
  }
}

TEST_CASE("per-degree scaling conventions") {
  const unsigned n = 12;
  SUBCASE("Legendre: 1/(delta_k h_k) is the constant 1/2 times k!/Gamma(k+1)") {
    const auto r = factor_ratios(UltraTheorem12{0.0}, ultraspherical_iserles_saff(0.0, n), n);
    CHECK(proportional(r, 1e-12));
    CHECK(r[0] == doctest::Approx(2.0));
  }
  SUBCASE("alpha != 0: plain delta_k h_k is not proportional") {
    for (double a : {0.5, 1.0, 2.5}) {
      const auto r = factor_ratios(UltraTheorem12{a}, ultraspherical_iserles_saff(a, n), n);
      CHECK_FALSE(proportional(r, 1e-6));
    }
  }
  SUBCASE("with the generating-function prefactor it is, for every alpha") {
    for (double a : {-0.25, 0.0, 0.5, 1.0, 2.5}) {
      const auto r = factor_ratios(UltraTheorem12{a}, ultraspherical_iserles_saff_genfun(a, n), n);
      CHECK(proportional(r, 1e-10));
      // delta g h = 2^{2a+1} Gamma(1+a) Gamma(j+a+1) / (j! Gamma(1+2a)), so the ratio is that constant
      const double want = std::exp2(2 * a + 1) * std::tgamma(1 + a) / std::tgamma(1 + 2 * a);
      CHECK(testing::rel_diff(r[0], want) < 1e-12);
    }
  }
  SUBCASE("ratio helpers") {
    CHECK(proportional(std::vector<double>{}, 1e-9));
    CHECK_FALSE(proportional(std::vector<double>{-1.0, -1.0}, 1e-9));
    CHECK_THROWS_AS(factor_ratios(UltraTheorem12{0.5}, JacobiConj32{0.5, 1.0}, 3), Error);
  }
  SUBCASE("proportional transforms give the same zeros") {
    Rng rng(42);
    for (double a : {0.5, 2.0}) {
      const auto r = testing::sorted_uniform(rng, 7, -0.95, 0.95);
      const auto f = Poly::from_roots(std::span<const double>(r));
      const auto u = ultra_transform(f, a);
      const auto v = iserles_saff_transform(f.coeffs(), ultraspherical_iserles_saff_genfun(a, 7));
      std::vector<double> ur;
      for (const auto& z : poly_roots(u)) ur.push_back(z.real());
      CHECK(hausdorff(poly_roots(v), ur) < 1e-10);
    }
  }
}

TEST_CASE("zero preservation for interior-rooted inputs") {
  Rng rng(43);
  for (double a : {-0.5, 0.0, 0.5, 1.0, 2.5}) {
    for (int t = 0; t < 200; ++t) {
      const auto r = testing::sorted_uniform(rng, rng.uniform_int(1, 12), -0.99, 0.99);
      const auto out = ultra_transform(Poly::from_roots(std::span<const double>(r)), a);
      CHECK(classify_roots(poly_roots(out), Interval::unit(), 1e-8).classification == RootClass::AllStrictlyInside);
    }
  }
}

TEST_CASE("structural properties") {
  Rng rng(44);
  for (double a : {-0.5, 0.0, 1.5}) {
    for (int t = 0; t < 50; ++t) {
      const int n = rng.uniform_int(0, 15);
      const auto f = random_poly(rng, n);
      const auto g = random_poly(rng, n);
      const double s = rng.uniform(-2.0, 2.0), u = rng.uniform(-2.0, 2.0);
      const auto lhs = ultra_transform(s * f + u * g, a);
      const auto rhs = s * ultra_transform(f, a) + u * ultra_transform(g, a);
      double scale = 1.0;
      for (double c : rhs.coeffs()) scale = std::max(scale, std::abs(c));
      CHECK(max_coeff_diff(lhs, rhs) <= 1e-13 * scale);
      CHECK(ultra_transform(f, a).degree() == f.degree());
      CHECK(jacobi_transform(f, a, 2.0).degree() == f.degree());
      CHECK(jacobi_factorial_transform(f, 2.0, a).degree() == f.degree());
      // determinism
      CHECK(ultra_transform(f, a).coeffs() == ultra_transform(f, a).coeffs());
    }
  }
  SUBCASE("parity") {
    const auto even = ultra_transform(Poly({0.3, 0.0, -1.0, 0.0, 2.0}), 1.5);
    CHECK(even[1] == 0.0);
    CHECK(even[3] == 0.0);
    const auto odd = ultra_transform(Poly({0.0, 1.0, 0.0, -2.0}), 1.5);
    CHECK(odd[0] == 0.0);
    CHECK(odd[2] == 0.0);
  }
  SUBCASE("root order does not matter") {
    const auto a = Poly::from_roots({0.1, -0.4, 0.8});
    const auto b = Poly::from_roots({0.8, 0.1, -0.4});
    const auto ra = poly_roots(ultra_transform(a, 0.5));
    std::vector<double> rb;
    for (const auto& z : poly_roots(ultra_transform(b, 0.5))) rb.push_back(z.real());
    CHECK(hausdorff(ra, rb) < 1e-13);
  }
}

TEST_CASE("transform specs") {
  CHECK_THROWS_AS((TransformSpec{UltraTheorem12{-1.0}, 10}.validate()), Error);
  CHECK_THROWS_AS((TransformSpec{JacobiConj32{0.0, -1.0}, 10}.validate()), Error);
  CHECK_NOTHROW((TransformSpec{JacobiConj32{-0.5, 2.0}, 10}.validate()));
  const TransformSpec spec{LegendreConj11{}, 3};
  CHECK_THROWS_AS(apply_transform(spec, Poly({0, 0, 0, 0, 1.0})), Error);
  CHECK(target_basis(UltraTheorem12{0.5}) == Basis::ultraspherical(0.5));
  CHECK(target_basis(JacobiConj32{1.0, 2.0}) == Basis::jacobi(1.0, 2.0));
  CHECK_FALSE(describe(JacobiFactorialQ31{1.0, 2.0}).empty());

  SUBCASE("apply_transform dispatches to the named transform") {
    const auto f = Poly::from_roots({0.2, -0.6, 0.9});
    CHECK(apply_transform(TransformSpec{UltraTheorem12{1.0}}, f).coeffs() == ultra_transform(f, 1.0).coeffs());
    CHECK(apply_transform(TransformSpec{LegendreConj11{}}, f).coeffs() == legendre_transform(f).coeffs());
    CHECK(apply_transform(TransformSpec{JacobiConj32{1.0, 2.0}}, f).coeffs() == jacobi_transform(f, 1.0, 2.0).coeffs());
    CHECK(apply_transform(TransformSpec{JacobiFactorialQ31{1.0, 2.0}}, f).coeffs() ==
          jacobi_factorial_transform(f, 1.0, 2.0).coeffs());
  }
}

TEST_CASE("extended-precision transform matches double") {
  const auto f = Poly::from_roots({0.25, -0.5, 0.75, -0.9});
  ScopedPrecision guard(256);
  const auto e = jacobi_transform(poly_cast<Extended>(f), 2.0, 3.0);
  const auto d = jacobi_transform(f, 2.0, 3.0);
  CHECK(max_coeff_diff(poly_cast<double>(e), d) < 1e-12);
}
