#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "ultra/error.hpp"
#include "ultra/signreg.hpp"

using namespace ultra;

namespace {

const Rectangle kPositive = Rectangle::square(0.1, 4.0);

/// det [1/(x_i + y_j)] in closed form.
double cauchy_det(const std::vector<double>& x, const std::vector<double>& y) {
  double num = 1.0;
  double den = 1.0;
  const std::size_t m = x.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) num *= (x[j] - x[i]) * (y[j] - y[i]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) den *= x[i] + y[j];
  return num / den;
}

std::vector<double> spaced(Rng& rng, int m, double lo, double hi) {
  for (;;) {
    auto v = testing::sorted_uniform(rng, m, lo, hi);
    bool ok = true;
    for (std::size_t i = 1; i < v.size(); ++i) ok = ok && v[i] - v[i - 1] > 0.05;
    if (ok) return v;
  }
}

}  // namespace

TEST_CASE("kernel_eval examples") {
  CHECK(kernel_eval(KernelSpec::exp_xy(Rectangle::square(-3, 3)), 0.0, 2.5) == 1.0);
  CHECK(kernel_eval(KernelSpec::exp_xy(Rectangle::square(-3, 3)), 1.0, 2.0) == doctest::Approx(std::exp(2.0)));
  CHECK(kernel_eval(KernelSpec::power_sum(1.0, kPositive), 1.0, 1.0) == doctest::Approx(0.5));
  CHECK(kernel_eval(KernelSpec::ultra(0.5), 0.0, 0.0) == doctest::Approx(1.0));
  CHECK(kernel_eval(KernelSpec::ultra(0.5), 0.3, 0.5) == doctest::Approx(1.0 / std::sqrt(1 - 0.3 + 0.25)));
  // G2(x, 0) = 2a + 1
  CHECK(kernel_eval(KernelSpec::g2(1.0), 0.4, 0.0) == doctest::Approx(3.0));
  CHECK(kernel_eval(KernelSpec::unit(Rectangle::square(-1, 1)), 0.2, -0.7) == 1.0);
  // Jacobi generating kernel at y = 0 is 1
  CHECK(kernel_eval(KernelSpec::jacobi_genfun(0.5, 1.5), -0.6, 0.0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(kernel_eval(KernelSpec::ultra(0.5), 1.0, 0.0), Error);
  try {
    kernel_eval(KernelSpec::power_sum(1.0, kPositive), -1.0, 1.0);
    FAIL("expected OutOfDomain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfDomain);
  }
  CHECK_THROWS_AS(KernelSpec::power_sum(0.0, kPositive), Error);
  CHECK_THROWS_AS(KernelSpec::power_sum(1.0, Rectangle::square(-1, 1)), Error);
  CHECK_THROWS_AS(KernelSpec::ultra(1.0, Rectangle::square(-2, 1)), Error);
  CHECK_THROWS_AS(KernelSpec::g2(-1.0), Error);
  CHECK_THROWS_AS(KernelSpec::exp_xy(Rectangle::square(1, 1)), Error);
  CHECK_THROWS_AS(SignedFactor::constant(0.0), Error);
}

TEST_CASE("ssr_minor examples") {
  const auto e = KernelSpec::exp_xy(Rectangle::square(-3, 3));
  const std::vector<double> z01{0.0, 1.0};
  CHECK(ssr_minor(e, z01, z01) == doctest::Approx(std::numbers::e - 1.0));
  const std::vector<double> x1{0.7}, y1{-1.2};
  CHECK(ssr_minor(e, x1, y1) == doctest::Approx(std::exp(-0.84)));

  const std::vector<double> z12{1.0, 2.0};
  CHECK(ssr_minor(KernelSpec::power_sum(1.0, kPositive), z12, z12) == doctest::Approx(1.0 / 72.0));

  const auto mv = ssr_minor_value(e, z01, z01);
  CHECK(mv.scale == doctest::Approx(std::numbers::e));
  CHECK(mv.ratio() == doctest::Approx((std::numbers::e - 1.0) / std::numbers::e));

  SUBCASE("extended matches double") {
    const std::vector<double> xs{0.2, 0.9, 1.7}, ys{-0.5, 0.4, 1.1};
    const double d = ssr_minor(e, xs, ys);
    const double x = ssr_minor(e, xs, ys, PrecisionPolicy::extended(256));
    CHECK(testing::rel_diff(d, x) < 1e-12);
  }
  SUBCASE("bad tuples") {
    const std::vector<double> dec{1.0, 0.5}, dup{0.5, 0.5}, out{0.5, 3.5}, three{0.1, 0.2, 0.3};
    for (const auto* v : {&dec, &dup, &out}) {
      try {
        ssr_minor(e, *v, z01);
        FAIL("expected BadTuple");
      } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::BadTuple);
      }
    }
    CHECK_THROWS_AS(ssr_minor(e, three, z01), Error);
    CHECK_THROWS_AS(ssr_minor(e, std::vector<double>{}, std::vector<double>{}), Error);
    std::vector<double> nine(9);
    for (int i = 0; i < 9; ++i) nine[i] = -2.0 + 0.4 * i;
    CHECK_THROWS_AS(ssr_minor(e, nine, nine), Error);
  }
}

TEST_CASE("power-sum minors match the Cauchy determinant") {
  // Cauchy minors reach 1e-20 against O(1) entries; elimination in double
  // loses about 8 digits there, so the oracle runs in extended precision
  Rng rng(50);
  const auto k = KernelSpec::power_sum(1.0, kPositive);
  const auto ext = PrecisionPolicy::extended(256);
  for (int m = 1; m <= 5; ++m)
    for (int t = 0; t < 40; ++t) {
      const auto xs = spaced(rng, m, 0.1, 4.0);
      const auto ys = spaced(rng, m, 0.1, 4.0);
      const double want = cauchy_det(xs, ys);
      CHECK(want > 0.0);
      CHECK(testing::rel_diff(ssr_minor(k, xs, ys, ext), want) <= 1e-8);
      CHECK(testing::rel_diff(ssr_minor(k, xs, ys), want) <= 1e-6);
    }
}

TEST_CASE("exp(xy) 2x2 minors in closed form") {
  Rng rng(51);
  const auto k = KernelSpec::exp_xy(Rectangle::square(-3, 3));
  for (int t = 0; t < 100; ++t) {
    const auto x = spaced(rng, 2, -3.0, 3.0);
    const auto y = spaced(rng, 2, -3.0, 3.0);
    const double want = std::exp(x[0] * y[0] + x[1] * y[1]) - std::exp(x[0] * y[1] + x[1] * y[0]);
    CHECK(testing::rel_diff(ssr_minor(k, x, y), want) <= 1e-12);
  }
}

TEST_CASE("minor covariance properties") {
  Rng rng(52);
  const auto e = KernelSpec::exp_xy(Rectangle::square(-6, 6));
  for (int m = 1; m <= 4; ++m)
    for (int t = 0; t < 25; ++t) {
      // e^{(cx)(y/c)} = e^{xy}
      const auto xs = spaced(rng, m, -1.5, 1.5);
      const auto ys = spaced(rng, m, -1.5, 1.5);
      const double c = rng.uniform(0.5, 2.0);
      std::vector<double> cx = xs, yc = ys;
      for (double& v : cx) v *= c;
      for (double& v : yc) v /= c;
      CHECK(testing::rel_diff(ssr_minor(e, cx, yc), ssr_minor(e, xs, ys)) <= 1e-9);
    }
  const auto p = KernelSpec::power_sum(1.5, Rectangle::square(0.1, 20.0));
  for (int m = 1; m <= 4; ++m)
    for (int t = 0; t < 25; ++t) {
      // (cx + cy)^{-b} = c^{-b} (x + y)^{-b}
      const auto xs = spaced(rng, m, 0.2, 4.0);
      const auto ys = spaced(rng, m, 0.2, 4.0);
      const double c = rng.uniform(0.6, 4.0);
      std::vector<double> cx = xs, cy = ys;
      for (double& v : cx) v *= c;
      for (double& v : cy) v *= c;
      const double want = std::pow(c, -1.5 * m) * ssr_minor(p, xs, ys);
      CHECK(testing::rel_diff(ssr_minor(p, cx, cy), want) <= 1e-8);
    }
}

TEST_CASE("scan verdicts for totally positive kernels") {
  CHECK(ssr_scan(KernelSpec::exp_xy(Rectangle::square(-3, 3)), 4, 200, 7).verdict == SsrVerdict::ConsistentSTP);
  for (double b : {0.5, 1.0, 2.0}) {
    const auto r = ssr_scan(KernelSpec::power_sum(b, kPositive), 4, 200, 8);
    CHECK(r.verdict == SsrVerdict::ConsistentSTP);
    CHECK(r.total_violations() == 0);
  }
  for (double b : {0.5, 1.5, 3.0}) {
    const auto r = ssr_scan(KernelSpec::ultra(b), 4, 200, 9);
    CHECK(r.verdict == SsrVerdict::ConsistentSTP);
    CHECK(r.sign_pattern() == "++++");
  }
  for (double a : {-0.25, 0.0, 1.0, 2.0}) {
    const auto r = ssr_scan(KernelSpec::g2(a), 4, 200, 10);
    CHECK(r.total_violations() == 0);
    CHECK(r.verdict != SsrVerdict::Inconclusive);
  }
}

TEST_CASE("negative exponent ultraspherical kernel") {
  const auto r = ssr_scan(KernelSpec::ultra(-0.5), 5, 300, 11, PrecisionPolicy::extended(256));
  CHECK(r.total_violations() == 0);
  const bool alternating = r.verdict == SsrVerdict::ConsistentSSR && r.sign_pattern() == "+-+-+";
  CHECK((alternating || r.verdict == SsrVerdict::Inconclusive));
}

TEST_CASE("scan bookkeeping") {
  const auto k = KernelSpec::exp_xy(Rectangle::square(-2, 2));
  const auto r = ssr_scan(k, 3, 150, 12);
  REQUIRE(r.levels.size() == 3);
  for (const auto& l : r.levels) {
    CHECK(l.positives + l.negatives + l.indeterminates == l.trials);
    CHECK(l.violations == std::min(l.positives, l.negatives));
  }
  CHECK(r.kernel == k.describe());

  SUBCASE("same seed, same report; other seeds agree on the verdict") {
    const auto again = ssr_scan(k, 3, 150, 12);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(again.levels[i].positives == r.levels[i].positives);
      CHECK(again.levels[i].min_abs_det == r.levels[i].min_abs_det);
    }
    for (std::uint64_t s : {13u, 14u, 15u}) CHECK(ssr_scan(k, 3, 150, s).verdict == r.verdict);
  }
  SUBCASE("argument errors") {
    CHECK_THROWS_AS(ssr_scan(k, 7, 150, 1), Error);
    CHECK_THROWS_AS(ssr_scan(k, 0, 150, 1), Error);
    CHECK_THROWS_AS(ssr_scan(k, 3, 99, 1), Error);
    CHECK_NOTHROW(ssr_scan(k, 7, 100, 1, PrecisionPolicy::extended(128)));
    CHECK_THROWS_AS(ssr_scan(k, 9, 100, 1, PrecisionPolicy::extended(128)), Error);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(ssr_scan(KernelSpec::exp_xy({{0.0, inf}, {0.0, 1.0}}), 2, 100, 1), Error);
  }
}

TEST_CASE("factor invariance") {
  const auto base = KernelSpec::exp_xy(Rectangle::square(-2, 2));
  SUBCASE("positive factors keep the pattern") {
    const SignedFactor phi{[](double x) { return std::exp(x); }, 1, "exp"};
    const SignedFactor psi{[](double y) { return 2.0 + y * y; }, 1, "2+y^2"};
    const auto c = factor_invariance_check(base, phi, psi, 4, 150, 20);
    CHECK(c.consistent);
    CHECK(c.wrapped.sign_pattern() == "++++");
  }
  SUBCASE("phi = -1 flips odd orders") {
    const auto c = factor_invariance_check(base, SignedFactor::constant(-1.0), SignedFactor::constant(1.0), 4, 150, 21);
    CHECK(c.consistent);
    CHECK(c.wrapped.sign_pattern() == "-+-+");
    CHECK(c.wrapped.verdict == SsrVerdict::ConsistentSSR);
  }
  SUBCASE("two negative factors cancel") {
    const auto c = factor_invariance_check(base, SignedFactor::constant(-2.0), SignedFactor::constant(-0.5), 3, 150, 22);
    CHECK(c.consistent);
    CHECK(c.wrapped.sign_pattern() == "+++");
  }
  SUBCASE("wrapped minors are the base minors times the factor products") {
    const SignedFactor phi{[](double x) { return 1.0 + x * x; }, 1, "1+x^2"};
    const auto w = KernelSpec::factor_wrapped(base, phi, SignedFactor::constant(-3.0));
    const std::vector<double> xs{-1.0, 0.2, 1.5}, ys{-0.4, 0.3, 0.9};
    const double want = (2.0 * 1.04 * 3.25) * -27.0 * ssr_minor(base, xs, ys);
    CHECK(testing::rel_diff(ssr_minor(w, xs, ys), want) < 1e-12);
  }
  CHECK_THROWS_AS(KernelSpec::factor_wrapped(base, SignedFactor{nullptr, 1, "none"}, SignedFactor::constant(1.0)),
                  Error);
  CHECK_THROWS_AS(
      KernelSpec::factor_wrapped(base, SignedFactor{[](double) { return 1.0; }, 0, "zero"}, SignedFactor::constant(1.0)),
      Error);
}

TEST_CASE("composition of totally positive kernels") {
  const auto k = KernelSpec::exp_xy(Rectangle::square(-1, 1));
  const auto l = KernelSpec::power_sum(1.0, Rectangle::square(0.1, 3.0));
  std::vector<double> grid;
  for (int i = 0; i < 8; ++i) grid.push_back(0.2 + 0.35 * i);

  SUBCASE("the composed kernel is the grid sum") {
    const auto m = KernelSpec::composed(KernelSpec::exp_xy({{-1, 1}, {0.1, 3.0}}), l, grid);
    double want = 0.0;
    for (double z : grid) want += std::exp(0.3 * z) / (z + 1.2);
    CHECK(kernel_eval(m, 0.3, 1.2) == doctest::Approx(want));
  }
  SUBCASE("scan") {
    const auto r = composition_check(KernelSpec::exp_xy({{-1, 1}, {0.1, 3.0}}), l, grid, 3, 150, 30);
    CHECK(r.verdict == SsrVerdict::ConsistentSTP);
  }
  SUBCASE("errors") {
    // grid points must lie where both kernels are defined
    CHECK_THROWS_AS(KernelSpec::composed(k, l, {}), Error);
  }
}
