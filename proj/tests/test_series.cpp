#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ultra/error.hpp"
#include "ultra/polycore.hpp"
#include "ultra/series.hpp"

using namespace ultra;
namespace s = ultra::series;

namespace {

/// Binomial series coefficients of (1 + u)^p.
double binom(double p, unsigned k) {
  double c = 1.0;
  for (unsigned j = 0; j < k; ++j) c *= (p - j) / (j + 1.0);
  return c;
}

}  // namespace

TEST_CASE("basic ops") {
  CHECK(s::truncate({1, 2, 3}, 1) == s::Series{1, 2});
  CHECK(s::truncate({1}, 2) == s::Series{1, 0, 0});
  CHECK(s::add({1, 2}, {3}, 2) == s::Series{4, 2, 0});
  CHECK(s::scale({1, -2}, 3.0) == s::Series{3, -6});
  CHECK(s::mul({1, 1}, {1, 1}, 3) == s::Series{1, 2, 1, 0});
  CHECK(s::t_derivative({5, 1, 1, 1}) == s::Series{0, 1, 2, 3});
}

TEST_CASE("reciprocal") {
  const auto g = s::reciprocal({1.0, -1.0}, 10);
  for (double c : g) CHECK(c == doctest::Approx(1.0));
  const s::Series a{2.0, 0.5, -0.25, 1.0};
  const auto prod = s::mul(a, s::reciprocal(a, 20), 20);
  CHECK(prod[0] == doctest::Approx(1.0));
  for (std::size_t k = 1; k < prod.size(); ++k) CHECK(std::abs(prod[k]) < 1e-12);
  CHECK_THROWS_AS(s::reciprocal({0.0, 1.0}, 3), Error);
}

TEST_CASE("sqrt and pow against binomial series") {
  const auto r = s::sqrt({1.0, 1.0}, 12);
  for (unsigned k = 0; k <= 12; ++k) CHECK(r[k] == doctest::Approx(binom(0.5, k)).epsilon(1e-13));
  for (double p : {-2.5, -0.5, 0.3, 1.0, 3.0}) {
    const auto q = s::pow({1.0, 1.0}, p, 15);
    for (unsigned k = 0; k <= 15; ++k) CHECK(q[k] == doctest::Approx(binom(p, k)).epsilon(1e-12));
  }
  const s::Series a{4.0, -1.0, 0.5};
  const auto sq = s::sqrt(a, 16);
  const auto back = s::mul(sq, sq, 16);
  for (unsigned k = 0; k <= 16; ++k) CHECK(back[k] == doctest::Approx(k < 3 ? a[k] : 0.0).epsilon(1e-12));
  const auto p1 = s::pow(a, 0.5, 16);
  for (unsigned k = 0; k <= 16; ++k) CHECK(p1[k] == doctest::Approx(sq[k]).epsilon(1e-12));
  CHECK_THROWS_AS(s::sqrt({-1.0, 1.0}, 3), Error);
  CHECK_THROWS_AS(s::pow({0.0, 1.0}, 0.5, 3), Error);
}

TEST_CASE("Legendre generating function via series ops") {
  // (1 - 2xt + t^2)^{-1/2} at x = 1 is 1/(1 - t)
  const auto g = s::pow({1.0, -2.0, 1.0}, -0.5, 8);
  for (double c : g) CHECK(c == doctest::Approx(1.0).epsilon(1e-14));
}
