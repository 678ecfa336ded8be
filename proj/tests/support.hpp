#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "ultra/polycore.hpp"
#include "ultra/random.hpp"

namespace testing {

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline std::vector<double> sorted_uniform(ultra::Rng& rng, int n, double lo, double hi) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = rng.uniform(lo, hi);
  std::sort(v.begin(), v.end());
  return v;
}

/// Symmetric Hausdorff distance between computed roots and known real roots.
inline double hausdorff(const std::vector<std::complex<double>>& got, const std::vector<double>& want) {
  double d = 0.0;
  for (const auto& z : got) {
    double best = INFINITY;
    for (double w : want) best = std::min(best, std::abs(z - w));
    d = std::max(d, best);
  }
  for (double w : want) {
    double best = INFINITY;
    for (const auto& z : got) best = std::min(best, std::abs(z - w));
    d = std::max(d, best);
  }
  return d;
}

inline double max_coeff_diff(const ultra::Poly& a, const ultra::Poly& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    const double x = k < a.size() ? a[k] : 0.0;
    const double y = k < b.size() ? b[k] : 0.0;
    d = std::max(d, std::abs(x - y));
  }
  return d;
}

}  // namespace testing
