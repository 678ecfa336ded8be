#pragma once

#include <vector>

// Truncated power series in one variable. A series is its coefficient vector
// (index = power); every operation returns coefficients 0..N.
namespace ultra::series {

using Series = std::vector<double>;

Series truncate(const Series& a, unsigned N);
Series add(const Series& a, const Series& b, unsigned N);
Series scale(const Series& a, double s);
Series mul(const Series& a, const Series& b, unsigned N);

/// 1/a by Newton iteration g <- g (2 - a g) with doubling length.
/// Throws SeriesDivergence if a[0] == 0.
Series reciprocal(const Series& a, unsigned N);

/// sqrt(a) by Newton iteration s <- (s + a/s)/2 with doubling length.
/// Needs a[0] > 0.
Series sqrt(const Series& a, unsigned N);

/// a^s for real s via the recurrence from a g' = s a' g. Needs a[0] > 0.
Series pow(const Series& a, double s, unsigned N);

/// t d/dt
Series t_derivative(const Series& a);

}  // namespace ultra::series
