#include "ultra/series.hpp"

#include <algorithm>
#include <cmath>

#include "ultra/error.hpp"

namespace ultra::series {

Series truncate(const Series& a, unsigned N) {
  Series r(N + 1, 0.0);
  std::copy_n(a.begin(), std::min<std::size_t>(a.size(), N + 1), r.begin());
  return r;
}

Series add(const Series& a, const Series& b, unsigned N) {
  Series r = truncate(a, N);
  for (std::size_t k = 0; k < std::min<std::size_t>(b.size(), N + 1); ++k) r[k] += b[k];
  return r;
}

Series scale(const Series& a, double s) {
  Series r = a;
  for (double& v : r) v *= s;
  return r;
}

Series mul(const Series& a, const Series& b, unsigned N) {
  Series r(N + 1, 0.0);
  for (std::size_t i = 0; i < a.size() && i <= N; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= N; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series reciprocal(const Series& a, unsigned N) {
  if (a.empty() || a[0] == 0.0) fail(ErrorCode::SeriesDivergence, "reciprocal of a series with zero constant term");
  Series g{1.0 / a[0]};
  for (unsigned len = 1; len <= N;) {
    len = std::min(2 * len, N + 1);
    const unsigned n = len - 1;
    // g <- g (2 - a g)
    Series ag = mul(a, g, n);
    for (double& v : ag) v = -v;
    ag[0] += 2.0;
    g = mul(g, ag, n);
    if (len == N + 1) break;
  }
  return truncate(g, N);
}

Series sqrt(const Series& a, unsigned N) {
  if (a.empty() || !(a[0] > 0.0))
    fail(ErrorCode::SeriesDivergence, "square root needs a positive constant term");
  Series s{std::sqrt(a[0])};
  for (unsigned len = 1; len <= N;) {
    len = std::min(2 * len, N + 1);
    const unsigned n = len - 1;
    const Series q = mul(truncate(a, n), reciprocal(truncate(s, n), n), n);
    s = scale(add(truncate(s, n), q, n), 0.5);
    if (len == N + 1) break;
  }
  return truncate(s, N);
}

Series pow(const Series& a, double s, unsigned N) {
  if (a.empty() || !(a[0] > 0.0))
    fail(ErrorCode::SeriesDivergence, "real power needs a positive constant term");
  const Series f = truncate(a, N);
  Series g(N + 1, 0.0);
  g[0] = std::pow(f[0], s);
  // n f_0 g_n = sum_{k=1}^{n} ((s + 1) k - n) f_k g_{n-k}
  for (unsigned n = 1; n <= N; ++n) {
    double acc = 0.0;
    for (unsigned k = 1; k <= n; ++k) {
      if (f[k] == 0.0) continue;
      acc += ((s + 1.0) * k - n) * f[k] * g[n - k];
    }
    g[n] = acc / (n * f[0]);
  }
  return g;
}

Series t_derivative(const Series& a) {
  Series r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] *= static_cast<double>(k);
  return r;
}

}  // namespace ultra::series
