#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>

namespace ultra {

/// Runtime-precision MPFR float. Expression templates are disabled so that
/// generic code can treat it like a plain arithmetic type.
using Extended = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

struct PrecisionPolicy {
  enum class Mode { Double, Extended };

  Mode mode = Mode::Double;
  int bits = 53;
  double tau_trim = 1e-12;
  double tau_root = 1e-9;
  double tau_det = 1e-10;

  static PrecisionPolicy double_precision();
  /// Extended mode with the given mantissa size; tau_det shrinks with bits.
  static PrecisionPolicy extended(int bits);
  /// Accepts "double" or "extended:<bits>".
  static PrecisionPolicy parse(const std::string& text);

  bool is_extended() const { return mode == Mode::Extended; }
  std::string to_string() const;
  void validate() const;
};

/// Sets the MPFR working precision for the current scope. The backend's
/// default precision is process-global, so scopes must not interleave
/// across threads with different bit counts.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(int bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_digits10_;
};

inline double to_double(double v) { return v; }
inline double to_double(const Extended& v) { return v.convert_to<double>(); }

}  // namespace ultra
