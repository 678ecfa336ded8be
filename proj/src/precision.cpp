#include "ultra/precision.hpp"

#include <cmath>

#include "ultra/error.hpp"

namespace ultra {

PrecisionPolicy PrecisionPolicy::double_precision() { return {}; }

PrecisionPolicy PrecisionPolicy::extended(int bits) {
  PrecisionPolicy p;
  p.mode = Mode::Extended;
  p.bits = bits;
  p.tau_det = std::ldexp(1.0, -bits / 2);
  p.validate();
  return p;
}

PrecisionPolicy PrecisionPolicy::parse(const std::string& text) {
  if (text == "double") return double_precision();
  const std::string prefix = "extended:";
  if (text.rfind(prefix, 0) == 0) {
    int bits = 0;
    try {
      bits = std::stoi(text.substr(prefix.size()));
    } catch (const std::exception&) {
      fail(ErrorCode::BadParameter, "cannot parse precision '" + text + "'");
    }
    return extended(bits);
  }
  fail(ErrorCode::BadParameter, "precision must be 'double' or 'extended:<bits>', got '" + text + "'");
}

std::string PrecisionPolicy::to_string() const {
  return is_extended() ? "extended:" + std::to_string(bits) : "double";
}

void PrecisionPolicy::validate() const {
  if (!(tau_trim > 0.0) || !(tau_root > 0.0) || !(tau_det > 0.0))
    fail(ErrorCode::BadParameter, "tolerances must be strictly positive");
  if (is_extended() && bits < 64)
    fail(ErrorCode::BadParameter, "extended precision needs at least 64 bits");
}

ScopedPrecision::ScopedPrecision(int bits) : saved_digits10_(Extended::default_precision()) {
  // digits10 such that the backend allocates at least `bits` mantissa bits
  const auto digits10 = static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
  Extended::default_precision(digits10);
}

ScopedPrecision::~ScopedPrecision() { Extended::default_precision(saved_digits10_); }

}  // namespace ultra
