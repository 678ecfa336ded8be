#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ultra {

enum class ErrorCode {
  BadParameter,
  DegreeZero,
  BadInterval,
  SeriesDivergence,
  SpecIncomplete,
  OutOfDomain,
  BadTuple,
  BadNodes,
  SingularSystem,
  QuadratureFailure,
  IoFailure,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace ultra
