#include "ultra/error.hpp"

namespace ultra {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::SeriesDivergence: return "SeriesDivergence";
    case ErrorCode::SpecIncomplete: return "SpecIncomplete";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::BadTuple: return "BadTuple";
    case ErrorCode::BadNodes: return "BadNodes";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ultra
