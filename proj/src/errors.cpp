#include "pseudospec/errors.hpp"

namespace pseudospec {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kSpectrum: return "SpectrumError";
    case ErrorCode::kDomain: return "DomainError";
    case ErrorCode::kConfig: return "ConfigError";
    case ErrorCode::kSingular: return "SingularError";
    case ErrorCode::kConvergence: return "ConvergenceError";
    case ErrorCode::kZeroCoupling: return "ZeroCouplingError";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kEigenvalueLost: return "EigenvalueLost";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace pseudospec
