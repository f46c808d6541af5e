#pragma once

#include <stdexcept>
#include <string>

namespace pseudospec {

/// Status codes shared by the C++ exceptions and the C API.
enum class ErrorCode : int {
  kOk = 0,
  kSpectrum = 1,
  kDomain = 2,
  kConfig = 3,
  kSingular = 4,
  kConvergence = 5,
  kZeroCoupling = 6,
  kNoConvergence = 7,
  kEigenvalueLost = 8,
  kIo = 9,
  kInternal = 10,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define PSEUDOSPEC_DEFINE_ERROR(Name, Code)                                 \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {} \
  };

/// z lies on (or within tolerance of) one of the rays [0,inf) +- i.
PSEUDOSPEC_DEFINE_ERROR(SpectrumError, kSpectrum)
PSEUDOSPEC_DEFINE_ERROR(DomainError, kDomain)
PSEUDOSPEC_DEFINE_ERROR(ConfigError, kConfig)
PSEUDOSPEC_DEFINE_ERROR(SingularError, kSingular)
PSEUDOSPEC_DEFINE_ERROR(ConvergenceError, kConvergence)
PSEUDOSPEC_DEFINE_ERROR(ZeroCouplingError, kZeroCoupling)
PSEUDOSPEC_DEFINE_ERROR(NoConvergence, kNoConvergence)
PSEUDOSPEC_DEFINE_ERROR(EigenvalueLost, kEigenvalueLost)
PSEUDOSPEC_DEFINE_ERROR(IoError, kIo)

#undef PSEUDOSPEC_DEFINE_ERROR

}  // namespace pseudospec
