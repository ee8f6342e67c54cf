#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace l2lab {

enum class ErrorCode {
  MalformedInput,
  SimplexNotPresent,
  VertexNotPresent,
  NotAnEdge,
  NotASubcomplex,
  NotACone,
  NotFlag,
  NotNested,
  KNotInStarOfVertex,
  SizeLimitExceeded,
  UnknownCatalogName,
  StepEdgeMissing,
  TargetMismatch,
  InvalidQuotient,
  RankTooLarge,
  Disconnected,
  MonotonicityViolated,
  InconsistentChain,
  NotTrivalentEligible,
  HypothesisViolated,
  MissingArtifacts,
};

std::string_view error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace l2lab
