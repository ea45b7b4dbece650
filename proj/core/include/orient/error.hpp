#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

enum class ErrorCode {
  kInvalidInput,
  kPrecondition,
  kInfeasible,
  kSumMismatch,
  kNonIntegral,
  kInsufficientConnectivity,
  kBudgetExceeded,
  kSearchExhausted,
  kIndeterminate,
  kStageFailure,
  kInternal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Which of the two out-degree inequalities a witness set violates.
enum class ViolatedBound { kNone, kUpper, kLower };

// Raised by the constructive solvers when no orientation exists; carries the
// vertex set S whose inequality fails.
class InfeasibleError : public Error {
 public:
  InfeasibleError(VertexSet witness, ViolatedBound bound, const std::string& what)
      : Error(ErrorCode::kInfeasible, what),
        witness_(std::move(witness)),
        bound_(bound) {}

  const VertexSet& witness() const noexcept { return witness_; }
  ViolatedBound bound() const noexcept { return bound_; }

 private:
  VertexSet witness_;
  ViolatedBound bound_;
};

}  // namespace orient
