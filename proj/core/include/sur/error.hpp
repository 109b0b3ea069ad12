#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sur {

enum class ErrorCode {
  kDimensionMismatch,
  kInvalidArgument,    // violated precondition
  kTrivialBicoloring,  // all-plus or all-minus coloring where a nontrivial one is required
  kCapExceeded,        // enumeration would exceed the configured cap
  kInfeasible,         // no candidate can represent some bicoloring
  kNoGroupFound,       // biased sampler tested every group without success
  kPoolShortfall,      // biased sampler kept fewer than t candidates
  kNotFound,           // randomized search exhausted its restarts
  kParse,
};

std::string_view to_string(ErrorCode code);

// Domain error. Every failure raised by the library is one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sur
