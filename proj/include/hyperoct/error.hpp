#pragma once

#include <stdexcept>
#include <string>

namespace hyperoct {

enum class Errc {
  ZeroEntry,
  NotAPermutation,
  LengthMismatch,
  RankMismatch,
  RankTooSmall,
  IndexOutOfRange,
  DigitOutOfRange,
  RankOutOfRange,
  RangeViolation,
  CeilingExceeded,
  BadClassIndex,
  RankTooLargeForOracle,
  ParseError,
};

const char* to_string(Errc code);

// All precondition failures raised by the library carry one of the codes
// above so callers (the CLI in particular) can map them to exit statuses.
class Error : public std::invalid_argument {
 public:
  Error(Errc code, const std::string& what)
      : std::invalid_argument(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hyperoct
