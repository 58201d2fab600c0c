#include "hyperoct/error.hpp"

namespace hyperoct {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::ZeroEntry: return "ZeroEntry";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DigitOutOfRange: return "DigitOutOfRange";
    case Errc::RankOutOfRange: return "RankOutOfRange";
    case Errc::RangeViolation: return "RangeViolation";
    case Errc::CeilingExceeded: return "CeilingExceeded";
    case Errc::BadClassIndex: return "BadClassIndex";
    case Errc::RankTooLargeForOracle: return "RankTooLargeForOracle";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hyperoct
