#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/enumerate.hpp"
#include "hyperoct/report.hpp"

namespace hyperoct {

/// Named identity checks: symmetry, recurrence, sliding, totals, equidist,
/// bijection, relations, classes, knuth-netto, gf.
const std::vector<std::string>& check_names();

/// Throws Error(RangeViolation) when n is outside the check's range and
/// Error(ParseError) for an unknown name.
void validate_check(std::string_view name, int n, const EnumerationOptions& options);

VerificationReport run_check(std::string_view name, int n, const EnumerationOptions& options = {});

}  // namespace hyperoct
