#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aho2d/rational.hpp"

namespace aho::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kScopeRefusal = 3,
  kNumericalFailure = 4,
};

/// Runs one aho2d invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Decimal text when the denominator divides a power of ten, p/q otherwise.
std::string decimal_text(const Rational& value);

}  // namespace aho::cli
