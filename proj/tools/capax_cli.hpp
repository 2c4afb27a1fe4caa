#pragma once

/// Command-line surface: capacity, spectrum, kset, ratio, toric, search,
/// verify. One JSON document (default) or CSV on stdout per invocation.
/// Exit codes: 0 success (and, for verify, claim holds), 1 domain error or
/// failed claim, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace capax::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace capax::cli
