#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicircle {

/// Command dispatch used by the binary and by tests.
///
/// Exit codes: 0 success, 1 usage errors, 2 domain errors (the error is
/// written to `err` as a JSON object).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bicircle
