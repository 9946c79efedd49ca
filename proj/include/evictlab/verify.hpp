#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evictlab {

std::vector<std::string> verify_suite_names();

/// Runs one named suite (or "all"), printing one ok/FAIL line per check.
/// Returns the number of failed checks. Unknown names throw ContractError.
int run_verify_suite(const std::string& name, std::ostream& out);

}  // namespace evictlab
