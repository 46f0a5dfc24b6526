#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symlab {

std::vector<std::string> demo_names();

/// Runs a named built-in reproduction and prints one pass/fail line per
/// checked statement. Returns 0 when every check passes, 2 otherwise.
int run_demo(const std::string& name, std::ostream& out);

}  // namespace symlab
