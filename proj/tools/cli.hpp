#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcw::cli {

enum Exit : int { Ok = 0, ParseFailure = 2, Undefined = 3, FuelInconclusive = 4, SuiteFailure = 5 };

// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Splits a --probes list at commas outside brackets and braces.
std::vector<std::string> split_probes(const std::string& text);

}  // namespace pcw::cli
