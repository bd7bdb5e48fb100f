#pragma once

// Command-line front end. Exit codes: 0 success, 1 parse error, 2 domain
// error, 3 verification failure.

#include <ostream>
#include <string>
#include <vector>

namespace wsys {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerify = 3;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsys
