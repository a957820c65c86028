#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaincode::cli {

/// Runs one command line (without the program name). Returns 0 on success, 1 on a
/// domain error (its name is written to `err`) or a failed verification, 2 on a usage
/// error. A value of `-` reads that payload from `in`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chaincode::cli
