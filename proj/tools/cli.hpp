// The legknot command line, callable in-process for tests.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace legknot::cli {

/// `args` excludes the program name. Exit codes: 0 success, 1 domain error,
/// 2 usage error. Results go to `out` (JSON or SVG), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Version of the JSON documents written by every command.
inline constexpr int kSchemaVersion = 1;

}  // namespace legknot::cli
