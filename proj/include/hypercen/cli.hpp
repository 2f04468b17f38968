#pragma once

#include <string>
#include <vector>

namespace hypercen::cli {

// Runs one subcommand. Exit codes: 0 success, 1 usage error, 2 domain error
// (pole, series divergence, parse or I/O failure) with a machine-readable
// `error_code=...` line on standard error.
int dispatch(const std::vector<std::string>& args);

} // namespace hypercen::cli
