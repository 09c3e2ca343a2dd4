#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace medgeo {

/// Runs the command-line front end. Exit codes: 0 = computed (the verdict
/// itself may be negative), 1 = invalid input, 2 = cap exceeded,
/// 3 = internal verification failure (always a bug).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace medgeo
