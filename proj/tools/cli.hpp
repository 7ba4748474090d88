// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stratagem::cli {

enum ExitCode : int {
    ok = 0,
    usage = 1,
    data_error = 2,
    internal_error = 3,
};

/// Entry point of the `stratagem` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stratagem::cli
