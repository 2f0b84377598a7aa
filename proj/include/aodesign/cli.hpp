/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aodesign::cli {

enum ExitStatus : int { kSuccess = 0, kUserError = 1, kInternalError = 2 };

/// Runs one subcommand. `args` excludes the program name. Artifacts go to
/// files or `out`; diagnostics and errors go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace aodesign::cli
