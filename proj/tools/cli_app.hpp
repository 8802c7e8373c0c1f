// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sstkf::cli {

/// Exit codes: 0 success, 1 a validator or identity check failed, 2 bad
/// arguments or a runtime error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sstkf::cli
