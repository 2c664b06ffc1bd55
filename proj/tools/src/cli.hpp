#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qform::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

/*
 * Runs one invocation of the qform tool. `args` excludes the program name.
 * Data goes to `out`, diagnostics and summaries to `err`. The truncation
 * default is taken from QFORM_N when -N is not given.
 */
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace qform::cli
