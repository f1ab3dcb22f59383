#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gapcert::cli {

/// Exit codes: 0 success, 1 a check failed (the mathematics says no), 2 the
/// input or the command line is malformed.
enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

/// Runs one command. args excludes the program name. Results go to out as
/// JSON (or plain text for `gen` and --plain); errors go to err as
/// {"error": ..., "stage": ...}.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace gapcert::cli
