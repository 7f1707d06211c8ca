#pragma once

#include <ostream>
#include <span>
#include <string>

namespace selfref {

/// Entry point of the `selfref` tool. `args[0]` is the program name.
/// Returns 0 (certificate / all expectations met), 2 (conflicts / unmet
/// expectations) or 1 (usage or input error).
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace selfref
