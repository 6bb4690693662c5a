#pragma once

#include <iosfwd>

#include "lensroots/error.hpp"

namespace lensroots {

/// 0 success, 2 input error, 3 not admissible, 4 uncertified count.
int exit_code_for(ErrorCode code);

/// Entry point of the `lensroots` executable; streams are injectable so the
/// subcommands can be driven from tests.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lensroots
