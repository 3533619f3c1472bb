#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pick3d {

/// Runs the full command-line surface against the given streams.
/// Exit codes: 0 success, 1 input/usage error, 2 domain-degenerate case
/// (DegenerateBasis, GenerationFailed). Never throws on malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pick3d
