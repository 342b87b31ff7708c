#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbowlab {

// Exit codes: 0 pass/success, 1 usage or domain error, 2 mathematical
// negative (violation / counterexample), 3 budget exhausted without proof.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rainbowlab
