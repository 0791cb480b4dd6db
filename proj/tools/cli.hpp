#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pythia::cli {

// Exit codes: 0 success, 1 usage/domain/overflow error, 2 a verification
// sweep found counterexamples.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pythia::cli
