#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qpcli {

struct CheckTally {
    std::string name;
    int passed = 0;
    int total = 0;
    std::vector<std::string> failures;

    bool ok() const { return passed == total; }
};

struct VerifyOptions {
    std::string suite = "all";
    int rank = 3;
    int order = 8;
    int jobs = 1;
};

// Runs the requested suite(s), prints one line per identity and returns
// false if any check failed. Unknown suite names throw std::invalid_argument.
bool run_verify(const VerifyOptions& opt, std::ostream& out);

const std::vector<std::string>& suite_names();

}  // namespace qpcli
