#pragma once

#include <string>
#include <vector>

namespace zetarec {

struct CheckResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

// The full verification battery (12 checks). Every tolerance is pinned here.
// Checks 7, 9 and 12 assert published targets that exact computation shows to
// be unattainable as stated; they report FAIL with the measured values.
std::vector<CheckResult> run_all_checks();

// True iff every check passed.
bool all_passed(const std::vector<CheckResult>& results);

} // namespace zetarec
