#pragma once

#include "twistforge/report.hpp"

#include <iosfwd>

namespace twistforge::cli {

struct AcceptanceOptions {
    unsigned long seed = 20240809;
};

// The acceptance battery: one result per criterion, with pass/fail and a
// one-line detail. Progress lines go to `progress` as criteria finish.
std::vector<SuiteResult> run_acceptance(std::ostream &progress, const AcceptanceOptions &opts);

} // namespace twistforge::cli
