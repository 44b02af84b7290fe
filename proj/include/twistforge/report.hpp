#pragma once

#include "twistforge/presentation.hpp"
#include "twistforge/twist.hpp"

#include <iosfwd>

// nlohmann/json stays out of public headers; reports pass through as strings.
namespace twistforge::cli {

// Deterministic serialization: sorted keys, canonical scalar strings, newline
// terminated. Identical inputs give byte-identical files.
std::string twist_report_json(const twists::TwistReport &rep, bool with_timings);

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::string suite_report_json(const std::vector<SuiteResult> &results, unsigned long seed,
                              bool with_timings, long elapsed_ms);

void emit_report(const std::string &json_text, const std::string &path); // "" or "-" = stdout

// Presentation files (structured JSON): generator list with sorts and
// gradings, cartan basis, pairings, precedence, and the rule list.
std::string presentation_to_json(const ncalg::Presentation &p);
ncalg::Presentation presentation_from_json(const std::string &text);

} // namespace twistforge::cli
