#pragma once

// Command-line front end: subcommands audit / kostka / zoo / microstates /
// fock / tensor-lab / reproduce, JSON config and report formats, aligned
// plain-text tables, CSV, and golden-table regression via `reproduce`.
//
// Exit codes: 0 success, 1 golden-table mismatch in reproduce mode, 2 input
// error (bad flags, malformed config, unsupported family parameters).

#include <iosfwd>
#include <string>
#include <vector>

#include "exstat/audit.hpp"

namespace exstat::cli {

// Runs one CLI invocation in-process.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Machine-readable verdict reports.  to-JSON then from-JSON is the identity
// on every field (labels, sides, exact coefficients, violations).
std::string verdicts_to_json(const std::vector<AuditVerdict>& verdicts);
std::vector<AuditVerdict> verdicts_from_json(const std::string& text);

// The golden table ids `reproduce` knows, in canonical order.
std::vector<std::string> golden_ids();

// Regenerates the named golden table as text (what `reproduce --emit`
// prints); throws std::invalid_argument for an unknown id.
std::string generate_golden(const std::string& id);

}  // namespace exstat::cli
