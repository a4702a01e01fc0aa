#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

/* Verification suites behind the CLI `verify` subcommand. Each check id runs
 * a grid of independent points; every point yields one machine-readable
 * report. A `fail` report always carries a counterexample payload sufficient
 * to replay the check; `finding` marks outcomes that are informative rather
 * than asserted (expected strictness failures, conjecture scans).
 */

namespace kroncomb::verify {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, finding };
std::string_view status_name(Status s);

struct VerificationReport {
    std::string check_id;
    Json parameters;
    Status status = Status::pass;
    Json witness;
    std::int64_t elapsed_ms = 0;
    Json to_json() const;
};

struct GridOptions {
    std::optional<std::int64_t> l_min, l_max;
    std::optional<std::int64_t> m_min, m_max;
    std::optional<std::int64_t> n_min, n_max;
    std::optional<std::int64_t> r_max;
    double z = 1.5;
    int jobs = 1;
    // lifts the per-check size caps that keep run times at desk scale;
    // mathematical validity bounds (e.g. m >= 27 for the strict window of
    // the distinct-odd product) still apply
    bool no_guard = false;
};

const std::vector<std::string>& known_checks();

// Runs one suite over its default grid, overridden by the options. Points
// are evaluated concurrently when jobs > 1 but reported in deterministic
// grid order. Throws std::invalid_argument for an unknown check id.
std::vector<VerificationReport> run_check(const std::string& check_id, const GridOptions& opt);

// True when no report has status fail (findings are acceptable).
bool all_passed(const std::vector<VerificationReport>& reports);

std::string to_text_line(const VerificationReport& report);
std::string to_csv(const std::vector<VerificationReport>& reports);

}  // namespace kroncomb::verify
