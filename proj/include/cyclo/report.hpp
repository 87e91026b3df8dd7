#pragma once

#include <string>
#include <vector>

namespace cyclo {

enum class CheckStatus { pass, fail, not_applicable };

std::string status_str(CheckStatus s);

struct Counterexample {
    std::vector<long> params;
    std::string lhs;
    std::string rhs;

    bool operator==(const Counterexample&) const = default;
};

/// Outcome of a theorem check or a sweep of checks. status is fail iff
/// counterexamples is nonempty; counterexamples are ordered by params.
struct VerificationReport {
    std::string claim_id;
    std::string range;
    CheckStatus status = CheckStatus::pass;
    std::vector<Counterexample> counterexamples;
    long elapsed_ms = 0;

    bool failed() const { return status == CheckStatus::fail; }
};

/// One-line summary plus one line per counterexample.
std::string report_text(const VerificationReport& r);

/// Deterministic JSON rendering (keys sorted, rationals as strings).
std::string report_json(const VerificationReport& r, bool with_timing = true);

/// Combine single-point reports of one claim into a sweep report:
/// fail if any point failed, not_applicable if no point was in hypothesis.
VerificationReport merge_reports(const std::string& claim_id, const std::string& range,
                                 const std::vector<VerificationReport>& points);

} // namespace cyclo
