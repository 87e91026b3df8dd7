#include <cyclo/report.hpp>

#include <json.hpp>

#include <algorithm>

namespace cyclo {

std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not_applicable";
    }
    return "unknown";
}

std::string report_text(const VerificationReport& r) {
    std::string s = "[" + status_str(r.status) + "] " + r.claim_id + "  " + r.range +
                    "  (" + std::to_string(r.elapsed_ms) + " ms)";
    for (const auto& ce : r.counterexamples) {
        s += "\n  counterexample (";
        for (size_t i = 0; i < ce.params.size(); ++i)
            s += (i ? "," : "") + std::to_string(ce.params[i]);
        s += "): lhs = " + ce.lhs + ", rhs = " + ce.rhs;
    }
    return s;
}

std::string report_json(const VerificationReport& r, bool with_timing) {
    nlohmann::json j;
    j["claim_id"] = r.claim_id;
    j["range"] = r.range;
    j["status"] = status_str(r.status);
    j["elapsed_ms"] = with_timing ? r.elapsed_ms : 0;
    auto ces = nlohmann::json::array();
    for (const auto& ce : r.counterexamples) {
        nlohmann::json c;
        c["params"] = ce.params;
        c["lhs"] = ce.lhs;
        c["rhs"] = ce.rhs;
        ces.push_back(c);
    }
    j["counterexamples"] = ces;
    return j.dump(2);
}

VerificationReport merge_reports(const std::string& claim_id, const std::string& range,
                                 const std::vector<VerificationReport>& points) {
    VerificationReport out;
    out.claim_id = claim_id;
    out.range = range;
    bool any_applicable = false;
    for (const auto& p : points) {
        if (p.status != CheckStatus::not_applicable) any_applicable = true;
        out.counterexamples.insert(out.counterexamples.end(), p.counterexamples.begin(),
                                   p.counterexamples.end());
        out.elapsed_ms += p.elapsed_ms;
    }
    std::sort(out.counterexamples.begin(), out.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) { return a.params < b.params; });
    out.status = !out.counterexamples.empty() ? CheckStatus::fail
                 : any_applicable             ? CheckStatus::pass
                                              : CheckStatus::not_applicable;
    return out;
}

} // namespace cyclo
