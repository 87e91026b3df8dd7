#include <cyclo/report.hpp>
#include <cyclo/verify.hpp>

#include <doctest.h>
#include <json.hpp>

using namespace cyclo;

TEST_CASE("status strings") {
    CHECK(status_str(CheckStatus::pass) == "pass");
    CHECK(status_str(CheckStatus::fail) == "fail");
    CHECK(status_str(CheckStatus::not_applicable) == "not_applicable");
}

TEST_CASE("merge_reports") {
    VerificationReport a{"c", "", CheckStatus::pass, {}, 3};
    VerificationReport b{"c", "", CheckStatus::fail, {{{7, 2}, "1", "2"}}, 4};
    VerificationReport na{"c", "", CheckStatus::not_applicable, {}, 0};

    auto merged = merge_reports("c", "range", {a, b});
    CHECK(merged.status == CheckStatus::fail);
    CHECK(merged.counterexamples.size() == 1);

    CHECK(merge_reports("c", "r", {a, na}).status == CheckStatus::pass);
    CHECK(merge_reports("c", "r", {na, na}).status == CheckStatus::not_applicable);
    CHECK(merge_reports("c", "r", {}).status == CheckStatus::not_applicable);

    // counterexamples sorted by parameter tuple
    VerificationReport c1{"c", "", CheckStatus::fail, {{{9, 1}, "a", "b"}}, 0};
    VerificationReport c2{"c", "", CheckStatus::fail, {{{2, 5}, "a", "b"}}, 0};
    auto m2 = merge_reports("c", "r", {c1, c2});
    CHECK(m2.counterexamples[0].params == std::vector<long>{2, 5});
    CHECK(m2.counterexamples[1].params == std::vector<long>{9, 1});
}

TEST_CASE("status fail iff counterexamples nonempty, across real sweeps") {
    LehmerTable t = build_lehmer_table(6, Route::partition);
    for (const auto& r : {sweep_golden_tables(t), sweep_route_agreement(t, 6),
                          sweep_series_identities(8), sweep_conjecture(t, 2)}) {
        CHECK((r.status == CheckStatus::fail) == !r.counterexamples.empty());
        CHECK(r.status == CheckStatus::pass);
    }
}

TEST_CASE("json rendering round-trips byte-identically") {
    VerificationReport r;
    r.claim_id = "lehmer-identity";
    r.range = "2 <= n <= 10";
    r.status = CheckStatus::fail;
    r.counterexamples.push_back({{5, 3}, "6", "13/2"});
    r.elapsed_ms = 12;

    std::string text = report_json(r);
    auto parsed = nlohmann::json::parse(text);
    CHECK(parsed.dump(2) == text);
    CHECK(parsed["claim_id"] == "lehmer-identity");
    CHECK(parsed["status"] == "fail");
    CHECK(parsed["counterexamples"][0]["lhs"] == "6");
    CHECK(parsed["counterexamples"][0]["params"] == nlohmann::json::array({5, 3}));
}

TEST_CASE("parallel and serial sweeps produce identical reports") {
    LehmerTable t = build_lehmer_table(6, Route::partition);
    SweepConfig serial{.n_min = 2, .n_max = 40, .k_max = 6, .m_max = 4, .jobs = 1};
    SweepConfig parallel = serial;
    parallel.jobs = 4;

    auto normalize = [](VerificationReport r) {
        r.elapsed_ms = 0; // timing is wall clock; everything else must match
        return report_json(r);
    };
    CHECK(normalize(sweep_lehmer(t, serial)) == normalize(sweep_lehmer(t, parallel)));
    CHECK(normalize(sweep_integrality(serial)) == normalize(sweep_integrality(parallel)));
    CHECK(normalize(sweep_ak(serial)) == normalize(sweep_ak(parallel)));
    CHECK(normalize(sweep_wexpansion(serial)) == normalize(sweep_wexpansion(parallel)));
    CHECK(normalize(sweep_wmodp(40, 1)) == normalize(sweep_wmodp(40, 4)));
}

TEST_CASE("fixtures json contains the golden tables") {
    LehmerTable t = build_lehmer_table(6, Route::partition);
    auto j = nlohmann::json::parse(fixtures_json(t));
    CHECK(j["k_max"] == 6);
    CHECK(j["f"]["2"] == "(1/3)*(3*x1^2 - 3*x1 + x2)");
    CHECK(j["s"]["1"] == "-x1");
    CHECK(j["omega"]["2"] == "-5*x2^2 + 5*x2 + x4");
}

TEST_CASE("mutation helper validates its input") {
    LehmerTable t = build_lehmer_table(4, Route::partition);
    CHECK_THROWS_AS(mutate_f_coefficient(t, {9, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(mutate_f_coefficient(t, {2, 50, 1}), std::domain_error);
    mutate_f_coefficient(t, {2, 0, 1});
    CHECK(!(t.f_polys[2] == f_poly_partition(2)));
}
