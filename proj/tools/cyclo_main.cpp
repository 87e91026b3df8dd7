// cyclo - exact computation and verification of cyclotomic derivative
// identities, totient polynomials and their congruences.
#include <cyclo/cyclotomic.hpp>
#include <cyclo/lehmer.hpp>
#include <cyclo/numtheory.hpp>
#include <cyclo/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace cyclo;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct VerifyOptions {
    SweepConfig cfg;
    bool json = false;
    std::string mutate; // "K:IDX[:DELTA]", test hook
};

void add_sweep_flags(CLI::App* cmd, VerifyOptions& opt, long n_max_default, unsigned k_max_default,
                     unsigned m_max_default) {
    opt.cfg.n_min = 1; // each sweep clamps to its own domain
    opt.cfg.n_max = n_max_default;
    opt.cfg.k_max = k_max_default;
    opt.cfg.m_max = m_max_default;
    opt.cfg.jobs = default_jobs();
    cmd->add_option("--n-min", opt.cfg.n_min, "lower end of the n range");
    cmd->add_option("--n-max", opt.cfg.n_max, "upper end of the n range");
    cmd->add_option("--k-max", opt.cfg.k_max, "largest derivative/index order k");
    cmd->add_option("--m-max", opt.cfg.m_max, "largest omega index m");
    cmd->add_option("--jobs", opt.cfg.jobs, "worker threads (default: CYCLO_JOBS or 1)");
    cmd->add_flag("--json", opt.json, "emit the report as JSON");
    cmd->add_option("--mutate-fk", opt.mutate, "testing hook: perturb F_K (format K:IDX[:DELTA])")
        ->group(""); // hidden
}

std::optional<Mutation> parse_mutation(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    Mutation m;
    size_t a = spec.find(':');
    if (a == std::string::npos) throw std::domain_error("--mutate-fk expects K:IDX[:DELTA]");
    size_t b = spec.find(':', a + 1);
    m.k = std::stoul(spec.substr(0, a));
    m.term_index = std::stoul(spec.substr(a + 1, b == std::string::npos ? b : b - a - 1));
    if (b != std::string::npos) m.delta = std::stol(spec.substr(b + 1));
    if (m.delta == 0) throw std::domain_error("--mutate-fk delta must be nonzero");
    return m;
}

int print_reports(const std::vector<VerificationReport>& reports, bool json) {
    if (json) {
        if (reports.size() == 1) {
            std::cout << report_json(reports[0]) << "\n";
        } else {
            auto arr = nlohmann::json::array();
            for (const auto& r : reports) arr.push_back(nlohmann::json::parse(report_json(r)));
            std::cout << arr.dump(2) << "\n";
        }
    } else {
        for (const auto& r : reports) std::cout << report_text(r) << "\n";
    }
    for (const auto& r : reports)
        if (r.failed()) return kExitCounterexample;
    return kExitPass;
}

LehmerTable table_for(const VerifyOptions& opt, unsigned k_max) {
    LehmerTable t = build_lehmer_table(k_max, Route::partition);
    if (auto m = parse_mutation(opt.mutate)) mutate_f_coefficient(t, *m);
    return t;
}

int run_verify(const std::string& claim, const VerifyOptions& opt) {
    opt.cfg.validate();
    std::vector<VerificationReport> reports;
    if (claim == "lehmer") {
        LehmerTable t = table_for(opt, opt.cfg.k_max);
        reports.push_back(sweep_lehmer(t, opt.cfg));
    } else if (claim == "conjecture") {
        LehmerTable t = table_for(opt, 2 * opt.cfg.k_max + 1);
        reports.push_back(sweep_conjecture(t, opt.cfg.k_max));
    } else if (claim == "integrality") {
        reports.push_back(sweep_integrality(opt.cfg));
    } else if (claim == "ak") {
        reports.push_back(sweep_ak(opt.cfg));
    } else if (claim == "wmodp") {
        reports.push_back(sweep_wmodp(opt.cfg.n_max, opt.cfg.jobs));
    } else if (claim == "wexpansion") {
        reports.push_back(sweep_wexpansion(opt.cfg));
    } else {
        throw std::domain_error("unknown claim '" + claim +
                                "' (expected lehmer|conjecture|integrality|ak|wmodp|wexpansion)");
    }
    return print_reports(reports, opt.json);
}

int run_selftest(const VerifyOptions& opt, long ak_n_max) {
    opt.cfg.validate();
    // the conjecture range needs F_{2k+1} up to k = 6 by default
    unsigned table_k = std::max(opt.cfg.k_max, 13u);
    LehmerTable t = table_for(opt, table_k);

    std::vector<VerificationReport> reports;
    reports.push_back(sweep_golden_tables(t));
    reports.push_back(sweep_series_identities(12));
    reports.push_back(sweep_route_agreement(t, opt.cfg.k_max));
    reports.push_back(sweep_conjecture(t, (table_k - 1) / 2));
    reports.push_back(sweep_lehmer(t, opt.cfg));
    reports.push_back(sweep_integrality(opt.cfg));
    reports.push_back(sweep_chebyshev_structure(opt.cfg));
    reports.push_back(sweep_wmodp(opt.cfg.n_max, opt.cfg.jobs));
    reports.push_back(sweep_wexpansion(opt.cfg));
    SweepConfig ak = opt.cfg;
    ak.n_max = ak_n_max;
    ak.k_max = std::min(opt.cfg.k_max, 6u);
    reports.push_back(sweep_ak(ak));
    return print_reports(reports, opt.json);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cyclotomic/totient polynomial computations and theorem verification"};
    app.require_subcommand(0, 1);

    std::string emit_fixtures_path;
    unsigned fixtures_k_max = 8;
    app.add_option("--emit-fixtures", emit_fixtures_path,
                   "write the s/F/Omega tables as JSON to PATH and exit");
    app.add_option("--fixtures-k-max", fixtures_k_max, "table size for --emit-fixtures");

    long arg_n = 1, arg_n2 = 1;
    unsigned arg_k = 0, arg_m = 1;
    std::string fk_route = "partition";

    auto* cmd_poly = app.add_subcommand("poly", "print the n-th cyclotomic polynomial");
    cmd_poly->add_option("n", arg_n, "index n >= 1")->required();

    auto* cmd_deriv = app.add_subcommand("deriv", "print Phi_n^(k)(1)");
    cmd_deriv->add_option("n", arg_n, "index n >= 1")->required();
    cmd_deriv->add_option("k", arg_k, "derivative order")->required();

    auto* cmd_ratio = app.add_subcommand("ratio", "print Phi_n^(k)(1)/Phi_n(1)");
    cmd_ratio->add_option("n", arg_n, "index n >= 2")->required();
    cmd_ratio->add_option("k", arg_k, "derivative order")->required();

    auto* cmd_sk = app.add_subcommand("sk", "print s_k");
    cmd_sk->add_option("k", arg_k, "index k >= 1")->required();

    auto* cmd_fk = app.add_subcommand("fk", "print F_k");
    cmd_fk->add_option("k", arg_k, "index k >= 0")->required();
    cmd_fk->add_option("--route", fk_route, "construction route: partition|series|reconstruct")
        ->check(CLI::IsMember({"partition", "series", "reconstruct"}));

    auto* cmd_omega = app.add_subcommand("omega", "print Omega_m");
    cmd_omega->add_option("m", arg_m, "index m >= 1")->required();

    auto* cmd_vn = app.add_subcommand("vn", "print V_n");
    cmd_vn->add_option("n", arg_n, "index n >= 1")->required();

    auto* cmd_wn = app.add_subcommand("wn", "print W_n");
    cmd_wn->add_option("n", arg_n, "index n >= 1")->required();

    auto* cmd_fkn = app.add_subcommand("fkn", "print F_{k,n}(x) with its integrality flag");
    cmd_fkn->add_option("k", arg_k, "index k >= 1")->required();
    cmd_fkn->add_option("n", arg_n, "index n >= 3")->required();

    auto* cmd_totient = app.add_subcommand("totient", "print the Jordan totient J_k(n)");
    cmd_totient->add_option("k", arg_k, "order k >= 1")->required();
    cmd_totient->add_option("n", arg_n2, "argument n >= 1")->required();

    VerifyOptions vopt;
    std::string claim;
    auto* cmd_verify = app.add_subcommand("verify", "sweep one claim over a range");
    cmd_verify->add_option("claim", claim, "lehmer|conjecture|integrality|ak|wmodp|wexpansion")
        ->required();
    add_sweep_flags(cmd_verify, vopt, 0, 0, 0); // real defaults set after parsing the claim

    VerifyOptions sopt;
    long ak_n_max = 500;
    auto* cmd_selftest = app.add_subcommand("selftest", "run the full verification suite");
    add_sweep_flags(cmd_selftest, sopt, 200, 12, 8);
    cmd_selftest->add_option("--ak-n-max", ak_n_max, "n cap for the odd-derivative congruence sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (!emit_fixtures_path.empty()) {
            LehmerTable t = build_lehmer_table(fixtures_k_max, Route::partition);
            std::ofstream out(emit_fixtures_path);
            if (!out) throw std::domain_error("cannot write " + emit_fixtures_path);
            out << fixtures_json(t) << "\n";
            return kExitPass;
        }
        if (cmd_poly->parsed()) {
            std::cout << cyclotomic_poly(arg_n)->poly.str() << "\n";
        } else if (cmd_deriv->parsed()) {
            std::cout << int_str(deriv_at_1(arg_n, arg_k)) << "\n";
        } else if (cmd_ratio->parsed()) {
            std::cout << rat_str(deriv_ratio(arg_n, arg_k)) << "\n";
        } else if (cmd_sk->parsed()) {
            std::cout << s_poly(arg_k).str() << "\n";
        } else if (cmd_fk->parsed()) {
            MultiPoly f;
            if (fk_route == "partition") f = f_poly_partition(arg_k);
            else if (fk_route == "series") f = f_polys_series(std::max(arg_k, 1u))[arg_k];
            else f = f_poly_reconstruct(arg_k);
            std::cout << f.str() << "\n";
        } else if (cmd_omega->parsed()) {
            std::cout << omega_poly(arg_m).str() << "\n";
        } else if (cmd_vn->parsed()) {
            std::cout << v_poly(arg_n).str() << "\n";
        } else if (cmd_wn->parsed()) {
            std::cout << w_poly(arg_n).str() << "\n";
        } else if (cmd_fkn->parsed()) {
            UniPoly f = f_kn_poly(arg_k, arg_n);
            std::cout << f.str() << " [" << (f.is_integral() ? "integral" : "non-integral")
                      << "]\n";
        } else if (cmd_totient->parsed()) {
            std::cout << int_str(jordan_totient(arg_k, arg_n2)) << "\n";
        } else if (cmd_verify->parsed()) {
            // per-claim defaults where flags were not given
            if (vopt.cfg.n_max == 0) vopt.cfg.n_max = (claim == "ak") ? 500 : 200;
            if (vopt.cfg.k_max == 0) vopt.cfg.k_max = (claim == "ak" || claim == "conjecture") ? 6 : 12;
            if (vopt.cfg.m_max == 0) vopt.cfg.m_max = 8;
            return run_verify(claim, vopt);
        } else if (cmd_selftest->parsed()) {
            return run_selftest(sopt, ak_n_max);
        } else {
            std::cerr << app.help() << "\n";
            return kExitUsage;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitPass;
}
