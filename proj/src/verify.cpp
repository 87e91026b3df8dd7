#include <cyclo/verify.hpp>

#include <cyclo/cyclotomic.hpp>
#include <cyclo/numtheory.hpp>
#include <cyclo/series.hpp>

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

namespace cyclo {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

/// Runs fn(0..count-1) on `jobs` threads; results land in task order, so the
/// merged output is identical for any job count.
std::vector<VerificationReport> parallel_points(
    size_t count, unsigned jobs, const std::function<VerificationReport(size_t)>& fn) {
    std::vector<VerificationReport> results(count);
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    unsigned nthreads = std::min<size_t>(jobs, count);
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                results[i] = fn(i);
        });
    for (auto& th : pool) th.join();
    return results;
}

VerificationReport finalize(VerificationReport r, Clock::time_point t0) {
    r.elapsed_ms = ms_since(t0);
    return r;
}

} // namespace

void SweepConfig::validate() const {
    if (n_min < 1 || n_max < n_min) throw std::domain_error("sweep range requires 1 <= n_min <= n_max");
    if (k_max < 1 || m_max < 1 || jobs < 1)
        throw std::domain_error("sweep caps and jobs must be >= 1");
}

unsigned default_jobs() {
    if (const char* env = std::getenv("CYCLO_JOBS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

void mutate_f_coefficient(LehmerTable& table, const Mutation& m) {
    if (m.k >= table.f_polys.size())
        throw std::domain_error("mutation index k exceeds the table");
    MultiPoly& f = table.f_polys[m.k];
    if (m.term_index >= f.term_count())
        throw std::domain_error("mutation term index exceeds the term count of F_k");
    auto it = f.terms().begin();
    std::advance(it, m.term_index);
    Monomial key = it->first;
    f.add_term(key, rat(m.delta));
}

// ---- golden tables ----------------------------------------------------------

namespace {

// canonical renderings of the classical s_k / F_k / Omega_m tables
const std::vector<std::pair<unsigned, const char*>> golden_s = {
    {1, "-x1"},
    {2, "(1/3)*(3*x1 - x2)"},
    {3, "(-1/2)*(2*x1 - x2)"},
    {4, "(1/90)*(90*x1 - 55*x2 + x4)"},
    {5, "(-1/36)*(36*x1 - 25*x2 + x4)"},
};

const std::vector<std::pair<unsigned, const char*>> golden_f = {
    {1, "x1"},
    {2, "(1/3)*(3*x1^2 - 3*x1 + x2)"},
    {3, "x1^3 - 3*x1^2 + x1*x2 + 2*x1 - x2"},
    {4, "(1/15)*(15*x1^4 - 90*x1^3 + 30*x1^2*x2 + 165*x1^2 - 90*x1*x2 + 5*x2^2 - 90*x1 + "
        "55*x2 - x4)"},
    {5, "(1/3)*(3*x1^5 - 30*x1^4 + 10*x1^3*x2 + 105*x1^3 - 60*x1^2*x2 + 5*x1*x2^2 - 150*x1^2 + "
        "105*x1*x2 - x1*x4 - 10*x2^2 + 72*x1 - 50*x2 + 2*x4)"},
};

const std::vector<std::pair<unsigned, const char*>> golden_omega = {
    {1, "x2"},
    {2, "-5*x2^2 + 5*x2 + x4"},
    {3, "(1/3)*(35*x2^3 - 105*x2^2 - 21*x2*x4 + 84*x2 + 21*x4 + 3*x6)"},
};

} // namespace

VerificationReport sweep_golden_tables(const LehmerTable& table) {
    auto t0 = Clock::now();
    VerificationReport r;
    r.claim_id = "golden-tables";
    r.range = "s_1..s_5, F_1..F_5, Omega_1..Omega_3";
    if (table.k_max < 6)
        throw std::domain_error("golden-tables requires a table with k_max >= 6");
    auto expect = [&](long family, unsigned idx, const std::string& got, const char* want) {
        if (got != want) r.counterexamples.push_back({{family, idx}, got, want});
    };
    for (auto [k, text] : golden_s) expect(0, k, table.s_polys[k].str(), text);
    for (auto [k, text] : golden_f) expect(1, k, table.f_polys[k].str(), text);
    for (auto [m, text] : golden_omega) expect(2, m, table.omega_polys[m].str(), text);
    if (!r.counterexamples.empty()) r.status = CheckStatus::fail;
    return finalize(std::move(r), t0);
}

// ---- route agreement --------------------------------------------------------

VerificationReport sweep_route_agreement(const LehmerTable& table, unsigned k_max) {
    auto t0 = Clock::now();
    VerificationReport r;
    r.claim_id = "route-agreement";
    k_max = std::min(k_max, table.k_max);
    r.range = "0 <= k <= " + std::to_string(k_max) +
              " (partition vs series vs reconstruction, base route " + route_str(table.route) + ")";

    std::vector<MultiPoly> series = f_polys_series(k_max);
    for (unsigned k = 0; k <= k_max; ++k) {
        const MultiPoly& base = table.f_polys[k];
        MultiPoly part = f_poly_partition(k);
        MultiPoly recon = f_poly_reconstruct(k);
        if (!(base == part))
            r.counterexamples.push_back({{k, 0}, base.str(), part.str()});
        if (!(part == series[k]))
            r.counterexamples.push_back({{k, 1}, part.str(), series[k].str()});
        if (!(part == recon))
            r.counterexamples.push_back({{k, 2}, part.str(), recon.str()});
        // no odd-indexed variable other than x1 may appear
        auto odd_var_check = [&](const MultiPoly& p, const char* name) {
            for (unsigned v : p.variables())
                if (v >= 3 && v % 2 == 1)
                    r.counterexamples.push_back({{k, 3},
                                                 std::string(name) + " contains x" + std::to_string(v),
                                                 "only x1 and even indices"});
        };
        odd_var_check(base, "F_k");
        if (k >= 1) odd_var_check(table.s_polys[k], "s_k");
    }
    if (!r.counterexamples.empty()) r.status = CheckStatus::fail;
    return finalize(std::move(r), t0);
}

// ---- series identities ------------------------------------------------------

VerificationReport sweep_series_identities(unsigned order) {
    auto t0 = Clock::now();
    VerificationReport r;
    r.claim_id = "series-identities";
    r.range = "order " + std::to_string(order);
    using S = TruncSeries<Rat>;
    auto expect = [&](long id, const S& got, const S& want, const char* what) {
        if (!(got == want)) {
            std::string g, w;
            for (unsigned i = 0; i <= order; ++i) {
                g += (i ? "," : "") + rat_str(got.coeff(i));
                w += (i ? "," : "") + rat_str(want.coeff(i));
            }
            r.counterexamples.push_back({{id}, std::string(what) + ": " + g, w});
        }
    };

    S t = S::identity(order);
    S one_plus_t = S::constant(order, rat(1)) + t;
    expect(1, exp_series(log1p_series(t)), one_plus_t, "exp(log(1+t))");
    expect(2, log1p_series(exp_series(t) - S::constant(order, rat(1))), t, "log(1+(e^t-1))");
    expect(3, compose(arcsinh_series(order), sinh_series(order)), t, "arcsinh(sinh(t))");
    expect(4, compose(sinh_series(order), arcsinh_series(order)), t, "sinh(arcsinh(t))");
    S sqrt1p = binomial_pow_series(rat(1, 2), t);
    expect(5, sqrt1p * sqrt1p, one_plus_t, "sqrt(1+t)^2");
    // log(1+t) = 2 asinh(t / (2 sqrt(1+t)))
    S inner = t * binomial_pow_series(rat(-1, 2), t) * rat(1, 2);
    expect(6, compose(arcsinh_series(order), inner) * rat(2), log1p_series(t),
           "2*asinh(t/(2*sqrt(1+t)))");

    if (!r.counterexamples.empty()) r.status = CheckStatus::fail;
    return finalize(std::move(r), t0);
}

// ---- range sweeps -----------------------------------------------------------

VerificationReport sweep_lehmer(const LehmerTable& table, const SweepConfig& cfg) {
    cfg.validate();
    auto t0 = Clock::now();
    long n_min = std::max<long>(2, cfg.n_min);
    std::vector<long> ns;
    for (long n = n_min; n <= cfg.n_max; ++n) ns.push_back(n);

    auto points = parallel_points(ns.size(), cfg.jobs, [&](size_t i) {
        long n = ns[i];
        unsigned cap = std::min<unsigned>(std::min<long>(euler_phi(n), cfg.k_max), table.k_max);
        std::vector<VerificationReport> per_k;
        for (unsigned k = 0; k <= cap; ++k)
            per_k.push_back(check_lehmer_identity(table.f_polys[k], n, k));
        return merge_reports("lehmer-identity", "", per_k);
    });
    auto merged = merge_reports("lehmer-identity",
                                std::to_string(n_min) + " <= n <= " + std::to_string(cfg.n_max) +
                                    ", 0 <= k <= min(phi(n), " + std::to_string(cfg.k_max) + ")",
                                points);
    return finalize(std::move(merged), t0);
}

VerificationReport sweep_conjecture(const LehmerTable& table, unsigned k_cap) {
    auto t0 = Clock::now();
    std::vector<VerificationReport> points;
    for (unsigned k = 0; 2 * k + 1 <= table.k_max && k <= k_cap; ++k)
        points.push_back(check_conjecture_divisibility(table.f_polys[2 * k + 1], k));
    auto merged = merge_reports("conjecture-1",
                                "F_{2k+1} divisible by (x1 - k), 0 <= k <= " + std::to_string(k_cap),
                                points);
    return finalize(std::move(merged), t0);
}

VerificationReport sweep_integrality(const SweepConfig& cfg) {
    cfg.validate();
    auto t0 = Clock::now();
    long n_min = std::max<long>(3, cfg.n_min);
    std::vector<long> ns;
    for (long n = n_min; n <= cfg.n_max; ++n) ns.push_back(n);

    auto points = parallel_points(ns.size(), cfg.jobs, [&](size_t i) {
        long n = ns[i];
        long phi = euler_phi(n);
        std::vector<VerificationReport> per_n;
        for (unsigned m = 1; m <= cfg.m_max && 2 * static_cast<long>(m) < phi; ++m)
            per_n.push_back(check_integrality(n, m));
        for (unsigned k = 1; k <= cfg.k_max && static_cast<long>(k) < phi; ++k)
            per_n.push_back(check_fkn_integrality(n, k));
        return merge_reports("integrality", "", per_n);
    });
    auto merged = merge_reports(
        "integrality",
        std::to_string(n_min) + " <= n <= " + std::to_string(cfg.n_max) + ", 1 <= m < phi(n)/2, m <= " +
            std::to_string(cfg.m_max) + "; F_{k,n} in Z[x] for 1 <= k < phi(n), k <= " +
            std::to_string(cfg.k_max),
        points);
    return finalize(std::move(merged), t0);
}

VerificationReport sweep_ak(const SweepConfig& cfg) {
    cfg.validate();
    auto t0 = Clock::now();
    long n_min = std::max<long>(3, cfg.n_min);
    std::vector<long> ns;
    for (long n = n_min; n <= cfg.n_max; ++n) ns.push_back(n);

    auto points = parallel_points(ns.size(), cfg.jobs, [&](size_t i) {
        long n = ns[i];
        long phi = euler_phi(n);
        std::vector<VerificationReport> per_n;
        for (unsigned k = 1; k <= cfg.k_max && 2 * static_cast<long>(k) + 1 < phi; ++k)
            per_n.push_back(check_ak_congruence(n, k));
        return merge_reports("ak-congruence", "", per_n);
    });
    auto merged = merge_reports("ak-congruence",
                                std::to_string(n_min) + " <= n <= " + std::to_string(cfg.n_max) +
                                    ", 1 <= k <= " + std::to_string(cfg.k_max) + ", 2k+1 < phi(n)",
                                points);
    return finalize(std::move(merged), t0);
}

VerificationReport sweep_wmodp(long n_max, unsigned jobs) {
    auto t0 = Clock::now();
    std::vector<std::pair<long, unsigned>> prime_powers;
    for (long p = 2; p <= n_max; ++p) {
        if (!is_prime(p)) continue;
        long pr = p;
        unsigned e = 1;
        while (pr <= n_max) {
            if (pr >= 3) prime_powers.emplace_back(p, e);
            if (pr > n_max / p) break;
            pr *= p;
            ++e;
        }
    }
    auto points = parallel_points(prime_powers.size(), jobs, [&](size_t i) {
        return w_mod_p_check(prime_powers[i].first, prime_powers[i].second);
    });
    auto merged = merge_reports("w-mod-p",
                                "prime powers 3 <= p^r <= " + std::to_string(n_max), points);
    return finalize(std::move(merged), t0);
}

VerificationReport sweep_wexpansion(const SweepConfig& cfg) {
    cfg.validate();
    auto t0 = Clock::now();
    long n_min = std::max<long>(3, cfg.n_min);
    std::vector<long> ns;
    for (long n = n_min; n <= cfg.n_max; ++n) ns.push_back(n);
    auto points = parallel_points(ns.size(), cfg.jobs,
                                  [&](size_t i) { return w_expansion_check(ns[i], cfg.m_max); });
    auto merged = merge_reports("w-expansion",
                                std::to_string(n_min) + " <= n <= " + std::to_string(cfg.n_max) +
                                    ", m <= " + std::to_string(cfg.m_max),
                                points);
    return finalize(std::move(merged), t0);
}

VerificationReport sweep_chebyshev_structure(const SweepConfig& cfg) {
    cfg.validate();
    auto t0 = Clock::now();
    long n_min = std::max<long>(1, cfg.n_min);
    std::vector<long> ns;
    for (long n = n_min; n <= cfg.n_max; ++n) ns.push_back(n);

    auto points = parallel_points(ns.size(), cfg.jobs, [&](size_t i) {
        long n = ns[i];
        VerificationReport r;
        r.claim_id = "chebyshev-structure";
        auto fail = [&](long part, const std::string& lhs, const std::string& rhs) {
            r.status = CheckStatus::fail;
            r.counterexamples.push_back({{n, part}, lhs, rhs});
        };
        // prod_{d|n} W_d = V_n
        UniPoly prod(1);
        for (long d : divisors(n)) prod *= w_poly(d);
        UniPoly v = v_poly(n);
        if (!(prod == v)) fail(0, prod.str(), v.str());
        if (!v.is_integral()) fail(1, v.str(), "a polynomial over Z");
        if (n >= 3) {
            UniPoly w = w_poly(n);
            long phi = euler_phi(n);
            if (w.degree() != phi || w.coeff(phi) != 1)
                fail(2, w.str(), "monic of degree " + std::to_string(phi));
            for (long i = 1; i <= w.degree(); i += 2)
                if (w.coeff(i) != 0) fail(3, w.str(), "even polynomial");
        }
        // coefficient identity behind the odd-n explicit formula:
        // n(n-m-1)!/(m!(n-2m)!) = C(n-m, m) + C(n-m-1, m-1)
        for (long m = 0; 2 * m <= n - 1; ++m) {
            Rat lhs = rat(Int(n) * factorial(n - m - 1), factorial(m) * factorial(n - 2 * m));
            Rat rhs = rat(binomial(n - m, static_cast<unsigned>(m)) +
                          (m >= 1 ? binomial(n - m - 1, static_cast<unsigned>(m - 1)) : Int(0)));
            if (lhs != rhs) fail(4, rat_str(lhs), rat_str(rhs));
        }
        return r;
    });
    auto merged = merge_reports("chebyshev-structure",
                                std::to_string(n_min) + " <= n <= " + std::to_string(cfg.n_max),
                                points);
    return finalize(std::move(merged), t0);
}

std::string fixtures_json(const LehmerTable& table) {
    nlohmann::json j;
    j["k_max"] = table.k_max;
    j["route"] = route_str(table.route);
    nlohmann::json s, f, om;
    for (unsigned k = 1; k <= table.k_max; ++k) s[std::to_string(k)] = table.s_polys[k].str();
    for (unsigned k = 0; k <= table.k_max; ++k) f[std::to_string(k)] = table.f_polys[k].str();
    for (unsigned m = 1; m <= table.k_max / 2; ++m)
        om[std::to_string(m)] = table.omega_polys[m].str();
    j["s"] = s;
    j["f"] = f;
    j["omega"] = om;
    return j.dump(2);
}

} // namespace cyclo
