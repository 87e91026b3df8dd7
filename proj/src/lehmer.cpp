#include <cyclo/lehmer.hpp>

#include <cyclo/cyclotomic.hpp>
#include <cyclo/numtheory.hpp>
#include <cyclo/series.hpp>

#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <mutex>

namespace cyclo {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

VerificationReport point_report(std::string claim, std::string range, Clock::time_point t0) {
    VerificationReport r;
    r.claim_id = std::move(claim);
    r.range = std::move(range);
    r.elapsed_ms = ms_since(t0);
    return r;
}

/// x_j -> J_j(n)/(2j) for every variable index j of p (x1 gets phi(n)/2).
std::map<unsigned, Rat> jordan_point(const MultiPoly& p, long n) {
    std::map<unsigned, Rat> a;
    for (unsigned j : p.variables()) a[j] = rat(jordan_totient(j, n), Int(2) * j);
    return a;
}

} // namespace

MultiPoly s_poly(unsigned k) {
    if (k < 1) throw std::domain_error("s_poly: k must be >= 1");
    MultiPoly acc;
    for (unsigned m = 1; m <= k; ++m) {
        Rat b = bernoulli(m);
        if (b == 0) continue;
        acc.add_term({{m, 1}}, b * rat(stirling_first(k, m)));
    }
    return acc * (rat(k % 2 ? 2 : -2) / rat(factorial(k - 1)));
}

MultiPoly f_poly_partition(unsigned k) {
    if (k == 0) return MultiPoly(1);
    std::vector<MultiPoly> neg_s(k + 1);
    for (unsigned j = 1; j <= k; ++j) neg_s[j] = -s_poly(j);

    MultiPoly total;
    // recursive descent over lambda_j, accumulating the product of
    // (-s_j)^{lambda_j} and the scalar 1/(lambda_j! j^{lambda_j})
    std::function<void(unsigned, unsigned, const MultiPoly&, const Rat&)> descend =
        [&](unsigned j, unsigned rem, const MultiPoly& prod, const Rat& coef) {
            if (rem == 0) {
                total += prod * coef;
                return;
            }
            if (j > k) return;
            MultiPoly p = prod;
            Rat c = coef;
            for (unsigned lam = 0; lam * j <= rem; ++lam) {
                if (lam > 0) {
                    p *= neg_s[j];
                    c /= rat(static_cast<long>(lam) * j);
                }
                descend(j + 1, rem - lam * j, p, c);
            }
        };
    descend(1, k, MultiPoly(1), rat(1));
    return total * rat(factorial(k));
}

std::vector<MultiPoly> f_polys_series(unsigned k_max) {
    if (k_max < 1) throw std::domain_error("f_polys_series: k_max must be >= 1");
    const unsigned n_ord = k_max;
    using PolySeries = TruncSeries<MultiPoly>;

    // L = -log(1+t) over the rationals
    TruncSeries<Rat> minus_log = -log1p_series(TruncSeries<Rat>::identity(n_ord));

    PolySeries q(n_ord);
    TruncSeries<Rat> lpow = TruncSeries<Rat>::constant(n_ord, rat(1));
    for (unsigned m = 1; m <= n_ord; ++m) {
        lpow = lpow * minus_log; // L^m, valuation m
        Rat b = bernoulli(m);
        if (b == 0) continue;
        Rat c = rat(-2) * b / rat(factorial(m));
        MultiPoly xm = MultiPoly::variable(m);
        for (unsigned i = m; i <= n_ord; ++i) q.coeff(i) += xm * (c * lpow.coeff(i));
    }

    // the series must reproduce s_j / j coefficientwise
    for (unsigned j = 1; j <= n_ord; ++j)
        if (!(q.coeff(j) * rat(static_cast<long>(j)) == s_poly(j)))
            throw InternalInconsistency("series coefficient [t^" + std::to_string(j) +
                                        "] does not equal s_j/j");

    PolySeries p = exp_series(-q);
    std::vector<MultiPoly> out(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) out[k] = p.coeff(k) * rat(factorial(k));
    return out;
}

namespace {
std::mutex omega_mutex;
std::map<unsigned, MultiPoly> omega_cache;

MultiPoly omega_poly_uncached(unsigned m) {
    const unsigned n_ord = 2 * m;
    using PolySeries = TruncSeries<MultiPoly>;

    // A(u) = 2 asinh(u/2): coefficient of u^i picks up 2^{1-i}
    TruncSeries<Rat> a = arcsinh_series(n_ord);
    Rat scale = rat(2);
    for (unsigned i = 1; i <= n_ord; ++i) {
        scale /= 2;
        a.coeff(i) *= scale;
    }
    TruncSeries<Rat> a_sq = a * a;

    PolySeries arg(n_ord);
    TruncSeries<Rat> apow = TruncSeries<Rat>::constant(n_ord, rat(1));
    for (unsigned nu = 1; nu <= m; ++nu) {
        apow = apow * a_sq; // A^{2 nu}, valuation 2 nu
        Rat c = rat(2) * bernoulli(2 * nu) / rat(factorial(2 * nu));
        MultiPoly xv = MultiPoly::variable(2 * nu);
        for (unsigned i = 2 * nu; i <= n_ord; ++i) arg.coeff(i) += xv * (c * apow.coeff(i));
    }

    PolySeries r = exp_series(arg);
    for (unsigned i = 1; i <= n_ord; i += 2)
        if (!r.coeff(i).is_zero())
            throw InternalInconsistency("odd-order coefficient u^" + std::to_string(i) +
                                        " of the Omega generating series is nonzero");
    return r.coeff(2 * m) * (rat(factorial(2 * m)) / (rat(2) * bernoulli(2 * m)));
}
} // namespace

MultiPoly omega_poly(unsigned m) {
    if (m < 1) throw std::domain_error("omega_poly: m must be >= 1");
    std::lock_guard lock(omega_mutex);
    auto it = omega_cache.find(m);
    if (it == omega_cache.end()) it = omega_cache.emplace(m, omega_poly_uncached(m)).first;
    return it->second;
}

MultiPoly falling_poly_x1(long shift, unsigned len) {
    MultiPoly p(1);
    MultiPoly x1 = MultiPoly::variable(1);
    for (unsigned i = 0; i < len; ++i) p *= x1 - MultiPoly(rat(shift + static_cast<long>(i)));
    return p;
}

MultiPoly f_poly_reconstruct(unsigned k) {
    MultiPoly acc = falling_poly_x1(0, k);
    for (unsigned m = 1; m <= k / 2; ++m) {
        Rat c = rat(2) * bernoulli(2 * m) * rat(binomial(static_cast<long>(k), 2 * m));
        acc += omega_poly(m) * falling_poly_x1(m, k - 2 * m) * c;
    }
    return acc;
}

namespace {
std::mutex f_mutex;
std::deque<MultiPoly> f_cache; // deque: growth never invalidates references
} // namespace

const MultiPoly& f_poly(unsigned k) {
    std::lock_guard lock(f_mutex);
    if (f_cache.empty()) f_cache.push_back(MultiPoly(1));
    for (unsigned i = f_cache.size(); i <= k; ++i) f_cache.push_back(f_poly_partition(i));
    return f_cache[k];
}

UniPoly v_poly(long n) {
    if (n < 1) throw std::domain_error("v_poly: n must be >= 1");
    if (n % 2) {
        std::vector<Rat> v(n, Rat(0));
        for (long m = 0; m <= (n - 1) / 2; ++m)
            v[n - 2 * m - 1] = rat(Int(n) * factorial(n - m - 1),
                                   factorial(m) * factorial(n - 2 * m));
        return UniPoly(std::move(v));
    }
    std::vector<Rat> v(std::max<long>(n - 1, 1), Rat(0));
    for (long m = 0; m <= n / 2 - 1; ++m)
        v[n - 2 * m - 2] = rat(binomial(n - m - 1, static_cast<unsigned>(m)));
    return UniPoly(std::move(v));
}

UniPoly w_poly(long n) {
    return mobius_product(n, [](long d) { return v_poly(d); });
}

Rat omega_value(unsigned m, long n) {
    if (n < 3) throw std::domain_error("omega_value: n must be >= 3");
    MultiPoly om = omega_poly(m);
    return om.eval(jordan_point(om, n));
}

UniPoly f_kn_poly(unsigned k, long n) {
    if (k < 1) throw std::domain_error("f_kn_poly: k must be >= 1");
    if (n < 3) throw std::domain_error("f_kn_poly: n must be >= 3");
    auto falling_uni = [](long shift, unsigned len) {
        UniPoly p(1);
        for (unsigned i = 0; i < len; ++i)
            p *= UniPoly(std::vector<Rat>{rat(-shift - static_cast<long>(i)), rat(1)});
        return p;
    };
    UniPoly acc = falling_uni(0, k);
    for (unsigned m = 1; m <= k / 2; ++m) {
        Rat c = rat(factorial(k), factorial(k - 2 * m)) * rat(2) * bernoulli(2 * m) /
                rat(factorial(2 * m)) * omega_value(m, n);
        acc += falling_uni(m, k - 2 * m) * c;
    }
    return acc;
}

UniPoly f_kn_by_specialization(unsigned k, long n) {
    if (k < 1) throw std::domain_error("f_kn_by_specialization: k must be >= 1");
    if (n < 3) throw std::domain_error("f_kn_by_specialization: n must be >= 3");
    const MultiPoly& fk = f_poly(k);
    std::map<unsigned, Rat> a = jordan_point(fk, n);
    a.erase(1);
    MultiPoly in_x1 = fk.substitute(a);
    std::vector<Rat> coeffs(in_x1.degree_in(1) + 1, Rat(0));
    for (const auto& [mono, c] : in_x1.terms()) {
        if (mono.size() > 1 || (!mono.empty() && mono[0].first != 1))
            throw InternalInconsistency("specialized F_k still contains a variable besides x1");
        unsigned e = mono.empty() ? 0 : mono[0].second;
        coeffs[e] += c;
    }
    return UniPoly(std::move(coeffs));
}

std::string route_str(Route r) {
    switch (r) {
        case Route::partition: return "partition";
        case Route::series: return "series";
        case Route::reconstruction: return "reconstruction";
    }
    return "unknown";
}

LehmerTable build_lehmer_table(unsigned k_max, Route route) {
    if (k_max < 1) throw std::domain_error("build_lehmer_table: k_max must be >= 1");
    LehmerTable t;
    t.k_max = k_max;
    t.route = route;
    t.s_polys.resize(k_max + 1);
    for (unsigned k = 1; k <= k_max; ++k) t.s_polys[k] = s_poly(k);
    t.omega_polys.resize(k_max / 2 + 1);
    for (unsigned m = 1; m <= k_max / 2; ++m) t.omega_polys[m] = omega_poly(m);
    switch (route) {
        case Route::partition:
            t.f_polys.resize(k_max + 1);
            for (unsigned k = 0; k <= k_max; ++k) t.f_polys[k] = f_poly_partition(k);
            break;
        case Route::series:
            t.f_polys = f_polys_series(k_max);
            break;
        case Route::reconstruction:
            t.f_polys.resize(k_max + 1);
            for (unsigned k = 0; k <= k_max; ++k) t.f_polys[k] = f_poly_reconstruct(k);
            break;
    }
    if (!(t.f_polys[0] == MultiPoly(1)))
        throw InternalInconsistency("F_0 is not the constant 1");
    return t;
}

// ---- single-point checks ---------------------------------------------------

VerificationReport check_lehmer_identity(long n, unsigned k) {
    return check_lehmer_identity(f_poly(k), n, k);
}

VerificationReport check_lehmer_identity(const MultiPoly& f_k, long n, unsigned k) {
    if (n < 2) throw std::domain_error("check_lehmer_identity: n must be >= 2");
    auto t0 = Clock::now();
    Rat lhs = deriv_ratio(n, k);
    Rat rhs = f_k.eval(jordan_point(f_k, n));
    auto r = point_report("lehmer-identity", "n=" + std::to_string(n) + ", k=" + std::to_string(k), t0);
    if (lhs != rhs) {
        r.status = CheckStatus::fail;
        r.counterexamples.push_back({{n, static_cast<long>(k)}, rat_str(lhs), rat_str(rhs)});
    }
    return r;
}

VerificationReport check_conjecture_divisibility(unsigned k) {
    return check_conjecture_divisibility(f_poly(2 * k + 1), k);
}

VerificationReport check_conjecture_divisibility(const MultiPoly& f_2k1, unsigned k) {
    auto t0 = Clock::now();
    auto [quot, rem] = divide_by_linear(f_2k1, rat(static_cast<long>(k)));
    auto r = point_report("conjecture-1", "k=" + std::to_string(k), t0);
    if (!rem.is_zero()) {
        r.status = CheckStatus::fail;
        r.counterexamples.push_back({{static_cast<long>(k)}, rem.str(), "0"});
    }
    return r;
}

VerificationReport check_integrality(long n, unsigned m) {
    if (n < 3) throw std::domain_error("check_integrality: n must be >= 3");
    if (m < 1) throw std::domain_error("check_integrality: m must be >= 1");
    auto t0 = Clock::now();
    auto r = point_report("integrality", "n=" + std::to_string(n) + ", m=" + std::to_string(m), t0);
    long phi = euler_phi(n);
    if (2 * static_cast<long>(m) >= phi) { // hypothesis m < phi(n)/2 is strict
        r.status = CheckStatus::not_applicable;
        r.range += " (outside hypothesis m < phi(n)/2)";
        return r;
    }
    Rat value = rat(2) * bernoulli(2 * m) / rat(factorial(2 * m)) * omega_value(m, n);
    r.elapsed_ms = ms_since(t0);
    if (!is_integer(value)) {
        r.status = CheckStatus::fail;
        r.counterexamples.push_back({{n, static_cast<long>(m)}, rat_str(value), "an integer"});
    }
    return r;
}

VerificationReport check_fkn_integrality(long n, unsigned k) {
    if (n < 3) throw std::domain_error("check_fkn_integrality: n must be >= 3");
    if (k < 1) throw std::domain_error("check_fkn_integrality: k must be >= 1");
    auto t0 = Clock::now();
    auto r = point_report("integrality", "n=" + std::to_string(n) + ", k=" + std::to_string(k), t0);
    if (static_cast<long>(k) >= euler_phi(n)) {
        r.status = CheckStatus::not_applicable;
        r.range += " (outside hypothesis k < phi(n))";
        return r;
    }
    UniPoly f = f_kn_poly(k, n);
    UniPoly g = f_kn_by_specialization(k, n);
    r.elapsed_ms = ms_since(t0);
    if (!(f == g)) {
        r.status = CheckStatus::fail;
        r.counterexamples.push_back({{n, static_cast<long>(k)}, f.str(), g.str()});
        return r;
    }
    if (!f.is_integral()) {
        r.status = CheckStatus::fail;
        r.counterexamples.push_back({{n, static_cast<long>(k)}, f.str(), "a polynomial over Z"});
    }
    return r;
}

VerificationReport check_ak_congruence(long n, unsigned k) {
    if (n < 3) throw std::domain_error("check_ak_congruence: n must be >= 3");
    if (k < 1) throw std::domain_error("check_ak_congruence: k must be >= 1");
    auto t0 = Clock::now();
    auto r = point_report("ak-congruence", "n=" + std::to_string(n) + ", k=" + std::to_string(k), t0);
    long phi = euler_phi(n);
    if (2 * static_cast<long>(k) + 1 >= phi) {
        r.status = CheckStatus::not_applicable;
        r.range += " (outside hypothesis 2k+1 < phi(n))";
        return r;
    }
    const long divisor = phi - 2 * static_cast<long>(k);
    const std::vector<long> params{n, static_cast<long>(k)};

    Rat ratio = deriv_ratio(n, 2 * k + 1);
    Rat strong = (k == 1) ? Rat(rat(2) * ratio) : ratio;
    if (!is_integer(strong)) {
        r.status = CheckStatus::fail;
        r.counterexamples.push_back({params, rat_str(strong), "an integer"});
        return r;
    }
    if (strong.get_num() % divisor != 0) {
        r.status = CheckStatus::fail;
        r.counterexamples.push_back(
            {params, rat_str(strong), "a multiple of " + std::to_string(divisor)});
        return r;
    }
    // the plain derivative values satisfy the same congruences
    Int weak = deriv_at_1(n, 2 * k + 1);
    if (k == 1) weak *= 2;
    if (weak % divisor != 0) {
        r.status = CheckStatus::fail;
        r.counterexamples.push_back(
            {params, int_str(weak), "a multiple of " + std::to_string(divisor)});
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

VerificationReport w_mod_p_check(long p, unsigned r_exp) {
    if (!is_prime(p)) throw std::domain_error("w_mod_p_check: p must be prime");
    if (r_exp < 1) throw std::domain_error("w_mod_p_check: r must be >= 1");
    long pr = 1;
    for (unsigned i = 0; i < r_exp; ++i) pr *= p;
    if (pr < 3) throw std::domain_error("w_mod_p_check: p^r must be >= 3");
    auto t0 = Clock::now();
    auto rep = point_report("w-mod-p", "p=" + std::to_string(p) + ", r=" + std::to_string(r_exp), t0);

    std::vector<unsigned long> red = w_poly(pr).reduce_mod_p(static_cast<unsigned long>(p));
    long phi = euler_phi(pr);
    bool ok = static_cast<long>(red.size()) == phi + 1 && red.back() == 1;
    for (size_t i = 0; ok && i + 1 < red.size(); ++i) ok = red[i] == 0;
    rep.elapsed_ms = ms_since(t0);
    if (!ok) {
        std::string got;
        for (size_t i = 0; i < red.size(); ++i) got += (i ? "," : "") + std::to_string(red[i]);
        rep.status = CheckStatus::fail;
        rep.counterexamples.push_back({{p, static_cast<long>(r_exp)},
                                       "coefficients mod p: [" + got + "]",
                                       "x^" + std::to_string(phi)});
    }
    return rep;
}

VerificationReport w_expansion_check(long n, unsigned m_max) {
    if (n < 3) throw std::domain_error("w_expansion_check: n must be >= 3");
    auto t0 = Clock::now();
    auto rep = point_report("w-expansion",
                            "n=" + std::to_string(n) + ", m<=" + std::to_string(m_max), t0);
    UniPoly w = w_poly(n);
    long phi = euler_phi(n);
    Rat phi1 = rat(phi_at_1(n));
    auto fail = [&](long m, const std::string& lhs, const std::string& rhs) {
        rep.status = CheckStatus::fail;
        rep.counterexamples.push_back({{n, m}, lhs, rhs});
    };

    for (long i = 1; i <= w.degree(); i += 2)
        if (w.coeff(i) != 0) fail(i, "coefficient of x^" + std::to_string(i) + " = " + rat_str(w.coeff(i)), "0");
    if (w.coeff(0) != phi1) fail(0, rat_str(w.coeff(0)), rat_str(phi1));
    for (unsigned m = 1; m <= m_max && 2 * static_cast<long>(m) <= phi; ++m) {
        Rat lhs = w.coeff(2 * m) / phi1;
        Rat rhs = rat(2) * bernoulli(2 * m) / rat(factorial(2 * m)) * omega_value(m, n);
        if (lhs != rhs) fail(m, rat_str(lhs), rat_str(rhs));
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

} // namespace cyclo
