#include <cyclo/numtheory.hpp>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cyclo {

Factorization factorize(long n) {
    if (n < 1) throw std::domain_error("factorize: n must be >= 1");
    Factorization f;
    for (long p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.pairs.emplace_back(p, e);
    }
    if (n > 1) f.pairs.emplace_back(n, 1);
    return f;
}

std::vector<long> divisors(long n) {
    Factorization f = factorize(n);
    std::vector<long> ds{1};
    for (auto [p, e] : f.pairs) {
        size_t base = ds.size();
        long pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; p += (p == 2) ? 1 : 2)
        if (n % p == 0) return false;
    return true;
}

int mobius(long n) {
    Factorization f = factorize(n);
    int m = 1;
    for (auto [p, e] : f.pairs) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

Int jordan_totient(unsigned k, long n) {
    if (k < 1) throw std::domain_error("jordan_totient: k must be >= 1");
    if (n < 1) throw std::domain_error("jordan_totient: n must be >= 1");
    // product form n^k prod_{p|n} (1 - p^-k), kept exact as
    // prod p^(k(e-1)) (p^k - 1) over the factorization
    Int j = 1;
    for (auto [p, e] : factorize(n).pairs) {
        Int pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
        j *= pk - 1;
        for (unsigned i = 1; i < e; ++i) j *= pk;
    }
    return j;
}

long euler_phi(long n) {
    Int j = jordan_totient(1, n);
    return j.get_si();
}

namespace {
std::mutex bernoulli_mutex;
std::vector<Rat> bernoulli_table;

std::mutex stirling_mutex;
std::vector<std::vector<Int>> stirling_table; // row n holds st(n, 0..n)
} // namespace

Rat bernoulli(unsigned m) {
    std::lock_guard lock(bernoulli_mutex);
    if (bernoulli_table.empty()) bernoulli_table.push_back(rat(1));
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    for (unsigned i = bernoulli_table.size(); i <= m; ++i) {
        Rat acc = 0;
        for (unsigned j = 0; j < i; ++j)
            acc += rat(binomial(static_cast<long>(i) + 1, j)) * bernoulli_table[j];
        bernoulli_table.push_back(-acc / rat(static_cast<long>(i) + 1));
    }
    return bernoulli_table[m];
}

Int stirling_first(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::lock_guard lock(stirling_mutex);
    if (stirling_table.empty()) stirling_table.push_back({Int(1)});
    // st(n+1, k) = n st(n, k) + st(n, k-1)
    for (unsigned r = stirling_table.size(); r <= n; ++r) {
        const auto& prev = stirling_table[r - 1];
        std::vector<Int> row(r + 1);
        row[0] = 0;
        for (unsigned c = 1; c <= r; ++c)
            row[c] = (c < prev.size() ? Int((r - 1) * prev[c]) : Int(0)) + prev[c - 1];
        stirling_table.push_back(std::move(row));
    }
    return stirling_table[n][k];
}

Int binomial(long n, unsigned k) {
    Int r;
    Int zn(n);
    mpz_bin_ui(r.get_mpz_t(), zn.get_mpz_t(), k);
    return r;
}

Rat binomial(const Rat& alpha, unsigned k) {
    return falling_factorial(alpha, k) / rat(factorial(k));
}

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rat falling_factorial(const Rat& a, unsigned n) {
    Rat p = rat(1);
    for (unsigned i = 0; i < n; ++i) p *= a - rat(static_cast<long>(i));
    return p;
}

} // namespace cyclo
