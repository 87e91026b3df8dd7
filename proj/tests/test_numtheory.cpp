#include <cyclo/numtheory.hpp>
#include <cyclo/series.hpp>
#include <cyclo/unipoly.hpp>

#include <doctest.h>

using namespace cyclo;

namespace {

// independent divisor-sum oracle for the Jordan totient
Int jordan_by_divisor_sum(unsigned k, long n) {
    Int acc = 0;
    for (long d : divisors(n)) {
        Int dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
        acc += mobius(n / d) * dk;
    }
    return acc;
}

} // namespace

TEST_CASE("factorize") {
    CHECK(factorize(1).pairs.empty());
    CHECK(factorize(12).pairs == std::vector<std::pair<long, unsigned>>{{2, 2}, {3, 1}});
    CHECK(factorize(97).pairs == std::vector<std::pair<long, unsigned>>{{97, 1}});
    CHECK_THROWS_AS(factorize(0), std::domain_error);

    for (long n = 1; n <= 2000; ++n) {
        long prod = 1;
        long prev_p = 0;
        for (auto [p, e] : factorize(n).pairs) {
            CHECK(p > prev_p);
            CHECK(is_prime(p));
            prev_p = p;
            for (unsigned i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("mobius basics and divisor-sum identity") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), std::domain_error);

    // sum_{d|n} mu(n/d) = [n == 1]
    for (long n = 1; n <= 500; ++n) {
        int acc = 0;
        for (long d : divisors(n)) acc += mobius(n / d);
        CHECK(acc == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("jordan totient: examples and both closed forms agree") {
    CHECK(jordan_totient(1, 5) == 4);
    CHECK(jordan_totient(2, 3) == 8);
    CHECK(jordan_totient(2, 4) == 12);
    CHECK_THROWS_AS(jordan_totient(0, 5), std::domain_error);
    CHECK_THROWS_AS(jordan_totient(2, 0), std::domain_error);

    for (unsigned k = 1; k <= 6; ++k)
        for (long n = 1; n <= 500; ++n)
            CHECK(jordan_totient(k, n) == jordan_by_divisor_sum(k, n));
}

TEST_CASE("jordan totient is even for n >= 3") {
    for (unsigned k = 1; k <= 6; ++k)
        for (long n = 3; n <= 500; ++n)
            CHECK(jordan_totient(k, n) % 2 == 0);
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == rat(1));
    CHECK(bernoulli(1) == rat(-1, 2));
    CHECK(bernoulli(2) == rat(1, 6));
    CHECK(bernoulli(3) == rat(0));
    CHECK(bernoulli(4) == rat(-1, 30));
    CHECK(bernoulli(12) == rat(-691, 2730));
    for (unsigned m = 3; m <= 29; m += 2) CHECK(bernoulli(m) == 0);
}

TEST_CASE("bernoulli generating series: sum B_m t^m/m! * (e^t-1)/t == 1") {
    const unsigned N = 30;
    TruncSeries<Rat> b(N), expm1_over_t(N);
    for (unsigned m = 0; m <= N; ++m) {
        b.coeff(m) = bernoulli(m) / rat(factorial(m));
        expm1_over_t.coeff(m) = rat(Int(1), factorial(m + 1)); // [t^m] (e^t-1)/t
    }
    CHECK(b * expm1_over_t == TruncSeries<Rat>::constant(N, rat(1)));
}

TEST_CASE("bernoulli log-sinh series: sum_{n>=2} B_n/n t^n/n! = log(sinh(t/2)/(t/2))") {
    const unsigned N = 30;
    // sinh(t/2)/(t/2) - 1 = sum_{i>=1} t^{2i} / (4^i (2i+1)!)
    TruncSeries<Rat> g(N);
    Rat quarter_pow = rat(1);
    for (unsigned i = 1; 2 * i <= N; ++i) {
        quarter_pow /= 4;
        g.coeff(2 * i) = quarter_pow / rat(factorial(2 * i + 1));
    }
    TruncSeries<Rat> lhs = log1p_series(g);
    TruncSeries<Rat> rhs(N);
    for (unsigned n = 2; n <= N; ++n) rhs.coeff(n) = bernoulli(n) / rat(n) / rat(factorial(n));
    CHECK(lhs == rhs);
}

TEST_CASE("stirling numbers of the first kind") {
    CHECK(stirling_first(0, 0) == 1);
    CHECK(stirling_first(3, 2) == 3);
    CHECK(stirling_first(4, 1) == 6);
    CHECK(stirling_first(4, 2) == 11);
    CHECK(stirling_first(5, 2) == 50);
    CHECK(stirling_first(2, 5) == 0);
    // st(n, 1) = (n-1)!
    for (unsigned n = 1; n <= 10; ++n) CHECK(stirling_first(n, 1) == factorial(n - 1));
}

TEST_CASE("stirling generating series (-log(1-t))^k / k!") {
    const unsigned N = 20;
    // -log(1-t) = log1p applied to -t, negated
    TruncSeries<Rat> mt(N);
    mt.coeff(1) = rat(-1);
    TruncSeries<Rat> mlog = -log1p_series(mt);
    TruncSeries<Rat> pw = TruncSeries<Rat>::constant(N, rat(1));
    for (unsigned k = 1; k <= 8; ++k) {
        pw = pw * mlog;
        for (unsigned n = 0; n <= N; ++n) {
            Rat want = rat(stirling_first(n, k), factorial(n));
            CHECK(pw.coeff(n) / rat(factorial(k)) == want);
        }
    }
}

TEST_CASE("falling factorial expands with signed Stirling coefficients") {
    // (x)_n = sum_k (-1)^{n+k} st(n,k) x^k
    for (unsigned n = 0; n <= 10; ++n) {
        UniPoly falling(1);
        for (unsigned i = 0; i < n; ++i)
            falling *= UniPoly(std::vector<Rat>{rat(-static_cast<long>(i)), rat(1)});
        for (unsigned k = 0; k <= n; ++k) {
            Rat sign = rat((n + k) % 2 ? -1 : 1);
            CHECK(falling.coeff(k) == sign * rat(stirling_first(n, k)));
        }
    }
}

TEST_CASE("binomial coefficients incl. negative upper argument") {
    CHECK(binomial(5L, 2) == 10);
    CHECK(binomial(-1L, 3) == -1);
    CHECK(binomial(7L, 0) == 1);
    CHECK(binomial(-3L, 0) == 1);
    CHECK(binomial(4L, 7) == 0);
    // rational upper argument: C(-1/2, 2) = (-1/2)(-3/2)/2 = 3/8
    CHECK(binomial(rat(-1, 2), 2) == rat(3, 8));
    CHECK(falling_factorial(rat(5), 3) == rat(60));
}
