#pragma once

#include <cyclo/rational.hpp>

#include <utility>
#include <vector>

namespace cyclo {

// prime -> exponent pairs, primes strictly increasing; empty for n = 1.
struct Factorization {
    std::vector<std::pair<long, unsigned>> pairs;
};

/// Trial-division factorization. Rejects n < 1.
Factorization factorize(long n);

std::vector<long> divisors(long n);

bool is_prime(long n);

/// Moebius function, in {-1, 0, 1}. Rejects n < 1.
int mobius(long n);

/// Jordan totient J_k(n) = sum_{d|n} mu(n/d) d^k. Rejects k < 1 or n < 1.
Int jordan_totient(unsigned k, long n);

/// Euler totient, J_1(n) as a machine integer.
long euler_phi(long n);

/// Bernoulli number B_m with B_1 = -1/2. Memoized, thread-safe.
Rat bernoulli(unsigned m);

/// Unsigned Stirling number of the first kind. Memoized, thread-safe.
Int stirling_first(unsigned n, unsigned k);

/// Binomial coefficient (n)_k / k!; n may be negative.
Int binomial(long n, unsigned k);

/// Binomial coefficient with rational upper argument.
Rat binomial(const Rat& alpha, unsigned k);

Int factorial(unsigned n);

/// Falling factorial (a)_n = a (a-1) ... (a-n+1).
Rat falling_factorial(const Rat& a, unsigned n);

} // namespace cyclo
