#pragma once

#include <cyclo/rational.hpp>
#include <cyclo/unipoly.hpp>

#include <memory>

namespace cyclo {

/// Cached construction of the n-th cyclotomic polynomial.
struct CyclotomicRecord {
    long n;
    UniPoly poly;      // monic, integer coefficients
    long phi;          // degree = euler_phi(n)
    Int value_at_1;    // poly evaluated at 1 (0 for n = 1)
};

/// Phi_n via the Moebius product over d |-> x^d - 1. Records are cached and
/// shared; safe for concurrent callers.
std::shared_ptr<const CyclotomicRecord> cyclotomic_poly(long n);

/// Closed form of Phi_n(1) for n >= 2: p when n is a prime power p^r, else 1.
long phi_at_1(long n);

/// Phi_n^{(k)}(1) by k-fold formal differentiation. The brute-force oracle
/// for every identity in the Lehmer layer.
Int deriv_at_1(long n, unsigned k);

/// Phi_n^{(k)}(1) / Phi_n(1), exact. Rejects n < 2.
Rat deriv_ratio(long n, unsigned k);

} // namespace cyclo
