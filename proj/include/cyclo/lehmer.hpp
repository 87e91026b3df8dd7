#pragma once

#include <cyclo/multipoly.hpp>
#include <cyclo/rational.hpp>
#include <cyclo/report.hpp>
#include <cyclo/unipoly.hpp>

#include <stdexcept>
#include <vector>

namespace cyclo {

/// A derived quantity failed a structural sanity check that the construction
/// itself guarantees; indicates an implementation bug, not bad input.
class InternalInconsistency : public std::logic_error {
public:
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

/// s_k = (2(-1)^{k-1}/(k-1)!) sum_{m=1}^{k} B_m st(k,m) x_m. Only x_1 and
/// even-indexed variables appear since B_m = 0 for odd m >= 3.
MultiPoly s_poly(unsigned k);

/// F_k by the partition sum: k! sum over lambda_1 + 2 lambda_2 + ... = k of
/// prod_j (-s_j)^{lambda_j} / (lambda_j! j^{lambda_j}); F_0 = 1.
MultiPoly f_poly_partition(unsigned k);

/// F_0..F_kmax read off from the generating series P = exp(-Q) with
/// Q = -2 sum_n B_n/n! (-log(1+t))^n x_n; F_k = k! [t^k] P. Verifies
/// [t^j] Q = s_j / j along the way.
std::vector<MultiPoly> f_polys_series(unsigned k_max);

/// Omega_m extracted from exp(2 sum_nu B_{2nu}/(2nu)! (2 asinh(u/2))^{2nu}
/// x_{2nu}) as (2m)!/(2 B_{2m}) times the u^{2m} coefficient. Memoized.
MultiPoly omega_poly(unsigned m);

/// F_k = (x1)_k + 2 sum_m B_{2m} C(k,2m) (x1 - m)_{k-2m} Omega_m.
MultiPoly f_poly_reconstruct(unsigned k);

/// F_k by the partition route, memoized; the default provider for checks.
const MultiPoly& f_poly(unsigned k);

/// Integer polynomial with sinh(n t) = sinh(t) V_n(2 sinh t) for odd n and
/// sinh(2t) V_n(2 sinh t) for even n; V_1 = V_2 = 1.
UniPoly v_poly(long n);

/// W_n = prod_{d|n} V_d^{mu(n/d)}, the primitive part of V_n.
UniPoly w_poly(long n);

/// omega_m(n): Omega_m evaluated at x_j = J_j(n)/(2j). Rejects n < 3.
Rat omega_value(unsigned m, long n);

/// F_{k,n}(x) = (x)_k + sum_m k!/(k-2m)! * 2B_{2m}/(2m)! * omega_m(n)
/// * (x-m)_{k-2m}. Rejects n < 3 or k < 1.
UniPoly f_kn_poly(unsigned k, long n);

/// F_{k,n} by specializing F_k with x1 left free; cross-check route.
UniPoly f_kn_by_specialization(unsigned k, long n);

/// Falling factorial (x1 - shift)_len as a MultiPoly.
MultiPoly falling_poly_x1(long shift, unsigned len);

enum class Route { partition, series, reconstruction };

std::string route_str(Route r);

/// The s_k, F_k, Omega_m families through index k_max, with F_k built by the
/// chosen route. f_polys[0] == 1 always.
struct LehmerTable {
    unsigned k_max = 0;
    Route route = Route::partition;
    std::vector<MultiPoly> s_polys;     // index 1..k_max ([0] unused)
    std::vector<MultiPoly> f_polys;     // index 0..k_max
    std::vector<MultiPoly> omega_polys; // index 1..k_max/2 ([0] unused)
};

LehmerTable build_lehmer_table(unsigned k_max, Route route);

// ---- single-point theorem checks -----------------------------------------

/// Phi_n^{(k)}(1)/Phi_n(1) == F_k(J_1(n)/2, ..., J_k(n)/2k), exact.
VerificationReport check_lehmer_identity(long n, unsigned k);
VerificationReport check_lehmer_identity(const MultiPoly& f_k, long n, unsigned k);

/// F_{2k+1} has zero remainder under division by (x1 - k).
VerificationReport check_conjecture_divisibility(unsigned k);
VerificationReport check_conjecture_divisibility(const MultiPoly& f_2k1, unsigned k);

/// 2 B_{2m}/(2m)! * omega_m(n) is an integer for 1 <= m < phi(n)/2;
/// not_applicable outside that hypothesis.
VerificationReport check_integrality(long n, unsigned m);

/// F_{k,n} has integer coefficients for 1 <= k < phi(n); also requires the
/// explicit form and the specialization of F_k to agree. not_applicable for
/// k >= phi(n).
VerificationReport check_fkn_integrality(long n, unsigned k);

/// Odd-derivative congruences: (phi(n)-2) | 2 Phi_n^{(3)}(1)/Phi_n(1) for
/// k = 1 and (phi(n)-2k) | Phi_n^{(2k+1)}(1)/Phi_n(1) for k >= 2, plus the
/// weaker divisibilities on Phi_n^{(2k+1)}(1) itself. Ratios come from the
/// brute-force oracle. not_applicable unless 3 <= 2k+1 < phi(n).
VerificationReport check_ak_congruence(long n, unsigned k);

/// W_{p^r} reduced mod p is exactly x^{phi(p^r)}. Rejects composite p and
/// p^r < 3.
VerificationReport w_mod_p_check(long p, unsigned r);

/// Coefficientwise W_n(x)/Phi_n(1) = 1 + 2 sum_m B_{2m}/(2m)! omega_m(n)
/// x^{2m} for 2m <= phi(n), m <= m_max, plus evenness of W_n.
VerificationReport w_expansion_check(long n, unsigned m_max);

} // namespace cyclo
