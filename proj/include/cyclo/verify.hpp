#pragma once

#include <cyclo/lehmer.hpp>
#include <cyclo/report.hpp>

#include <optional>
#include <string>

namespace cyclo {

struct SweepConfig {
    long n_min = 3;
    long n_max = 200;
    unsigned k_max = 12;
    unsigned m_max = 8;
    unsigned jobs = 1;

    void validate() const;
};

/// Default parallelism: CYCLO_JOBS when set, else 1.
unsigned default_jobs();

/// Perturbation applied to one coefficient of one F_k before verification;
/// exists so the test harness can prove the sweeps detect a falsified table.
struct Mutation {
    unsigned k = 0;
    size_t term_index = 0;
    long delta = 1;
};

/// Adds delta to the coefficient of the term_index-th term (canonical order)
/// of table.f_polys[k]. Rejects out-of-range k or term_index.
void mutate_f_coefficient(LehmerTable& table, const Mutation& m);

// ---- sweeps; each returns one merged report --------------------------------

/// s_1..s_5, F_1..F_5, Omega_1..Omega_3 match their known closed forms
/// character-for-character in canonical rendering.
VerificationReport sweep_golden_tables(const LehmerTable& table);

/// Partition, series and reconstruction builds of F_0..F_k agree exactly,
/// and neither s_k nor F_k contains an odd-indexed variable other than x1.
VerificationReport sweep_route_agreement(const LehmerTable& table, unsigned k_max);

/// exp/log inversion, arcsinh o sinh = id, binomial square root, and
/// log(1+t) = 2 asinh(t/(2 sqrt(1+t))), coefficientwise at the given order.
VerificationReport sweep_series_identities(unsigned order);

VerificationReport sweep_lehmer(const LehmerTable& table, const SweepConfig& cfg);
VerificationReport sweep_conjecture(const LehmerTable& table, unsigned k_cap);
VerificationReport sweep_integrality(const SweepConfig& cfg);
VerificationReport sweep_ak(const SweepConfig& cfg);
VerificationReport sweep_wmodp(long n_max, unsigned jobs);
VerificationReport sweep_wexpansion(const SweepConfig& cfg);

/// V_n = prod_{d|n} W_d, W_n monic of degree phi(n) and even for n >= 3, and
/// the integer coefficient identity behind V_n, over n <= n_max.
VerificationReport sweep_chebyshev_structure(const SweepConfig& cfg);

/// JSON text of the computed s/F/Omega tables, for golden fixtures.
std::string fixtures_json(const LehmerTable& table);

} // namespace cyclo
