#pragma once

#include <gmpxx.h>
#include <string>

namespace cyclo {

// Exact scalar domain. mpq_class keeps values in lowest terms with a
// positive denominator as long as every value entering arithmetic is
// canonical, so all construction goes through rat().
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Renders "a/b", or "a" when the denominator is 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline std::string int_str(const Int& z) { return z.get_str(); }

} // namespace cyclo
