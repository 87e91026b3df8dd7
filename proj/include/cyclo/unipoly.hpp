#pragma once

#include <cyclo/rational.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclo {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs_[i] is the coefficient of x^i; trailing zeros are trimmed, so the
/// zero polynomial is the empty sequence and degree() == coeffs_.size()-1
/// otherwise.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long c) { coeffs_.assign(1, rat(c)); trim(); }
    UniPoly(const Rat& c) { coeffs_.assign(1, c); trim(); }
    explicit UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// c * x^e
    static UniPoly monomial(const Rat& c, unsigned e);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rat coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& c) const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    /// k-th formal derivative.
    UniPoly derivative(unsigned k = 1) const;

    /// Horner evaluation.
    Rat eval(const Rat& a) const;

    bool is_integral() const;

    /// Coefficients reduced into [0, q), constant term first. Requires an
    /// integral polynomial and q >= 2.
    std::vector<unsigned long> reduce_mod_p(unsigned long q) const;

    /// Decreasing-degree rendering, e.g. "x^4 - x^2 + 1", "x^2 - x + 2/3".
    std::string str() const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

inline UniPoly operator*(const Rat& c, const UniPoly& p) { return p * c; }

/// Exact division failed; carries the offending remainder.
class NonDivisible : public std::runtime_error {
public:
    explicit NonDivisible(UniPoly remainder)
        : std::runtime_error("polynomial division left a nonzero remainder: " + remainder.str()),
          remainder_(std::move(remainder)) {}
    const UniPoly& remainder() const { return remainder_; }

private:
    UniPoly remainder_;
};

/// Quotient a/b when the division is exact; throws NonDivisible otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// prod_{d|n} family(d)^{mu(n/d)}: multiplies all mu=+1 factors, all mu=-1
/// factors, then divides once. Throws NonDivisible if the family does not
/// cancel.
UniPoly mobius_product(long n, const std::function<UniPoly(long)>& family);

} // namespace cyclo
