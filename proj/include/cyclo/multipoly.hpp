#pragma once

#include <cyclo/rational.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclo {

/// Sparse exponent vector: (variable index, exponent) with indices strictly
/// increasing and exponents positive. Variables are x1, x2, x3, ...
using Monomial = std::vector<std::pair<unsigned, unsigned>>;

unsigned total_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);

/// Graded lexicographic order: total degree first, ties broken
/// lexicographically with lower variable index more significant.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

class UnassignedVariable : public std::runtime_error {
public:
    explicit UnassignedVariable(unsigned index)
        : std::runtime_error("no value assigned to variable x" + std::to_string(index)),
          index_(index) {}
    unsigned index() const { return index_; }

private:
    unsigned index_;
};

/// Sparse multivariate polynomial over Rat. Terms are kept in descending
/// graded-lex order so iteration order is the canonical rendering order;
/// zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexGreater>;

    MultiPoly() = default;
    MultiPoly(long c) { add_term({}, rat(c)); }
    MultiPoly(const Rat& c) { add_term({}, c); }

    /// The variable x_index.
    static MultiPoly variable(unsigned index);
    static MultiPoly term(const Rat& c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rat coeff(const Monomial& m) const;

    /// Sorted indices of the variables that actually appear.
    std::vector<unsigned> variables() const;
    /// Largest degree of x_index across terms.
    unsigned degree_in(unsigned index) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly pow(unsigned e) const;

    bool is_integral() const;

    /// Full evaluation; throws UnassignedVariable if some variable of the
    /// polynomial has no value.
    Rat eval(const std::map<unsigned, Rat>& assignment) const;

    /// Partial substitution; assigned variables disappear, the rest remain.
    MultiPoly substitute(const std::map<unsigned, Rat>& assignment) const;

    /// Canonical rendering: terms in descending graded-lex order. When some
    /// coefficient is non-integral the rational content is factored out, e.g.
    /// "(1/3)*(3*x1^2 - 3*x1 + x2)".
    std::string str() const;

    void add_term(const Monomial& m, const Rat& c);

private:
    TermMap terms_;
};

inline MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

/// Writes p = (x1 - c) * quotient + remainder with an x1-free remainder,
/// by synthetic division in x1.
std::pair<MultiPoly, MultiPoly> divide_by_linear(const MultiPoly& p, const Rat& c);

} // namespace cyclo
