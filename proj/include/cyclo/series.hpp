#pragma once

#include <cyclo/numtheory.hpp>
#include <cyclo/rational.hpp>

#include <stdexcept>
#include <vector>

namespace cyclo {

class OrderMismatch : public std::runtime_error {
public:
    OrderMismatch(unsigned a, unsigned b)
        : std::runtime_error("series truncation orders differ: " + std::to_string(a) +
                             " vs " + std::to_string(b)) {}
};

class NonzeroConstantTerm : public std::runtime_error {
public:
    NonzeroConstantTerm() : std::runtime_error("series must have zero constant term") {}
};

/// Formal power series in t truncated at order N (terms t^0..t^N kept).
/// R is any exact commutative ring constructible from int and from Rat:
/// Rat itself and MultiPoly both qualify.
template <class R>
class TruncSeries {
public:
    explicit TruncSeries(unsigned order) : coeffs_(order + 1, R(0)) {}
    TruncSeries(unsigned order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, R(0));
    }

    static TruncSeries constant(unsigned order, const R& c) {
        TruncSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    /// The identity series t.
    static TruncSeries identity(unsigned order) {
        TruncSeries s(order);
        if (order >= 1) s.coeffs_[1] = R(1);
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const R& coeff(unsigned i) const { return coeffs_[i]; }
    R& coeff(unsigned i) { return coeffs_[i]; }

    bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }

    TruncSeries operator-() const {
        TruncSeries r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    TruncSeries operator+(const TruncSeries& o) const {
        check_order(o);
        TruncSeries r(*this);
        for (unsigned i = 0; i <= order(); ++i) r.coeffs_[i] = r.coeffs_[i] + o.coeffs_[i];
        return r;
    }

    TruncSeries operator-(const TruncSeries& o) const { return *this + (-o); }

    TruncSeries operator*(const TruncSeries& o) const {
        check_order(o);
        TruncSeries r(order());
        for (unsigned i = 0; i <= order(); ++i) {
            if (coeffs_[i] == R(0)) continue;
            for (unsigned j = 0; i + j <= order(); ++j)
                r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
        }
        return r;
    }

    TruncSeries operator*(const Rat& c) const {
        TruncSeries r(*this);
        for (auto& x : r.coeffs_) x = x * R(c);
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    bool has_zero_constant_term() const { return coeffs_[0] == R(0); }

private:
    void check_order(const TruncSeries& o) const {
        if (order() != o.order()) throw OrderMismatch(order(), o.order());
    }
    std::vector<R> coeffs_;
};

/// exp(f) = sum f^j / j!; requires f(0) = 0.
template <class R>
TruncSeries<R> exp_series(const TruncSeries<R>& f) {
    if (!f.has_zero_constant_term()) throw NonzeroConstantTerm();
    const unsigned n = f.order();
    TruncSeries<R> result = TruncSeries<R>::constant(n, R(1));
    TruncSeries<R> power = TruncSeries<R>::constant(n, R(1));
    for (unsigned j = 1; j <= n; ++j) {
        power = power * f;
        result += power * rat(Int(1), factorial(j));
    }
    return result;
}

/// log(1 + f) = sum (-1)^{j+1} f^j / j; requires f(0) = 0.
template <class R>
TruncSeries<R> log1p_series(const TruncSeries<R>& f) {
    if (!f.has_zero_constant_term()) throw NonzeroConstantTerm();
    const unsigned n = f.order();
    TruncSeries<R> result(n);
    TruncSeries<R> power = TruncSeries<R>::constant(n, R(1));
    for (unsigned j = 1; j <= n; ++j) {
        power = power * f;
        result += power * rat(j % 2 ? 1 : -1, j);
    }
    return result;
}

/// f(g(t)) by Horner accumulation; requires g(0) = 0 and equal orders.
template <class R>
TruncSeries<R> compose(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    if (f.order() != g.order()) throw OrderMismatch(f.order(), g.order());
    if (!g.has_zero_constant_term()) throw NonzeroConstantTerm();
    const unsigned n = f.order();
    TruncSeries<R> result = TruncSeries<R>::constant(n, f.coeff(n));
    for (unsigned i = n; i-- > 0;)
        result = result * g + TruncSeries<R>::constant(n, f.coeff(i));
    return result;
}

/// (1 + f)^alpha = sum binom(alpha, j) f^j; requires f(0) = 0.
template <class R>
TruncSeries<R> binomial_pow_series(const Rat& alpha, const TruncSeries<R>& f) {
    if (!f.has_zero_constant_term()) throw NonzeroConstantTerm();
    const unsigned n = f.order();
    TruncSeries<R> result = TruncSeries<R>::constant(n, R(1));
    TruncSeries<R> power = TruncSeries<R>::constant(n, R(1));
    for (unsigned j = 1; j <= n; ++j) {
        power = power * f;
        result += power * binomial(alpha, j);
    }
    return result;
}

/// Taylor series of sinh^{-1}(z) at 0: the binomial series of
/// (1+z^2)^{-1/2} integrated term by term.
TruncSeries<Rat> arcsinh_series(unsigned order);

/// sinh(z) = sum z^{2i+1}/(2i+1)!.
TruncSeries<Rat> sinh_series(unsigned order);

} // namespace cyclo
