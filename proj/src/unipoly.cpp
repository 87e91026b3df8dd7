#include <cyclo/unipoly.hpp>
#include <cyclo/numtheory.hpp>

#include <algorithm>

namespace cyclo {

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::monomial(const Rat& c, unsigned e) {
    if (c == 0) return UniPoly{};
    std::vector<Rat> v(e + 1, Rat(0));
    v[e] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rat& c) const {
    if (c == 0) return {};
    UniPoly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

UniPoly UniPoly::derivative(unsigned k) const {
    std::vector<Rat> v = coeffs_;
    for (unsigned round = 0; round < k; ++round) {
        if (v.empty()) break;
        for (size_t i = 1; i < v.size(); ++i) v[i - 1] = rat(static_cast<long>(i)) * v[i];
        v.pop_back();
    }
    return UniPoly(std::move(v));
}

Rat UniPoly::eval(const Rat& a) const {
    Rat acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * a + coeffs_[i];
    return acc;
}

bool UniPoly::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return is_integer(c); });
}

std::vector<unsigned long> UniPoly::reduce_mod_p(unsigned long q) const {
    if (q < 2) throw std::domain_error("reduce_mod_p: modulus must be >= 2");
    if (!is_integral()) throw std::domain_error("reduce_mod_p: polynomial is not integral");
    std::vector<unsigned long> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = mpz_fdiv_ui(coeffs_[i].get_num().get_mpz_t(), q);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (i == 0) {
            s += rat_str(mag);
        } else {
            if (mag != 1) s += rat_str(mag) + "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw NonDivisible(a);

    std::vector<Rat> rem = a.coeffs();
    std::vector<Rat> quot(a.degree() - b.degree() + 1, Rat(0));
    const Rat lead = b.coeff(b.degree());
    for (size_t qi = quot.size(); qi-- > 0;) {
        Rat c = rem[qi + b.degree()] / lead;
        quot[qi] = c;
        if (c == 0) continue;
        for (long j = 0; j <= b.degree(); ++j)
            rem[qi + j] -= c * b.coeff(j);
    }
    UniPoly remainder{std::vector<Rat>(rem.begin(), rem.begin() + b.degree())};
    if (!remainder.is_zero()) throw NonDivisible(remainder);
    return UniPoly(std::move(quot));
}

UniPoly mobius_product(long n, const std::function<UniPoly(long)>& family) {
    UniPoly num(1), den(1);
    for (long d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 0) continue;
        UniPoly f = family(d);
        if (f.is_zero()) throw std::domain_error("mobius_product: family member is zero");
        (mu > 0 ? num : den) *= f;
    }
    return exact_div(num, den);
}

} // namespace cyclo
