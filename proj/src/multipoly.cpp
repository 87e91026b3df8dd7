#include <cyclo/multipoly.hpp>

#include <algorithm>
#include <set>

namespace cyclo {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto [v, e] : m) d += e;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) r.push_back(a[i++]);
        else if (a[i].first > b[j].first) r.push_back(b[j++]);
        else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    r.insert(r.end(), a.begin() + i, a.end());
    r.insert(r.end(), b.begin() + j, b.end());
    return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // lex with lower variable index more significant: walk both sparse
    // vectors; an absent variable counts as exponent 0
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        unsigned va = i < a.size() ? a[i].first : ~0u;
        unsigned vb = j < b.size() ? b[j].first : ~0u;
        if (va < vb) return false;  // a has positive exponent where b has 0 -> a greater
        if (vb < va) return true;
        if (a[i].second != b[j].second) return a[i].second < b[j].second;
        ++i, ++j;
    }
    return false;
}

MultiPoly MultiPoly::variable(unsigned index) {
    return term(rat(1), {{index, 1}});
}

MultiPoly MultiPoly::term(const Rat& c, Monomial m) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

Rat MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<unsigned> MultiPoly::variables() const {
    std::set<unsigned> vs;
    for (const auto& [m, c] : terms_)
        for (auto [v, e] : m) vs.insert(v);
    return {vs.begin(), vs.end()};
}

unsigned MultiPoly::degree_in(unsigned index) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        for (auto [v, e] : m)
            if (v == index) d = std::max(d, e);
    return d;
}

namespace {

bool monomial_is_canonical(const Monomial& m) {
    unsigned prev = 0;
    bool first = true;
    for (auto [v, e] : m) {
        if (e == 0 || (!first && v <= prev)) return false;
        prev = v;
        first = false;
    }
    return true;
}

Monomial canonicalize_monomial(Monomial m) {
    std::erase_if(m, [](const auto& p) { return p.second == 0; });
    std::sort(m.begin(), m.end());
    Monomial out;
    for (auto [v, e] : m) {
        if (!out.empty() && out.back().first == v) out.back().second += e;
        else out.emplace_back(v, e);
    }
    return out;
}

} // namespace

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] =
        monomial_is_canonical(m) ? terms_.emplace(m, c) : terms_.emplace(canonicalize_monomial(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Rat(-c));
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r(*this);
    return r += o;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r(*this);
    return r -= o;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    if (c == 0) return {};
    MultiPoly r(*this);
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

bool MultiPoly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return is_integer(t.second); });
}

Rat MultiPoly::eval(const std::map<unsigned, Rat>& assignment) const {
    Rat acc = 0;
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (auto [v, e] : m) {
            auto it = assignment.find(v);
            if (it == assignment.end()) throw UnassignedVariable(v);
            for (unsigned i = 0; i < e; ++i) term *= it->second;
        }
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::map<unsigned, Rat>& assignment) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Rat scale = c;
        Monomial rest;
        for (auto [v, e] : m) {
            auto it = assignment.find(v);
            if (it == assignment.end()) rest.emplace_back(v, e);
            else
                for (unsigned i = 0; i < e; ++i) scale *= it->second;
        }
        r.add_term(rest, scale);
    }
    return r;
}

namespace {

std::string mono_str(const Monomial& m) {
    std::string s;
    for (auto [v, e] : m) {
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string render_terms(const MultiPoly::TermMap& terms) {
    std::string s;
    for (const auto& [m, c] : terms) {
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (m.empty()) {
            s += rat_str(mag);
        } else {
            if (mag != 1) s += rat_str(mag) + "*";
            s += mono_str(m);
        }
    }
    return s;
}

} // namespace

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    if (is_integral()) return render_terms(terms_);
    // factor out the rational content so the cofactor is integral with
    // coprime coefficients and positive leading coefficient
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content = rat(num_gcd, den_lcm);
    if (terms_.begin()->second < 0) content = -content;
    MultiPoly cofactor = *this * (rat(1) / content);
    return "(" + rat_str(content) + ")*(" + render_terms(cofactor.terms_) + ")";
}

std::pair<MultiPoly, MultiPoly> divide_by_linear(const MultiPoly& p, const Rat& c) {
    // p as a polynomial in x1 with x1-free coefficients
    unsigned deg = p.degree_in(1);
    std::vector<MultiPoly> by_deg(deg + 1);
    for (const auto& [m, coef] : p.terms()) {
        unsigned a = 0;
        Monomial rest;
        for (auto [v, e] : m) {
            if (v == 1) a = e;
            else rest.emplace_back(v, e);
        }
        by_deg[a].add_term(rest, coef);
    }
    // synthetic division at c: q_{a-1} = C_a + c q_a, remainder = C_0 + c q_0
    MultiPoly quotient, running;
    MultiPoly x1 = MultiPoly::variable(1);
    for (unsigned a = deg; a >= 1; --a) {
        running = running * c + by_deg[a];
        quotient += running * x1.pow(a - 1);
    }
    MultiPoly remainder = by_deg[0] + running * c;
    return {quotient, remainder};
}

} // namespace cyclo
