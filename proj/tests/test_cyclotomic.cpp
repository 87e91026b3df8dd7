#include <cyclo/cyclotomic.hpp>
#include <cyclo/numtheory.hpp>

#include <doctest.h>

#include <map>

using namespace cyclo;

namespace {

UniPoly from_ints(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.push_back(rat(c));
    return UniPoly(std::move(v));
}

// second oracle: Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, built iteratively
const UniPoly& cyclotomic_by_iterative_division(long n) {
    static std::map<long, UniPoly> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<Rat> v(n + 1, Rat(0));
    v[0] = rat(-1);
    v[n] = rat(1);
    UniPoly num(std::move(v));
    UniPoly den(1);
    for (long d : divisors(n))
        if (d != n) den *= cyclotomic_by_iterative_division(d);
    return memo.emplace(n, exact_div(num, den)).first->second;
}

// Taylor shift: coefficients of p(x+1), so that p^{(k)}(1) = k! * [x^k] p(x+1)
std::vector<Rat> shift_by_one(const UniPoly& p) {
    std::vector<Rat> out(std::max<long>(p.degree() + 1, 1), Rat(0));
    UniPoly pw(1);
    UniPoly x_plus_1 = from_ints({1, 1});
    for (long i = 0; i <= p.degree(); ++i) {
        if (i > 0) pw *= x_plus_1;
        for (long j = 0; j <= pw.degree(); ++j) out[j] += p.coeff(i) * pw.coeff(j);
    }
    return out;
}

} // namespace

TEST_CASE("cyclotomic polynomials: known values") {
    CHECK(cyclotomic_poly(1)->poly == from_ints({-1, 1}));
    CHECK(cyclotomic_poly(2)->poly == from_ints({1, 1}));
    CHECK(cyclotomic_poly(5)->poly == from_ints({1, 1, 1, 1, 1}));
    CHECK(cyclotomic_poly(12)->poly == from_ints({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_poly(12)->poly.str() == "x^4 - x^2 + 1");
    CHECK_THROWS_AS(cyclotomic_poly(0), std::domain_error);
}

TEST_CASE("record invariants and product identity up to 300") {
    for (long n = 1; n <= 300; ++n) {
        auto rec = cyclotomic_poly(n);
        CHECK(rec->phi == euler_phi(n));
        CHECK(rec->poly.coeff(rec->phi) == rat(1)); // monic
        CHECK(rec->poly.is_integral());
        if (n >= 2) CHECK(rec->value_at_1 == phi_at_1(n));

        // prod_{d|n} Phi_d = x^n - 1
        UniPoly prod(1);
        for (long d : divisors(n)) prod *= cyclotomic_poly(d)->poly;
        std::vector<Rat> v(n + 1, Rat(0));
        v[0] = rat(-1);
        v[n] = rat(1);
        CHECK(prod == UniPoly(std::move(v)));
    }
}

TEST_CASE("agreement with the iterative-division oracle") {
    for (long n = 1; n <= 150; ++n)
        CHECK(cyclotomic_poly(n)->poly == cyclotomic_by_iterative_division(n));
}

TEST_CASE("phi_at_1 closed form") {
    CHECK(phi_at_1(9) == 3);
    CHECK(phi_at_1(6) == 1);
    CHECK(phi_at_1(2) == 2);
    CHECK(phi_at_1(125) == 5);
    CHECK(phi_at_1(97) == 97);
    CHECK_THROWS_AS(phi_at_1(1), std::domain_error);
    CHECK_THROWS_AS(phi_at_1(0), std::domain_error);
    for (long n = 2; n <= 300; ++n)
        CHECK(cyclotomic_poly(n)->poly.eval(rat(1)) == rat(phi_at_1(n)));
}

TEST_CASE("derivative values at 1") {
    CHECK(deriv_at_1(5, 1) == 10);
    CHECK(deriv_at_1(5, 3) == 30);
    CHECK(deriv_at_1(1, 0) == 0);
    for (long n = 2; n <= 20; ++n) CHECK(deriv_at_1(n, 0) == phi_at_1(n));
    // vanishes beyond the degree
    CHECK(deriv_at_1(5, 5) == 0);
}

TEST_CASE("derivatives agree with Taylor shift") {
    for (long n = 2; n <= 60; ++n) {
        auto rec = cyclotomic_poly(n);
        auto shifted = shift_by_one(rec->poly);
        for (unsigned k = 0; k <= std::min<long>(rec->phi, 12); ++k)
            CHECK(rat(deriv_at_1(n, k)) == rat(factorial(k)) * shifted[k]);
    }
}

TEST_CASE("derivative ratios") {
    CHECK(deriv_ratio(5, 3) == rat(6));
    CHECK(deriv_ratio(3, 2) == rat(2, 3)); // honest non-integral ratio at k = phi(n)
    for (long n = 2; n <= 30; ++n) CHECK(deriv_ratio(n, 0) == rat(1));
    CHECK_THROWS_AS(deriv_ratio(1, 1), std::domain_error);
}
