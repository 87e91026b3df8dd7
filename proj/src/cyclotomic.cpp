#include <cyclo/cyclotomic.hpp>
#include <cyclo/numtheory.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace cyclo {

namespace {
std::mutex cache_mutex;
std::map<long, std::shared_ptr<const CyclotomicRecord>> cache;

UniPoly x_pow_minus_1(long d) {
    std::vector<Rat> v(d + 1, Rat(0));
    v[0] = rat(-1);
    v[d] = rat(1);
    return UniPoly(std::move(v));
}
} // namespace

std::shared_ptr<const CyclotomicRecord> cyclotomic_poly(long n) {
    if (n < 1) throw std::domain_error("cyclotomic_poly: n must be >= 1");
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    UniPoly phi = mobius_product(n, x_pow_minus_1);
    auto rec = std::make_shared<CyclotomicRecord>();
    rec->n = n;
    rec->poly = std::move(phi);
    rec->phi = rec->poly.degree();
    Rat v = rec->poly.eval(rat(1));
    rec->value_at_1 = v.get_num();

    std::lock_guard lock(cache_mutex);
    return cache.try_emplace(n, std::move(rec)).first->second;
}

long phi_at_1(long n) {
    if (n < 2) throw std::domain_error("phi_at_1: n must be >= 2 (Phi_1(1) = 0)");
    Factorization f = factorize(n);
    return f.pairs.size() == 1 ? f.pairs[0].first : 1;
}

Int deriv_at_1(long n, unsigned k) {
    auto rec = cyclotomic_poly(n);
    Rat v = rec->poly.derivative(k).eval(rat(1));
    return v.get_num(); // integer polynomial, integer derivative values
}

Rat deriv_ratio(long n, unsigned k) {
    if (n < 2) throw std::domain_error("deriv_ratio: n must be >= 2");
    return rat(deriv_at_1(n, k), Int(phi_at_1(n)));
}

} // namespace cyclo
