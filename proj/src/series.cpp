#include <cyclo/series.hpp>

namespace cyclo {

TruncSeries<Rat> arcsinh_series(unsigned order) {
    // d/dz arcsinh(z) = (1+z^2)^{-1/2} = sum binom(-1/2, i) z^{2i},
    // so arcsinh(z) = sum binom(-1/2, i)/(2i+1) z^{2i+1}
    TruncSeries<Rat> s(order);
    const Rat half = rat(-1, 2);
    for (unsigned i = 0; 2 * i + 1 <= order; ++i)
        s.coeff(2 * i + 1) = binomial(half, i) / rat(2 * static_cast<long>(i) + 1);
    return s;
}

TruncSeries<Rat> sinh_series(unsigned order) {
    TruncSeries<Rat> s(order);
    for (unsigned i = 0; 2 * i + 1 <= order; ++i)
        s.coeff(2 * i + 1) = rat(Int(1), factorial(2 * i + 1));
    return s;
}

} // namespace cyclo
