#include "torusgate/transform/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace torusgate {

double DyadicCoefficient::value() const {
    return static_cast<double>(alpha) * std::pow(2.0, -static_cast<double>(beta));
}

std::vector<ShiftTerm> csd_recipe(int128_t alpha, uint32_t beta) {
    // Non-adjacent form: digits in {-1, 0, +1}, no two adjacent nonzero.
    std::vector<ShiftTerm> recipe;
    int128_t x = alpha;
    int e = 0;
    while (x != 0) {
        if (x & 1) {
            const int digit = 2 - static_cast<int>(x & 3);  // +1 if x%4==1, -1 if x%4==3
            recipe.push_back(ShiftTerm{static_cast<int8_t>(static_cast<int>(beta) - e),
                                       static_cast<int8_t>(digit)});
            x -= digit;
        }
        x >>= 1;
        ++e;
    }
    return recipe;
}

int128_t recipe_numerator(const DyadicCoefficient& c) {
    int128_t sum = 0;
    for (const ShiftTerm& t : c.recipe) {
        const int e = static_cast<int>(c.beta) - t.shift;
        sum += static_cast<int128_t>(t.sign) << e;
    }
    return sum;
}

DyadicCoefficient quantize_dyadic(long double t, uint32_t beta) {
    if (beta < 4 || beta > 64) throw std::invalid_argument("quantize_dyadic: beta out of [4, 64]");
    if (!(t > -2.0L && t < 2.0L)) throw std::invalid_argument("quantize_dyadic: |t| must be < 2");
    const long double scaled = t * std::pow(2.0L, static_cast<long double>(beta));
    // Nearest integer (ties up) into a 128-bit numerator via exact 32-bit halves.
    const long double rounded = std::floor(scaled + 0.5L);
    const long double hi = std::floor(rounded * 0x1.0p-32L);
    const long double lo = rounded - hi * 0x1.0p32L;
    DyadicCoefficient c;
    c.beta = beta;
    c.alpha = (static_cast<int128_t>(static_cast<long long>(hi)) << 32) +
              static_cast<int128_t>(static_cast<long long>(lo));
    c.recipe = csd_recipe(c.alpha, beta);
    return c;
}

int64_t apply_dyadic_recipe(int64_t x, const DyadicCoefficient& c) {
    int128_t acc = 0;
    for (const ShiftTerm& t : c.recipe) {
        const int e = static_cast<int>(c.beta) - t.shift;
        const int128_t term = static_cast<int128_t>(x) << e;
        acc += t.sign > 0 ? term : -term;
    }
    acc += static_cast<int128_t>(1) << (c.beta - 1);
    return static_cast<int64_t>(acc >> c.beta);
}

}  // namespace torusgate
