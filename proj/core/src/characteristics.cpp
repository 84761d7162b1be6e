#include "thetacount/characteristics.hpp"

#include <stdexcept>

namespace theta {

Characteristic characteristic_at(int g, std::uint64_t index) {
    if (g < 1 || g > kMaxEnumGenus) throw std::out_of_range("characteristic_at: genus out of range");
    const std::uint64_t n = count_characteristics(g);
    if (index >= n) throw std::out_of_range("characteristic_at: index out of range");
    const std::uint32_t mask = (1u << g) - 1u;
    Characteristic c;
    c.g = g;
    c.a = static_cast<std::uint32_t>(index >> g) & mask;
    c.b = static_cast<std::uint32_t>(index) & mask;
    return c;
}

std::vector<Characteristic> enumerate_characteristics(int g) {
    if (g < 1 || g > kMaxEnumGenus) throw std::out_of_range("enumerate_characteristics: genus out of range");
    const std::uint64_t n = count_characteristics(g);
    std::vector<Characteristic> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(characteristic_at(g, i));
    return out;
}

Characteristic product_characteristic(const Characteristic& c1, const Characteristic& c2) {
    Characteristic c;
    c.g = c1.g + c2.g;
    if (c.g > 24) throw std::out_of_range("product_characteristic: combined genus too large");
    c.a = (c1.a << c2.g) | c2.a;
    c.b = (c1.b << c2.g) | c2.b;
    return c;
}

std::uint64_t count_characteristics(int g) { return std::uint64_t{1} << (2 * g); }

std::uint64_t odd_characteristic_count(int g) {
    return (std::uint64_t{1} << (g - 1)) * ((std::uint64_t{1} << g) - 1);
}

std::uint64_t even_characteristic_count(int g) {
    return (std::uint64_t{1} << (g - 1)) * ((std::uint64_t{1} << g) + 1);
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace theta
