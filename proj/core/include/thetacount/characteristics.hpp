#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace theta {

enum class Parity { even, odd };

// Half-integer theta characteristic [a/2; b/2], a,b in {0,1}^g.
// Components are packed MSB-first, so numeric order on (a,b) coincides with
// lexicographic order on the component vectors.
struct Characteristic {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    int g = 1;

    int a_bit(int i) const { return static_cast<int>((a >> (g - 1 - i)) & 1u); }
    int b_bit(int i) const { return static_cast<int>((b >> (g - 1 - i)) & 1u); }

    friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

inline Parity parity(const Characteristic& c) {
    return (std::popcount(c.a & c.b) & 1) ? Parity::odd : Parity::even;
}

// Maximum genus for full enumeration; 4^12 characteristics is the largest
// list we are willing to materialize.
inline constexpr int kMaxEnumGenus = 12;

// The index-th characteristic of genus g in lexicographic order,
// 0 <= index < 4^g.
Characteristic characteristic_at(int g, std::uint64_t index);

// All 4^g characteristics, lexicographic on (a,b). Throws std::out_of_range
// unless 1 <= g <= kMaxEnumGenus.
std::vector<Characteristic> enumerate_characteristics(int g);

// Concatenation of characteristics; the characteristic of a product ppav is
// the concatenation of the factor characteristics.
Characteristic product_characteristic(const Characteristic& c1, const Characteristic& c2);

std::uint64_t count_characteristics(int g);       // 4^g
std::uint64_t odd_characteristic_count(int g);    // 2^{g-1}(2^g - 1)
std::uint64_t even_characteristic_count(int g);   // 2^{g-1}(2^g + 1)

std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace theta
