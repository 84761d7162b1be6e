#pragma once

#include <cstdint>

namespace theta {

// Counting summary for Theta(n) = #A[n] on the theta divisor.
struct CountReport {
    int g = 0;
    int n = 2;
    std::uint64_t odd_count = 0;       // points forced onto Theta by parity (n = 2 only)
    std::uint64_t even_vanishing = 0;  // vanishing even thetanulls (n = 2 only)
    std::uint64_t theta_n = 0;
    std::uint64_t bound = 0;           // 4^g - 3^g for n = 2, m^{2g}(4^g - 3^g) for n = 2m
    bool has_bound = true;
    bool achieves_bound = false;
};

// 4^g - 3^g, the sharp bound on Theta(2).
std::uint64_t theta2_bound(int g);

// m^{2g} (4^g - 3^g), the bound on Theta(2m).
std::uint64_t theta_2m_bound(int g, std::uint64_t m);

}  // namespace theta
