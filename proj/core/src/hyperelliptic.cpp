#include "thetacount/hyperelliptic.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

namespace theta {

namespace {

// Lexicographic comparison of subsets as sorted element lists. The empty
// sequence precedes everything; otherwise, for complementary sets, whichever
// holds the smallest differing element wins.
bool lex_less(std::uint32_t s, std::uint32_t t, int nbits) {
    if (s == 0) return t != 0;
    if (t == 0) return false;
    for (int i = 0; i < nbits; ++i) {
        const bool in_s = (s >> i) & 1u;
        const bool in_t = (t >> i) & 1u;
        if (in_s != in_t) return in_s;
    }
    return false;
}

std::uint32_t odd_point_set(int g) {
    // Branch points 1, 3, ..., 2g+1 (bits 0, 2, ..., 2g).
    std::uint32_t u = 0;
    for (int i = 0; i <= 2 * g; i += 2) u |= 1u << i;
    return u;
}

void require_genus(int g, int lo, int hi, const char* where) {
    if (g < lo || g > hi) throw std::out_of_range(std::string(where) + ": genus out of range");
}

}  // namespace

int BranchSubsetClass::size() const { return std::popcount(members); }

BranchSubsetClass make_branch_class(int g, std::uint32_t subset) {
    require_genus(g, 1, 10, "make_branch_class");
    const int n = 2 * g + 2;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
    if (subset & ~full) throw std::invalid_argument("make_branch_class: subset exceeds branch points");
    if (std::popcount(subset) % 2 != 0)
        throw std::invalid_argument("make_branch_class: subset must have even cardinality");
    const std::uint32_t comp = full & ~subset;
    BranchSubsetClass cls;
    cls.g = g;
    cls.members = lex_less(subset, comp, n) ? subset : comp;
    return cls;
}

std::vector<BranchSubsetClass> branch_subset_classes(int g) {
    require_genus(g, 1, 10, "branch_subset_classes");
    const int n = 2 * g + 2;
    std::vector<BranchSubsetClass> out;
    out.reserve(std::size_t{1} << (2 * g));
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) % 2 != 0) continue;
        BranchSubsetClass cls = make_branch_class(g, s);
        if (cls.members == s) out.push_back(cls);
    }
    return out;
}

int vanishing_order(const BranchSubsetClass& cls) {
    const int g = cls.g;
    const std::uint32_t u = odd_point_set(g);
    int d = std::popcount(cls.members ^ u);
    d = std::min(d, 2 * g + 2 - d);  // complement representative gives the mirror size
    assert((g + 1 - d) % 2 == 0);
    return (g + 1 - d) / 2;
}

std::vector<BranchSubsetClass> hyperelliptic_nonvanishing_classes(int g) {
    require_genus(g, 1, 10, "hyperelliptic_nonvanishing_classes");
    std::vector<BranchSubsetClass> out;
    for (const auto& cls : branch_subset_classes(g)) {
        if (vanishing_order(cls) == 0) out.push_back(cls);
    }
    return out;
}

Characteristic branch_point_eta(int g, int point) {
    require_genus(g, 1, 10, "branch_point_eta");
    if (point < 1 || point > 2 * g + 2) throw std::out_of_range("branch_point_eta: point out of range");
    Characteristic c;
    c.g = g;
    auto unit = [g](int k) -> std::uint32_t { return 1u << (g - k); };          // e_k, 1-based
    auto ones = [g](int j) -> std::uint32_t {                                   // first j components
        std::uint32_t m = 0;
        for (int i = 1; i <= j; ++i) m |= 1u << (g - i);
        return m;
    };
    if (point == 2 * g + 2) return c;                       // eta = 0
    if (point == 2 * g + 1) { c.b = ones(g); return c; }    // eta = [0; 1...1]
    const int k = (point + 1) / 2;
    c.a = unit(k);
    c.b = (point % 2 == 1) ? ones(k - 1) : ones(k);
    return c;
}

Characteristic class_characteristic(const BranchSubsetClass& cls) {
    Characteristic acc;
    acc.g = cls.g;
    for (int i = 0; i < 2 * cls.g + 2; ++i) {
        if ((cls.members >> i) & 1u) {
            const Characteristic eta = branch_point_eta(cls.g, i + 1);
            acc.a ^= eta.a;
            acc.b ^= eta.b;
        }
    }
    return acc;
}

std::uint64_t theta2_bound(int g) {
    std::uint64_t p3 = 1;
    for (int i = 0; i < g; ++i) p3 *= 3;
    return (std::uint64_t{1} << (2 * g)) - p3;
}

std::uint64_t theta_2m_bound(int g, std::uint64_t m) {
    std::uint64_t f = 1;
    for (int i = 0; i < 2 * g; ++i) f *= m;
    return f * theta2_bound(g);
}

CountReport hyperelliptic_theta2_count(int g) {
    require_genus(g, 1, 20, "hyperelliptic_theta2_count");
    CountReport r;
    r.g = g;
    r.n = 2;
    const std::uint64_t total = std::uint64_t{1} << (2 * g);
    const std::uint64_t nonvanishing = binomial(2 * g + 1, g);
    r.theta_n = total - nonvanishing;
    r.odd_count = odd_characteristic_count(g);
    r.even_vanishing = r.theta_n - r.odd_count;
    r.bound = theta2_bound(g);
    r.achieves_bound = (r.theta_n == r.bound);
    if (g <= 10) {
        // Cross-check the closed form against the branch-point combinatorics.
        std::uint64_t enumerated = 0, odd_enum = 0;
        for (const auto& cls : branch_subset_classes(g)) {
            const int m = vanishing_order(cls);
            if (m > 0) ++enumerated;
            if (m % 2 == 1) ++odd_enum;
        }
        if (enumerated != r.theta_n || odd_enum != r.odd_count)
            throw std::logic_error("hyperelliptic_theta2_count: enumeration disagrees with closed form");
    }
    return r;
}

}  // namespace theta
