#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace theta::detail {

// Enumerates all integer vectors k with ||U (k + c)|| <= R for an
// upper-triangular U with positive diagonal, in a fixed deterministic order
// (coordinates chosen from the last to the first, each ascending). Invokes
// visit(k) per point; returns false if more than `budget` points would be
// visited (enumeration is aborted).
inline bool enumerate_ellipsoid(const Eigen::MatrixXd& U, const Eigen::VectorXd& c, double R,
                                std::uint64_t budget,
                                const std::function<void(const Eigen::VectorXi&)>& visit) {
    const int g = static_cast<int>(U.rows());
    Eigen::VectorXi k = Eigen::VectorXi::Zero(g);
    // partial[i] = sum_{j>i} U(i,j) * (k_j + c_j), maintained per level.
    Eigen::MatrixXd partial = Eigen::MatrixXd::Zero(g, g + 1);
    std::uint64_t count = 0;

    struct Frame {
        int lo, hi, cur;
        double remaining;  // R^2 minus contributions of levels above
    };
    std::vector<Frame> stack(g + 1);

    auto level_range = [&](int i, double remaining, int& lo, int& hi) {
        // (U_ii (k_i + c_i) + r_i)^2 <= remaining
        double r_i = 0.0;
        for (int j = i + 1; j < g; ++j) r_i += U(i, j) * (k[j] + c[j]);
        partial(i, 0) = r_i;
        if (remaining < 0) { lo = 0; hi = -1; return; }
        const double half = std::sqrt(remaining);
        const double lof = (-half - r_i) / U(i, i) - c[i];
        const double hif = (half - r_i) / U(i, i) - c[i];
        lo = static_cast<int>(std::ceil(lof - 1e-12));
        hi = static_cast<int>(std::floor(hif + 1e-12));
    };

    int level = g - 1;
    stack[g - 1].remaining = R * R;
    level_range(g - 1, stack[g - 1].remaining, stack[g - 1].lo, stack[g - 1].hi);
    stack[g - 1].cur = stack[g - 1].lo;

    while (level < g) {
        Frame& f = stack[level];
        if (f.cur > f.hi) {  // exhausted this level, pop
            ++level;
            if (level < g) ++stack[level].cur;
            continue;
        }
        k[level] = f.cur;
        const double term = U(level, level) * (k[level] + c[level]) + partial(level, 0);
        const double rem = f.remaining - term * term;
        if (rem < 0) { ++f.cur; continue; }
        if (level == 0) {
            if (++count > budget) return false;
            visit(k);
            ++f.cur;
        } else {
            --level;
            stack[level].remaining = rem;
            level_range(level, rem, stack[level].lo, stack[level].hi);
            stack[level].cur = stack[level].lo;
        }
    }
    return true;
}

// Length of the shortest nonzero vector of the lattice U Z^g.
inline double shortest_lattice_vector(const Eigen::MatrixXd& U) {
    const int g = static_cast<int>(U.rows());
    double best = U.col(0).norm();
    for (int i = 1; i < g; ++i) best = std::min(best, U.col(i).norm());
    const Eigen::VectorXd c = Eigen::VectorXd::Zero(g);
    double best2 = best * best;
    enumerate_ellipsoid(U, c, best, UINT64_MAX, [&](const Eigen::VectorXi& k) {
        if (k.isZero()) return;
        const double n2 = (U * k.cast<double>()).squaredNorm();
        if (n2 < best2) best2 = n2;
    });
    return std::sqrt(best2);
}

}  // namespace theta::detail
