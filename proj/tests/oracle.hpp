#pragma once

// Independent brute-force oracle for Riemann theta values: a plain box sum
// over |k_i| <= N, no lattice reduction, no ellipsoid truncation. Kept free
// of any code from the library's evaluation path.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;

struct DirectTheta {
    Complex value;
    double tail_estimate;  // coarse bound on the omitted part
};

// theta[a,b](z, tau) with half-integer characteristic a,b in {0,1}^g.
inline DirectTheta direct_theta(const Eigen::VectorXcd& z, const Eigen::MatrixXcd& tau,
                                const std::vector<int>& a, const std::vector<int>& b, int box = 50) {
    const int g = static_cast<int>(z.size());
    const double pi = 3.14159265358979323846;
    const Complex I{0.0, 1.0};

    std::vector<int> k(g, -box);
    Complex sum{0.0, 0.0};
    double boundary_max = 0.0;
    bool done = false;
    while (!done) {
        Eigen::VectorXcd kk(g);
        bool on_boundary = false;
        for (int i = 0; i < g; ++i) {
            kk[i] = Complex(k[i] + a[i] / 2.0, 0.0);
            if (k[i] == -box || k[i] == box) on_boundary = true;
        }
        Complex expo = pi * I * (kk.transpose() * tau * kk)(0, 0);
        for (int i = 0; i < g; ++i) expo += 2.0 * pi * I * kk[i] * (z[i] + b[i] / 2.0);
        const Complex term = std::exp(expo);
        sum += term;
        if (on_boundary) boundary_max = std::max(boundary_max, std::abs(term));

        int pos = g - 1;
        while (pos >= 0) {
            if (++k[pos] <= box) break;
            k[pos] = -box;
            --pos;
        }
        if (pos < 0) done = true;
    }

    DirectTheta r;
    r.value = sum;
    // crude: boundary-shell terms dominate the omitted exterior geometrically
    double shell = 1.0;
    for (int i = 0; i < g; ++i) shell *= 2.0 * box + 1.0;
    r.tail_estimate = 10.0 * shell * boundary_max + 1e-300;
    return r;
}

inline DirectTheta direct_theta(const Eigen::VectorXcd& z, const Eigen::MatrixXcd& tau, int box = 50) {
    const int g = static_cast<int>(z.size());
    return direct_theta(z, tau, std::vector<int>(g, 0), std::vector<int>(g, 0), box);
}

}  // namespace oracle
