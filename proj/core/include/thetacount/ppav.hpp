#pragma once

#include <cstdint>
#include <vector>

#include "thetacount/characteristics.hpp"
#include "thetacount/count_report.hpp"
#include "thetacount/riemann_matrix.hpp"
#include "thetacount/theta.hpp"

namespace theta {

// An n-torsion point z = (m + tau k)/n of C^g/(Z^g + tau Z^g), stored by its
// integer numerators with components in {0, ..., n-1}.
struct TorsionPoint {
    std::vector<int> m;
    std::vector<int> k;
    int order = 1;

    int g() const { return static_cast<int>(m.size()); }
    CVector embed(const RiemannMatrix& tau) const;
};

// Order-2 points correspond to characteristics by a = k, b = m.
Characteristic to_characteristic(const TorsionPoint& p);
TorsionPoint to_torsion_point(const Characteristic& c);

// All n^{2g} n-torsion points in a deterministic order. Throws if the count
// exceeds 10^7.
std::vector<TorsionPoint> torsion_points(int g, int n);

// diag(tau_1, ..., tau_g); the period matrix of a product of elliptic curves.
RiemannMatrix product_ppav(const std::vector<Complex>& taus);

// Deterministic pseudo-random period matrix tau = S + i(I + Q/4) with S
// random symmetric in [-1/2,1/2] and Q random symmetric PSD of unit norm.
RiemannMatrix random_ppav(int g, std::uint64_t seed);

enum class Verdict { vanishes, nonvanishing, ambiguous };

struct VanishVerdict {
    TorsionPoint point;
    double theta_abs = 0.0;     // growth-normalized, scale-free magnitude
    double error_bound = 0.0;   // normalized likewise
    Verdict verdict = Verdict::ambiguous;
};

// Two-threshold classification of a scale-free magnitude q with certified
// error e: vanishes if q < tol and e < tol/10, nonvanishing if q > 10*tol,
// ambiguous otherwise.
Verdict classify(double q, double e, double vanish_tol);

struct CountOptions {
    double eps = 1e-9;
    double vanish_tol = 1e-6;
    int threads = 1;
};

// Theta(2): counts 2-torsion points on the theta divisor. Odd points are
// counted by parity alone; even thetanulls are evaluated and classified after
// normalizing by the largest even thetanull. An ambiguous verdict throws
// AmbiguousVerdict.
CountReport theta2_count(const RiemannMatrix& tau, const CountOptions& opts = {});

// Theta(n) by direct enumeration of all n^{2g} torsion points. For n = 2m the
// report carries the bound m^{2g}(4^g - 3^g); a violation throws.
CountReport theta_n_count(const RiemannMatrix& tau, int n, const CountOptions& opts = {});

// Per-point verdicts behind theta2_count, for diagnostics.
std::vector<VanishVerdict> thetanull_verdicts(const RiemannMatrix& tau, const CountOptions& opts = {});

}  // namespace theta
