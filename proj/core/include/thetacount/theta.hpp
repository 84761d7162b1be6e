#pragma once

#include <vector>

#include "thetacount/characteristics.hpp"
#include "thetacount/riemann_matrix.hpp"

namespace theta {

// A theta value together with a certified absolute error bound.
struct ThetaResult {
    Complex value;
    double error_bound = 0.0;
};

inline constexpr std::uint64_t kLatticePointBudget = 10'000'000;

// theta[a,b](z, tau) = sum_k exp(pi i (k+a/2)^T tau (k+a/2)
//                               + 2 pi i (k+a/2)^T (z+b/2)),
// evaluated by ellipsoid summation in the Cholesky frame of pi*Im(tau) with a
// truncation radius chosen from a Gaussian tail bound, so that
// |value - theta[a,b](z,tau)| <= error_bound <= eps * exp(pi y^T Y^{-1} y),
// y = Im(z): eps targets the growth-normalized value (for real z this is an
// absolute bound; an absolute target below the growth scale is not
// representable in doubles).
// Throws PrecisionError if eps is unreachable within the lattice-point budget.
ThetaResult theta(const CVector& z, const RiemannMatrix& tau, const Characteristic& c, double eps);

// Zero characteristic.
ThetaResult theta(const CVector& z, const RiemannMatrix& tau, double eps);

// result[i][j] = theta(points[i], tau, chars[j], eps), bit for bit.
std::vector<std::vector<ThetaResult>> theta_batch(const std::vector<CVector>& points,
                                                  const RiemannMatrix& tau,
                                                  const std::vector<Characteristic>& chars,
                                                  double eps);

struct QuasiPeriodicityCheck {
    double defect = 0.0;  // |theta(z + tau k) - exp(-pi i k^T tau k - 2 pi i k^T z) theta(z)|
    double bound = 0.0;   // propagated certified bound on the defect
};

QuasiPeriodicityCheck quasiperiodicity_defect(const CVector& z, const RiemannMatrix& tau,
                                              const Eigen::VectorXi& k, double eps);

// |value| with the exponential growth factor exp(pi y^T (Im tau)^{-1} y),
// y = Im(z), divided out; the scale-free magnitude used for vanishing
// decisions.
double normalized_abs(const CVector& z, const RiemannMatrix& tau, const ThetaResult& r);
double normalized_error(const CVector& z, const RiemannMatrix& tau, const ThetaResult& r);

}  // namespace theta
