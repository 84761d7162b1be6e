#pragma once

#include <Eigen/Dense>
#include <complex>

namespace theta {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

// A g x g complex symmetric matrix tau with positive definite imaginary part;
// the analytic avatar of a principally polarized abelian variety
// C^g / (Z^g + tau Z^g). Construction symmetrizes tau and rejects matrices
// that are asymmetric beyond tolerance, not positive definite, or too badly
// conditioned for certified evaluation.
class RiemannMatrix {
public:
    explicit RiemannMatrix(const CMatrix& tau);

    int g() const { return static_cast<int>(tau_.rows()); }
    const CMatrix& tau() const { return tau_; }
    const RMatrix& im() const { return im_; }
    const RMatrix& im_inverse() const { return im_inv_; }
    // Upper-triangular U with U^T U = pi * Im(tau).
    const RMatrix& cholesky_pi() const { return chol_pi_; }
    // Length of the shortest nonzero vector of the lattice U Z^g.
    double shortest_vector() const { return shortest_; }
    double im_min_eigenvalue() const { return lambda_min_; }

    // pi * y^T (Im tau)^{-1} y for y = Im(z); log of the modulus of the
    // exponential growth factor of theta at z.
    double growth_exponent(const RVector& y) const;

private:
    CMatrix tau_;
    RMatrix im_;
    RMatrix im_inv_;
    RMatrix chol_pi_;
    double shortest_ = 0.0;
    double lambda_min_ = 0.0;
};

}  // namespace theta
