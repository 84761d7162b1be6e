#include "thetacount/riemann_matrix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lattice.hpp"

namespace theta {

RiemannMatrix::RiemannMatrix(const CMatrix& tau) {
    if (tau.rows() < 1 || tau.rows() != tau.cols())
        throw std::invalid_argument("RiemannMatrix: tau must be square and nonempty");
    const double scale = tau.cwiseAbs().maxCoeff();
    const double asym = (tau - tau.transpose()).cwiseAbs().maxCoeff();
    if (scale == 0.0 || asym > 1e-12 * scale)
        throw std::invalid_argument("RiemannMatrix: tau is not symmetric within tolerance");
    tau_ = (tau + tau.transpose()) / 2.0;
    im_ = tau_.imag();

    Eigen::SelfAdjointEigenSolver<RMatrix> es(im_);
    if (es.info() != Eigen::Success)
        throw std::invalid_argument("RiemannMatrix: eigen decomposition of Im(tau) failed");
    lambda_min_ = es.eigenvalues().minCoeff();
    const double lambda_max = es.eigenvalues().maxCoeff();
    if (lambda_min_ <= 0.0)
        throw std::invalid_argument("RiemannMatrix: Im(tau) is not positive definite");
    if (lambda_max / lambda_min_ > 1e8)
        throw std::invalid_argument("RiemannMatrix: Im(tau) condition number exceeds 1e8");

    Eigen::LLT<RMatrix> llt(std::numbers::pi * im_);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("RiemannMatrix: Cholesky of Im(tau) failed");
    chol_pi_ = RMatrix(llt.matrixL()).transpose();  // upper triangular
    im_inv_ = im_.inverse();
    shortest_ = detail::shortest_lattice_vector(chol_pi_);
}

double RiemannMatrix::growth_exponent(const RVector& y) const {
    return std::numbers::pi * y.dot(im_inv_ * y);
}

}  // namespace theta
