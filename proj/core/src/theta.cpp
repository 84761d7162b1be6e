#include "thetacount/theta.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lattice.hpp"
#include "thetacount/errors.hpp"

namespace theta {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// Upper incomplete gamma for s in {1/2, 1, 3/2, 2, ...} via
// Gamma(1/2,x) = sqrt(pi) erfc(sqrt(x)), Gamma(1,x) = exp(-x) and the
// recurrence Gamma(s+1,x) = s Gamma(s,x) + x^s exp(-x).
double upper_gamma_half(int twice_s, double x) {
    double val;
    int t;
    if (twice_s % 2 == 1) {
        val = std::sqrt(kPi) * std::erfc(std::sqrt(x));
        t = 1;
    } else {
        val = std::exp(-x);
        t = 2;
    }
    while (t < twice_s) {
        val = (t / 2.0) * val + std::pow(x, t / 2.0) * std::exp(-x);
        t += 2;
    }
    return val;
}

// Bound on sum_{||U(k+c)|| > R} exp(-||U(k+c)||^2) for any shift c, where rho
// is the shortest nonzero vector of the lattice U Z^g. Packing argument:
// radius-rho/2 balls around lattice points are disjoint. Requires R >= rho.
double tail_bound(int g, double rho, double R) {
    if (R < rho) return std::numeric_limits<double>::infinity();
    const double a2 = (R - rho) * (R - rho);
    double sum = 0.0;
    for (int j = 0; j < g; ++j) {
        sum += static_cast<double>(binomial(g - 1, j)) * std::pow(rho / 2.0, g - 1 - j) * 0.5 *
               upper_gamma_half(j + 1, a2);
    }
    return g * std::pow(2.0 / rho, g) * sum;
}

// Rough count of lattice points inside the radius-R ellipsoid; used only to
// refuse hopeless radii before enumerating.
double estimated_point_count(const RiemannMatrix& tau, double R) {
    const int g = tau.g();
    const double ball = std::pow(kPi, g / 2.0) / std::tgamma(g / 2.0 + 1.0) * std::pow(R + tau.shortest_vector(), g);
    return ball / tau.cholesky_pi().determinant();
}

struct KahanSum {
    Complex sum{0.0, 0.0};
    Complex comp{0.0, 0.0};
    void add(Complex term) {
        const Complex y = term - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// theta(w, tau) with the zero characteristic. eps is the target on the
// growth-normalized value: on success
//   |value - theta(w,tau)| <= error_bound <= eps * exp(pi y^T Y^{-1} y),
// y = Im(w). An absolute target below that scale is unrepresentable in
// doubles once the growth factor is large.
ThetaResult theta_kernel(const CVector& w, const RiemannMatrix& tau, double eps) {
    const int g = tau.g();
    const CMatrix& T = tau.tau();
    const RMatrix& U = tau.cholesky_pi();
    const double rho = tau.shortest_vector();

    // Reduce w modulo Z^g + tau Z^g; the split-off automorphy factor is P.
    const RVector y = w.imag();
    const RVector c0 = tau.im_inverse() * y;
    RVector k0(g), m0(g);
    for (int i = 0; i < g; ++i) k0[i] = std::round(c0[i]);
    const CVector w1 = w - T * k0.cast<Complex>();
    for (int i = 0; i < g; ++i) m0[i] = std::round(w1[i].real());
    const CVector wr = w1 - m0.cast<Complex>();

    const Complex pexp = -kPi * kI * (k0.cast<Complex>().transpose() * T * k0.cast<Complex>())(0, 0) -
                         2.0 * kPi * kI * k0.cast<Complex>().dot(wr);
    const Complex P = std::exp(pexp);
    const double absP = std::abs(P);

    const RVector yr = wr.imag();
    const RVector c = tau.im_inverse() * yr;
    const double growth = std::exp(tau.growth_exponent(yr));

    // Pick the smallest radius whose certified tail satisfies the normalized
    // target: tail/growth of the reduced sum must stay below eps/2.
    double R = rho + 1.0;
    while (tail_bound(g, rho, R) > 0.5 * eps) {
        R += 0.25;
        if (estimated_point_count(tau, R) > static_cast<double>(kLatticePointBudget)) {
            const double best = tail_bound(g, rho, R - 0.25);
            std::ostringstream msg;
            msg << "theta: requested precision " << eps
                << " unreachable within lattice budget; best achievable normalized bound " << best;
            throw PrecisionError(msg.str(), best);
        }
    }

    KahanSum acc;
    double abs_sum = 0.0;
    const bool ok = detail::enumerate_ellipsoid(U, c, R, kLatticePointBudget, [&](const Eigen::VectorXi& k) {
        const CVector kc = k.cast<double>().cast<Complex>();
        const Complex e = kPi * kI * (kc.transpose() * T * kc)(0, 0) + 2.0 * kPi * kI * kc.dot(wr);
        const Complex term = std::exp(e);
        acc.add(term);
        abs_sum += std::abs(term);
    });
    if (!ok) {
        throw PrecisionError("theta: lattice budget exceeded during enumeration",
                             tail_bound(g, rho, R));
    }

    const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * abs_sum;
    const double normalized_err = tail_bound(g, rho, R) + rounding / growth;
    if (!(normalized_err <= eps)) {
        throw PrecisionError("theta: certified bound exceeds requested precision", normalized_err);
    }
    ThetaResult r;
    r.value = P * acc.sum;
    r.error_bound = absP * growth * normalized_err;
    return r;
}

}  // namespace

ThetaResult theta(const CVector& z, const RiemannMatrix& tau, const Characteristic& c, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("theta: eps must be positive");
    const int g = tau.g();
    if (static_cast<int>(z.size()) != g || c.g != g)
        throw std::invalid_argument("theta: dimension mismatch between z, tau and characteristic");

    RVector ha(g), hb(g);
    for (int i = 0; i < g; ++i) {
        ha[i] = c.a_bit(i) / 2.0;
        hb[i] = c.b_bit(i) / 2.0;
    }
    const CVector shift = tau.tau() * ha.cast<Complex>() + hb.cast<Complex>();
    const CVector w = z + shift;
    const Complex qexp = kPi * kI * (ha.cast<Complex>().transpose() * tau.tau() * ha.cast<Complex>())(0, 0) +
                         2.0 * kPi * kI * ha.cast<Complex>().dot(z + hb.cast<Complex>());
    const Complex Q = std::exp(qexp);
    const double absQ = std::abs(Q);

    // Inner target so that the certified bound, normalized by the growth
    // factor at z itself, stays below eps.
    const double delta =
        tau.growth_exponent(z.imag()) - tau.growth_exponent(w.imag()) - qexp.real();
    const ThetaResult inner = theta_kernel(w, tau, eps * std::exp(delta));
    ThetaResult r;
    r.value = Q * inner.value;
    r.error_bound = absQ * inner.error_bound;
    return r;
}

ThetaResult theta(const CVector& z, const RiemannMatrix& tau, double eps) {
    Characteristic zero;
    zero.g = tau.g();
    return theta(z, tau, zero, eps);
}

std::vector<std::vector<ThetaResult>> theta_batch(const std::vector<CVector>& points,
                                                  const RiemannMatrix& tau,
                                                  const std::vector<Characteristic>& chars,
                                                  double eps) {
    std::vector<std::vector<ThetaResult>> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        out[i].reserve(chars.size());
        for (const auto& c : chars) out[i].push_back(theta(points[i], tau, c, eps));
    }
    return out;
}

QuasiPeriodicityCheck quasiperiodicity_defect(const CVector& z, const RiemannMatrix& tau,
                                              const Eigen::VectorXi& k, double eps) {
    const CVector kc = k.cast<double>().cast<Complex>();
    const CVector shifted = z + tau.tau() * kc;
    const ThetaResult lhs = theta(shifted, tau, eps);
    const ThetaResult rhs = theta(z, tau, eps);
    const Complex factor =
        std::exp(-kPi * kI * (kc.transpose() * tau.tau() * kc)(0, 0) - 2.0 * kPi * kI * kc.dot(z));
    QuasiPeriodicityCheck chk;
    chk.defect = std::abs(lhs.value - factor * rhs.value);
    chk.bound = lhs.error_bound + std::abs(factor) * rhs.error_bound;
    return chk;
}

double normalized_abs(const CVector& z, const RiemannMatrix& tau, const ThetaResult& r) {
    return std::abs(r.value) * std::exp(-tau.growth_exponent(z.imag()));
}

double normalized_error(const CVector& z, const RiemannMatrix& tau, const ThetaResult& r) {
    return r.error_bound * std::exp(-tau.growth_exponent(z.imag()));
}

}  // namespace theta
