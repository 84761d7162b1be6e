#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracle.hpp"
#include "thetacount/errors.hpp"
#include "thetacount/riemann_matrix.hpp"
#include "thetacount/rng.hpp"
#include "thetacount/theta.hpp"

using namespace theta;
using doctest::Approx;

namespace {

RiemannMatrix tau_i() {
    CMatrix t(1, 1);
    t(0, 0) = Complex(0.0, 1.0);
    return RiemannMatrix(t);
}

RiemannMatrix tau_g2() {
    CMatrix t(2, 2);
    t(0, 0) = Complex(0.3, 1.1);
    t(0, 1) = Complex(-0.15, 0.25);
    t(1, 0) = t(0, 1);
    t(1, 1) = Complex(-0.4, 1.3);
    return RiemannMatrix(t);
}

CVector random_z(Rng& rng, int g, double scale) {
    CVector z(g);
    for (int i = 0; i < g; ++i)
        z[i] = Complex(scale * (rng.next_double() - 0.5), scale * (rng.next_double() - 0.5));
    return z;
}

}  // namespace

TEST_CASE("theta3 null value at tau = i matches the classical constant") {
    // pi^{1/4} / Gamma(3/4), evaluated independently
    const double expect = 1.0864348112133080145753161215102234570702057072452;
    const RiemannMatrix tau = tau_i();
    const CVector z = CVector::Zero(1);
    const ThetaResult r = theta::theta(z, tau, 1e-12);
    CHECK(std::abs(r.value - Complex(expect, 0.0)) < 1e-12);
    CHECK(r.error_bound <= 1e-12);
}

TEST_CASE("odd characteristics vanish at the origin") {
    Rng rng(7);
    for (int g = 1; g <= 3; ++g) {
        const RiemannMatrix tau = (g == 1) ? tau_i() : RiemannMatrix([&] {
            CMatrix t = CMatrix::Zero(g, g);
            for (int i = 0; i < g; ++i) t(i, i) = Complex(0.0, 1.0 + 0.2 * i);
            t(0, g - 1) = t(g - 1, 0) = Complex(0.1, 0.15);
            return t;
        }());
        const CVector z = CVector::Zero(g);
        for (const auto& c : enumerate_characteristics(g)) {
            if (parity(c) != Parity::odd) continue;
            const ThetaResult r = theta::theta(z, tau, c, 1e-10);
            CHECK(std::abs(r.value) < 1e-10);
        }
    }
}

TEST_CASE("agreement with the direct box-sum oracle, genus 1") {
    const RiemannMatrix tau = tau_i();
    Eigen::MatrixXcd traw(1, 1);
    traw(0, 0) = Complex(0.0, 1.0);
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const CVector z = random_z(rng, 1, 1.5);
        for (std::uint32_t idx = 0; idx < 4; ++idx) {
            const Characteristic c = characteristic_at(1, idx);
            const ThetaResult r = theta::theta(z, tau, c, 1e-11);
            const auto o = oracle::direct_theta(z, traw, {static_cast<int>(c.a_bit(0))},
                                               {static_cast<int>(c.b_bit(0))}, 40);
            CHECK(std::abs(r.value - o.value) <= r.error_bound + o.tail_estimate + 1e-11);
        }
    }
}

TEST_CASE("agreement with the direct box-sum oracle, genus 2") {
    const RiemannMatrix tau = tau_g2();
    const Eigen::MatrixXcd traw = tau.tau();
    Rng rng(12);
    for (int trial = 0; trial < 8; ++trial) {
        const CVector z = random_z(rng, 2, 1.0);
        const std::uint32_t idx = static_cast<std::uint32_t>(rng.next_below(16));
        const Characteristic c = characteristic_at(2, idx);
        const ThetaResult r = theta::theta(z, tau, c, 1e-10);
        const auto o =
            oracle::direct_theta(z, traw, {static_cast<int>(c.a_bit(0)), static_cast<int>(c.a_bit(1))},
                                 {static_cast<int>(c.b_bit(0)), static_cast<int>(c.b_bit(1))}, 25);
        CHECK(std::abs(r.value - o.value) <= r.error_bound + o.tail_estimate + 1e-9);
    }
}

TEST_CASE("diagonal period matrices factor into elliptic values") {
    CMatrix t = CMatrix::Zero(2, 2);
    t(0, 0) = Complex(0.2, 1.0);
    t(1, 1) = Complex(-0.3, 1.7);
    const RiemannMatrix tau2(t);
    CMatrix t0(1, 1), t1(1, 1);
    t0(0, 0) = t(0, 0);
    t1(0, 0) = t(1, 1);
    const RiemannMatrix e0(t0), e1(t1);

    Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const CVector z = random_z(rng, 2, 1.2);
        CVector z0(1), z1(1);
        z0[0] = z[0];
        z1[0] = z[1];
        const ThetaResult joint = theta::theta(z, tau2, 1e-11);
        const ThetaResult f0 = theta::theta(z0, e0, 1e-12);
        const ThetaResult f1 = theta::theta(z1, e1, 1e-12);
        const Complex prod = f0.value * f1.value;
        const double slack = joint.error_bound + std::abs(f0.value) * f1.error_bound +
                             std::abs(f1.value) * f0.error_bound + 1e-10;
        CHECK(std::abs(joint.value - prod) <= slack);
    }
}

TEST_CASE("evenness: theta(-z) = theta(z) for the zero characteristic") {
    const RiemannMatrix tau = tau_g2();
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const CVector z = random_z(rng, 2, 2.0);
        const ThetaResult a = theta::theta(z, tau, 1e-10);
        const ThetaResult b = theta::theta(CVector(-z), tau, 1e-10);
        CHECK(std::abs(a.value - b.value) <= a.error_bound + b.error_bound);
    }
}

TEST_CASE("quasi-periodicity holds within the certified bounds") {
    const RiemannMatrix tau = tau_g2();
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const CVector z = random_z(rng, 2, 1.0);
        Eigen::VectorXi k(2);
        k[0] = static_cast<int>(rng.next_below(5)) - 2;
        k[1] = static_cast<int>(rng.next_below(5)) - 2;
        const auto chk = quasiperiodicity_defect(z, tau, k, 1e-10);
        CHECK(chk.defect <= chk.bound + 1e-12);
    }
}

TEST_CASE("plain-integer periodicity in z") {
    const RiemannMatrix tau = tau_g2();
    Rng rng(43);
    const CVector z = random_z(rng, 2, 1.0);
    CVector shifted = z;
    shifted[0] += 3.0;
    shifted[1] -= 2.0;
    const ThetaResult a = theta::theta(z, tau, 1e-11);
    const ThetaResult b = theta::theta(shifted, tau, 1e-11);
    CHECK(std::abs(a.value - b.value) <= a.error_bound + b.error_bound);
}

TEST_CASE("certified bound dominates the actual error at tighter precision") {
    const RiemannMatrix tau = tau_g2();
    Rng rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const CVector z = random_z(rng, 2, 1.5);
        const ThetaResult loose = theta::theta(z, tau, 1e-6);
        const ThetaResult tight = theta::theta(z, tau, 1e-13);
        CHECK(std::abs(loose.value - tight.value) <= loose.error_bound + tight.error_bound);
        CHECK(normalized_error(z, tau, loose) <= 1e-6 * (1.0 + 1e-12));
        CHECK(loose.error_bound >= 0.0);
    }
}

TEST_CASE("batch evaluation is bitwise identical to individual calls") {
    const RiemannMatrix tau = tau_g2();
    Rng rng(61);
    std::vector<CVector> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(random_z(rng, 2, 1.0));
    const auto chars = enumerate_characteristics(2);
    const auto batch = theta_batch(pts, tau, chars, 1e-9);
    REQUIRE(batch.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        REQUIRE(batch[i].size() == chars.size());
        for (std::size_t j = 0; j < chars.size(); ++j) {
            const ThetaResult one = theta::theta(pts[i], tau, chars[j], 1e-9);
            CHECK(batch[i][j].value.real() == one.value.real());
            CHECK(batch[i][j].value.imag() == one.value.imag());
            CHECK(batch[i][j].error_bound == one.error_bound);
        }
    }
}

TEST_CASE("repeated evaluation is deterministic to the bit") {
    const RiemannMatrix tau = tau_g2();
    Rng rng(71);
    const CVector z = random_z(rng, 2, 1.3);
    const ThetaResult a = theta::theta(z, tau, 1e-10);
    const ThetaResult b = theta::theta(z, tau, 1e-10);
    CHECK(a.value.real() == b.value.real());
    CHECK(a.value.imag() == b.value.imag());
    CHECK(a.error_bound == b.error_bound);
}

TEST_CASE("large imaginary parts: normalized error still meets the target") {
    const RiemannMatrix tau = tau_g2();
    CVector z(2);
    z[0] = Complex(0.3, 4.0);
    z[1] = Complex(-0.2, 3.5);
    const ThetaResult r = theta::theta(z, tau, 1e-9);
    CHECK(normalized_error(z, tau, r) <= 1e-9 * (1.0 + 1e-12));
    CHECK(std::isfinite(std::abs(r.value)));
    CHECK(std::abs(r.value) > 1.0);  // growth factor dominates
}

TEST_CASE("invalid inputs are rejected") {
    const RiemannMatrix tau = tau_g2();
    const CVector z = CVector::Zero(2);
    CHECK_THROWS_AS(theta::theta(z, tau, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(theta::theta(z, tau, -1e-9), std::invalid_argument);
    CHECK_THROWS_AS(theta::theta(CVector::Zero(3), tau, 1e-9), std::invalid_argument);
    Characteristic wrong{0, 0, 3};
    CHECK_THROWS_AS(theta::theta(z, tau, wrong, 1e-9), std::invalid_argument);

    CMatrix asym(2, 2);
    asym << Complex(0.0, 1.0), Complex(0.4, 0.1), Complex(-0.4, 0.1), Complex(0.0, 1.0);
    CHECK_THROWS_AS(RiemannMatrix{asym}, std::invalid_argument);

    CMatrix neg(1, 1);
    neg(0, 0) = Complex(0.0, -1.0);
    CHECK_THROWS_AS(RiemannMatrix{neg}, std::invalid_argument);
}

TEST_CASE("precision failures carry the best achievable bound") {
    // a nearly-degenerate imaginary part forces a huge enumeration region
    CMatrix t(2, 2);
    t(0, 0) = Complex(0.0, 1e-4);
    t(1, 1) = Complex(0.0, 1e-4);
    t(0, 1) = t(1, 0) = Complex(0.0, 0.0);
    const RiemannMatrix tau(t);
    const CVector z = CVector::Zero(2);
    try {
        (void)theta::theta(z, tau, 1e-12);
        FAIL("expected PrecisionError");
    } catch (const PrecisionError& e) {
        CHECK(e.best_bound() > 1e-12);
        CHECK(std::isfinite(e.best_bound()));
    }
}
