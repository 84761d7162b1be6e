#include "thetacount/ppav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "thetacount/errors.hpp"
#include "thetacount/parallel.hpp"
#include "thetacount/rng.hpp"

namespace theta {

int default_thread_count() {
    if (const char* env = std::getenv("THETACOUNT_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

CVector TorsionPoint::embed(const RiemannMatrix& tau) const {
    if (g() != tau.g()) throw std::invalid_argument("TorsionPoint::embed: genus mismatch");
    CVector z(g());
    for (int i = 0; i < g(); ++i) z[i] = Complex(static_cast<double>(m[i]), 0.0);
    for (int i = 0; i < g(); ++i) {
        for (int j = 0; j < g(); ++j) z[i] += tau.tau()(i, j) * static_cast<double>(k[j]);
    }
    return z / static_cast<double>(order);
}

Characteristic to_characteristic(const TorsionPoint& p) {
    if (p.order != 2) throw std::invalid_argument("to_characteristic: order must be 2");
    Characteristic c;
    c.g = p.g();
    for (int i = 0; i < c.g; ++i) {
        c.a |= static_cast<std::uint32_t>(p.k[i] & 1) << (c.g - 1 - i);
        c.b |= static_cast<std::uint32_t>(p.m[i] & 1) << (c.g - 1 - i);
    }
    return c;
}

TorsionPoint to_torsion_point(const Characteristic& c) {
    TorsionPoint p;
    p.order = 2;
    p.m.resize(c.g);
    p.k.resize(c.g);
    for (int i = 0; i < c.g; ++i) {
        p.k[i] = c.a_bit(i);
        p.m[i] = c.b_bit(i);
    }
    return p;
}

std::vector<TorsionPoint> torsion_points(int g, int n) {
    if (g < 1 || n < 1) throw std::invalid_argument("torsion_points: g and n must be positive");
    double total = 1.0;
    for (int i = 0; i < 2 * g; ++i) total *= n;
    if (total > 1e7) throw std::invalid_argument("torsion_points: n^(2g) exceeds the 10^7 budget");
    const std::uint64_t count = static_cast<std::uint64_t>(total);
    std::vector<TorsionPoint> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        TorsionPoint p;
        p.order = n;
        p.m.resize(g);
        p.k.resize(g);
        std::uint64_t rem = idx;
        // lexicographic in (m, k), last coordinate fastest
        for (int i = 2 * g - 1; i >= 0; --i) {
            const int digit = static_cast<int>(rem % n);
            rem /= n;
            if (i < g)
                p.m[i] = digit;
            else
                p.k[i - g] = digit;
        }
        out.push_back(std::move(p));
    }
    return out;
}

RiemannMatrix product_ppav(const std::vector<Complex>& taus) {
    if (taus.empty()) throw std::invalid_argument("product_ppav: need at least one factor");
    for (const auto& t : taus)
        if (!(t.imag() > 0.0)) throw std::invalid_argument("product_ppav: factors need positive imaginary part");
    const int g = static_cast<int>(taus.size());
    CMatrix m = CMatrix::Zero(g, g);
    for (int i = 0; i < g; ++i) m(i, i) = taus[i];
    return RiemannMatrix(m);
}

RiemannMatrix random_ppav(int g, std::uint64_t seed) {
    if (g < 1 || g > 4) throw std::invalid_argument("random_ppav: genus must be in [1,4]");
    Rng rng(seed * 0x51ed2701u + 0x9e3779b9u + static_cast<std::uint64_t>(g));
    RMatrix s(g, g), b(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) s(i, j) = s(j, i) = rng.uniform(-0.5, 0.5);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) b(i, j) = rng.uniform(-1.0, 1.0);
    RMatrix q = b.transpose() * b;
    const double nrm = q.norm();
    if (nrm > 0) q /= nrm;
    const RMatrix im = RMatrix::Identity(g, g) + 0.25 * q;
    CMatrix tau(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) tau(i, j) = Complex(s(i, j), im(i, j));
    return RiemannMatrix(tau);
}

Verdict classify(double q, double e, double vanish_tol) {
    if (q < vanish_tol && e < vanish_tol / 10.0) return Verdict::vanishes;
    if (q > 10.0 * vanish_tol) return Verdict::nonvanishing;
    return Verdict::ambiguous;
}

namespace {

void check_tolerances(const CountOptions& opts) {
    if (!(opts.eps > 0.0) || !(opts.vanish_tol > 0.0) || opts.eps > opts.vanish_tol / 10.0)
        throw std::invalid_argument("counting: require 0 < eps <= vanish_tol/10");
}

[[noreturn]] void ambiguous_abort(const char* where, const VanishVerdict& v) {
    std::ostringstream msg;
    msg << where << ": ambiguous vanishing verdict (|theta| = " << v.theta_abs
        << ", error bound = " << v.error_bound << "); refusing to guess";
    throw AmbiguousVerdict(msg.str());
}

}  // namespace

std::vector<VanishVerdict> thetanull_verdicts(const RiemannMatrix& tau, const CountOptions& opts) {
    check_tolerances(opts);
    const int g = tau.g();
    const CVector origin = CVector::Zero(g);
    const std::uint64_t total = count_characteristics(g);

    std::vector<Characteristic> even;
    for (std::uint64_t i = 0; i < total; ++i) {
        const Characteristic c = characteristic_at(g, i);
        if (parity(c) == Parity::even) even.push_back(c);
    }

    std::vector<ThetaResult> vals(even.size());
    parallel_for(even.size(), opts.threads,
                 [&](std::size_t i) { vals[i] = theta(origin, tau, even[i], opts.eps); });

    double scale = 0.0;
    for (const auto& r : vals) scale = std::max(scale, std::abs(r.value));
    if (scale <= 0.0) throw std::runtime_error("thetanull_verdicts: all even thetanulls are zero");

    std::vector<VanishVerdict> out(even.size());
    for (std::size_t i = 0; i < even.size(); ++i) {
        VanishVerdict v;
        v.point = to_torsion_point(even[i]);
        v.theta_abs = std::abs(vals[i].value) / scale;
        v.error_bound = vals[i].error_bound / scale;
        v.verdict = classify(v.theta_abs, v.error_bound, opts.vanish_tol);
        out[i] = std::move(v);
    }
    return out;
}

CountReport theta2_count(const RiemannMatrix& tau, const CountOptions& opts) {
    const int g = tau.g();
    CountReport r;
    r.g = g;
    r.n = 2;
    r.odd_count = odd_characteristic_count(g);
    for (const auto& v : thetanull_verdicts(tau, opts)) {
        if (v.verdict == Verdict::ambiguous) ambiguous_abort("theta2_count", v);
        if (v.verdict == Verdict::vanishes) ++r.even_vanishing;
    }
    r.theta_n = r.odd_count + r.even_vanishing;
    r.bound = theta2_bound(g);
    r.achieves_bound = (r.theta_n == r.bound);
    if (r.theta_n > r.bound) {
        std::ostringstream msg;
        msg << "theta2_count: count " << r.theta_n << " violates the bound " << r.bound
            << "; this indicates a tolerance fault";
        throw std::runtime_error(msg.str());
    }
    return r;
}

CountReport theta_n_count(const RiemannMatrix& tau, int n, const CountOptions& opts) {
    check_tolerances(opts);
    const int g = tau.g();
    double total = 1.0;
    for (int i = 0; i < 2 * g; ++i) total *= n;
    if (total > 1e6) throw std::invalid_argument("theta_n_count: n^(2g) exceeds the 10^6 budget");

    const auto points = torsion_points(g, n);
    std::vector<CVector> zs(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) zs[i] = points[i].embed(tau);

    std::vector<ThetaResult> vals(points.size());
    parallel_for(points.size(), opts.threads,
                 [&](std::size_t i) { vals[i] = theta(zs[i], tau, opts.eps); });

    // Scale by the largest even thetanull so that classification matches
    // the thetanull route at n = 2.
    double scale = 0.0;
    {
        const CVector origin = CVector::Zero(g);
        const std::uint64_t nc = count_characteristics(g);
        for (std::uint64_t i = 0; i < nc; ++i) {
            const Characteristic c = characteristic_at(g, i);
            if (parity(c) != Parity::even) continue;
            scale = std::max(scale, std::abs(theta(origin, tau, c, opts.eps).value));
        }
    }
    if (scale <= 0.0) throw std::runtime_error("theta_n_count: degenerate scale");

    CountReport r;
    r.g = g;
    r.n = n;
    for (std::size_t i = 0; i < points.size(); ++i) {
        VanishVerdict v;
        v.point = points[i];
        v.theta_abs = normalized_abs(zs[i], tau, vals[i]) / scale;
        v.error_bound = normalized_error(zs[i], tau, vals[i]) / scale;
        v.verdict = classify(v.theta_abs, v.error_bound, opts.vanish_tol);
        if (v.verdict == Verdict::ambiguous) ambiguous_abort("theta_n_count", v);
        if (v.verdict == Verdict::vanishes) ++r.theta_n;
    }
    if (n == 2) {
        r.odd_count = odd_characteristic_count(g);
        r.even_vanishing = r.theta_n - r.odd_count;
    }
    if (n % 2 == 0) {
        r.bound = theta_2m_bound(g, static_cast<std::uint64_t>(n / 2));
        r.has_bound = true;
        r.achieves_bound = (r.theta_n == r.bound);
        if (r.theta_n > r.bound) {
            std::ostringstream msg;
            msg << "theta_n_count: count " << r.theta_n << " violates the bound " << r.bound
                << "; this indicates a tolerance fault";
            throw std::runtime_error(msg.str());
        }
    } else {
        r.has_bound = false;
        r.bound = 0;
    }
    return r;
}

}  // namespace theta
