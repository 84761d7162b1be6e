#include "thetacount/multiplication.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "thetacount/errors.hpp"
#include "thetacount/parallel.hpp"
#include "thetacount/rng.hpp"

namespace theta {

std::uint64_t pow3(int g) {
    std::uint64_t p = 1;
    for (int i = 0; i < g; ++i) p *= 3;
    return p;
}

SectionBasis::SectionBasis(const RiemannMatrix& tau)
    : g_(tau.g()), doubled_(2.0 * tau.tau()) {
    chars_.reserve(std::size_t{1} << g_);
    for (std::uint32_t sigma = 0; sigma < (1u << g_); ++sigma) {
        Characteristic c;
        c.g = g_;
        c.a = sigma;
        c.b = 0;
        chars_.push_back(c);
    }
}

CVector SectionBasis::eval(const CVector& w, double eps) const {
    const CVector arg = 2.0 * w;
    const double damp = std::exp(-doubled_.growth_exponent(arg.imag()));
    CVector out(size());
    for (int i = 0; i < size(); ++i) {
        out[i] = theta(arg, doubled_, chars_[i], eps).value * damp;
    }
    return out;
}

CMatrix product_evaluation_matrix(const RiemannMatrix& tau, const CVector& x, const CVector& y,
                                  int n_samples, std::uint64_t seed, double eps, int threads) {
    const int g = tau.g();
    if (g > 4) throw std::invalid_argument("product_evaluation_matrix: genus capped at 4");
    const int d = 1 << g;
    if (n_samples < 2 * d * d)
        throw std::invalid_argument("product_evaluation_matrix: need n_samples >= 2*4^g");
    if (static_cast<int>(x.size()) != g || static_cast<int>(y.size()) != g)
        throw std::invalid_argument("product_evaluation_matrix: shift dimension mismatch");

    // Sample points in the fundamental parallelotope, deterministic in seed.
    Rng rng(seed);
    std::vector<CVector> zs(n_samples);
    for (int j = 0; j < n_samples; ++j) {
        RVector s(g), t(g);
        for (int i = 0; i < g; ++i) s[i] = rng.next_double();
        for (int i = 0; i < g; ++i) t[i] = rng.next_double();
        zs[j] = s.cast<Complex>() + tau.tau() * t.cast<Complex>();
    }

    const SectionBasis basis(tau);
    CMatrix m(d * d, n_samples);
    parallel_for(n_samples, threads, [&](std::size_t j) {
        const CVector vx = basis.eval(zs[j] + x, eps);
        const CVector vy = basis.eval(zs[j] + y, eps);
        for (int s = 0; s < d; ++s)
            for (int sp = 0; sp < d; ++sp) m(s * d + sp, j) = vx[s] * vy[sp];
    });
    return m;
}

RankReport numerical_rank(const CMatrix& m, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw std::invalid_argument("numerical_rank: rel_tol must lie in (0,1)");
    CMatrix scaled = m;
    for (Eigen::Index i = 0; i < scaled.rows(); ++i) {
        const double mx = scaled.row(i).cwiseAbs().maxCoeff();
        if (mx > 0.0) scaled.row(i) /= mx;
    }
    Eigen::BDCSVD<CMatrix> svd(scaled);
    if (svd.info() != Eigen::Success) throw std::runtime_error("numerical_rank: SVD failed");

    RankReport r;
    r.rel_tol = rel_tol;
    const auto& sv = svd.singularValues();
    r.singular_values.assign(sv.data(), sv.data() + sv.size());
    const double s1 = r.singular_values.empty() ? 0.0 : r.singular_values.front();
    if (s1 == 0.0) {
        r.numerical_rank = 0;
        r.gap_ratio = std::numeric_limits<double>::infinity();
        return r;
    }
    int rank = 0;
    for (double s : r.singular_values)
        if (s >= rel_tol * s1) ++rank;
    r.numerical_rank = rank;
    if (rank == static_cast<int>(r.singular_values.size()) || r.singular_values[rank] == 0.0) {
        r.gap_ratio = std::numeric_limits<double>::infinity();
    } else {
        r.gap_ratio = r.singular_values[rank - 1] / r.singular_values[rank];
    }
    r.reliable = (r.gap_ratio >= kGapRequirement);
    return r;
}

std::uint64_t kempf_predicted_rank(const RiemannMatrix& tau, const CVector& x, const CVector& y,
                                   double eps, double vanish_tol) {
    if (!(eps > 0.0) || eps > vanish_tol / 10.0)
        throw std::invalid_argument("kempf_predicted_rank: require 0 < eps <= vanish_tol/10");
    const int g = tau.g();
    const CVector base = y - x;
    const auto half_periods = torsion_points(g, 2);

    std::vector<double> mags(half_periods.size()), errs(half_periods.size());
    for (std::size_t i = 0; i < half_periods.size(); ++i) {
        const CVector w = base + half_periods[i].embed(tau);
        const ThetaResult r = theta(w, tau, eps);
        mags[i] = normalized_abs(w, tau, r);
        errs[i] = normalized_error(w, tau, r);
    }
    double scale = 0.0;
    for (double v : mags) scale = std::max(scale, v);
    if (scale <= 0.0) throw std::runtime_error("kempf_predicted_rank: theta vanished on all of y-x+A[2]");

    std::uint64_t count = 0;
    for (std::size_t i = 0; i < mags.size(); ++i) {
        const Verdict v = classify(mags[i] / scale, errs[i] / scale, vanish_tol);
        if (v == Verdict::ambiguous) {
            std::ostringstream msg;
            msg << "kempf_predicted_rank: ambiguous verdict at half-period " << i
                << " (|theta| = " << mags[i] / scale << "); refusing to guess";
            throw AmbiguousVerdict(msg.str());
        }
        if (v == Verdict::nonvanishing) ++count;
    }
    return count;
}

RankReport verify_kempf(const RiemannMatrix& tau, const CVector& x, const CVector& y,
                        const RankOptions& opts) {
    const int g = tau.g();
    const int d = 1 << g;
    const int n_samples = opts.n_samples > 0 ? opts.n_samples : 2 * d * d + 16;
    const CMatrix m = product_evaluation_matrix(tau, x, y, n_samples, opts.seed, opts.eps, opts.threads);
    RankReport r = numerical_rank(m, opts.rel_tol);
    r.kempf_count = kempf_predicted_rank(tau, x, y, opts.eps, opts.vanish_tol);
    r.agrees = (static_cast<std::uint64_t>(r.numerical_rank) == r.kempf_count);
    r.lower_bound_ok = (static_cast<std::uint64_t>(r.numerical_rank) >= pow3(g));
    return r;
}

std::vector<RankReport> g2_irreducible_rank_scan(const RiemannMatrix& tau, int trials,
                                                 const RankOptions& opts) {
    if (tau.g() != 2) throw std::invalid_argument("g2_irreducible_rank_scan: genus must be 2");
    CountOptions copts;
    copts.eps = opts.eps;
    copts.vanish_tol = opts.vanish_tol;
    copts.threads = opts.threads;
    if (theta2_count(tau, copts).theta_n != 6)
        throw std::invalid_argument("g2_irreducible_rank_scan: tau is not irreducible (Theta(2) != 6)");

    Rng rng(opts.seed ^ 0xa5a5a5a5ull);
    const CVector origin = CVector::Zero(2);
    std::vector<RankReport> out;
    out.reserve(trials);
    for (int t = 0; t < trials; ++t) {
        RVector s(2), u(2);
        for (int i = 0; i < 2; ++i) s[i] = rng.next_double();
        for (int i = 0; i < 2; ++i) u[i] = rng.next_double();
        const CVector x = s.cast<Complex>() + tau.tau() * u.cast<Complex>();
        RankOptions trial_opts = opts;
        trial_opts.seed = opts.seed + 1000003ull * static_cast<std::uint64_t>(t + 1);
        out.push_back(verify_kempf(tau, origin, x, trial_opts));
    }
    return out;
}

int sym_kernel_dim(const RiemannMatrix& tau, const RankOptions& opts) {
    const int g = tau.g();
    if (g > 4) throw std::invalid_argument("sym_kernel_dim: genus capped at 4");
    const int d = 1 << g;
    const int nrows = d * (d + 1) / 2;
    const int n_samples = opts.n_samples > 0 ? opts.n_samples : 2 * d * d + 16;

    Rng rng(opts.seed);
    std::vector<CVector> zs(n_samples);
    for (int j = 0; j < n_samples; ++j) {
        RVector s(g), t(g);
        for (int i = 0; i < g; ++i) s[i] = rng.next_double();
        for (int i = 0; i < g; ++i) t[i] = rng.next_double();
        zs[j] = s.cast<Complex>() + tau.tau() * t.cast<Complex>();
    }

    const SectionBasis basis(tau);
    CMatrix m(nrows, n_samples);
    parallel_for(n_samples, opts.threads, [&](std::size_t j) {
        const CVector v = basis.eval(zs[j], opts.eps);
        int row = 0;
        for (int s = 0; s < d; ++s)
            for (int sp = s; sp < d; ++sp) m(row++, j) = v[s] * v[sp];
    });

    RankReport r = numerical_rank(m, opts.rel_tol);
    if (!r.reliable)
        throw UnreliableRank("sym_kernel_dim: insufficient spectral gap at the rank cut");
    return nrows - r.numerical_rank;
}

}  // namespace theta
