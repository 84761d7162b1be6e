#pragma once

#include <cstdint>
#include <vector>

#include "thetacount/ppav.hpp"
#include "thetacount/riemann_matrix.hpp"

namespace theta {

// The 2^g second-order theta functions w -> theta[sigma/2, 0](2w, 2*tau),
// a basis of the sections of the square of the principal polarization.
// eval() divides out the growth factor common to all 2^g functions at a
// point, which rescales columns of any evaluation matrix and leaves ranks
// unchanged.
class SectionBasis {
public:
    explicit SectionBasis(const RiemannMatrix& tau);

    int g() const { return g_; }
    int size() const { return 1 << g_; }

    CVector eval(const CVector& w, double eps) const;

private:
    int g_;
    RiemannMatrix doubled_;
    std::vector<Characteristic> chars_;
};

struct RankReport {
    int numerical_rank = 0;
    std::vector<double> singular_values;  // descending
    double rel_tol = 0.0;
    double gap_ratio = 0.0;  // sigma_r / sigma_{r+1} at the cut; inf if full rank
    std::uint64_t kempf_count = 0;
    bool agrees = false;
    bool reliable = true;        // gap_ratio >= 1e3 or full rank
    bool lower_bound_ok = true;  // numerical_rank >= 3^g
};

struct RankOptions {
    double eps = 1e-9;
    double vanish_tol = 1e-6;
    double rel_tol = 1e-8;
    int n_samples = 0;  // 0 means 2*4^g + 16
    std::uint64_t seed = 1;
    int threads = 1;
};

inline constexpr double kGapRequirement = 1e3;

std::uint64_t pow3(int g);

// 4^g x n_samples matrix whose row (sigma, sigma') holds
// f_sigma(z_j + x) * f_sigma'(z_j + y) at pseudo-random sample points
// z_j = s + tau t, s,t uniform in [0,1)^g, deterministic in seed.
CMatrix product_evaluation_matrix(const RiemannMatrix& tau, const CVector& x, const CVector& y,
                                  int n_samples, std::uint64_t seed, double eps, int threads = 1);

// Numerical rank from the singular value spectrum: rank = #{i : sigma_i >=
// rel_tol * sigma_1}. Rows are normalized to unit maximum modulus first.
RankReport numerical_rank(const CMatrix& m, double rel_tol);

// Kempf's count: the number of half-periods eta with (y - x) + eta off the
// theta divisor; equals rank M(x,y).
std::uint64_t kempf_predicted_rank(const RiemannMatrix& tau, const CVector& x, const CVector& y,
                                   double eps, double vanish_tol);

// Computes both sides and fills the agreement verdict plus the rank >= 3^g
// lower-bound flag.
RankReport verify_kempf(const RiemannMatrix& tau, const CVector& x, const CVector& y,
                        const RankOptions& opts = {});

// Rank sweep of M(0,x) over random x (almost surely not 2-torsion) on a g=2
// matrix with Theta(2) = 6. Throws std::invalid_argument if the precondition
// fails.
std::vector<RankReport> g2_irreducible_rank_scan(const RiemannMatrix& tau, int trials,
                                                 const RankOptions& opts = {});

// Kernel dimension of Sym^2 H^0(L^2) -> H^0(L^4): the number of independent
// quadrics through the image of the |2 Theta| map.
int sym_kernel_dim(const RiemannMatrix& tau, const RankOptions& opts = {});

}  // namespace theta
