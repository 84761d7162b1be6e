#pragma once

#include <stdexcept>
#include <string>

namespace theta {

// Requested certified precision could not be reached within the lattice-point
// budget. Carries the best bound that was achievable.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string& what, double best_bound)
        : std::runtime_error(what), best_bound_(best_bound) {}
    double best_bound() const { return best_bound_; }

private:
    double best_bound_;
};

// A vanishing decision fell into the forbidden band between vanish_tol and
// 10*vanish_tol. Counts built on such a verdict would be guesses.
class AmbiguousVerdict : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical rank cut without a sufficient spectral gap.
class UnreliableRank : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace theta
