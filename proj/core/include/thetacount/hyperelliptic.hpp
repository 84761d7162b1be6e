#pragma once

#include <cstdint>
#include <vector>

#include "thetacount/characteristics.hpp"
#include "thetacount/count_report.hpp"

namespace theta {

// A class {T, T^c} of even-cardinality subsets of the 2g+2 branch points of a
// hyperelliptic curve, stored by the lexicographically smaller representative.
// Bit i of `members` (i = 0..2g+1) marks branch point i+1.
struct BranchSubsetClass {
    int g = 1;
    std::uint32_t members = 0;

    int size() const;
    friend bool operator==(const BranchSubsetClass&, const BranchSubsetClass&) = default;
};

// Canonicalizes an even-cardinality subset to its class representative.
BranchSubsetClass make_branch_class(int g, std::uint32_t subset);

// All 4^g classes at genus g (1 <= g <= 10).
std::vector<BranchSubsetClass> branch_subset_classes(int g);

// Vanishing order of the associated thetanull: m with |T delta U| = g+1-2m,
// U the odd-numbered branch points. m = 0 means the thetanull does not vanish.
int vanishing_order(const BranchSubsetClass& cls);

// The classes whose thetanull does not vanish; exactly C(2g+1, g) of them.
std::vector<BranchSubsetClass> hyperelliptic_nonvanishing_classes(int g);

// Pinned half-period assignment eta_i per branch point (i = 1..2g+2) and the
// induced characteristic of a class. The assignment is a convention; it is
// validated through the aggregate-count invariants only.
Characteristic branch_point_eta(int g, int point);
Characteristic class_characteristic(const BranchSubsetClass& cls);

// Theta(2) of a hyperelliptic Jacobian with symmetric theta divisor:
// 4^g - C(2g+1, g). Closed form for 1 <= g <= 20; cross-checked against the
// subset-class enumeration for g <= 10.
CountReport hyperelliptic_theta2_count(int g);

}  // namespace theta
