#pragma once

#include <iosfwd>
#include <string>

#include "thetacount/riemann_matrix.hpp"

namespace theta {

// Period-matrix document: a single JSON object
//   { "g": <int>, "re": [g*g reals, row-major], "im": [g*g reals, row-major] }
// "re"/"im" may also be given as g nested rows of g reals.
RiemannMatrix load_period_matrix(std::istream& in);
RiemannMatrix load_period_matrix_file(const std::string& path);

void save_period_matrix(std::ostream& out, const RiemannMatrix& tau);
void save_period_matrix_file(const std::string& path, const RiemannMatrix& tau);

// The document body as a string (used to embed tau in reports).
std::string period_matrix_json(const RiemannMatrix& tau);

}  // namespace theta
