#pragma once

#include <vector>

#include "domainkind/numerics.hpp"

namespace domainkind {

// All complex roots of c[0] + c[1] z + ... + c[d] z^d (Durand-Kerner with a
// Newton polish). Leading exact zeros are trimmed; the zero polynomial and
// constants are rejected.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

} // namespace domainkind
