#pragma once

#include <vector>

#include "domainkind/config.hpp"
#include "domainkind/numerics.hpp"
#include "domainkind/series.hpp"

namespace domainkind {

enum class CriticalKind { Maximum, Saddle, Minimum, Degenerate };

struct CriticalPoint {
    Complex location;        // in disk coordinates
    double robin_value = 0.0;
    CriticalKind kind = CriticalKind::Degenerate;
    double hessian_eigs[2] = {0.0, 0.0}; // ascending
    double newton_residual = 0.0;
};

// Robin function of the image domain pulled back to the disk:
// (1/2pi) log((1 - |z|^2) |f'(z)|). Requires |z| < 1; -inf where f' = 0.
double robin_value(const CoefficientMap& map, Complex z);

// The Wirtinger derivative d/dz of the Robin function; the real gradient is
// (2 Re g, -2 Im g). Throws when f'(z) = 0.
Complex robin_gradient(const CoefficientMap& map, Complex z);

// All critical points found from a deterministic seed lattice, Newton-refined,
// deduplicated, classified by the (finite-difference) Hessian, and sorted by
// descending Robin value. Near-degenerate candidates are re-probed on small
// rings before being labeled Degenerate.
std::vector<CriticalPoint> find_critical_points(const CoefficientMap& map,
                                                const RunConfig& cfg = {});

// Number of local maxima among the critical points. Throws Indeterminate if
// a genuinely degenerate point survives the ring probe.
int count_maxima(const std::vector<CriticalPoint>& points);

const char* to_string(CriticalKind k);

} // namespace domainkind
